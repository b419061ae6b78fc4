#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace allpairs {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator (mpq_class
/// canonicalizes on construction and after arithmetic). Used only on the
/// small-V oracle paths; production quantities are evaluated in floating
/// point via interleaved ratio products.
using BigRatio = mpq_class;

/// C(n, k), exact. Zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

/// C(n, k) as double, evaluated multiplicatively (no factorials).
double binomial_d(long n, long k);

/// Number of perfect pairings of V sites: (V-1)!! with (-1)!! = 1.
/// V must be even and nonnegative.
BigInt pairing_count(long v);

/// |P_{V-drop}| / |P_V| = 1 / ((V-1)(V-3)...(V-drop+1)), evaluated
/// multiplicatively. Requires 0 <= drop <= V, both even.
double pairing_count_ratio(long v, long drop);

/// Counts number-conserving operator strings on V sites two ways --
/// sum_{n+} C(V,2n+) C(2n+,n+) 2^(V-2n+) and C(2V,V) -- asserts the
/// generating-function identity, and returns the common value.
BigInt operator_basis_count(int v);

/// prod(num) / prod(den) with numerator and denominator factors interleaved
/// so the running value stays near 1 (no overflow for huge factor lists).
double interleaved_ratio(const std::vector<double>& num, const std::vector<double>& den);

/// Builder for interleaved ratio products; factors may be appended in any
/// order, magnitude balancing happens at evaluation.
class RatioProduct {
 public:
  void mul(double f) { num_.push_back(f); }
  void div(double f) { den_.push_back(f); }
  /// C(n, k) contributes (n-i)/(i+1) for i in [0, k).
  void mul_binomial(long n, long k);
  void div_binomial(long n, long k);
  /// m! contributes factors 1..m.
  void mul_factorial(long m);
  /// (v-1)!! contributes odd factors 1, 3, ..., v-1.
  void mul_double_factorial(long v);
  void div_double_factorial(long v);
  double value() const { return interleaved_ratio(num_, den_); }

 private:
  std::vector<double> num_, den_;
};

/// C(n, k) in uint64 for n <= 64 (fits; C(64,32) < 2^63). Constant lookup.
std::uint64_t choose64(int n, int k);

/// Colexicographic rank of an N-subset given as a bitmask: rank = sum over
/// set bits p_1 < ... < p_N of C(p_k, k). Appending empty sites above the
/// top set bit leaves ranks unchanged.
std::uint64_t rank_combination(std::uint64_t bits);

/// Inverse of rank_combination for the (V, N) sector.
std::uint64_t unrank_combination(int v, int n, std::uint64_t rank);

/// One occupation pattern of the fixed-N sector together with its rank.
struct RankedCombination {
  int population = 0;  // V, site count
  int occupancy = 0;   // N, particle count
  std::uint64_t rank = 0;
  std::uint64_t bits = 0;
};

/// Ranked fixed-N occupation basis with O(1) rank lookup (split-table) and
/// the full pattern list in colexicographic order. Immutable after
/// construction; safe to share across threads.
class FockBasis {
 public:
  FockBasis(int v, int n);

  int volume() const { return v_; }
  int particles() const { return n_; }
  std::uint64_t dim() const { return patterns_.size(); }
  const std::vector<std::uint64_t>& patterns() const { return patterns_; }
  std::uint64_t pattern(std::uint64_t index) const { return patterns_[index]; }

  std::uint64_t rank(std::uint64_t bits) const {
    return low_rank_[bits & low_mask_] + high_rank_[bits >> split_][popcount_low(bits)];
  }

 private:
  int popcount_low(std::uint64_t bits) const {
    return __builtin_popcountll(bits & low_mask_);
  }

  int v_, n_;
  int split_;
  std::uint64_t low_mask_;
  std::vector<std::uint64_t> patterns_;
  std::vector<std::uint64_t> low_rank_;                // [low pattern] -> partial rank
  std::vector<std::vector<std::uint64_t>> high_rank_;  // [high pattern][low popcount]
};

/// Enumerates k-subsets of {0..n-1} as bitmasks in lexicographic order of
/// the sorted index tuples. Yields no subsets when k > n or k < 0.
class SubsetRange {
 public:
  SubsetRange(int n, int k) : n_(n), k_(k) {}

  class iterator {
   public:
    iterator() = default;
    iterator(int n, int k);
    std::uint64_t operator*() const { return mask_; }
    iterator& operator++();
    bool operator!=(const iterator& o) const { return done_ != o.done_; }

   private:
    int n_ = 0, k_ = 0;
    bool done_ = true;
    std::vector<int> idx_;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(n_, k_); }
  iterator end() const { return iterator(); }

 private:
  int n_, k_;
};

}  // namespace allpairs
