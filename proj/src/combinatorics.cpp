#include "allpairs/combinatorics.hpp"

#include <array>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace allpairs {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

double binomial_d(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial_d: n must be nonnegative");
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (long i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

BigInt pairing_count(long v) {
  if (v < 0 || v % 2 != 0) throw std::invalid_argument("pairing_count: V must be even and nonnegative");
  if (v == 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v - 1));
  return r;
}

double pairing_count_ratio(long v, long drop) {
  if (drop < 0 || drop > v || v % 2 != 0 || drop % 2 != 0)
    throw std::invalid_argument("pairing_count_ratio: need even 0 <= drop <= V");
  double r = 1.0;
  for (long i = 0; i < drop / 2; ++i) r /= static_cast<double>(v - 1 - 2 * i);
  return r;
}

BigInt operator_basis_count(int v) {
  if (v < 1) throw std::invalid_argument("operator_basis_count: V >= 1 required");
  BigInt by_strings = 0;
  for (int np = 0; 2 * np <= v; ++np) {
    by_strings += binomial(v, 2 * np) * binomial(2 * np, np) * (BigInt(1) << (v - 2 * np));
  }
  const BigInt by_dimension = binomial(2L * v, v);
  if (by_strings != by_dimension)
    throw std::logic_error("operator_basis_count: generating-function identity violated");
  return by_strings;
}

double interleaved_ratio(const std::vector<double>& num, const std::vector<double>& den) {
  double acc = 1.0;
  std::size_t i = 0, j = 0;
  while (i < num.size() || j < den.size()) {
    if (j == den.size() || (i < num.size() && acc <= 1.0)) {
      acc *= num[i++];
    } else {
      acc /= den[j++];
    }
  }
  return acc;
}

void RatioProduct::mul_binomial(long n, long k) {
  if (k < 0 || k > n) {
    num_.push_back(0.0);
    return;
  }
  if (k > n - k) k = n - k;
  for (long i = 0; i < k; ++i) {
    num_.push_back(static_cast<double>(n - i));
    den_.push_back(static_cast<double>(i + 1));
  }
}

void RatioProduct::div_binomial(long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("RatioProduct: division by zero binomial");
  if (k > n - k) k = n - k;
  for (long i = 0; i < k; ++i) {
    den_.push_back(static_cast<double>(n - i));
    num_.push_back(static_cast<double>(i + 1));
  }
}

void RatioProduct::mul_factorial(long m) {
  for (long i = 2; i <= m; ++i) num_.push_back(static_cast<double>(i));
}

void RatioProduct::mul_double_factorial(long v) {
  assert(v >= 0 && v % 2 == 0);
  for (long f = 3; f <= v - 1; f += 2) num_.push_back(static_cast<double>(f));
}

void RatioProduct::div_double_factorial(long v) {
  assert(v >= 0 && v % 2 == 0);
  for (long f = 3; f <= v - 1; f += 2) den_.push_back(static_cast<double>(f));
}

namespace {

constexpr int kChooseMax = 64;

constexpr auto make_choose_table() {
  std::array<std::array<std::uint64_t, kChooseMax + 1>, kChooseMax + 1> t{};
  for (int n = 0; n <= kChooseMax; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr auto kChoose = make_choose_table();

}  // namespace

std::uint64_t choose64(int n, int k) {
  if (k < 0 || k > n) return 0;
  assert(n <= kChooseMax);
  return kChoose[n][k];
}

std::uint64_t rank_combination(std::uint64_t bits) {
  std::uint64_t r = 0;
  int k = 0;
  while (bits) {
    const int p = __builtin_ctzll(bits);
    bits &= bits - 1;
    r += choose64(p, ++k);
  }
  return r;
}

std::uint64_t unrank_combination(int v, int n, std::uint64_t rank) {
  std::uint64_t bits = 0;
  int p = v - 1;
  for (int k = n; k >= 1; --k) {
    while (choose64(p, k) > rank) --p;
    bits |= 1ULL << p;
    rank -= choose64(p, k);
    --p;
  }
  return bits;
}

FockBasis::FockBasis(int v, int n) : v_(v), n_(n) {
  if (v < 0 || v > kChooseMax || n < 0 || n > v) throw std::invalid_argument("FockBasis: bad (V, N)");
  const std::uint64_t d = choose64(v, n);
  patterns_.reserve(d);
  if (n == 0) {
    patterns_.push_back(0);
  } else {
    // Gosper's hack walks N-subsets in increasing mask order == colex order.
    std::uint64_t x = (1ULL << n) - 1;
    const std::uint64_t top = (v >= 64) ? ~0ULL : (1ULL << v);
    while (x < top || (v >= 64 && patterns_.size() < d)) {
      patterns_.push_back(x);
      if (patterns_.size() == d) break;
      const std::uint64_t c = x & -x;
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }

  // Split-table rank: rank(bits) = sum_k C(p_k, k) splits into a low-word
  // part and a high-word part whose bit ordinals are offset by the low
  // popcount.
  split_ = v / 2;
  low_mask_ = (split_ >= 64) ? ~0ULL : ((1ULL << split_) - 1);
  const std::uint64_t low_size = 1ULL << split_;
  low_rank_.assign(low_size, 0);
  for (std::uint64_t m = 0; m < low_size; ++m) low_rank_[m] = rank_combination(m);
  const int high_bits = v - split_;
  const std::uint64_t high_size = 1ULL << high_bits;
  high_rank_.assign(high_size, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (std::uint64_t h = 0; h < high_size; ++h) {
    for (int c = 0; c <= n; ++c) {
      std::uint64_t r = 0;
      int k = c;
      std::uint64_t bits = h;
      while (bits) {
        const int p = __builtin_ctzll(bits);
        bits &= bits - 1;
        r += choose64(p + split_, ++k);
      }
      high_rank_[h][c] = r;
    }
  }
}

SubsetRange::iterator::iterator(int n, int k) : n_(n), k_(k) {
  if (k < 0 || k > n) return;
  done_ = false;
  idx_.resize(k);
  mask_ = 0;
  for (int i = 0; i < k; ++i) {
    idx_[i] = i;
    mask_ |= 1ULL << i;
  }
}

SubsetRange::iterator& SubsetRange::iterator::operator++() {
  // Advance the rightmost index that can move; reset the tail after it.
  int i = k_ - 1;
  while (i >= 0 && idx_[i] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++idx_[i];
  for (int j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
  mask_ = 0;
  for (int j = 0; j < k_; ++j) mask_ |= 1ULL << idx_[j];
  return *this;
}

}  // namespace allpairs
