#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "allpairs/combinatorics.hpp"

namespace allpairs {

/// Single-site operator alphabet adapted to number conservation.
enum class Letter : std::uint8_t { Identity = 0, Z = 1, Raise = 2, Lower = 3 };

std::string letter_name(Letter l);
Letter letter_from_name(const std::string& name);
inline Letter adjoint(Letter l) {
  if (l == Letter::Raise) return Letter::Lower;
  if (l == Letter::Lower) return Letter::Raise;
  return l;
}

/// Tensor product of letters over V sites; identity everywhere except the
/// listed sites. Number-conserving iff Raise and Lower counts match.
struct OperatorString {
  int volume = 0;
  std::vector<std::pair<int, Letter>> letters;  // sorted by site, non-identity only

  OperatorString() = default;
  OperatorString(int v, std::vector<std::pair<int, Letter>> ls);

  Letter at(int site) const;
  int n_plus() const;
  int n_minus() const;
  int n_z() const;
  int weight() const { return 2 * n_plus() + n_z(); }
  bool number_conserving() const { return n_plus() == n_minus(); }
  OperatorString dagger() const;
};

/// Canonical decomposition of a number-conserving string: Raise letters at
/// slots 0,2,4,..., their partner Lowers at 1,3,5,... (k-th smallest Raise
/// site matched with k-th smallest Lower site), Z letters next, Identity
/// last. site_map sends original sites to canonical slots.
struct CanonicalForm {
  int volume = 0;
  int n_plus = 0;
  int n_z = 0;
  std::vector<int> site_map;     // size V, a permutation
  std::vector<int> raise_sites;  // ascending original sites
  std::vector<int> lower_sites;  // ascending; lower_sites[k] partners raise_sites[k]
  std::vector<int> z_sites;      // ascending

  int weight() const { return 2 * n_plus + n_z; }
};

/// Throws NonConservingError when Raise and Lower counts differ.
CanonicalForm canonicalize(const OperatorString& s);

/// Swap distance between two {I,Z}-strings given as Z-position bitmasks with
/// equal Z counts: the number of Z positions of a absent from b.
int swap_distance(std::uint64_t z_bits_a, std::uint64_t z_bits_b);

/// One region-A string of S_{d,ka}: which of the n_z canonical Z slots were
/// turned to Identity (all d removals land in region A) and which region-A
/// Identity slots were turned to Z.
struct RegionAString {
  std::uint32_t z_removed = 0;  // bitmask over the n_z Z slots, popcount d
  std::uint32_t z_added = 0;    // bitmask over the region-A Identity slots, popcount ka
};

/// Enumerates S_{d,ka}: C(n_z_in_a, d) removal choices times
/// C(identity_slots_in_a, ka) addition choices, lexicographic by subset with
/// removals outermost. Empty when the counts are infeasible.
class RegionAStringRange {
 public:
  RegionAStringRange(int n_z_in_a, int identity_slots_in_a, int d, int k_a)
      : removals_(n_z_in_a, d), additions_(identity_slots_in_a, k_a) {}

  class iterator {
   public:
    iterator() = default;
    iterator(const SubsetRange& rem, const SubsetRange& add);
    RegionAString operator*() const;
    iterator& operator++();
    bool operator!=(const iterator& o) const { return done_ != o.done_; }

   private:
    const SubsetRange* add_range_ = nullptr;
    SubsetRange::iterator rem_, rem_end_, add_, add_end_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(removals_, additions_); }
  iterator end() const { return iterator(); }

 private:
  SubsetRange removals_, additions_;
};

RegionAStringRange region_a_strings(int n_z_in_a, int identity_slots_in_a, int d, int k_a);

}  // namespace allpairs
