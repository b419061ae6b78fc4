#include "allpairs/opstrings.hpp"

#include <algorithm>
#include <bit>

#include "allpairs/errors.hpp"

namespace allpairs {

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::Identity: return "I";
    case Letter::Z: return "Z";
    case Letter::Raise: return "a+";
    case Letter::Lower: return "a-";
  }
  return "?";
}

Letter letter_from_name(const std::string& name) {
  if (name == "I") return Letter::Identity;
  if (name == "Z") return Letter::Z;
  if (name == "a+") return Letter::Raise;
  if (name == "a-") return Letter::Lower;
  throw ParseError("unknown operator letter '" + name + "'");
}

OperatorString::OperatorString(int v, std::vector<std::pair<int, Letter>> ls)
    : volume(v), letters(std::move(ls)) {
  std::erase_if(letters, [](const auto& p) { return p.second == Letter::Identity; });
  std::sort(letters.begin(), letters.end());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int site = letters[i].first;
    if (site < 0 || site >= volume) throw std::invalid_argument("OperatorString: site out of range");
    if (i > 0 && letters[i - 1].first == site)
      throw std::invalid_argument("OperatorString: duplicate site");
  }
}

Letter OperatorString::at(int site) const {
  for (const auto& [s, l] : letters)
    if (s == site) return l;
  return Letter::Identity;
}

int OperatorString::n_plus() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const auto& p) { return p.second == Letter::Raise; }));
}

int OperatorString::n_minus() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const auto& p) { return p.second == Letter::Lower; }));
}

int OperatorString::n_z() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const auto& p) { return p.second == Letter::Z; }));
}

OperatorString OperatorString::dagger() const {
  OperatorString r = *this;
  for (auto& [s, l] : r.letters) l = adjoint(l);
  return r;
}

CanonicalForm canonicalize(const OperatorString& s) {
  CanonicalForm c;
  c.volume = s.volume;
  for (const auto& [site, l] : s.letters) {
    switch (l) {
      case Letter::Raise: c.raise_sites.push_back(site); break;
      case Letter::Lower: c.lower_sites.push_back(site); break;
      case Letter::Z: c.z_sites.push_back(site); break;
      case Letter::Identity: break;
    }
  }
  if (c.raise_sites.size() != c.lower_sites.size())
    throw NonConservingError("canonicalize: Raise and Lower counts differ");
  c.n_plus = static_cast<int>(c.raise_sites.size());
  c.n_z = static_cast<int>(c.z_sites.size());

  c.site_map.assign(s.volume, -1);
  for (int k = 0; k < c.n_plus; ++k) {
    c.site_map[c.raise_sites[k]] = 2 * k;
    c.site_map[c.lower_sites[k]] = 2 * k + 1;
  }
  int slot = 2 * c.n_plus;
  for (int site : c.z_sites) c.site_map[site] = slot++;
  for (int site = 0; site < s.volume; ++site)
    if (c.site_map[site] < 0) c.site_map[site] = slot++;
  return c;
}

int swap_distance(std::uint64_t z_bits_a, std::uint64_t z_bits_b) {
  if (std::popcount(z_bits_a) != std::popcount(z_bits_b))
    throw std::invalid_argument("swap_distance: Z counts differ");
  return std::popcount(z_bits_a & ~z_bits_b);
}

RegionAStringRange::iterator::iterator(const SubsetRange& rem, const SubsetRange& add)
    : add_range_(&add),
      rem_(rem.begin()),
      rem_end_(rem.end()),
      add_(add.begin()),
      add_end_(add.end()) {
  done_ = !(rem_ != rem_end_) || !(add_ != add_end_);
}

RegionAString RegionAStringRange::iterator::operator*() const {
  return {static_cast<std::uint32_t>(*rem_), static_cast<std::uint32_t>(*add_)};
}

RegionAStringRange::iterator& RegionAStringRange::iterator::operator++() {
  ++add_;
  if (!(add_ != add_end_)) {
    add_ = add_range_->begin();
    ++rem_;
    if (!(rem_ != rem_end_)) done_ = true;
  }
  return *this;
}

RegionAStringRange region_a_strings(int n_z_in_a, int identity_slots_in_a, int d, int k_a) {
  return RegionAStringRange(n_z_in_a, identity_slots_in_a, d, k_a);
}

}  // namespace allpairs
