#include "sring/families.hpp"

#include <algorithm>

#include "sring/modarith.hpp"

namespace sring {

bool AutStabilizer::contains(int k) const {
  return std::binary_search(elements.begin(), elements.end(), reduce_unit(k, section.order()));
}

const MultiplierEntry* Multiplier::find(const Section& s) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const MultiplierEntry& e) { return e.section == s; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<int> CosetEntry::elements() const {
  const int m = section.order();
  std::vector<int> out;
  out.reserve(stabilizer.size());
  for (int h : stabilizer) out.push_back(reduce_unit(1LL * h * rep, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const CosetEntry* OuterMultiplier::find(const Section& s) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CosetEntry& e) { return e.section == s; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<int> OuterMultiplier::canonical() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.rep);
  return out;
}

CosetEntry make_coset(const AutStabilizer& stab, int k) {
  const int m = stab.section.order();
  int rep = -1;
  for (int h : stab.elements) {
    int x = reduce_unit(1LL * h * k, m);
    if (rep < 0 || x < rep) rep = x;
  }
  return CosetEntry{stab.section, stab.elements, rep};
}

}  // namespace sring
