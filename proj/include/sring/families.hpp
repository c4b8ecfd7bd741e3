#pragma once

#include <vector>

#include "sring/section.hpp"

namespace sring {

/// Units k mod |S| with k*X = X for every class X of A_S.
struct AutStabilizer {
  Section section;
  std::vector<int> elements;

  bool contains(int k) const;
};

struct MultiplierEntry {
  Section section;
  int k = 1;

  friend bool operator==(const MultiplierEntry&, const MultiplierEntry&) = default;
};

/// One unit per section of frs0(A), in sorted section order.
struct Multiplier {
  std::vector<MultiplierEntry> entries;

  const MultiplierEntry* find(const Section& s) const;
  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

/// A coset stabilizer * rep of units mod |section|; rep is the smallest element.
struct CosetEntry {
  Section section;
  std::vector<int> stabilizer;
  int rep = 1;

  std::vector<int> elements() const;
  friend bool operator==(const CosetEntry&, const CosetEntry&) = default;
};

/// One stabilizer coset per section of frs0(A), in sorted section order.
struct OuterMultiplier {
  std::vector<CosetEntry> entries;

  const CosetEntry* find(const Section& s) const;
  // Vector of minimal representatives; identifies the family for a fixed A.
  std::vector<int> canonical() const;
  friend bool operator==(const OuterMultiplier&, const OuterMultiplier&) = default;
};

// The coset stab * k with its minimal representative.
CosetEntry make_coset(const AutStabilizer& stab, int k);

}  // namespace sring
