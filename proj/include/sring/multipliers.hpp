#pragma once

#include <optional>
#include <vector>

#include "sring/families.hpp"
#include "sring/sections.hpp"
#include "sring/sring.hpp"

namespace sring {

AutStabilizer aut_stabilizer(const SRing& a, const Section& s);
// Stabilizer of the classes of an S-ring over Z_m, as units mod m.
std::vector<int> class_stabilizer(const SRing& ring);

// (SM1) T below S in frs0 => k_S = k_T mod |T|; (SM2) S ~ T => k_S = k_T.
bool is_multiplier(const SRing& a, const Multiplier& mu);
// (M1) T below S => C_S reduces into C_T; (M2) S ~ T => C_S = C_T.
bool is_outer_multiplier(const SRing& a, const OuterMultiplier& fs);

// All multipliers over frs0(A), sorted by unit vector.
std::vector<Multiplier> mult_group(const SRing& a);
// All outer multipliers over frs0(A), sorted by canonical vector.
std::vector<OuterMultiplier> fmult_group(const SRing& a);
OuterMultiplier theta(const SRing& a, const Multiplier& mu);

Multiplier multiply(const Multiplier& a, const Multiplier& b);
OuterMultiplier multiply(const OuterMultiplier& a, const OuterMultiplier& b);

struct SeparabilityReport {
  bool separable = false;
  SRing input;
  Reduction reduction;
  std::size_t mult_order = 0;
  std::size_t fmult_order = 0;
  std::size_t image_order = 0;
  // An outer multiplier of the reduct outside the image of theta.
  std::optional<OuterMultiplier> uncovered;
};

// Reduces to the quasidense case, then compares theta(mult) with fmult.
SeparabilityReport is_separable(const SRing& a);

}  // namespace sring
