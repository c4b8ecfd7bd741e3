#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "sring/families.hpp"
#include "sring/section.hpp"
#include "sring/sring.hpp"

namespace sring {

/// A structure-constant-preserving bijection between the class lists of two
/// S-rings; map[i] is the target index of source class i.
struct Similarity {
  std::vector<int> map;

  static Similarity identity(int rank);
  int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
  // Applies this first, then next.
  Similarity then(const Similarity& next) const;
  Similarity inverse() const;
  bool is_identity() const;

  friend bool operator==(const Similarity&, const Similarity&) = default;
  friend auto operator<=>(const Similarity&, const Similarity&) = default;
};

bool is_similarity(const SRing& a, const SRing& b, const Similarity& phi);

// All similarities A -> B, sorted by map.
std::vector<Similarity> similarities(const SRing& a, const SRing& b);

// The similarity induced by phi on A_S.
Similarity restrict_similarity(const SRing& a, const Similarity& phi, const Section& s);

// X -> k*X when multiplication by k permutes the classes.
std::optional<Similarity> from_unit(const SRing& a, int k);
// Smallest unit k with from_unit(a, k) == psi.
std::optional<int> inducing_unit(const SRing& a, const Similarity& psi);

// The outer multiplier of phi: for each S in frs0(A) the coset aut_A(S)*k of a unit
// inducing phi_S. Requires quasidense A; throws NoInducingUnit if some phi_S is not
// unit-induced.
OuterMultiplier fS_of(const SRing& a, const Similarity& phi);
// Inverse of fS_of: X -> lift(k_P * pi(X)) with P the principal section of X.
// Throws ReconstructionFailed when the result is not a similarity.
Similarity similarity_from_outer(const SRing& a, const OuterMultiplier& fs);

}  // namespace sring
