#pragma once

#include <vector>

#include "sring/residue_set.hpp"
#include "sring/section.hpp"
#include "sring/sring.hpp"

namespace sring {

/// An element of Z[x]/(Phi_n), i.e. of Z[zeta_n]; coeffs has length deg Phi_n,
/// lowest degree first. The representation is canonical.
struct CyclotomicInt {
  int n = 1;
  std::vector<long long> coeffs;

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;
};

// sum over x in X of zeta_n^(a*x), computed exactly.
CyclotomicInt character_sum(int n, const ResidueSet& x, int a);

// Partition of the characters a -> chi_a by their values on the classes of A.
// Throws DualNotAnSRing if the partition fails the axioms.
SRing dual_sring(const SRing& a);

// (n/u, n/l): the section of the character group annihilating L modulo U.
Section dual_section(int n, const Section& s);

}  // namespace sring
