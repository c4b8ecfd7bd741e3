#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sring/section.hpp"
#include "sring/sring.hpp"

namespace sring {

// S' = U'/L' is a multiple of S = U/L: UL' = U' and U meet L' = L.
bool is_multiple(const Section& sp, const Section& s) noexcept;

/// A class of projectively equivalent sections. smallest / largest are the
/// members of which every member is a multiple / which is a multiple of every
/// member; empty when the members present have no such element.
struct ProjClass {
  std::vector<Section> members;
  std::optional<Section> smallest;
  std::optional<Section> largest;

  int order() const noexcept { return members.front().order(); }
};

// Partitions the input by projective equivalence computed over all sections of Z_n.
std::vector<ProjClass> proj_classes(int n, std::span<const Section> input);
// Component id of every section of Z_n (in all_sections order) under projective equivalence.
std::vector<int> projective_components(int n);
bool projectively_equivalent(const Section& s, const Section& t);

// Unit c mod m such that the canonical projective isomorphism S -> T is
// multiplication by c in canonical coordinates. Throws NotEquivalent.
int f_unit(const Section& s, const Section& t);
// Composes the multiple-steps along an explicit path of sections.
int compose_path_unit(std::span<const Section> path);

std::vector<Section> principal_sections(const SRing& a);
std::vector<Section> frs0(const SRing& a);
bool is_quasidense(const SRing& a);

struct SingularWitness {
  ProjClass cls;
  Section found;     // the rank-2 composite-order section that triggered the search
  Section smallest;  // L1/L0
  Section largest;   // U1/U0
};

// Empty for quasidense A. Throws SingularConditionViolated when the class of a
// rank-2 composite-order section fails the wreath/tensor conditions.
std::optional<SingularWitness> singular_witness(const SRing& a);

// closure(A together with the L-cosets inside U).
SRing s_extension(const SRing& a, const Section& s);

struct Reduction {
  SRing result;
  std::vector<Section> trace;
  std::vector<int> ranks;  // rank before each step, then the final rank
};

Reduction reduce_to_quasidense(const SRing& a);

}  // namespace sring
