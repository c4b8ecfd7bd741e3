#pragma once

#include <optional>
#include <vector>

#include "sring/similarity.hpp"
#include "sring/sring.hpp"

namespace sring {

/// Instance-size bounds for the exhaustive searches.
struct OracleLimits {
  int enumerate_max = 36;
  int isomorphism_max = 20;
  int coset_closure_max = 16;
};

// Every S-ring over Z_n in canonical form, sorted. Throws LimitExceeded.
std::vector<SRing> enumerate_srings(int n, const OracleLimits& limits = {});

/// A normalized bijection f of Z_n (f(0) = 0) with f(X + y) = X^phi + f(y).
struct Isomorphism {
  int n = 1;
  std::vector<int> table;

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

// Backtracking over f(1), f(2), ... with candidate filtering. Throws LimitExceeded.
std::optional<Isomorphism> find_isomorphism(const SRing& a, const SRing& b, const Similarity& phi,
                                            const OracleLimits& limits = {});
// Checks f(X + y) = X^phi + f(y) for every class X and every y.
bool is_isomorphism(const SRing& a, const SRing& b, const Similarity& phi, const Isomorphism& f);

// Similarities of A realized by an isomorphism, sorted. Throws TheoryViolation if
// they do not form a group.
std::vector<Similarity> phi_infty(const SRing& a, const OracleLimits& limits = {});
bool is_separable_bruteforce(const SRing& a, const OracleLimits& limits = {});

// Finest common coarsening of two partitions. Throws IntersectionNotAnSRing.
SRing intersect(const SRing& a, const SRing& b);

// Every class is a coset of a subgroup.
bool is_coset_sring(const SRing& a);
// Every class of coarse is a union of classes of fine.
bool refines(const SRing& fine, const SRing& coarse);

struct CosetClosure {
  SRing ring;
  bool is_coset = true;
};

// Intersection of all coset S-rings containing A. Throws LimitExceeded, and
// TheoryViolation when A is quasidense but the intersection is not a coset S-ring.
CosetClosure coset_closure(const SRing& a, const OracleLimits& limits = {});

// Restrictions to A of the similarities of the finer S-ring a0 that map A to itself, sorted.
std::vector<Similarity> induced_similarities(const SRing& a0, const SRing& a);

}  // namespace sring
