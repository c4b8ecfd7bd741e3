#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sring/residue_set.hpp"

namespace sring {

/// A section U/L of Z_n, recorded by the orders l = |L| and u = |U| (l | u | n).
/// Canonical coordinates identify it with Z_m, m = u/l, via j*(n/u) + L -> j mod m.
struct Section {
  int n = 1;
  int l = 1;
  int u = 1;

  int order() const noexcept { return u / l; }
  bool is_trivial() const noexcept { return l == u; }
  std::string to_string() const;

  friend bool operator==(const Section&, const Section&) = default;
  friend auto operator<=>(const Section& a, const Section& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.l <=> b.l; c != 0) return c;
    return a.u <=> b.u;
  }
};

// Throws NotADivisor unless l | u | n.
Section make_section(int n, int l, int u);
// Every section of Z_n, sorted by (l, u).
std::vector<Section> all_sections(int n);
// T is a subsection of S: L_S <= L_T <= U_T <= U_S.
bool is_subsection(const Section& t, const Section& s) noexcept;

// Canonical coordinate of an element of U.
int to_coord(const Section& s, int element) noexcept;
// Image of X (a subset of U) in canonical coordinates.
ResidueSet project(const Section& s, const ResidueSet& x);
// Full preimage in Z_n of a set of canonical coordinates.
ResidueSet lift(const Section& s, const ResidueSet& coords);

}  // namespace sring
