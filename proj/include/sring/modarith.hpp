#pragma once

#include <vector>

#include "sring/residue_set.hpp"

namespace sring {

/// The additive group Z_n, elements 0..n-1.
struct CyclicGroup {
  explicit CyclicGroup(int order);

  int order() const noexcept { return n; }
  int add(int a, int b) const noexcept { return (a + b) % n; }
  int neg(int a) const noexcept { return a == 0 ? 0 : n - a; }
  int scale(int k, int a) const noexcept { return static_cast<int>((1LL * k * a) % n); }

  int n;
};

/// The multiplicative group of units modulo m. For m = 1 the single unit is
/// recorded as 1.
struct UnitGroup {
  int modulus = 1;
  std::vector<int> elements;

  int order() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(int k) const noexcept;
};

int mod(long long a, int m) noexcept;
int lcm(int a, int b) noexcept;
// The order of x as an element of Z_n.
int element_order(int n, int x) noexcept;
// Reduces a unit modulo m, keeping 1 as the representative of the unit of Z_1.
int reduce_unit(long long k, int m) noexcept;
int inverse_mod(int a, int m);

std::vector<int> divisors(int n);
std::vector<int> prime_factors(int n);
bool is_prime(int n) noexcept;
bool is_prime_power(int n) noexcept;
bool is_composite(int n) noexcept;
int euler_phi(int n);

// The unique subgroup of order d in Z_n.
ResidueSet subgroup(int n, int d);
UnitGroup units(int m);
// Every subgroup of units(m), each as a sorted element list; sorted by (order, elements).
std::vector<std::vector<int>> unit_subgroups(int m);
// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_poly(int n);

}  // namespace sring
