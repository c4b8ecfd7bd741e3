#include "sring/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sring/error.hpp"

namespace sring {

CyclicGroup::CyclicGroup(int order) : n(order) {
  if (order < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
}

bool UnitGroup::contains(int k) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), reduce_unit(k, modulus));
}

int mod(long long a, int m) noexcept {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int lcm(int a, int b) noexcept { return a / std::gcd(a, b) * b; }

int element_order(int n, int x) noexcept { return n / std::gcd(n, mod(x, n)); }

int reduce_unit(long long k, int m) noexcept { return m == 1 ? 1 : mod(k, m); }

int inverse_mod(int a, int m) {
  if (m == 1) return 1;
  long long old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::InvalidInput,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

std::vector<int> divisors(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "divisors of a non-positive integer");
  std::vector<int> small, large;
  for (int d = 1; 1LL * d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; 1LL * p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int p = 2; 1LL * p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_prime_power(int n) noexcept { return n > 1 && prime_factors(n).size() == 1; }

bool is_composite(int n) noexcept { return n > 1 && !is_prime(n); }

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

ResidueSet subgroup(int n, int d) {
  if (d < 1 || n % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  ResidueSet h(n);
  const int step = n / d;
  for (int k = 0; k < d; ++k) h.insert(k * step);
  return h;
}

UnitGroup units(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "unit group of a non-positive modulus");
  UnitGroup g;
  g.modulus = m;
  if (m == 1) {
    g.elements = {1};
    return g;
  }
  for (int k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) g.elements.push_back(k);
  }
  return g;
}

namespace {

std::vector<int> generate(int m, const std::vector<int>& gens) {
  std::set<int> seen{reduce_unit(1, m)};
  std::vector<int> frontier{reduce_unit(1, m)};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        int y = reduce_unit(1LL * x * g, m);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::vector<int>> unit_subgroups(int m) {
  const auto u = units(m);
  std::set<std::vector<int>> found;
  for (int k : u.elements) found.insert(generate(m, {k}));
  // Close under joins; every subgroup of a finite abelian group is a join of cyclic ones.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generate(m, gens)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

using Poly = std::vector<long long>;

// Exact quotient of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_poly(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclotomic polynomial of a non-positive index");
  std::vector<std::pair<int, Poly>> known;
  for (int d : divisors(n)) {
    Poly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (const auto& [e, phi_e] : known) {
      if (d % e == 0) p = divide_exact(std::move(p), phi_e);
    }
    known.emplace_back(d, std::move(p));
  }
  return known.back().second;
}

}  // namespace sring
