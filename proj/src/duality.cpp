#include "sring/duality.hpp"

#include <map>

#include "sring/error.hpp"
#include "sring/modarith.hpp"

namespace sring {

namespace {

// powers[e] = x^e mod Phi_n for 0 <= e < n.
std::vector<std::vector<long long>> reduced_powers(int n) {
  const auto phi = cyclotomic_poly(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::vector<long long>> powers;
  powers.reserve(static_cast<std::size_t>(n));
  std::vector<long long> cur(deg, 0);
  if (deg == 0) {
    powers.assign(static_cast<std::size_t>(n), cur);
    return powers;
  }
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    powers.push_back(cur);
    // multiply by x, then replace x^deg by -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    long long top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi[i];
  }
  return powers;
}

CyclotomicInt sum_with(int n, const std::vector<std::vector<long long>>& powers, const ResidueSet& x, int a) {
  CyclotomicInt out{n, std::vector<long long>(powers.front().size(), 0)};
  x.for_each([&](int e) {
    const auto& p = powers[static_cast<std::size_t>(mod(1LL * a * e, n))];
    for (std::size_t i = 0; i < p.size(); ++i) out.coeffs[i] += p[i];
  });
  return out;
}

}  // namespace

CyclotomicInt character_sum(int n, const ResidueSet& x, int a) {
  return sum_with(n, reduced_powers(n), x, a);
}

SRing dual_sring(const SRing& a) {
  const int n = a.order();
  const auto powers = reduced_powers(n);
  std::map<std::vector<long long>, ResidueSet> blocks;
  for (int c = 0; c < n; ++c) {
    std::vector<long long> key;
    for (const auto& x : a.classes()) {
      auto s = sum_with(n, powers, x, c);
      key.insert(key.end(), s.coeffs.begin(), s.coeffs.end());
    }
    auto it = blocks.try_emplace(std::move(key), n).first;
    it->second.insert(c);
  }
  std::vector<ResidueSet> classes;
  for (auto& [key, block] : blocks) classes.push_back(std::move(block));
  try {
    return SRing::validate(n, std::move(classes));
  } catch (const Error& e) {
    throw Error(ErrorCode::DualNotAnSRing, "dual of " + a.to_string() + " fails: " + e.what());
  }
}

Section dual_section(int n, const Section& s) { return Section{n, n / s.u, n / s.l}; }

}  // namespace sring
