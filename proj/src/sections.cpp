#include "sring/sections.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sring/error.hpp"
#include "sring/modarith.hpp"

namespace sring {

bool is_multiple(const Section& sp, const Section& s) noexcept {
  return sp.n == s.n && lcm(s.u, sp.l) == sp.u && std::gcd(s.u, sp.l) == s.l;
}

namespace {

std::size_t index_in(const std::vector<Section>& all, const Section& s) {
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s) {
    throw Error(ErrorCode::NotADivisor, s.to_string() + " is not a section of Z_" + std::to_string(s.n));
  }
  return static_cast<std::size_t>(it - all.begin());
}

// Unit of the single step from s to an adjacent section t.
int step_unit(const Section& s, const Section& t) {
  const int m = s.order();
  if (is_multiple(t, s)) return reduce_unit(t.u / s.u, m);
  if (is_multiple(s, t)) return inverse_mod(reduce_unit(s.u / t.u, m), m);
  throw Error(ErrorCode::NotEquivalent, s.to_string() + " and " + t.to_string() + " are not adjacent");
}

}  // namespace

std::vector<int> projective_components(int n) {
  const auto all = all_sections(n);
  std::vector<int> comp(all.size(), -1);
  int next = 0;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (comp[j] < 0 && (is_multiple(all[i], all[j]) || is_multiple(all[j], all[i]))) {
          comp[j] = next;
          queue.push_back(j);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool projectively_equivalent(const Section& s, const Section& t) {
  if (s.n != t.n) return false;
  const auto all = all_sections(s.n);
  const auto comp = projective_components(s.n);
  return comp[index_in(all, s)] == comp[index_in(all, t)];
}

std::vector<ProjClass> proj_classes(int n, std::span<const Section> input) {
  const auto all = all_sections(n);
  const auto comp = projective_components(n);
  std::vector<Section> sorted(input.begin(), input.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<ProjClass> out;
  std::vector<int> class_comp;
  for (const auto& s : sorted) {
    int c = comp[index_in(all, s)];
    auto it = std::find(class_comp.begin(), class_comp.end(), c);
    if (it == class_comp.end()) {
      class_comp.push_back(c);
      out.push_back(ProjClass{{s}, {}, {}});
    } else {
      out[static_cast<std::size_t>(it - class_comp.begin())].members.push_back(s);
    }
  }
  for (auto& pc : out) {
    for (const auto& cand : pc.members) {
      if (std::all_of(pc.members.begin(), pc.members.end(), [&](const Section& m) { return is_multiple(m, cand); })) {
        pc.smallest = cand;
      }
      if (std::all_of(pc.members.begin(), pc.members.end(), [&](const Section& m) { return is_multiple(cand, m); })) {
        pc.largest = cand;
      }
    }
  }
  return out;
}

int f_unit(const Section& s, const Section& t) {
  if (s.n != t.n || s.order() != t.order()) {
    throw Error(ErrorCode::NotEquivalent, s.to_string() + " and " + t.to_string() + " have different orders");
  }
  const auto all = all_sections(s.n);
  const int m = s.order();
  std::vector<int> unit(all.size(), 0);
  std::vector<bool> seen(all.size(), false);
  const auto start = index_in(all, s);
  const auto goal = index_in(all, t);
  seen[start] = true;
  unit[start] = reduce_unit(1, m);
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    if (i == goal) return unit[i];
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (seen[j] || !(is_multiple(all[i], all[j]) || is_multiple(all[j], all[i]))) continue;
      seen[j] = true;
      unit[j] = reduce_unit(1LL * unit[i] * step_unit(all[i], all[j]), m);
      queue.push_back(j);
    }
  }
  throw Error(ErrorCode::NotEquivalent, s.to_string() + " and " + t.to_string() + " are not projectively equivalent");
}

int compose_path_unit(std::span<const Section> path) {
  if (path.empty()) throw Error(ErrorCode::InvalidInput, "empty path");
  const int m = path.front().order();
  int c = reduce_unit(1, m);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) c = reduce_unit(1LL * c * step_unit(path[i], path[i + 1]), m);
  return c;
}

std::vector<Section> principal_sections(const SRing& a) {
  const int n = a.order();
  std::vector<Section> out;
  for (const auto& x : a.classes()) out.push_back(Section{n, radical(n, x), generated(n, x)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Section> frs0(const SRing& a) {
  const int n = a.order();
  const auto all = all_sections(n);
  const auto comp = projective_components(n);
  const auto secs = sections(a);
  const auto principal = principal_sections(a);

  std::vector<bool> reachable(all.size(), false);
  for (const auto& q : secs) {
    bool sub = std::any_of(principal.begin(), principal.end(), [&](const Section& p) { return is_subsection(q, p); });
    if (!sub) continue;
    int c = comp[index_in(all, q)];
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (comp[j] == c) reachable[j] = true;
    }
  }
  std::vector<Section> out;
  for (const auto& t : secs) {
    if (reachable[index_in(all, t)]) out.push_back(t);
  }
  return out;
}

bool is_quasidense(const SRing& a) {
  for (const auto& s : sections(a)) {
    if (is_composite(s.order()) && restriction(a, s).rank() == 2) return false;
  }
  return true;
}

std::optional<SingularWitness> singular_witness(const SRing& a) {
  const auto secs = sections(a);
  auto found = std::find_if(secs.begin(), secs.end(), [&](const Section& s) {
    return is_composite(s.order()) && restriction(a, s).rank() == 2;
  });
  if (found == secs.end()) return std::nullopt;

  for (auto& pc : proj_classes(a.order(), secs)) {
    if (std::find(pc.members.begin(), pc.members.end(), *found) == pc.members.end()) continue;
    if (!pc.smallest || !pc.largest) {
      throw Error(ErrorCode::SingularConditionViolated,
                  "the projective class of " + found->to_string() + " has no unique smallest and largest member");
    }
    const Section small = *pc.smallest;
    const Section large = *pc.largest;
    const int n = a.order();
    const int l0 = small.l, l1 = small.u, u0 = large.l, u1 = large.u;
    if (!is_wreath(a, u0, l0) || !is_wreath(a, u1, l1)) {
      throw Error(ErrorCode::SingularConditionViolated,
                  "A is not both the U0/L0- and U1/L1-wreath product for class of " + found->to_string());
    }
    const SRing whole = restriction(a, Section{n, l0, u1});
    const SRing product = tensor(restriction(a, Section{n, l0, l1}), restriction(a, Section{n, l0, u0}));
    if (!(whole == product)) {
      throw Error(ErrorCode::SingularConditionViolated,
                  "A_{U1/L0} is not A_{L1/L0} (x) A_{U0/L0} for class of " + found->to_string());
    }
    return SingularWitness{std::move(pc), *found, small, large};
  }
  throw Error(ErrorCode::TheoryViolation, "section missing from its projective classes");
}

SRing s_extension(const SRing& a, const Section& s) {
  if (!is_a_section(a, s)) {
    throw Error(ErrorCode::NotASection, s.to_string() + " is not a section of " + a.to_string());
  }
  const int n = a.order();
  std::vector<ResidueSet> seeds = a.classes();
  const ResidueSet low = subgroup(n, s.l);
  for (int j = 0; j < s.order(); ++j) seeds.push_back(low.translated(j * (n / s.u)));
  return closure(n, seeds);
}

Reduction reduce_to_quasidense(const SRing& a) {
  Reduction r{a, {}, {a.rank()}};
  while (auto w = singular_witness(r.result)) {
    SRing next = s_extension(r.result, w->smallest);
    if (next.rank() <= r.result.rank()) {
      throw Error(ErrorCode::SingularConditionViolated,
                  "extension at " + w->smallest.to_string() + " did not increase the rank");
    }
    r.trace.push_back(w->smallest);
    r.result = std::move(next);
    r.ranks.push_back(r.result.rank());
    if (static_cast<int>(r.trace.size()) >= a.order()) {
      throw Error(ErrorCode::TheoryViolation, "reduction did not terminate within n steps");
    }
  }
  return r;
}

}  // namespace sring
