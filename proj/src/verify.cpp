#include "sring/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sring/duality.hpp"
#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/multipliers.hpp"
#include "sring/sections.hpp"

namespace sring {

namespace {

std::string label(const SRing& a) { return a.to_string(); }

// Runs check on every S-ring over Z_n for n in [1, max_n] selected by keep,
// turning library errors other than LimitExceeded into failures.
void for_each_sring(SuiteResult& r, int max_n, const OracleLimits& limits, const std::function<bool(int)>& keep_n,
                    const std::function<void(const SRing&)>& check) {
  for (int n = 1; n <= max_n; ++n) {
    if (!keep_n(n)) continue;
    for (const auto& a : enumerate_srings(n, limits)) {
      ++r.checked;
      try {
        check(a);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Limit) throw;
        r.failures.push_back(label(a) + ": " + e.what());
      }
    }
  }
}

bool any_n(int) { return true; }

void axioms(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    const int n = a.order();
    if (!(SRing::validate(n, a.class_lists()) == a)) r.failures.push_back(label(a) + ": revalidation changed it");
    if (!(closure(n, a.classes()) == a)) r.failures.push_back(label(a) + ": closure is not idempotent");
    for (const auto& s : sections(a)) {
      const SRing rs = restriction(a, s);
      SRing::validate(s.order(), rs.class_lists());
    }
  });
}

void oracle(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    const bool criterion = is_separable(a).separable;
    const bool brute = is_separable_bruteforce(a, limits);
    if (criterion != brute) {
      r.failures.push_back(label(a) + ": criterion says " + (criterion ? "separable" : "non-separable") +
                           ", exhaustive search disagrees");
    }
    if (!brute) r.info.push_back("non-separable " + label(a));
  });
}

void phi_iso(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    if (!is_quasidense(a)) return;
    const auto sims = similarities(a, a);
    const auto fm = fmult_group(a);
    if (sims.size() != fm.size()) {
      r.failures.push_back(label(a) + ": " + std::to_string(sims.size()) + " similarities but " +
                           std::to_string(fm.size()) + " outer multipliers");
      return;
    }
    std::set<std::vector<int>> images;
    for (const auto& phi : sims) {
      const OuterMultiplier fs = fS_of(a, phi);
      if (!is_outer_multiplier(a, fs)) r.failures.push_back(label(a) + ": fS of a similarity is not an outer multiplier");
      if (!(similarity_from_outer(a, fs) == phi)) r.failures.push_back(label(a) + ": round trip from a similarity fails");
      images.insert(fs.canonical());
    }
    if (images.size() != sims.size()) r.failures.push_back(label(a) + ": fS is not injective");
    for (const auto& fs : fm) {
      if (!(fS_of(a, similarity_from_outer(a, fs)) == fs)) {
        r.failures.push_back(label(a) + ": round trip from an outer multiplier fails");
      }
    }
  });
}

const std::vector<int> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};

void pgroups(SuiteResult& r, const OracleLimits& limits) {
  const int oracle_max = std::min(16, limits.isomorphism_max);
  auto listed = [](int n) { return std::find(kPrimePowers.begin(), kPrimePowers.end(), n) != kPrimePowers.end(); };
  for_each_sring(r, r.max_n, limits, listed, [&](const SRing& a) {
    if (!is_separable(a).separable) r.failures.push_back(label(a) + ": declared non-separable");
    if (a.order() <= oracle_max && !is_separable_bruteforce(a, limits)) {
      r.failures.push_back(label(a) + ": exhaustive search finds it non-separable");
    }
  });
}

void duality(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    const int n = a.order();
    const SRing d = dual_sring(a);
    if (!(dual_sring(d) == a)) r.failures.push_back(label(a) + ": double dual differs");
    if (d.rank() != a.rank()) r.failures.push_back(label(a) + ": dual has a different rank");
    std::vector<int> dual_groups;
    for (int g : a_subgroups(a)) dual_groups.push_back(n / g);
    std::sort(dual_groups.begin(), dual_groups.end());
    if (dual_groups != a_subgroups(d)) r.failures.push_back(label(a) + ": A-groups do not dualize");
    const bool qd = is_quasidense(a);
    if (qd != is_quasidense(d)) r.failures.push_back(label(a) + ": quasidensity differs from the dual");
    if (is_separable(a).separable != is_separable(d).separable) {
      r.failures.push_back(label(a) + ": separability differs from the dual");
    }
    if (qd) {
      std::vector<Section> expected;
      for (const auto& s : frs0(a)) expected.push_back(dual_section(n, s));
      std::sort(expected.begin(), expected.end());
      if (expected != frs0(d)) r.failures.push_back(label(a) + ": frs0 does not dualize");
    }
    for (const auto& s : sections(a)) {
      if (aut_stabilizer(a, s).elements != aut_stabilizer(d, dual_section(n, s)).elements) {
        r.failures.push_back(label(a) + ": stabilizer of " + s.to_string() + " does not dualize");
      }
    }
  });
}

void coset(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    const CosetClosure c = coset_closure(a, limits);
    if (!refines(c.ring, a)) r.failures.push_back(label(a) + ": coset closure does not contain it");
    if (!c.is_coset) r.info.push_back(label(a) + ": coset closure " + label(c.ring) + " is not a coset S-ring");
    if (phi_infty(a, limits) != induced_similarities(c.ring, a)) {
      r.failures.push_back(label(a) + ": realized similarities differ from those induced by the coset closure " +
                           label(c.ring));
    }
  });
}

void reduction(SuiteResult& r, const OracleLimits& limits) {
  for_each_sring(r, r.max_n, limits, any_n, [&](const SRing& a) {
    if (is_quasidense(a)) return;
    const Reduction red = reduce_to_quasidense(a);
    for (std::size_t i = 0; i + 1 < red.ranks.size(); ++i) {
      if (red.ranks[i] >= red.ranks[i + 1]) r.failures.push_back(label(a) + ": a reduction step does not raise the rank");
    }
    if (red.trace.empty()) r.failures.push_back(label(a) + ": no reduction step taken");
    if (!is_quasidense(red.result)) r.failures.push_back(label(a) + ": reduct is not quasidense");
    if (a.order() <= limits.isomorphism_max) {
      const bool before = is_separable_bruteforce(a, limits);
      const bool after = is_separable_bruteforce(red.result, limits);
      if (before != after) r.failures.push_back(label(a) + ": exhaustive search separates it from its reduct");
      if (is_separable(a).separable != before) r.failures.push_back(label(a) + ": criterion disagrees with search");
    }
  });
}

// Random walk through the multiple graph from s, then a shortest path to t.
std::vector<Section> random_path(const std::vector<Section>& all, const Section& s, const Section& t,
                                 std::mt19937& rng) {
  auto adjacent = [](const Section& x, const Section& y) { return is_multiple(x, y) || is_multiple(y, x); };
  std::vector<Section> path{s};
  std::uniform_int_distribution<int> steps(0, 6);
  for (int i = steps(rng); i > 0; --i) {
    std::vector<Section> next;
    for (const auto& y : all) {
      if (y != path.back() && adjacent(path.back(), y)) next.push_back(y);
    }
    if (next.empty()) break;
    path.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  std::map<Section, Section> parent;
  std::deque<Section> queue{path.back()};
  parent.emplace(path.back(), path.back());
  while (!queue.empty() && !parent.contains(t)) {
    Section x = queue.front();
    queue.pop_front();
    for (const auto& y : all) {
      if (!parent.contains(y) && adjacent(x, y)) {
        parent.emplace(y, x);
        queue.push_back(y);
      }
    }
  }
  std::vector<Section> tail;
  for (Section x = t; x != path.back(); x = parent.at(x)) tail.push_back(x);
  path.insert(path.end(), tail.rbegin(), tail.rend());
  return path;
}

void projective(SuiteResult& r) {
  std::mt19937 rng(20140414);
  for (int n : {12, 24, 30, 36}) {
    if (n > r.max_n) continue;
    const auto all = all_sections(n);
    const auto comp = projective_components(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (comp[i] != comp[j]) continue;
        ++r.checked;
        const int direct = f_unit(all[i], all[j]);
        const auto path = random_path(all, all[i], all[j], rng);
        if (compose_path_unit(path) != direct) {
          r.failures.push_back("n=" + std::to_string(n) + ": path units differ for " + all[i].to_string() + " -> " +
                               all[j].to_string());
        }
      }
    }
  }
  for (int n = 2; n <= std::min(r.max_n, 32); ++n) {
    if (!is_prime_power(n)) continue;
    const auto all = all_sections(n);
    for (const auto& pc : proj_classes(n, all)) {
      ++r.checked;
      if (pc.order() > 1 && pc.members.size() != 1) {
        r.failures.push_back("n=" + std::to_string(n) + ": nontrivial class of " + pc.members.front().to_string() +
                             " has " + std::to_string(pc.members.size()) + " members");
      }
    }
  }
}

void burnside(SuiteResult& r, const OracleLimits& limits) {
  for (int p : {3, 5, 7, 11, 13}) {
    if (p > r.max_n) continue;
    ++r.checked;
    const auto found = enumerate_srings(p, limits);
    std::set<SRing> orbit_rings;
    for (const auto& m : unit_subgroups(p)) {
      std::vector<ResidueSet> classes;
      ResidueSet seen(p);
      for (int x = 0; x < p; ++x) {
        if (seen.contains(x)) continue;
        ResidueSet orbit(p);
        for (int k : m) orbit.insert(mod(1LL * k * x, p));
        seen |= orbit;
        classes.push_back(orbit);
      }
      orbit_rings.insert(SRing::validate(p, std::move(classes)));
    }
    const auto expected = divisors(p - 1).size();
    if (found.size() != expected || orbit_rings.size() != expected ||
        !std::equal(found.begin(), found.end(), orbit_rings.begin(), orbit_rings.end())) {
      r.failures.push_back("p=" + std::to_string(p) + ": " + std::to_string(found.size()) + " S-rings, " +
                           std::to_string(orbit_rings.size()) + " orbit S-rings, expected " + std::to_string(expected));
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",        "pgroups",   "duality",    "phi-iso", "oracle",
                                                 "coset-closure", "reduction", "projective", "burnside"};
  return names;
}

SuiteResult run_suite(const std::string& name, int max_n, const OracleLimits& limits) {
  SuiteResult r;
  r.name = name;
  r.max_n = max_n;
  if (name == "axioms") {
    axioms(r, limits);
  } else if (name == "pgroups") {
    pgroups(r, limits);
  } else if (name == "duality") {
    duality(r, limits);
  } else if (name == "phi-iso") {
    phi_iso(r, limits);
  } else if (name == "oracle") {
    if (max_n > limits.isomorphism_max) {
      throw Error(ErrorCode::LimitExceeded, "oracle suite needs max-n <= " + std::to_string(limits.isomorphism_max));
    }
    oracle(r, limits);
  } else if (name == "coset-closure") {
    if (max_n > limits.coset_closure_max) {
      throw Error(ErrorCode::LimitExceeded,
                  "coset-closure suite needs max-n <= " + std::to_string(limits.coset_closure_max));
    }
    coset(r, limits);
  } else if (name == "reduction") {
    reduction(r, limits);
  } else if (name == "projective") {
    projective(r);
  } else if (name == "burnside") {
    burnside(r, limits);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace sring
