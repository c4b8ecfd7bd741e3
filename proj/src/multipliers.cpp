#include "sring/multipliers.hpp"

#include <algorithm>
#include <set>

#include "sring/error.hpp"
#include "sring/modarith.hpp"

namespace sring {

std::vector<int> class_stabilizer(const SRing& ring) {
  std::vector<int> out;
  for (int k : units(ring.order()).elements) {
    bool fixes = true;
    for (const auto& c : ring.classes()) {
      if (c.scaled(k) != c) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(k);
  }
  return out;
}

AutStabilizer aut_stabilizer(const SRing& a, const Section& s) {
  return AutStabilizer{s, class_stabilizer(restriction(a, s))};
}

namespace {

enum class Rel { None, Below, Above, Equiv };

// frs0(A) with stabilizers and the pairwise relations that constrain families.
struct FamilyFrame {
  std::vector<Section> secs;
  std::vector<AutStabilizer> stabs;
  std::vector<std::vector<Rel>> rel;  // rel[i][j]: how section i relates to section j

  explicit FamilyFrame(const SRing& a) : secs(frs0(a)) {
    const int n = a.order();
    const auto all = all_sections(n);
    const auto comp = projective_components(n);
    auto component = [&](const Section& s) {
      auto it = std::lower_bound(all.begin(), all.end(), s);
      return comp[static_cast<std::size_t>(it - all.begin())];
    };
    const std::size_t k = secs.size();
    stabs.reserve(k);
    for (const auto& s : secs) stabs.push_back(aut_stabilizer(a, s));
    rel.assign(k, std::vector<Rel>(k, Rel::None));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j || secs[i].order() == 1 || secs[j].order() == 1) continue;
        if (is_subsection(secs[i], secs[j])) {
          rel[i][j] = Rel::Below;
        } else if (is_subsection(secs[j], secs[i])) {
          rel[i][j] = Rel::Above;
        } else if (secs[i].order() == secs[j].order() && component(secs[i]) == component(secs[j])) {
          rel[i][j] = Rel::Equiv;
        }
      }
    }
  }

  // Sections by decreasing order, so each constraint is checked once both ends are set.
  std::vector<std::size_t> search_order() const {
    std::vector<std::size_t> order(secs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return secs[x].order() > secs[y].order(); });
    return order;
  }
};

bool units_compatible(Rel r, const Section& si, int ki, const Section& sj, int kj) {
  switch (r) {
    case Rel::Below:
      return reduce_unit(kj, si.order()) == ki;
    case Rel::Above:
      return reduce_unit(ki, sj.order()) == kj;
    case Rel::Equiv:
      return ki == kj;
    case Rel::None:
      break;
  }
  return true;
}

// Every element of `big` reduces into `small`, both cosets of units.
bool reduces_into(const std::vector<int>& big, const std::vector<int>& small, int m_small) {
  for (int c : big) {
    if (!std::binary_search(small.begin(), small.end(), reduce_unit(c, m_small))) return false;
  }
  return true;
}

bool cosets_compatible(Rel r, const Section& si, const std::vector<int>& ci, const Section& sj,
                       const std::vector<int>& cj) {
  switch (r) {
    case Rel::Below:
      return reduces_into(cj, ci, si.order());
    case Rel::Above:
      return reduces_into(ci, cj, sj.order());
    case Rel::Equiv:
      return ci == cj;
    case Rel::None:
      break;
  }
  return true;
}

std::vector<Multiplier> enumerate_multipliers(const FamilyFrame& f) {
  const auto order = f.search_order();
  std::vector<int> k(f.secs.size(), 1);
  std::vector<Multiplier> out;
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == order.size()) {
      Multiplier mu;
      for (std::size_t i = 0; i < f.secs.size(); ++i) mu.entries.push_back({f.secs[i], k[i]});
      out.push_back(std::move(mu));
      return;
    }
    const std::size_t i = order[p];
    for (int cand : units(f.secs[i].order()).elements) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        const std::size_t j = order[q];
        ok = units_compatible(f.rel[i][j], f.secs[i], cand, f.secs[j], k[j]);
      }
      if (!ok) continue;
      k[i] = cand;
      self(self, p + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), [](const Multiplier& a, const Multiplier& b) {
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
                                        [](const MultiplierEntry& x, const MultiplierEntry& y) { return x.k < y.k; });
  });
  return out;
}

std::vector<OuterMultiplier> enumerate_outer(const FamilyFrame& f) {
  const std::size_t k = f.secs.size();
  std::vector<std::vector<CosetEntry>> choices(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::set<int> reps;
    for (int u : units(f.secs[i].order()).elements) {
      CosetEntry e = make_coset(f.stabs[i], u);
      if (reps.insert(e.rep).second) choices[i].push_back(std::move(e));
    }
  }
  std::vector<std::vector<std::vector<int>>> elems(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& e : choices[i]) elems[i].push_back(e.elements());
  }
  const auto order = f.search_order();
  std::vector<std::size_t> pick(k, 0);
  std::vector<OuterMultiplier> out;
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == order.size()) {
      OuterMultiplier fs;
      for (std::size_t i = 0; i < k; ++i) fs.entries.push_back(choices[i][pick[i]]);
      out.push_back(std::move(fs));
      return;
    }
    const std::size_t i = order[p];
    for (std::size_t c = 0; c < choices[i].size(); ++c) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        const std::size_t j = order[q];
        ok = cosets_compatible(f.rel[i][j], f.secs[i], elems[i][c], f.secs[j], elems[j][pick[j]]);
      }
      if (!ok) continue;
      pick[i] = c;
      self(self, p + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(),
            [](const OuterMultiplier& a, const OuterMultiplier& b) { return a.canonical() < b.canonical(); });
  return out;
}

OuterMultiplier theta_in(const FamilyFrame& f, const Multiplier& mu) {
  OuterMultiplier out;
  for (std::size_t i = 0; i < f.secs.size(); ++i) {
    const MultiplierEntry* e = mu.find(f.secs[i]);
    if (e == nullptr) throw Error(ErrorCode::InvalidInput, "multiplier has no unit for " + f.secs[i].to_string());
    out.entries.push_back(make_coset(f.stabs[i], e->k));
  }
  return out;
}

bool same_sections(const FamilyFrame& f, std::size_t count, auto section_at) {
  if (count != f.secs.size()) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(section_at(i) == f.secs[i])) return false;
  }
  return true;
}

}  // namespace

bool is_multiplier(const SRing& a, const Multiplier& mu) {
  const FamilyFrame f(a);
  if (!same_sections(f, mu.entries.size(), [&](std::size_t i) { return mu.entries[i].section; })) return false;
  for (std::size_t i = 0; i < f.secs.size(); ++i) {
    if (!units(f.secs[i].order()).contains(mu.entries[i].k)) return false;
  }
  for (std::size_t i = 0; i < f.secs.size(); ++i) {
    for (std::size_t j = 0; j < f.secs.size(); ++j) {
      if (!units_compatible(f.rel[i][j], f.secs[i], mu.entries[i].k, f.secs[j], mu.entries[j].k)) return false;
    }
  }
  return true;
}

bool is_outer_multiplier(const SRing& a, const OuterMultiplier& fs) {
  const FamilyFrame f(a);
  if (!same_sections(f, fs.entries.size(), [&](std::size_t i) { return fs.entries[i].section; })) return false;
  std::vector<std::vector<int>> elems;
  for (std::size_t i = 0; i < f.secs.size(); ++i) {
    const auto& e = fs.entries[i];
    if (e.stabilizer != f.stabs[i].elements || !units(f.secs[i].order()).contains(e.rep)) return false;
    if (make_coset(f.stabs[i], e.rep).rep != e.rep) return false;
    elems.push_back(e.elements());
  }
  for (std::size_t i = 0; i < f.secs.size(); ++i) {
    for (std::size_t j = 0; j < f.secs.size(); ++j) {
      if (!cosets_compatible(f.rel[i][j], f.secs[i], elems[i], f.secs[j], elems[j])) return false;
    }
  }
  return true;
}

std::vector<Multiplier> mult_group(const SRing& a) { return enumerate_multipliers(FamilyFrame(a)); }

std::vector<OuterMultiplier> fmult_group(const SRing& a) { return enumerate_outer(FamilyFrame(a)); }

OuterMultiplier theta(const SRing& a, const Multiplier& mu) { return theta_in(FamilyFrame(a), mu); }

Multiplier multiply(const Multiplier& a, const Multiplier& b) {
  if (a.entries.size() != b.entries.size()) throw Error(ErrorCode::InvalidInput, "multipliers over different sections");
  Multiplier out;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const Section& s = a.entries[i].section;
    if (!(s == b.entries[i].section)) throw Error(ErrorCode::InvalidInput, "multipliers over different sections");
    out.entries.push_back({s, reduce_unit(1LL * a.entries[i].k * b.entries[i].k, s.order())});
  }
  return out;
}

OuterMultiplier multiply(const OuterMultiplier& a, const OuterMultiplier& b) {
  if (a.entries.size() != b.entries.size()) {
    throw Error(ErrorCode::InvalidInput, "outer multipliers over different sections");
  }
  OuterMultiplier out;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const CosetEntry& x = a.entries[i];
    const CosetEntry& y = b.entries[i];
    if (!(x.section == y.section) || x.stabilizer != y.stabilizer) {
      throw Error(ErrorCode::InvalidInput, "outer multipliers over different sections");
    }
    out.entries.push_back(
        make_coset(AutStabilizer{x.section, x.stabilizer}, reduce_unit(1LL * x.rep * y.rep, x.section.order())));
  }
  return out;
}

SeparabilityReport is_separable(const SRing& a) {
  Reduction red = reduce_to_quasidense(a);
  const FamilyFrame f(red.result);
  const auto mult = enumerate_multipliers(f);
  const auto fmult = enumerate_outer(f);
  std::set<std::vector<int>> image;
  for (const auto& mu : mult) image.insert(theta_in(f, mu).canonical());
  std::set<std::vector<int>> all;
  for (const auto& fs : fmult) all.insert(fs.canonical());
  for (const auto& c : image) {
    if (!all.contains(c)) {
      throw Error(ErrorCode::TheoryViolation, "theta image is not an outer multiplier of " + red.result.to_string());
    }
  }
  SeparabilityReport report{image.size() == all.size(), a, std::move(red), mult.size(), fmult.size(), image.size(),
                            std::nullopt};
  for (const auto& fs : fmult) {
    if (!image.contains(fs.canonical())) {
      report.uncovered = fs;
      break;
    }
  }
  return report;
}

}  // namespace sring
