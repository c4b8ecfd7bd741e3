#include "sring/similarity.hpp"

#include <algorithm>
#include <numeric>

#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/multipliers.hpp"
#include "sring/sections.hpp"

namespace sring {

Similarity Similarity::identity(int rank) {
  Similarity s;
  s.map.resize(static_cast<std::size_t>(rank));
  std::iota(s.map.begin(), s.map.end(), 0);
  return s;
}

Similarity Similarity::then(const Similarity& next) const {
  Similarity out;
  out.map.reserve(map.size());
  for (int t : map) out.map.push_back(next(t));
  return out;
}

Similarity Similarity::inverse() const {
  Similarity out;
  out.map.assign(map.size(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) out.map[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  return out;
}

bool Similarity::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool is_similarity(const SRing& a, const SRing& b, const Similarity& phi) {
  const int r = a.rank();
  if (a.order() != b.order() || b.rank() != r || static_cast<int>(phi.map.size()) != r) return false;
  std::vector<bool> hit(static_cast<std::size_t>(r), false);
  for (int t : phi.map) {
    if (t < 0 || t >= r || hit[static_cast<std::size_t>(t)]) return false;
    hit[static_cast<std::size_t>(t)] = true;
  }
  const StructureTable ta(a), tb(b);
  for (int x = 0; x < r; ++x) {
    if (a.cls(x).size() != b.cls(phi(x)).size()) return false;
    for (int y = 0; y < r; ++y) {
      for (int z = 0; z < r; ++z) {
        if (ta.at(x, y, z) != tb.at(phi(x), phi(y), phi(z))) return false;
      }
    }
  }
  return true;
}

namespace {

class SimilaritySearch {
 public:
  SimilaritySearch(const SRing& a, const SRing& b) : a_(a), b_(b), ta_(a), tb_(b) {
    const int r = a.rank();
    order_.resize(static_cast<std::size_t>(r));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return a.cls(x).size() < a.cls(y).size(); });
    map_.assign(static_cast<std::size_t>(r), -1);
    used_.assign(static_cast<std::size_t>(r), false);
  }

  std::vector<Similarity> run() {
    map_[0] = 0;
    used_[0] = true;
    assigned_.push_back(0);
    if (consistent(1)) dfs(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Checks every triple of assigned classes touching the last `fresh` assignments.
  bool consistent(std::size_t fresh) const {
    const std::size_t k = assigned_.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          if (i < k - fresh && j < k - fresh && l < k - fresh) continue;
          int x = assigned_[i], y = assigned_[j], z = assigned_[l];
          if (ta_.at(x, y, z) != tb_.at(map_[static_cast<std::size_t>(x)], map_[static_cast<std::size_t>(y)],
                                        map_[static_cast<std::size_t>(z)])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void assign(int x, int y) {
    map_[static_cast<std::size_t>(x)] = y;
    used_[static_cast<std::size_t>(y)] = true;
    assigned_.push_back(x);
  }

  void unassign() {
    int x = assigned_.back();
    assigned_.pop_back();
    used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])] = false;
    map_[static_cast<std::size_t>(x)] = -1;
  }

  void dfs(std::size_t pos) {
    while (pos < order_.size() && map_[static_cast<std::size_t>(order_[pos])] >= 0) ++pos;
    if (pos == order_.size()) {
      found_.push_back(Similarity{map_});
      return;
    }
    const int x = order_[pos];
    const int xneg = a_.neg_class(x);
    for (int y = 0; y < b_.rank(); ++y) {
      if (used_[static_cast<std::size_t>(y)] || b_.cls(y).size() != a_.cls(x).size()) continue;
      const int yneg = b_.neg_class(y);
      if ((xneg == x) != (yneg == y)) continue;
      if (xneg != x && (map_[static_cast<std::size_t>(xneg)] >= 0 || used_[static_cast<std::size_t>(yneg)])) continue;
      assign(x, y);
      std::size_t fresh = 1;
      if (xneg != x) {
        assign(xneg, yneg);
        fresh = 2;
      }
      if (consistent(fresh)) dfs(pos + 1);
      for (std::size_t i = 0; i < fresh; ++i) unassign();
    }
  }

  const SRing& a_;
  const SRing& b_;
  StructureTable ta_, tb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> assigned_;
  std::vector<Similarity> found_;
};

}  // namespace

std::vector<Similarity> similarities(const SRing& a, const SRing& b) {
  if (a.order() != b.order() || a.rank() != b.rank()) return {};
  std::vector<int> sa, sb;
  for (const auto& c : a.classes()) sa.push_back(c.size());
  for (const auto& c : b.classes()) sb.push_back(c.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return {};
  return SimilaritySearch(a, b).run();
}

Similarity restrict_similarity(const SRing& a, const Similarity& phi, const Section& s) {
  const auto r = restrict_with_map(a, s);
  Similarity out;
  out.map.assign(static_cast<std::size_t>(r.ring.rank()), -1);
  for (int i = 0; i < a.rank(); ++i) {
    const int from = r.image_of[static_cast<std::size_t>(i)];
    if (from < 0) continue;
    const int to = r.image_of[static_cast<std::size_t>(phi(i))];
    if (to < 0) {
      throw Error(ErrorCode::TheoryViolation, "similarity moves a class out of the A-group of order " + std::to_string(s.u));
    }
    auto& slot = out.map[static_cast<std::size_t>(from)];
    if (slot >= 0 && slot != to) {
      throw Error(ErrorCode::TheoryViolation, "similarity does not descend to the section " + s.to_string());
    }
    slot = to;
  }
  return out;
}

std::optional<Similarity> from_unit(const SRing& a, int k) {
  const int m = a.order();
  if (std::gcd(mod(k, m), m) != 1 && m != 1) return std::nullopt;
  Similarity out;
  out.map.reserve(static_cast<std::size_t>(a.rank()));
  for (const auto& c : a.classes()) {
    int j = a.index_of(c.scaled(k));
    if (j < 0) return std::nullopt;
    out.map.push_back(j);
  }
  return out;
}

std::optional<int> inducing_unit(const SRing& a, const Similarity& psi) {
  for (int k : units(a.order()).elements) {
    auto induced = from_unit(a, k);
    if (induced && *induced == psi) return k;
  }
  return std::nullopt;
}

OuterMultiplier fS_of(const SRing& a, const Similarity& phi) {
  if (!is_quasidense(a)) {
    throw Error(ErrorCode::PreconditionViolated, "fS_of requires a quasidense S-ring, got " + a.to_string());
  }
  OuterMultiplier out;
  for (const auto& s : frs0(a)) {
    const auto r = restrict_with_map(a, s);
    const Similarity psi = restrict_similarity(a, phi, s);
    const auto k = inducing_unit(r.ring, psi);
    if (!k) {
      throw Error(ErrorCode::NoInducingUnit, "no unit induces the restriction to " + s.to_string() + " of " + a.to_string());
    }
    out.entries.push_back(make_coset(AutStabilizer{s, class_stabilizer(r.ring)}, *k));
  }
  return out;
}

Similarity similarity_from_outer(const SRing& a, const OuterMultiplier& fs) {
  const int n = a.order();
  Similarity phi;
  phi.map.reserve(static_cast<std::size_t>(a.rank()));
  for (const auto& x : a.classes()) {
    const Section p{n, radical(n, x), generated(n, x)};
    const CosetEntry* entry = fs.find(p);
    if (entry == nullptr) {
      throw Error(ErrorCode::ReconstructionFailed, "principal section " + p.to_string() + " missing from the family");
    }
    const int j = a.index_of(lift(p, project(p, x).scaled(entry->rep)));
    if (j < 0) {
      throw Error(ErrorCode::ReconstructionFailed, "image of class " + x.to_string() + " is not a class");
    }
    phi.map.push_back(j);
  }
  if (!is_similarity(a, a, phi)) {
    throw Error(ErrorCode::ReconstructionFailed, "reconstructed class map is not a similarity of " + a.to_string());
  }
  return phi;
}

}  // namespace sring
