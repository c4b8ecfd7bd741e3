#include "sring/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/sections.hpp"

namespace sring {

namespace {

// Builds S-rings class by class. The class X of the smallest unassigned x is
// invariant under its stabilizer M in units(n); M contains every unit fixing a
// point of X, and X meets each order in a single M-orbit. All images k*X are
// classes as well, so they are added together with X.
class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n), units_(units(n).elements), divisors_(divisors(n)) {
    for (const auto& m : unit_subgroups(n)) {
      Subgroup sg;
      sg.elements = m;
      for (int d : divisors_) {
        bool ok = true;
        for (int k : units_) {
          if (mod(k - 1, d) == 0 && !std::binary_search(m.begin(), m.end(), k)) {
            ok = false;
            break;
          }
        }
        if (ok) sg.fixers_inside.push_back(d);
      }
      std::set<int> seen;
      for (int k : units_) {
        int rep = n;
        for (int h : m) rep = std::min(rep, mod(1LL * h * k, n));
        if (seen.insert(rep).second) sg.coset_reps.push_back(k);
      }
      subgroups_.push_back(std::move(sg));
    }
  }

  std::vector<SRing> run() {
    if (n_ == 1) return {SRing::full(1)};
    ResidueSet zero(n_, {0});
    chosen_.push_back(zero);
    assigned_ = zero;
    search();
    return {found_.begin(), found_.end()};
  }

 private:
  struct Subgroup {
    std::vector<int> elements;
    std::vector<int> fixers_inside;  // orders d whose pointwise stabilizer lies in the subgroup
    std::vector<int> coset_reps;
  };

  ResidueSet orbit(const Subgroup& m, int y) const {
    ResidueSet out(n_);
    for (int h : m.elements) out.insert(mod(1LL * h * y, n_));
    return out;
  }

  bool stabilizer_is(const ResidueSet& x, const Subgroup& m) const {
    int count = 0;
    for (int k : units_) {
      if (x.scaled(k) == x) ++count;
    }
    return count == static_cast<int>(m.elements.size());
  }

  void search() {
    if (assigned_.size() == n_) {
      try {
        found_.insert(SRing::validate(n_, chosen_));
      } catch (const Error&) {
      }
      return;
    }
    const SRing cl = closure(n_, chosen_);
    for (const auto& c : chosen_) {
      if (cl.index_of(c) < 0) return;
    }
    const ResidueSet unassigned = ResidueSet::all(n_) - assigned_;
    const int x = unassigned.min();
    const ResidueSet avail = cl.cls(cl.class_of(x)) & unassigned;
    const int d0 = element_order(n_, x);
    for (const auto& m : subgroups_) {
      if (!std::binary_search(m.fixers_inside.begin(), m.fixers_inside.end(), d0)) continue;
      ResidueSet base = orbit(m, x);
      if (!base.is_subset_of(avail)) continue;
      // Candidate orbits for every other order allowed by m.
      std::vector<std::vector<ResidueSet>> options;
      for (int d : m.fixers_inside) {
        if (d == d0) continue;
        std::vector<ResidueSet> orbs;
        ResidueSet left(n_);
        avail.for_each([&](int y) {
          if (element_order(n_, y) == d) left.insert(y);
        });
        while (!left.empty()) {
          ResidueSet o = orbit(m, left.min());
          if (o.is_subset_of(avail)) orbs.push_back(o);
          left -= o;
        }
        if (!orbs.empty()) options.push_back(std::move(orbs));
      }
      choose(m, options, 0, base);
    }
  }

  void choose(const Subgroup& m, const std::vector<std::vector<ResidueSet>>& options, std::size_t i,
              const ResidueSet& x) {
    if (i == options.size()) {
      place(m, x);
      return;
    }
    choose(m, options, i + 1, x);
    for (const auto& o : options[i]) choose(m, options, i + 1, x | o);
  }

  void place(const Subgroup& m, const ResidueSet& x) {
    if (!stabilizer_is(x, m)) return;
    std::vector<ResidueSet> images;
    ResidueSet covered = assigned_;
    for (int k : m.coset_reps) {
      ResidueSet y = x.scaled(k);
      if (y.intersects(covered)) return;
      covered |= y;
      images.push_back(std::move(y));
    }
    const ResidueSet saved = assigned_;
    for (auto& y : images) chosen_.push_back(y);
    assigned_ = covered;
    search();
    chosen_.resize(chosen_.size() - images.size());
    assigned_ = saved;
  }

  int n_;
  std::vector<int> units_;
  std::vector<int> divisors_;
  std::vector<Subgroup> subgroups_;
  std::vector<ResidueSet> chosen_;
  ResidueSet assigned_;
  std::set<SRing> found_;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SRing& a, const SRing& b, const Similarity& phi) : a_(a), n_(a.order()) {
    for (int i = 0; i < a.rank(); ++i) target_.push_back(b.cls(phi(i)));
    table_.assign(static_cast<std::size_t>(n_), -1);
    table_[0] = 0;
    used_ = ResidueSet(n_, {0});
    std::vector<ResidueSet> domains(static_cast<std::size_t>(n_), ResidueSet(n_));
    for (int y = 1; y < n_; ++y) domains[static_cast<std::size_t>(y)] = target_[static_cast<std::size_t>(a.class_of(y))];
    ok_ = dfs(1, domains);
  }

  std::optional<Isomorphism> result() const {
    if (!ok_) return std::nullopt;
    return Isomorphism{n_, table_};
  }

 private:
  bool dfs(int y, const std::vector<ResidueSet>& domains) {
    if (y == n_) return true;
    const ResidueSet cands = domains[static_cast<std::size_t>(y)] - used_;
    for (int w : cands.elements()) {
      std::vector<ResidueSet> next = domains;
      bool alive = true;
      for (int z = y + 1; z < n_ && alive; ++z) {
        auto& d = next[static_cast<std::size_t>(z)];
        d &= target_[static_cast<std::size_t>(a_.class_of(mod(z - y, n_)))].translated(w);
        alive = !d.empty();
      }
      if (!alive) continue;
      table_[static_cast<std::size_t>(y)] = w;
      used_.insert(w);
      if (dfs(y + 1, next)) return true;
      used_.erase(w);
      table_[static_cast<std::size_t>(y)] = -1;
    }
    return false;
  }

  const SRing& a_;
  int n_;
  std::vector<ResidueSet> target_;
  std::vector<int> table_;
  ResidueSet used_;
  bool ok_ = false;
};

void require_bound(int n, int bound, const char* what) {
  if (n > bound) {
    throw Error(ErrorCode::LimitExceeded,
                std::string(what) + " bound is " + std::to_string(bound) + ", got n=" + std::to_string(n));
  }
}

}  // namespace

std::vector<SRing> enumerate_srings(int n, const OracleLimits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  require_bound(n, limits.enumerate_max, "enumeration");
  static std::mutex lock;
  static std::map<int, std::vector<SRing>> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto result = Enumerator(n).run();
  std::lock_guard guard(lock);
  return cache.try_emplace(n, std::move(result)).first->second;
}

std::optional<Isomorphism> find_isomorphism(const SRing& a, const SRing& b, const Similarity& phi,
                                            const OracleLimits& limits) {
  require_bound(a.order(), limits.isomorphism_max, "isomorphism search");
  if (!is_similarity(a, b, phi)) throw Error(ErrorCode::InvalidInput, "map is not a similarity");
  auto f = IsomorphismSearch(a, b, phi).result();
  if (f && !is_isomorphism(a, b, phi, *f)) {
    throw Error(ErrorCode::TheoryViolation, "isomorphism search returned an invalid table");
  }
  return f;
}

bool is_isomorphism(const SRing& a, const SRing& b, const Similarity& phi, const Isomorphism& f) {
  const int n = a.order();
  if (f.n != n || b.order() != n || static_cast<int>(f.table.size()) != n || f.table[0] != 0) return false;
  std::vector<int> sorted = f.table;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) return false;
  }
  for (int i = 0; i < a.rank(); ++i) {
    const ResidueSet& image = b.cls(phi(i));
    for (int y = 0; y < n; ++y) {
      ResidueSet lhs(n);
      for (int x : a.members(i)) lhs.insert(f.table[static_cast<std::size_t>(mod(x + y, n))]);
      if (lhs != image.translated(f.table[static_cast<std::size_t>(y)])) return false;
    }
  }
  return true;
}

std::vector<Similarity> phi_infty(const SRing& a, const OracleLimits& limits) {
  require_bound(a.order(), limits.isomorphism_max, "isomorphism search");
  std::vector<Similarity> out;
  for (const auto& phi : similarities(a, a)) {
    if (find_isomorphism(a, a, phi, limits)) out.push_back(phi);
  }
  if (!std::binary_search(out.begin(), out.end(), Similarity::identity(a.rank()))) {
    throw Error(ErrorCode::TheoryViolation, "identity is not realized on " + a.to_string());
  }
  for (const auto& p : out) {
    for (const auto& q : out) {
      if (!std::binary_search(out.begin(), out.end(), p.then(q))) {
        throw Error(ErrorCode::TheoryViolation, "realized similarities are not closed under composition");
      }
    }
  }
  return out;
}

bool is_separable_bruteforce(const SRing& a, const OracleLimits& limits) {
  return phi_infty(a, limits).size() == similarities(a, a).size();
}

SRing intersect(const SRing& a, const SRing& b) {
  const int n = a.order();
  if (b.order() != n) throw Error(ErrorCode::InvalidInput, "intersection of S-rings over different groups");
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const SRing* r : {&a, &b}) {
    for (int i = 0; i < r->rank(); ++i) {
      const int root = find(r->members(i).front());
      for (int x : r->members(i)) parent[static_cast<std::size_t>(find(x))] = root;
    }
  }
  std::map<int, ResidueSet> blocks;
  for (int x = 0; x < n; ++x) blocks.try_emplace(find(x), n).first->second.insert(x);
  std::vector<ResidueSet> classes;
  for (auto& [root, block] : blocks) classes.push_back(std::move(block));
  try {
    return SRing::validate(n, std::move(classes));
  } catch (const Error& e) {
    throw Error(ErrorCode::IntersectionNotAnSRing, std::string("intersection fails: ") + e.what());
  }
}

bool is_coset_sring(const SRing& a) {
  const int n = a.order();
  for (const auto& c : a.classes()) {
    const int size = c.size();
    if (n % size != 0 || c.translated(-c.min()) != subgroup(n, size)) return false;
  }
  return true;
}

bool refines(const SRing& fine, const SRing& coarse) {
  if (fine.order() != coarse.order()) return false;
  for (const auto& c : coarse.classes()) {
    if (!fine.is_union_of_classes(c)) return false;
  }
  return true;
}

CosetClosure coset_closure(const SRing& a, const OracleLimits& limits) {
  require_bound(a.order(), limits.coset_closure_max, "coset closure");
  std::optional<SRing> meet;
  for (const auto& b : enumerate_srings(a.order(), limits)) {
    if (!is_coset_sring(b) || !refines(b, a)) continue;
    meet = meet ? intersect(*meet, b) : b;
  }
  CosetClosure out{*meet, is_coset_sring(*meet)};
  if (!out.is_coset && is_quasidense(a)) {
    throw Error(ErrorCode::TheoryViolation, "coset closure of quasidense " + a.to_string() + " is not a coset S-ring");
  }
  return out;
}

std::vector<Similarity> induced_similarities(const SRing& a0, const SRing& a) {
  std::set<Similarity> out;
  for (const auto& psi : similarities(a0, a0)) {
    Similarity phi;
    bool keeps = true;
    for (int i = 0; i < a.rank() && keeps; ++i) {
      ResidueSet image(a.order());
      for (int x : a.members(i)) image |= a0.cls(psi(a0.class_of(x)));
      const int j = a.index_of(image);
      keeps = j >= 0;
      phi.map.push_back(j);
    }
    if (keeps) out.insert(std::move(phi));
  }
  return {out.begin(), out.end()};
}

}  // namespace sring
