#include "sring/sring.hpp"

#include <algorithm>
#include <numeric>

#include "sring/error.hpp"
#include "sring/modarith.hpp"

namespace sring {

namespace {

std::string set_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// Renumbers labels 0..k-1 by first occurrence along 0..n-1 and returns k.
int renumber(std::vector<int>& labels) {
  std::vector<int> fresh(labels.size(), -1);
  int next = 0;
  for (auto& l : labels) {
    if (fresh[static_cast<std::size_t>(l)] < 0) fresh[static_cast<std::size_t>(l)] = next++;
    l = fresh[static_cast<std::size_t>(l)];
  }
  return next;
}

// Replaces labels by ids of distinct signatures.
int refine(std::vector<int>& labels, const std::vector<std::vector<int>>& signature) {
  const std::size_t n = labels.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return signature[static_cast<std::size_t>(a)] < signature[static_cast<std::size_t>(b)]; });
  int id = -1;
  for (std::size_t i = 0; i < n; ++i) {
    auto z = static_cast<std::size_t>(order[i]);
    if (i == 0 || signature[z] != signature[static_cast<std::size_t>(order[i - 1])]) ++id;
    labels[z] = id;
  }
  return renumber(labels);
}

std::vector<std::vector<int>> members_by_label(const std::vector<int>& labels, int count) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
  for (std::size_t z = 0; z < labels.size(); ++z) out[static_cast<std::size_t>(labels[z])].push_back(static_cast<int>(z));
  return out;
}

void product_counts(int n, const std::vector<int>& xs, const std::vector<int>& ys, std::vector<int>& cnt) {
  cnt.assign(static_cast<std::size_t>(n), 0);
  for (int x : xs) {
    for (int y : ys) {
      int z = x + y;
      ++cnt[static_cast<std::size_t>(z >= n ? z - n : z)];
    }
  }
}

}  // namespace

SRing::SRing(int n, std::vector<ResidueSet> canonical) : n_(n), classes_(std::move(canonical)) {
  std::sort(classes_.begin(), classes_.end(),
            [](const ResidueSet& a, const ResidueSet& b) { return a.min() < b.min(); });
  class_of_.assign(static_cast<std::size_t>(n), -1);
  members_.reserve(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    members_.push_back(classes_[i].elements());
    for (int x : members_.back()) class_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
}

SRing SRing::from_trusted_partition(int n, std::vector<ResidueSet> classes) {
  return SRing(n, std::move(classes));
}

SRing SRing::validate(int n, const std::vector<std::vector<int>>& classes) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  std::vector<ResidueSet> sets;
  sets.reserve(classes.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw Error(ErrorCode::NotAPartition, "class " + std::to_string(i) + " is empty");
    ResidueSet s(n);
    for (int x : classes[i]) {
      if (x < 0 || x >= n) {
        throw Error(ErrorCode::NotAPartition, "residue " + std::to_string(x) + " is outside Z_" + std::to_string(n));
      }
      if (owner[static_cast<std::size_t>(x)] >= 0) {
        throw Error(ErrorCode::NotAPartition, "residue " + std::to_string(x) + " occurs twice");
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
      s.insert(x);
    }
    sets.push_back(std::move(s));
  }
  return validate(n, std::move(sets));
}

SRing SRing::validate(int n, std::vector<ResidueSet> classes) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  ResidueSet seen(n);
  for (const auto& c : classes) {
    if (c.modulus() != n) throw Error(ErrorCode::NotAPartition, "class over the wrong group");
    if (c.empty()) throw Error(ErrorCode::NotAPartition, "empty class");
    if (c.intersects(seen)) {
      throw Error(ErrorCode::NotAPartition, "residue " + std::to_string((c & seen).min()) + " occurs twice");
    }
    seen |= c;
  }
  if (seen.size() != n) {
    throw Error(ErrorCode::NotAPartition,
                "residue " + std::to_string((ResidueSet::all(n) - seen).min()) + " is not covered");
  }
  SRing a(n, std::move(classes));
  if (a.members(0) != std::vector<int>{0}) {
    throw Error(ErrorCode::MissingIdentityClass, "the class of 0 is " + set_text(a.members(0)));
  }
  for (int i = 0; i < a.rank(); ++i) {
    ResidueSet neg = a.cls(i).negated();
    if (a.index_of(neg) < 0) {
      throw Error(ErrorCode::NotInverseClosed,
                  "class " + set_text(a.members(i)) + " has -X = " + set_text(neg.elements()) + ", which is not a class");
    }
  }
  std::vector<int> cnt;
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = i; j < a.rank(); ++j) {
      product_counts(n, a.members(i), a.members(j), cnt);
      for (int k = 0; k < a.rank(); ++k) {
        const auto& zs = a.members(k);
        for (int z : zs) {
          if (cnt[static_cast<std::size_t>(z)] != cnt[static_cast<std::size_t>(zs.front())]) {
            throw Error(ErrorCode::NotMultiplicativelyClosed,
                        "the product " + set_text(a.members(i)) + "*" + set_text(a.members(j)) + " has coefficient " +
                            std::to_string(cnt[static_cast<std::size_t>(zs.front())]) + " at " +
                            std::to_string(zs.front()) + " but " + std::to_string(cnt[static_cast<std::size_t>(z)]) +
                            " at " + std::to_string(z) + " in class " + set_text(zs));
          }
        }
      }
    }
  }
  return a;
}

SRing SRing::full(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  std::vector<ResidueSet> cs;
  for (int x = 0; x < n; ++x) cs.push_back(ResidueSet(n, {x}));
  return SRing(n, std::move(cs));
}

SRing SRing::rank_two(int n) {
  if (n <= 2) return full(n);
  ResidueSet rest = ResidueSet::all(n);
  rest.erase(0);
  return SRing(n, {ResidueSet(n, {0}), rest});
}

int SRing::index_of(const ResidueSet& x) const {
  if (x.modulus() != n_ || x.empty()) return -1;
  int i = class_of(x.min());
  return classes_[static_cast<std::size_t>(i)] == x ? i : -1;
}

bool SRing::is_union_of_classes(const ResidueSet& x) const {
  bool ok = true;
  x.for_each([&](int e) {
    if (ok && !cls(class_of(e)).is_subset_of(x)) ok = false;
  });
  return ok;
}

std::vector<std::vector<int>> SRing::class_lists() const { return members_; }

std::string SRing::to_string() const {
  std::string s = "{" + std::to_string(n_) + "; [";
  for (int i = 0; i < rank(); ++i) {
    s += (i ? "," : "") + std::string("[");
    for (std::size_t j = 0; j < members(i).size(); ++j) s += (j ? "," : "") + std::to_string(members(i)[j]);
    s += "]";
  }
  return s + "]}";
}

bool operator<(const SRing& a, const SRing& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.members_ < b.members_;
}

StructureTable::StructureTable(const SRing& a) : rank_(a.rank()) {
  const auto r = static_cast<std::size_t>(rank_);
  data_.assign(r * r * r, 0);
  std::vector<int> cnt;
  for (int x = 0; x < rank_; ++x) {
    for (int y = 0; y < rank_; ++y) {
      product_counts(a.order(), a.members(x), a.members(y), cnt);
      for (int z = 0; z < rank_; ++z) {
        data_[(static_cast<std::size_t>(x) * r + y) * r + z] = cnt[static_cast<std::size_t>(a.members(z).front())];
      }
    }
  }
}

int structure_constant(const SRing& a, int x, int y, int z) {
  const int n = a.order();
  const int target = a.members(z).front();
  const auto& ys = a.cls(y);
  int count = 0;
  for (int e : a.members(x)) {
    if (ys.contains(mod(target - e, n))) ++count;
  }
  return count;
}

SRing closure(int n, std::span<const ResidueSet> seeds) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "group order must be positive");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> signature(un);
  for (int z = 0; z < n; ++z) signature[static_cast<std::size_t>(z)].push_back(z == 0 ? 1 : 0);
  for (const auto& seed : seeds) {
    if (seed.modulus() != n) throw Error(ErrorCode::InvalidInput, "seed set over the wrong group");
    for (int z = 0; z < n; ++z) signature[static_cast<std::size_t>(z)].push_back(seed.contains(z) ? 1 : 0);
  }
  std::vector<int> labels(un, 0);
  int count = refine(labels, signature);

  std::vector<int> cnt;
  while (true) {
    const auto classes = members_by_label(labels, count);
    for (int z = 0; z < n; ++z) {
      auto& sig = signature[static_cast<std::size_t>(z)];
      sig.clear();
      sig.push_back(labels[static_cast<std::size_t>(z)]);
      sig.push_back(labels[static_cast<std::size_t>(z == 0 ? 0 : n - z)]);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) {
        product_counts(n, classes[i], classes[j], cnt);
        for (std::size_t z = 0; z < un; ++z) signature[z].push_back(cnt[z]);
      }
    }
    int next = refine(labels, signature);
    if (next == count) break;
    count = next;
  }

  std::vector<ResidueSet> classes(static_cast<std::size_t>(count), ResidueSet(n));
  for (int z = 0; z < n; ++z) classes[static_cast<std::size_t>(labels[static_cast<std::size_t>(z)])].insert(z);
  return SRing::from_trusted_partition(n, std::move(classes));
}

std::vector<int> a_subgroups(const SRing& a) {
  std::vector<int> out;
  for (int d : divisors(a.order())) {
    if (a.is_union_of_classes(subgroup(a.order(), d))) out.push_back(d);
  }
  return out;
}

std::vector<Section> sections(const SRing& a) {
  const auto groups = a_subgroups(a);
  std::vector<Section> out;
  for (int l : groups) {
    for (int u : groups) {
      if (u % l == 0) out.push_back(Section{a.order(), l, u});
    }
  }
  return out;
}

bool is_a_section(const SRing& a, const Section& s) {
  const int n = a.order();
  if (s.n != n || s.l < 1 || s.u < 1 || s.u % s.l != 0 || n % s.u != 0) return false;
  return a.is_union_of_classes(subgroup(n, s.l)) && a.is_union_of_classes(subgroup(n, s.u));
}

Restriction restrict_with_map(const SRing& a, const Section& s) {
  if (!is_a_section(a, s)) {
    throw Error(ErrorCode::NotASection, s.to_string() + " is not a section of " + a.to_string());
  }
  const int m = s.order();
  const ResidueSet big = subgroup(a.order(), s.u);
  std::vector<ResidueSet> images;
  std::vector<int> image_index(static_cast<std::size_t>(a.rank()), -1);
  ResidueSet covered(m);
  for (int i = 0; i < a.rank(); ++i) {
    if (!a.cls(i).is_subset_of(big)) continue;
    ResidueSet img = project(s, a.cls(i));
    auto it = std::find(images.begin(), images.end(), img);
    if (it == images.end()) {
      if (img.intersects(covered)) {
        throw Error(ErrorCode::TheoryViolation, "class images overlap in the restriction to " + s.to_string());
      }
      covered |= img;
      images.push_back(img);
      it = images.end() - 1;
    }
    image_index[static_cast<std::size_t>(i)] = static_cast<int>(it - images.begin());
  }
  SRing ring = SRing::validate(m, images);
  Restriction r{ring, std::vector<int>(static_cast<std::size_t>(a.rank()), -1)};
  for (int i = 0; i < a.rank(); ++i) {
    int k = image_index[static_cast<std::size_t>(i)];
    if (k >= 0) r.image_of[static_cast<std::size_t>(i)] = ring.index_of(images[static_cast<std::size_t>(k)]);
  }
  return r;
}

SRing restriction(const SRing& a, const Section& s) { return restrict_with_map(a, s).ring; }

int radical(int n, const ResidueSet& x) {
  const auto ds = divisors(n);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    // a set is stable under H iff it is stable under a generator of H
    if (x.translated(n / *it) == x) return *it;
  }
  return 1;
}

int generated(int n, const ResidueSet& x) {
  int g = n;
  x.for_each([&](int e) { g = std::gcd(g, e); });
  return n / g;
}

bool is_wreath(const SRing& a, int u, int l) {
  const int n = a.order();
  if (!is_a_section(a, Section{n, l, u})) {
    throw Error(ErrorCode::NotASection, "(" + std::to_string(l) + "," + std::to_string(u) + ") is not an A-section");
  }
  const ResidueSet big = subgroup(n, u);
  for (int i = 0; i < a.rank(); ++i) {
    if (a.cls(i).is_subset_of(big)) continue;
    if (radical(n, a.cls(i)) % l != 0) return false;
  }
  return true;
}

SRing tensor(const SRing& a, const SRing& b) {
  const int p = a.order();
  const int q = b.order();
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + " and " + std::to_string(q) + " are not coprime");
  }
  const int n = p * q;
  std::vector<ResidueSet> classes;
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < b.rank(); ++j) {
      ResidueSet c(n);
      for (int x : a.members(i)) {
        for (int y : b.members(j)) c.insert(mod(1LL * q * x + 1LL * p * y, n));
      }
      classes.push_back(std::move(c));
    }
  }
  return SRing::validate(n, std::move(classes));
}

}  // namespace sring
