#include <algorithm>
#include <random>

#include "doctest.h"
#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/oracle.hpp"
#include "sring/sring.hpp"
#include "support.hpp"

using namespace sring;
using fixtures::a8;
using fixtures::r4;
using fixtures::w4;
using fixtures::z5c;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("validation") {
  const SRing z = z5c();
  CHECK(z.rank() == 3);
  CHECK(z.cls(1) == ResidueSet(5, {1, 4}));

  CHECK(code_of([] { SRing::validate(4, {{0}, {1}, {2, 3}}); }) == ErrorCode::NotInverseClosed);
  CHECK(code_of([] { SRing::validate(4, {{0}, {1, 2}, {2, 3}}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([] { SRing::validate(4, {{0}, {1, 3}}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([] { SRing::validate(4, {{0, 2}, {1, 3}}); }) == ErrorCode::MissingIdentityClass);
  CHECK(code_of([] { SRing::validate(5, {{0}, {1, 2}, {3, 4}}); }) == ErrorCode::NotMultiplicativelyClosed);

  try {
    SRing::validate(4, {{0}, {1}, {2, 3}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }

  for (int n = 1; n <= 30; ++n) {
    std::vector<std::vector<int>> singletons;
    for (int x = 0; x < n; ++x) singletons.push_back({x});
    CHECK(SRing::validate(n, singletons) == SRing::full(n));
  }
}

TEST_CASE("canonical form sorts classes by their least element") {
  const SRing a = SRing::validate(8, {{7, 5, 3, 1}, {6, 2}, {4}, {0}});
  CHECK(a == a8());
  CHECK(a.class_lists() == std::vector<std::vector<int>>{{0}, {1, 3, 5, 7}, {2, 6}, {4}});
}

TEST_CASE("validation agrees with the axioms on every partition of small groups") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::vector<int>> blocks{{0}};
    std::function<void(int)> place = [&](int x) {
      if (x == n) {
        bool ok = true;
        try {
          SRing::validate(n, blocks);
        } catch (const Error&) {
          ok = false;
        }
        CHECK(ok == fixtures::naive_is_sring(n, blocks));
        return;
      }
      for (std::size_t i = 1; i < blocks.size(); ++i) {
        blocks[i].push_back(x);
        place(x + 1);
        blocks[i].pop_back();
      }
      blocks.push_back({x});
      place(x + 1);
      blocks.pop_back();
    };
    place(1);
  }
}

TEST_CASE("structure constants") {
  const SRing z = z5c();
  CHECK(structure_constant(z, 1, 1, 2) == 1);
  CHECK(structure_constant(z, 1, 1, 0) == 2);
  for (const SRing& a : {z, a8(), w4(), r4()}) {
    const StructureTable t(a);
    for (int x = 0; x < a.rank(); ++x) {
      CHECK(structure_constant(a, x, 0, x) == 1);
      for (int y = 0; y < a.rank(); ++y) {
        for (int w = 0; w < a.rank(); ++w) {
          CHECK(t.at(x, y, w) == structure_constant(a, x, y, w));
          CHECK(t.at(x, y, w) <= std::min(a.cls(x).size(), a.cls(y).size()));
        }
      }
    }
  }
}

TEST_CASE("closure examples") {
  const std::vector<ResidueSet> seed{ResidueSet(5, {1, 4})};
  CHECK(closure(5, seed) == z5c());
  const std::vector<ResidueSet> singles{ResidueSet(4, {1}), ResidueSet(4, {2}), ResidueSet(4, {3})};
  CHECK(closure(4, singles) == SRing::full(4));
  for (int p : {2, 3, 5, 7, 11}) {
    const std::vector<ResidueSet> rest{ResidueSet::all(p) - ResidueSet(p, {0})};
    CHECK(closure(p, rest) == SRing::rank_two(p));
  }
  CHECK(closure(1, std::vector<ResidueSet>{}) == SRing::full(1));
}

TEST_CASE("closure is the coarsest S-ring containing the seeds") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 10; ++n) {
    const auto all = fixtures::naive_enumerate(n);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ResidueSet> seeds;
      const int count = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int s = 0; s < count; ++s) {
        ResidueSet x(n);
        for (int e = 1; e < n; ++e) {
          if (rng() % 3 == 0) x.insert(e);
        }
        if (!x.empty()) seeds.push_back(x);
      }
      const SRing c = closure(n, seeds);
      for (const auto& s : seeds) CHECK(c.is_union_of_classes(s));
      // Every S-ring in which the seeds are unions of classes refines the closure.
      for (const auto& lists : all) {
        const SRing b = SRing::validate(n, lists);
        bool contains = std::all_of(seeds.begin(), seeds.end(), [&](const ResidueSet& s) { return b.is_union_of_classes(s); });
        if (contains) CHECK(refines(b, c));
      }
    }
  }
}

TEST_CASE("closure is idempotent") {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& a : enumerate_srings(n)) CHECK(closure(n, a.classes()) == a);
  }
}

TEST_CASE("A-subgroups and sections") {
  CHECK(a_subgroups(a8()) == std::vector<int>{1, 2, 4, 8});
  CHECK(a_subgroups(r4()) == std::vector<int>{1, 4});
  for (int n = 1; n <= 24; ++n) CHECK(a_subgroups(SRing::full(n)) == divisors(n));
  CHECK(sections(SRing::full(4)) ==
        std::vector<Section>{{4, 1, 1}, {4, 1, 2}, {4, 1, 4}, {4, 2, 2}, {4, 2, 4}, {4, 4, 4}});
  CHECK(sections(r4()) == std::vector<Section>{{4, 1, 1}, {4, 1, 4}, {4, 4, 4}});
  CHECK(sections(a8()).size() == 10);

  SUBCASE("A-subgroups of p-groups form a chain") {
    for (int n : {4, 8, 9, 16, 25, 27, 32}) {
      for (const auto& a : enumerate_srings(n)) {
        const auto groups = a_subgroups(a);
        for (std::size_t i = 0; i + 1 < groups.size(); ++i) CHECK(groups[i + 1] % groups[i] == 0);
      }
    }
  }
}

TEST_CASE("restriction") {
  CHECK(restriction(a8(), Section{8, 2, 8}) == w4());
  CHECK(restriction(a8(), Section{8, 4, 8}) == SRing::full(2));
  CHECK(restriction(z5c(), Section{5, 1, 5}) == z5c());
  CHECK_THROWS_AS(restriction(r4(), Section{4, 1, 2}), Error);

  SUBCASE("restriction is valid and composes") {
    for (int n = 1; n <= 24; ++n) {
      for (const auto& a : enumerate_srings(n)) {
        CHECK(restriction(a, Section{n, 1, n}) == a);
        for (const auto& s : sections(a)) {
          const SRing rs = restriction(a, s);
          CHECK(fixtures::naive_is_sring(rs.order(), rs.class_lists()));
          // A subsection (l', u') of s corresponds to the section (l'/l, u'/l) of Z_{u/l}.
          for (const auto& t : sections(a)) {
            if (!is_subsection(t, s)) continue;
            const Section inner{s.order(), t.l / s.l, t.u / s.l};
            CHECK(restriction(rs, inner) == restriction(a, t));
          }
        }
      }
    }
  }
}

TEST_CASE("radical and generated subgroup") {
  CHECK(radical(8, ResidueSet(8, {1, 3, 5, 7})) == 4);
  CHECK(radical(8, ResidueSet(8, {4})) == 1);
  CHECK(radical(4, ResidueSet(4, {1, 3})) == 2);
  CHECK(generated(8, ResidueSet(8, {2, 6})) == 4);
  CHECK(generated(8, ResidueSet(8, {1, 3, 5, 7})) == 8);
  CHECK(generated(12, ResidueSet(12, {4, 8})) == 3);

  for (int n = 1; n <= 24; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      for (const auto& x : a.classes()) {
        int largest = 1;
        for (int d : divisors(n)) {
          bool fixes = true;
          subgroup(n, d).for_each([&](int h) { fixes = fixes && x.translated(h) == x; });
          if (fixes) largest = d;
        }
        CHECK(radical(n, x) == largest);
        CHECK(generated(n, x) == n / fixtures::gcd_all(n, x.elements()));
      }
    }
  }
}

TEST_CASE("inverse classes") {
  for (int n = 1; n <= 24; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      for (int i = 0; i < a.rank(); ++i) {
        CHECK(a.cls(a.neg_class(i)) == a.cls(i).negated());
        CHECK(a.cls(a.neg_class(i)).size() == a.cls(i).size());
      }
    }
  }
}

TEST_CASE("wreath products") {
  CHECK(is_wreath(w4(), 2, 2));
  CHECK_FALSE(is_wreath(SRing::full(4), 2, 2));
  for (int n = 1; n <= 12; ++n) {
    for (const auto& a : enumerate_srings(n)) CHECK(is_wreath(a, n, 1));
  }
  CHECK_THROWS_AS(is_wreath(r4(), 2, 2), Error);
}

TEST_CASE("tensor products") {
  CHECK(tensor(SRing::full(2), SRing::full(3)) == SRing::full(6));
  CHECK(tensor(SRing::full(2), SRing::rank_two(3)) == SRing::validate(6, {{0}, {3}, {2, 4}, {1, 5}}));
  CHECK(tensor(z5c(), SRing::full(1)) == z5c());
  CHECK_THROWS_AS(tensor(SRing::full(2), SRing::full(4)), Error);
  // Restricting a tensor product to its factors gives the factors back.
  for (const auto& a : enumerate_srings(4)) {
    for (const auto& b : enumerate_srings(5)) {
      const SRing t = tensor(a, b);
      CHECK(restriction(t, Section{20, 1, 4}) == a);
      CHECK(restriction(t, Section{20, 1, 5}) == b);
      CHECK(t.rank() == a.rank() * b.rank());
    }
  }
}
