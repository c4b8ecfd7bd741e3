#include <algorithm>
#include <random>

#include "doctest.h"
#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/oracle.hpp"
#include "sring/sections.hpp"
#include "support.hpp"

using namespace sring;
using fixtures::a8;
using fixtures::r4;
using fixtures::z5c;

namespace {

// The canonical isomorphism S -> T through the largest section of their class:
// a generator of S is (u0/u_S) times a generator of the largest section S0.
int f_unit_via_largest(const Section& s, const Section& t) {
  const auto all = all_sections(s.n);
  Section top = s;
  for (const auto& x : all) {
    if (projectively_equivalent(x, s) && is_multiple(x, s) && is_multiple(x, t)) {
      bool covers = true;
      for (const auto& y : all) {
        if (projectively_equivalent(y, s) && !is_multiple(x, y)) covers = false;
      }
      if (covers) top = x;
    }
  }
  const int m = s.order();
  return reduce_unit(1LL * (top.u / s.u) * inverse_mod(reduce_unit(top.u / t.u, m), m), m);
}

ResidueSet map_coords(const ResidueSet& x, int c) { return x.scaled(c); }

}  // namespace

TEST_CASE("multiple relation") {
  CHECK(is_multiple(Section{12, 3, 12}, Section{12, 1, 4}));
  CHECK_FALSE(is_multiple(Section{8, 2, 4}, Section{8, 1, 2}));
  for (int n = 1; n <= 36; ++n) {
    for (const auto& s : all_sections(n)) {
      CHECK(is_multiple(s, s));
      for (const auto& t : all_sections(n)) {
        if (is_multiple(t, s)) CHECK(t.order() == s.order());
      }
    }
  }
}

TEST_CASE("projective classes") {
  SUBCASE("prime powers have singleton nontrivial classes") {
    for (int n : {2, 4, 8, 9, 16, 27, 32}) {
      const auto all = all_sections(n);
      for (const auto& pc : proj_classes(n, all)) {
        if (pc.order() > 1) CHECK(pc.members.size() == 1);
      }
    }
  }
  const std::vector<Section> pair{{12, 1, 2}, {12, 3, 6}};
  const auto one = proj_classes(12, pair);
  REQUIRE(one.size() == 1);
  CHECK(one[0].members == pair);
  CHECK(one[0].smallest == Section{12, 1, 2});
  CHECK(one[0].largest == Section{12, 3, 6});
  const std::vector<Section> apart{{12, 1, 2}, {12, 2, 4}};
  CHECK(proj_classes(12, apart).size() == 2);

  SUBCASE("every class of all sections has a smallest and a largest member") {
    for (int n = 1; n <= 36; ++n) {
      const auto all = all_sections(n);
      for (const auto& pc : proj_classes(n, all)) {
        CHECK(pc.smallest.has_value());
        CHECK(pc.largest.has_value());
      }
    }
  }
}

TEST_CASE("canonical projective units") {
  CHECK(f_unit(Section{12, 1, 4}, Section{12, 3, 12}) == 3);
  CHECK(f_unit(Section{12, 1, 2}, Section{12, 3, 6}) == 1);
  CHECK_THROWS_AS(f_unit(Section{12, 1, 2}, Section{12, 2, 4}), Error);
  std::mt19937 rng(11);
  for (int n : {6, 12, 18, 24, 30, 36}) {
    const auto all = all_sections(n);
    for (const auto& s : all) {
      CHECK(f_unit(s, s) == 1);
      for (const auto& t : all) {
        if (!projectively_equivalent(s, t) || s.order() != t.order()) continue;
        const int m = s.order();
        const int c = f_unit(s, t);
        CHECK(units(m).contains(c));
        CHECK(c == f_unit_via_largest(s, t));
        CHECK(reduce_unit(1LL * c * f_unit(t, s), m) == reduce_unit(1, m));
        const auto& r = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        if (projectively_equivalent(s, r)) {
          CHECK(reduce_unit(1LL * f_unit(s, r) * f_unit(r, t), m) == c);
        }
      }
    }
  }
}

TEST_CASE("principal sections") {
  CHECK(principal_sections(a8()) == std::vector<Section>{{8, 1, 1}, {8, 1, 2}, {8, 2, 4}, {8, 4, 8}});
  CHECK(principal_sections(r4()) == std::vector<Section>{{4, 1, 1}, {4, 1, 4}});
  for (int n = 1; n <= 24; ++n) {
    std::vector<Section> expected;
    for (int d : divisors(n)) expected.push_back({n, 1, d});
    CHECK(principal_sections(SRing::full(n)) == expected);
  }

  SUBCASE("a class has trivial radical in its principal section") {
    for (int n = 1; n <= 24; ++n) {
      for (const auto& a : enumerate_srings(n)) {
        for (const auto& x : a.classes()) {
          const Section p{n, radical(n, x), generated(n, x)};
          CHECK(is_a_section(a, p));
          CHECK(radical(p.order(), project(p, x)) == 1);
        }
      }
    }
  }
}

TEST_CASE("frs0") {
  CHECK(frs0(a8()) == std::vector<Section>{{8, 1, 1}, {8, 1, 2}, {8, 2, 2}, {8, 2, 4}, {8, 4, 4}, {8, 4, 8}, {8, 8, 8}});
  CHECK(frs0(z5c()) == std::vector<Section>{{5, 1, 1}, {5, 1, 5}, {5, 5, 5}});
  for (int n = 1; n <= 24; ++n) CHECK(frs0(SRing::full(n)) == all_sections(n));
}

TEST_CASE("quasidensity") {
  CHECK_FALSE(is_quasidense(r4()));
  CHECK(is_quasidense(a8()));
  for (int n = 1; n <= 30; ++n) CHECK(is_quasidense(SRing::full(n)));
  for (int n = 1; n <= 24; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      bool expected = true;
      for (const auto& s : sections(a)) {
        if (restriction(a, s).rank() == 2 && is_composite(s.order())) expected = false;
      }
      CHECK(is_quasidense(a) == expected);
      CHECK(singular_witness(a).has_value() == !expected);
    }
  }
}

TEST_CASE("singular witnesses") {
  const auto w = singular_witness(r4());
  REQUIRE(w);
  CHECK(w->smallest == Section{4, 1, 4});
  CHECK(w->cls.members == std::vector<Section>{{4, 1, 4}});
  CHECK_FALSE(singular_witness(a8()));
  CHECK_FALSE(singular_witness(z5c()));
  for (int n = 1; n <= 36; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      const auto sw = singular_witness(a);
      if (!sw) continue;
      CHECK(restriction(a, sw->found).rank() == 2);
      CHECK(is_composite(sw->found.order()));
      CHECK(restriction(a, sw->smallest).rank() == 2);
    }
  }
}

TEST_CASE("S-extension and reduction") {
  CHECK(s_extension(r4(), Section{4, 1, 4}) == SRing::full(4));
  CHECK(s_extension(a8(), Section{8, 1, 1}) == a8());
  CHECK(s_extension(a8(), Section{8, 2, 4}) == a8());
  CHECK_THROWS_AS(s_extension(r4(), Section{4, 1, 2}), Error);

  const auto red = reduce_to_quasidense(r4());
  CHECK(red.result == SRing::full(4));
  CHECK(red.trace == std::vector<Section>{{4, 1, 4}});
  CHECK(reduce_to_quasidense(a8()).trace.empty());
  CHECK(reduce_to_quasidense(SRing::full(12)).result == SRing::full(12));

  for (int n = 1; n <= 36; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      for (const auto& s : sections(a)) {
        const SRing e = s_extension(a, s);
        CHECK(refines(e, a));
        CHECK(restriction(e, s) == SRing::full(s.order()));
      }
      const auto r = reduce_to_quasidense(a);
      CHECK(is_quasidense(r.result));
      CHECK(static_cast<int>(r.trace.size()) < n);
      CHECK(r.ranks.size() == r.trace.size() + 1);
      for (std::size_t i = 0; i + 1 < r.ranks.size(); ++i) CHECK(r.ranks[i] < r.ranks[i + 1]);
    }
  }
}

TEST_CASE("equivalent A-sections carry the same restriction") {
  for (int n = 1; n <= 36; ++n) {
    for (const auto& a : enumerate_srings(n)) {
      const auto secs = sections(a);
      for (const auto& s : secs) {
        for (const auto& t : secs) {
          if (s.order() < 2 || s.order() != t.order() || !projectively_equivalent(s, t)) continue;
          const SRing rs = restriction(a, s);
          const SRing rt = restriction(a, t);
          const int c = f_unit(s, t);
          std::vector<ResidueSet> moved;
          for (const auto& x : rs.classes()) moved.push_back(map_coords(x, c));
          CHECK(SRing::validate(s.order(), moved) == rt);
        }
      }
    }
  }
}

TEST_CASE("transport of subsections") {
  for (int n : {12, 24, 30, 36}) {
    const auto all = all_sections(n);
    for (const auto& s : all) {
      for (const auto& t : all) {
        if (s.order() < 2 || !projectively_equivalent(s, t) || s == t || !is_multiple(t, s)) continue;
        // For a multiple step, a subsection S' of S goes to S' + L_T, itself a multiple of S'.
        for (const auto& sp : all) {
          if (!is_subsection(sp, s)) continue;
          const Section tp{n, lcm(sp.l, t.l), lcm(sp.u, t.l)};
          CHECK(is_subsection(tp, t));
          CHECK(is_multiple(tp, sp));
          CHECK(f_unit(sp, tp) == reduce_unit(f_unit(s, t), sp.order()));
        }
      }
    }
  }
}
