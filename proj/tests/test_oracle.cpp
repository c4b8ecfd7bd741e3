#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sring/error.hpp"
#include "sring/modarith.hpp"
#include "sring/oracle.hpp"
#include "sring/sections.hpp"
#include "support.hpp"

using namespace sring;
using fixtures::a8;
using fixtures::r4;
using fixtures::w4;
using fixtures::z5c;

TEST_CASE("enumeration examples") {
  CHECK(enumerate_srings(1) == std::vector<SRing>{SRing::full(1)});
  CHECK(enumerate_srings(5).size() == 3);
  const auto four = enumerate_srings(4);
  for (const auto& a : {SRing::full(4), w4(), r4()}) CHECK(std::find(four.begin(), four.end(), a) != four.end());
  CHECK_THROWS_AS(enumerate_srings(37), Error);
  CHECK(enumerate_srings(40, OracleLimits{40, 20, 16}).size() > 0);
}

TEST_CASE("enumeration matches a search over all set partitions") {
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::vector<std::vector<int>>> expected;
    for (const auto& lists : fixtures::naive_enumerate(n)) expected.push_back(fixtures::sorted_lists(lists));
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<std::vector<int>>> got;
    for (const auto& a : enumerate_srings(n)) got.push_back(fixtures::sorted_lists(a));
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == expected, "n = " << n);
  }
}

TEST_CASE("enumeration output is sorted, distinct and valid") {
  for (int n = 1; n <= 36; ++n) {
    const auto all = enumerate_srings(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(std::find(all.begin(), all.end(), SRing::full(n)) != all.end());
    CHECK(std::find(all.begin(), all.end(), SRing::rank_two(n)) != all.end());
    for (const auto& a : all) CHECK(fixtures::naive_is_sring(n, a.class_lists()));
    // Orbit partitions of every unit subgroup are S-rings.
    for (const auto& m : unit_subgroups(n)) {
      std::vector<ResidueSet> orbits;
      ResidueSet seen(n);
      for (int x = 0; x < n; ++x) {
        if (seen.contains(x)) continue;
        ResidueSet o(n);
        for (int k : m) o.insert(mod(1LL * k * x, n));
        seen |= o;
        orbits.push_back(o);
      }
      CHECK(std::binary_search(all.begin(), all.end(), SRing::validate(n, orbits)));
    }
  }
}

TEST_CASE("enumeration over prime orders gives the orbit S-rings") {
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    CHECK(enumerate_srings(p).size() == divisors(p - 1).size());
  }
}

TEST_CASE("isomorphism search") {
  SUBCASE("units of the full S-ring give multiplication tables") {
    for (int n = 1; n <= 12; ++n) {
      const SRing f = SRing::full(n);
      for (int k : units(n).elements) {
        const auto phi = from_unit(f, k);
        REQUIRE(phi);
        const auto iso = find_isomorphism(f, f, *phi);
        REQUIRE(iso);
        for (int y = 0; y < n; ++y) CHECK(iso->table[static_cast<std::size_t>(y)] == mod(1LL * k * y, n));
      }
    }
  }
  SUBCASE("identity similarity gives the identity table") {
    for (const SRing& a : {z5c(), a8(), w4(), r4()}) {
      const auto iso = find_isomorphism(a, a, Similarity::identity(a.rank()));
      REQUIRE(iso);
      std::vector<int> id(static_cast<std::size_t>(a.order()));
      std::iota(id.begin(), id.end(), 0);
      CHECK(iso->table == id);
    }
  }
  SUBCASE("the swap of Z5c") {
    const SRing z = z5c();
    const Similarity swap{{0, 2, 1}};
    const auto iso = find_isomorphism(z, z, swap);
    REQUIRE(iso);
    CHECK(is_isomorphism(z, z, swap, *iso));
    CHECK(is_isomorphism(z, z, swap, Isomorphism{5, {0, 2, 4, 1, 3}}));
    CHECK_FALSE(is_isomorphism(z, z, swap, Isomorphism{5, {0, 1, 2, 3, 4}}));
  }
  CHECK_THROWS_AS(find_isomorphism(SRing::full(21), SRing::full(21), Similarity::identity(21)), Error);
}

TEST_CASE("realized similarities") {
  for (int n = 1; n <= 12; ++n) CHECK(phi_infty(SRing::full(n)).size() == static_cast<std::size_t>(euler_phi(n)));
  CHECK(phi_infty(z5c()).size() == 2);
  CHECK(is_separable_bruteforce(r4()));
  CHECK(is_separable_bruteforce(a8()));
  for (int n = 1; n <= 20; ++n) CHECK(is_separable_bruteforce(SRing::full(n)));
  for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    for (const auto& a : enumerate_srings(n)) CHECK(phi_infty(a) == similarities(a, a));
  }
}

TEST_CASE("intersection") {
  CHECK(intersect(a8(), a8()) == a8());
  for (int n = 1; n <= 12; ++n) {
    for (const auto& b : enumerate_srings(n)) {
      CHECK(intersect(SRing::full(n), b) == b);
      CHECK(intersect(b, SRing::rank_two(n)) == SRing::rank_two(n));
    }
  }
  CHECK(intersect(w4(), r4()) == r4());
}

TEST_CASE("coset S-rings and coset closure") {
  CHECK(is_coset_sring(w4()));
  CHECK_FALSE(is_coset_sring(z5c()));
  CHECK(coset_closure(SRing::full(8)).ring == SRing::full(8));
  CHECK(coset_closure(w4()).ring == w4());
  CHECK(coset_closure(z5c()).ring == SRing::full(5));
  CHECK(coset_closure(z5c()).is_coset);
  CHECK_THROWS_AS(coset_closure(SRing::full(17)), Error);

  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_srings(n);
    for (const auto& a : all) {
      const auto c = coset_closure(a);
      CHECK(refines(c.ring, a));
      if (is_quasidense(a)) CHECK(c.is_coset);
      for (const auto& b : all) {
        if (is_coset_sring(b) && refines(b, a)) CHECK(refines(b, c.ring));
      }
    }
  }
}
