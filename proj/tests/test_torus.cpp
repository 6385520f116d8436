#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "zlspets/chartab.hpp"
#include "zlspets/torus.hpp"

using namespace zlspets;

TEST_CASE("A1 torus at l=3: two orbits") {
  auto W = build_group(GroupSpec::parse("A1"));
  CHECK(admissible_prime(*W, 3));
  CHECK_FALSE(admissible_prime(*W, 2));
  auto T = torus_action(W, 3, 1);
  auto census = orbit_census(T, false);
  CHECK(census.orbits.size() == 2);
  CHECK(census.orbits[0].rep == 0);
  CHECK(census.orbits[0].size == 1);
  CHECK(census.orbits[1].size == 2);
  const auto& pc = W->parabolic_classes();
  CHECK(pc[census.orbits[0].stab_class].order == 2);
  CHECK(pc[census.orbits[1].stab_class].order == 1);
}

TEST_CASE("C3 torus at l=7: (7-1)/3 free orbits") {
  auto W = build_group(GroupSpec::parse("C(3)"));
  CHECK_FALSE(admissible_prime(*W, 5));  // 3 does not divide 5-1
  auto T = torus_action(W, 7, 1);
  auto census = orbit_census(T, false);
  int full = 0, free_orbits = 0;
  for (const auto& o : census.orbits) {
    if (o.stab.size() == 3) ++full;
    if (o.stab.size() == 1) ++free_orbits;
  }
  CHECK(full == 1);
  CHECK(free_orbits == 2);
}

TEST_CASE("dual and primal censuses agree as class multisets") {
  for (const char* name : {"A2", "B2", "G(3,1,2)"}) {
    auto W = build_group(GroupSpec::parse(name));
    std::uint64_t l = name[0] == 'G' ? 7 : 5;
    auto T = torus_action(W, l, 1);
    auto points = orbit_census(T, false);
    auto chars = orbit_census(T, true);
    CHECK(points.count_by_class == chars.count_by_class);
    std::uint64_t covered = 0;
    for (const auto& o : points.orbits) covered += o.size;
    CHECK(covered == T.points);
    auto match = equivariant_matching(T, chars, points);
    for (size_t ci = 0; ci < chars.orbits.size(); ++ci) {
      size_t pi = match.point_orbit_for[ci];
      CHECK(chars.orbits[ci].stab_class == points.orbits[pi].stab_class);
      if (!match.conjugator[ci]) CHECK(chars.orbits[ci].stab == points.orbits[pi].stab);
    }
    CHECK(chars.orbits[0].rep == 0);
    CHECK(points.orbits[match.point_orbit_for[0]].rep == 0);
  }
}

TEST_CASE("pairing is W-invariant") {
  auto W1 = build_group(GroupSpec::parse("A1"));
  auto T1 = torus_action(W1, 5, 1);
  for (std::uint64_t c = 0; c < T1.points; ++c)
    for (std::uint64_t t = 0; t < T1.points; ++t)
      for (size_t w = 0; w < W1->size(); ++w)
        CHECK(T1.pairing(T1.act_dual(w, c), T1.act(w, t)) == T1.pairing(c, t));

  auto W2 = build_group(GroupSpec::parse("G(3,1,2)"));
  auto T2 = torus_action(W2, 7, 1);
  for (std::uint64_t c = 0; c < T2.points; c += 5)
    for (std::uint64_t t = 0; t < T2.points; t += 7)
      for (size_t w = 0; w < W2->size(); ++w)
        CHECK(T2.pairing(T2.act_dual(w, c), T2.act(w, t)) == T2.pairing(c, t));
}

TEST_CASE("census size limit") {
  auto W = build_group(GroupSpec::parse("A2"));
  auto T = torus_action(W, 5, 1);
  CHECK_THROWS(orbit_census(T, false, 10));
}

TEST_CASE("semidirect class count matches clifford counting") {
  for (const char* name : {"A1", "A2", "B2"}) {
    auto W = build_group(GroupSpec::parse(name));
    auto T = torus_action(W, 5, 1);
    auto chars = orbit_census(T, true);
    std::uint64_t clifford = 0;
    for (const auto& o : chars.orbits) {
      auto sv = subgroup_view(std::shared_ptr<const ReflGroup>(W), o.stab);
      clifford += sv.group->num_classes();
    }
    CHECK(semidirect_class_count(T) == clifford);
  }
}
