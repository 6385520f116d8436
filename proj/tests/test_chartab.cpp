#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <map>

#include "doctest.h"
#include "zlspets/chartab.hpp"

using namespace zlspets;

namespace {
std::shared_ptr<ReflGroup> grp(const char* name) {
  return build_group(GroupSpec::parse(name));
}
}  // namespace

TEST_CASE("cyclic C3 table") {
  auto W = grp("C(3)");
  auto t = character_table(W);
  CHECK(t.num_chars() == 3);
  CHECK(t.degrees == std::vector<long>{1, 1, 1});
  for (const auto& row : t.rows)
    for (const auto& v : row) CHECK(v * v * v == Cyc::one());
  t.validate();
}

TEST_CASE("S3 table via class-algebra eigenvectors") {
  auto W = grp("A2");
  auto t = character_table(W);
  CHECK(t.degrees == std::vector<long>{1, 1, 2});
  t.validate();
}

TEST_CASE("G(3,1,2) table: 9 irreducibles, degrees {1x6, 2x3}") {
  auto W = grp("G(3,1,2)");
  auto t = character_table(W);
  CHECK(t.num_chars() == 9);
  std::map<long, int> mult;
  for (long d : t.degrees) ++mult[d];
  CHECK(mult[1] == 6);
  CHECK(mult[2] == 3);
  long sumsq = 0;
  for (long d : t.degrees) sumsq += d * d;
  CHECK(sumsq == 18);
  t.validate();
}

TEST_CASE("restriction multiplicities") {
  std::shared_ptr<const ReflGroup> W = grp("A2");
  auto tW = character_table(W);

  auto sub_elems = W->subgroup_closure({W->gen_index(0)});
  auto sv = subgroup_view(W, sub_elems);
  auto tS = character_table(sv.group);
  auto m = restriction_multiplicities(tW, tS, sv.to_parent);
  for (size_t chi = 0; chi < tW.num_chars(); ++chi) {
    long total = 0;
    for (size_t phi = 0; phi < tS.num_chars(); ++phi) total += m[phi][chi] * tS.degrees[phi];
    CHECK(total == tW.degrees[chi]);
  }
  // the 2-dimensional character restricts to triv + sgn
  size_t twodim = 2;
  CHECK(m[0][twodim] == 1);
  CHECK(m[1][twodim] == 1);

  // restriction to the trivial subgroup: <1, chi|_1> = chi(1)
  auto sv1 = subgroup_view(W, {0});
  auto t1 = character_table(sv1.group);
  auto m1 = restriction_multiplicities(tW, t1, sv1.to_parent);
  for (size_t chi = 0; chi < tW.num_chars(); ++chi) CHECK(m1[0][chi] == tW.degrees[chi]);

  // W0 = W: the identity matrix in some row order
  std::vector<size_t> all(W->size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto svW = subgroup_view(W, all);
  auto tWW = character_table(svW.group);
  auto mW = restriction_multiplicities(tW, tWW, svW.to_parent);
  long diag = 0, off = 0;
  for (size_t i = 0; i < tWW.num_chars(); ++i)
    for (size_t j = 0; j < tW.num_chars(); ++j) {
      if (mW[i][j] == 1)
        ++diag;
      else if (mW[i][j] != 0)
        ++off;
    }
  CHECK(diag == 3);
  CHECK(off == 0);
}

TEST_CASE("cache round trip") {
  std::string dir = "/tmp/zlspets_test_cache";
  setenv("ZLSPETS_CACHE_DIR", dir.c_str(), 1);
  auto W = grp("B2");
  auto t1 = character_table(W);
  auto t2 = character_table(W);
  CHECK(t1.degrees == t2.degrees);
  for (size_t i = 0; i < t1.rows.size(); ++i)
    for (size_t j = 0; j < t1.rows[i].size(); ++j) CHECK(t1.rows[i][j] == t2.rows[i][j]);
  unsetenv("ZLSPETS_CACHE_DIR");
}

TEST_CASE("dihedral tables: I2(5) and I2(6)") {
  auto t5 = character_table(grp("I2(5)"));
  std::map<long, int> m5;
  for (long d : t5.degrees) ++m5[d];
  CHECK(m5[1] == 2);
  CHECK(m5[2] == 2);
  t5.validate();

  auto t6 = character_table(grp("I2(6)"));
  std::map<long, int> m6;
  for (long d : t6.degrees) ++m6[d];
  CHECK(m6[1] == 4);
  CHECK(m6[2] == 2);
  t6.validate();
}

TEST_CASE("S4 table") {
  auto t = character_table(grp("A3"));
  CHECK(t.degrees == std::vector<long>{1, 1, 2, 3, 3});
  t.validate();
}
