#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "zlspets/block.hpp"

using namespace zlspets;

namespace {
std::shared_ptr<ReflGroup> grp(const char* name) { return build_group(GroupSpec::parse(name)); }
}  // namespace

TEST_CASE("SL2-type worked example: A1 at l=3, a=1") {
  auto B = build_block(grp("A1"), 3, 1);
  // dim(B0) = 2x^2 + 2x + 2, from the three block characters 1, x, x+1
  LPoly expect;
  expect.set(2, Cyc(rat(2)));
  expect.set(1, Cyc(rat(2)));
  expect.set(0, Cyc(rat(2)));
  CHECK(B.dim_poly == expect);
  CHECK(B.dim_poly.eval(rat(4)).rational_value() == 42);
  CHECK(B.dim_poly.eval(rat(7)).rational_value() == 114);  // 1 + 49 + 64

  auto v1 = check_conj1(B, rat(4));
  CHECK(v1.pass);
  auto v1b = check_conj1(B, rat(7));
  CHECK(v1b.pass);
  auto v2 = check_conj2(B, rat(4));
  CHECK(v2.pass);  // l'-part 14 == 2 (mod 3)
  auto v2b = check_conj2(B, rat(7));
  CHECK(v2b.pass);  // 38 == 2 (mod 3)

  CHECK_THROWS(check_conj1(B, rat(6)));   // divisible by 3
  CHECK_THROWS(check_conj1(B, rat(10)));  // v_3(9) = 2 != a
}

TEST_CASE("A1 general a: dim = 1 + x^2 + ((l^a-1)/2)(x+1)^2") {
  for (auto [l, a] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
    auto B = build_block(grp("A1"), l, a);
    std::uint64_t la = ipow(l, a);
    LPoly expect;
    long free_orbits = static_cast<long>((la - 1) / 2);
    expect.set(2, Cyc(rat(1 + free_orbits)));
    expect.set(1, Cyc(rat(2 * free_orbits)));
    expect.set(0, Cyc(rat(1 + free_orbits)));
    CHECK(B.dim_poly == expect);
  }
}

TEST_CASE("decomposition matrix of A1 at l=3") {
  auto B = build_block(grp("A1"), 3, 1);
  auto D = decomposition_matrix(B);
  REQUIRE(D.rows.size() == 3);
  CHECK(D.degree_identity);
  // rows: triv, sgn (unit vectors), induced row (1,1)
  int units = 0, allones = 0;
  for (const auto& r : D.rows) {
    long s = 0;
    for (long x : r.d) s += x;
    if (s == 1) ++units;
    if (s == 2 && r.d[0] == 1 && r.d[1] == 1) ++allones;
  }
  CHECK(units == 2);
  CHECK(allones == 1);
  // Phi_triv(4) = 6, Phi_sgn(4) = 9 up to the labelling of columns
  std::vector<Rat> vals;
  for (auto& phi : D.phi_degree) vals.push_back(phi.eval(rat(4)).rational_value());
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == 6);
  CHECK(vals[1] == 9);
  auto v3 = check_conj3(B, D, rat(4));
  CHECK(v3.pass);
}

TEST_CASE("C3 at l=7: irrational degrees assemble to a rational dimension") {
  auto B = build_block(grp("C(3)"), 7, 1);
  // dim(B0)(8) = 38185/3 with v_7 = 1
  Rat v = B.dim_poly.eval(rat(8)).rational_value();
  CHECK(v == Rat(38185) / Rat(3));
  auto v1 = check_conj1(B, rat(8));
  CHECK(v1.pass);
  auto v2 = check_conj2(B, rat(8));
  CHECK(v2.pass);
  auto D = decomposition_matrix(B);
  CHECK(D.degree_identity);
  // 3 + 2 rows: full-stabiliser rows and two free rows with all-ones
  REQUIRE(D.rows.size() == 5);
  int allones = 0;
  for (const auto& r : D.rows) {
    bool ones = true;
    for (long x : r.d)
      if (x != 1) ones = false;
    if (ones) ++allones;
  }
  CHECK(allones == 2);
  auto v3 = check_conj3(B, D, rat(8));
  CHECK(v3.pass);
}

TEST_CASE("conjecture suite on small configurations") {
  struct Cfg {
    const char* name;
    std::uint64_t l;
    unsigned a;
  };
  for (const Cfg& c : {Cfg{"A2", 5, 1}, Cfg{"B2", 3, 1}, Cfg{"G(3,1,2)", 7, 1},
                       Cfg{"I2(5)", 11, 1}, Cfg{"I2(6)", 5, 1}, Cfg{"C(4)", 5, 1}}) {
    auto B = build_block(grp(c.name), c.l, c.a);
    auto D = decomposition_matrix(B);
    CHECK(D.degree_identity);
    auto qs = default_q_samples(c.l, c.a, 2);
    for (const auto& q : qs) {
      INFO(c.name, " l=", c.l, " q=", q.get_str());
      CHECK(check_conj1(B, q).pass);
      CHECK(check_conj2(B, q).pass);
      CHECK(check_conj3(B, D, q).pass);
    }
  }
}

TEST_CASE("q sample selection") {
  auto qs = default_q_samples(3, 1, 3);
  REQUIRE(qs.size() == 3);
  CHECK(qs[0] == 4);
  CHECK(qs[1] == 7);
  CHECK(qs[2] == 13);
  auto qs2 = default_q_samples(3, 2, 2);
  // v_3(q-1) = 2 exactly: 10, 19, ...
  CHECK(qs2[0] == 19);  // 10 is not a prime power
  CHECK(qs2[1] == 37);
}
