#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "zlspets/cyclotomic.hpp"
#include "zlspets/linalg.hpp"
#include "zlspets/lpoly.hpp"
#include "zlspets/padic.hpp"
#include "zlspets/rational.hpp"

using namespace zlspets;

TEST_CASE("l-adic valuation split") {
  auto s = l_valuation_split(rat(42), 3);
  CHECK(s.v == 1);
  CHECK(s.l_part == rat(3));
  CHECK(s.lprime_part == rat(14));

  auto t = l_valuation_split(rat(1), 5);
  CHECK(t.v == 0);
  CHECK(t.lprime_part == rat(1));

  auto u = l_valuation_split(rat(9, 2), 3);
  CHECK(u.v == 2);
  CHECK(u.l_part == rat(9));
  CHECK(u.lprime_part == rat(1, 2));

  CHECK_THROWS(l_valuation_split(rat(0), 3));

  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    long num = static_cast<long>(rng() % 2000) - 1000;
    long den = static_cast<long>(rng() % 999) + 1;
    if (num == 0) num = 7;
    Rat r = rat(num, den);
    auto sp = l_valuation_split(r, 7);
    CHECK(sp.l_part * sp.lprime_part == r);
    CHECK(valuation(sp.lprime_part, 7) == 0);
  }
}

TEST_CASE("teichmueller lifts of roots of unity") {
  auto a = lift_root_of_unity(7, 1, 3);
  CHECK(a.value == 2);  // g=3, 3^2 = 2 mod 7, order 3
  auto b = lift_root_of_unity(3, 2, 2);
  CHECK(b.value == 8);  // -1 mod 9
  auto c = lift_root_of_unity(7, 2, 3);
  CHECK(c.value == 30);  // unique cube root of 1 over Z/49 lifting 2

  CHECK_THROWS(lift_root_of_unity(7, 1, 4));  // 4 does not divide 6

  for (std::uint64_t l : {5ull, 7ull, 11ull, 13ull}) {
    for (unsigned aa = 1; aa <= 2; ++aa) {
      for (std::uint64_t e = 1; e <= l - 1; ++e) {
        if ((l - 1) % e) continue;
        auto u = lift_root_of_unity(l, aa, e);
        CHECK(mult_order(u.value, u.modulus) == e);
        CHECK(powmod(u.value, e, u.modulus) == 1);
      }
    }
  }
}

TEST_CASE("cyclotomic arithmetic") {
  Cyc z3 = Cyc::zeta(3);
  CHECK(z3 * z3 * z3 == Cyc::one());
  CHECK_FALSE(z3 == Cyc::one());
  CHECK_FALSE(z3 * z3 == Cyc::one());
  // 1 + z + z^2 = 0
  CHECK((Cyc::one() + z3 + z3 * z3).is_zero());

  Cyc z12 = Cyc::zeta(12);
  CHECK(z12.root_of_unity_order(24) == 12);
  // zeta_12^4 = zeta_3
  CHECK(Cyc::zeta_pow(12, 4) == z3);

  // field axioms on random elements of Q(zeta_5)
  std::mt19937 rng(7);
  auto rnd = [&] {
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) c.push_back(rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4));
    return Cyc(5, c);
  };
  for (int i = 0; i < 50; ++i) {
    Cyc a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc::one());
  }

  // conjugation and embedding
  Cyc z5 = Cyc::zeta(5);
  CHECK(z5.conj() == Cyc::zeta_pow(5, 4));
  CHECK(z5.embedded(15) * Cyc::zeta_pow(15, 5) == Cyc::zeta_pow(15, 8));

  // residue image: zeta_3 -> order-3 unit mod 7
  auto r = z3.residue_image(7, 1);
  CHECK(mult_order(r.value, 7) == 3);
  CHECK(r.value == 2);  // smallest primitive root convention: 3^2 = 2
}

TEST_CASE("laurent polynomials and evaluation") {
  LPoly p = LPoly::x_power(2) + LPoly::x_power(1) + LPoly::constant(Cyc::one());
  CHECK(p.eval(rat(2)).rational_value() == 7);

  LPoly q = Cyc(rat(2)) * p;
  CHECK(q.eval(rat(4)).rational_value() == 42);

  CHECK(LPoly::constant(Cyc::one()).eval(rat(123)).rational_value() == 1);

  // eval commutes with ring operations
  std::mt19937 rng(99);
  auto rndpoly = [&] {
    LPoly f;
    for (int i = 0; i < 4; ++i)
      f.set(static_cast<long>(rng() % 7) - 2, Cyc(rat(static_cast<long>(rng() % 11) - 5)));
    return f;
  };
  for (int i = 0; i < 40; ++i) {
    LPoly a = rndpoly(), b = rndpoly();
    Rat q0 = rat(1 + static_cast<long>(rng() % 6));
    CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
    CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
  }

  // y-variable with x = y^2: x + 1 evaluated at q = 9 via root 3
  LPoly f(2);
  f.set(2, Cyc::one());
  f.set(0, Cyc::one());
  Rat root = rat(3);
  CHECK(f.eval(rat(9), &root).rational_value() == 10);
  Rat bad = rat(2);
  CHECK_THROWS(f.eval(rat(9), &bad));
  CHECK(f.is_polynomial_in_x());
  LPoly g(2);
  g.set(1, Cyc::one());  // = x^(1/2)
  CHECK_FALSE(g.is_polynomial_in_x());
  CHECK_THROWS(g.as_x_polynomial());
}

TEST_CASE("rational functions") {
  // (x^2-1)/(x-1) = x+1
  LPoly num = LPoly::x_power(2) - LPoly::constant(Cyc::one());
  LPoly den = LPoly::x_power(1) - LPoly::constant(Cyc::one());
  RatFun r(num, den);
  CHECK(r.is_lpoly());
  LPoly p = r.as_lpoly();
  CHECK(p == LPoly::x_power(1) + LPoly::constant(Cyc::one()));
  CHECK(r.eval(rat(4)).rational_value() == 5);

  RatFun a(LPoly::constant(Cyc::one()), LPoly::x_power(1) + LPoly::constant(Cyc::one()));
  RatFun b(LPoly::x_power(1), LPoly::x_power(1) + LPoly::constant(Cyc::one()));
  CHECK(a + b == RatFun(LPoly::constant(Cyc::one())));
  CHECK((a * a.inverse()) == RatFun(LPoly::constant(Cyc::one())));
}

TEST_CASE("exact matrices") {
  Matrix<Rat> m(2, 2, Rat(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  auto inv = m.inverse();
  auto id = Matrix<Rat>::identity(2, Rat(0), Rat(1));
  CHECK(m * inv == id);
  CHECK(m.rank() == 2);

  Matrix<Cyc> c(2, 2, Cyc());
  c(0, 0) = Cyc::zeta(3);
  c(1, 1) = Cyc::one();
  c(0, 1) = Cyc::one();
  CHECK(c.rank() == 2);
  CHECK((c * c.inverse()) == Matrix<Cyc>::identity(2, Cyc(), Cyc::one()));

  Matrix<Rat> sing(2, 2, Rat(0));
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK(sing.rank() == 1);
  auto ker = sing.kernel();
  CHECK(ker.size() == 1);
  CHECK(sing(0, 0) * ker[0][0] + sing(0, 1) * ker[0][1] == 0);
}
