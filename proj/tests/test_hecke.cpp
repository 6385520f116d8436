#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "zlspets/hecke.hpp"

using namespace zlspets;

namespace {
std::shared_ptr<ReflGroup> grp(const char* name) { return build_group(GroupSpec::parse(name)); }

RatFun rfp(const LPoly& p) { return RatFun(p); }
LPoly xp(long k) { return LPoly::x_power(k); }
LPoly one() { return LPoly::constant(Cyc::one()); }
}  // namespace

TEST_CASE("A1 engine: quadratic relation at q=4") {
  auto W = grp("A1");
  HeckeEngine<Cyc> H(W, Cyc(rat(4)));
  CHECK(H.dim() == 2);
  auto Ts = H.basis(W->gen_index(0));
  auto sq = H.mult(Ts, Ts);
  // T^2 = (q-1) T + q
  CHECK(sq[W->gen_index(0)] == Cyc(rat(3)));
  CHECK(sq[0] == Cyc(rat(4)));
  H.check_associativity();
}

TEST_CASE("C3 engine: cubic relation at q=4") {
  auto W = grp("C(3)");
  HeckeEngine<Cyc> H(W, Cyc(rat(4)));
  CHECK(H.dim() == 3);
  // (T-4)(T-z)(T-z^2) = 0, i.e. T^3 = (4+z+z^2) T^2 - (4z+4z^2+1) T + 4
  auto T = H.basis(W->gen_index(0));
  auto T3 = H.mult(H.mult(T, T), T);
  Cyc z = Cyc::zeta(3);
  auto expect = H.zero();
  Cyc e1 = Cyc(rat(4)) + z + z * z;
  Cyc e2 = Cyc(rat(4)) * z + Cyc(rat(4)) * (z * z) + z * z * z;
  auto T2 = H.mult(T, T);
  for (size_t i = 0; i < 3; ++i) expect[i] = e1 * T2[i] - e2 * T[i];
  expect[0] = expect[0] + Cyc(rat(4));
  for (size_t i = 0; i < 3; ++i) CHECK(T3[i] == expect[i]);
  H.check_associativity();
}

TEST_CASE("S3 engine at q=2: full associativity and gram symmetry") {
  auto W = grp("A2");
  HeckeEngine<Cyc> H(W, Cyc(rat(2)));
  H.check_associativity();  // 216 triples
  auto G = H.gram();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) CHECK(G(i, j) == G(j, i));
}

TEST_CASE("G(3,1,2) engine: dimension, associativity, gram symmetry") {
  auto W = grp("G(3,1,2)");
  HeckeEngine<Cyc> H(W, Cyc(rat(4)));
  CHECK(H.dim() == 18);
  H.check_associativity();  // all 5832 triples
  auto G = H.gram();
  for (size_t i = 0; i < 18; ++i)
    for (size_t j = 0; j < 18; ++j) CHECK(G(i, j) == G(j, i));
}

TEST_CASE("B2 engines agree: Coxeter model vs Ariki-Koike G(2,1,2)") {
  auto Wb = grp("B2");
  auto Wg = grp("G(2,1,2)");
  HeckeEngine<Cyc> Hb(Wb, Cyc(rat(3)));
  HeckeEngine<Cyc> Hg(Wg, Cyc(rat(3)));
  // identify generators: order-2 diagonal t0 <-> a simple reflection of B2
  // via an abstract isomorphism built from generator images
  // B2 generators: s1, s2; G(2,1,2) generators: t0 (order 2), s
  // map t0 -> s1 conjugacy may fail; instead compare canonical trace data:
  // both algebras are 8-dimensional with symmetric gram matrices and equal
  // multisets of gram determinants under the spetsial trace
  auto Gb = Hb.gram();
  auto Gg = Hg.gram();
  // determinants agree up to sign (basis permutation)
  // cheap invariant: multiset of diagonal entries of the gram matrix
  std::multiset<std::string> db, dg;
  for (size_t i = 0; i < 8; ++i) {
    db.insert(Gb(i, i).key());
    dg.insert(Gg(i, i).key());
  }
  CHECK(db == dg);
}

TEST_CASE("schur: cyclic C2 gives {x+1, (x+1)/x}") {
  auto W = grp("C(2)");
  auto t = schur_elements(W);
  REQUIRE(t.entries.size() == 2);
  std::map<std::string, RatFun> by_label;
  for (auto& e : t.entries) by_label[e.label] = e.f;
  CHECK(by_label["chi^0"] == rfp(xp(1) + one()));
  CHECK(by_label["chi^1"] == RatFun(xp(1) + one(), xp(1)));
}

TEST_CASE("schur: S3 hook formula") {
  auto W = grp("A2");
  auto t = schur_elements(W);
  REQUIRE(t.entries.size() == 3);
  LPoly p = (xp(1) + one()) * (xp(2) + xp(1) + one());
  std::map<std::string, RatFun> by_label;
  for (auto& e : t.entries) by_label[e.label] = e.f;
  CHECK(by_label["[3]"] == rfp(p));
  CHECK(by_label["[1,1,1]"] == RatFun(p, xp(3)));
  CHECK(by_label["[2,1]"] == RatFun(xp(2) + xp(1) + one(), xp(1)));
  // psi_1 cross-check: |W|/deg = (6, 6, 3)
  for (auto& e : t.entries)
    CHECK(e.f.eval(rat(1)) == Cyc(rat(6, e.degree)));
}

TEST_CASE("schur: B2 dihedral closed form") {
  auto W = grp("B2");
  auto t = schur_elements(W);
  REQUIRE(t.entries.size() == 5);
  std::map<std::string, RatFun> by_label;
  for (auto& e : t.entries) by_label[e.label] = e.f;
  LPoly p = (xp(1) + one()) * (xp(1) + one()) * (xp(2) + one());
  CHECK(by_label["triv"] == rfp(p));
  CHECK(by_label["sgn"] == RatFun(p, xp(4)));
  // f_eps = 2 (x+1)^2 / x
  LPoly eps_num = Cyc(rat(2)) * ((xp(1) + one()) * (xp(1) + one()));
  CHECK(by_label["eps1"] == RatFun(eps_num, xp(1)));
  CHECK(by_label["eps2"] == RatFun(eps_num, xp(1)));
  // f_rho = 2 (x^2+1)/x
  LPoly rho_num = Cyc(rat(2)) * (xp(2) + one());
  CHECK(by_label["rho1"] == RatFun(rho_num, xp(1)));
}

TEST_CASE("schur: G(2,1,2) seminormal solve matches the dihedral table") {
  auto t1 = schur_elements(grp("G(2,1,2)"));
  auto t2 = schur_elements(grp("B2"));
  // compare multisets of (degree, f) pairs through a canonical value probe
  auto key = [](const SchurEntry& e) {
    Cyc probe = e.f.eval(rat(5)) + Cyc(rat(1000 * e.degree));
    return probe.key();
  };
  std::multiset<std::string> k1, k2;
  for (auto& e : t1.entries) k1.insert(key(e));
  for (auto& e : t2.entries) k2.insert(key(e));
  CHECK(k1 == k2);
}

TEST_CASE("schur: trivial group") {
  auto W = grp("A1");
  std::shared_ptr<const ReflGroup> cw = W;
  auto sv = subgroup_view(cw, {0});
  auto t = schur_for_stabiliser(cw, sv);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].f == rfp(one()));
}

TEST_CASE("verify_schur across the target families") {
  for (const char* name : {"A1", "A2", "A3", "C(2)", "C(3)", "C(4)", "C(5)", "C(6)",
                           "I2(5)", "I2(6)", "B2", "G(3,1,2)"}) {
    auto W = grp(name);
    auto table = schur_elements(W);
    for (long q : {2, 4, 9}) {
      HeckeEngine<Cyc> H(W, Cyc(rat(q)));
      auto res = verify_schur(H, table, rat(q));
      INFO(name, " at q=", q, ": ", res.detail);
      CHECK(res.pass);
      // non-vanishing at the sample
      for (auto& e : table.entries) CHECK_FALSE(e.f.eval(rat(q)).is_zero());
    }
  }
}

TEST_CASE("verify_schur detects wrong tables") {
  auto W = grp("A2");
  auto table = schur_elements(W);
  table.entries[2].f = table.entries[2].f * rfp(xp(1) + one());  // corrupt
  HeckeEngine<Cyc> H(W, Cyc(rat(2)));
  auto res = verify_schur(H, table, rat(2));
  CHECK_FALSE(res.pass);
}

TEST_CASE("spec worked example: S2 z-eigenvalues at q=4") {
  auto W = grp("A1");
  auto table = schur_elements(W);
  // eigenvalues phi(1) f_phi(4) = {5, 5/4}
  std::set<std::string> vals;
  for (auto& e : table.entries) vals.insert(e.f.eval(rat(4)).key());
  CHECK(vals.count(Cyc(rat(5)).key()) == 1);
  CHECK(vals.count(Cyc(rat(5, 4)).key()) == 1);
  HeckeEngine<Cyc> H(W, Cyc(rat(4)));
  CHECK(verify_schur(H, table, rat(4)).pass);
}

TEST_CASE("parabolic restriction of the canonical trace") {
  // A1 inside A2 at q=2, both standard positions
  {
    auto W = grp("A2");
    HeckeEngine<Cyc> H(W, Cyc(rat(2)));
    auto A1 = grp("A1");
    HeckeEngine<Cyc> h(A1, Cyc(rat(2)));
    CHECK(check_parabolic_restriction(H, h, {H.basis(W->gen_index(0))}));
    CHECK(check_parabolic_restriction(H, h, {H.basis(W->gen_index(1))}));
  }
  // both parabolic C2 positions in G(2,1,2) (B2 type) at q=3: the standard
  // generator T0 and the conjugate section T1 T0 T1^{-1} for t0'
  {
    auto W = grp("G(2,1,2)");
    HeckeEngine<Cyc> H(W, Cyc(rat(3)));
    auto C = grp("C(2)");
    HeckeEngine<Cyc> h(C, Cyc(rat(3)));
    auto T0 = H.basis(W->gen_index(0));
    CHECK(check_parabolic_restriction(H, h, {T0}));
    auto T1 = H.basis(W->gen_index(1));
    // T1^{-1} = (T1 - (q-1)) / q
    auto T1inv = T1;
    T1inv[0] = T1inv[0] - Cyc(rat(2));
    for (auto& c : T1inv) c = Cyc(rat(1, 3)) * c;
    auto L2 = H.mult(H.mult(T1, T0), T1inv);
    CHECK(check_parabolic_restriction(H, h, {L2}));
  }
  // C3 inside G(3,1,2) at q=4
  {
    auto W = grp("G(3,1,2)");
    HeckeEngine<Cyc> H(W, Cyc(rat(4)));
    auto C = grp("C(3)");
    HeckeEngine<Cyc> h(C, Cyc(rat(4)));
    CHECK(check_parabolic_restriction(H, h, {H.basis(W->gen_index(0))}));
  }
  // trivial subgroup: t(1) = 1
  {
    auto W = grp("A1");
    HeckeEngine<Cyc> H(W, Cyc(rat(4)));
    CHECK(H.trace(H.unit()) == Cyc::one());
  }
}

TEST_CASE("brauer reciprocity: spec examples") {
  // W = S2, W_s = 1: 1/(q+1) + q/(q+1) = 1
  {
    std::shared_ptr<const ReflGroup> W = grp("A1");
    auto res = check_brauer_reciprocity(W, {0}, {rat(2), rat(4), rat(9)});
    CHECK(res.pass);
    // W_s = W
    std::vector<size_t> all{0, 1};
    auto res2 = check_brauer_reciprocity(W, all, {rat(2), rat(4), rat(9)});
    CHECK(res2.pass);
  }
  // W = S3, W_s = S2 at q=2: 1/f_triv + 1/f_(2,1) = 1/3
  {
    std::shared_ptr<const ReflGroup> W = grp("A2");
    auto sub = W->subgroup_closure({W->gen_index(0)});
    auto res = check_brauer_reciprocity(W, sub, {rat(2), rat(4), rat(9)});
    CHECK(res.pass);
    auto table = schur_elements(W);
    Cyc lhs;
    for (auto& e : table.entries)
      if (e.label == "[3]" || e.label == "[2,1]") lhs = lhs + e.f.eval(rat(2)).inverse();
    CHECK(lhs == Cyc(rat(1, 3)));
  }
}

TEST_CASE("poincare polynomial is the trivial schur element") {
  for (const char* name : {"A2", "B2", "I2(5)", "G(3,1,2)", "C(4)"}) {
    auto W = grp(name);
    auto table = schur_elements(W);
    LPoly p = W->poincare_polynomial();
    bool found = false;
    for (auto& e : table.entries) {
      bool is_triv = true;
      for (auto& v : e.char_values)
        if (!(v == Cyc::one())) is_triv = false;
      if (is_triv) {
        CHECK(e.f == RatFun(p));
        found = true;
      }
    }
    CHECK(found);
  }
}
