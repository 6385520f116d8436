#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "zlspets/reflgrp.hpp"

using namespace zlspets;

TEST_CASE("cyclic group C3") {
  auto W = build_group(GroupSpec::parse("C(3)"));
  CHECK(W->size() == 3);
  CHECK(W->reflections().size() == 2);
  // one hyperplane, the distinguished reflection is the zeta_3 generator
  int distinguished = 0;
  for (const auto& r : W->reflections())
    if (r.distinguished) {
      ++distinguished;
      CHECK(r.order == 3);
      CHECK(r.eigenvalue == Cyc::zeta(3));
    }
  CHECK(distinguished == 1);
  CHECK(W->invariant_degrees() == std::vector<long>{3});
}

TEST_CASE("symmetric group S3 in the rank-2 reflection representation") {
  auto W = build_group(GroupSpec::parse("A2"));
  CHECK(W->size() == 6);
  CHECK(W->rank() == 2);
  auto refl = W->reflections();
  CHECK(refl.size() == 3);
  CHECK(W->reflection_classes().size() == 1);
  for (const auto& r : refl) {
    CHECK(r.order == 2);
    CHECK(r.distinguished);
  }
  CHECK(W->invariant_degrees() == std::vector<long>{2, 3});
  // Poincare polynomial equals the length generating function
  LPoly p = W->poincare_polynomial();
  std::map<long, long> by_len;
  for (size_t i = 0; i < W->size(); ++i) ++by_len[static_cast<long>(W->word_length(i))];
  LPoly lengths;
  for (auto [len, cnt] : by_len) lengths = lengths + Cyc(rat(cnt)) * LPoly::x_power(len);
  CHECK(p == lengths);
  CHECK(p.eval(rat(1)).rational_value() == 6);
}

TEST_CASE("G(3,1,2) structure") {
  auto W = build_group(GroupSpec::parse("G(3,1,2)"));
  CHECK(W->size() == 18);
  auto refl = W->reflections();
  int order2 = 0, order3 = 0;
  for (const auto& r : refl) {
    if (r.order == 2) ++order2;
    if (r.order == 3) ++order3;
  }
  CHECK(order2 == 3);
  CHECK(order3 == 4);
  CHECK(refl.size() == 7);
  // reflection classes: transpositions; diagonal zeta; diagonal zeta^2
  auto rc = W->reflection_classes();
  CHECK(rc.size() == 3);
  std::map<size_t, int> class_sizes;
  for (const auto& r : refl) ++class_sizes[r.w_class];
  std::vector<int> sizes;
  for (auto& [c, s] : class_sizes) sizes.push_back(s);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 2, 3});
  CHECK(W->invariant_degrees() == std::vector<long>{3, 6});
}

TEST_CASE("parabolic classes") {
  auto W1 = build_group(GroupSpec::parse("A1"));
  auto pc1 = W1->parabolic_classes();
  CHECK(pc1.size() == 2);
  std::map<std::uint64_t, std::uint64_t> order_to_normidx;
  for (const auto& c : pc1) order_to_normidx[c.order] = c.norm_index;
  CHECK(order_to_normidx[1] == 2);
  CHECK(order_to_normidx[2] == 1);

  auto W2 = build_group(GroupSpec::parse("A2"));
  auto pc2 = W2->parabolic_classes();
  CHECK(pc2.size() == 3);
  std::map<std::uint64_t, std::uint64_t> m2;
  for (const auto& c : pc2) m2[c.order] = c.norm_index;
  CHECK(m2[1] == 6);
  CHECK(m2[2] == 1);  // N_{S3}(S2) = S2
  CHECK(m2[6] == 1);

  auto We = build_group(GroupSpec::parse("C(4)"));
  CHECK(We->parabolic_classes().size() == 2);

  auto Wb = build_group(GroupSpec::parse("B2"));
  auto pcb = Wb->parabolic_classes();
  // trivial, two non-conjugate A1 classes, B2
  CHECK(pcb.size() == 4);
  int a1classes = 0;
  for (const auto& c : pcb)
    if (c.order == 2) ++a1classes;
  CHECK(a1classes == 2);

  auto Wg = build_group(GroupSpec::parse("G(3,1,2)"));
  auto pcg = Wg->parabolic_classes();
  CHECK(pcg.size() == 4);  // 1, C3, A1, G(3,1,2)
  std::vector<std::uint64_t> orders;
  for (const auto& c : pcg) orders.push_back(c.order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 3, 18});
}

TEST_CASE("dihedral I2(5) over Q(zeta_5)") {
  auto W = build_group(GroupSpec::parse("I2(5)"));
  CHECK(W->size() == 10);
  CHECK(W->reflections().size() == 5);
  CHECK(W->reflection_classes().size() == 1);
  CHECK(W->invariant_degrees() == std::vector<long>{2, 5});
}

TEST_CASE("I2(6) resolves to the rational G2 model") {
  auto W = build_group(GroupSpec::parse("I2(6)"));
  CHECK(W->size() == 12);
  CHECK(W->spec().conductor == 1);
  CHECK(W->invariant_degrees() == std::vector<long>{2, 6});
  CHECK(W->reflection_classes().size() == 2);
}

TEST_CASE("products and the enumeration cap") {
  auto W = build_group(GroupSpec::parse("A1xA1"));
  CHECK(W->size() == 4);
  CHECK(W->invariant_degrees() == std::vector<long>{2, 2});
  CHECK_THROWS(build_group(GroupSpec::parse("A3"), 10));
}

TEST_CASE("steinberg property of parabolic subgroups on rank <= 2") {
  for (const char* name : {"A2", "B2", "G(3,1,2)", "I2(5)"}) {
    auto W = build_group(GroupSpec::parse(name));
    for (const auto& p : W->parabolics()) {
      std::vector<size_t> rgens;
      for (const auto& r : W->reflections())
        if (std::binary_search(p.elems.begin(), p.elems.end(), r.elem)) rgens.push_back(r.elem);
      auto closure = W->subgroup_closure(rgens);
      CHECK(closure == p.elems);
    }
  }
}

TEST_CASE("parabolics of parabolics stay in the class list (rank <= 2)") {
  // every parabolic of a parabolic is a parabolic of W: flats are closed
  // under the sub-arrangement intersections in rank <= 2
  auto W = build_group(GroupSpec::parse("B2"));
  for (const auto& p : W->parabolics()) {
    // elements of p that are reflections generate its "sub-parabolics"
    std::vector<size_t> rfl;
    for (const auto& r : W->reflections())
      if (std::binary_search(p.elems.begin(), p.elems.end(), r.elem)) rfl.push_back(r.elem);
    for (size_t r : rfl) {
      auto sub = W->subgroup_closure({r});
      CHECK(W->parabolic_class_of(sub).has_value());
    }
  }
}
