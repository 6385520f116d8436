#ifndef ZLSPETS_REFLGRP_HPP
#define ZLSPETS_REFLGRP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zlspets/linalg.hpp"
#include "zlspets/lpoly.hpp"

namespace zlspets {

using CMat = Matrix<Cyc>;

// A supported family together with explicit reflection-representation
// generators. Crystallographic types (A, B2, G2 and I2(3/4/6), which map to
// those) use integral Cartan models; I2(m) otherwise uses the planar model
// over Q(zeta_m); C(e) and G(e,1,n) are diagonal/monomial over Q(zeta_e).
struct GroupSpec {
  enum class Family { CoxeterCartan, Dihedral, Cyclic, Imprimitive, SwapRank2, Product };

  Family family = Family::CoxeterCartan;
  std::string name;
  long rank = 0;
  long conductor = 1;      // conductor of matrix entries
  long e = 0, p = 1, n = 0;  // G(e,p,n) / C(e) / I2(m) parameter (m stored in e)
  std::vector<CMat> generators;
  std::vector<long> gen_orders;
  std::uint64_t expected_order = 0;
  std::vector<GroupSpec> factors;

  static GroupSpec parse(const std::string& text);
  static GroupSpec coxeter_A(int n);
  static GroupSpec coxeter_B2();
  static GroupSpec coxeter_G2();
  static GroupSpec dihedral(long m);   // I2(m); m in {3,4,6} resolves to Cartan types
  static GroupSpec cyclic(long e);
  static GroupSpec imprimitive(long e, long n);  // G(e,1,n)
  static GroupSpec swap_rank2();                 // S2 permuting two coordinates
  static GroupSpec product(const std::vector<GroupSpec>& parts);
};

struct Reflection {
  size_t elem = 0;        // element index
  long order = 0;         // order of the reflection
  Cyc eigenvalue;         // the non-unit eigenvalue (= det)
  bool distinguished = false;
  size_t hyperplane = 0;  // flat id of its fixed hyperplane
  size_t w_class = 0;     // conjugacy class id in W
};

struct ParabolicSubgroup {
  std::vector<size_t> elems;  // sorted element indices
  size_t flat = 0;            // fixed-space flat id
  size_t cls = 0;             // parabolic class id
};

struct ParabolicClass {
  size_t rep_subgroup = 0;     // index into all_parabolics
  long rank = 0;               // codimension of the fixed space
  std::uint64_t order = 0;     // |W0|
  std::uint64_t norm_index = 0;  // |N_W(W0) : W0|
  std::string label;
};

class ReflGroup {
 public:
  explicit ReflGroup(GroupSpec spec, std::uint64_t cap = 10000);

  const GroupSpec& spec() const { return spec_; }
  size_t size() const { return elems_.size(); }
  long rank() const { return spec_.rank; }
  const CMat& element(size_t i) const { return elems_[i]; }
  const std::vector<int>& word(size_t i) const { return words_[i]; }
  size_t word_length(size_t i) const { return words_[i].size(); }
  size_t num_gens() const { return spec_.generators.size(); }
  size_t gen_index(size_t g) const { return gen_elem_[g]; }

  size_t mul(size_t i, size_t j) const {
    for (int g : words_[j]) i = rmul_[i][g];
    return i;
  }
  size_t inv(size_t i) const { return inv_[i]; }
  size_t conjugate(size_t x, size_t w) const { return mul(mul(inv(w), x), w); }
  long element_order(size_t i) const;
  std::optional<size_t> index_of(const CMat& m) const;

  // conjugacy classes (computed on first use)
  const std::vector<std::vector<size_t>>& classes() const;
  size_t class_of(size_t i) const;
  size_t num_classes() const { return classes().size(); }
  size_t class_rep(size_t c) const { return classes()[c].front(); }

  const std::vector<Reflection>& reflections() const;
  // ids of distinct reflection conjugacy classes, in class order
  std::vector<size_t> reflection_classes() const;

  // parabolic machinery
  const std::vector<CMat>& flats() const;              // echelon bases of fixed spaces
  const std::vector<ParabolicSubgroup>& parabolics() const;
  const std::vector<ParabolicClass>& parabolic_classes() const;
  // class id for a subgroup given as a sorted element list; nullopt when the
  // subgroup is not parabolic
  std::optional<size_t> parabolic_class_of(const std::vector<size_t>& sorted_elems) const;
  // an element w with  w^-1 A w = B  for parabolic subgroups A, B (element lists)
  std::optional<size_t> conjugating_element(const std::vector<size_t>& a,
                                            const std::vector<size_t>& b) const;
  std::vector<size_t> subgroup_closure(std::vector<size_t> gens) const;

  // Molien-series data
  const std::vector<long>& invariant_degrees() const;
  LPoly poincare_polynomial() const;  // prod (x^{d_i}-1)/(x-1)

  std::string fingerprint() const;

 private:
  GroupSpec spec_;
  std::vector<CMat> elems_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<size_t>> rmul_;
  std::vector<size_t> inv_;
  std::vector<size_t> gen_elem_;

  mutable std::vector<std::vector<size_t>> classes_;
  mutable std::vector<size_t> class_of_;
  mutable std::vector<Reflection> reflections_;
  mutable bool reflections_done_ = false;
  mutable std::vector<CMat> flats_;
  mutable std::vector<ParabolicSubgroup> parabolics_;
  mutable std::vector<ParabolicClass> parabolic_classes_;
  mutable std::unordered_map<std::string, size_t> parabolic_lookup_;
  mutable bool parabolics_done_ = false;
  mutable std::vector<long> degrees_;

  void build(std::uint64_t cap);
  void compute_reflections() const;
  void compute_parabolics() const;
  void compute_degrees() const;
};

std::string matrix_key(const CMat& m);
CMat subspace_intersection(const CMat& a, const CMat& b);
CMat fixed_space(const CMat& m);  // basis rows of ker(m - 1)
CMat echelon_basis(CMat rows);

// spec-level entry point mirroring the external operation surface
std::shared_ptr<ReflGroup> build_group(const GroupSpec& spec, std::uint64_t cap = 10000);

}  // namespace zlspets

#endif
