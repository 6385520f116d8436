#ifndef ZLSPETS_HECKE_HPP
#define ZLSPETS_HECKE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zlspets/chartab.hpp"
#include "zlspets/linalg.hpp"
#include "zlspets/reflgrp.hpp"

namespace zlspets {

// scalar embedding of cyclotomic constants into the working field
inline Cyc f_from_cyc(const Cyc& c, const Cyc*) { return c; }
inline RatFun f_from_cyc(const Cyc& c, const RatFun*) { return RatFun::constant(c); }

// Standard-basis engine for the specialised Hecke algebra of W at the
// spetsial parameters: the parameter of index o(r) is q, the others are the
// corresponding roots of unity. The basis is indexed by group elements; the
// canonical trace is the coefficient of the identity.
//
// Works over Cyc (fixed rational q) and over RatFun (generic q = x).
template <class F>
class HeckeEngine {
 public:
  using Vec = std::vector<F>;

  HeckeEngine(std::shared_ptr<const ReflGroup> W, F qval);

  const ReflGroup& group() const { return *W_; }
  std::shared_ptr<const ReflGroup> group_ptr() const { return W_; }
  size_t dim() const { return W_->size(); }
  const F& qvalue() const { return q_; }

  Vec zero() const { return Vec(dim(), f_zero(static_cast<const F*>(nullptr))); }
  Vec unit() const {
    Vec v = zero();
    v[0] = f_one(static_cast<const F*>(nullptr));
    return v;
  }
  Vec basis(size_t w) const {
    Vec v = zero();
    v[w] = f_one(static_cast<const F*>(nullptr));
    return v;
  }

  // words realising each basis element as a product of generators
  const std::vector<std::vector<int>>& basis_words() const { return words_; }

  Vec mult_gen(const Vec& v, size_t g) const;
  Vec mult(const Vec& a, const Vec& b) const;
  F trace(const Vec& v) const { return v[0]; }

  // spetsial parameter list of a generator: u_j, j = 1..o (u_o = q)
  std::vector<F> params(size_t g) const;

  // associativity on all basis triples when dim <= full_cap, on a fixed
  // deterministic sample otherwise
  void check_associativity(size_t full_cap = 200) const;

  Matrix<F> gram() const;

 private:
  std::shared_ptr<const ReflGroup> W_;
  F q_;
  std::vector<std::vector<int>> words_;                      // per basis element
  std::vector<std::vector<std::vector<std::pair<size_t, F>>>> rmg_;  // [w][g] expansion

  void build_coxeter();
  void build_cyclic();
  void build_ariki_koike();
};

extern template class HeckeEngine<Cyc>;
extern template class HeckeEngine<RatFun>;

bool engine_supported(const ReflGroup& W);

// ---------------------------------------------------------------------------
// Schur elements
// ---------------------------------------------------------------------------

struct SchurEntry {
  std::string label;
  long degree = 1;               // phi(1)
  RatFun f;                      // Schur element as a function of x
  std::vector<Cyc> char_values;  // class function on W, by class id
  std::string provenance;
};

struct SchurTable {
  std::shared_ptr<const ReflGroup> W;
  std::vector<SchurEntry> entries;
};

// provider dispatch for the supported families; every provider asserts
// f(1) = |W| / degree on each entry
SchurTable schur_elements(std::shared_ptr<const ReflGroup> W);

// table for a parabolic subgroup of W, with parameters inherited through the
// spetsial specialisation; char_values refer to the subgroup view's classes
SchurTable schur_for_stabiliser(const std::shared_ptr<const ReflGroup>& W,
                                const SubgroupView& sub);

// metric pairing between Schur entries and character-table rows
std::vector<size_t> entry_rows(const SchurTable& table, const CharTable& tab);

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

struct SchurVerification {
  bool pass = false;
  std::string detail;
};

// annihilation + rank criterion against the relative projective element of
// the canonical trace
SchurVerification verify_schur(const HeckeEngine<Cyc>& engine, const SchurTable& table,
                               const Rat& q);

// extend a generator assignment multiplicatively: standalone element index
// -> parent element index; throws unless the map embeds the group
std::vector<size_t> match_into_parent(const ReflGroup& standalone, const ReflGroup& W,
                                      const std::vector<size_t>& gen_images);

// property (2'): a section of the subgroup (its standard basis, realised in
// the big algebra through the given generator images) multiplies with the
// subgroup's structure constants and the canonical trace is delta on it
bool check_parabolic_restriction(const HeckeEngine<Cyc>& engine,
                                 const HeckeEngine<Cyc>& sub_engine,
                                 const std::vector<HeckeEngine<Cyc>::Vec>& gen_images);

struct BrauerCheck {
  bool pass = false;
  std::string detail;
};

// 1/f_{s,phi}(q) = sum_chi <phi, chi|_{W_s}> / f_chi(q), exactly, at the
// given samples
BrauerCheck check_brauer_reciprocity(const std::shared_ptr<const ReflGroup>& W,
                                     const std::vector<size_t>& stab_elems,
                                     const std::vector<Rat>& q_samples);

// JSON export of a Schur table (group, labels, coefficient lists, provenance)
std::string schur_table_json(const SchurTable& table);

}  // namespace zlspets

#endif
