#ifndef ZLSPETS_BLOCK_HPP
#define ZLSPETS_BLOCK_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zlspets/hecke.hpp"
#include "zlspets/oscount.hpp"
#include "zlspets/torus.hpp"

namespace zlspets {

// one character gamma_{s,phi} of the principal block
struct BlockCharacter {
  size_t orbit = 0;        // index into the point census
  std::uint64_t s_rep = 0;
  size_t stab_class = 0;
  std::string label;       // phi label within the stabiliser table
  long phi_degree = 1;
  LPoly degree;            // polynomial in x
};

struct BlockData {
  std::shared_ptr<const ReflGroup> W;
  std::uint64_t l = 0;
  unsigned a = 1;
  TorusAction T;
  OrbitCensus points;  // the s-series
  OrbitCensus chars;   // Irr(T) side
  OrbitMatching matching;
  std::vector<SubgroupView> point_stabs;   // per point orbit
  std::vector<SchurTable> point_tables;    // per point orbit
  std::vector<CharTable> point_chartabs;   // per point orbit
  std::vector<std::vector<BlockCharacter>> irr_by_orbit;
  LPoly dim_poly;  // dim(B0)
};

BlockData build_block(std::shared_ptr<const ReflGroup> W, std::uint64_t l, unsigned a,
                      std::uint64_t cap = 1000000);

struct Verdict {
  bool pass = false;
  std::string statement;  // what is being checked
  std::string detail;
};

// l-part of dim(B0)(q) equals |S| = l^{a n}
Verdict check_conj1(const BlockData& B, const Rat& q);
// l'-part of dim(B0)(q) is |W| mod l; also probed on q = 1 + r l^a, r = 1..l
Verdict check_conj2(const BlockData& B, const Rat& q);

struct DecompRow {
  size_t char_orbit = 0;   // theta-orbit index in the character census
  size_t nu_row = 0;       // row of the stabiliser character table
  std::string label;
  std::vector<long> d;     // decomposition numbers against Irr(W)
  LPoly degree;            // deg(gamma-hat) of the matched block character
};

struct DecompData {
  std::vector<DecompRow> rows;
  std::vector<LPoly> phi_degree;       // deg Phi_nu per Irr(W) row
  std::vector<std::string> ibr_label;  // labels of IBr = Irr(W)
  bool degree_identity = false;        // deg(gamma) = sum_nu d deg(nu-hat)
};

DecompData decomposition_matrix(const BlockData& B);

// |S| divides deg Phi_nu(q) for every nu
Verdict check_conj3(const BlockData& B, const DecompData& D, const Rat& q);

// the three smallest prime powers q with v_l(q-1) = a
std::vector<Rat> default_q_samples(std::uint64_t l, unsigned a, size_t count = 3);

// valuation of a cyclotomic value through the Teichmueller embedding; only
// decides v >= need (exact when the value is rational)
bool l_valuation_at_least(const Cyc& value, std::uint64_t l, unsigned need);

}  // namespace zlspets

#endif
