#include "zlspets/block.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zlspets {

namespace {

bool l_free_coeffs(const LPoly& p, std::uint64_t l) {
  Int lz(static_cast<unsigned long>(l));
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    for (const auto& r : c.coeffs()) {
      Int den = r.get_den();
      if (mpz_divisible_p(den.get_mpz_t(), lz.get_mpz_t())) return false;
    }
  }
  return true;
}

}  // namespace

bool l_valuation_at_least(const Cyc& value, std::uint64_t l, unsigned need) {
  if (value.is_zero()) return true;
  if (need == 0) return true;
  try {
    return value.residue_image(l, need).value == 0;
  } catch (const std::exception&) {
    return false;  // l in a denominator: negative valuation
  }
}

BlockData build_block(std::shared_ptr<const ReflGroup> W, std::uint64_t l, unsigned a,
                      std::uint64_t cap) {
  BlockData B;
  B.W = W;
  B.l = l;
  B.a = a;
  B.T = torus_action(W, l, a);
  B.points = orbit_census(B.T, false, cap);
  B.chars = orbit_census(B.T, true, cap);
  B.matching = equivariant_matching(B.T, B.chars, B.points);

  LPoly p = W->poincare_polynomial();
  LPoly dim;
  for (size_t oi = 0; oi < B.points.orbits.size(); ++oi) {
    const auto& orbit = B.points.orbits[oi];
    auto sub = subgroup_view(W, orbit.stab);
    auto table = schur_for_stabiliser(W, sub);
    auto chartab = character_table(sub.group);
    std::vector<BlockCharacter> here;
    for (const auto& e : table.entries) {
      RatFun gamma = RatFun(p) / e.f;
      if (!gamma.is_lpoly())
        throw std::runtime_error(
            "degree-integrality: gamma_{s,phi} is not a polynomial in x");
      BlockCharacter bc;
      bc.orbit = oi;
      bc.s_rep = orbit.rep;
      bc.stab_class = orbit.stab_class;
      bc.label = e.label;
      bc.phi_degree = e.degree;
      bc.degree = gamma.as_lpoly();
      if (!l_free_coeffs(bc.degree, l))
        throw std::runtime_error("degree-integrality: gamma has an l in a denominator");
      Cyc at1 = bc.degree.eval(rat(1));
      Rat expect = rat(static_cast<long>(W->size() / orbit.stab.size())) * rat(e.degree);
      if (!(at1 == Cyc(expect)))
        throw std::logic_error("gamma(1) differs from |W:W(s)| phi(1)");
      dim = dim + bc.degree * bc.degree;
      here.push_back(std::move(bc));
    }
    B.point_stabs.push_back(std::move(sub));
    B.point_tables.push_back(std::move(table));
    B.point_chartabs.push_back(std::move(chartab));
    B.irr_by_orbit.push_back(std::move(here));
  }
  for (const auto& [e, c] : dim.terms()) {
    (void)e;
    if (!c.is_rational())
      throw std::logic_error("dim(B0) has an irrational coefficient after assembly");
  }
  if (!l_free_coeffs(dim, l))
    throw std::logic_error("dim(B0) has an l-divisible denominator");
  Cyc at1 = dim.eval(rat(1));
  if (!(at1 == Cyc(Rat(static_cast<unsigned long>(B.T.points)) *
                   Rat(static_cast<unsigned long>(W->size())))))
    throw std::logic_error("dim(B0)(1) differs from |T| |W|");
  std::uint64_t nchar = 0;
  for (const auto& v : B.irr_by_orbit) nchar += v.size();
  if (nchar != semidirect_class_count(B.T))
    throw std::logic_error("|Irr(B0)| differs from the semidirect class count");
  B.dim_poly = dim;
  return B;
}

static void require_consistent_q(const BlockData& B, const Rat& q) {
  if (!is_integer(q) || sgn(q) <= 0)
    throw std::invalid_argument("q must be a positive integer");
  Int qi(q.get_num());
  Int lz(static_cast<unsigned long>(B.l));
  if (mpz_divisible_p(qi.get_mpz_t(), lz.get_mpz_t()))
    throw std::invalid_argument("invalid q: divisible by l");
  long v = valuation(Int(qi - 1), lz);
  if (v != static_cast<long>(B.a)) {
    std::ostringstream os;
    os << "invalid q: v_l(q-1) = " << v << " but the configuration has a = " << B.a;
    throw std::invalid_argument(os.str());
  }
}

Verdict check_conj1(const BlockData& B, const Rat& q) {
  require_consistent_q(B, q);
  Verdict v;
  v.statement = "C1-dimension-l-part";
  Rat value = B.dim_poly.eval(q).rational_value();
  auto split = l_valuation_split(value, Int(static_cast<unsigned long>(B.l)));
  long target = static_cast<long>(B.a) * B.W->rank();
  std::ostringstream os;
  os << "dim(B0)(" << q.get_str() << ") = " << value.get_str() << ", v_" << B.l << " = "
     << split.v << ", target a*n = " << target;
  v.detail = os.str();
  v.pass = (split.v == target);
  return v;
}

Verdict check_conj2(const BlockData& B, const Rat& q) {
  require_consistent_q(B, q);
  Verdict v;
  v.statement = "C2-lprime-congruence";
  Int lz(static_cast<unsigned long>(B.l));
  Rat order(static_cast<long>(B.W->size()));
  auto check_at = [&](const Rat& qq, std::string& why) {
    Rat value = B.dim_poly.eval(qq).rational_value();
    auto split = l_valuation_split(value, lz);
    bool ok = congruent_mod(split.lprime_part, order, lz);
    std::ostringstream os;
    os << "q=" << qq.get_str() << ": l'-part " << split.lprime_part.get_str()
       << (ok ? " == " : " != ") << order.get_str() << " (mod " << B.l << ")";
    why = os.str();
    return ok;
  };
  std::string why;
  v.pass = check_at(q, why);
  std::ostringstream os;
  os << why;
  std::uint64_t la = ipow(B.l, B.a);
  for (std::uint64_t r = 1; r <= B.l && v.pass; ++r) {
    Rat qq = Rat(static_cast<unsigned long>(1 + r * la));
    std::string w2;
    if (!check_at(qq, w2)) {
      v.pass = false;
      os << "; substitution probe failed: " << w2;
    }
  }
  v.detail = os.str();
  return v;
}

DecompData decomposition_matrix(const BlockData& B) {
  const ReflGroup& W = *B.W;
  std::shared_ptr<const ReflGroup> Wp = B.W;
  auto tabW = character_table(Wp);
  auto tableW = schur_elements(Wp);
  auto rowsW = entry_rows(tableW, tabW);
  size_t nibr = tabW.num_chars();

  DecompData D;
  D.ibr_label.resize(nibr);
  for (size_t c = 0; c < tableW.entries.size(); ++c)
    D.ibr_label[rowsW[c]] = tableW.entries[c].label;
  LPoly p = W.poincare_polynomial();
  std::vector<LPoly> ibr_degree(nibr);
  for (size_t c = 0; c < tableW.entries.size(); ++c) {
    RatFun gamma = RatFun(p) / tableW.entries[c].f;
    ibr_degree[rowsW[c]] = gamma.as_lpoly();
  }

  D.degree_identity = true;
  for (size_t ci = 0; ci < B.chars.orbits.size(); ++ci) {
    const auto& corb = B.chars.orbits[ci];
    size_t pi = B.matching.point_orbit_for[ci];
    auto theta_view = subgroup_view(Wp, corb.stab);
    auto theta_tab = character_table(theta_view.group);
    auto mult = restriction_multiplicities(tabW, theta_tab, theta_view.to_parent);

    const auto& stab_tab = B.point_chartabs[pi];
    const auto& stab_view = B.point_stabs[pi];
    const auto& schur = B.point_tables[pi];
    auto schur_rows = entry_rows(schur, stab_tab);
    // map theta-table rows onto stabiliser-table rows, conjugating when the
    // stabilisers are only conjugate
    std::vector<size_t> to_stab_row(theta_tab.num_chars());
    for (size_t r = 0; r < theta_tab.num_chars(); ++r) {
      std::vector<Cyc> vals(stab_tab.num_classes());
      for (size_t c2 = 0; c2 < stab_tab.num_classes(); ++c2) {
        size_t parent = stab_view.to_parent[stab_tab.W->class_rep(c2)];
        size_t image = parent;
        if (B.matching.conjugator[ci]) {
          size_t w = *B.matching.conjugator[ci];
          image = W.mul(W.mul(w, parent), W.inv(w));
        }
        auto idx = theta_view.group->index_of(W.element(image));
        if (!idx) throw std::logic_error("stabiliser transport failed");
        vals[c2] = theta_tab.value(r, *idx);
      }
      auto row = stab_tab.find_row(vals);
      if (!row) throw std::logic_error("character transport failed");
      to_stab_row[r] = *row;
    }
    std::vector<size_t> entry_of_row(stab_tab.num_chars(), SIZE_MAX);
    for (size_t e = 0; e < schur.entries.size(); ++e) entry_of_row[schur_rows[e]] = e;

    for (size_t r = 0; r < theta_tab.num_chars(); ++r) {
      DecompRow row;
      row.char_orbit = ci;
      row.nu_row = r;
      size_t entry = entry_of_row[to_stab_row[r]];
      if (entry == SIZE_MAX) throw std::logic_error("missing Schur entry for a table row");
      row.label = "theta" + std::to_string(ci) + ":" + schur.entries[entry].label;
      row.degree = B.irr_by_orbit[pi][entry].degree;
      row.d.resize(nibr);
      bool nonzero = false;
      for (size_t nu = 0; nu < nibr; ++nu) {
        row.d[nu] = mult[r][nu];
        if (row.d[nu]) nonzero = true;
      }
      if (!nonzero) throw std::logic_error("decomposition row is identically zero");
      LPoly rhs;
      for (size_t nu = 0; nu < nibr; ++nu)
        if (row.d[nu]) rhs = rhs + Cyc(rat(row.d[nu])) * ibr_degree[nu];
      if (!(rhs == row.degree)) D.degree_identity = false;
      D.rows.push_back(std::move(row));
    }
  }
  {
    size_t found = 0;
    for (const auto& row : D.rows) {
      if (B.chars.orbits[row.char_orbit].stab.size() != W.size()) continue;
      long total = 0;
      for (long x : row.d) total += x;
      if (total != 1) throw std::logic_error("trivial-theta row is not a unit vector");
      ++found;
    }
    if (found != tabW.num_chars())
      throw std::logic_error("trivial-theta block is not the identity");
  }
  D.phi_degree.assign(nibr, LPoly());
  for (const auto& row : D.rows)
    for (size_t nu = 0; nu < nibr; ++nu)
      if (row.d[nu])
        D.phi_degree[nu] = D.phi_degree[nu] + Cyc(rat(row.d[nu])) * row.degree;
  return D;
}

Verdict check_conj3(const BlockData& B, const DecompData& D, const Rat& q) {
  require_consistent_q(B, q);
  Verdict v;
  v.statement = "C3-projective-degree-divisibility";
  unsigned need = B.a * static_cast<unsigned>(B.W->rank());
  v.pass = true;
  std::ostringstream os;
  os << "need v_" << B.l << " >= " << need << " at q=" << q.get_str() << ";";
  for (size_t nu = 0; nu < D.phi_degree.size(); ++nu) {
    Cyc val = D.phi_degree[nu].eval(q);
    if (!l_valuation_at_least(val, B.l, need)) {
      v.pass = false;
      os << " fails at " << D.ibr_label[nu] << ";";
    }
  }
  if (v.pass) os << " all projective degrees divisible by l^(a n)";
  if (!D.degree_identity) {
    v.pass = false;
    os << "; falsification: degree identity failed in the decomposition data";
  }
  v.detail = os.str();
  return v;
}

std::vector<Rat> default_q_samples(std::uint64_t l, unsigned a, size_t count) {
  std::vector<Rat> out;
  std::uint64_t la = ipow(l, a);
  for (std::uint64_t q = 2; out.size() < count && q < 4000000; ++q) {
    std::uint64_t base = 0;
    for (std::uint64_t p = 2; p * p <= q; ++p)
      if (q % p == 0) {
        base = p;
        break;
      }
    if (base == 0) base = q;
    std::uint64_t t = q;
    while (t % base == 0) t /= base;
    if (t != 1) continue;
    if (q % l == 0) continue;
    if ((q - 1) % la != 0) continue;
    if (((q - 1) / la) % l == 0) continue;
    out.push_back(Rat(static_cast<unsigned long>(q)));
  }
  if (out.size() < count) throw std::runtime_error("not enough q samples");
  return out;
}

}  // namespace zlspets
