#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "zlspets/hecke.hpp"

namespace zlspets {

namespace {

RatFun rf_const(const Cyc& c) { return RatFun::constant(c); }
RatFun rf_const(long n) { return RatFun::constant(Cyc(rat(n))); }
RatFun rf_x() { return RatFun::x(); }
RatFun rf_xpow(long k) { return RatFun(LPoly::x_power(k)); }

void assert_psi1(const SchurTable& t) {
  long order = static_cast<long>(t.W->size());
  for (const auto& e : t.entries) {
    Cyc v = e.f.eval(rat(1));
    if (!(v == Cyc(rat(order, e.degree))))
      throw std::logic_error("Schur element violates the x -> 1 normalisation |W|/deg");
  }
}

// --------------------------------------------------------------------------
// partitions, hooks, Murnaghan-Nakayama
// --------------------------------------------------------------------------

using Partition = std::vector<long>;

std::vector<Partition> partitions(long n, long maxpart = -1) {
  if (maxpart < 0) maxpart = n;
  if (n == 0) return {{}};
  std::vector<Partition> out;
  for (long first = std::min(n, maxpart); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      Partition p{first};
      p.insert(p.end(), rest.begin(), rest.end());
      out.push_back(std::move(p));
    }
  return out;
}

std::string part_key(const Partition& p) {
  std::string s;
  for (long x : p) s += std::to_string(x) + ",";
  return s;
}

std::vector<long> hook_lengths(const Partition& lam) {
  std::vector<long> hooks;
  size_t rows = lam.size();
  for (size_t i = 0; i < rows; ++i)
    for (long j = 0; j < lam[i]; ++j) {
      long arm = lam[i] - j - 1;
      long leg = 0;
      for (size_t k = i + 1; k < rows; ++k)
        if (lam[k] > j) ++leg;
      hooks.push_back(arm + leg + 1);
    }
  return hooks;
}

long n_stat(const Partition& lam) {
  long s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += static_cast<long>(i) * lam[i];
  return s;
}

long syt_count(const Partition& lam) {
  long n = std::accumulate(lam.begin(), lam.end(), 0L);
  long fact = 1;
  for (long i = 2; i <= n; ++i) fact *= i;
  for (long h : hook_lengths(lam)) fact /= h;
  return fact;
}

long mn_char(const Partition& lam, const Partition& mu,
             std::map<std::string, long>& memo) {
  if (lam.empty() && mu.empty()) return 1;
  std::string key = part_key(lam) + "|" + part_key(mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long m = mu[0];
  Partition rest(mu.begin() + 1, mu.end());
  // beta set of lam
  long L = static_cast<long>(lam.size());
  std::vector<long> beta;
  for (long i = 0; i < L; ++i) beta.push_back(lam[i] + (L - 1 - i));
  long total = 0;
  for (long bi = 0; bi < L; ++bi) {
    long b = beta[bi];
    if (b < m) continue;
    long target = b - m;
    bool clash = false;
    long height = 0;
    for (long c : beta) {
      if (c == target) clash = true;
      if (c > target && c < b) ++height;
    }
    if (clash) continue;
    std::vector<long> nb = beta;
    nb[bi] = target;
    std::sort(nb.begin(), nb.end(), std::greater<long>());
    Partition nl;
    for (long i = 0; i < L; ++i) {
      long part = nb[i] - (L - 1 - i);
      if (part > 0) nl.push_back(part);
      if (part < 0) throw std::logic_error("beta set corruption");
    }
    long sign = height % 2 ? -1 : 1;
    total += sign * mn_char(nl, rest, memo);
  }
  memo[key] = total;
  return total;
}

// cycle type of a class representative from its characteristic polynomial on
// the rank n-1 reflection representation of S_n
Partition cycle_type_of(const ReflGroup& W, size_t elem, long n) {
  long r = W.rank();
  const CMat& m = W.element(elem);
  std::vector<std::vector<LPoly>> a(r, std::vector<LPoly>(r, LPoly()));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      LPoly p;
      if (i == j) p = p + LPoly::x_power(1);
      p = p - LPoly::constant(m(i, j));
      a[i][j] = p;
    }
  std::function<LPoly(const std::vector<std::vector<LPoly>>&)> det =
      [&](const std::vector<std::vector<LPoly>>& mm) -> LPoly {
    size_t k = mm.size();
    if (k == 1) return mm[0][0];
    LPoly acc;
    for (size_t c = 0; c < k; ++c) {
      if (mm[0][c].is_zero()) continue;
      std::vector<std::vector<LPoly>> sub;
      for (size_t i = 1; i < k; ++i) {
        std::vector<LPoly> row;
        for (size_t j = 0; j < k; ++j)
          if (j != c) row.push_back(mm[i][j]);
        sub.push_back(std::move(row));
      }
      LPoly term = mm[0][c] * det(sub);
      if (c % 2) term = -term;
      acc = acc + term;
    }
    return acc;
  };
  LPoly charpoly = det(a);
  for (const auto& mu : partitions(n)) {
    LPoly prod = LPoly::constant(Cyc::one());
    for (long part : mu)
      prod = prod * (LPoly::x_power(part) - LPoly::constant(Cyc::one()));
    LPoly den = LPoly::x_power(1) - LPoly::constant(Cyc::one());
    auto [q, rem] = poly_divmod(prod, den);
    if (!rem.is_zero()) throw std::logic_error("cycle-type polynomial division failed");
    if (q == charpoly) return mu;
  }
  throw std::logic_error("no cycle type matches the characteristic polynomial");
}

// --------------------------------------------------------------------------
// providers
// --------------------------------------------------------------------------

SchurTable cyclic_table(std::shared_ptr<const ReflGroup> W) {
  long e = W->spec().e;
  SchurTable t;
  t.W = W;
  // distinguished generator g (eigenvalue zeta_e); discrete logs per class
  size_t gen = W->gen_index(0);
  std::vector<long> dlog(W->num_classes(), -1);
  size_t x = 0;
  for (long k = 0; k < e; ++k) {
    dlog[W->class_of(x)] = k;
    x = W->mul(x, gen);
  }
  std::vector<RatFun> u;
  for (long j = 1; j < e; ++j) u.push_back(rf_const(Cyc::zeta_pow(e, j)));
  u.push_back(rf_x());
  for (long j = 1; j <= e; ++j) {
    SchurEntry entry;
    entry.label = j == e ? "chi^0" : "chi^" + std::to_string(j);
    entry.degree = 1;
    entry.provenance = "cyclic-formula";
    RatFun f = rf_const(1);
    for (long i = 1; i <= e; ++i) {
      if (i == j) continue;
      f = f * (u[j - 1] - u[i - 1]) / (rf_const(0) - u[i - 1]);
    }
    entry.f = f;
    entry.char_values.resize(W->num_classes());
    for (size_t c = 0; c < W->num_classes(); ++c)
      entry.char_values[c] = Cyc::zeta_pow(e, (j % e) * dlog[c]);
    t.entries.push_back(std::move(entry));
  }
  assert_psi1(t);
  return t;
}

SchurTable hook_table(std::shared_ptr<const ReflGroup> W, long n) {
  SchurTable t;
  t.W = W;
  std::vector<Partition> types(W->num_classes());
  if (W->spec().family == GroupSpec::Family::SwapRank2) {
    // permutation representation of S2 on two coordinates
    for (size_t c = 0; c < W->num_classes(); ++c)
      types[c] = (W->class_rep(c) == 0) ? Partition{1, 1} : Partition{2};
  } else {
    for (size_t c = 0; c < W->num_classes(); ++c)
      types[c] = cycle_type_of(*W, W->class_rep(c), n);
  }
  std::map<std::string, long> memo;
  for (const auto& lam : partitions(n)) {
    SchurEntry entry;
    std::string lbl = "[";
    for (size_t i = 0; i < lam.size(); ++i)
      lbl += (i ? "," : "") + std::to_string(lam[i]);
    entry.label = lbl + "]";
    entry.degree = syt_count(lam);
    entry.provenance = "hook-formula";
    // f = prod_c (x^{h(c)} - 1) / ((x-1)^n x^{n(lam)})
    RatFun num = rf_const(1);
    for (long h : hook_lengths(lam))
      num = num * RatFun(LPoly::x_power(h) - LPoly::constant(Cyc::one()));
    RatFun den = rf_const(1);
    for (long i = 0; i < n; ++i)
      den = den * RatFun(LPoly::x_power(1) - LPoly::constant(Cyc::one()));
    den = den * rf_xpow(n_stat(lam));
    entry.f = num / den;
    entry.char_values.resize(W->num_classes());
    for (size_t c = 0; c < W->num_classes(); ++c)
      entry.char_values[c] = Cyc(rat(mn_char(lam, types[c], memo)));
    t.entries.push_back(std::move(entry));
  }
  assert_psi1(t);
  return t;
}

SchurTable dihedral_table(std::shared_ptr<const ReflGroup> W, long m) {
  SchurTable t;
  t.W = W;
  size_t k = W->num_classes();
  // classify classes: rotation index (trace = zeta^r + zeta^-r) or reflection
  std::vector<long> rot_index(k, -1);
  std::vector<int> refl_class(k, 0);
  for (size_t c = 0; c < k; ++c) {
    size_t rep = W->class_rep(c);
    CMat fix = fixed_space(W->element(rep));
    if (fix.rows() == 1) {
      refl_class[c] = 1;
      continue;
    }
    Cyc tr = W->element(rep)(0, 0) + W->element(rep)(1, 1);
    for (long r = 0; r <= m / 2; ++r) {
      if (tr == Cyc::zeta_pow(m, r) + Cyc::zeta_pow(m, m - r)) {
        rot_index[c] = r;
        break;
      }
    }
    if (rot_index[c] < 0) throw std::logic_error("unrecognised rotation class");
  }
  // which reflection class contains generator 0 (only needed for even m)
  size_t gen0_class = W->class_of(W->gen_index(0));

  auto rotval = [&](long j, size_t c) {
    return Cyc::zeta_pow(m, (j * rot_index[c]) % m) +
           Cyc::zeta_pow(m, ((m - (j * rot_index[c]) % m) % m));
  };

  LPoly xm1 = LPoly::x_power(1) - LPoly::constant(Cyc::one());
  RatFun p = RatFun(LPoly::x_power(2) - LPoly::constant(Cyc::one())) *
             RatFun(LPoly::x_power(m) - LPoly::constant(Cyc::one())) /
             (RatFun(xm1) * RatFun(xm1));

  SchurEntry triv;
  triv.label = "triv";
  triv.degree = 1;
  triv.f = p;
  triv.provenance = "dihedral-formula";
  SchurEntry sgn;
  sgn.label = "sgn";
  sgn.degree = 1;
  sgn.f = p / rf_xpow(m);
  sgn.provenance = "dihedral-formula";
  triv.char_values.assign(k, Cyc::one());
  sgn.char_values.resize(k);
  for (size_t c = 0; c < k; ++c)
    sgn.char_values[c] = refl_class[c] ? Cyc(rat(-1)) : Cyc::one();

  std::vector<SchurEntry> twos;
  long jmax = (m - 1) / 2;
  if (m % 2 == 0) jmax = m / 2 - 1;
  for (long j = 1; j <= jmax; ++j) {
    SchurEntry e;
    e.label = "rho" + std::to_string(j);
    e.degree = 2;
    e.provenance = "dihedral-formula";
    Cyc M = Cyc::zeta_pow(m, j) + Cyc::zeta_pow(m, m - j);
    // m (x^2 - M x + 1) / (x (2 - M))
    LPoly numpoly = LPoly::x_power(2) - LPoly::constant(M) * LPoly::x_power(1) +
                    LPoly::constant(Cyc::one());
    Cyc scale = Cyc(rat(m)) * (Cyc(rat(2)) - M).inverse();
    e.f = rf_const(scale) * RatFun(numpoly) / rf_xpow(1);
    e.char_values.resize(k);
    for (size_t c = 0; c < k; ++c)
      e.char_values[c] = refl_class[c] ? Cyc() : rotval(j, c);
    twos.push_back(std::move(e));
  }

  t.entries.push_back(triv);
  t.entries.push_back(sgn);
  if (m % 2 == 0) {
    // the two mixed linear characters share a Schur element, fixed by the
    // normalisation sum_chi chi(1)/f_chi = 1
    RatFun rest = rf_const(1) - rf_const(1) / p - rf_xpow(m) / p;
    for (const auto& e : twos) rest = rest - rf_const(2) / e.f;
    RatFun feps = rf_const(2) / rest;
    for (int which = 0; which < 2; ++which) {
      SchurEntry e;
      e.label = which == 0 ? "eps1" : "eps2";
      e.degree = 1;
      e.f = feps;
      e.provenance = "dihedral-formula";
      e.char_values.resize(k);
      for (size_t c = 0; c < k; ++c) {
        if (refl_class[c]) {
          bool is_gen0 = (c == gen0_class);
          e.char_values[c] = Cyc(rat((which == 0) == is_gen0 ? 1 : -1));
        } else {
          e.char_values[c] = Cyc(rat(rot_index[c] % 2 ? -1 : 1));
        }
      }
      t.entries.push_back(std::move(e));
    }
  }
  for (auto& e : twos) t.entries.push_back(std::move(e));
  assert_psi1(t);
  return t;
}

// seminormal irreducible models of the G(e,1,2) Hecke algebra over the
// rational function field; solved against the delta property of the
// canonical trace on the standard basis
SchurTable ariki_koike_table(std::shared_ptr<const ReflGroup> W) {
  long e = W->spec().e;
  HeckeEngine<RatFun> engine(W, rf_x());
  // parameters Q_1..Q_e with Q_e = x
  std::vector<RatFun> Q;
  for (long j = 1; j < e; ++j) Q.push_back(rf_const(Cyc::zeta_pow(e, j)));
  Q.push_back(rf_x());
  const RatFun q = rf_x();

  struct Model {
    std::string label;
    long degree;
    std::vector<Matrix<RatFun>> gen_images;  // images of T0, T1
  };
  std::vector<Model> models;
  for (long kk = 1; kk <= e; ++kk) {
    for (int sym = 0; sym < 2; ++sym) {
      Model mo;
      mo.label = "L" + std::to_string(kk % e) + (sym ? "-" : "+");
      mo.degree = 1;
      Matrix<RatFun> t0(1, 1, Q[kk - 1]);
      Matrix<RatFun> t1(1, 1, sym ? rf_const(-1) : q);
      mo.gen_images = {t0, t1};
      models.push_back(std::move(mo));
    }
  }
  for (long j = 1; j <= e; ++j)
    for (long kk = j + 1; kk <= e; ++kk) {
      Model mo;
      mo.label = "D" + std::to_string(j % e) + "," + std::to_string(kk % e);
      mo.degree = 2;
      Matrix<RatFun> t0(2, 2, RatFun());
      t0(0, 0) = Q[j - 1];
      t0(1, 1) = Q[kk - 1];
      RatFun tt = (q - rf_const(1)) / (Q[j - 1] - Q[kk - 1]);
      Matrix<RatFun> t1(2, 2, RatFun());
      t1(0, 0) = rf_const(0) - Q[kk - 1] * tt;
      t1(0, 1) = rf_const(1);
      t1(1, 0) = q - Q[j - 1] * Q[kk - 1] * tt * tt;
      t1(1, 1) = Q[j - 1] * tt;
      mo.gen_images = {t0, t1};
      models.push_back(std::move(mo));
    }

  size_t n = engine.dim();
  size_t nm = models.size();
  // character values chi(T_w) for the basis words
  Matrix<RatFun> A(n, nm, RatFun());
  std::vector<std::vector<RatFun>> charw(nm, std::vector<RatFun>(n));
  for (size_t mi = 0; mi < nm; ++mi) {
    long d = models[mi].degree;
    for (size_t w = 0; w < n; ++w) {
      Matrix<RatFun> acc = Matrix<RatFun>::identity(d, RatFun(), rf_const(1));
      for (int g : engine.basis_words()[w]) acc = acc * models[mi].gen_images[g];
      RatFun tr;
      for (long i = 0; i < d; ++i) tr = tr + acc(i, i);
      A(w, mi) = tr;
      charw[mi][w] = tr;
    }
  }
  std::vector<RatFun> rhs(n, RatFun());
  rhs[0] = rf_const(1);
  auto coeffs = A.solve(rhs);  // throws when the delta system is inconsistent

  SchurTable t;
  t.W = W;
  for (size_t mi = 0; mi < nm; ++mi) {
    SchurEntry entry;
    entry.label = models[mi].label;
    entry.degree = models[mi].degree;
    entry.provenance = "seminormal-solve";
    if (coeffs[mi].is_zero())
      throw std::logic_error("canonical trace has a vanishing Schur coefficient");
    entry.f = coeffs[mi].inverse();
    entry.char_values.resize(W->num_classes());
    for (size_t c = 0; c < W->num_classes(); ++c) {
      size_t rep = W->class_rep(c);
      entry.char_values[c] = charw[mi][rep].eval(rat(1));
    }
    t.entries.push_back(std::move(entry));
  }
  assert_psi1(t);
  return t;
}

SchurTable product_table(std::shared_ptr<const ReflGroup> W) {
  const auto& factors = W->spec().factors;
  std::vector<std::shared_ptr<ReflGroup>> groups;
  std::vector<SchurTable> tables;
  for (const auto& f : factors) {
    auto g = build_group(f);
    tables.push_back(schur_elements(g));
    groups.push_back(g);
  }
  // map parent class -> factor classes via diagonal blocks
  size_t k = W->num_classes();
  std::vector<std::vector<size_t>> factor_class(k);
  for (size_t c = 0; c < k; ++c) {
    const CMat& m = W->element(W->class_rep(c));
    long off = 0;
    for (size_t fi = 0; fi < groups.size(); ++fi) {
      long r = groups[fi]->rank();
      CMat block(r, r, Cyc());
      for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
          block(i, j) = m(off + i, off + j).embedded(groups[fi]->spec().conductor);
      auto idx = groups[fi]->index_of(block);
      if (!idx) throw std::logic_error("product block not found in factor");
      factor_class[c].push_back(groups[fi]->class_of(*idx));
      off += r;
    }
  }
  SchurTable t;
  t.W = W;
  std::function<void(size_t, SchurEntry)> rec = [&](size_t fi, SchurEntry acc) {
    if (fi == tables.size()) {
      t.entries.push_back(std::move(acc));
      return;
    }
    for (const auto& e : tables[fi].entries) {
      SchurEntry next = acc;
      next.label = fi == 0 ? e.label : next.label + "*" + e.label;
      next.degree *= e.degree;
      next.f = next.f * e.f;
      for (size_t c = 0; c < k; ++c)
        next.char_values[c] = next.char_values[c] * e.char_values[factor_class[c][fi]];
      rec(fi + 1, std::move(next));
    }
  };
  SchurEntry seed;
  seed.label = "";
  seed.degree = 1;
  seed.f = rf_const(1);
  seed.provenance = "product";
  seed.char_values.assign(k, Cyc::one());
  rec(0, seed);
  for (auto& e : t.entries) e.provenance = "product";
  assert_psi1(t);
  return t;
}

}  // namespace

SchurTable schur_elements(std::shared_ptr<const ReflGroup> W) {
  using Fam = GroupSpec::Family;
  const auto& spec = W->spec();
  switch (spec.family) {
    case Fam::Cyclic:
      return cyclic_table(W);
    case Fam::CoxeterCartan: {
      if (spec.name[0] == 'A' || spec.name == "I2(3)")
        return hook_table(W, spec.rank + 1);
      if (spec.name == "B2" || spec.name == "I2(4)") return dihedral_table(W, 4);
      if (spec.name == "G2" || spec.name == "I2(6)") return dihedral_table(W, 6);
      throw std::invalid_argument("provider-missing: no Schur provider for " + spec.name);
    }
    case Fam::Dihedral:
      return dihedral_table(W, spec.e);
    case Fam::SwapRank2:
      return hook_table(W, 2);
    case Fam::Imprimitive:
      if (spec.n == 2) return ariki_koike_table(W);
      throw std::invalid_argument("provider-missing: G(e,1,n) tables only for n <= 2");
    case Fam::Product:
      if (!spec.factors.empty()) return product_table(W);
      throw std::invalid_argument("provider-missing: raw subgroup without a family");
  }
  throw std::invalid_argument("provider-missing");
}

SchurTable schur_for_stabiliser(const std::shared_ptr<const ReflGroup>& W,
                                const SubgroupView& sub) {
  size_t n0 = sub.group->size();
  SchurTable t;
  t.W = sub.group;
  if (n0 == 1) {
    SchurEntry e;
    e.label = "1";
    e.degree = 1;
    e.f = rf_const(1);
    e.provenance = "trivial";
    e.char_values = {Cyc::one()};
    t.entries.push_back(std::move(e));
    return t;
  }
  if (n0 == W->size()) {
    // reindex the full table through the subgroup view's class order
    SchurTable full = schur_elements(W);
    for (auto& e : full.entries) {
      std::vector<Cyc> vals(sub.group->num_classes());
      for (size_t c = 0; c < sub.group->num_classes(); ++c) {
        size_t parent = sub.to_parent[sub.group->class_rep(c)];
        vals[c] = e.char_values[W->class_of(parent)];
      }
      e.char_values = std::move(vals);
    }
    full.W = sub.group;
    return full;
  }
  // cyclic stabiliser: all elements are powers of one generator of maximal
  // order whose eigenvalue is the standard primitive root
  {
    size_t gen = SIZE_MAX;
    for (size_t i = 1; i < n0; ++i) {
      if (sub.group->element_order(i) != static_cast<long>(n0)) continue;
      size_t parent = sub.to_parent[i];
      CMat fix = fixed_space(W->element(parent));
      if (fix.rows() + 1 != static_cast<size_t>(W->rank())) continue;
      // determinant equals the nontrivial eigenvalue for a reflection
      Cyc det = Cyc::one();
      {
        CMat mm = W->element(parent);
        Matrix<Cyc> copy = mm;
        size_t nn = copy.rows();
        for (size_t col = 0, row = 0; col < nn && row < nn; ++col) {
          size_t piv = row;
          while (piv < nn && f_is_zero(copy(piv, col))) ++piv;
          if (piv == nn) {
            det = Cyc();
            break;
          }
          if (piv != row) {
            for (size_t j = 0; j < nn; ++j) std::swap(copy(piv, j), copy(row, j));
            det = -det;
          }
          det = det * copy(row, col);
          Cyc invp = copy(row, col).inverse();
          for (size_t i2 = row + 1; i2 < nn; ++i2) {
            if (f_is_zero(copy(i2, col))) continue;
            Cyc f = copy(i2, col) * invp;
            for (size_t j = col; j < nn; ++j) copy(i2, j) = copy(i2, j) - f * copy(row, j);
          }
          ++row;
        }
      }
      if (det == Cyc::zeta(static_cast<long>(n0))) {
        gen = i;
        break;
      }
    }
    if (gen != SIZE_MAX) {
      long e = static_cast<long>(n0);
      std::vector<long> dlog(sub.group->num_classes(), -1);
      size_t x = 0;
      for (long kk = 0; kk < e; ++kk) {
        dlog[sub.group->class_of(x)] = kk;
        x = sub.group->mul(x, gen);
      }
      bool all = true;
      for (long d : dlog)
        if (d < 0) all = false;
      if (all) {
        std::vector<RatFun> u;
        for (long j = 1; j < e; ++j) u.push_back(rf_const(Cyc::zeta_pow(e, j)));
        u.push_back(rf_x());
        for (long j = 1; j <= e; ++j) {
          SchurEntry entry;
          entry.label = j == e ? "chi^0" : "chi^" + std::to_string(j);
          entry.degree = 1;
          entry.provenance = "cyclic-formula";
          RatFun f = rf_const(1);
          for (long i = 1; i <= e; ++i) {
            if (i == j) continue;
            f = f * (u[j - 1] - u[i - 1]) / (rf_const(0) - u[i - 1]);
          }
          entry.f = f;
          entry.char_values.resize(sub.group->num_classes());
          for (size_t c = 0; c < sub.group->num_classes(); ++c)
            entry.char_values[c] = Cyc::zeta_pow(e, (j % e) * dlog[c]);
          t.entries.push_back(std::move(entry));
        }
        assert_psi1(t);
        return t;
      }
    }
  }
  throw std::invalid_argument("provider-missing: unsupported stabiliser shape");
}

std::vector<size_t> entry_rows(const SchurTable& table, const CharTable& tab) {
  std::vector<size_t> rows;
  std::vector<char> used(tab.num_chars(), 0);
  for (const auto& e : table.entries) {
    auto r = tab.find_row(e.char_values);
    if (!r) throw std::logic_error("Schur entry character not found in the table");
    if (used[*r]) throw std::logic_error("two Schur entries match one table row");
    used[*r] = 1;
    if (tab.degrees[*r] != e.degree)
      throw std::logic_error("Schur entry degree disagrees with the table");
    rows.push_back(*r);
  }
  return rows;
}

std::string schur_table_json(const SchurTable& table) {
  nlohmann::ordered_json j;
  j["group"] = table.W->spec().name;
  auto entries = nlohmann::ordered_json::array();
  auto dump_lpoly = [](const LPoly& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
      nlohmann::ordered_json term;
      term["exp"] = e;
      term["m"] = c.conductor();
      std::vector<std::string> cs;
      for (const auto& r : c.coeffs()) cs.push_back(r.get_str());
      term["c"] = cs;
      out.push_back(term);
    }
    return out;
  };
  for (const auto& e : table.entries) {
    nlohmann::ordered_json je;
    je["label"] = e.label;
    je["degree"] = e.degree;
    je["numerator"] = dump_lpoly(e.f.num());
    je["denominator"] = dump_lpoly(e.f.den());
    je["provenance"] = e.provenance;
    entries.push_back(je);
  }
  j["entries"] = entries;
  return j.dump(1);
}

}  // namespace zlspets
