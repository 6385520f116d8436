#include "zlspets/hecke.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace zlspets {

namespace {

template <class F>
F fzero() {
  return f_zero(static_cast<const F*>(nullptr));
}
template <class F>
F fone() {
  return f_one(static_cast<const F*>(nullptr));
}

bool all_order_two(const ReflGroup& W) {
  for (long o : W.spec().gen_orders)
    if (o != 2) return false;
  return true;
}

}  // namespace

bool engine_supported(const ReflGroup& W) {
  using Fam = GroupSpec::Family;
  switch (W.spec().family) {
    case Fam::CoxeterCartan:
    case Fam::Dihedral:
    case Fam::SwapRank2:
      return all_order_two(W);
    case Fam::Cyclic:
      return true;
    case Fam::Imprimitive:
      return W.spec().n == 2;
    case Fam::Product:
      return !W.spec().factors.empty() && all_order_two(W);
  }
  return false;
}

template <class F>
std::vector<F> HeckeEngine<F>::params(size_t g) const {
  long o = W_->spec().gen_orders[g];
  std::vector<F> u;
  for (long j = 1; j < o; ++j)
    u.push_back(f_from_cyc(Cyc::zeta_pow(o, j), static_cast<const F*>(nullptr)));
  u.push_back(q_);
  return u;
}

template <class F>
HeckeEngine<F>::HeckeEngine(std::shared_ptr<const ReflGroup> W, F qval)
    : W_(std::move(W)), q_(std::move(qval)) {
  if (!engine_supported(*W_))
    throw std::invalid_argument("presentation error: no Hecke engine for this family");
  using Fam = GroupSpec::Family;
  switch (W_->spec().family) {
    case Fam::Cyclic:
      build_cyclic();
      break;
    case Fam::Imprimitive:
      build_ariki_koike();
      break;
    default:
      build_coxeter();
      break;
  }
}

// T_w T_s = T_{ws} when the length goes up, else through the quadratic
// relation (T_s - q)(T_s + 1) = 0.
template <class F>
void HeckeEngine<F>::build_coxeter() {
  size_t n = W_->size();
  size_t gens = W_->num_gens();
  words_.resize(n);
  for (size_t i = 0; i < n; ++i) words_[i] = W_->word(i);
  const F qm1 = q_ - fone<F>();
  rmg_.assign(n, {});
  for (size_t w = 0; w < n; ++w) {
    rmg_[w].resize(gens);
    for (size_t g = 0; g < gens; ++g) {
      size_t wg = W_->mul(w, W_->gen_index(g));
      if (W_->word_length(wg) > W_->word_length(w)) {
        rmg_[w][g] = {{wg, fone<F>()}};
      } else {
        rmg_[w][g] = {{w, qm1}, {wg, q_}};
      }
    }
  }
}

template <class F>
void HeckeEngine<F>::build_cyclic() {
  size_t n = W_->size();
  long e = W_->spec().e;
  words_.resize(n);
  std::vector<size_t> power(n);
  size_t x = 0;
  for (long k = 0; k < e; ++k) {
    words_[x] = std::vector<int>(k, 0);
    power[k] = x;
    x = W_->mul(x, W_->gen_index(0));
  }
  // T^e = sum_{i=1..e} (-1)^(i-1) sym_i(u) T^(e-i)
  auto u = params(0);
  std::vector<F> sym(e + 1, fzero<F>());
  sym[0] = fone<F>();
  for (long i = 0; i < e; ++i)
    for (long j = std::min<long>(i + 1, e); j >= 1; --j)
      sym[j] = sym[j] + u[i] * sym[j - 1];
  rmg_.assign(n, {});
  for (long k = 0; k < e; ++k) {
    rmg_[power[k]].resize(1);
    if (k + 1 < e) {
      rmg_[power[k]][0] = {{power[k + 1], fone<F>()}};
    } else {
      std::vector<std::pair<size_t, F>> expansion;
      for (long i = 1; i <= e; ++i) {
        F c = sym[i];
        if ((i - 1) % 2) c = fzero<F>() - c;
        if (!f_is_zero(c)) expansion.push_back({power[e - i], c});
      }
      rmg_[power[k]][0] = std::move(expansion);
    }
  }
}

// G(e,1,2): words over {0 = t0 (order e), 1 = s (order 2)} with normal forms
// 0^a, 0^a 1 0^b, 0^a 1 0^b 1 (b >= 1). Rewriting uses the order relations
// and the braid-derived identity
//   1 0^a 1 0 = 0 1 0^a 1 + (q-1) 0^a 1 0 - (q-1) 0 1 0^a.
template <class F>
void HeckeEngine<F>::build_ariki_koike() {
  long e = W_->spec().e;
  size_t n = W_->size();
  if (W_->spec().n != 2) throw std::invalid_argument("Ariki-Koike engine needs rank 2");

  auto word_to_elem = [&](const std::vector<int>& w) {
    size_t x = 0;
    for (int g : w) x = W_->mul(x, W_->gen_index(static_cast<size_t>(g)));
    return x;
  };

  std::vector<std::vector<int>> nf;
  for (long a = 0; a < e; ++a) nf.push_back(std::vector<int>(a, 0));
  for (long a = 0; a < e; ++a)
    for (long b = 0; b < e; ++b) {
      std::vector<int> w(a, 0);
      w.push_back(1);
      w.insert(w.end(), b, 0);
      nf.push_back(std::move(w));
    }
  for (long a = 0; a < e; ++a)
    for (long b = 1; b < e; ++b) {
      std::vector<int> w(a, 0);
      w.push_back(1);
      w.insert(w.end(), b, 0);
      w.push_back(1);
      nf.push_back(std::move(w));
    }
  if (nf.size() != n) throw std::logic_error("normal form count mismatch");
  words_.assign(n, {});
  std::vector<char> hit(n, 0);
  for (auto& w : nf) {
    size_t idx = word_to_elem(w);
    if (hit[idx]) throw std::logic_error("normal forms do not map bijectively");
    hit[idx] = 1;
    words_[idx] = w;
  }

  auto u0 = params(0);
  auto u1 = params(1);
  const F lam = u1[0] + u1[1];              // q - 1
  const F mu = fzero<F>() - u1[0] * u1[1];  // q
  std::vector<F> sym(e + 1, fzero<F>());
  sym[0] = fone<F>();
  for (long i = 0; i < e; ++i)
    for (long j = std::min<long>(i + 1, e); j >= 1; --j)
      sym[j] = sym[j] + u0[i] * sym[j - 1];

  using Word = std::vector<int>;
  std::function<void(const Word&, const F&, std::map<size_t, F>&, long&)> reduce =
      [&](const Word& w, const F& coef, std::map<size_t, F>& out, long& budget) {
        if (--budget < 0)
          throw std::runtime_error("presentation error: rewriting budget exhausted");
        for (size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] == 1 && w[i + 1] == 1) {
            Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 2, w.end());
            Word one = pre;
            one.push_back(1);
            one.insert(one.end(), post.begin(), post.end());
            Word none = pre;
            none.insert(none.end(), post.begin(), post.end());
            reduce(one, coef * lam, out, budget);
            reduce(none, coef * mu, out, budget);
            return;
          }
        }
        for (size_t i = 0; i < w.size();) {
          size_t run = 0;
          while (i + run < w.size() && w[i + run] == 0) ++run;
          if (run >= static_cast<size_t>(e)) {
            Word pre(w.begin(), w.begin() + i), post(w.begin() + i + e, w.end());
            for (long j = 1; j <= e; ++j) {
              F c = sym[j];
              if ((j - 1) % 2) c = fzero<F>() - c;
              if (f_is_zero(c)) continue;
              Word t = pre;
              t.insert(t.end(), static_cast<size_t>(e - j), 0);
              t.insert(t.end(), post.begin(), post.end());
              reduce(t, coef * c, out, budget);
            }
            return;
          }
          i += run ? run : 1;
        }
        for (size_t i = 0; i < w.size(); ++i) {
          if (w[i] != 1) continue;
          size_t j = i + 1;
          while (j < w.size() && w[j] == 0) ++j;
          size_t a = j - i - 1;
          if (a >= 1 && j + 1 < w.size() && w[j] == 1 && w[j + 1] == 0) {
            Word pre(w.begin(), w.begin() + i), post(w.begin() + j + 2, w.end());
            Word t1 = pre;  // 0 1 0^a 1
            t1.push_back(0);
            t1.push_back(1);
            t1.insert(t1.end(), a, 0);
            t1.push_back(1);
            t1.insert(t1.end(), post.begin(), post.end());
            reduce(t1, coef, out, budget);
            Word t2 = pre;  // (q-1) 0^a 1 0
            t2.insert(t2.end(), a, 0);
            t2.push_back(1);
            t2.push_back(0);
            t2.insert(t2.end(), post.begin(), post.end());
            reduce(t2, coef * lam, out, budget);
            Word t3 = pre;  // -(q-1) 0 1 0^a
            t3.push_back(0);
            t3.push_back(1);
            t3.insert(t3.end(), a, 0);
            t3.insert(t3.end(), post.begin(), post.end());
            reduce(t3, fzero<F>() - coef * lam, out, budget);
            return;
          }
        }
        size_t idx = word_to_elem(w);
        if (words_[idx] != w) throw std::logic_error("reduced word is not the normal form");
        auto it = out.find(idx);
        if (it == out.end())
          out.emplace(idx, coef);
        else
          it->second = it->second + coef;
      };

  rmg_.assign(n, {});
  for (size_t wi = 0; wi < n; ++wi) {
    rmg_[wi].resize(2);
    for (int g = 0; g < 2; ++g) {
      Word w = words_[wi];
      w.push_back(g);
      std::map<size_t, F> out;
      long budget = 200000;
      reduce(w, fone<F>(), out, budget);
      std::vector<std::pair<size_t, F>> exp;
      for (auto& [idx, c] : out)
        if (!f_is_zero(c)) exp.push_back({idx, c});
      rmg_[wi][g] = std::move(exp);
    }
  }
}

template <class F>
typename HeckeEngine<F>::Vec HeckeEngine<F>::mult_gen(const Vec& v, size_t g) const {
  Vec out = zero();
  for (size_t w = 0; w < v.size(); ++w) {
    if (f_is_zero(v[w])) continue;
    for (const auto& [idx, c] : rmg_[w][g]) out[idx] = out[idx] + v[w] * c;
  }
  return out;
}

template <class F>
typename HeckeEngine<F>::Vec HeckeEngine<F>::mult(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (size_t w = 0; w < b.size(); ++w) {
    if (f_is_zero(b[w])) continue;
    Vec cur = a;
    for (int g : words_[w]) cur = mult_gen(cur, static_cast<size_t>(g));
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + cur[i] * b[w];
  }
  return out;
}

template <class F>
void HeckeEngine<F>::check_associativity(size_t full_cap) const {
  size_t n = dim();
  auto eq = [&](const Vec& x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return false;
    return true;
  };
  if (n <= full_cap) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Vec ab = mult(basis(a), basis(b));
        for (size_t c = 0; c < n; ++c)
          if (!eq(mult(ab, basis(c)), mult(basis(a), mult(basis(b), basis(c)))))
            throw std::logic_error("associativity failure");
      }
  } else {
    for (size_t a = 0; a < n; a += 7)
      for (size_t b = 1; b < n; b += 11)
        for (size_t c = 2; c < n; c += 13)
          if (!eq(mult(mult(basis(a), basis(b)), basis(c)),
                  mult(basis(a), mult(basis(b), basis(c)))))
            throw std::logic_error("associativity failure");
  }
}

template <class F>
Matrix<F> HeckeEngine<F>::gram() const {
  size_t n = dim();
  Matrix<F> g(n, n, fzero<F>());
  for (size_t v = 0; v < n; ++v) {
    Vec base = basis(v);
    for (size_t w = 0; w < n; ++w) {
      Vec cur = base;
      for (int gidx : words_[w]) cur = mult_gen(cur, static_cast<size_t>(gidx));
      g(v, w) = cur[0];
    }
  }
  return g;
}

template class HeckeEngine<Cyc>;
template class HeckeEngine<RatFun>;

std::vector<size_t> match_into_parent(const ReflGroup& standalone, const ReflGroup& W,
                                      const std::vector<size_t>& gen_images) {
  if (gen_images.size() != standalone.num_gens())
    throw std::invalid_argument("generator image count mismatch");
  std::vector<size_t> out(standalone.size());
  std::set<size_t> image;
  for (size_t i = 0; i < standalone.size(); ++i) {
    size_t x = 0;
    for (int g : standalone.word(i)) x = W.mul(x, gen_images[static_cast<size_t>(g)]);
    out[i] = x;
    if (!image.insert(x).second) throw std::logic_error("generator assignment not injective");
  }
  for (size_t i = 0; i < standalone.size(); ++i)
    for (size_t g = 0; g < standalone.num_gens(); ++g) {
      size_t lhs = out[standalone.mul(i, standalone.gen_index(g))];
      size_t rhs = W.mul(out[i], gen_images[g]);
      if (lhs != rhs) throw std::logic_error("generator assignment is not a homomorphism");
    }
  return out;
}

SchurVerification verify_schur(const HeckeEngine<Cyc>& engine, const SchurTable& table,
                               const Rat& q) {
  SchurVerification result;
  size_t n = engine.dim();
  Matrix<Cyc> G = engine.gram();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!(G(i, j) == G(j, i))) {
        result.detail = "gram matrix is not symmetric";
        return result;
      }
  Matrix<Cyc> Ginv;
  try {
    Ginv = G.inverse();
  } catch (const std::exception&) {
    result.detail = "bad specialisation: gram matrix singular at q";
    return result;
  }
  auto z = engine.zero();
  for (size_t w = 0; w < n; ++w) {
    auto dual = engine.zero();
    for (size_t v = 0; v < n; ++v) dual[v] = Ginv(w, v);
    auto prod = engine.mult(engine.basis(w), dual);
    for (size_t i = 0; i < n; ++i) z[i] = z[i] + prod[i];
  }
  for (size_t g = 0; g < engine.group().num_gens(); ++g) {
    auto tg = engine.basis(engine.group().gen_index(g));
    auto zg = engine.mult(z, tg);
    auto gz = engine.mult(tg, z);
    for (size_t i = 0; i < n; ++i)
      if (!(zg[i] == gz[i])) {
        result.detail = "projective element is not central";
        return result;
      }
  }
  std::vector<std::pair<Cyc, long>> eigen;
  for (const auto& e : table.entries) {
    Cyc lam = Cyc(rat(e.degree)) * e.f.eval(q);
    bool found = false;
    for (auto& [v, m] : eigen)
      if (v == lam) {
        m += e.degree * e.degree;
        found = true;
      }
    if (!found) eigen.push_back({lam, e.degree * e.degree});
  }
  auto acc = engine.unit();
  for (const auto& [lam, mult] : eigen) {
    (void)mult;
    auto factor = z;
    factor[0] = factor[0] - lam;
    acc = engine.mult(acc, factor);
  }
  for (size_t i = 0; i < n; ++i)
    if (!acc[i].is_zero()) {
      result.detail = "product of (z - lambda) does not annihilate the algebra";
      return result;
    }
  for (const auto& [lam, mult] : eigen) {
    auto shifted = z;
    shifted[0] = shifted[0] - lam;
    Matrix<Cyc> L(n, n, Cyc());
    for (size_t w = 0; w < n; ++w) {
      auto col = engine.mult(shifted, engine.basis(w));
      for (size_t i = 0; i < n; ++i) L(i, w) = col[i];
    }
    if (L.rank() != n - static_cast<size_t>(mult)) {
      result.detail = "rank of (z - lambda) does not match the multiplicity";
      return result;
    }
  }
  result.pass = true;
  result.detail = "annihilation and rank checks hold";
  return result;
}

bool check_parabolic_restriction(const HeckeEngine<Cyc>& engine,
                                 const HeckeEngine<Cyc>& sub_engine,
                                 const std::vector<HeckeEngine<Cyc>::Vec>& gen_images) {
  size_t n0 = sub_engine.dim();
  // realise the subgroup section inside the big algebra
  std::vector<HeckeEngine<Cyc>::Vec> mapped(n0);
  for (size_t i = 0; i < n0; ++i) {
    auto cur = engine.unit();
    for (int g : sub_engine.basis_words()[i])
      cur = engine.mult(cur, gen_images[static_cast<size_t>(g)]);
    mapped[i] = std::move(cur);
  }
  // canonical trace is delta on the section
  for (size_t i = 0; i < n0; ++i) {
    Cyc expect = (i == 0) ? Cyc::one() : Cyc();
    if (!(engine.trace(mapped[i]) == expect)) return false;
  }
  // products carry the subgroup's structure constants
  for (size_t a = 0; a < n0; ++a)
    for (size_t b = 0; b < n0; ++b) {
      auto big = engine.mult(mapped[a], mapped[b]);
      auto small = sub_engine.mult(sub_engine.basis(a), sub_engine.basis(b));
      auto expect = engine.zero();
      for (size_t c = 0; c < n0; ++c) {
        if (small[c].is_zero()) continue;
        for (size_t i = 0; i < expect.size(); ++i)
          expect[i] = expect[i] + small[c] * mapped[c][i];
      }
      for (size_t i = 0; i < big.size(); ++i)
        if (!(big[i] == expect[i])) return false;
    }
  return true;
}

BrauerCheck check_brauer_reciprocity(const std::shared_ptr<const ReflGroup>& W,
                                     const std::vector<size_t>& stab_elems,
                                     const std::vector<Rat>& q_samples) {
  BrauerCheck out;
  auto tabW = character_table(W);
  auto tableW = schur_elements(W);
  auto rowsW = entry_rows(tableW, tabW);

  auto sub = subgroup_view(W, stab_elems);
  auto tabS = character_table(sub.group);
  auto tableS = schur_for_stabiliser(W, sub);
  auto rowsS = entry_rows(tableS, tabS);

  auto mult = restriction_multiplicities(tabW, tabS, sub.to_parent);
  for (const Rat& q : q_samples) {
    for (size_t s = 0; s < tableS.entries.size(); ++s) {
      Cyc lhs = tableS.entries[s].f.eval(q).inverse();
      Cyc rhs;
      for (size_t c = 0; c < tableW.entries.size(); ++c) {
        long m = mult[rowsS[s]][rowsW[c]];
        if (!m) continue;
        rhs = rhs + Cyc(rat(m)) * tableW.entries[c].f.eval(q).inverse();
      }
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "falsification: reciprocity fails for " << W->spec().name
           << ", |W_s|=" << stab_elems.size() << ", phi=" << tableS.entries[s].label
           << ", q=" << q.get_str();
        out.detail = os.str();
        return out;
      }
    }
  }
  out.pass = true;
  out.detail = "reciprocity holds at all samples";
  return out;
}

}  // namespace zlspets
