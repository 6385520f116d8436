#include "zlspets/oscount.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "zlspets/torus.hpp"

namespace zlspets {

namespace {

bool flat_subset(const CMat& small, const CMat& big) {
  // every basis row of small lies in the row space of big
  if (small.rows() > big.rows()) return false;
  size_t n = small.cols();
  CMat stacked(big.rows() + small.rows(), n, Cyc());
  for (size_t i = 0; i < big.rows(); ++i)
    for (size_t j = 0; j < n; ++j) stacked(i, j) = big(i, j);
  for (size_t i = 0; i < small.rows(); ++i)
    for (size_t j = 0; j < n; ++j) stacked(big.rows() + i, j) = small(i, j);
  return stacked.rank() == big.rows();
}

// diagonal form of a small integer matrix under unimodular row/column
// operations; returns the nonzero diagonal entries
std::vector<Int> elementary_divisors(std::vector<std::vector<Int>> m) {
  size_t rows = m.size();
  if (rows == 0) return {};
  size_t cols = m[0].size();
  std::vector<Int> divs;
  size_t top = 0;
  while (top < rows && top < cols) {
    size_t pr = SIZE_MAX, pc = SIZE_MAX;
    Int best = 0;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (pr == SIZE_MAX || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr == SIZE_MAX) break;
    std::swap(m[top], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < rows; ++i) {
        if (m[i][top] == 0) continue;
        Int q = m[i][top] / m[top][top];
        for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) {
          std::swap(m[top], m[i]);
          clean = false;
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        Int q = m[top][j] / m[top][top];
        for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][j]);
          clean = false;
        }
      }
    }
    divs.push_back(abs(m[top][top]));
    ++top;
  }
  return divs;
}

std::vector<size_t> flat_stabiliser(const ReflGroup& W, size_t flat) {
  const CMat& basis = W.flats()[flat];
  long n = W.rank();
  std::vector<size_t> stab;
  for (size_t i = 0; i < W.size(); ++i) {
    const CMat& m = W.element(i);
    bool fixes = true;
    for (size_t r = 0; r < basis.rows() && fixes; ++r)
      for (long c = 0; c < n && fixes; ++c) {
        Cyc acc;
        for (long j = 0; j < n; ++j) acc = acc + m(c, j) * basis(r, j);
        if (!(acc == basis(r, c))) fixes = false;
      }
    if (fixes) stab.push_back(i);
  }
  return stab;
}

}  // namespace

FixedLattice FixedLattice::build(std::shared_ptr<const ReflGroup> W) {
  FixedLattice L;
  L.W = W;
  const auto& flats = W->flats();
  size_t k = flats.size();
  L.flat_dim.resize(k);
  for (size_t i = 0; i < k; ++i) L.flat_dim[i] = static_cast<long>(flats[i].rows());
  L.contains.assign(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) L.contains[i][j] = flat_subset(flats[j], flats[i]) ? 1 : 0;
  // mobius[j][i]: Moebius function of the interval [j, i] in the poset where
  // j <= i means flat i is a subspace of flat j (the full space is minimal)
  L.mobius.assign(k, std::vector<long>(k, 0));
  std::vector<std::vector<char>> done(k, std::vector<char>(k, 0));
  std::function<long(size_t, size_t)> mu = [&](size_t j, size_t i) -> long {
    if (!L.contains[j][i]) return 0;
    if (done[j][i]) return L.mobius[j][i];
    long val;
    if (i == j) {
      val = 1;
    } else {
      long acc = 0;
      for (size_t v = 0; v < k; ++v) {
        if (v == i) continue;
        if (L.contains[j][v] && L.contains[v][i]) acc += mu(j, v);
      }
      val = -acc;
    }
    done[j][i] = 1;
    L.mobius[j][i] = val;
    return val;
  };
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < k; ++i) mu(j, i);
  return L;
}

std::uint64_t flat_point_count(const ReflGroup& W, size_t flat, std::uint64_t l, unsigned a) {
  auto stab = flat_stabiliser(W, flat);
  long n = W.rank();
  std::uint64_t la = ipow(l, a);
  std::vector<std::vector<Int>> stacked;
  for (size_t w : stab) {
    if (w == 0) continue;
    const CMat& m = W.element(w);
    for (long i = 0; i < n; ++i) {
      std::vector<Int> row(n);
      for (long j = 0; j < n; ++j) {
        std::uint64_t v = m(i, j).residue_image(l, a).value;
        row[j] = Int(static_cast<unsigned long>(v)) - (i == j ? 1 : 0);
      }
      stacked.push_back(std::move(row));
    }
  }
  long dim = static_cast<long>(W.flats()[flat].rows());
  // |ker(M mod l^a)| = (l^a)^(n-r) * prod gcd(d_i, l^a) over the nonzero
  // elementary divisors d_i of any integer lift
  Int count = 1;
  Int q = pow_int(Int(static_cast<unsigned long>(l)), a);
  if (stacked.empty()) {
    for (long i = 0; i < n; ++i) count *= q;
  } else {
    auto divs = elementary_divisors(stacked);
    long r = 0;
    for (const auto& d : divs) {
      if (d == 0) continue;
      ++r;
      count *= gcd(d, q);
    }
    for (long i = 0; i < n - r; ++i) count *= q;
  }
  Int expected = 1;
  for (long i = 0; i < dim; ++i) expected *= q;
  if (count != expected)
    throw std::logic_error("internal-consistency: flat count is not the expected power of l");
  return count.get_ui();
}

std::uint64_t os_count(const FixedLattice& L, size_t parabolic_class, std::uint64_t l,
                       unsigned a) {
  const ReflGroup& W = *L.W;
  const auto& classes = W.parabolic_classes();
  const auto& parabolics = W.parabolics();
  const auto& cls = classes.at(parabolic_class);
  size_t flat0 = parabolics[cls.rep_subgroup].flat;
  // points of the flat whose stabiliser is exactly its pointwise stabiliser:
  // inclusion-exclusion over the flats below it (smaller subspaces)
  Int e = 0;
  size_t k = L.flat_dim.size();
  for (size_t z = 0; z < k; ++z) {
    if (!L.contains[flat0][z]) continue;
    long mu = L.mobius[flat0][z];
    if (mu == 0) continue;
    e += Int(mu) * Int(static_cast<unsigned long>(flat_point_count(W, z, l, a)));
  }
  if (e < 0) throw std::logic_error("negative exact point count");
  Int denom(static_cast<unsigned long>(cls.norm_index));
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), denom.get_mpz_t());
  if (r != 0)
    throw std::logic_error("orbit count is not divisible by the normaliser index");
  return q.get_ui();
}

std::vector<long> os_roots(const FixedLattice& L, size_t parabolic_class,
                           const std::vector<std::pair<std::uint64_t, unsigned>>& samples) {
  const ReflGroup& W = *L.W;
  const auto& cls = W.parabolic_classes().at(parabolic_class);
  // the count polynomial has degree dim C_T(W0) = n - rk(W0)
  long deg = W.rank() - cls.rank;
  if (samples.size() < static_cast<size_t>(deg) + 1)
    throw std::invalid_argument("need at least rank+1 samples to interpolate");
  std::vector<Rat> ts, ys;
  for (auto [l, a] : samples) {
    ts.push_back(Rat(static_cast<unsigned long>(ipow(l, a))));
    std::uint64_t orbits = os_count(L, parabolic_class, l, a);
    ys.push_back(Rat(static_cast<unsigned long>(orbits)) *
                 Rat(static_cast<unsigned long>(cls.norm_index)));
  }
  size_t m = deg + 1;
  std::vector<Rat> coeff(m, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t k2 = 0; k2 < basis.size(); ++k2) {
        next[k2 + 1] += basis[k2];
        next[k2] -= basis[k2] * ts[j];
      }
      basis = std::move(next);
      denom *= ts[i] - ts[j];
    }
    for (size_t k2 = 0; k2 < basis.size(); ++k2) coeff[k2] += ys[i] * basis[k2] / denom;
  }
  for (size_t s = m; s < samples.size(); ++s) {
    Rat val(0), tp(1);
    for (size_t k2 = 0; k2 < m; ++k2) {
      val += coeff[k2] * tp;
      tp *= ts[s];
    }
    if (val != ys[s])
      throw std::logic_error("interpolated orbit polynomial fails on extra samples");
  }
  for (auto& c : coeff)
    if (!is_integer(c))
      throw std::runtime_error("falsification: orbit polynomial has non-integer coefficients");
  if (coeff[deg] != Rat(1))
    throw std::runtime_error("falsification: orbit polynomial is not monic");
  std::vector<Int> poly;
  for (auto& c : coeff) poly.push_back(Int(c.get_num()));
  std::vector<long> roots;
  for (long d = deg; d > 0; --d) {
    Int c0 = poly[0];
    bool have = false;
    long found = 0;
    if (c0 == 0) {
      have = true;
    } else {
      Int bound = abs(c0);
      for (Int cand = 1; cand * cand <= bound && !have; ++cand) {
        if (bound % cand != 0) continue;
        for (const Int& divisor : {Int(cand), Int(bound / cand)}) {
          for (int sign : {1, -1}) {
            Int b = sign * divisor;
            Int val = 0, bp = 1;
            for (long k2 = 0; k2 <= d; ++k2) {
              val += poly[k2] * bp;
              bp *= b;
            }
            if (val == 0) {
              found = static_cast<long>(b.get_si());
              have = true;
              break;
            }
          }
          if (have) break;
        }
      }
    }
    if (!have)
      throw std::runtime_error("falsification: orbit polynomial has a non-integer root");
    roots.push_back(found);
    std::vector<Int> next(d, 0);
    Int carry = poly[d];
    for (long k2 = d - 1; k2 >= 0; --k2) {
      next[k2] = carry;
      carry = poly[k2] + carry * found;
    }
    if (carry != 0) throw std::logic_error("deflation failed");
    poly = std::move(next);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<std::uint64_t, unsigned>> admissible_la_samples(const ReflGroup& W,
                                                                      size_t count,
                                                                      std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, unsigned>>> ranked;
  for (std::uint64_t l = 3; l <= bound; l += 2) {
    if (ranked.size() >= count) {
      std::vector<std::uint64_t> vals;
      for (auto& [t, la] : ranked) vals.push_back(t);
      std::sort(vals.begin(), vals.end());
      if (l > vals[count - 1]) break;  // no later prime can beat the chosen ones
    }
    if (!admissible_prime(W, l)) continue;
    std::uint64_t t = l;
    unsigned a = 1;
    while (t <= bound) {
      ranked.push_back({t, {l, a}});
      if (t > bound / l) break;
      t *= l;
      ++a;
    }
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (auto& [t, la] : ranked) {
    out.push_back(la);
    if (out.size() == count) break;
  }
  if (out.size() < count) throw std::runtime_error("not enough admissible prime powers");
  return out;
}

}  // namespace zlspets
