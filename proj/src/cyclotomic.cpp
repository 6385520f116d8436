#include "zlspets/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace zlspets {

namespace {

// Quotient of polynomial division a / b over Q, b monic-ish (exact division
// expected by callers computing cyclotomic polynomials).
std::vector<Rat> poly_divide_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (b.empty() || zlspets::is_zero(b.back()))
    throw std::invalid_argument("poly_divide_exact: bad divisor");
  std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    while (!a.empty() && zlspets::is_zero(a.back())) a.pop_back();
    if (a.size() < b.size()) break;
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
  }
  for (const auto& r : a)
    if (!zlspets::is_zero(r)) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return q;
}

std::vector<Rat> cyclotomic_poly(long m) {
  // x^m - 1 divided by all Phi_d, d | m, d < m.
  std::vector<Rat> num(m + 1, Rat(0));
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_poly(d));
  }
  return num;
}

}  // namespace

const CycField& CycField::get(long m) {
  static std::map<long, CycField> registry;
  auto it = registry.find(m);
  if (it != registry.end()) return it->second;

  CycField f;
  f.m = m;
  f.phi_poly = cyclotomic_poly(m);
  f.deg = static_cast<long>(f.phi_poly.size()) - 1;
  // x^(deg+i) = x^(deg+i-1) * x reduced mod Phi_m.
  std::vector<Rat> cur(f.deg, Rat(0));  // x^deg reduced
  for (long j = 0; j < f.deg; ++j) cur[j] = -f.phi_poly[j];  // monic
  f.reductions.push_back(cur);
  for (long i = 1; i <= f.deg - 2; ++i) {
    std::vector<Rat> next(f.deg, Rat(0));
    // multiply cur by x
    Rat top = cur[f.deg - 1];
    for (long j = f.deg - 1; j >= 1; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (!zlspets::is_zero(top))
      for (long j = 0; j < f.deg; ++j) next[j] += top * f.reductions[0][j];
    f.reductions.push_back(next);
    cur = next;
  }
  auto [pos, ok] = registry.emplace(m, std::move(f));
  (void)ok;
  return pos->second;
}

Cyc Cyc::mul_same_field(const Cyc& a, const Cyc& b) {
  const CycField& F = CycField::get(a.m_);
  long d = F.deg;
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (long i = 0; i < d; ++i) {
    if (zlspets::is_zero(a.c_[i])) continue;
    for (long j = 0; j < d; ++j) {
      if (zlspets::is_zero(b.c_[j])) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> out(d, Rat(0));
  for (long k = 0; k < d && k < static_cast<long>(prod.size()); ++k) out[k] = prod[k];
  for (long k = d; k < static_cast<long>(prod.size()); ++k) {
    if (zlspets::is_zero(prod[k])) continue;
    const auto& row = F.reductions[k - d];
    for (long j = 0; j < d; ++j) out[j] += prod[k] * row[j];
  }
  return Cyc(a.m_, std::move(out));
}

namespace {
// Evaluate the power-basis expansion at a substitute value z living in
// Q(zeta_M): returns sum c_i z^i at conductor M.
Cyc substitute(const std::vector<Rat>& coeffs, long M, const Cyc& z) {
  std::vector<Rat> zero(Cyc::phi(M), Rat(0));
  Cyc acc(M, zero);
  std::vector<Rat> one = zero;
  one[0] = 1;
  Cyc zp(M, one);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!zlspets::is_zero(coeffs[i])) acc = acc + coeffs[i] * zp;
    if (i + 1 < coeffs.size()) zp = zp * z;
  }
  return acc;
}
}  // namespace

Cyc Cyc::embedded(long M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::invalid_argument("Cyc::embedded: m does not divide M");
  return substitute(c_, M, Cyc::zeta_pow(M, M / m_));
}

Cyc Cyc::galois(long k) const {
  k %= m_;
  if (k < 0) k += m_;
  if (m_ == 1) return *this;
  if (std::gcd(k, m_) != 1) throw std::invalid_argument("galois: k not coprime to m");
  return substitute(c_, m_, Cyc::zeta_pow(m_, k));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: division by zero");
  if (is_rational()) return Cyc(m_, [&] {
    std::vector<Rat> c(phi(m_), Rat(0));
    c[0] = Rat(1) / c_[0];
    return c;
  }());
  // Extended Euclid in Q[x] against Phi_m: s*f + t*Phi = gcd = const.
  const CycField& F = CycField::get(m_);
  std::vector<Rat> r0 = F.phi_poly;
  std::vector<Rat> r1(c_.begin(), c_.end());
  while (!r1.empty() && zlspets::is_zero(r1.back())) r1.pop_back();
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of f
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && zlspets::is_zero(p.back())) p.pop_back();
  };
  while (r1.size() > 1) {
    // divide r0 by r1
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    std::vector<Rat> rem = r0;
    while (rem.size() >= r1.size()) {
      trim(rem);
      if (rem.size() < r1.size()) break;
      Rat c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
    }
    trim(rem);
    // s2 = s0 - q*s1
    std::vector<Rat> qs(q.size() + s1.size() - 1, Rat(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("Cyc::inverse: element not invertible");
  Rat g = r1[0];
  std::vector<Rat> inv(phi(m_), Rat(0));
  for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / g;
  // s1 may exceed basis length only transiently; reduce defensively.
  if (s1.size() > inv.size()) {
    Cyc acc(m_, std::vector<Rat>(phi(m_), Rat(0)));
    Cyc z = Cyc::zeta(m_);
    Cyc zp = Cyc::one().embedded(m_);
    for (size_t i = 0; i < s1.size(); ++i) {
      if (!zlspets::is_zero(s1[i])) acc = acc + (s1[i] / g) * zp;
      zp = zp * z;
    }
    return acc;
  }
  return Cyc(m_, std::move(inv));
}

ResidueInt Cyc::residue_image(std::uint64_t l, unsigned a) const {
  std::uint64_t la = ipow(l, a);
  if (m_ == 1 || is_rational()) {
    const Rat& r = c_[0];
    Int num = r.get_num(), den = r.get_den();
    Int lz(static_cast<unsigned long>(l));
    if (mpz_divisible_p(den.get_mpz_t(), lz.get_mpz_t()))
      throw std::domain_error("residue_image: denominator divisible by l");
    Int laz(static_cast<unsigned long>(la));
    Int n = num % laz;
    if (n < 0) n += laz;
    Int d = den % laz;
    std::uint64_t dv = d.get_ui();
    std::uint64_t dinv = powmod(dv, la / l * (l - 1) - 1, la);  // unit inverse mod l^a
    return ResidueInt(la, ResidueInt::mulmod(n.get_ui(), dinv, la));
  }
  if ((l - 1) % static_cast<std::uint64_t>(m_) != 0)
    throw std::invalid_argument("residue_image: conductor does not divide l-1");
  ResidueInt u = lift_root_of_unity(l, a, m_);
  ResidueInt acc(la, 0), up(la, 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    acc = acc + Cyc(c_[i]).residue_image(l, a) * up;
    up = up * u;
  }
  return acc;
}

long Cyc::root_of_unity_order(long bound) const {
  Cyc p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p == Cyc::one()) return k;
    p = p * (*this);
  }
  return 0;
}

std::string Cyc::key() const {
  if (is_rational()) return "Q:" + c_[0].get_str();
  std::ostringstream os;
  os << "m" << m_ << ":";
  for (const auto& r : c_) os << r.get_str() << ",";
  return os.str();
}

std::string Cyc::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << c_[0].get_str();
    return os.str();
  }
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (zlspets::is_zero(c_[i])) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*z" << m_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace zlspets
