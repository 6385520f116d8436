#include "zlspets/lpoly.hpp"

namespace zlspets {

namespace {

LPoly shift(const LPoly& p, long k) {  // multiply by y^k
  LPoly out(p.zvar());
  for (const auto& [e, v] : p.terms()) out.set(e + k, v);
  return out;
}

}  // namespace

std::pair<LPoly, LPoly> poly_divmod(const LPoly& a, const LPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: zero divisor");
  if (a.zvar() != b.zvar()) throw std::invalid_argument("poly_divmod: mixed z");
  long z = a.zvar();
  // require genuine polynomials (order >= 0)
  if ((!a.is_zero() && a.order() < 0) || b.order() < 0)
    throw std::invalid_argument("poly_divmod: negative orders");
  LPoly rem = a, quot(z);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    Cyc c = rem.coeff(rem.degree()) * b.coeff(b.degree()).inverse();
    long k = rem.degree() - b.degree();
    LPoly t(z);
    t.set(k, c);
    quot = quot + t;
    rem = rem - t * b;
  }
  return {quot, rem};
}

LPoly poly_gcd(LPoly a, LPoly b) {
  long z = std::lcm(a.zvar(), b.zvar());
  a = a.with_z(z);
  b = b.with_z(z);
  // strip y-orders: gcd is taken in the polynomial ring
  if (!a.is_zero() && a.order() != 0) a = shift(a, -a.order());
  if (!b.is_zero() && b.order() != 0) b = shift(b, -b.order());
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
    if (!b.is_zero() && b.order() != 0) b = shift(b, -b.order());
  }
  if (a.is_zero()) return a;
  // monic
  return a.coeff(a.degree()).inverse() * a;
}

void RatFun::normalise() {
  if (num_.zvar() != den_.zvar()) {
    long Z = std::lcm(num_.zvar(), den_.zvar());
    num_ = num_.with_z(Z);
    den_ = den_.with_z(Z);
  }
  if (num_.is_zero()) {
    den_ = LPoly::constant(Cyc::one(), den_.zvar());
    return;
  }
  // clear laurent orders jointly
  long shift_amt = std::min(num_.order(), den_.order());
  if (shift_amt != 0) {
    num_ = shift(num_, -shift_amt);
    den_ = shift(den_, -shift_amt);
  }
  if (den_.order() > 0) {  // keep denominator with nonzero constant term
    long s = den_.order();
    num_ = shift(num_, -s);
    den_ = shift(den_, -s);
  }
  LPoly g = poly_gcd(num_.order() >= 0 ? num_ : shift(num_, -num_.order()), den_);
  if (!g.is_zero() && g.degree() > 0) {
    long nord = std::min<long>(num_.order(), 0);
    LPoly npoly = nord < 0 ? shift(num_, -nord) : num_;
    auto [qn, rn] = poly_divmod(npoly, g);
    auto [qd, rd] = poly_divmod(den_, g);
    if (rn.is_zero() && rd.is_zero()) {
      num_ = nord < 0 ? shift(qn, nord) : qn;
      den_ = qd;
    }
  }
  Cyc lead = den_.coeff(den_.degree());
  if (!(lead == Cyc::one())) {
    Cyc inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

bool RatFun::is_lpoly() const {
  if (num_.is_zero()) return true;
  long nord = std::min<long>(num_.order(), 0);
  LPoly npoly = nord < 0 ? shift(num_, -nord) : num_;
  auto [q, r] = poly_divmod(npoly, den_);
  (void)q;
  return r.is_zero();
}

LPoly RatFun::as_lpoly() const {
  if (num_.is_zero()) return LPoly(num_.zvar());
  long nord = std::min<long>(num_.order(), 0);
  LPoly npoly = nord < 0 ? shift(num_, -nord) : num_;
  auto [q, r] = poly_divmod(npoly, den_);
  if (!r.is_zero()) throw std::domain_error("RatFun: not a Laurent polynomial");
  return nord < 0 ? shift(q, nord) : q;
}

}  // namespace zlspets
