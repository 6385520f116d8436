#ifndef ZLSPETS_LPOLY_HPP
#define ZLSPETS_LPOLY_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zlspets/cyclotomic.hpp"

namespace zlspets {

// Laurent polynomial in x, or in y with x = y^z when z > 1. Exponents are
// exponents of the working variable (y); x-degree k is stored as k*z.
// Zero coefficients are never stored.
class LPoly {
 public:
  explicit LPoly(long z = 1) : z_(z) {
    if (z < 1) throw std::invalid_argument("LPoly: z must be >= 1");
  }
  static LPoly constant(const Cyc& c, long z = 1) {
    LPoly p(z);
    if (!c.is_zero()) p.c_[0] = c;
    return p;
  }
  static LPoly x_power(long k, long z = 1) {  // x^k = y^(k*z)
    LPoly p(z);
    p.c_[k * z] = Cyc::one();
    return p;
  }
  static LPoly y_power(long k, long z) {
    LPoly p(z);
    p.c_[k] = Cyc::one();
    return p;
  }

  long zvar() const { return z_; }
  const std::map<long, Cyc>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }  // in y
  long order() const { return c_.empty() ? 0 : c_.begin()->first; }    // in y

  void set(long yexp, const Cyc& v) {
    if (v.is_zero())
      c_.erase(yexp);
    else
      c_[yexp] = v;
  }
  Cyc coeff(long yexp) const {
    auto it = c_.find(yexp);
    return it == c_.end() ? Cyc() : it->second;
  }
  Cyc x_coeff(long k) const { return coeff(k * z_); }

  LPoly with_z(long newz) const {
    if (newz % z_ != 0) throw std::invalid_argument("LPoly: incompatible z promotion");
    long f = newz / z_;
    LPoly out(newz);
    for (const auto& [e, v] : c_) out.c_[e * f] = v;
    return out;
  }

  friend LPoly operator+(const LPoly& a, const LPoly& b) {
    auto [x, y] = match(a, b);
    for (const auto& [e, v] : y.c_) {
      auto it = x.c_.find(e);
      if (it == x.c_.end())
        x.c_[e] = v;
      else {
        it->second = it->second + v;
        if (it->second.is_zero()) x.c_.erase(it);
      }
    }
    return x;
  }
  friend LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }
  LPoly operator-() const {
    LPoly r(z_);
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    auto [x, y] = match(a, b);
    LPoly r(x.z_);
    for (const auto& [e1, v1] : x.c_)
      for (const auto& [e2, v2] : y.c_) {
        Cyc p = v1 * v2;
        if (p.is_zero()) continue;
        auto it = r.c_.find(e1 + e2);
        if (it == r.c_.end())
          r.c_[e1 + e2] = p;
        else {
          it->second = it->second + p;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    return r;
  }
  friend LPoly operator*(const Cyc& s, const LPoly& a) {
    LPoly r(a.z_);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : a.c_) r.c_[e] = s * v;
    return r;
  }
  friend bool operator==(const LPoly& a, const LPoly& b) {
    auto [x, y] = match(a, b);
    return x.c_ == y.c_;
  }

  // Exact evaluation. When z = 1 root_choice is ignored; otherwise the value
  // substituted for y must satisfy root_choice^z = q.
  Cyc eval(const Rat& q, const Rat* root_choice = nullptr) const {
    Rat y;
    if (z_ == 1) {
      y = q;
    } else {
      if (!root_choice) throw std::invalid_argument("eval: root choice required when z > 1");
      Rat p(1);
      for (long i = 0; i < z_; ++i) p *= *root_choice;
      if (p != q) throw std::invalid_argument("eval: inconsistent root, root^z != q");
      y = *root_choice;
    }
    if (zlspets::is_zero(y) && order() < 0)
      throw std::domain_error("eval: negative exponent at 0");
    Cyc acc;
    for (const auto& [e, v] : c_) {
      Rat ypow(1);
      long ee = e >= 0 ? e : -e;
      for (long i = 0; i < ee; ++i) ypow *= y;
      acc = acc + v * Cyc(e >= 0 ? ypow : Rat(1) / ypow);
    }
    return acc;
  }

  bool is_polynomial_in_x() const {
    for (const auto& [e, v] : c_) {
      (void)v;
      if (e < 0 || e % z_ != 0) return false;
    }
    return true;
  }
  // Collapse to the x-variable; hard error when fractional or negative
  // powers survive.
  LPoly as_x_polynomial() const {
    if (!is_polynomial_in_x())
      throw std::domain_error("LPoly: result is not a polynomial in x");
    LPoly out(1);
    for (const auto& [e, v] : c_) out.c_[e / z_] = v;
    return out;
  }

  bool all_coeffs_rational() const {
    for (const auto& [e, v] : c_) {
      (void)e;
      if (!v.is_rational()) return false;
    }
    return true;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    const char* var = z_ == 1 ? "x" : "y";
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.str() + ")";
      if (it->first != 0) s += std::string("*") + var + "^" + std::to_string(it->first);
    }
    return s;
  }

 private:
  long z_;
  std::map<long, Cyc> c_;

  static std::pair<LPoly, LPoly> match(const LPoly& a, const LPoly& b) {
    if (a.z_ == b.z_) return {a, b};
    long Z = std::lcm(a.z_, b.z_);
    return {a.with_z(Z), b.with_z(Z)};
  }
};

// Quotient of Laurent polynomials, normalised so that the denominator is a
// genuine polynomial with nonzero constant term and leading coefficient 1.
class RatFun {
 public:
  RatFun() : num_(LPoly::constant(Cyc())), den_(LPoly::constant(Cyc::one())) {}
  explicit RatFun(const LPoly& p) : num_(p), den_(LPoly::constant(Cyc::one(), p.zvar())) {
    normalise();
  }
  RatFun(const LPoly& n, const LPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalise();
  }
  static RatFun constant(const Cyc& c) { return RatFun(LPoly::constant(c)); }
  static RatFun x() { return RatFun(LPoly::x_power(1)); }

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_);
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  Cyc eval(const Rat& q, const Rat* root_choice = nullptr) const {
    Cyc d = den_.eval(q, root_choice);
    if (d.is_zero()) throw std::domain_error("RatFun: pole at evaluation point");
    return num_.eval(q, root_choice) * d.inverse();
  }

  // The function must be a Laurent polynomial (denominator divides numerator).
  LPoly as_lpoly() const;
  bool is_lpoly() const;

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

 private:
  LPoly num_, den_;
  void normalise();
};

// Exact division with remainder for Laurent polynomials (after clearing the
// y-order). Returns {quotient, remainder} with deg rem < deg divisor.
std::pair<LPoly, LPoly> poly_divmod(const LPoly& a, const LPoly& b);
LPoly poly_gcd(LPoly a, LPoly b);

}  // namespace zlspets

#endif
