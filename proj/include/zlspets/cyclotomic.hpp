#ifndef ZLSPETS_CYCLOTOMIC_HPP
#define ZLSPETS_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zlspets/padic.hpp"
#include "zlspets/rational.hpp"

namespace zlspets {

// Elements of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1) modulo
// the m-th cyclotomic polynomial. Arithmetic between different conductors
// promotes both operands to the lcm.
class Cyc {
 public:
  Cyc() : m_(1), c_(1, Rat(0)) {}
  explicit Cyc(const Rat& r) : m_(1), c_(1, r) {}
  explicit Cyc(long n) : m_(1), c_(1, rat(n)) {}
  Cyc(long m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(phi(m_)))
      throw std::invalid_argument("Cyc: coefficient length != phi(m)");
  }

  static Cyc zeta(long m) {
    if (m <= 0) throw std::invalid_argument("zeta: m must be positive");
    if (m == 1) return Cyc(Rat(1));
    if (m == 2) return Cyc(Rat(-1));
    std::vector<Rat> c(phi(m), Rat(0));
    c[1] = 1;
    return Cyc(m, std::move(c));
  }
  static Cyc zeta_pow(long m, long k) {
    k %= m;
    if (k < 0) k += m;
    Cyc z = Cyc::one();
    Cyc zm = zeta(m);
    for (long i = 0; i < k; ++i) z = z * zm;
    return z;
  }
  static Cyc one() { return Cyc(Rat(1)); }

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!zlspets::is_zero(x)) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!zlspets::is_zero(c_[i])) return false;
    return true;
  }
  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyc value is not rational");
    return c_[0];
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    return mul_same_field(x, y);
  }
  friend Cyc operator*(const Rat& r, const Cyc& a) {
    Cyc out = a;
    for (auto& x : out.c_) x *= r;
    return out;
  }
  Cyc inverse() const;
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Galois action zeta_m -> zeta_m^k, gcd(k, m) = 1.
  Cyc galois(long k) const;
  Cyc conj() const { return galois(m_ - 1); }

  Cyc embedded(long M) const;  // image in Q(zeta_M), m | M

  // Image in Z/l^a via the Teichmueller lift of zeta_m; requires m | l-1
  // and l-free coefficient denominators.
  ResidueInt residue_image(std::uint64_t l, unsigned a) const;

  // Multiplicative order if this is a root of unity, else 0. Searches
  // exponents up to the given bound.
  long root_of_unity_order(long bound) const;

  std::string str() const;
  // canonical serialisation: equal values get equal keys regardless of the
  // conductor they were computed at (rationals are demoted)
  std::string key() const;

  static long phi(long m) {
    long r = m, mm = m;
    for (long p = 2; p * p <= mm; ++p)
      if (mm % p == 0) {
        r -= r / p;
        while (mm % p == 0) mm /= p;
      }
    if (mm > 1) r -= r / mm;
    return r;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull ^ static_cast<size_t>(m_);
    for (const auto& x : c_) {
      h = (h * 1099511628211ull) ^ std::hash<std::string>()(x.get_str());
    }
    return h;
  }

 private:
  long m_;
  std::vector<Rat> c_;

  static std::pair<Cyc, Cyc> promote(const Cyc& a, const Cyc& b) {
    if (a.m_ == b.m_) return {a, b};
    long M = std::lcm(a.m_, b.m_);
    return {a.embedded(M), b.embedded(M)};
  }
  static Cyc mul_same_field(const Cyc& a, const Cyc& b);
};

inline Cyc operator*(const Cyc& a, const Rat& r) { return r * a; }

// Per-conductor data: cyclotomic polynomial and reduction rows for
// x^k, phi(m) <= k <= 2 phi(m) - 2.
struct CycField {
  long m = 1;
  long deg = 1;
  std::vector<Rat> phi_poly;                 // monic, length deg+1
  std::vector<std::vector<Rat>> reductions;  // x^(deg+i) in the power basis

  static const CycField& get(long m);
};

}  // namespace zlspets

#endif
