#ifndef ZLSPETS_PADIC_HPP
#define ZLSPETS_PADIC_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zlspets/rational.hpp"

namespace zlspets {

// Value in Z/l^a, stored with its modulus. Arithmetic requires equal moduli.
struct ResidueInt {
  std::uint64_t modulus = 0;
  std::uint64_t value = 0;

  ResidueInt() = default;
  ResidueInt(std::uint64_t mod, std::uint64_t val) : modulus(mod), value(val % mod) {}

  friend ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) {
    check(a, b);
    return {a.modulus, (a.value + b.value) % a.modulus};
  }
  friend ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) {
    check(a, b);
    return {a.modulus, (a.value + a.modulus - b.value) % a.modulus};
  }
  friend ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
    check(a, b);
    return {a.modulus, mulmod(a.value, b.value, a.modulus)};
  }
  friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
    return a.modulus == b.modulus && a.value == b.value;
  }

  static std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
  }

 private:
  static void check(const ResidueInt& a, const ResidueInt& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("residue moduli differ");
  }
};

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = ResidueInt::mulmod(r, b, m);
    b = ResidueInt::mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplicative order of u mod m; u must be a unit.
inline std::uint64_t mult_order(std::uint64_t u, std::uint64_t m) {
  std::uint64_t x = u % m, ord = 1;
  while (x != 1 % m) {
    x = ResidueInt::mulmod(x, u, m);
    ++ord;
    if (ord > m) throw std::logic_error("mult_order: not a unit");
  }
  return ord;
}

inline std::uint64_t smallest_primitive_root(std::uint64_t l) {
  for (std::uint64_t g = 2; g < l; ++g)
    if (mult_order(g, l) == l - 1) return g;
  throw std::logic_error("no primitive root found");
}

// Teichmueller lift of a root of unity: the unique u in Z/l^a with
// u^e = 1, u of exact order e, and u = g^((l-1)/e) (mod l) for the
// smallest primitive root g mod l. Deterministic across platforms.
inline ResidueInt lift_root_of_unity(std::uint64_t l, unsigned a, std::uint64_t e) {
  if (l < 3 || !is_prime_u64(l)) throw std::invalid_argument("l must be an odd prime");
  if (a < 1) throw std::invalid_argument("exponent a must be >= 1");
  if (e == 0 || (l - 1) % e != 0)
    throw std::invalid_argument("unsupported parameters: e does not divide l-1");
  std::uint64_t g = smallest_primitive_root(l);
  std::uint64_t u = powmod(g, (l - 1) / e, l);
  // Teichmueller iteration u <- u^l stabilises mod l^(k+1) at each step.
  std::uint64_t mod = l;
  for (unsigned k = 1; k < a; ++k) {
    mod *= l;
    u = powmod(u, l, mod);
  }
  std::uint64_t la = ipow(l, a);
  if (powmod(u, e, la) != 1 || mult_order(u, la) != e)
    throw std::logic_error("lift_root_of_unity: lift has wrong order");
  return ResidueInt(la, u);
}

// Hensel-compatible z-th root of q in Z/l^(a+heads), used for x^(1/z)
// bookkeeping: the unique root of X^z - q congruent to 1 mod l^a when
// l^a || q-1 and z | l-1. Returned as a rational witness when it exists
// among small integers; the library's polynomial layer only ever needs
// rational root choices, supplied by callers.
}  // namespace zlspets

#endif
