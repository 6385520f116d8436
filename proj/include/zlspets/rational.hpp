#ifndef ZLSPETS_RATIONAL_HPP
#define ZLSPETS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zlspets {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// l-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& l) {
  if (n == 0) throw std::domain_error("valuation of zero is undefined");
  long v = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), l.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

inline long valuation(const Rat& r, const Int& l) {
  if (is_zero(r)) throw std::domain_error("valuation of zero is undefined");
  return valuation(Int(r.get_num()), l) - valuation(Int(r.get_den()), l);
}

// input = l^v * lprime_part with v_l(lprime_part) = 0.
struct ValuationSplit {
  Int l;
  long v = 0;
  Rat l_part;       // l^v (or l^v as 1/l^-v when v < 0)
  Rat lprime_part;  // l-free remainder
};

inline ValuationSplit l_valuation_split(const Rat& r, const Int& l) {
  if (is_zero(r)) throw std::domain_error("l_valuation_split: input is zero");
  ValuationSplit s;
  s.l = l;
  s.v = valuation(r, l);
  if (s.v >= 0)
    s.l_part = Rat(pow_int(l, static_cast<unsigned long>(s.v)));
  else
    s.l_part = Rat(1) / Rat(pow_int(l, static_cast<unsigned long>(-s.v)));
  s.lprime_part = r / s.l_part;
  return s;
}

// r1 == r2 (mod l), both l-integral rationals.
inline bool congruent_mod(const Rat& r1, const Rat& r2, const Int& l) {
  Rat d = r1 - r2;
  if (is_zero(d)) return true;
  return valuation(d, l) >= 1;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace zlspets

#endif
