#ifndef ZLSPETS_LINALG_HPP
#define ZLSPETS_LINALG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zlspets/cyclotomic.hpp"
#include "zlspets/lpoly.hpp"

namespace zlspets {

// Minimal field concept used by Matrix: zero/one/is_zero/inv via overloads.
inline Rat f_zero(const Rat*) { return Rat(0); }
inline Rat f_one(const Rat*) { return Rat(1); }
inline bool f_is_zero(const Rat& x) { return is_zero(x); }
inline Rat f_inv(const Rat& x) { return Rat(1) / x; }

inline Cyc f_zero(const Cyc*) { return Cyc(); }
inline Cyc f_one(const Cyc*) { return Cyc::one(); }
inline bool f_is_zero(const Cyc& x) { return x.is_zero(); }
inline Cyc f_inv(const Cyc& x) { return x.inverse(); }

inline RatFun f_zero(const RatFun*) { return RatFun(); }
inline RatFun f_one(const RatFun*) { return RatFun::constant(Cyc::one()); }
inline bool f_is_zero(const RatFun& x) { return x.is_zero(); }
inline RatFun f_inv(const RatFun& x) { return x.inverse(); }

// Prime field element for the character-table algorithm. A modulus of 0
// marks the context-free constants 0 and 1; the modulus is adopted from
// the other operand on first contact.
struct Fp {
  std::uint64_t p = 0;
  std::uint64_t v = 0;
  Fp() = default;
  Fp(std::uint64_t prime, std::uint64_t val) : p(prime), v(prime ? val % prime : val) {}
  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p ? a.p : b.p;
    return Fp(p, a.v + b.v);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p ? a.p : b.p;
    if (!p) return Fp(0, a.v - b.v);
    return Fp(p, a.v % p + p - b.v % p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p ? a.p : b.p;
    if (!p) return Fp(0, a.v * b.v);
    return Fp(p, ResidueInt::mulmod(a.v % p, b.v % p, p));
  }
  Fp operator-() const {
    if (p) return Fp(p, p - v % p);
    if (v != 0) throw std::logic_error("Fp: negate without modulus");
    return Fp();
  }
  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p ? a.p : b.p;
    if (!p) return a.v == b.v;
    return a.v % p == b.v % p;
  }
};
inline Fp f_zero(const Fp*) { return Fp(); }
inline Fp f_one(const Fp*) { return Fp(0, 1); }
inline bool f_is_zero(const Fp& x) { return x.p ? x.v % x.p == 0 : x.v == 0; }
inline Fp f_inv(const Fp& x) {
  if (!x.p) {
    if (x.v == 1) return x;
    throw std::domain_error("Fp: inverse needs a modulus");
  }
  if (x.v % x.p == 0) throw std::domain_error("Fp: inverse of zero");
  return Fp(x.p, powmod(x.v, x.p - 2, x.p));
}

template <class T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(size_t r, size_t c, const T& fill) : r_(r), c_(c), d_(r * c, fill) {}
  static Matrix identity(size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.r_, b.c_, f_zero(static_cast<const T*>(nullptr)));
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& av = a(i, k);
        if (f_is_zero(av)) continue;
        for (size_t j = 0; j < b.c_; ++j) {
          if (f_is_zero(b(k, j))) continue;
          out(i, j) = out(i, j) + av * b(k, j);
        }
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = out.d_[i] + b.d_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = out.d_[i] - b.d_[i];
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.d_) x = s * x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t i = 0; i < a.d_.size(); ++i)
      if (!(a.d_[i] == b.d_[i])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : d_)
      if (!f_is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix out(c_, r_, f_zero(static_cast<const T*>(nullptr)));
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  // In-place row echelon; returns rank. Deterministic first-nonzero pivoting.
  size_t echelonise() {
    size_t rank = 0;
    for (size_t col = 0; col < c_ && rank < r_; ++col) {
      size_t piv = rank;
      while (piv < r_ && f_is_zero((*this)(piv, col))) ++piv;
      if (piv == r_) continue;
      if (piv != rank)
        for (size_t j = 0; j < c_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
      T inv = f_inv((*this)(rank, col));
      for (size_t j = col; j < c_; ++j) (*this)(rank, j) = inv * (*this)(rank, j);
      for (size_t i = 0; i < r_; ++i) {
        if (i == rank || f_is_zero((*this)(i, col))) continue;
        T f = (*this)(i, col);
        for (size_t j = col; j < c_; ++j)
          (*this)(i, j) = (*this)(i, j) - f * (*this)(rank, j);
      }
      ++rank;
    }
    return rank;
  }
  size_t rank() const {
    Matrix copy = *this;
    return copy.echelonise();
  }

  Matrix inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse: not square");
    const T zero = f_zero(static_cast<const T*>(nullptr));
    Matrix aug(r_, 2 * c_, zero);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = f_inv_one();
    }
    if (aug.echelonise() != r_) throw std::domain_error("inverse: singular matrix");
    Matrix out(r_, c_, zero);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) out(i, j) = aug(i, c_ + j);
    return out;
  }

  // Basis of the right kernel, one column vector per row of the result.
  std::vector<std::vector<T>> kernel() const {
    const T zero = f_zero(static_cast<const T*>(nullptr));
    const T one = f_inv_one();
    Matrix e = *this;
    e.echelonise();
    std::vector<long> pivot_of_col(c_, -1);
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      if (!f_is_zero(e(row, col))) {
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
      }
    }
    std::vector<std::vector<T>> basis;
    for (size_t col = 0; col < c_; ++col) {
      if (pivot_of_col[col] != -1) continue;
      std::vector<T> v(c_, zero);
      v[col] = one;
      for (size_t c2 = 0; c2 < col; ++c2)
        if (pivot_of_col[c2] != -1)
          v[c2] = zero - e(static_cast<size_t>(pivot_of_col[c2]), col);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solve A x = b; throws when inconsistent. A must have full column rank.
  std::vector<T> solve(const std::vector<T>& b) const {
    if (b.size() != r_) throw std::invalid_argument("solve: size mismatch");
    const T zero = f_zero(static_cast<const T*>(nullptr));
    Matrix aug(r_, c_ + 1, zero);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    aug.echelonise();
    std::vector<T> x(c_, zero);
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      if (f_is_zero(aug(row, col))) continue;
      x[col] = aug(row, c_);
      ++row;
    }
    // verify (handles inconsistency and rank deficiency uniformly)
    for (size_t i = 0; i < r_; ++i) {
      T acc = zero;
      for (size_t j = 0; j < c_; ++j) acc = acc + (*this)(i, j) * x[j];
      if (!(acc == b[i])) throw std::domain_error("solve: inconsistent system");
    }
    return x;
  }

 private:
  size_t r_, c_;
  std::vector<T> d_;
  static T f_inv_one() {
    return f_one(static_cast<const T*>(nullptr));
  }
};

}  // namespace zlspets

#endif
