#ifndef ZLSPETS_TORUS_HPP
#define ZLSPETS_TORUS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "zlspets/reflgrp.hpp"

namespace zlspets {

// The finite torus T = (Z/l^a)^n with the W-action obtained by lifting the
// reflection representation entrywise through the Teichmueller lift.
struct TorusAction {
  std::shared_ptr<const ReflGroup> W;
  std::uint64_t l = 0;
  unsigned a = 1;
  std::uint64_t la = 0;     // l^a
  long n = 0;               // rank
  std::uint64_t points = 0; // l^{a n}
  std::vector<std::vector<std::uint64_t>> mats;      // action on T, row-major per element
  std::vector<std::vector<std::uint64_t>> dualmats;  // inverse-transpose action on Irr(T)

  std::vector<std::uint64_t> decode(std::uint64_t idx) const {
    std::vector<std::uint64_t> t(n);
    for (long i = 0; i < n; ++i) {
      t[i] = idx % la;
      idx /= la;
    }
    return t;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& t) const {
    std::uint64_t idx = 0;
    for (long i = n - 1; i >= 0; --i) idx = idx * la + (t[i] % la);
    return idx;
  }
  std::uint64_t apply(const std::vector<std::uint64_t>& mat, std::uint64_t idx) const {
    auto t = decode(idx);
    std::vector<std::uint64_t> out(n, 0);
    for (long i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (long j = 0; j < n; ++j)
        acc = (acc + ResidueInt::mulmod(mat[i * n + j], t[j], la)) % la;
      out[i] = acc;
    }
    return encode(out);
  }
  std::uint64_t act(size_t w, std::uint64_t point) const { return apply(mats[w], point); }
  std::uint64_t act_dual(size_t w, std::uint64_t chr) const { return apply(dualmats[w], chr); }
  // pairing <c, t> in Z/l^a between a character vector and a point
  std::uint64_t pairing(std::uint64_t chr, std::uint64_t point) const {
    auto c = decode(chr);
    auto t = decode(point);
    std::uint64_t acc = 0;
    for (long i = 0; i < n; ++i) acc = (acc + ResidueInt::mulmod(c[i], t[i], la)) % la;
    return acc;
  }
};

// requires: l odd prime, l coprime to |W|, entry conductor divides l-1
bool admissible_prime(const ReflGroup& W, std::uint64_t l);
TorusAction torus_action(std::shared_ptr<const ReflGroup> W, std::uint64_t l, unsigned a);

struct OrbitInfo {
  std::uint64_t rep = 0;          // lexicographically least point
  std::uint64_t size = 0;
  size_t stab_class = 0;          // parabolic class id
  std::vector<size_t> stab;       // sorted element indices
};

struct OrbitCensus {
  bool on_characters = false;
  std::uint64_t total = 0;
  std::vector<OrbitInfo> orbits;                           // by increasing rep
  std::vector<std::uint64_t> count_by_class;               // parabolic class -> #orbits
};

OrbitCensus orbit_census(const TorusAction& T, bool on_characters,
                         std::uint64_t cap = 1000000);

// Orbit-level W-equivariant bijection Irr(T) -> T matching stabilisers,
// preferring literal equality and recording a conjugator otherwise. The
// trivial character corresponds to the zero point.
struct OrbitMatching {
  std::vector<size_t> point_orbit_for;            // index by char-orbit position
  std::vector<std::optional<size_t>> conjugator;  // w with stab_char^w = stab_point
};

OrbitMatching equivariant_matching(const TorusAction& T, const OrbitCensus& chars,
                                   const OrbitCensus& points);

// number of conjugacy classes of T x| W (Burnside on quotients T/(1-w)T);
// independent anchor for the size of Irr(B0)
std::uint64_t semidirect_class_count(const TorusAction& T);

}  // namespace zlspets

#endif
