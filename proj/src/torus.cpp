#include "zlspets/torus.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace zlspets {

bool admissible_prime(const ReflGroup& W, std::uint64_t l) {
  if (l < 3 || !is_prime_u64(l)) return false;
  if (W.size() % l == 0) return false;
  long m = W.spec().conductor;
  return (l - 1) % static_cast<std::uint64_t>(m) == 0;
}

TorusAction torus_action(std::shared_ptr<const ReflGroup> W, std::uint64_t l, unsigned a) {
  if (!admissible_prime(*W, l))
    throw std::invalid_argument("inadmissible prime for this reflection group");
  TorusAction T;
  T.W = W;
  T.l = l;
  T.a = a;
  T.la = ipow(l, a);
  T.n = W->rank();
  T.points = 1;
  for (long i = 0; i < T.n; ++i) {
    if (T.points > (1ull << 62) / T.la) throw std::runtime_error("size-limit: torus too large");
    T.points *= T.la;
  }
  long n = T.n;
  auto lift_matrix = [&](const CMat& m) {
    std::vector<std::uint64_t> out(n * n, 0);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) out[i * n + j] = m(i, j).residue_image(l, a).value;
    return out;
  };
  T.mats.reserve(W->size());
  for (size_t i = 0; i < W->size(); ++i) T.mats.push_back(lift_matrix(W->element(i)));
  // lifting is a ring homomorphism on the entry subring, so products map to
  // products; verify on all (element, generator) pairs as the relations check
  auto matmul = [&](const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B) {
    std::vector<std::uint64_t> C(n * n, 0);
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k) {
        if (!A[i * n + k]) continue;
        for (long j = 0; j < n; ++j)
          C[i * n + j] =
              (C[i * n + j] + ResidueInt::mulmod(A[i * n + k], B[k * n + j], T.la)) % T.la;
      }
    return C;
  };
  for (size_t i = 0; i < W->size(); ++i)
    for (size_t g = 0; g < W->num_gens(); ++g) {
      auto lhs = matmul(T.mats[i], T.mats[W->gen_index(g)]);
      if (lhs != T.mats[W->mul(i, W->gen_index(g))])
        throw std::logic_error("lifted torus action violates the group relations");
    }
  // dual action: inverse transpose
  T.dualmats.reserve(W->size());
  for (size_t i = 0; i < W->size(); ++i) {
    const auto& mi = T.mats[W->inv(i)];
    std::vector<std::uint64_t> tr(n * n, 0);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) tr[r * n + c] = mi[c * n + r];
    T.dualmats.push_back(std::move(tr));
  }
  return T;
}

OrbitCensus orbit_census(const TorusAction& T, bool on_characters, std::uint64_t cap) {
  if (T.points > cap) throw std::runtime_error("size-limit: census cap exceeded");
  const auto& mats = on_characters ? T.dualmats : T.mats;
  const ReflGroup& W = *T.W;
  size_t nW = W.size();

  OrbitCensus census;
  census.on_characters = on_characters;
  census.total = T.points;
  census.count_by_class.assign(W.parabolic_classes().size(), 0);

  std::vector<char> seen(T.points, 0);
  std::vector<std::uint64_t> images(nW);
  std::uint64_t covered = 0;
  for (std::uint64_t t = 0; t < T.points; ++t) {
    if (seen[t]) continue;
    std::vector<size_t> stab;
    for (size_t w = 0; w < nW; ++w) {
      images[w] = T.apply(mats[w], t);
      if (images[w] == t) stab.push_back(w);
    }
    std::uint64_t size = 0;
    for (size_t w = 0; w < nW; ++w)
      if (!seen[images[w]]) {
        seen[images[w]] = 1;
        ++size;
      }
    std::sort(stab.begin(), stab.end());
    auto cls = W.parabolic_class_of(stab);
    if (!cls)
      throw std::logic_error(
          "Steinberg violation: point stabiliser is not a parabolic subgroup");
    if (size * stab.size() != nW)
      throw std::logic_error("orbit-stabiliser size mismatch");
    OrbitInfo o;
    o.rep = t;
    o.size = size;
    o.stab_class = *cls;
    o.stab = std::move(stab);
    census.count_by_class[o.stab_class] += 1;
    census.orbits.push_back(std::move(o));
    covered += size;
  }
  if (covered != T.points) throw std::logic_error("census does not cover the torus");
  return census;
}

OrbitMatching equivariant_matching(const TorusAction& T, const OrbitCensus& chars,
                                   const OrbitCensus& points) {
  const ReflGroup& W = *T.W;
  if (chars.count_by_class != points.count_by_class)
    throw std::runtime_error(
        "correspondence failure: censuses disagree on some parabolic class");
  OrbitMatching m;
  m.point_orbit_for.assign(chars.orbits.size(), SIZE_MAX);
  m.conjugator.assign(chars.orbits.size(), std::nullopt);
  std::vector<char> used(points.orbits.size(), 0);
  // the zero point and the trivial character sit in the same slot: both are
  // the orbit with representative 0, stabiliser W; equal stabilisers match
  // them automatically in the first pass
  for (size_t ci = 0; ci < chars.orbits.size(); ++ci) {
    for (size_t pi = 0; pi < points.orbits.size(); ++pi) {
      if (used[pi] || points.orbits[pi].stab_class != chars.orbits[ci].stab_class) continue;
      if (points.orbits[pi].stab == chars.orbits[ci].stab) {
        m.point_orbit_for[ci] = pi;
        used[pi] = 1;
        break;
      }
    }
  }
  for (size_t ci = 0; ci < chars.orbits.size(); ++ci) {
    if (m.point_orbit_for[ci] != SIZE_MAX) continue;
    for (size_t pi = 0; pi < points.orbits.size(); ++pi) {
      if (used[pi] || points.orbits[pi].stab_class != chars.orbits[ci].stab_class) continue;
      auto w = W.conjugating_element(chars.orbits[ci].stab, points.orbits[pi].stab);
      if (w) {
        m.point_orbit_for[ci] = pi;
        m.conjugator[ci] = *w;
        used[pi] = 1;
        break;
      }
    }
    if (m.point_orbit_for[ci] == SIZE_MAX)
      throw std::runtime_error("correspondence failure: no stabiliser-compatible orbit");
  }
  return m;
}

std::uint64_t semidirect_class_count(const TorusAction& T) {
  const ReflGroup& W = *T.W;
  std::uint64_t classes = 0;
  long n = T.n;
  for (const auto& cls : W.classes()) {
    size_t w = cls.front();
    // image of (1 - w) on T
    std::unordered_set<std::uint64_t> image;
    for (std::uint64_t t = 0; t < T.points; ++t) {
      auto tv = T.decode(t);
      auto wv = T.decode(T.act(w, t));
      std::vector<std::uint64_t> diff(n);
      for (long i = 0; i < n; ++i) diff[i] = (tv[i] + T.la - wv[i]) % T.la;
      image.insert(T.encode(diff));
    }
    // centraliser of w in W
    std::vector<size_t> cent;
    for (size_t c = 0; c < W.size(); ++c)
      if (W.mul(c, w) == W.mul(w, c)) cent.push_back(c);
    // Burnside on T/(1-w)T: fixed cosets of c are {t : (1-c)t in image}
    std::uint64_t orbit_sum = 0;
    for (size_t c : cent) {
      std::uint64_t fixed = 0;
      for (std::uint64_t t = 0; t < T.points; ++t) {
        auto tv = T.decode(t);
        auto cv = T.decode(T.act(c, t));
        std::vector<std::uint64_t> diff(n);
        for (long i = 0; i < n; ++i) diff[i] = (tv[i] + T.la - cv[i]) % T.la;
        if (image.count(T.encode(diff))) ++fixed;
      }
      orbit_sum += fixed / image.size();
    }
    if (orbit_sum % cent.size() != 0)
      throw std::logic_error("non-integral Burnside average in class counting");
    classes += orbit_sum / cent.size();
  }
  return classes;
}

}  // namespace zlspets
