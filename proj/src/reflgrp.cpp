#include "zlspets/reflgrp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace zlspets {

namespace {

CMat cyc_identity(long n, long conductor) {
  CMat m(n, n, Cyc().embedded(conductor));
  for (long i = 0; i < n; ++i) m(i, i) = Cyc::one().embedded(conductor);
  return m;
}

CMat from_rows(long conductor, const std::vector<std::vector<long>>& rows) {
  CMat m(rows.size(), rows[0].size(), Cyc().embedded(conductor));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = Cyc(rat(rows[i][j])).embedded(conductor);
  return m;
}

GroupSpec cartan_spec(std::string name, const std::vector<std::vector<long>>& cartan,
                      std::uint64_t order) {
  GroupSpec s;
  s.family = GroupSpec::Family::CoxeterCartan;
  s.name = std::move(name);
  s.rank = static_cast<long>(cartan.size());
  s.conductor = 1;
  s.expected_order = order;
  long n = s.rank;
  for (long i = 0; i < n; ++i) {
    // s_i(e_j) = e_j - a_{ij} e_i, so M[r][c] = delta_{rc} - delta_{ri} a_{ic}
    CMat m(n, n, Cyc());
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) {
        long v = (r == c ? 1 : 0) - (r == i ? cartan[i][c] : 0);
        m(r, c) = Cyc(rat(v));
      }
    s.generators.push_back(m);
    s.gen_orders.push_back(2);
  }
  return s;
}

std::uint64_t factorial(long n) {
  std::uint64_t r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

GroupSpec GroupSpec::coxeter_A(int n) {
  std::vector<std::vector<long>> cartan(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan[i][j] = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
  auto s = cartan_spec("A" + std::to_string(n), cartan, factorial(n + 1));
  s.e = 1;
  s.n = n + 1;
  return s;
}

GroupSpec GroupSpec::coxeter_B2() { return cartan_spec("B2", {{2, -2}, {-1, 2}}, 8); }

GroupSpec GroupSpec::coxeter_G2() { return cartan_spec("G2", {{2, -3}, {-1, 2}}, 12); }

GroupSpec GroupSpec::dihedral(long m) {
  if (m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
  if (m == 3) {
    auto s = coxeter_A(2);
    s.name = "I2(3)";
    return s;
  }
  if (m == 4) {
    auto s = coxeter_B2();
    s.name = "I2(4)";
    return s;
  }
  if (m == 6) {
    auto s = coxeter_G2();
    s.name = "I2(6)";
    return s;
  }
  GroupSpec s;
  s.family = Family::Dihedral;
  s.name = "I2(" + std::to_string(m) + ")";
  s.rank = 2;
  s.conductor = m;
  s.e = m;
  s.expected_order = 2 * static_cast<std::uint64_t>(m);
  CMat s1(2, 2, Cyc().embedded(m));
  s1(0, 1) = Cyc::one().embedded(m);
  s1(1, 0) = Cyc::one().embedded(m);
  CMat s2(2, 2, Cyc().embedded(m));
  s2(0, 1) = Cyc::zeta_pow(m, m - 1);
  s2(1, 0) = Cyc::zeta(m);
  s.generators = {s1, s2};
  s.gen_orders = {2, 2};
  return s;
}

GroupSpec GroupSpec::cyclic(long e) {
  if (e < 2) throw std::invalid_argument("C(e) needs e >= 2");
  GroupSpec s;
  s.family = Family::Cyclic;
  s.name = "C(" + std::to_string(e) + ")";
  s.rank = 1;
  s.conductor = e;
  s.e = e;
  s.n = 1;
  s.expected_order = e;
  CMat g(1, 1, Cyc::zeta(e));
  s.generators = {g};
  s.gen_orders = {e};
  return s;
}

GroupSpec GroupSpec::imprimitive(long e, long n) {
  if (e < 2 || n < 1) throw std::invalid_argument("G(e,1,n) needs e >= 2, n >= 1");
  if (n == 1) return cyclic(e);
  GroupSpec s;
  s.family = Family::Imprimitive;
  s.name = "G(" + std::to_string(e) + ",1," + std::to_string(n) + ")";
  s.rank = n;
  s.conductor = e;
  s.e = e;
  s.n = n;
  std::uint64_t order = factorial(n);
  for (long i = 0; i < n; ++i) order *= e;
  s.expected_order = order;
  CMat t0 = cyc_identity(n, e);
  t0(0, 0) = Cyc::zeta(e);
  s.generators.push_back(t0);
  s.gen_orders.push_back(e);
  for (long i = 0; i + 1 < n; ++i) {
    CMat sw = cyc_identity(n, e);
    sw(i, i) = Cyc().embedded(e);
    sw(i + 1, i + 1) = Cyc().embedded(e);
    sw(i, i + 1) = Cyc::one().embedded(e);
    sw(i + 1, i) = Cyc::one().embedded(e);
    s.generators.push_back(sw);
    s.gen_orders.push_back(2);
  }
  return s;
}

GroupSpec GroupSpec::swap_rank2() {
  GroupSpec s;
  s.family = Family::SwapRank2;
  s.name = "G(1,1,2)";
  s.rank = 2;
  s.conductor = 1;
  s.e = 1;
  s.n = 2;
  s.expected_order = 2;
  s.generators = {from_rows(1, {{0, 1}, {1, 0}})};
  s.gen_orders = {2};
  return s;
}

GroupSpec GroupSpec::product(const std::vector<GroupSpec>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty product");
  if (parts.size() == 1) return parts[0];
  GroupSpec s;
  s.family = Family::Product;
  s.factors = parts;
  s.rank = 0;
  s.conductor = 1;
  s.expected_order = 1;
  std::string nm;
  for (const auto& p : parts) {
    s.rank += p.rank;
    s.conductor = std::lcm(s.conductor, p.conductor);
    s.expected_order *= p.expected_order;
    if (!nm.empty()) nm += "x";
    nm += p.name;
  }
  s.name = nm;
  long off = 0;
  for (const auto& p : parts) {
    for (size_t g = 0; g < p.generators.size(); ++g) {
      CMat m = cyc_identity(s.rank, s.conductor);
      for (long i = 0; i < p.rank; ++i)
        for (long j = 0; j < p.rank; ++j)
          m(off + i, off + j) = p.generators[g](i, j).embedded(s.conductor);
      s.generators.push_back(m);
      s.gen_orders.push_back(p.gen_orders[g]);
    }
    off += p.rank;
  }
  return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  // split on top-level 'x' separators for direct products
  {
    int depth = 0;
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] == '(') ++depth;
      if (i < text.size() && text[i] == ')') --depth;
      if (i == text.size() || (text[i] == 'x' && depth == 0)) {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    if (parts.size() > 1) {
      std::vector<GroupSpec> specs;
      for (const auto& p : parts) specs.push_back(parse(p));
      return product(specs);
    }
  }
  if (text == "A1") return coxeter_A(1);
  if (text == "A2") return coxeter_A(2);
  if (text == "A3") return coxeter_A(3);
  if (text == "B2") return coxeter_B2();
  if (text == "G2") return coxeter_G2();
  if (text.rfind("I2(", 0) == 0 && text.back() == ')')
    return dihedral(std::stol(text.substr(3, text.size() - 4)));
  if (text.rfind("C(", 0) == 0 && text.back() == ')')
    return cyclic(std::stol(text.substr(2, text.size() - 3)));
  if (text.rfind("G(", 0) == 0 && text.back() == ')') {
    std::string inner = text.substr(2, text.size() - 3);
    std::vector<long> v;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
    if (v.size() != 3) throw std::invalid_argument("invalid G(e,p,n) spec: " + text);
    if (v[0] == 1 && v[1] == 1 && v[2] == 2) return swap_rank2();
    if (v[1] != 1) {
      if (v[1] == v[0] && v[2] == 2) return dihedral(v[0]);
      throw std::invalid_argument("unsupported family G(e,p,n) with p > 1: " + text);
    }
    return imprimitive(v[0], v[2]);
  }
  throw std::invalid_argument("unrecognised group spec: " + text);
}

std::string matrix_key(const CMat& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << ";";
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) os << m(i, j).key() << "|";
  return os.str();
}

ReflGroup::ReflGroup(GroupSpec spec, std::uint64_t cap) : spec_(std::move(spec)) {
  build(cap);
}

std::shared_ptr<ReflGroup> build_group(const GroupSpec& spec, std::uint64_t cap) {
  return std::make_shared<ReflGroup>(spec, cap);
}

void ReflGroup::build(std::uint64_t cap) {
  long n = spec_.rank;
  long cond = spec_.conductor;
  for (auto& g : spec_.generators)
    if (g.rows() != static_cast<size_t>(n) || g.cols() != static_cast<size_t>(n))
      throw std::invalid_argument("invalid spec: generator shape mismatch");
  CMat id = cyc_identity(n, cond);
  elems_.push_back(id);
  index_[matrix_key(id)] = 0;
  words_.push_back({});
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (size_t g = 0; g < spec_.generators.size(); ++g) {
      CMat prod = elems_[cur] * spec_.generators[g];
      std::string key = matrix_key(prod);
      auto it = index_.find(key);
      if (it == index_.end()) {
        if (elems_.size() >= cap)
          throw std::runtime_error("size-limit: group enumeration exceeded cap");
        size_t idx = elems_.size();
        elems_.push_back(prod);
        index_.emplace(std::move(key), idx);
        auto w = words_[cur];
        w.push_back(static_cast<int>(g));
        words_.push_back(std::move(w));
        queue.push_back(idx);
      }
    }
  }
  if (spec_.expected_order && elems_.size() != spec_.expected_order)
    throw std::logic_error("group order differs from the family order formula");

  rmul_.assign(elems_.size(), std::vector<size_t>(spec_.generators.size(), 0));
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t g = 0; g < spec_.generators.size(); ++g) {
      CMat prod = elems_[i] * spec_.generators[g];
      rmul_[i][g] = index_.at(matrix_key(prod));
    }
  gen_elem_.clear();
  for (size_t g = 0; g < spec_.generators.size(); ++g)
    gen_elem_.push_back(index_.at(matrix_key(spec_.generators[g])));

  inv_.assign(elems_.size(), 0);
  for (size_t i = 0; i < elems_.size(); ++i) {
    size_t x = 0;
    for (auto it = words_[i].rbegin(); it != words_[i].rend(); ++it) {
      long o = spec_.gen_orders[*it];
      for (long k = 0; k + 1 < o; ++k) x = rmul_[x][*it];
    }
    if (mul(i, x) != 0) throw std::logic_error("inverse computation failed");
    inv_[i] = x;
  }
}

std::optional<size_t> ReflGroup::index_of(const CMat& m) const {
  auto it = index_.find(matrix_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long ReflGroup::element_order(size_t i) const {
  size_t x = i;
  long o = 1;
  while (x != 0) {
    x = mul(x, i);
    ++o;
  }
  return o;
}

const std::vector<std::vector<size_t>>& ReflGroup::classes() const {
  if (!classes_.empty()) return classes_;
  if (size() > 4096) throw std::runtime_error("size-limit: conjugacy classes capped");
  class_of_.assign(size(), SIZE_MAX);
  for (size_t i = 0; i < size(); ++i) {
    if (class_of_[i] != SIZE_MAX) continue;
    size_t cid = classes_.size();
    std::vector<size_t> cls;
    for (size_t w = 0; w < size(); ++w) {
      size_t c = conjugate(i, w);
      if (class_of_[c] == SIZE_MAX) {
        class_of_[c] = cid;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

size_t ReflGroup::class_of(size_t i) const {
  classes();
  return class_of_[i];
}

namespace {
Cyc det_of(const CMat& mat) {
  CMat m = mat;
  size_t nn = m.rows();
  Cyc det = Cyc::one();
  for (size_t col = 0, row = 0; col < nn && row < nn; ++col) {
    size_t piv = row;
    while (piv < nn && f_is_zero(m(piv, col))) ++piv;
    if (piv == nn) return Cyc();
    if (piv != row) {
      for (size_t j = 0; j < nn; ++j) std::swap(m(piv, j), m(row, j));
      det = -det;
    }
    det = det * m(row, col);
    Cyc invp = m(row, col).inverse();
    for (size_t i2 = row + 1; i2 < nn; ++i2) {
      if (f_is_zero(m(i2, col))) continue;
      Cyc f = m(i2, col) * invp;
      for (size_t j = col; j < nn; ++j) m(i2, j) = m(i2, j) - f * m(row, j);
    }
    ++row;
  }
  return det;
}
}  // namespace

void ReflGroup::compute_reflections() const {
  if (reflections_done_) return;
  compute_parabolics();
  long n = spec_.rank;
  for (size_t i = 1; i < size(); ++i) {
    CMat fix = fixed_space(elems_[i]);
    if (fix.rows() != static_cast<size_t>(n - 1)) continue;
    Reflection r;
    r.elem = i;
    r.order = element_order(i);
    // the unique non-unit eigenvalue of a reflection equals its determinant
    r.eigenvalue = det_of(elems_[i]);
    long ord = r.eigenvalue.root_of_unity_order(2 * r.order + 4);
    if (ord != r.order) throw std::logic_error("reflection eigenvalue order mismatch");
    r.distinguished = (r.eigenvalue == Cyc::zeta(r.order));
    std::string key = matrix_key(fix);
    size_t fid = SIZE_MAX;
    for (size_t f = 0; f < flats_.size(); ++f)
      if (matrix_key(flats_[f]) == key) {
        fid = f;
        break;
      }
    if (fid == SIZE_MAX) throw std::logic_error("reflection hyperplane missing from flats");
    r.hyperplane = fid;
    r.w_class = class_of(i);
    reflections_.push_back(r);
  }
  reflections_done_ = true;
}

const std::vector<Reflection>& ReflGroup::reflections() const {
  compute_reflections();
  return reflections_;
}

std::vector<size_t> ReflGroup::reflection_classes() const {
  std::vector<size_t> out;
  for (const auto& r : reflections())
    if (std::find(out.begin(), out.end(), r.w_class) == out.end()) out.push_back(r.w_class);
  std::sort(out.begin(), out.end());
  return out;
}

CMat echelon_basis(CMat rows) {
  size_t rank = rows.echelonise();
  CMat out(rank, rows.cols(), Cyc());
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < rows.cols(); ++j) out(i, j) = rows(i, j);
  return out;
}

CMat fixed_space(const CMat& m) {
  size_t n = m.rows();
  CMat a(n, n, Cyc());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j) - (i == j ? Cyc::one() : Cyc());
  auto ker = a.kernel();
  CMat out(ker.size(), n, Cyc());
  for (size_t i = 0; i < ker.size(); ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = ker[i][j];
  return echelon_basis(out);
}

CMat subspace_intersection(const CMat& a, const CMat& b) {
  size_t n = a.cols();
  size_t ra = a.rows(), rb = b.rows();
  if (ra == 0 || rb == 0) return CMat(0, n, Cyc());
  // columns: coefficients u on rows of a, then v on rows of b; u a - v b = 0
  CMat sys(n, ra + rb, Cyc());
  for (size_t j = 0; j < ra; ++j)
    for (size_t i = 0; i < n; ++i) sys(i, j) = a(j, i);
  for (size_t j = 0; j < rb; ++j)
    for (size_t i = 0; i < n; ++i) sys(i, ra + j) = Cyc() - b(j, i);
  auto ker = sys.kernel();
  CMat out(ker.size(), n, Cyc());
  for (size_t k = 0; k < ker.size(); ++k)
    for (size_t i = 0; i < n; ++i) {
      Cyc acc;
      for (size_t j = 0; j < ra; ++j) acc = acc + ker[k][j] * a(j, i);
      out(k, i) = acc;
    }
  return echelon_basis(out);
}

void ReflGroup::compute_parabolics() const {
  if (parabolics_done_) return;
  long n = spec_.rank;
  std::vector<CMat> flats;
  std::unordered_map<std::string, size_t> seen;
  CMat full = echelon_basis(cyc_identity(n, spec_.conductor));
  flats.push_back(full);
  seen[matrix_key(full)] = 0;

  std::vector<CMat> hyps;
  {
    std::unordered_map<std::string, char> hseen;
    for (size_t i = 1; i < size(); ++i) {
      CMat fix = fixed_space(elems_[i]);
      if (fix.rows() == static_cast<size_t>(n - 1) && hseen.emplace(matrix_key(fix), 1).second)
        hyps.push_back(fix);
    }
  }
  for (size_t cur = 0; cur < flats.size(); ++cur) {
    for (const auto& h : hyps) {
      CMat inter = subspace_intersection(flats[cur], h);
      std::string key = matrix_key(inter);
      if (seen.emplace(key, flats.size()).second) flats.push_back(inter);
    }
  }
  flats_ = flats;

  parabolics_.clear();
  {
    std::unordered_map<std::string, char> sub_seen;
    for (size_t f = 0; f < flats_.size(); ++f) {
      std::vector<size_t> stab;
      for (size_t i = 0; i < size(); ++i) {
        bool fixes = true;
        const CMat& m = elems_[i];
        // basis rows are column vectors of the representation: need M v = v
        for (size_t r = 0; r < flats_[f].rows() && fixes; ++r)
          for (size_t cidx = 0; cidx < static_cast<size_t>(n) && fixes; ++cidx) {
            Cyc acc;
            for (size_t j = 0; j < static_cast<size_t>(n); ++j)
              acc = acc + m(cidx, j) * flats_[f](r, j);
            if (!(acc == flats_[f](r, cidx))) fixes = false;
          }
        if (fixes) stab.push_back(i);
      }
      std::ostringstream os;
      for (auto e : stab) os << e << ",";
      if (!sub_seen.emplace(os.str(), 1).second) continue;
      ParabolicSubgroup p;
      p.elems = std::move(stab);
      p.flat = f;
      parabolics_.push_back(std::move(p));
    }
  }

  std::vector<long> assigned(parabolics_.size(), -1);
  auto find_subgroup = [&](const std::vector<size_t>& elems) -> long {
    for (size_t i = 0; i < parabolics_.size(); ++i)
      if (parabolics_[i].elems == elems) return static_cast<long>(i);
    return -1;
  };
  parabolic_classes_.clear();
  for (size_t i = 0; i < parabolics_.size(); ++i) {
    if (assigned[i] >= 0) continue;
    size_t cid = parabolic_classes_.size();
    std::uint64_t norm = 0;
    for (size_t w = 0; w < size(); ++w) {
      std::vector<size_t> img;
      img.reserve(parabolics_[i].elems.size());
      for (size_t x : parabolics_[i].elems) img.push_back(conjugate(x, w));
      std::sort(img.begin(), img.end());
      if (img == parabolics_[i].elems) ++norm;
      long j = find_subgroup(img);
      if (j < 0) throw std::logic_error("conjugate of a parabolic is not parabolic");
      assigned[j] = static_cast<long>(cid);
    }
    ParabolicClass pc;
    pc.rep_subgroup = i;
    pc.order = parabolics_[i].elems.size();
    pc.rank = n - static_cast<long>(flats_[parabolics_[i].flat].rows());
    pc.norm_index = norm / parabolics_[i].elems.size();
    pc.label = "P" + std::to_string(cid) + "[" + std::to_string(pc.order) + "]";
    parabolic_classes_.push_back(pc);
  }
  for (size_t i = 0; i < parabolics_.size(); ++i)
    parabolics_[i].cls = static_cast<size_t>(assigned[i]);

  parabolic_lookup_.clear();
  for (size_t i = 0; i < parabolics_.size(); ++i) {
    std::ostringstream os;
    for (auto e : parabolics_[i].elems) os << e << ",";
    parabolic_lookup_[os.str()] = i;
  }
  parabolics_done_ = true;
}

const std::vector<CMat>& ReflGroup::flats() const {
  compute_parabolics();
  return flats_;
}
const std::vector<ParabolicSubgroup>& ReflGroup::parabolics() const {
  compute_parabolics();
  return parabolics_;
}
const std::vector<ParabolicClass>& ReflGroup::parabolic_classes() const {
  compute_parabolics();
  return parabolic_classes_;
}

std::optional<size_t> ReflGroup::parabolic_class_of(
    const std::vector<size_t>& sorted_elems) const {
  compute_parabolics();
  std::ostringstream os;
  for (auto e : sorted_elems) os << e << ",";
  auto it = parabolic_lookup_.find(os.str());
  if (it == parabolic_lookup_.end()) return std::nullopt;
  return parabolics_[it->second].cls;
}

std::optional<size_t> ReflGroup::conjugating_element(const std::vector<size_t>& a,
                                                     const std::vector<size_t>& b) const {
  for (size_t w = 0; w < size(); ++w) {
    std::vector<size_t> img;
    img.reserve(a.size());
    for (size_t x : a) img.push_back(conjugate(x, w));
    std::sort(img.begin(), img.end());
    if (img == b) return w;
  }
  return std::nullopt;
}

std::vector<size_t> ReflGroup::subgroup_closure(std::vector<size_t> gens) const {
  std::vector<char> in(size(), 0);
  std::deque<size_t> queue;
  in[0] = 1;
  queue.push_back(0);
  for (size_t g : gens)
    if (!in[g]) {
      in[g] = 1;
      queue.push_back(g);
    }
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop_front();
    for (size_t g : gens) {
      size_t y = mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

void ReflGroup::compute_degrees() const {
  if (!degrees_.empty()) return;
  long n = spec_.rank;
  RatFun molien;
  for (const auto& cls : classes()) {
    const CMat& m = elems_[cls.front()];
    std::vector<std::vector<LPoly>> a(n, std::vector<LPoly>(n, LPoly()));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        LPoly p;
        if (i == j) p = p + LPoly::constant(Cyc::one());
        p = p - LPoly::constant(m(i, j)) * LPoly::x_power(1);
        a[i][j] = p;
      }
    std::function<LPoly(const std::vector<std::vector<LPoly>>&)> det =
        [&](const std::vector<std::vector<LPoly>>& mm) -> LPoly {
      size_t k = mm.size();
      if (k == 1) return mm[0][0];
      LPoly acc;
      for (size_t c = 0; c < k; ++c) {
        if (mm[0][c].is_zero()) continue;
        std::vector<std::vector<LPoly>> sub;
        for (size_t i = 1; i < k; ++i) {
          std::vector<LPoly> row;
          for (size_t j = 0; j < k; ++j)
            if (j != c) row.push_back(mm[i][j]);
          sub.push_back(std::move(row));
        }
        LPoly term = mm[0][c] * det(sub);
        if (c % 2) term = -term;
        acc = acc + term;
      }
      return acc;
    };
    LPoly d = det(a);
    molien = molien + RatFun(LPoly::constant(Cyc(rat(static_cast<long>(cls.size())))), d);
  }
  molien = molien * RatFun::constant(Cyc(rat(1, static_cast<long>(size()))));
  RatFun inv = molien.inverse();
  if (!inv.is_lpoly())
    throw std::logic_error("model-inconsistency: Molien series has non-polynomial inverse");
  LPoly q = inv.as_lpoly();
  std::vector<long> degs;
  while (!(q == LPoly::constant(Cyc::one()))) {
    long d = 0;
    for (const auto& [e, v] : q.terms()) {
      (void)v;
      if (e > 0) {
        d = e;
        break;
      }
    }
    if (d == 0 || degs.size() > static_cast<size_t>(n))
      throw std::logic_error("model-inconsistency: Molien factorisation failed");
    LPoly factor = LPoly::constant(Cyc::one()) - LPoly::x_power(d);
    auto [quot, rem] = poly_divmod(q, factor);
    if (!rem.is_zero())
      throw std::logic_error("model-inconsistency: Molien series does not factor");
    degs.push_back(d);
    q = quot;
  }
  if (degs.size() != static_cast<size_t>(n))
    throw std::logic_error("model-inconsistency: degree count differs from rank");
  std::sort(degs.begin(), degs.end());
  degrees_ = degs;
}

const std::vector<long>& ReflGroup::invariant_degrees() const {
  compute_degrees();
  return degrees_;
}

LPoly ReflGroup::poincare_polynomial() const {
  compute_degrees();
  LPoly p = LPoly::constant(Cyc::one());
  for (long d : degrees_) {
    LPoly num = LPoly::x_power(d) - LPoly::constant(Cyc::one());
    LPoly den = LPoly::x_power(1) - LPoly::constant(Cyc::one());
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("cyclotomic quotient failed");
    p = p * q;
  }
  return p;
}

std::string ReflGroup::fingerprint() const {
  std::ostringstream os;
  os << spec_.name << ";m=" << spec_.conductor << ";|W|=" << size();
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& e : elems_)
    for (char c : matrix_key(e)) h = (h * 1099511628211ull) ^ static_cast<unsigned char>(c);
  os << ";h=" << h;
  return os.str();
}

}  // namespace zlspets
