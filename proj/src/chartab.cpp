#include "zlspets/chartab.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "zlspets/linalg.hpp"

namespace zlspets {

namespace {

long group_exponent(const ReflGroup& W) {
  long e = 1;
  for (size_t c = 0; c < W.num_classes(); ++c)
    e = std::lcm(e, W.element_order(W.class_rep(c)));
  return e;
}

// ---------------------------------------------------------------------------
// Dixon-Schneider
// ---------------------------------------------------------------------------

std::uint64_t next_splitting_prime(std::uint64_t start, long exponent, std::uint64_t order) {
  std::uint64_t p = std::max<std::uint64_t>(start, 2 * order + 3);
  while (true) {
    if (is_prime_u64(p) && (p - 1) % static_cast<std::uint64_t>(exponent) == 0) return p;
    ++p;
  }
}

Matrix<Fp> restriction_matrix(const Matrix<Fp>& M, const std::vector<std::vector<Fp>>& basis,
                              std::uint64_t p) {
  size_t d = basis.size();
  size_t n = basis[0].size();
  Matrix<Fp> bt(n, d, Fp(p, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j) bt(j, i) = basis[i][j];
  Matrix<Fp> rest(d, d, Fp(p, 0));
  for (size_t i = 0; i < d; ++i) {
    std::vector<Fp> mb(n, Fp(p, 0));
    for (size_t r = 0; r < n; ++r) {
      Fp acc(p, 0);
      for (size_t c = 0; c < n; ++c) acc = acc + M(r, c) * basis[i][c];
      mb[r] = acc;
    }
    auto x = bt.solve(mb);
    for (size_t r = 0; r < d; ++r) rest(r, i) = x[r];
  }
  return rest;
}

CharTable dixon_schneider(std::shared_ptr<const ReflGroup> Wp) {
  const ReflGroup& W = *Wp;
  const auto& classes = W.classes();
  size_t k = classes.size();
  long expo = group_exponent(W);

  std::vector<size_t> inverse_class(k);
  for (size_t c = 0; c < k; ++c) inverse_class[c] = W.class_of(W.inv(W.class_rep(c)));
  std::vector<std::vector<size_t>> power_class(k, std::vector<size_t>(expo, 0));
  for (size_t c = 0; c < k; ++c) {
    size_t rep = W.class_rep(c);
    size_t x = 0;  // identity; powers rep^s for s = 0..e-1
    for (long s = 0; s < expo; ++s) {
      power_class[c][s] = W.class_of(x);
      x = W.mul(x, rep);
    }
  }
  // C_i C_j = sum_t a_{ijt} C_t with a_{ijt} = #{x in C_i : x^-1 z_t in C_j}
  std::vector<std::vector<std::uint64_t>> amat(k, std::vector<std::uint64_t>(k * k, 0));
  for (size_t t = 0; t < k; ++t) {
    size_t zt = W.class_rep(t);
    for (size_t i = 0; i < k; ++i)
      for (size_t x : classes[i]) {
        size_t j = W.class_of(W.mul(W.inv(x), zt));
        amat[i][j * k + t] += 1;
      }
  }

  std::uint64_t p = next_splitting_prime(3, expo, W.size());
  for (int attempt = 0; attempt < 8; ++attempt, p = next_splitting_prime(p + 1, expo, W.size())) {
    // omega_i omega_j = sum_t a_{ijt} omega_t, so with (M_i)_{j t} = a_{ijt}
    // every omega-vector is a simultaneous eigenvector of the M_i.
    std::vector<Matrix<Fp>> M(k, Matrix<Fp>(k, k, Fp(p, 0)));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < k; ++t) M[i](j, t) = Fp(p, amat[i][j * k + t]);

    std::vector<std::vector<std::vector<Fp>>> spaces;
    {
      std::vector<std::vector<Fp>> full;
      for (size_t i = 0; i < k; ++i) {
        std::vector<Fp> e(k, Fp(p, 0));
        e[i] = Fp(p, 1);
        full.push_back(std::move(e));
      }
      spaces.push_back(std::move(full));
    }
    for (size_t i = 0; i < k; ++i) {
      std::vector<std::vector<std::vector<Fp>>> next;
      for (auto& sp : spaces) {
        if (sp.size() == 1) {
          next.push_back(sp);
          continue;
        }
        Matrix<Fp> rest = restriction_matrix(M[i], sp, p);
        size_t d = sp.size();
        std::vector<std::uint64_t> eig;
        for (std::uint64_t lam = 0; lam < p; ++lam) {
          Matrix<Fp> shifted = rest;
          for (size_t r = 0; r < d; ++r) shifted(r, r) = shifted(r, r) - Fp(p, lam);
          if (shifted.rank() < d) eig.push_back(lam);
        }
        if (eig.size() <= 1) {
          next.push_back(sp);
          continue;
        }
        for (auto lam : eig) {
          Matrix<Fp> shifted = rest;
          for (size_t r = 0; r < d; ++r) shifted(r, r) = shifted(r, r) - Fp(p, lam);
          auto ker = shifted.kernel();
          std::vector<std::vector<Fp>> sub;
          for (const auto& kv : ker) {
            std::vector<Fp> v(k, Fp(p, 0));
            for (size_t a2 = 0; a2 < d; ++a2)
              for (size_t j2 = 0; j2 < k; ++j2) v[j2] = v[j2] + kv[a2] * sp[a2][j2];
            sub.push_back(std::move(v));
          }
          if (!sub.empty()) next.push_back(std::move(sub));
        }
      }
      spaces = std::move(next);
    }
    if (spaces.size() != k) continue;
    bool all_one = true;
    for (auto& sp : spaces)
      if (sp.size() != 1) all_one = false;
    if (!all_one) continue;

    size_t id_class = W.class_of(0);
    std::vector<std::vector<std::uint64_t>> omegas;
    bool ok = true;
    for (auto& sp : spaces) {
      auto v = sp[0];
      if (f_is_zero(v[id_class])) {
        ok = false;
        break;
      }
      Fp inv = f_inv(v[id_class]);
      std::vector<std::uint64_t> w(k);
      for (size_t j = 0; j < k; ++j) w[j] = (inv * v[j]).v;
      omegas.push_back(std::move(w));
    }
    if (!ok) continue;

    long e = expo;
    std::uint64_t theta = powmod(smallest_primitive_root(p), (p - 1) / e, p);
    std::uint64_t einv = powmod(static_cast<std::uint64_t>(e) % p, p - 2, p);
    CharTable tab;
    tab.W = Wp;
    tab.exponent = e;
    for (auto& om : omegas) {
      std::uint64_t s = 0;
      for (size_t j = 0; j < k; ++j) {
        std::uint64_t term = ResidueInt::mulmod(om[j], om[inverse_class[j]], p);
        term = ResidueInt::mulmod(term, powmod(classes[j].size() % p, p - 2, p), p);
        s = (s + term) % p;
      }
      std::uint64_t d2 = ResidueInt::mulmod(W.size() % p, powmod(s, p - 2, p), p);
      long deg = -1;
      for (long d = 1; static_cast<std::uint64_t>(d) * d <= W.size(); ++d)
        if (ResidueInt::mulmod(d % p, d % p, p) == d2) {
          deg = d;
          break;
        }
      if (deg < 0) {
        ok = false;
        break;
      }
      std::vector<std::uint64_t> chi_modp(k);
      for (size_t j = 0; j < k; ++j)
        chi_modp[j] = ResidueInt::mulmod(ResidueInt::mulmod(deg % p, om[j], p),
                                         powmod(classes[j].size() % p, p - 2, p), p);
      std::vector<Cyc> row(k);
      for (size_t j = 0; j < k; ++j) {
        Cyc val;
        for (long t = 0; t < e && ok; ++t) {
          std::uint64_t n_t = 0;
          for (long sdx = 0; sdx < e; ++sdx) {
            std::uint64_t c = chi_modp[power_class[j][sdx]];
            std::uint64_t texp =
                ((p - 1) - (static_cast<std::uint64_t>(t) * sdx) % (p - 1)) % (p - 1);
            n_t = (n_t + ResidueInt::mulmod(c, powmod(theta, texp, p), p)) % p;
          }
          n_t = ResidueInt::mulmod(n_t, einv, p);
          if (n_t) {
            if (n_t > W.size()) {  // lifted multiplicities must be small
              ok = false;
              break;
            }
            val = val + Cyc(rat(static_cast<long>(n_t))) * Cyc::zeta_pow(e, t);
          }
        }
        if (!ok) break;
        row[j] = val;
      }
      if (!ok) break;
      tab.rows.push_back(std::move(row));
      tab.degrees.push_back(deg);
    }
    if (!ok) continue;

    std::vector<size_t> order(tab.rows.size());
    std::iota(order.begin(), order.end(), 0);
    auto rowkey = [&](size_t i) {
      std::string str;
      for (const auto& v : tab.rows[i]) str += v.key() + ";";
      return str;
    };
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (tab.degrees[a] != tab.degrees[b]) return tab.degrees[a] < tab.degrees[b];
      return rowkey(a) < rowkey(b);
    });
    CharTable sorted;
    sorted.W = Wp;
    sorted.exponent = e;
    for (size_t i : order) {
      sorted.rows.push_back(tab.rows[i]);
      sorted.degrees.push_back(tab.degrees[i]);
    }
    sorted.validate();
    return sorted;
  }
  throw std::runtime_error("character table: splitting-prime search failed");
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h * 1099511628211ull) ^ c;
  return h;
}

std::string table_payload(const CharTable& t) {
  nlohmann::ordered_json j;
  j["exponent"] = t.exponent;
  j["degrees"] = t.degrees;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) {
      nlohmann::ordered_json cell;
      cell["m"] = v.conductor();
      std::vector<std::string> cs;
      for (const auto& c : v.coeffs()) cs.push_back(c.get_str());
      cell["c"] = cs;
      r.push_back(cell);
    }
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump();
}

std::optional<CharTable> table_from_payload(const std::string& payload,
                                            std::shared_ptr<const ReflGroup> W) {
  auto j = nlohmann::json::parse(payload, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  try {
    CharTable t;
    t.W = W;
    t.exponent = j.at("exponent").get<long>();
    t.degrees = j.at("degrees").get<std::vector<long>>();
    for (const auto& r : j.at("rows")) {
      std::vector<Cyc> row;
      for (const auto& cell : r) {
        long m = cell.at("m").get<long>();
        std::vector<Rat> cs;
        for (const auto& s : cell.at("c")) {
          Rat q(s.get<std::string>());
          q.canonicalize();
          cs.push_back(q);
        }
        row.push_back(Cyc(m, cs));
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::string cache_directory() {
  if (const char* env = std::getenv("ZLSPETS_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/zlspets";
  return "";
}

void CharTable::validate() const {
  size_t k = num_classes();
  if (rows.size() != k) throw std::logic_error("character count differs from class count");
  const auto& classes = W->classes();
  Rat order(static_cast<long>(W->size()));
  long sumsq = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i][W->class_of(0)] == Cyc(rat(degrees[i]))))
      throw std::logic_error("degree does not match the identity value");
    sumsq += degrees[i] * degrees[i];
  }
  if (Rat(sumsq) != order) throw std::logic_error("sum of squared degrees is not |W|");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Cyc acc;
      for (size_t c = 0; c < k; ++c)
        acc = acc + Cyc(rat(static_cast<long>(classes[c].size()))) *
                        (rows[i][c] * rows[j][c].conj());
      Cyc expect = (i == j) ? Cyc(Rat(order)) : Cyc();
      if (!(acc == expect)) throw std::logic_error("row orthogonality fails");
    }
  for (size_t c = 0; c < k; ++c)
    for (size_t d = 0; d < k; ++d) {
      Cyc acc;
      for (size_t i = 0; i < rows.size(); ++i) acc = acc + rows[i][c] * rows[i][d].conj();
      Cyc expect = (c == d) ? Cyc(order / Rat(static_cast<long>(classes[c].size()))) : Cyc();
      if (!(acc == expect)) throw std::logic_error("column orthogonality fails");
    }
}

std::optional<size_t> CharTable::find_row(const std::vector<Cyc>& values) const {
  for (size_t i = 0; i < rows.size(); ++i) {
    bool eq = true;
    for (size_t j = 0; j < rows[i].size() && eq; ++j)
      if (!(rows[i][j] == values[j])) eq = false;
    if (eq) return i;
  }
  return std::nullopt;
}

CharTable character_table(std::shared_ptr<const ReflGroup> W) {
  std::string dir = cache_directory();
  std::string path;
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) path = dir + "/tab_" + std::to_string(fnv(W->fingerprint())) + ".json";
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (in) {
      nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      if (!j.is_discarded() && j.contains("payload") && j.contains("checksum") &&
          j.contains("fingerprint") && j["fingerprint"] == W->fingerprint()) {
        std::string payload = j["payload"].get<std::string>();
        if (fnv(payload) == j["checksum"].get<std::uint64_t>()) {
          auto t = table_from_payload(payload, W);
          if (t) {
            try {
              t->validate();
              return *t;
            } catch (const std::exception&) {
              // corrupt cache entry: recompute below
            }
          }
        }
      }
    }
  }
  CharTable t = dixon_schneider(W);
  if (!path.empty()) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["fingerprint"] = W->fingerprint();
    std::string payload = table_payload(t);
    j["checksum"] = fnv(payload);
    j["payload"] = payload;
    std::ofstream out(path);
    if (out) out << j.dump(1) << "\n";
  }
  return t;
}

SubgroupView subgroup_view(const std::shared_ptr<const ReflGroup>& W,
                           const std::vector<size_t>& elems) {
  GroupSpec s;
  s.family = GroupSpec::Family::Product;  // family tag is irrelevant here
  s.name = W->spec().name + "|sub" + std::to_string(elems.size());
  s.rank = W->rank();
  s.conductor = W->spec().conductor;
  s.expected_order = elems.size();
  for (size_t e : elems) {
    if (e == 0) continue;
    s.generators.push_back(W->element(e));
    s.gen_orders.push_back(W->element_order(e));
  }
  if (s.generators.empty()) {
    s.generators.push_back(W->element(0));
    s.gen_orders.push_back(1);
    s.expected_order = 1;
  }
  SubgroupView v;
  v.group = std::make_shared<ReflGroup>(s, elems.size() + 1);
  v.to_parent.resize(v.group->size());
  for (size_t i = 0; i < v.group->size(); ++i) {
    auto idx = W->index_of(v.group->element(i));
    if (!idx) throw std::logic_error("subgroup element missing from parent group");
    v.to_parent[i] = *idx;
  }
  return v;
}

std::vector<std::vector<long>> restriction_multiplicities(const CharTable& big,
                                                          const CharTable& small,
                                                          const std::vector<size_t>& to_parent) {
  const ReflGroup& W0 = *small.W;
  size_t n0 = W0.size();
  std::vector<std::vector<long>> out(small.num_chars(), std::vector<long>(big.num_chars(), 0));
  for (size_t phi = 0; phi < small.num_chars(); ++phi)
    for (size_t chi = 0; chi < big.num_chars(); ++chi) {
      Cyc acc;
      for (size_t x = 0; x < n0; ++x)
        acc = acc + small.value(phi, x).conj() * big.value(chi, to_parent[x]);
      Cyc val = Cyc(rat(1, static_cast<long>(n0))) * acc;
      if (!val.is_rational() || !is_integer(val.rational_value()) ||
          sgn(val.rational_value()) < 0)
        throw std::logic_error("restriction multiplicity is not a nonnegative integer");
      out[phi][chi] = static_cast<long>(val.rational_value().get_num().get_si());
    }
  for (size_t chi = 0; chi < big.num_chars(); ++chi) {
    long s = 0;
    for (size_t phi = 0; phi < small.num_chars(); ++phi)
      s += out[phi][chi] * small.degrees[phi];
    if (s != big.degrees[chi])
      throw std::logic_error("restriction multiplicities do not refine the degree");
  }
  return out;
}

}  // namespace zlspets
