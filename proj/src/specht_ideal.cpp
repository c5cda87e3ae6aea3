#include "specht/specht_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "specht/errors.hpp"

namespace specht {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// ColumnBlocks

ColumnBlocks ColumnBlocks::canonical(std::vector<std::vector<int>> raw) {
  std::set<int> seen;
  for (auto& block : raw) {
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1) throw PreconditionError("block indices must be >= 1");
      if (!seen.insert(v).second) throw PreconditionError("blocks must be disjoint");
    }
  }
  raw.erase(std::remove_if(raw.begin(), raw.end(),
                           [](const std::vector<int>& b) { return b.empty(); }),
            raw.end());
  std::sort(raw.begin(), raw.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return ColumnBlocks{std::move(raw)};
}

int ColumnBlocks::element_count() const {
  int c = 0;
  for (const auto& b : blocks) c += static_cast<int>(b.size());
  return c;
}

bool ColumnBlocks::covers(int n) const {
  if (element_count() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks) {
    for (int v : b) {
      if (v > n || seen[v - 1]) return false;
      seen[v - 1] = true;
    }
  }
  return true;
}

Partition ColumnBlocks::column_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(std::move(sizes));
}

Poly blocks_polynomial(Field field, int n, const ColumnBlocks& cb) {
  Poly r = Poly::constant(field, n, 1);
  for (const auto& block : cb.blocks) r = r * vandermonde(field, n, block);
  return r;
}

// ---------------------------------------------------------------------------
// Generator enumeration and membership

namespace {

void enumerate_blocks(const std::vector<int>& sizes, std::size_t slot, std::vector<int>& remaining,
                      std::vector<std::vector<int>>& acc,
                      const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (slot == sizes.size()) {
    emit(acc);
    return;
  }
  const int s = sizes[slot];
  // Same-size blocks must have increasing minima; that makes the listing
  // canonical and duplicate-free.
  const int min_bound =
      (slot > 0 && sizes[slot - 1] == s) ? acc[slot - 1].front() : 0;

  std::vector<int> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == s) {
      std::vector<int> rest;
      rest.reserve(remaining.size() - s);
      std::set<int> used(chosen.begin(), chosen.end());
      for (int v : remaining) {
        if (!used.count(v)) rest.push_back(v);
      }
      acc.push_back(chosen);
      std::swap(remaining, rest);
      enumerate_blocks(sizes, slot + 1, remaining, acc, emit);
      std::swap(remaining, rest);
      acc.pop_back();
      return;
    }
    for (std::size_t i = start; i < remaining.size(); ++i) {
      if (chosen.empty() && remaining[i] <= min_bound) continue;
      chosen.push_back(remaining[i]);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
}

}  // namespace

std::vector<std::pair<ColumnBlocks, Poly>> generators_of_shape(Field field, const Partition& lam,
                                                               int n) {
  if (lam.weight() != n) throw PreconditionError("shape weight does not match n");
  const std::vector<int> sizes = lam.conjugate().parts();
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i + 1;
  std::vector<std::vector<int>> acc;
  std::vector<std::pair<ColumnBlocks, Poly>> out;
  enumerate_blocks(sizes, 0, remaining, acc, [&](const std::vector<std::vector<int>>& blocks) {
    ColumnBlocks cb{blocks};
    out.emplace_back(cb, blocks_polynomial(field, n, cb));
  });
  return out;
}

bool point_in_variety(const std::vector<Rat>& x, const Partition& mu) {
  if (static_cast<int>(x.size()) != mu.weight()) throw PreconditionError("dimension mismatch");
  return !dominates(mu, orbit_type(x));
}

// ---------------------------------------------------------------------------
// Certificate plumbing

Poly resolve_generator(const GeneratorRef& gen, Field field, int n,
                       const std::vector<Poly>& system) {
  if (const auto* sg = std::get_if<SpechtGen>(&gen)) {
    return blocks_polynomial(field, n, sg->columns);
  }
  const auto& sym = std::get<SymGen>(gen);
  if (sym.index < 0 || sym.index >= static_cast<int>(system.size())) {
    throw PreconditionError("unresolvable generator reference (index " +
                            std::to_string(sym.index) + ")");
  }
  return system[sym.index].apply(sym.perm);
}

bool verify_certificate(const Certificate& cert, const std::vector<Poly>& system) {
  Poly sum = Poly::zero(cert.field, cert.n);
  for (const auto& entry : cert.entries) {
    sum = sum + entry.cofactor * resolve_generator(entry.generator, cert.field, cert.n, system);
  }
  return sum == cert.target;
}

namespace {

#ifndef NDEBUG
void debug_verify(const Certificate& cert, const Poly& p, int gen_index) {
  std::vector<Poly> sys(gen_index + 1, Poly::zero(cert.field, cert.n));
  sys[gen_index] = p;
  assert(verify_certificate(cert, sys));
}
#endif

void accumulate(std::map<ColumnBlocks, Poly>& m, const ColumnBlocks& key, const Poly& v) {
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
  } else {
    it->second = it->second + v;
  }
}

void accumulate(std::map<Permutation, Poly>& m, const Permutation& key, const Poly& v) {
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
  } else {
    it->second = it->second + v;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Dominance certificates

Certificate dominance_step_certificate(Field field, int n, const std::vector<int>& a_block,
                                       const std::vector<int>& b_block) {
  std::vector<int> a_sorted = a_block;
  std::vector<int> b_sorted = b_block;
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(b_sorted.begin(), b_sorted.end());
  const int a = static_cast<int>(a_sorted.size());
  const int b = static_cast<int>(b_sorted.size());
  if (a - b < 2) throw PreconditionError("step requires |A| - |B| >= 2");
  for (int v : a_sorted) {
    if (std::binary_search(b_sorted.begin(), b_sorted.end(), v)) {
      throw PreconditionError("A and B must be disjoint");
    }
  }

  Certificate cert{field, n, vandermonde(field, n, a_sorted) * vandermonde(field, n, b_sorted), {}};
  for (int t = 0; t < a; ++t) {
    const int moved = a_sorted[t];
    std::vector<int> s1 = a_sorted;
    s1.erase(s1.begin() + t);
    std::vector<int> s2 = b_sorted;
    s2.insert(std::upper_bound(s2.begin(), s2.end(), moved), moved);
    // Sign: epsilon of the transposition, the re-sorting of A \ {moved}, and
    // the insertion depth of `moved` into B.
    const int below_in_b =
        static_cast<int>(std::lower_bound(b_sorted.begin(), b_sorted.end(), moved) -
                         b_sorted.begin());
    const int sign = ((t + below_in_b) % 2 == 0) ? 1 : -1;
    Poly cof = Poly::term(field, n, Monomial::variable(moved, a - b - 1), sign);
    cert.entries.push_back({cof, SpechtGen{ColumnBlocks::canonical({s1, s2})}});
  }
#ifndef NDEBUG
  assert(verify_certificate(cert));
#endif
  return cert;
}

Certificate dominance_certificate(Field field, const ColumnBlocks& columns, const Partition& mu) {
  const int n = mu.weight();
  if (!columns.covers(n)) throw PreconditionError("columns must partition 1..n");
  const Partition lam = columns.shape();
  if (!dominates(mu, lam)) {
    throw PreconditionError("shape " + lam.to_string() + " is not dominated by " + mu.to_string());
  }

  const std::vector<Partition> chain = dominance_chain(lam, mu);
  std::map<ColumnBlocks, Poly> current;
  current.emplace(columns, Poly::constant(field, n, 1));

  for (std::size_t step = 0; step + 1 < chain.size(); ++step) {
    const Partition& nu = chain[step];
    const Partition& next = chain[step + 1];
    // The single box move: row i gains, row j loses.
    int gain_row = 0, lose_row = 0;
    for (int r = 1; r <= std::max(nu.length(), next.length()); ++r) {
      if (next.part(r) == nu.part(r) + 1) gain_row = r;
      if (next.part(r) == nu.part(r) - 1) lose_row = r;
    }
    if (gain_row == 0 || lose_row == 0) throw std::logic_error("chain step is not a box move");
    // On the column side the move shrinks a column of size `a` and grows one
    // of size `b`, with a - b >= 2.
    const Partition dual = nu.conjugate();
    const int a = dual.part(nu.part(lose_row));
    const int b = dual.part(nu.part(gain_row) + 1);

    std::map<ColumnBlocks, Poly> rewritten;
    for (const auto& [cb, cofactor] : current) {
      std::size_t a_pos = cb.blocks.size(), b_pos = cb.blocks.size();
      for (std::size_t i = 0; i < cb.blocks.size(); ++i) {
        if (a_pos == cb.blocks.size() && static_cast<int>(cb.blocks[i].size()) == a) a_pos = i;
        if (b > 0 && b_pos == cb.blocks.size() && static_cast<int>(cb.blocks[i].size()) == b)
          b_pos = i;
      }
      if (a_pos == cb.blocks.size()) throw std::logic_error("no column of the expected size");
      std::vector<int> b_blk =
          (b > 0) ? cb.blocks[b_pos] : std::vector<int>{};
      Certificate step_cert = dominance_step_certificate(field, n, cb.blocks[a_pos], b_blk);

      std::vector<std::vector<int>> others;
      for (std::size_t i = 0; i < cb.blocks.size(); ++i) {
        if (i != a_pos && !(b > 0 && i == b_pos)) others.push_back(cb.blocks[i]);
      }
      for (const auto& entry : step_cert.entries) {
        std::vector<std::vector<int>> blocks = std::get<SpechtGen>(entry.generator).columns.blocks;
        blocks.insert(blocks.end(), others.begin(), others.end());
        accumulate(rewritten, ColumnBlocks::canonical(std::move(blocks)),
                   cofactor * entry.cofactor);
      }
    }
    for (auto it = rewritten.begin(); it != rewritten.end();) {
      it = it->second.is_zero() ? rewritten.erase(it) : std::next(it);
    }
    current = std::move(rewritten);
  }

  Certificate cert{field, n, blocks_polynomial(field, n, columns), {}};
  for (const auto& [cb, cof] : current) {
    cert.entries.push_back({cof, SpechtGen{cb}});
  }
#ifndef NDEBUG
  assert(verify_certificate(cert));
#endif
  return cert;
}

// ---------------------------------------------------------------------------
// Symmetric-ideal certificates (Specht polynomial of shape mu(m)^perp from
// the orbit of a single polynomial)

namespace {

struct SymSetup {
  Permutation relabel;   // applied to P first
  Poly p;                // relabelled polynomial
  std::vector<int> k;    // exponents of m, sorted decreasing
  Rat lead_coeff;        // coefficient of m in P_d
  std::vector<std::vector<int>> rows;  // row i = J_{i+1} = {i+1} u I_{i+1}, ascending
  Poly target;           // product of the row Vandermondes
};

SymSetup prepare_symmetric(const Poly& p, const Monomial& m) {
  const Field field = p.field();
  const int n = p.ambient();
  const int d = p.degree();
  if (d == kDegreeOfZero) throw PreconditionError("zero polynomial has no leading component");
  if (m.degree() != d) throw PreconditionError("monomial degree differs from deg(P)");
  const Poly pd = p.homogeneous_component(d);
  const Rat cm = pd.coefficient(m);
  if (cm == 0) throw PreconditionError("monomial is not in the leading component of P");
  const std::vector<int> supp_pd = pd.support();
  const int w = static_cast<int>(supp_pd.size());
  if (d + w > n) throw PreconditionError("insufficient variables: deg(P) + wt(P_d) > n");

  // Relabel so that m = X_1^{k_1}...X_l^{k_l} with k decreasing and
  // Supp(P_d) = {1..w}.
  std::vector<std::pair<int, int>> by_exp;  // (-exp, var)
  for (const auto& [v, e] : m.exponents()) by_exp.emplace_back(-e, v);
  std::sort(by_exp.begin(), by_exp.end());

  std::vector<int> image(n, 0);
  int next = 1;
  for (const auto& [neg_e, v] : by_exp) image[v - 1] = next++;
  for (int v : supp_pd) {
    if (image[v - 1] == 0) image[v - 1] = next++;
  }
  for (int v = 1; v <= n; ++v) {
    if (image[v - 1] == 0) image[v - 1] = next++;
  }
  Permutation relabel{image};

  SymSetup s{relabel, p.apply(relabel), {}, cm, {}, Poly::constant(field, n, 1)};
  for (const auto& [neg_e, v] : by_exp) s.k.push_back(-neg_e);

  int fresh = w + 1;
  for (std::size_t i = 0; i < s.k.size(); ++i) {
    std::vector<int> row{static_cast<int>(i) + 1};
    for (int t = 0; t < s.k[i]; ++t) row.push_back(fresh++);
    s.target = s.target * vandermonde(field, n, row);
    s.rows.push_back(std::move(row));
  }
  return s;
}

// All arrangements of the (ascending) row, in lexicographic order.
std::vector<std::vector<int>> row_arrangements(std::vector<int> row) {
  std::vector<std::vector<int>> out;
  do {
    out.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

using CofactorMap = std::map<Permutation, Poly>;

// Recursive construction from the general-characteristic proof: cofactors
// R_sigma over the product group of the rows, with
//   prod_i Delta(rows[i]) = sum_sigma R_sigma sigma(pcur).
// rows[i] always has k[i]+1 entries; the head rows[i][0] carries X^{k_i}.
CofactorMap certify_general(const Poly& pcur, std::vector<std::vector<int>> rows,
                            std::vector<int> k) {
  const Field field = pcur.field();
  const int n = pcur.ambient();

  Monomial lead = Monomial::one();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (k[i] > 0) lead = lead * Monomial::variable(rows[i][0], k[i]);
  }
  const Rat c = pcur.coefficient(lead);
  if (c == 0) throw std::logic_error("recursive certificate lost its leading monomial");
  const Rat c_inv = field.inv(c);

  int t = -1;
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    if (k[i] >= 1) {
      t = i;
      break;
    }
  }
  if (t < 0) {
    CofactorMap base;
    base.emplace(Permutation::identity(n), Poly::constant(field, n, c_inv));
    return base;
  }

  const Poly pn = pcur.scaled(c_inv);
  const int u = rows[t][0];
  const int v = rows[t].back();
  const Permutation tau = Permutation::transposition(n, u, v);
  const Poly difference = pn - pn.apply(tau);
  const Poly q = difference.exact_divide(Poly::variable(field, n, u) - Poly::variable(field, n, v));

  std::vector<std::vector<int>> sub_rows = rows;
  sub_rows[t].pop_back();
  std::vector<int> sub_k = k;
  sub_k[t] -= 1;
  CofactorMap sub = certify_general(q, sub_rows, sub_k);

  CofactorMap out;
  const Poly xv = Poly::variable(field, n, v);
  for (const auto& [rho, cof] : sub) {
    Poly lift = Poly::constant(field, n, 1);
    for (std::size_t pos = 1; pos + 1 < rows[t].size(); ++pos) {
      lift = lift * (Poly::variable(field, n, rho.image(rows[t][pos])) - xv);
    }
    const Poly c_rho = cof * lift;
    accumulate(out, rho, c_rho.scaled(c_inv));
    accumulate(out, rho.compose(tau), (-c_rho).scaled(c_inv));
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

Certificate symmetric_certificate_char0(const Poly& p, const Monomial& m, int gen_index) {
  const Field field = p.field();
  const int n = p.ambient();
  const SymSetup s = prepare_symmetric(p, m);

  Rat factorial_product = 1;
  for (int ki : s.k) {
    for (int i = 2; i <= ki; ++i) factorial_product *= i;
  }
  if (field.is_zero(factorial_product)) {
    throw PreconditionError("factorial k_1!...k_l! not invertible in the field");
  }
  const Rat scale = field.inv(field.mul(factorial_product, s.lead_coeff));

  Poly delta_i = Poly::constant(field, n, 1);
  for (const auto& row : s.rows) {
    delta_i = delta_i * vandermonde(field, n, std::vector<int>(row.begin() + 1, row.end()));
  }

  std::vector<std::vector<std::vector<int>>> arrangements;
  for (const auto& row : s.rows) arrangements.push_back(row_arrangements(row));

  Certificate cert{field, n, s.target, {}};
  std::vector<std::size_t> odo(s.rows.size(), 0);
  const auto advance = [&]() -> bool {
    for (std::size_t i = odo.size(); i > 0;) {
      --i;
      if (++odo[i] < arrangements[i].size()) return true;
      odo[i] = 0;
    }
    return false;
  };
  do {
    std::vector<int> image(n);
    for (int i = 1; i <= n; ++i) image[i - 1] = i;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const auto& arranged = arrangements[i][odo[i]];
      for (std::size_t pos = 0; pos < s.rows[i].size(); ++pos) {
        image[s.rows[i][pos] - 1] = arranged[pos];
      }
    }
    Permutation sigma{image};
    const Rat eps = sigma.sign();
    cert.entries.push_back({delta_i.apply(sigma).scaled(field.mul(eps, scale)),
                            SymGen{sigma.compose(s.relabel), gen_index}});
  } while (advance());
#ifndef NDEBUG
  debug_verify(cert, p, gen_index);
#endif
  return cert;
}

Certificate symmetric_certificate_general(const Poly& p, const Monomial& m, int gen_index) {
  const Field field = p.field();
  const int n = p.ambient();
  const SymSetup s = prepare_symmetric(p, m);

  CofactorMap cofactors = certify_general(s.p, s.rows, s.k);

  Certificate cert{field, n, s.target, {}};
  for (const auto& [sigma, cof] : cofactors) {
    cert.entries.push_back({cof, SymGen{sigma.compose(s.relabel), gen_index}});
  }
#ifndef NDEBUG
  debug_verify(cert, p, gen_index);
#endif
  return cert;
}

// ---------------------------------------------------------------------------
// JSON form

std::string Certificate::to_json() const {
  json j;
  j["field"] = {{"char", field.characteristic()}};
  j["n"] = n;
  j["target"] = target.to_string();
  j["entries"] = json::array();
  for (const auto& entry : entries) {
    json e;
    e["cofactor"] = entry.cofactor.to_string();
    if (const auto* sg = std::get_if<SpechtGen>(&entry.generator)) {
      e["generator"] = {{"kind", "specht"}, {"columns", sg->columns.blocks}};
    } else {
      const auto& sym = std::get<SymGen>(entry.generator);
      e["generator"] = {{"kind", "sym"}, {"perm", sym.perm.images()}, {"index", sym.index}};
    }
    j["entries"].push_back(std::move(e));
  }
  return j.dump();
}

Certificate Certificate::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
  try {
    const long long ch = j.at("field").at("char").get<long long>();
    const Field field = ch == 0 ? Field::rationals() : Field::gf(ch);
    const int n = j.at("n").get<int>();
    Certificate cert{field, n, Poly::parse(j.at("target").get<std::string>(), field, n), {}};
    for (const auto& e : j.at("entries")) {
      Poly cof = Poly::parse(e.at("cofactor").get<std::string>(), field, n);
      const auto& g = e.at("generator");
      const std::string kind = g.at("kind").get<std::string>();
      if (kind == "specht") {
        auto blocks = g.at("columns").get<std::vector<std::vector<int>>>();
        cert.entries.push_back({cof, SpechtGen{ColumnBlocks::canonical(std::move(blocks))}});
      } else if (kind == "sym") {
        cert.entries.push_back({cof, SymGen{Permutation{g.at("perm").get<std::vector<int>>()},
                                            g.at("index").get<int>()}});
      } else {
        throw ParseError("unknown generator kind '" + kind + "'");
      }
    }
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
}

}  // namespace specht
