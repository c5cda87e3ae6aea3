#include "specht/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw PreconditionError("parts must be weakly decreasing positive integers");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + tok + "'", pos);
    }
    pos = next + 1;
  }
  if (parts.empty()) throw ParseError("empty partition");
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> dual;
  const int first = parts_.empty() ? 0 : parts_[0];
  dual.reserve(first);
  for (int i = 1; i <= first; ++i) {
    int count = 0;
    for (int p : parts_) {
      if (p >= i) ++count;
    }
    dual.push_back(count);
  }
  return Partition(std::move(dual));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool dominates(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight()) throw PreconditionError("incomparable weights");
  const int len = std::max(mu.length(), lam.length());
  int sum_mu = 0, sum_lam = 0;
  for (int i = 1; i <= len; ++i) {
    sum_mu += mu.part(i);
    sum_lam += lam.part(i);
    if (sum_mu < sum_lam) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, int slots_left, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (slots_left == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    if (static_cast<long long>(p) * slots_left < remaining) break;
    acc.push_back(p);
    gen_partitions(remaining - p, p, slots_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, max_length.value_or(n), acc, out);
  return out;
}

std::vector<Partition> dominance_chain(const Partition& lam, const Partition& mu) {
  if (!dominates(mu, lam)) throw PreconditionError("no chain exists");
  std::vector<Partition> chain{lam};
  Partition cur = lam;
  while (cur != mu) {
    const auto& p = cur.parts();
    const int len = cur.length();
    bool moved = false;
    for (int i = 1; i < len && !moved; ++i) {
      if (i > 1 && p[i - 2] <= p[i - 1]) continue;  // row i may not gain
      for (int j = i + 1; j <= len && !moved; ++j) {
        if (p[j - 1] <= cur.part(j + 1)) continue;  // row j may not lose
        std::vector<int> next = p;
        next[i - 1] += 1;
        next[j - 1] -= 1;
        Partition cand(next);
        if (dominates(mu, cand)) {
          chain.push_back(cand);
          cur = cand;
          moved = true;
        }
      }
    }
    if (!moved) throw std::logic_error("dominance_chain: no legal box move found");
  }
  return chain;
}

OrbitType orbit_type(const std::vector<Rat>& point) {
  if (point.empty()) throw PreconditionError("point must have at least one coordinate");
  std::map<Rat, int> counts;
  for (const Rat& v : point) ++counts[v];
  std::vector<int> mult;
  mult.reserve(counts.size());
  for (const auto& [v, c] : counts) mult.push_back(c);
  std::sort(mult.rbegin(), mult.rend());
  return Partition(std::move(mult));
}

Partition mu_of_monomial(const Monomial& m, int n) {
  const int d = m.degree();
  const int l = m.weight();
  if (d + l > n) throw PreconditionError("insufficient variables: deg(m) + wt(m) > n");
  std::vector<int> parts = m.degree_shape();
  for (int& p : parts) p += 1;
  parts.insert(parts.end(), n - d - l, 1);
  return Partition(std::move(parts));
}

std::vector<Partition> admissible_partitions(int n, const Monomial& m, int d) {
  if (d != m.degree()) throw PreconditionError("d must equal deg(m)");
  const Partition mu_perp = mu_of_monomial(m, n).conjugate();
  std::vector<Partition> out;
  for (const Partition& nu : partitions_of(n)) {
    if (!dominates(mu_perp, nu)) {
      if (nu.length() > d) {
        throw std::logic_error("admissible partition longer than deg(m)");
      }
      out.push_back(nu);
    }
  }
  return out;
}

}  // namespace specht
