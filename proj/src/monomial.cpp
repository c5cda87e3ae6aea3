#include "specht/monomial.hpp"

#include <algorithm>
#include <map>

#include "specht/errors.hpp"
#include "specht/permutation.hpp"

namespace specht {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) {
  std::map<int, int> acc;
  for (const auto& [v, e] : exps) {
    if (v < 1) throw PreconditionError("variable index must be >= 1");
    if (e < 0) throw PreconditionError("negative exponent");
    acc[v] += e;
  }
  for (const auto& [v, e] : acc) {
    if (e > 0) e_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(int index, int exp) {
  return Monomial({{index, exp}});
}

int Monomial::exponent(int var) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(var, 0));
  return (it != e_.end() && it->first == var) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  s.reserve(e_.size());
  for (const auto& [v, e] : e_) s.push_back(v);
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::pair<int, int>> merged;
  merged.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == e_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  Monomial m;
  m.e_ = std::move(merged);
  return m;
}

Monomial Monomial::apply(const Permutation& sigma) const {
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(e_.size());
  for (const auto& [v, e] : e_) mapped.emplace_back(sigma.image(v), e);
  std::sort(mapped.begin(), mapped.end());
  Monomial m;
  m.e_ = std::move(mapped);
  return m;
}

bool Monomial::try_divide(const Monomial& o, Monomial& quotient) const {
  std::vector<std::pair<int, int>> q;
  q.reserve(e_.size());
  auto b = o.e_.begin();
  for (const auto& [v, e] : e_) {
    while (b != o.e_.end() && b->first < v) return false;  // divisor has a var we lack
    int sub = 0;
    if (b != o.e_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (sub > e) return false;
    if (e - sub > 0) q.emplace_back(v, e - sub);
  }
  if (b != o.e_.end()) return false;
  quotient.e_ = std::move(q);
  return true;
}

std::vector<int> Monomial::degree_shape() const {
  std::vector<int> shape;
  shape.reserve(e_.size());
  for (const auto& [v, e] : e_) shape.push_back(e);
  std::sort(shape.rbegin(), shape.rend());
  return shape;
}

std::string Monomial::to_string() const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : e_) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: a > b iff the highest-index variable where they differ has a
  // smaller exponent in a.
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  auto ia = ea.rbegin();
  auto ib = eb.rbegin();
  while (ia != ea.rend() || ib != eb.rend()) {
    if (ib == eb.rend() || (ia != ea.rend() && ia->first > ib->first)) {
      return -1;  // a has the rightmost extra variable -> a < b
    }
    if (ia == ea.rend() || ib->first > ia->first) {
      return 1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

}  // namespace specht
