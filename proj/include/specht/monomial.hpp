#pragma once

#include <string>
#include <utility>
#include <vector>

namespace specht {

class Permutation;

// Sparse monomial: pairs (variable index, exponent) with 1-based indices,
// ascending, exponents strictly positive. The empty list is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  // Accepts any pair list; merges duplicates, drops zero exponents, sorts.
  explicit Monomial(std::vector<std::pair<int, int>> exps);

  static Monomial one() { return Monomial(); }
  static Monomial variable(int index, int exp = 1);

  const std::vector<std::pair<int, int>>& exponents() const { return e_; }
  int exponent(int var) const;
  int degree() const;
  int weight() const { return static_cast<int>(e_.size()); }
  std::vector<int> support() const;
  bool is_one() const { return e_.empty(); }
  int max_variable() const { return e_.empty() ? 0 : e_.back().first; }

  Monomial operator*(const Monomial& o) const;
  Monomial apply(const Permutation& sigma) const;

  // true and the quotient if o divides *this.
  bool try_divide(const Monomial& o, Monomial& quotient) const;

  // Partial degrees sorted weakly decreasing.
  std::vector<int> degree_shape() const;

  std::string to_string() const;  // "x2*x4^4*x5^2"; "1" for the unit

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::pair<int, int>> e_;
};

// Graded reverse-lexicographic comparison: negative when a < b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

// Orders std::map iteration from the grevlex-largest monomial down, which is
// the canonical printing order.
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

}  // namespace specht
