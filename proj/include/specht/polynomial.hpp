#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "specht/field.hpp"
#include "specht/monomial.hpp"
#include "specht/permutation.hpp"
#include "specht/tableau.hpp"

namespace specht {

// Degree of the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

// Sparse multivariate polynomial with exact coefficients over Q or F_p, in a
// fixed ambient ring K[X_1..X_n]. Terms are kept in graded reverse-lex
// descending order; no zero coefficient is ever stored, so representation is
// canonical and operator== is structural identity.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrevlexDesc>;

  Poly(Field field, int n) : field_(field), n_(n) {}

  static Poly zero(Field field, int n) { return Poly(field, n); }
  static Poly constant(Field field, int n, const Rat& c);
  static Poly variable(Field field, int n, int index);
  static Poly term(Field field, int n, const Monomial& m, const Rat& c);

  // Grammar:
  //   expr   := ['+'|'-'] term (('+'|'-') term)*
  //   term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
  //   factor := 'x' INT ['^' INT]
  //   coeff  := INT ['/' INT]
  // Whitespace is insignificant. Coefficients are reduced into the field, so
  // e.g. "5*x1" over gf:5 parses to 0.
  static Poly parse(const std::string& text, Field field, int n);
  std::string to_string() const;

  const Field& field() const { return field_; }
  int ambient() const { return n_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  Rat coefficient(const Monomial& m) const;
  std::vector<int> support() const;
  int weight() const { return static_cast<int>(support().size()); }

  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly homogeneous_component(int h) const;
  Poly apply(const Permutation& sigma) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  // Quotient of an exact division; throws PreconditionError("not divisible")
  // when a remainder would be left.
  Poly exact_divide(const Poly& divisor) const;

  // X_j -> Z_{image[j-1]} into an ambient of new_n variables; exponents of
  // variables landing on the same Z accumulate.
  Poly substitute_variables(const std::vector<int>& image, int new_n) const;

  void add_term(const Monomial& m, const Rat& c);  // accumulates, keeps canonical

 private:
  void check_compatible(const Poly& o) const;

  Field field_;
  int n_;
  TermMap terms_;
};

// Total order on canonical forms, for deterministic sets of polynomials.
bool poly_less(const Poly& a, const Poly& b);

// Product of differences Prod_{j<k} (X_{s_j} - X_{s_k}) over the given order
// of S; the empty and singleton products are 1. Indices must be distinct.
Poly vandermonde(Field field, int n, const std::vector<int>& ordered_indices);

// Product of the column Vandermondes of T, columns read top to bottom.
Poly specht_polynomial(Field field, const Tableau& t);

}  // namespace specht
