#include "specht/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

Poly Poly::constant(Field field, int n, const Rat& c) {
  Poly p(field, n);
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::variable(Field field, int n, int index) {
  return term(field, n, Monomial::variable(index), 1);
}

Poly Poly::term(Field field, int n, const Monomial& m, const Rat& c) {
  if (m.max_variable() > n) throw PreconditionError("variable index exceeds ambient dimension");
  Poly p(field, n);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  Rat v = field_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second = field_.add(it->second, v);
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (field_ != o.field_) throw PreconditionError("field mismatch");
  if (n_ != o.n_) throw PreconditionError("ambient dimension mismatch");
}

int Poly::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return terms_.begin()->first.degree();  // grevlex-max has maximal degree
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<int> Poly::support() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.exponents()) vars.insert(v);
  }
  return std::vector<int>(vars.begin(), vars.end());
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& Poly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_compatible(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(field_, n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(field_, n_);
  Rat v = field_.normalize(c);
  if (v == 0) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * v);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power");
  Poly r = constant(field_, n_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
}

Poly Poly::homogeneous_component(int h) const {
  Poly r(field_, n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == h) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::apply(const Permutation& sigma) const {
  if (sigma.size() != n_) throw PreconditionError("permutation size mismatch");
  Poly r(field_, n_);
  for (const auto& [m, c] : terms_) r.add_term(m.apply(sigma), c);
  return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_) throw PreconditionError("point dimension mismatch");
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m.exponents()) {
      for (int i = 0; i < e; ++i) t *= point[v - 1];
    }
    sum += t;
  }
  return field_.normalize(sum);
}

Poly Poly::exact_divide(const Poly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  Poly quotient(field_, n_);
  Poly rem = *this;
  const Monomial& dlm = divisor.leading_monomial();
  const Rat& dlc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    Monomial q;
    if (!rem.leading_monomial().try_divide(dlm, q)) {
      throw PreconditionError("not divisible");
    }
    Rat c = field_.div(rem.leading_coefficient(), dlc);
    Poly t = Poly::term(field_, n_, q, c);
    quotient = quotient + t;
    rem = rem - t * divisor;
  }
#ifndef NDEBUG
  assert(quotient * divisor == *this);
#endif
  return quotient;
}

Poly Poly::substitute_variables(const std::vector<int>& image, int new_n) const {
  if (static_cast<int>(image.size()) != n_) throw PreconditionError("substitution map size mismatch");
  Poly r(field_, new_n);
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<int, int>> exps;
    for (const auto& [v, e] : m.exponents()) {
      int target = image[v - 1];
      if (target < 1 || target > new_n) throw PreconditionError("substitution target out of range");
      exps.emplace_back(target, e);
    }
    r.add_term(Monomial(std::move(exps)), c);
  }
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    int c = grevlex_cmp(ia->first, ib->first);
    if (c != 0) return c > 0;  // grevlex-larger leading structure first
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

class Parser {
 public:
  Parser(const std::string& text, Field field, int n)
      : text_(text), field_(field), n_(n), poly_(field, n) {}

  Poly run() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    parse_term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_ws();
      parse_term(op == '-');
      skip_ws();
    }
    return poly_;
  }

 private:
  void parse_term(bool negative) {
    Rat coeff = 1;
    Monomial mono = Monomial::one();
    bool saw_anything = false;
    if (std::isdigit(peek())) {
      Int num = parse_int();
      Int den = 1;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        if (!std::isdigit(peek())) fail("expected denominator");
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rat(num, den);
      saw_anything = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        mono = mono * parse_factor();
        saw_anything = true;
      } else {
        // bare constant term
        poly_.add_term(mono, negative ? -coeff : coeff);
        return;
      }
    } else {
      mono = mono * parse_factor();
      saw_anything = true;
    }
    skip_ws();
    while (peek() == '*') {
      get();
      skip_ws();
      mono = mono * parse_factor();
      skip_ws();
    }
    if (!saw_anything) fail("expected term");
    poly_.add_term(mono, negative ? -coeff : coeff);
  }

  Monomial parse_factor() {
    if (peek() != 'x' && peek() != 'X') fail("expected variable");
    get();
    if (!std::isdigit(peek())) fail("expected variable index");
    Int idx = parse_int();
    if (idx < 1 || idx > n_) fail("variable index out of range 1.." + std::to_string(n_));
    int exp = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(peek())) fail("expected exponent");
      Int e = parse_int();
      if (e > 1000000) fail("exponent too large");
      exp = static_cast<int>(e);
    }
    return Monomial({{static_cast<int>(idx), exp}});
  }

  Int parse_int() {
    Int v = 0;
    while (std::isdigit(peek())) v = v * 10 + (get() - '0');
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  const std::string& text_;
  Field field_;
  int n_;
  Poly poly_;
  std::size_t pos_ = 0;
};

std::string rat_abs_string(const Rat& r) {
  Rat a = r < 0 ? Rat(-r) : r;
  std::string s = numerator(a).str();
  if (denominator(a) != 1) s += "/" + denominator(a).str();
  return s;
}

}  // namespace

Poly Poly::parse(const std::string& text, Field field, int n) {
  return Parser(text, field, n).run();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const Rat a = neg ? Rat(-c) : c;
    if (m.is_one()) {
      out += rat_abs_string(a);
    } else {
      if (a != 1) out += rat_abs_string(a) + "*";
      out += m.to_string();
    }
  }
  return out;
}

Poly vandermonde(Field field, int n, const std::vector<int>& ordered_indices) {
  std::set<int> seen;
  for (int i : ordered_indices) {
    if (i < 1 || i > n) throw PreconditionError("Vandermonde index out of range");
    if (!seen.insert(i).second) throw PreconditionError("duplicate index in Vandermonde set");
  }
  Poly r = Poly::constant(field, n, 1);
  for (std::size_t j = 0; j + 1 < ordered_indices.size(); ++j) {
    for (std::size_t k = j + 1; k < ordered_indices.size(); ++k) {
      r = r * (Poly::variable(field, n, ordered_indices[j]) -
               Poly::variable(field, n, ordered_indices[k]));
    }
  }
  return r;
}

Poly specht_polynomial(Field field, const Tableau& t) {
  Poly r = Poly::constant(field, t.n(), 1);
  for (int c = 0; c < t.column_count(); ++c) {
    r = r * vandermonde(field, t.n(), t.column(c));
  }
  return r;
}

}  // namespace specht
