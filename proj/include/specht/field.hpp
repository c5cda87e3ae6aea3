#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace specht {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
// Elements are carried as exact rationals; over F_p they are kept normalized
// to integer residues in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field gf(long long p);

  // "q" or "gf:P".
  static Field parse(const std::string& spec);
  std::string to_string() const;

  long long characteristic() const { return ch_; }
  bool is_prime_field() const { return ch_ != 0; }

  Rat normalize(const Rat& v) const;
  bool is_zero(const Rat& v) const { return normalize(v) == 0; }

  Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
  Rat neg(const Rat& a) const { return normalize(-a); }
  Rat inv(const Rat& a) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return ch_ == o.ch_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  explicit Field(long long ch) : ch_(ch) {}
  long long ch_;
};

}  // namespace specht
