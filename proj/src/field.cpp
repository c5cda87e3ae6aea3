#include "specht/field.hpp"

#include "specht/errors.hpp"

namespace specht {
namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long mod_inverse(long long a, long long p) {
  // Extended Euclid; a must be nonzero mod p.
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw PreconditionError("element not invertible in the field");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::gf(long long p) {
  if (!is_prime(p)) {
    throw PreconditionError("field characteristic must be prime, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("gf:", 0) == 0) {
    long long p = 0;
    try {
      p = std::stoll(spec.substr(3));
    } catch (const std::exception&) {
      throw ParseError("bad field spec '" + spec + "'");
    }
    return gf(p);
  }
  throw ParseError("bad field spec '" + spec + "' (expected 'q' or 'gf:P')");
}

std::string Field::to_string() const {
  return ch_ == 0 ? "q" : "gf:" + std::to_string(ch_);
}

Rat Field::normalize(const Rat& v) const {
  if (ch_ == 0) return v;
  Int p(ch_);
  Int num = numerator(v) % p;
  if (num < 0) num += p;
  Int den = denominator(v) % p;
  if (den == 0) throw PreconditionError("denominator divisible by the field characteristic");
  if (den == 1) return Rat(num);
  long long d = static_cast<long long>(den);
  Int r = (num * mod_inverse(d, ch_)) % p;
  return Rat(r);
}

Rat Field::inv(const Rat& a) const {
  if (ch_ == 0) {
    if (a == 0) throw PreconditionError("division by zero");
    return 1 / a;
  }
  Rat v = normalize(a);
  if (v == 0) throw PreconditionError("element not invertible in the field");
  return Rat(mod_inverse(static_cast<long long>(numerator(v)), ch_));
}

}  // namespace specht
