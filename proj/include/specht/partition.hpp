#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/field.hpp"
#include "specht/monomial.hpp"

namespace specht {

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored, so partitions differing by zero terms compare equal.
class Partition {
 public:
  Partition() = default;  // the empty partition (weight 0)
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "5,3,2,1,1"

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const {  // 1-based, zero-padded beyond the length
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }

  Partition conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// Orbit type of a point: multiplicities of its distinct coordinates.
using OrbitType = Partition;

// true iff mu dominates lam (lam <| mu). Prefix sums are compared with
// zero-padding beyond the shorter partition, which agrees with the min-length
// definition whenever the weights are equal; unequal weights are a caller bug
// and rejected.
bool dominates(const Partition& mu, const Partition& lam);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
// (1,...,1). With max_length, only those with at most that many parts.
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

// Chain lam = nu_0, nu_1, ..., nu_k = mu where each step moves a single box
// from a lower row j to a higher row i; every intermediate dominates its
// predecessor and is dominated by mu. Requires dominates(mu, lam). Each step
// picks the lexicographically earliest legal (i, j).
std::vector<Partition> dominance_chain(const Partition& lam, const Partition& mu);

OrbitType orbit_type(const std::vector<Rat>& point);

// The partition (k_1+1, ..., k_l+1, 1^{n-d-l}) of n built from the sorted
// exponents of m. Requires deg(m) + wt(m) <= n.
Partition mu_of_monomial(const Monomial& m, int n);

// All nu |- n that are NOT dominated by mu(m)^perp; every returned nu has at
// most d = deg(m) parts, which is asserted.
std::vector<Partition> admissible_partitions(int n, const Monomial& m, int d);

}  // namespace specht
