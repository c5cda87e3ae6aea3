#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

// Label-level isotypic pruning for SOS block reduction: which Specht-module
// labels a symmetric ideal with leading monomial m provably contains (killed)
// and which can still appear in the quotient (surviving), with their
// dimensions s_lambda.
struct IsotypicReport {
  int n;
  int d;  // deg(m)
  Monomial m;
  int activation_threshold;  // least ambient size at which deg + wt <= n holds
  std::vector<Partition> killed;
  std::vector<Partition> surviving;
  std::vector<std::pair<Partition, std::uint64_t>> dimensions;  // all lambda |- n
  std::uint64_t killed_square_sum;
  std::uint64_t surviving_square_sum;

  std::string to_json(int indent = -1) const;
};

// The least n at which the support condition deg(m) + wt(m) <= n activates.
int activation_threshold(const Monomial& m);

// All lambda |- n with lambda <| mu(m)^perp. Requires deg(m) >= 1 and
// deg(m) + wt(m) <= n.
std::vector<Partition> killed_partitions(int n, const Monomial& m);

// dim of the Specht module S^lambda via the hook length formula.
std::uint64_t specht_dimension(const Partition& lam);

IsotypicReport pruning_report(int n, const Monomial& m);

}  // namespace specht
