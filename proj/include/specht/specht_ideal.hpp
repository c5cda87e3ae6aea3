#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specht/partition.hpp"
#include "specht/polynomial.hpp"

namespace specht {

// Canonical Specht generator: disjoint index blocks (the columns of a
// tableau). The Specht polynomial of a tableau depends only on its column
// contents up to sign, so generators of a shape are enumerated by canonical
// blocks: each block ascending, blocks ordered by size descending then by
// minimum element.
struct ColumnBlocks {
  std::vector<std::vector<int>> blocks;

  // Sorts into canonical form; rejects overlapping blocks.
  static ColumnBlocks canonical(std::vector<std::vector<int>> raw);

  int element_count() const;
  bool covers(int n) const;  // blocks partition {1..n}
  Partition column_sizes() const;
  Partition shape() const { return column_sizes().conjugate(); }

  bool operator==(const ColumnBlocks& o) const { return blocks == o.blocks; }
  bool operator<(const ColumnBlocks& o) const { return blocks < o.blocks; }
};

// Product of the blocks' Vandermonde polynomials (ascending order inside each
// block).
Poly blocks_polynomial(Field field, int n, const ColumnBlocks& cb);

struct SpechtGen {
  ColumnBlocks columns;
  bool operator==(const SpechtGen& o) const { return columns == o.columns; }
};

// sigma applied to the index-th polynomial of an external generator list.
struct SymGen {
  Permutation perm;
  int index = 0;
  bool operator==(const SymGen& o) const { return perm == o.perm && index == o.index; }
};

using GeneratorRef = std::variant<SpechtGen, SymGen>;

struct CertificateEntry {
  Poly cofactor;
  GeneratorRef generator;
};

// Formal combination sum(cofactor * generator) = target, checkable by exact
// expansion.
struct Certificate {
  Field field;
  int n;
  Poly target;
  std::vector<CertificateEntry> entries;

  std::string to_json() const;
  static Certificate from_json(const std::string& text);
};

Poly resolve_generator(const GeneratorRef& gen, Field field, int n,
                       const std::vector<Poly>& system);

// Expands the combination and compares with the target, exactly.
bool verify_certificate(const Certificate& cert, const std::vector<Poly>& system = {});

// One generator per canonical ColumnBlocks with column sizes lambda^perp;
// every Specht polynomial of shape lambda is, up to sign, one of these.
std::vector<std::pair<ColumnBlocks, Poly>> generators_of_shape(Field field, const Partition& lam,
                                                               int n);

// x in V_mu iff the orbit type of x is NOT dominated by mu; purely
// combinatorial, no polynomial evaluation.
bool point_in_variety(const std::vector<Rat>& x, const Partition& mu);

// Certificate for Delta(A)Delta(B) in terms of the generators
// Delta(S1)Delta(S2), |S1| = |A|-1, |S2| = |B|+1, S1 u S2 = A u B.
// Requires |A| - |B| >= 2 and A, B disjoint.
Certificate dominance_step_certificate(Field field, int n, const std::vector<int>& a_block,
                                       const std::vector<int>& b_block);

// Expresses the shape-lambda generator `columns` as a combination of shape-mu
// generators, composing single box-move steps along a dominance chain.
// Requires lambda <| mu.
Certificate dominance_certificate(Field field, const ColumnBlocks& columns, const Partition& mu);

// Characteristic-0 style certificate for the Specht polynomial
// Delta(J_1)...Delta(J_l) of shape mu(m)^perp as a combination of the sigma P.
// Requires m in Mon(P_d), deg(P) + wt(P_d) <= n, and k_1!...k_l! invertible.
Certificate symmetric_certificate_char0(const Poly& p, const Monomial& m, int gen_index = 0);

// Recursive certificate valid over any field (no factorial inversions).
Certificate symmetric_certificate_general(const Poly& p, const Monomial& m, int gen_index = 0);

}  // namespace specht
