#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/partition.hpp"
#include "specht/polynomial.hpp"
#include "specht/scan.hpp"

namespace specht {

// Generators Q_1..Q_l of the symmetric ideal <sigma Q_i : sigma in S_n>.
struct SymmetricSystem {
  Field field;
  int n;
  std::vector<Poly> generators;

  // {"n": int, "field": "q"|"gf:P", "generators": ["...", ...]}
  static SymmetricSystem from_json(const std::string& text);
  std::string to_json(int indent = -1) const;
};

// A qualifying leading monomial: generator index, m in Mon(P_d) with
// deg(P) + wt(P_d) <= n, and the associated partitions.
struct LeadingDatum {
  int generator;
  Monomial m;
  Partition mu;
  Partition mu_perp;
};

std::vector<LeadingDatum> leading_data(const SymmetricSystem& system);

// P(Z_b(1), ..., Z_b(n)) where b maps X_j to the block of consecutive index
// ranges of sizes nu_1, nu_2, ...; the result lives in len(nu) variables.
Poly restrict_to_orbit_type(const Poly& p, const Partition& nu);

struct RestrictedSystem {
  Partition nu;
  std::vector<Poly> generators;  // deduplicated, sorted
};

// All distinct restrictions of the sigma Q_i, enumerated via
// capacity-constrained assignments of each generator's support to blocks --
// never via the n! permutations.
RestrictedSystem restricted_system(const SymmetricSystem& system, const Partition& nu);

// The point with x_b repeated nu_b times, in block order.
std::vector<Rat> expand_point(const std::vector<Rat>& x, const Partition& nu);

// Canonical representative of an S_n-orbit: coordinates sorted by a fixed
// total order on field elements (residue value over F_p; numerator then
// denominator over Q).
struct SolutionOrbit {
  std::vector<Rat> representative;
  Partition type;

  bool operator==(const SolutionOrbit& o) const { return representative == o.representative; }
};

bool field_value_less(Field field, const Rat& a, const Rat& b);
SolutionOrbit canonical_orbit(Field field, const std::vector<Rat>& y);

struct SolveOptions {
  std::uint64_t budget = 10'000'000;
  bool serial = false;                 // force the serial scan kernel
  std::optional<Monomial> monomial;    // override the automatic choice
};

struct SolveResult {
  Monomial m;
  Partition mu;
  Partition mu_perp;
  std::vector<Partition> admissible;
  std::vector<SolutionOrbit> orbits;            // sorted by representative
  std::optional<bool> verified_against_bruteforce;

  std::string to_json(int indent = -1) const;
};

// V(I)/S_n via the orbit-type reduction: for each admissible nu, scan
// F_p^{len(nu)} for common zeros of the restricted system, expand and
// canonicalize. When several monomials qualify, picks the one minimizing the
// number of admissible partitions (ties: grevlex-smallest).
SolveResult solve_over_finite_field(const SymmetricSystem& system, const SolveOptions& opts = {});

// Exhaustive oracle: scans all of F_p^n against every distinct sigma Q_i.
std::vector<SolutionOrbit> brute_force_variety(const SymmetricSystem& system,
                                               const SolveOptions& opts = {});

// Checks that no solution orbit has type dominated by mu_perp and reports the
// largest distinct-coordinate count against the dimension bound d.
struct StrataReport {
  bool pass;
  std::optional<SolutionOrbit> offender;
  int max_distinct_coordinates;
  int dimension_bound;
};

StrataReport empty_strata_report(const std::vector<SolutionOrbit>& solutions,
                                 const Partition& mu_perp, int d);

}  // namespace specht
