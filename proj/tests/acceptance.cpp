// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run via ctest or directly.

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "specht/errors.hpp"
#include "specht/isotypic.hpp"
#include "specht/reduction.hpp"
#include "specht/specht_ideal.hpp"

using namespace specht;

namespace {

const Field Q = Field::rationals();

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s  criterion %2d: %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str());
  for (const auto& note : c.notes) std::printf("      %s\n", note.c_str());
  if (!c.ok) ++failures;
}

std::string run_cli(const std::string& args) {
  const std::string command = std::string(SPECHT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::vector<std::vector<Rat>> all_points(long long p, int n) {
  std::vector<std::vector<Rat>> pts;
  std::vector<Rat> cur(n, Rat(0));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < n; ++i) {
      cur[i] = Rat(static_cast<long long>(rest % p));
      rest /= p;
    }
    pts.push_back(cur);
  }
  return pts;
}

// Inclusion check V_mu(F_p) subset V_lam(F_p) by exhausting points, with the
// membership predicate cross-checked against generator evaluation.
struct VarietyTable {
  std::vector<Partition> shapes;
  std::vector<std::vector<bool>> membership;  // [shape][point]
  bool cross_check_ok = true;

  VarietyTable(long long p, int n) {
    const Field field = Field::gf(p);
    const auto points = all_points(p, n);
    shapes = partitions_of(n);
    membership.resize(shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      const auto gens = generators_of_shape(field, shapes[s], n);
      membership[s].reserve(points.size());
      for (const auto& x : points) {
        const bool combinatorial = point_in_variety(x, shapes[s]);
        bool by_evaluation = true;
        for (const auto& [cb, g] : gens) {
          if (g.evaluate(x) != 0) {
            by_evaluation = false;
            break;
          }
        }
        if (combinatorial != by_evaluation) cross_check_ok = false;
        membership[s].push_back(combinatorial);
      }
    }
  }

  bool contained(std::size_t mu, std::size_t lam) const {
    for (std::size_t i = 0; i < membership[mu].size(); ++i) {
      if (membership[mu][i] && !membership[lam][i]) return false;
    }
    return true;
  }
};

// Independent route for the Prop 4.4 coefficient identity: iterate the
// product group of the J_i directly with raw polynomial operations.
void product_group(const std::vector<std::vector<int>>& sets, int n,
                   const std::function<void(const Permutation&)>& visit) {
  std::vector<std::vector<std::vector<int>>> arrangements;
  for (auto set : sets) {
    std::sort(set.begin(), set.end());
    std::vector<std::vector<int>> arr;
    do {
      arr.push_back(set);
    } while (std::next_permutation(set.begin(), set.end()));
    arrangements.push_back(std::move(arr));
  }
  std::vector<std::size_t> odo(sets.size(), 0);
  while (true) {
    std::vector<int> image(n);
    for (int i = 1; i <= n; ++i) image[i - 1] = i;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::vector<int> sorted = sets[s];
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
        image[sorted[pos] - 1] = arrangements[s][odo[s]][pos];
      }
    }
    visit(Permutation(image));
    std::size_t i = odo.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++odo[i] < arrangements[i].size()) {
        advanced = true;
        break;
      }
      odo[i] = 0;
    }
    if (!advanced) break;
  }
}

SymmetricSystem make_system(Field field, int n, const std::vector<std::string>& gens) {
  SymmetricSystem sys{field, n, {}};
  for (const auto& g : gens) sys.generators.push_back(Poly::parse(g, field, n));
  return sys;
}

}  // namespace

int main() {
  criterion(1, "mu --n 12 --monomial x2*x4^4*x5^2 prints 5,3,2,1,1", [](Checker& c) {
    c.require(run_cli("mu --n 12 --monomial \"x2*x4^4*x5^2\"") == "5,3,2,1,1\n",
              "CLI output differs from 5,3,2,1,1");
    c.require(mu_of_monomial(Monomial({{2, 1}, {4, 4}, {5, 2}}), 12) ==
                  Partition({5, 3, 2, 1, 1}),
              "library mu(m) differs");
  });

  criterion(2, "Specht polynomial of rows (4,2,6,1),(8,7,5),(3)", [](Checker& c) {
    const Tableau t(Partition({4, 3, 1}), {{4, 2, 6, 1}, {8, 7, 5}, {3}});
    const Poly expected = Poly::parse("x4 - x8", Q, 8) * Poly::parse("x4 - x3", Q, 8) *
                          Poly::parse("x8 - x3", Q, 8) * Poly::parse("x2 - x7", Q, 8) *
                          Poly::parse("x6 - x5", Q, 8);
    c.require(specht_polynomial(Q, t) == expected, "expanded polynomial differs");
  });

  criterion(3, "V_mu subset V_lam iff lam <| mu over F_3 points, n in {3,4,5}", [](Checker& c) {
    for (int n = 3; n <= 5; ++n) {
      const VarietyTable table(3, n);
      c.require(table.cross_check_ok,
                "membership test disagrees with generator evaluation at some point");
      for (std::size_t a = 0; a < table.shapes.size(); ++a) {
        for (std::size_t b = 0; b < table.shapes.size(); ++b) {
          const bool inclusion = table.contained(a, b);
          const bool dominance = dominates(table.shapes[a], table.shapes[b]);
          if (inclusion != dominance) {
            c.require(false, "n=" + std::to_string(n) + ": V_" + table.shapes[a].to_string() +
                                 " subset V_" + table.shapes[b].to_string() + " is " +
                                 (inclusion ? "true" : "false") + " but dominance is " +
                                 (dominance ? "true" : "false"));
          }
        }
      }
    }
    if (!c.ok) {
      c.note("analysis: orbit types needing more than 3 distinct values are unrealizable");
      c.note("over F_3, so V_(2,1,1,1)(F_3^5) and V_(1^5)(F_3^5) both exhaust the space;");
      c.note("the iff direction needs a witness of orbit type lam, i.e. p >= len(lam).");
      const VarietyTable f5(5, 5);
      bool corrected = f5.cross_check_ok;
      for (std::size_t a = 0; a < f5.shapes.size() && corrected; ++a) {
        for (std::size_t b = 0; b < f5.shapes.size() && corrected; ++b) {
          corrected = f5.contained(a, b) == dominates(f5.shapes[a], f5.shapes[b]);
        }
      }
      c.note(std::string("same check over F_5 (p >= n, every stratum inhabited): ") +
             (corrected ? "holds for every pair" : "still fails"));
    }
  });

  criterion(4, "dominance certificates verify for all pairs n <= 5 and an n = 6 spot set",
            [](Checker& c) {
              for (int n = 2; n <= 5; ++n) {
                for (const Partition& lam : partitions_of(n)) {
                  const auto gens = generators_of_shape(Q, lam, n);
                  for (const Partition& mu : partitions_of(n)) {
                    if (!dominates(mu, lam)) continue;
                    const Certificate cert = dominance_certificate(Q, gens[0].first, mu);
                    c.require(verify_certificate(cert),
                              lam.to_string() + " -> " + mu.to_string() + " fails");
                  }
                }
              }
              const std::vector<std::pair<std::string, std::string>> spots = {
                  {"1,1,1,1,1,1", "2,2,2"}, {"2,2,1,1", "4,2"},     {"1,1,1,1,1,1", "6"},
                  {"3,1,1,1", "4,2"},       {"2,2,2", "3,3"},       {"2,1,1,1,1", "3,3"},
              };
              for (const auto& [lam_s, mu_s] : spots) {
                const Partition lam = Partition::parse(lam_s);
                const Partition mu = Partition::parse(mu_s);
                const auto gens = generators_of_shape(Q, lam, 6);
                const Certificate cert = dominance_certificate(Q, gens[0].first, mu);
                c.require(verify_certificate(cert), lam_s + " -> " + mu_s + " fails at n=6");
              }
            });

  criterion(5, "Prop 4.4 coefficient identity over Q for the five stock polynomials",
            [](Checker& c) {
              struct Case {
                std::string poly;
                std::vector<std::pair<int, int>> m;
              };
              const std::vector<Case> cases = {
                  {"x1^2", {{1, 2}}},
                  {"x1^3", {{1, 3}}},
                  {"x1^2*x2", {{1, 2}, {2, 1}}},
                  {"x1*x2", {{1, 1}, {2, 1}}},
                  {"x1*x2*x3", {{1, 1}, {2, 1}, {3, 1}}},
              };
              for (const auto& kase : cases) {
                const Monomial m(kase.m);
                const int n = m.degree() + m.weight();  // minimal valid ambient
                const Poly p = Poly::parse(kase.poly, Q, n);

                // Fresh-variable sets straight from the relabeling convention;
                // these polynomials are already in normal form.
                std::vector<std::vector<int>> J;
                std::vector<std::vector<int>> I;
                Rat k_factorial = 1;
                int fresh = m.weight() + 1;
                {
                  int row = 1;
                  for (const auto& [v, e] : m.exponents()) {
                    (void)v;
                    std::vector<int> ji{row};
                    std::vector<int> ii;
                    for (int t = 0; t < e; ++t) {
                      ji.push_back(fresh);
                      ii.push_back(fresh);
                      ++fresh;
                    }
                    for (int t = 2; t <= e; ++t) k_factorial *= t;
                    J.push_back(ji);
                    I.push_back(ii);
                    ++row;
                  }
                }
                Poly delta_j = Poly::constant(Q, n, 1);
                for (const auto& ji : J) delta_j = delta_j * vandermonde(Q, n, ji);
                Poly q = p;
                for (const auto& ii : I) q = q * vandermonde(Q, n, ii);

                Poly r = Poly::zero(Q, n);
                product_group(J, n, [&](const Permutation& sigma) {
                  r = r + q.apply(sigma).scaled(sigma.sign());
                });
                c.require(r == delta_j.scaled(k_factorial),
                          kase.poly + ": unnormalized sum differs from k! * Delta(J)");

                // And the library's certificate itself verifies.
                c.require(verify_certificate(symmetric_certificate_char0(p, m), {p}),
                          kase.poly + ": char-0 certificate fails to verify");
              }
            });

  criterion(6, "Appendix A certificates over F_2 (x1^2) and F_3 (x1^3)", [](Checker& c) {
    const Poly p2 = Poly::parse("x1^2", Field::gf(2), 3);
    bool char0_rejected = false;
    try {
      symmetric_certificate_char0(p2, Monomial({{1, 2}}));
    } catch (const PreconditionError&) {
      char0_rejected = true;
    }
    c.require(char0_rejected, "char-0 route accepted 2! over F_2");
    c.require(verify_certificate(symmetric_certificate_general(p2, Monomial({{1, 2}})), {p2}),
              "x1^2 over F_2 fails");

    const Poly p3 = Poly::parse("x1^3", Field::gf(3), 4);
    c.require(verify_certificate(symmetric_certificate_general(p3, Monomial({{1, 3}})), {p3}),
              "x1^3 over F_3 fails");
  });

  criterion(7, "Thm 5.4 oracle equivalence on the fixture suite", [](Checker& c) {
    struct Fixture {
      long long p;
      int n;
      std::vector<std::string> gens;
    };
    const std::vector<Fixture> fixtures = {
        {5, 4, {"x1*x2 - 1"}},
        {3, 4, {"x1*x2 - 1"}},
        {2, 4, {"x1*x2 - 1"}},
        {5, 3, {"x1 - 1"}},
        {3, 2, {"x1"}},
        {3, 4, {"x1^2 - 1"}},
        {3, 6, {"x1*x2 - x3"}},
        {5, 5, {"x1 + x2 + 1"}},
        {3, 6, {"x1^2*x2 - 1"}},
        {3, 4, {"x1*x2", "x1 - x2"}},
        {2, 3, {"x1 - x2"}},
        {5, 6, {"x1*x2*x3 - 1"}},
        {3, 5, {"x1^2 + x2^2 - 2"}},
    };
    c.note("fixtures: " + std::to_string(fixtures.size()));
    for (const auto& fixture : fixtures) {
      const std::string label =
          "p=" + std::to_string(fixture.p) + " n=" + std::to_string(fixture.n);
      const SymmetricSystem sys = make_system(Field::gf(fixture.p), fixture.n, fixture.gens);
      const SolveResult reduced = solve_over_finite_field(sys);
      const auto oracle = brute_force_variety(sys);
      c.require(reduced.orbits == oracle, label + ": reduction differs from brute force");
      for (const auto& ld : leading_data(sys)) {
        const StrataReport report = empty_strata_report(oracle, ld.mu_perp, ld.m.degree());
        c.require(report.pass, label + ": solution found in a dominated stratum");
        c.require(report.max_distinct_coordinates <= ld.m.degree(),
                  label + ": more than d distinct coordinates");
      }
    }
    // The pinned fixture: exactly the orbits of (1,1,1,1) and (4,4,4,4).
    const SolveResult pinned =
        solve_over_finite_field(make_system(Field::gf(5), 4, {"x1*x2 - 1"}));
    c.require(pinned.orbits.size() == 2 &&
                  pinned.orbits[0].representative ==
                      std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)} &&
                  pinned.orbits[1].representative ==
                      std::vector<Rat>{Rat(4), Rat(4), Rat(4), Rat(4)},
              "x1*x2 - 1 over F_5 does not yield exactly (1,1,1,1), (4,4,4,4)");
  });

  criterion(8, "Prop 5.5: length > d implies dominated by mu(m)^perp, n <= 10", [](Checker& c) {
    for (int n = 2; n <= 10; ++n) {
      for (int d = 1; d < n; ++d) {
        for (const Partition& shape : partitions_of(d)) {
          if (d + shape.length() > n) continue;
          std::vector<std::pair<int, int>> exps;
          for (int i = 0; i < shape.length(); ++i) exps.emplace_back(i + 1, shape.parts()[i]);
          const Partition mu_perp = mu_of_monomial(Monomial(exps), n).conjugate();
          for (const Partition& lam : partitions_of(n)) {
            if (lam.length() > d && !dominates(mu_perp, lam)) {
              c.require(false, "n=" + std::to_string(n) + " shape=" + shape.to_string() +
                                   " lam=" + lam.to_string());
            }
          }
        }
      }
    }
  });

  criterion(9, "hook length formula: sum of s_lambda^2 = n! for n <= 10", [](Checker& c) {
    std::uint64_t factorial = 1;
    for (int n = 1; n <= 10; ++n) {
      factorial *= n;
      std::uint64_t sum = 0;
      for (const Partition& lam : partitions_of(n)) {
        const std::uint64_t dim = specht_dimension(lam);
        sum += dim * dim;
      }
      c.require(sum == factorial, "n=" + std::to_string(n));
    }
  });

  criterion(10, "partition count bound (n+1)^d for n <= 12, d <= 4", [](Checker& c) {
    for (int n = 1; n <= 12; ++n) {
      for (int d = 1; d <= 4; ++d) {
        std::uint64_t bound = 1;
        for (int i = 0; i < d; ++i) bound *= n + 1;
        c.require(partitions_of(n, d).size() <= bound,
                  "n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
