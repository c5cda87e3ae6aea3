// Command-line surface for the Specht-ideal toolkit.
//
// Exit codes: 0 success / certificate verified; 1 verification failed;
// 2 parse error; 3 precondition violated.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specht/errors.hpp"
#include "specht/isotypic.hpp"
#include "specht/partition.hpp"
#include "specht/polynomial.hpp"
#include "specht/reduction.hpp"
#include "specht/specht_ideal.hpp"

namespace {

using namespace specht;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kInternal = 4;

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

Monomial parse_monomial(const std::string& text, int n) {
  const Poly p = Poly::parse(text, Field::rationals(), n);
  if (p.term_count() != 1 || p.leading_coefficient() != 1) {
    throw ParseError("expected a single monomial with coefficient 1: '" + text + "'");
  }
  return p.leading_monomial();
}

std::vector<Rat> parse_point(const std::string& text, Field field) {
  std::vector<Rat> point;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      point.push_back(field.normalize(Rat(tok)));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + tok + "'");
    }
  }
  if (point.empty()) throw ParseError("empty point");
  return point;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string maybe_pretty(const std::string& compact_json, bool pretty) {
  if (!pretty) return compact_json;
  return nlohmann::json::parse(compact_json).dump(2);
}

int emit_certificate(const Certificate& cert, const std::vector<Poly>& system, bool pretty) {
  const bool ok = verify_certificate(cert, system);
  std::cout << maybe_pretty(cert.to_json(), pretty) << "\n";
  if (!ok) {
    std::cerr << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht polynomials, symmetric ideals, and orbit-type reduction"};
  app.require_subcommand(1);

  std::string field_spec = "q";
  bool pretty = false;
  app.add_option("--field", field_spec, "coefficient field: q or gf:P")->capture_default_str();
  app.add_flag("--pretty", pretty, "indent JSON output");

  // dominance LHS RHS
  auto* cmd_dom = app.add_subcommand("dominance", "compare two partitions in dominance order");
  std::string dom_lhs, dom_rhs;
  cmd_dom->add_option("lhs", dom_lhs)->required();
  cmd_dom->add_option("rhs", dom_rhs)->required();

  // conjugate P
  auto* cmd_conj = app.add_subcommand("conjugate", "dual partition");
  std::string conj_arg;
  cmd_conj->add_option("partition", conj_arg)->required();

  // mu --n N --monomial M
  auto* cmd_mu = app.add_subcommand("mu", "the partition mu(m) of a monomial");
  int mu_n = 0;
  std::string mu_monomial;
  cmd_mu->add_option("--n", mu_n)->required();
  cmd_mu->add_option("--monomial", mu_monomial)->required();

  // specht-gen SHAPE --n N
  auto* cmd_gen = app.add_subcommand("specht-gen", "canonical Specht generators of a shape");
  std::string gen_shape;
  int gen_n = 0;
  cmd_gen->add_option("shape", gen_shape)->required();
  cmd_gen->add_option("--n", gen_n)->required();

  // membership --point X --shape P
  auto* cmd_member = app.add_subcommand("membership", "test a point against a Specht variety");
  std::string member_point, member_shape;
  cmd_member->add_option("--point", member_point)->required();
  cmd_member->add_option("--shape", member_shape)->required();

  // certificate {dominance|sym0|symgen}
  auto* cmd_cert = app.add_subcommand("certificate", "construct and verify a certificate");
  cmd_cert->require_subcommand(1);
  auto* cert_dom = cmd_cert->add_subcommand("dominance", "shape-lambda generator in I^spe_mu");
  std::string certdom_shape, certdom_to, certdom_columns;
  int certdom_n = 0;
  cert_dom->add_option("--shape", certdom_shape)->required();
  cert_dom->add_option("--to", certdom_to)->required();
  cert_dom->add_option("--n", certdom_n)->required();
  cert_dom->add_option("--columns", certdom_columns,
                       "explicit blocks, e.g. '1,4/2,3' (default: first canonical)");

  std::string cert_poly, cert_monomial;
  int cert_n = 0;
  auto* cert_sym0 = cmd_cert->add_subcommand("sym0", "characteristic-0 construction");
  auto* cert_symgen = cmd_cert->add_subcommand("symgen", "general recursive construction");
  for (auto* sub : {cert_sym0, cert_symgen}) {
    sub->add_option("--poly", cert_poly)->required();
    sub->add_option("--n", cert_n)->required();
    sub->add_option("--monomial", cert_monomial, "default: grevlex-leading monomial of P_d");
  }

  // solve INPUT
  auto* cmd_solve = app.add_subcommand("solve", "orbit-type reduction over a prime field");
  std::string solve_input;
  bool solve_verify = false, solve_serial = false;
  std::uint64_t budget = 10'000'000;
  cmd_solve->add_option("input", solve_input, "system JSON file, or - for stdin")->required();
  cmd_solve->add_flag("--verify", solve_verify, "cross-check against the brute-force oracle");
  cmd_solve->add_flag("--serial", solve_serial, "force the serial scan kernel");
  cmd_solve->add_option("--budget", budget, "max brute-force evaluations")
      ->envname("SPECHT_BUDGET");

  // isotypic --n N --monomial M
  auto* cmd_iso = app.add_subcommand("isotypic", "killed/surviving isotypic labels");
  int iso_n = 0;
  std::string iso_monomial;
  cmd_iso->add_option("--n", iso_n)->required();
  cmd_iso->add_option("--monomial", iso_monomial)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  return run_guarded([&]() -> int {
    const Field field = Field::parse(field_spec);

    if (*cmd_dom) {
      const Partition lhs = Partition::parse(dom_lhs);
      const Partition rhs = Partition::parse(dom_rhs);
      if (dominates(lhs, rhs)) {
        std::cout << "dominates\n";
      } else if (dominates(rhs, lhs)) {
        std::cout << "dominated-by\n";
      } else {
        std::cout << "incomparable\n";
      }
      return kOk;
    }

    if (*cmd_conj) {
      std::cout << Partition::parse(conj_arg).conjugate().to_string() << "\n";
      return kOk;
    }

    if (*cmd_mu) {
      const Monomial m = parse_monomial(mu_monomial, mu_n);
      std::cout << mu_of_monomial(m, mu_n).to_string() << "\n";
      return kOk;
    }

    if (*cmd_gen) {
      const Partition shape = Partition::parse(gen_shape);
      for (const auto& [cb, poly] : generators_of_shape(field, shape, gen_n)) {
        std::cout << poly.to_string() << "\n";
      }
      return kOk;
    }

    if (*cmd_member) {
      const Partition shape = Partition::parse(member_shape);
      const std::vector<Rat> point = parse_point(member_point, field);
      std::cout << (point_in_variety(point, shape) ? "member\n" : "non-member\n");
      return kOk;
    }

    if (*cert_dom) {
      const Partition shape = Partition::parse(certdom_shape);
      const Partition to = Partition::parse(certdom_to);
      ColumnBlocks columns{};
      if (certdom_columns.empty()) {
        const auto gens = generators_of_shape(field, shape, certdom_n);
        columns = gens.front().first;
      } else {
        std::vector<std::vector<int>> blocks;
        std::stringstream ss(certdom_columns);
        std::string block;
        while (std::getline(ss, block, '/')) {
          std::vector<int> ids;
          std::stringstream bs(block);
          std::string tok;
          while (std::getline(bs, tok, ',')) ids.push_back(std::stoi(tok));
          blocks.push_back(std::move(ids));
        }
        columns = ColumnBlocks::canonical(std::move(blocks));
        if (columns.shape() != shape) throw PreconditionError("columns do not have the given shape");
      }
      return emit_certificate(dominance_certificate(field, columns, to), {}, pretty);
    }

    if (*cert_sym0 || *cert_symgen) {
      const Poly p = Poly::parse(cert_poly, field, cert_n);
      if (p.is_zero()) throw PreconditionError("zero polynomial");
      Monomial m = cert_monomial.empty()
                       ? p.homogeneous_component(p.degree()).leading_monomial()
                       : parse_monomial(cert_monomial, cert_n);
      const Certificate cert = *cert_sym0 ? symmetric_certificate_char0(p, m)
                                          : symmetric_certificate_general(p, m);
      return emit_certificate(cert, {p}, pretty);
    }

    if (*cmd_solve) {
      const SymmetricSystem system = SymmetricSystem::from_json(read_input(solve_input));
      SolveOptions opts;
      opts.budget = budget;
      opts.serial = solve_serial;
      SolveResult result = solve_over_finite_field(system, opts);
      bool mismatch = false;
      if (solve_verify) {
        const auto oracle = brute_force_variety(system, opts);
        mismatch = !(oracle == result.orbits);
        result.verified_against_bruteforce = !mismatch;
      }
      std::cout << maybe_pretty(result.to_json(), pretty) << "\n";
      if (mismatch) {
        std::cerr << "verification failed: reduction disagrees with brute force\n";
        return kVerificationFailed;
      }
      return kOk;
    }

    if (*cmd_iso) {
      const Monomial m = parse_monomial(iso_monomial, iso_n);
      const IsotypicReport report = pruning_report(iso_n, m);
      std::cout << maybe_pretty(report.to_json(), pretty) << "\n";
      return kOk;
    }

    return kInternal;
  });
}
