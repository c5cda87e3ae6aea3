#include "specht/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "specht/errors.hpp"

namespace specht {

using json = nlohmann::json;

SymmetricSystem SymmetricSystem::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  }
  try {
    const Field field = Field::parse(j.at("field").get<std::string>());
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("n must be >= 1");
    SymmetricSystem sys{field, n, {}};
    for (const auto& g : j.at("generators")) {
      sys.generators.push_back(Poly::parse(g.get<std::string>(), field, n));
    }
    return sys;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  }
}

std::string SymmetricSystem::to_json(int indent) const {
  json j;
  j["n"] = n;
  j["field"] = field.to_string();
  j["generators"] = json::array();
  for (const Poly& g : generators) j["generators"].push_back(g.to_string());
  return j.dump(indent);
}

std::vector<LeadingDatum> leading_data(const SymmetricSystem& system) {
  std::vector<LeadingDatum> out;
  for (std::size_t i = 0; i < system.generators.size(); ++i) {
    const Poly& p = system.generators[i];
    if (p.is_zero()) continue;
    const int d = p.degree();
    const Poly pd = p.homogeneous_component(d);
    if (d + pd.weight() > system.n) continue;
    for (const auto& [m, c] : pd.terms()) {
      const Partition mu = mu_of_monomial(m, system.n);
      out.push_back({static_cast<int>(i), m, mu, mu.conjugate()});
    }
  }
  return out;
}

Poly restrict_to_orbit_type(const Poly& p, const Partition& nu) {
  if (nu.weight() != p.ambient()) throw PreconditionError("partition weight does not match ambient");
  std::vector<int> image(p.ambient());
  int var = 0;
  for (int b = 1; b <= nu.length(); ++b) {
    for (int r = 0; r < nu.parts()[b - 1]; ++r) image[var++] = b;
  }
  return p.substitute_variables(image, nu.length());
}

namespace {

// All maps f: support -> {1..k} with |f^-1(b)| <= nu_b; each yields one
// distinct restriction of some sigma Q.
void enumerate_assignments(const std::vector<int>& support, const Partition& nu,
                           std::vector<int>& capacity, std::vector<int>& choice, std::size_t pos,
                           const std::function<void(const std::vector<int>&)>& emit) {
  if (pos == support.size()) {
    emit(choice);
    return;
  }
  for (int b = 1; b <= nu.length(); ++b) {
    if (capacity[b - 1] == 0) continue;
    --capacity[b - 1];
    choice.push_back(b);
    enumerate_assignments(support, nu, capacity, choice, pos + 1, emit);
    choice.pop_back();
    ++capacity[b - 1];
  }
}

struct PolyOrder {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

}  // namespace

RestrictedSystem restricted_system(const SymmetricSystem& system, const Partition& nu) {
  if (nu.weight() != system.n) throw PreconditionError("partition weight does not match n");
  const int k = nu.length();
  std::set<Poly, PolyOrder> images;
  for (const Poly& q : system.generators) {
    const std::vector<int> support = q.support();
    std::vector<int> capacity = nu.parts();
    std::vector<int> choice;
    enumerate_assignments(support, nu, capacity, choice, 0, [&](const std::vector<int>& f) {
      std::vector<int> image(system.n, 1);
      for (std::size_t i = 0; i < support.size(); ++i) image[support[i] - 1] = f[i];
      images.insert(q.substitute_variables(image, k));
    });
  }
  return RestrictedSystem{nu, std::vector<Poly>(images.begin(), images.end())};
}

std::vector<Rat> expand_point(const std::vector<Rat>& x, const Partition& nu) {
  if (static_cast<int>(x.size()) != nu.length()) throw PreconditionError("point length mismatch");
  std::vector<Rat> y;
  y.reserve(nu.weight());
  for (int b = 0; b < nu.length(); ++b) {
    y.insert(y.end(), nu.parts()[b], x[b]);
  }
  return y;
}

bool field_value_less(Field field, const Rat& a, const Rat& b) {
  if (field.is_prime_field()) {
    return numerator(a) < numerator(b);  // residues 0..p-1
  }
  if (numerator(a) != numerator(b)) return numerator(a) < numerator(b);
  return denominator(a) < denominator(b);
}

SolutionOrbit canonical_orbit(Field field, const std::vector<Rat>& y) {
  std::vector<Rat> rep = y;
  std::sort(rep.begin(), rep.end(),
            [&](const Rat& a, const Rat& b) { return field_value_less(field, a, b); });
  Partition type = orbit_type(rep);
  return SolutionOrbit{std::move(rep), std::move(type)};
}

namespace {

struct OrbitOrder {
  Field field;
  bool operator()(const SolutionOrbit& a, const SolutionOrbit& b) const {
    return std::lexicographical_compare(
        a.representative.begin(), a.representative.end(), b.representative.begin(),
        b.representative.end(),
        [&](const Rat& x, const Rat& y) { return field_value_less(field, x, y); });
  }
};

LeadingDatum choose_leading_datum(const SymmetricSystem& system,
                                  const std::vector<LeadingDatum>& data,
                                  const std::optional<Monomial>& override_m) {
  if (data.empty()) {
    throw PreconditionError(
        "theorem not applicable: no generator satisfies deg(P) + wt(P_d) <= n");
  }
  if (override_m) {
    for (const auto& ld : data) {
      if (ld.m == *override_m) return ld;
    }
    throw PreconditionError("requested monomial is not a qualifying leading monomial");
  }
  const LeadingDatum* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& ld : data) {
    const std::size_t count = admissible_partitions(system.n, ld.m, ld.m.degree()).size();
    if (best == nullptr || count < best_count ||
        (count == best_count && grevlex_cmp(ld.m, best->m) < 0)) {
      best = &ld;
      best_count = count;
    }
  }
  return *best;
}

}  // namespace

SolveResult solve_over_finite_field(const SymmetricSystem& system, const SolveOptions& opts) {
  if (!system.field.is_prime_field()) throw PreconditionError("finite-field backend only");
  const long long p = system.field.characteristic();

  const LeadingDatum chosen = choose_leading_datum(system, leading_data(system), opts.monomial);
  SolveResult result{chosen.m,
                     chosen.mu,
                     chosen.mu_perp,
                     admissible_partitions(system.n, chosen.m, chosen.m.degree()),
                     {},
                     std::nullopt};

  ScanOptions scan_opts{opts.budget};
  std::set<SolutionOrbit, OrbitOrder> orbits(OrbitOrder{system.field});
  for (const Partition& nu : result.admissible) {
    const RestrictedSystem rs = restricted_system(system, nu);
    const auto points = opts.serial ? zero_scan_serial(system.field, nu.length(), rs.generators,
                                                       scan_opts)
                                    : zero_scan(system.field, nu.length(), rs.generators,
                                                scan_opts);
    for (const auto& pt : points) {
      std::vector<Rat> x(pt.size());
      for (std::size_t i = 0; i < pt.size(); ++i) x[i] = Rat(pt[i] % p);
      orbits.insert(canonical_orbit(system.field, expand_point(x, nu)));
    }
  }
  result.orbits.assign(orbits.begin(), orbits.end());
  return result;
}

std::vector<SolutionOrbit> brute_force_variety(const SymmetricSystem& system,
                                               const SolveOptions& opts) {
  if (!system.field.is_prime_field()) throw PreconditionError("finite-field backend only");
  const long long p = system.field.characteristic();

  // All distinct relabelings of the generators: the trivial orbit type.
  const Partition ones(std::vector<int>(system.n, 1));
  const RestrictedSystem images = restricted_system(system, ones);

  ScanOptions scan_opts{opts.budget};
  const auto points = opts.serial
                          ? zero_scan_serial(system.field, system.n, images.generators, scan_opts)
                          : zero_scan(system.field, system.n, images.generators, scan_opts);

  std::set<SolutionOrbit, OrbitOrder> orbits(OrbitOrder{system.field});
  for (const auto& pt : points) {
    std::vector<Rat> x(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) x[i] = Rat(pt[i] % p);
    orbits.insert(canonical_orbit(system.field, x));
  }
  return std::vector<SolutionOrbit>(orbits.begin(), orbits.end());
}

StrataReport empty_strata_report(const std::vector<SolutionOrbit>& solutions,
                                 const Partition& mu_perp, int d) {
  StrataReport report{true, std::nullopt, 0, d};
  for (const SolutionOrbit& orbit : solutions) {
    report.max_distinct_coordinates =
        std::max(report.max_distinct_coordinates, orbit.type.length());
    if (report.pass && dominates(mu_perp, orbit.type)) {
      report.pass = false;
      report.offender = orbit;
    }
  }
  return report;
}

std::string SolveResult::to_json(int indent) const {
  json j;
  j["monomial"] = m.to_string();
  j["mu"] = mu.to_string();
  j["mu_perp"] = mu_perp.to_string();
  j["admissible"] = json::array();
  for (const Partition& nu : admissible) j["admissible"].push_back(nu.to_string());
  j["orbits"] = json::array();
  for (const SolutionOrbit& orbit : orbits) {
    json pt = json::array();
    for (const Rat& v : orbit.representative) {
      pt.push_back(static_cast<long long>(numerator(v)));
    }
    j["orbits"].push_back({{"point", pt}, {"type", orbit.type.to_string()}});
  }
  if (verified_against_bruteforce) {
    j["verified_against_bruteforce"] = *verified_against_bruteforce;
  }
  return j.dump(indent);
}

}  // namespace specht
