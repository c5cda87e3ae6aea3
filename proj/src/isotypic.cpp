#include "specht/isotypic.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "specht/errors.hpp"

namespace specht {

using json = nlohmann::json;

int activation_threshold(const Monomial& m) {
  return m.degree() + m.weight();
}

std::vector<Partition> killed_partitions(int n, const Monomial& m) {
  if (m.degree() < 1) throw PreconditionError("degenerate constant monomial");
  const int threshold = activation_threshold(m);
  if (n < threshold) {
    throw PreconditionError("support condition fails at n = " + std::to_string(n) +
                            "; activates at n >= " + std::to_string(threshold));
  }
  const Partition mu_perp = mu_of_monomial(m, n).conjugate();
  std::vector<Partition> out;
  for (const Partition& lam : partitions_of(n)) {
    if (dominates(mu_perp, lam)) out.push_back(lam);
  }
  return out;
}

std::uint64_t specht_dimension(const Partition& lam) {
  const Partition dual = lam.conjugate();
  const int n = lam.weight();
  Int factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  Int hooks = 1;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      hooks *= lam.part(i) - j + dual.part(j) - i + 1;
    }
  }
  const Int dim = factorial / hooks;
  if (dim * hooks != factorial) throw std::logic_error("hook product does not divide n!");
  return static_cast<std::uint64_t>(dim);
}

IsotypicReport pruning_report(int n, const Monomial& m) {
  const std::vector<Partition> killed = killed_partitions(n, m);
  const int d = m.degree();

  IsotypicReport report{n, d, m, activation_threshold(m), killed, {}, {}, 0, 0};
  for (const Partition& lam : partitions_of(n)) {
    const std::uint64_t dim = specht_dimension(lam);
    report.dimensions.emplace_back(lam, dim);
    const bool is_killed =
        std::find(killed.begin(), killed.end(), lam) != killed.end();
    if (is_killed) {
      report.killed_square_sum += dim * dim;
    } else {
      report.surviving.push_back(lam);
      report.surviving_square_sum += dim * dim;
      if (lam.length() > d) throw std::logic_error("surviving label longer than deg(m)");
    }
  }
  return report;
}

std::string IsotypicReport::to_json(int indent) const {
  json j;
  j["n"] = n;
  j["d"] = d;
  j["monomial"] = m.to_string();
  j["activation_threshold"] = activation_threshold;
  j["killed"] = json::array();
  for (const Partition& lam : killed) j["killed"].push_back(lam.to_string());
  j["surviving"] = json::array();
  for (const Partition& lam : surviving) j["surviving"].push_back(lam.to_string());
  j["dimensions"] = json::object();
  for (const auto& [lam, dim] : dimensions) j["dimensions"][lam.to_string()] = dim;
  j["killed_square_sum"] = killed_square_sum;
  j["surviving_square_sum"] = surviving_square_sum;
  const double total = static_cast<double>(killed_square_sum + surviving_square_sum);
  j["eliminated_fraction"] = total == 0 ? 0.0 : static_cast<double>(killed_square_sum) / total;
  return j.dump(indent);
}

}  // namespace specht
