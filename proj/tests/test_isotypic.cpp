#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "specht/errors.hpp"
#include "specht/isotypic.hpp"

using namespace specht;

namespace {

std::set<std::string> names(const std::vector<Partition>& parts) {
  std::set<std::string> out;
  for (const Partition& p : parts) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("killed_partitions") {
  CHECK(names(killed_partitions(4, Monomial({{1, 1}, {2, 1}}))) ==
        std::set<std::string>{"2,2", "2,1,1", "1,1,1,1"});
  CHECK(names(killed_partitions(3, Monomial({{1, 1}}))) ==
        std::set<std::string>{"2,1", "1,1,1"});
  CHECK_THROWS_AS(killed_partitions(3, Monomial({{1, 3}})), PreconditionError);
  CHECK_THROWS_AS(killed_partitions(3, Monomial::one()), PreconditionError);
}

TEST_CASE("killed and surviving split all partitions; (n) always survives") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      for (const Partition& shape : partitions_of(d)) {
        if (d + shape.length() > n) continue;
        std::vector<std::pair<int, int>> exps;
        for (int i = 0; i < shape.length(); ++i) exps.emplace_back(i + 1, shape.parts()[i]);
        const Monomial m(exps);
        const IsotypicReport report = pruning_report(n, m);
        CHECK(report.killed.size() + report.surviving.size() == partitions_of(n).size());
        std::set<std::string> all = names(report.killed);
        for (const Partition& lam : report.surviving) CHECK(all.insert(lam.to_string()).second);
        CHECK(names(report.surviving).count(Partition(std::vector<int>{n}).to_string()) == 1);
        for (const Partition& lam : report.surviving) CHECK(lam.length() <= d);
      }
    }
  }
}

TEST_CASE("specht_dimension") {
  CHECK(specht_dimension(Partition({5})) == 1);
  CHECK(specht_dimension(Partition({1, 1, 1, 1})) == 1);
  CHECK(specht_dimension(Partition({2, 1})) == 2);
  CHECK(specht_dimension(Partition({3, 1})) == 3);
  CHECK(specht_dimension(Partition({2, 2})) == 2);
  CHECK(specht_dimension(Partition({3, 2})) == 5);
  CHECK(specht_dimension(Partition({4, 4})) == 14);
}

TEST_CASE("sum of squared dimensions is n!") {
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 10; ++n) {
    factorial *= n;
    std::uint64_t sum = 0;
    for (const Partition& lam : partitions_of(n)) {
      const std::uint64_t dim = specht_dimension(lam);
      sum += dim * dim;
    }
    CHECK(sum == factorial);
  }
}

TEST_CASE("pruning report for the n=4, x1*x2 example") {
  const IsotypicReport report = pruning_report(4, Monomial({{1, 1}, {2, 1}}));
  CHECK(report.n == 4);
  CHECK(report.d == 2);
  CHECK(report.activation_threshold == 4);
  CHECK(names(report.surviving) == std::set<std::string>{"4", "3,1"});
  CHECK(report.surviving_square_sum == 10);
  CHECK(report.killed_square_sum == 14);

  const std::string j = report.to_json();
  CHECK(j.find("\"surviving_square_sum\":10") != std::string::npos);
  CHECK(j.find("\"activation_threshold\":4") != std::string::npos);
}

TEST_CASE("activation threshold is reported when n is too small") {
  CHECK(activation_threshold(Monomial({{1, 3}})) == 4);
  try {
    pruning_report(3, Monomial({{1, 3}}));
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("n >= 4") != std::string::npos);
  }
  // Constant monomials are degenerate.
  CHECK_THROWS_AS(pruning_report(4, Monomial::one()), PreconditionError);
}
