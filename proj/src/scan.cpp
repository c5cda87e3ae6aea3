#include "specht/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specht/errors.hpp"

namespace specht {

namespace {

// Flat term list for fast residue evaluation.
struct CompiledPoly {
  struct Term {
    long long coeff;
    std::vector<std::pair<int, int>> exps;  // (0-based var, exponent)
  };
  std::vector<Term> terms;
};

struct CompiledSystem {
  long long p = 0;
  int k = 0;
  int max_degree = 0;
  std::vector<CompiledPoly> polys;

  bool vanishes_at(const std::vector<long long>& point,
                   std::vector<std::vector<long long>>& pow_scratch) const {
    for (int v = 0; v < k; ++v) {
      auto& pw = pow_scratch[v];
      pw[0] = 1 % p;
      for (int e = 1; e <= max_degree; ++e) pw[e] = pw[e - 1] * point[v] % p;
    }
    for (const auto& poly : polys) {
      long long sum = 0;
      for (const auto& term : poly.terms) {
        long long t = term.coeff;
        for (const auto& [v, e] : term.exps) t = t * pow_scratch[v][e] % p;
        sum = (sum + t) % p;
      }
      if (sum % p != 0) return false;
    }
    return true;
  }
};

CompiledSystem compile(Field field, int k, const std::vector<Poly>& polys) {
  if (!field.is_prime_field()) throw PreconditionError("finite-field backend only");
  CompiledSystem sys;
  sys.p = field.characteristic();
  sys.k = k;
  for (const Poly& poly : polys) {
    if (poly.field() != field) throw PreconditionError("field mismatch");
    if (poly.ambient() != k) throw PreconditionError("ambient dimension mismatch");
    CompiledPoly cp;
    for (const auto& [m, c] : poly.terms()) {
      CompiledPoly::Term term;
      term.coeff = static_cast<long long>(numerator(c) % sys.p);
      for (const auto& [v, e] : m.exponents()) {
        term.exps.emplace_back(v - 1, e);
        sys.max_degree = std::max(sys.max_degree, e);
      }
      cp.terms.push_back(std::move(term));
    }
    sys.polys.push_back(std::move(cp));
  }
  return sys;
}

std::uint64_t checked_grid_size(long long p, int k, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("grid dimension must be >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / static_cast<std::uint64_t>(p)) {
      throw PreconditionError("budget exceeded: grid larger than " + std::to_string(budget) +
                              " points");
    }
    total *= static_cast<std::uint64_t>(p);
  }
  if (total > budget) {
    throw PreconditionError("budget exceeded: grid larger than " + std::to_string(budget) +
                            " points");
  }
  return total;
}

void decode_point(std::uint64_t index, long long p, int k, std::vector<long long>& point) {
  for (int v = 0; v < k; ++v) {
    point[v] = static_cast<long long>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
}

}  // namespace

std::vector<std::vector<long long>> zero_scan_serial(Field field, int k,
                                                     const std::vector<Poly>& polys,
                                                     const ScanOptions& opts) {
  const CompiledSystem sys = compile(field, k, polys);
  const std::uint64_t total = checked_grid_size(sys.p, k, opts.budget);

  std::vector<std::vector<long long>> hits;
  std::vector<long long> point(k);
  std::vector<std::vector<long long>> pow_scratch(k, std::vector<long long>(sys.max_degree + 1));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_point(idx, sys.p, k, point);
    if (sys.vanishes_at(point, pow_scratch)) hits.push_back(point);
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::vector<std::vector<long long>> zero_scan_parallel(Field field, int k,
                                                       const std::vector<Poly>& polys,
                                                       const ScanOptions& opts) {
  const CompiledSystem sys = compile(field, k, polys);
  const std::uint64_t total = checked_grid_size(sys.p, k, opts.budget);

  std::vector<std::vector<long long>> hits;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::vector<long long>> local;
    std::vector<long long> point(k);
    std::vector<std::vector<long long>> pow_scratch(k,
                                                    std::vector<long long>(sys.max_degree + 1));
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
      decode_point(static_cast<std::uint64_t>(idx), sys.p, k, point);
      if (sys.vanishes_at(point, pow_scratch)) local.push_back(point);
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  return hits;
#else
  return zero_scan_serial(field, k, polys, opts);
#endif
}

std::vector<std::vector<long long>> zero_scan(Field field, int k, const std::vector<Poly>& polys,
                                              const ScanOptions& opts) {
  const std::uint64_t threshold = 1 << 14;
  std::uint64_t total = 1;
  bool large = false;
  for (int i = 0; i < k && !large; ++i) {
    total *= static_cast<std::uint64_t>(field.characteristic());
    large = total >= threshold;
  }
  return large ? zero_scan_parallel(field, k, polys, opts)
               : zero_scan_serial(field, k, polys, opts);
}

}  // namespace specht
