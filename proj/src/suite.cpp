#include "apery/suite.hpp"

#include <functional>

#include "apery/coefficients.hpp"
#include "apery/detail/parallel.hpp"

namespace apery {

namespace {

template <typename Fn>
CongruenceReport build_report(std::string claim, ClaimClass cls,
                              std::string grid, std::size_t count, int threads,
                              Fn&& fn) {
  CongruenceReport report;
  report.claim = std::move(claim);
  report.claim_class = cls;
  report.grid = std::move(grid);
  report.cells.resize(count);
  detail::parallel_for(count, threads,
                       [&](std::size_t i) { report.cells[i] = fn(i); });
  return report;
}

CongruenceReport theorem12_battery(std::uint64_t seed, int threads) {
  const FamilySpec fam = *named_family("apery-A");
  const auto indices = seeded_multi_indices(seed, 20, 4, -4, 4);
  struct Cell {
    MultiIndex n;
    std::int64_t p;
    int r;
  };
  std::vector<Cell> cells;
  for (std::int64_t p : {5, 7})
    for (int r : {1, 2})
      for (const auto& n : indices) cells.push_back({n, p, r});
  return build_report(
      "theorem-1.2", ClaimClass::theorem,
      "lambda=(2,2) alpha=1, p in {5,7}, r in {1,2}, 20 seeded n in [-4,4]^4, "
      "modulus p^(3r)",
      cells.size(), threads, [&](std::size_t i) {
        return verify_supercongruence(fam, cells[i].n, cells[i].p, cells[i].r, 3);
      });
}

CongruenceReport theorem32b_battery(std::uint64_t seed, int threads) {
  const Partition lambda({2, 1});
  const auto indices = seeded_multi_indices(seed + 1, 10, 3, -3, 3);
  struct Cell {
    std::int64_t alpha;
    MultiIndex n;
    std::int64_t p;
    int r;
  };
  std::vector<Cell> cells;
  for (std::int64_t alpha : {1, -1})
    for (std::int64_t p : {5, 7})
      for (int r : {1, 2})
        for (const auto& n : indices) cells.push_back({alpha, n, p, r});
  return build_report(
      "theorem-3.2b-(2,1)", ClaimClass::theorem,
      "lambda=(2,1) alpha=±1, p in {5,7}, r in {1,2}, 10 seeded n in [-3,3]^3, "
      "modulus p^(3r)",
      cells.size(), threads, [&](std::size_t i) {
        return verify_supercongruence({lambda, cells[i].alpha}, cells[i].n,
                                      cells[i].p, cells[i].r, 3);
      });
}

CongruenceReport theorem32a_battery(std::uint64_t seed, int threads) {
  struct Cell {
    Partition lambda;
    std::int64_t alpha;
    MultiIndex n;
    std::int64_t p;
    int r;
  };
  std::vector<Cell> cells;
  const auto signed_indices = seeded_multi_indices(seed + 2, 10, 4, -3, 3);
  const auto franel_indices = seeded_multi_indices(seed + 3, 10, 3, 0, 4);
  const auto yz_indices = seeded_multi_indices(seed + 4, 10, 4, 0, 4);
  for (std::int64_t alpha : {1, -1}) {
    for (std::int64_t p : {2, 3, 5}) {
      if (p == 2 && alpha != 1) continue;  // epsilon = 1 only at p = 2
      for (int r : {1, 2}) {
        for (const auto& n : signed_indices)
          cells.push_back({Partition({3, 1}), alpha, n, p, r});
        for (const auto& n : franel_indices)
          cells.push_back({Partition({1, 1, 1}), alpha, n, p, r});
        for (const auto& n : yz_indices)
          cells.push_back({Partition({1, 1, 1, 1}), alpha, n, p, r});
      }
    }
  }
  return build_report(
      "theorem-3.2a", ClaimClass::theorem,
      "lambda in {(3,1),(1,1,1),(1,1,1,1)}, alpha=±1 (p=2 only for alpha=1), "
      "p in {2,3,5}, r in {1,2}, seeded n, modulus p^(2r)",
      cells.size(), threads, [&](std::size_t i) {
        return verify_supercongruence({cells[i].lambda, cells[i].alpha},
                                      cells[i].n, cells[i].p, cells[i].r, 2);
      });
}

CongruenceReport eq29_battery(std::uint64_t seed, int threads) {
  struct Cell {
    Partition lambda;
    std::int64_t alpha;
    MultiIndex n;
    std::int64_t p;
    int r;
  };
  std::vector<Cell> cells;
  const auto franel_indices = seeded_multi_indices(seed + 5, 10, 3, 0, 4);
  const auto yz_indices = seeded_multi_indices(seed + 6, 10, 4, 0, 4);
  for (std::int64_t alpha : {1, -1})
    for (std::int64_t p : {5, 7})
      for (int r : {1, 2}) {
        for (const auto& n : franel_indices)
          cells.push_back({Partition({1, 1, 1}), alpha, n, p, r});
        for (const auto& n : yz_indices)
          cells.push_back({Partition({1, 1, 1, 1}), alpha, n, p, r});
      }
  return build_report(
      "franel-yang-zudilin-p3r", ClaimClass::theorem,
      "lambda all-ones d in {3,4}, alpha=±1, p in {5,7}, r in {1,2}, seeded "
      "n in [0,4]^d, modulus p^(3r)",
      cells.size(), threads, [&](std::size_t i) {
        return verify_supercongruence({cells[i].lambda, cells[i].alpha},
                                      cells[i].n, cells[i].p, cells[i].r, 3);
      });
}

CongruenceReport jacobsthal_battery(std::uint64_t seed, int threads) {
  SplitMix64 rng(seed + 7);
  struct Cell {
    std::int64_t a, b, p;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < 200; ++i) {
    std::int64_t a = rng.in_range(-30, 30);
    std::int64_t b = rng.in_range(-30, 30);
    for (std::int64_t p : {2, 3, 5, 7, 11}) cells.push_back({a, b, p});
  }
  return build_report(
      "lemma-5.1-jacobsthal", ClaimClass::theorem,
      "200 seeded pairs (a,b) in [-30,30]^2, p in {2,3,5,7,11}", cells.size(),
      threads, [&](std::size_t i) {
        return verify_jacobsthal(cells[i].a, cells[i].b, cells[i].p);
      });
}

CongruenceReport powersum_battery(int threads) {
  struct Cell {
    std::int64_t p;
    int r;
    int eps;
  };
  std::vector<Cell> cells;
  for (std::int64_t p : {5, 7, 11, 13})
    for (int r = 0; r <= 3; ++r)
      for (int eps : {1, -1}) cells.push_back({p, r, eps});
  return build_report(
      "lemma-5.2-powersum", ClaimClass::theorem,
      "p in {5,7,11,13}, r in [0,3], eps=±1", cells.size(), threads,
      [&](std::size_t i) {
        return verify_powersum(cells[i].p, cells[i].r, cells[i].eps);
      });
}

CongruenceReport lemma53_battery(std::uint64_t seed, int threads) {
  SplitMix64 rng(seed + 8);
  struct Cell {
    Partition lambda;
    MultiIndex n;
    std::int64_t k, p;
    int r, exponent;
  };
  std::vector<Cell> cells;
  const std::int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < 60; ++i) {
    Partition lambda = (rng.next() % 2 == 0) ? Partition({2, 2}) : Partition({2, 1});
    MultiIndex n(static_cast<std::size_t>(lambda.dimension()));
    for (auto& x : n) x = rng.in_range(-3, 3);
    std::int64_t k = rng.in_range(-6, 6);
    std::int64_t p = primes[rng.next() % 3];
    int r = static_cast<int>(rng.in_range(1, 2));
    int exponent = p >= 5 ? 3 : 2;
    cells.push_back({std::move(lambda), std::move(n), k, p, r, exponent});
  }
  return build_report(
      "lemma-5.3-term", ClaimClass::theorem,
      "seeded lambda in {(2,2),(2,1)}, |n_i|<=3, |k|<=6, p in {3,5,7}, r<=2; "
      "modulus p^(3r) for p>=5 else p^(2r)",
      cells.size(), threads, [&](std::size_t i) {
        return verify_term_lemma(cells[i].lambda, cells[i].n, cells[i].k,
                                 cells[i].p, cells[i].r, cells[i].exponent);
      });
}

CongruenceReport lemma54_battery(std::uint64_t seed, int threads) {
  SplitMix64 rng(seed + 9);
  struct Cell {
    std::int64_t m, k, p;
    int r;
  };
  std::vector<Cell> cells;
  const std::int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < 60; ++i)
    cells.push_back({rng.in_range(-4, 4), rng.in_range(-6, 6),
                     primes[rng.next() % 3], static_cast<int>(rng.in_range(1, 2))});
  return build_report("lemma-5.4-binom", ClaimClass::theorem,
                      "seeded |m|<=4, |k|<=6, p in {3,5,7}, r<=2, modulus p^r",
                      cells.size(), threads, [&](std::size_t i) {
                        return verify_binom_lemma4(cells[i].m, cells[i].k,
                                                   cells[i].p, cells[i].r);
                      });
}

CongruenceReport lemma55_battery(std::uint64_t seed, int threads) {
  SplitMix64 rng(seed + 10);
  struct Cell {
    std::int64_t m1, m2, k, p;
    int r;
  };
  std::vector<Cell> cells;
  const std::int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < 60; ++i)
    cells.push_back({rng.in_range(-4, 4), rng.in_range(-4, 4),
                     rng.in_range(-6, 6), primes[rng.next() % 3],
                     static_cast<int>(rng.in_range(1, 2))});
  return build_report(
      "lemma-5.5-binom", ClaimClass::theorem,
      "seeded |m1|,|m2|<=4, |k|<=6, p in {3,5,7}, r<=2, modulus p^r",
      cells.size(), threads, [&](std::size_t i) {
        return verify_binom_lemma5(cells[i].m1, cells[i].m2, cells[i].k,
                                   cells[i].p, cells[i].r);
      });
}

CongruenceReport dwork_battery(int threads) {
  struct Cell {
    std::int64_t m, n, p;
    int r;
  };
  std::vector<Cell> cells;
  for (std::int64_t p : {2, 3, 5})
    for (int r : {1, 2})
      for (std::int64_t m = 0; m <= 10; ++m)
        for (std::int64_t n = 0; n <= 10; ++n) cells.push_back({m, n, p, r});
  return build_report("dwork-apery", ClaimClass::theorem,
                      "p in {2,3,5}, m,n in [0,10], r in {1,2}, modulus p^r",
                      cells.size(), threads, [&](std::size_t i) {
                        return verify_dwork(cells[i].m, cells[i].n, cells[i].p,
                                            cells[i].r);
                      });
}

CongruenceReport lucas_battery(int threads) {
  struct Cell {
    std::int64_t n, p;
  };
  std::vector<Cell> cells;
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 0; n < p * p * p; ++n) cells.push_back({n, p});
  return build_report("lucas-apery", ClaimClass::theorem,
                      "p in {2,3,5}, all n < p^3, modulus p", cells.size(),
                      threads, [&](std::size_t i) {
                        return verify_lucas(cells[i].n, cells[i].p);
                      });
}

CongruenceReport ljunggren_battery(std::uint64_t seed, int threads) {
  SplitMix64 rng(seed + 11);
  struct Cell {
    std::int64_t a, b, p;
  };
  std::vector<Cell> cells;
  const std::int64_t primes[] = {5, 7, 11};
  for (int i = 0; i < 50; ++i)
    cells.push_back({rng.in_range(0, 30), rng.in_range(0, 30),
                     primes[rng.next() % 3]});
  return build_report("ljunggren", ClaimClass::theorem,
                      "50 seeded (a,b) in [0,30]^2, p in {5,7,11}, modulus p^3",
                      cells.size(), threads, [&](std::size_t i) {
                        return verify_ljunggren(cells[i].a, cells[i].b,
                                                cells[i].p);
                      });
}

CongruenceCell equality_cell(const char* claim, nlohmann::ordered_json params,
                             Integer lhs, Integer rhs) {
  return make_cell(claim, std::move(params), std::move(lhs), std::move(rhs),
                   Integer(0), Integer(0));
}

CongruenceReport reflect_battery(int threads) {
  // 20 reflected A-values, 20 reflected B-values, 31 two-route identities.
  return build_report(
      "reflections-and-identity", ClaimClass::theorem,
      "apery_sum(-n)=apery_sum(n-1), b_sum(-n)=(-1)^(n-1) b_sum(n-1) for n in "
      "[1,20]; two-route B identity for n in [0,30]; exact",
      71, threads, [&](std::size_t i) -> CongruenceCell {
        if (i < 20) {
          auto [lhs, rhs] = reflect_a(static_cast<std::int64_t>(i) + 1);
          nlohmann::ordered_json params;
          params["claimant"] = "reflect-A";
          params["n"] = i + 1;
          return equality_cell("reflect", std::move(params), std::move(lhs),
                               std::move(rhs));
        }
        if (i < 40) {
          auto [lhs, rhs] = reflect_b(static_cast<std::int64_t>(i) - 19);
          nlohmann::ordered_json params;
          params["claimant"] = "reflect-B";
          params["n"] = i - 19;
          return equality_cell("reflect", std::move(params), std::move(lhs),
                               std::move(rhs));
        }
        auto [lhs, rhs] = identity25_sides(static_cast<std::int64_t>(i) - 40);
        nlohmann::ordered_json params;
        params["claimant"] = "identity25";
        params["n"] = i - 40;
        return equality_cell("identity25", std::move(params), std::move(lhs),
                             std::move(rhs));
      });
}

CongruenceReport conjecture_battery(const char* claim, int dim,
                                    std::uint64_t seed, int threads) {
  const auto indices = seeded_multi_indices(seed, 20, dim, 0, 3);
  SplitMix64 rng(seed + 100);
  struct Cell {
    MultiIndex n;
    std::int64_t p;
  };
  std::vector<Cell> cells;
  for (const auto& n : indices)
    cells.push_back({n, rng.next() % 2 == 0 ? 5 : 7});
  return build_report(
      claim, ClaimClass::conjecture_support,
      "20 seeded n in [0,3]^" + std::to_string(dim) + ", p in {5,7}, r=1, "
      "modulus p^3",
      cells.size(), threads, [&](std::size_t i) {
        return dim == 3 ? verify_conjecture_g(cells[i].n, cells[i].p, 1)
                        : verify_conjecture_z(cells[i].n, cells[i].p, 1);
      });
}

CongruenceReport scan_battery(int threads, std::vector<CongruenceReport>& out) {
  ScanBConfig config;
  config.d = 5;
  config.b_min = -20;
  config.b_max = 20;
  config.exclude_zero = true;
  config.primes = {5, 7, 11};
  config.r = 1;
  config.exponent = 2;
  config.grid = {MultiIndex{1, 1, 1, 1, 1}};
  config.threads = threads;
  ScanBResult scan = scan_b(config);
  out.push_back(scan.report);

  CongruenceReport summary;
  summary.claim = "scan-b-d5-empty";
  summary.claim_class = ClaimClass::conjecture_support;
  summary.grid = scan.report.grid;
  nlohmann::ordered_json params;
  params["survivors"] = scan.survivors;
  summary.cells.push_back(equality_cell(
      "scan-b-survivor-count", std::move(params),
      Integer(static_cast<long>(scan.survivors.size())), Integer(0)));
  return summary;
}

}  // namespace

std::size_t SuiteResult::theorem_failures() const {
  std::size_t n = 0;
  for (const auto& r : reports)
    if (r.claim_class == ClaimClass::theorem) n += r.failed();
  return n;
}

std::size_t SuiteResult::conjecture_failures() const {
  std::size_t n = 0;
  for (const auto& r : reports)
    // Failing scan cells are eliminations, not conjecture failures; the scan
    // outcome is judged by its survivor-count summary report.
    if (r.claim_class == ClaimClass::conjecture_support && r.claim != "scan-b")
      n += r.failed();
  return n;
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  const std::uint64_t seed = config.seed;
  const int threads = config.threads;
  result.reports.push_back(theorem12_battery(seed, threads));
  result.reports.push_back(theorem32b_battery(seed, threads));
  result.reports.push_back(theorem32a_battery(seed, threads));
  result.reports.push_back(eq29_battery(seed, threads));
  result.reports.push_back(jacobsthal_battery(seed, threads));
  result.reports.push_back(powersum_battery(threads));
  result.reports.push_back(lemma53_battery(seed, threads));
  result.reports.push_back(lemma54_battery(seed, threads));
  result.reports.push_back(lemma55_battery(seed, threads));
  result.reports.push_back(dwork_battery(threads));
  result.reports.push_back(lucas_battery(threads));
  result.reports.push_back(ljunggren_battery(seed, threads));
  result.reports.push_back(reflect_battery(threads));
  result.reports.push_back(conjecture_battery("conjecture-g", 3, seed + 12, threads));
  result.reports.push_back(conjecture_battery("conjecture-z", 4, seed + 13, threads));
  std::vector<CongruenceReport> scan_reports;
  CongruenceReport scan_summary = scan_battery(threads, scan_reports);
  for (auto& r : scan_reports) result.reports.push_back(std::move(r));
  result.reports.push_back(std::move(scan_summary));
  return result;
}

}  // namespace apery
