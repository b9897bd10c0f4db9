#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcapelli/serialize.hpp"
#include "qcapelli/shifted.hpp"

namespace qcapelli {

// Foundation properties, exact and seeded.
bool verify_field_axioms(std::uint32_t seed, int trials);
// sqrt_int(m)^2 == m with squarefree radicand and positive coefficient, |m| <= bound.
bool verify_sqrt_int(int bound);
// Commutativity, associativity, distributivity and invert(invert(a)) == a on random series.
bool verify_series_laws(std::uint32_t seed, int trials);
// u_series(c, r)^2 == (c + r^2 d^2)(c + 1 + r^2 d^2).
bool verify_u_series_square(int c, int r);
// x_1..x_n pairwise commute, anticommute with a_k and satisfy the s_k relations.
bool verify_jm_commute(int n);
// sum_k x_k^{2r} commutes with every basis element of H_n.
bool verify_power_sum_central(int n, int r);
// chi(1) = 1 and chi(h) = 0 for every odd basis element h.
bool verify_character_sanity(const StrictPartition& lambda);

struct CheckInstance {
  std::string statement;
  Json params;
  std::function<bool()> run;
};

struct CheckResult {
  std::string statement;
  Json params;
  bool pass = false;
  double runtime_ms = 0;
  std::string error;  // set when the check threw
};

struct SuiteBounds {
  int n_max = 3;
  int N = 2;
  int M = 2;
};

const std::vector<std::string>& suite_names();  // field, series, sergeev, fusion, characters, capelli, classical, all
// Throws UsageError for an unknown suite or out-of-range bounds.
std::vector<CheckInstance> suite_instances(const std::string& suite, const SuiteBounds& bounds);

CheckResult run_check(const CheckInstance& c);
// Runs on `jobs` threads; on_result sees results in input order as soon as each prefix is done.
std::vector<CheckResult> run_checks(const std::vector<CheckInstance>& checks, int jobs,
                                    const std::function<void(const CheckResult&)>& on_result = {});

Json to_json(const CheckResult& r);
Json partition_json(const StrictPartition& lambda);

}  // namespace qcapelli
