#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcapelli/laurent.hpp"
#include "qcapelli/sergeev.hpp"
#include "qcapelli/shifted.hpp"

namespace qcapelli {

struct FusionPair {
  int i;
  int j;
  bool before;  // i is read before j when the column tableau is read by rows
};

struct FusionPlan {
  StrictPartition shape;
  ColumnTableau tableau;
  std::vector<FusionPair> pairs;  // lexicographic in (i, j)
};

FusionPlan make_plan(const StrictPartition& lambda);

// Absolute truncation order used for each factor series: 2n(n-1) + 4.
int default_truncation(int n);

// Limit of the ordered product of phi factors along t_i = r_i^2 d^2.
SergeevElement psi(const StrictPartition& lambda, std::optional<int> truncation = std::nullopt);
// Closed form for a single row, u_s = sqrt(s(s-1)).
SergeevElement psi_row_formula(int n);

// Split of the product into the factors with i read before j (upsilon, taken as a
// limit) and the factors with i read after j (theta, evaluated directly).
std::pair<SergeevElement, SergeevElement> upsilon_theta(const StrictPartition& lambda,
                                                        std::optional<int> truncation = std::nullopt);

// delta^0 coefficient of a product of series; throws SeriesError if a negative power
// survives or the truncations do not reach order 0.
SergeevElement limit_of_product(const std::vector<SergeevSeries>& factors, int n);

// Memoized psi at the default truncation; safe to call from several threads.
const SergeevElement& psi_cached(const StrictPartition& lambda);

bool verify_psi_star_alpha(const StrictPartition& lambda);
bool verify_jm_eigen(const StrictPartition& lambda);
bool verify_divisibility(const StrictPartition& lambda);
bool verify_xu_identity(const StrictPartition& lambda, const Rational& u);
bool verify_limit_path(int t0);
bool verify_limit_vanishes();
bool verify_y_expansion(const StrictPartition& lambda, int m);
bool verify_y_vanishing(const StrictPartition& lambda, const StrictPartition& mu);

// Pieces exposed for tests.
SergeevElement injective_sum(int n, int m);  // sum over injective j of (1 j~1)..(n j~n)(1-a1 a_j~1)..
SergeevElement y_shifted_product(const StrictPartition& lambda, int m);  // (y_1 - z_1)...(y_n - z_n)

}  // namespace qcapelli
