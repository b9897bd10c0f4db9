#include "qcapelli/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qcapelli/error.hpp"

namespace qcapelli {

namespace {

using S = SergeevElement;

std::vector<int> reading_position(const ColumnTableau& t) {
  std::vector<int> pos(static_cast<std::size_t>(t.size()) + 1, 0);
  auto reading = t.row_reading();
  for (std::size_t p = 0; p < reading.size(); ++p) pos[static_cast<std::size_t>(reading[p])] = static_cast<int>(p);
  return pos;
}

std::vector<KSeries> path_series(const ColumnTableau& t, int truncation) {
  std::vector<KSeries> u;
  for (int k = 0; k < t.size(); ++k) {
    u.push_back(u_series(t.content[static_cast<std::size_t>(k)], t.row_of[static_cast<std::size_t>(k)], truncation));
  }
  return u;
}

int resolve_truncation(int n, std::optional<int> truncation) {
  int trunc = truncation.value_or(default_truncation(n));
  if (trunc < 1) throw UsageError("truncation must be positive");
  return trunc;
}

const FieldElement& zk(const std::vector<FieldElement>& z, int k) { return z[static_cast<std::size_t>(k - 1)]; }

// Limit of the ordered product of the factors for the given pairs.
S limit_over(const FusionPlan& plan, const std::vector<FusionPair>& pairs, int truncation) {
  int n = plan.shape.size();
  auto u = path_series(plan.tableau, truncation);
  std::vector<SergeevSeries> factors;
  factors.reserve(pairs.size());
  for (const auto& p : pairs) {
    factors.push_back(phi_series(p.i, p.j, u[static_cast<std::size_t>(p.i - 1)], u[static_cast<std::size_t>(p.j - 1)], n));
  }
  return limit_of_product(factors, n);
}

// Pairs with i read before j (or after, when `before` is false), ordered by j, then by
// the row reading of i. j runs upwards for the first kind and downwards for the second.
std::vector<FusionPair> split_pairs(const FusionPlan& plan, bool before) {
  auto pos = reading_position(plan.tableau);
  std::vector<FusionPair> out;
  for (const auto& p : plan.pairs) {
    if (p.before == before) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](const FusionPair& x, const FusionPair& y) {
    if (x.j != y.j) return before ? x.j < y.j : x.j > y.j;
    return pos[static_cast<std::size_t>(x.i)] < pos[static_cast<std::size_t>(y.i)];
  });
  return out;
}

}  // namespace

FusionPlan make_plan(const StrictPartition& lambda) {
  FusionPlan plan{lambda, column_tableau(lambda), {}};
  int n = lambda.size();
  if (n > kMaxSergeevRank) throw UsageError("partition too large: n = " + std::to_string(n));
  auto pos = reading_position(plan.tableau);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      plan.pairs.push_back({i, j, pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)]});
    }
  }
  return plan;
}

int default_truncation(int n) { return 2 * n * (n - 1) + 4; }

SergeevElement limit_of_product(const std::vector<SergeevSeries>& factors, int n) {
  if (factors.empty()) return S::identity(n);
  // Only orders below 1 + (poles still to come) can reach the constant term.
  std::vector<int> remaining(factors.size() + 1, 0);
  for (std::size_t k = factors.size(); k-- > 0;) {
    remaining[k] = remaining[k + 1] + std::max(0, -factors[k].valuation());
  }
  SergeevSeries acc = SergeevSeries::constant(S::identity(n));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    acc = (acc * factors[k]).truncated(1 + remaining[k + 1]);
  }
  if (acc.truncation() < 1) {
    throw SeriesError("truncation budget too small: product known only below order " + std::to_string(acc.truncation()));
  }
  if (!acc.is_zero() && acc.valuation() < 0) {
    throw SeriesError("negative power d^" + std::to_string(acc.valuation()) + " survives in the fusion product");
  }
  return acc.coefficient(0);
}

SergeevElement psi(const StrictPartition& lambda, std::optional<int> truncation) {
  FusionPlan plan = make_plan(lambda);
  int n = lambda.size();
  if (n <= 1) return S::identity(n);
  return limit_over(plan, plan.pairs, resolve_truncation(n, truncation));
}

SergeevElement psi_row_formula(int n) {
  if (n < 1) throw UsageError("psi_row_formula needs n >= 1");
  if (n > kMaxSergeevRank) throw UsageError("n too large");
  std::vector<FieldElement> u;
  for (std::int64_t s = 1; s <= n; ++s) u.push_back(sqrt_int(s * (s - 1)));
  S acc = S::identity(n);
  for (int r = 1; r < n; ++r) {
    for (int s = r + 1; s <= n; ++s) acc = acc * phi(r, s, zk(u, r), zk(u, s), n);
  }
  return acc;
}

std::pair<SergeevElement, SergeevElement> upsilon_theta(const StrictPartition& lambda, std::optional<int> truncation) {
  FusionPlan plan = make_plan(lambda);
  int n = lambda.size();
  if (n <= 1) return {S::identity(n), S::identity(n)};
  S upsilon = limit_over(plan, split_pairs(plan, true), resolve_truncation(n, truncation));
  auto z = z_values(lambda);
  S theta = S::identity(n);
  for (const auto& p : split_pairs(plan, false)) theta = theta * phi(p.i, p.j, zk(z, p.i), zk(z, p.j), n);
  return {upsilon, theta};
}

const SergeevElement& psi_cached(const StrictPartition& lambda) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const S>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda.parts());
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const S>(psi(lambda));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(lambda.parts(), value);
  return *it->second;
}

bool verify_psi_star_alpha(const StrictPartition& lambda) {
  const S& p = psi_cached(lambda);
  return star(p) == p && alpha(p) == S::identity(lambda.size());
}

bool verify_jm_eigen(const StrictPartition& lambda) {
  const S& p = psi_cached(lambda);
  int n = lambda.size();
  auto z = z_values(lambda);
  for (int k = 1; k <= n; ++k) {
    if (jm_element(k, n) * p != zk(z, k) * p) return false;
  }
  return true;
}

bool verify_divisibility(const StrictPartition& lambda) {
  int n = lambda.size();
  if (n <= 1) return true;
  const S& p = psi_cached(lambda);
  ColumnTableau t = column_tableau(lambda);
  auto z = z_values(lambda);
  auto [upsilon, theta] = upsilon_theta(lambda);

  for (int r = 1; r <= lambda.length(); ++r) {
    auto row = t.row_entries(r);
    for (std::size_t q = 0; q + 1 < row.size(); ++q) {
      int k = row[q], l = row[q + 1];
      // right divisibility of upsilon by phi_kl: its complement annihilates
      if (!(upsilon * phi(l, k, zk(z, l), zk(z, k), n)).is_zero()) return false;
      if (r != 1) continue;
      // psi is divisible by phi_kl * prod_{k<m<l} phi_ml; the reversed complements kill it
      S right = S::identity(n);
      for (int m = l - 1; m >= k; --m) right = right * phi(l, m, zk(z, l), zk(z, m), n);
      if (!(p * right).is_zero()) return false;
      S left = S::identity(n);
      for (int m = k; m < l; ++m) left = left * phi(l, m, zk(z, l), zk(z, m), n);
      if (!(left * p).is_zero()) return false;
    }
  }
  for (int k = 1; k < n; ++k) {
    const Cell& a = t.cell_of[static_cast<std::size_t>(k - 1)];
    const Cell& b = t.cell_of[static_cast<std::size_t>(k)];
    if (a.column != b.column) continue;
    S comp = phi(k + 1, k, zk(z, k + 1), zk(z, k), n);
    if (!(comp * upsilon).is_zero()) return false;
    if (!(p * comp).is_zero() || !(comp * p).is_zero()) return false;
  }
  return true;
}

bool verify_xu_identity(const StrictPartition& lambda, const Rational& u) {
  int n = lambda.size();
  if (n + 1 > kMaxSergeevRank) throw UsageError("partition too large for H_{n+1}");
  if (u.is_zero()) throw PoleError("u = 0 is a pole");
  auto z = z_values(lambda);
  FieldElement fu(u);
  S lhs = S::identity(n + 1);
  for (int i = 1; i <= n; ++i) lhs = lhs * phi(n + 1, i, fu, zk(z, i), n + 1);
  S p = embed(psi_cached(lambda), n + 1, 0);
  lhs = lhs * p;
  S rhs = p - inv(fu) * (jm_element(n + 1, n + 1) * p);
  return lhs == rhs;
}

bool verify_limit_path(int t0) {
  if (t0 < 1) throw UsageError("t0 must be at least 1");
  const int trunc = 10;
  const int i = 1, j = 2, k = 3, n = 3;
  KSeries v = shifted_root_series(t0, trunc);
  KSeries u = shifted_root_series(t0 + 1, trunc);
  FieldElement w0 = u.coefficient(0), v0 = v.coefficient(0);
  KSeries w = KSeries::from_coeffs(0, {w0}, trunc);
  std::vector<SergeevSeries> f = {phi_series(i, j, u, v, n), phi_series(i, k, u, w, n), phi_series(j, k, v, w, n),
                                  phi_series(k, j, w, v, n)};
  S value = limit_of_product(f, n);
  FieldElement sp = v0 + w0, sm = v0 - w0;
  FieldElement scal = FieldElement(2) * inv(sp * sp * sp) - FieldElement(2) * inv(sm * sm * sm);
  S expect = scal * (S::transposition(n, i, k) * phi(k, j, w0, v0, n));
  return value == expect;
}

bool verify_limit_vanishes() {
  const int trunc = 12;
  const int i = 1, j = 2, k = 3, n = 3;
  KSeries u = u_series(0, 1, trunc);  // sqrt(s(s+1)), s = d^2
  KSeries v = u_series(1, 1, trunc);  // sqrt((s+1)(s+2))
  KSeries w = KSeries::zero(trunc);
  std::vector<SergeevSeries> f = {phi_series(i, j, u, v, n), phi_series(i, k, u, w, n), phi_series(j, k, v, w, n),
                                  phi_series(k, j, w, v, n)};
  return limit_of_product(f, n).is_zero();
}

SergeevElement injective_sum(int n, int m) {
  if (n + m > kMaxSergeevRank) throw UsageError("rank too large");
  S total(n + m);
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      S perm = S::identity(n + m), cliff = S::identity(n + m);
      for (int a = 1; a <= n; ++a) {
        int jt = image[static_cast<std::size_t>(a - 1)] + n;
        perm = perm * S::transposition(n + m, a, jt);
        cliff = cliff * (S::identity(n + m) - S::clifford_word(n + m, {a, jt}));
      }
      total += perm * cliff;
      return;
    }
    for (int j = 1; j <= m; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = 1;
      image[static_cast<std::size_t>(k - 1)] = j;
      self(self, k + 1);
      used[static_cast<std::size_t>(j)] = 0;
    }
  };
  if (n <= m) rec(rec, 1);
  return total;
}

SergeevElement y_shifted_product(const StrictPartition& lambda, int m) {
  int n = lambda.size();
  if (m < 0) throw UsageError("m must be non-negative");
  if (n + m > kMaxSergeevRank) throw UsageError("rank too large");
  auto z = z_values(lambda);
  S acc = S::identity(n + m);
  for (int k = 1; k <= n; ++k) acc = acc * (y_element(k, n, m) - S::scalar(n + m, zk(z, k)));
  return acc;
}

bool verify_y_expansion(const StrictPartition& lambda, int m) {
  int n = lambda.size();
  S p = embed(psi_cached(lambda), n + m, 0);
  return p * y_shifted_product(lambda, m) == p * injective_sum(n, m);
}

bool verify_y_vanishing(const StrictPartition& lambda, const StrictPartition& mu) {
  if (contains(lambda, mu)) throw UsageError("diagram " + lambda.str() + " is contained in " + mu.str());
  int n = lambda.size(), m = mu.size();
  if (n + m > kMaxSergeevRank) throw UsageError("rank too large");
  S left = embed(psi_cached(lambda), n + m, 0) * y_shifted_product(lambda, m);
  if (left.is_zero()) return true;
  return (left * embed(psi_cached(mu), n + m, n)).is_zero();
}

}  // namespace qcapelli
