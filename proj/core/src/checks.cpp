#include "qcapelli/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "qcapelli/capelli.hpp"
#include "qcapelli/error.hpp"
#include "qcapelli/fusion.hpp"
#include "qcapelli/laurent.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/sergeev.hpp"
#include "qcapelli/superdiff.hpp"

namespace qcapelli {

namespace {

using S = SergeevElement;

FieldElement random_field(std::mt19937& rng) {
  static const std::int64_t radicands[] = {1, -1, 2, -2, 3, -3, 5, 6, -6, 10, 15, -30};
  std::uniform_int_distribution<int> count(0, 4), pick(0, 11), num(-9, 9), den(1, 7);
  FieldElement e;
  int k = count(rng);
  for (int t = 0; t < k; ++t) e += FieldElement::radical(radicands[pick(rng)], Rational(num(rng), den(rng)));
  return e;
}

KSeries random_series(std::mt19937& rng, int trunc) {
  static const std::int64_t rads[] = {1, 2, 3, -1};
  std::uniform_int_distribution<int> val(-3, 2), len(1, 6), c(-5, 5), rad(0, 3);
  int v = val(rng);
  std::vector<FieldElement> cs;
  int l = len(rng);
  for (int k = 0; k < l; ++k) cs.push_back(FieldElement::radical(rads[rad(rng)], Rational(c(rng))));
  if (cs[0].is_zero()) cs[0] = FieldElement(1);
  return KSeries::from_coeffs(v, std::move(cs), trunc);
}

std::vector<StrictPartition> all_up_to(int n_max, int max_len) {
  std::vector<StrictPartition> out;
  for (int n = 1; n <= n_max; ++n) {
    for (auto& l : enumerate_strict(n, max_len)) out.push_back(std::move(l));
  }
  return out;
}

Json lam(const StrictPartition& l) { return {{"lambda", partition_json(l)}}; }

}  // namespace

bool verify_field_axioms(std::uint32_t seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    FieldElement a = random_field(rng), b = random_field(rng), c = random_field(rng);
    if (a + b != b + a || a * b != b * a) return false;
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return false;
    if (a * (b + c) != a * b + a * c) return false;
    if (!(a - a).is_zero()) return false;
    if (!a.is_zero() && a * inv(a) != FieldElement(1)) return false;
    // canonical form: equal values have equal strings
    if ((a - b).is_zero() != (a.str() == b.str())) return false;
    if (((a * FieldElement(3) + b) - b - a - a).str() != a.str()) return false;
  }
  return true;
}

bool verify_sqrt_int(int bound) {
  for (std::int64_t m = -bound; m <= bound; ++m) {
    FieldElement r = sqrt_int(m);
    if (r * r != FieldElement(m)) return false;
    if (r.terms().size() > 1) return false;
    for (const auto& [rad, c] : r.terms()) {
      if (!is_squarefree(rad) || c.sign() <= 0) return false;
    }
  }
  return true;
}

bool verify_series_laws(std::uint32_t seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    KSeries a = random_series(rng, 8), b = random_series(rng, 9), c = random_series(rng, 7);
    if (!(a * b).agrees_with(b * a)) return false;
    if (!((a * b) * c).agrees_with(a * (b * c))) return false;
    if (!(a * (b + c)).agrees_with(a * b + a * c)) return false;
    if (!invert(invert(a)).agrees_with(a)) return false;
    if (!(a * invert(a)).agrees_with(KSeries::constant(FieldElement(1)))) return false;
  }
  return true;
}

bool verify_u_series_square(int c, int r) {
  KSeries u = u_series(c, r, 16);
  std::int64_t r2 = static_cast<std::int64_t>(r) * r;
  std::vector<FieldElement> target{FieldElement(static_cast<std::int64_t>(c) * (c + 1)), FieldElement(),
                                   FieldElement((2 * c + 1) * r2), FieldElement(), FieldElement(r2 * r2)};
  KSeries sq = u * u;
  return sq.truncation() >= 16 && sq.agrees_with(KSeries::from_coeffs(0, std::move(target), kExactOrder));
}

bool verify_jm_commute(int n) {
  std::vector<S> x;
  for (int k = 1; k <= n; ++k) x.push_back(jm_element(k, n));
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t l = k + 1; l < x.size(); ++l) {
      if (!commutator(x[k], x[l]).is_zero()) return false;
    }
    S a = S::clifford_word(n, {static_cast<int>(k) + 1});
    if (a * x[k] != -(x[k] * a)) return false;
  }
  for (int k = 1; k < n; ++k) {
    S s = S::transposition(n, k, k + 1);
    const S& xk = x[static_cast<std::size_t>(k - 1)];
    const S& xk1 = x[static_cast<std::size_t>(k)];
    S akk = S::clifford_word(n, {k, k + 1});
    if (s * xk1 - xk * s != S::identity(n) + akk) return false;
    if (xk1 * s - s * xk != S::identity(n) - akk) return false;
  }
  return true;
}

bool verify_power_sum_central(int n, int r) {
  S p(n);
  for (int k = 1; k <= n; ++k) p += power(jm_element(k, n), 2 * r);
  for (BasisKey h : all_basis_keys(n)) {
    if (!commutator(p, S::basis(n, h)).is_zero()) return false;
  }
  return true;
}

bool verify_character_sanity(const StrictPartition& lambda) {
  int n = lambda.size();
  if (char_chi(lambda, S::identity(n)) != FieldElement(1)) return false;
  for (BasisKey h : all_basis_keys(n)) {
    if (key_is_odd(h) && !char_chi_basis(lambda, h).is_zero()) return false;
  }
  return true;
}

Json partition_json(const StrictPartition& lambda) { return lambda.parts(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"field", "series", "sergeev", "fusion", "characters", "capelli", "classical", "all"};
  return names;
}

std::vector<CheckInstance> suite_instances(const std::string& suite, const SuiteBounds& b) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (b.n_max < 1 || b.n_max > 6) throw UsageError("--n-max must lie in 1..6");
  if (b.N < 1 || b.N > 4 || b.M < 1 || b.M > 4) throw UsageError("--N and --M must lie in 1..4");
  bool all = suite == "all";
  std::vector<CheckInstance> out;
  auto add = [&](std::string statement, Json params, std::function<bool()> run) {
    out.push_back({std::move(statement), std::move(params), std::move(run)});
  };

  if (all || suite == "field") {
    add("field-axioms", {{"seed", 20240611}, {"trials", 300}}, [] { return verify_field_axioms(20240611, 300); });
    add("sqrt-int", {{"bound", 100}}, [] { return verify_sqrt_int(100); });
  }
  if (all || suite == "series") {
    add("series-ring-laws", {{"seed", 99}, {"trials", 60}}, [] { return verify_series_laws(99, 60); });
    for (int c = 0; c <= 6; ++c) {
      for (int r = 1; r <= 4; ++r) add("u-series-square", {{"c", c}, {"r", r}}, [=] { return verify_u_series_square(c, r); });
    }
  }
  if (all || suite == "sergeev") {
    for (int n = 1; n <= std::max(b.n_max, 5); ++n) add("jm-commute", {{"n", n}}, [=] { return verify_jm_commute(n); });
    for (int n = 1; n <= std::min(std::max(b.n_max, 4), 5); ++n) {
      for (int r = 1; r <= 2; ++r) add("power-sum-central", {{"n", n}, {"r", r}}, [=] { return verify_power_sum_central(n, r); });
    }
  }
  if (all || suite == "fusion") {
    for (int n = 1; n <= b.n_max; ++n) add("row-formula", {{"n", n}}, [=] { return psi(StrictPartition({n})) == psi_row_formula(n); });
    for (const auto& l : all_up_to(b.n_max, b.n_max)) {
      add("jm-eigenvector", lam(l), [=] { return verify_jm_eigen(l); });
      add("psi-star-alpha", lam(l), [=] { return verify_psi_star_alpha(l); });
      add("divisibility", lam(l), [=] { return verify_divisibility(l); });
    }
    for (const auto& l : all_up_to(std::min(b.n_max, 3), 3)) {
      for (const Rational& u : {Rational(3), Rational(5), Rational(7, 2)}) {
        Json p = lam(l);
        p["u"] = u.numerator_str() + "/" + u.denominator_str();
        add("xu-identity", p, [=] { return verify_xu_identity(l, u); });
      }
    }
    for (int t0 = 1; t0 <= 4; ++t0) add("limit-path", {{"t0", t0}}, [=] { return verify_limit_path(t0); });
    add("limit-vanishes", Json::object(), [] { return verify_limit_vanishes(); });
    int k = std::min(b.n_max, 3);
    for (const auto& l : all_up_to(k, k)) {
      for (int m = 1; m <= k; ++m) {
        Json p = lam(l);
        p["m"] = m;
        add("y-expansion", p, [=] { return verify_y_expansion(l, m); });
      }
      for (const auto& mu : all_up_to(k, k)) {
        if (contains(l, mu)) continue;
        Json p = lam(l);
        p["mu"] = partition_json(mu);
        add("y-vanishing", p, [=] { return verify_y_vanishing(l, mu); });
      }
    }
  }
  if (all || suite == "characters") {
    int k = std::min(b.n_max, 4);
    for (const auto& l : all_up_to(k, k)) {
      add("character-sanity", lam(l), [=] { return verify_character_sanity(l); });
      for (int r = 1; r <= 2; ++r) {
        Json p = lam(l);
        p["r"] = r;
        add("central-eigenvalue", p, [=] { return verify_central_eigenvalue(l, r); });
      }
    }
    for (const auto& l : all_up_to(std::min(b.n_max, 3), 3)) add("x-lambda-average", lam(l), [=] { return verify_x_lambda_average(l); });
  }
  if (all || suite == "capelli") {
    int N = b.N, M = b.M;
    add("gamma-representation", {{"N", N}, {"M", M}}, [=] { return verify_gamma_rep(N, M); });
    for (const auto& l : all_up_to(b.n_max, b.n_max)) {
      Json p = lam(l);
      p["N"] = N;
      p["M"] = M;
      add("capelli-identity", p, [=] { return verify_capelli_identity(l, N, M); });
      if (l.length() <= std::min(N, M)) add("capelli-nonzero", p, [=] { return !i_lambda(l, N, M).is_zero(); });
    }
    // n + m <= n_max + 2 sites
    for (const auto& l : all_up_to(b.n_max + 1, b.n_max + 1)) {
      for (const auto& mu : all_up_to(b.n_max + 2 - l.size(), b.n_max + 1)) {
        if (contains(l, mu)) continue;
        int n_rep = std::max(l.length(), mu.length());
        Json p = lam(l);
        p["mu"] = partition_json(mu);
        p["N"] = n_rep;
        add("capelli-vanishing", p, [=] { return verify_capelli_vanishing(l, mu, n_rep); });
      }
    }
    for (const auto& l : all_up_to(b.n_max + 1, N)) {
      Json p = lam(l);
      p["N"] = N;
      add("capelli-symbol", p, [=] { return verify_capelli_symbol(l, N); });
      add("schur-q-tableaux", p, [=] { return schur_q(l, N) == schur_q_tableaux(l, N); });
    }
  }
  if (all || suite == "classical") {
    for (int n = 1; n <= std::min({b.n_max, b.N, b.M}); ++n) {
      add("classical-capelli", {{"n", n}, {"N", b.N}, {"M", b.M}}, [=] { return classical_capelli_check(n, b.N, b.M); });
    }
  }
  return out;
}

CheckResult run_check(const CheckInstance& c) {
  CheckResult r{c.statement, c.params, false, 0, ""};
  auto start = std::chrono::steady_clock::now();
  try {
    r.pass = c.run();
  } catch (const std::exception& e) {
    r.error = e.what();
  } catch (...) {
    r.error = "unknown exception";
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_checks(const std::vector<CheckInstance>& checks, int jobs,
                                    const std::function<void(const CheckResult&)>& on_result) {
  std::vector<std::optional<CheckResult>> slots(checks.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckResult r = run_check(checks[i]);
      std::lock_guard<std::mutex> lock(mu);
      slots[i] = std::move(r);
      cv.notify_all();
    }
  };
  std::size_t threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  threads = std::min(threads, std::max<std::size_t>(checks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::vector<CheckResult> out;
  out.reserve(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return slots[i].has_value(); });
    out.push_back(*slots[i]);
    lock.unlock();
    if (on_result) on_result(out.back());
  }
  for (auto& t : pool) t.join();
  return out;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["statement"] = r.statement;
  j["instance"] = r.params;
  j["pass"] = r.pass;
  j["runtime_ms"] = static_cast<std::int64_t>(r.runtime_ms + 0.5);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace qcapelli
