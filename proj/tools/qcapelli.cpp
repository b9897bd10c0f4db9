// qcapelli: command-line front end for the fusion, character and Capelli computations.
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qcapelli/capelli.hpp"
#include "qcapelli/checks.hpp"
#include "qcapelli/error.hpp"
#include "qcapelli/fusion.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/serialize.hpp"
#include "qcapelli/superdiff.hpp"

using namespace qcapelli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::optional<int> env_truncation() {
  const char* v = std::getenv("QCAPELLI_TRUNCATION");
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::string s(v);
  std::size_t used = 0;
  int t = 0;
  try {
    t = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("QCAPELLI_TRUNCATION is not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("QCAPELLI_TRUNCATION is not an integer: '" + s + "'");
  return t;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string factor_str(const std::string& s) { return s.empty() ? "0" : s; }

struct Options {
  std::string lambda;
  std::string format = "json";
  std::optional<int> truncation;
  std::string suite = "all";
  SuiteBounds bounds;
  int jobs = 1;
};

int cmd_psi(const Options& o) {
  StrictPartition l = StrictPartition::parse(o.lambda);
  std::optional<int> t = o.truncation ? o.truncation : env_truncation();
  SergeevElement x = psi(l, t);
  if (o.format == "json") {
    print(to_json(x));
  } else {
    std::cout << x.str() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto checks = suite_instances(o.suite, o.bounds);
  std::size_t failed = 0;
  auto results = run_checks(checks, o.jobs, [&](const CheckResult& r) {
    if (!r.pass) ++failed;
    std::cout << to_json(r).dump() << '\n' << std::flush;
  });
  Json summary;
  summary["suite"] = o.suite;
  summary["n_max"] = o.bounds.n_max;
  summary["N"] = o.bounds.N;
  summary["M"] = o.bounds.M;
  summary["instances"] = results.size();
  summary["failed"] = failed;
  summary["status"] = failed == 0 ? "pass" : "fail";
  std::cout << summary.dump() << '\n';
  return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_capelli(const Options& o) {
  StrictPartition l = StrictPartition::parse(o.lambda);
  int N = o.bounds.N, M = o.bounds.M;
  if (N < 1 || M < 1) throw UsageError("--N and --M must be positive");
  bool nonzero = l.length() <= std::min(N, M);
  // I_lambda vanishes identically once l(lambda) > min(M, N)
  NormalOrderedOperator i = nonzero ? i_lambda(l, N, M) : NormalOrderedOperator(SuperAlphabet(N, M));
  NormalOrderedOperator c = c_lambda_gamma(l, N, M);
  std::optional<SymPolynomial> t;
  if (l.length() <= N) t = t_lambda(l, N);
  SymPolynomial q = schur_q(l, N);
  std::int64_t n_lambda = count_standard(l);

  if (o.format == "json") {
    Json j;
    j["lambda"] = partition_json(l);
    j["N"] = N;
    j["M"] = M;
    j["gamma_C"] = to_json(c);
    j["I"] = to_json(i);
    j["I_is_zero"] = i.is_zero();
    j["T"] = t ? to_json(*t) : Json(nullptr);
    j["Q"] = to_json(q);
    j["n_lambda"] = n_lambda;
    print(j);
  } else {
    std::cout << "lambda = " << l.str() << ", N = " << N << ", M = " << M << '\n';
    std::cout << "gamma(C) = " << c.str() << '\n';
    if (!nonzero) {
      std::cout << "I = 0 (l(lambda) > min(M, N))\n";
    } else {
      std::cout << "I = " << i.str() << '\n';
    }
    std::cout << "T = " << (t ? t->str() : std::string("undefined (l(lambda) > N)")) << '\n';
    std::cout << "Q = " << factor_str(q.str()) << '\n';
    std::cout << "n_lambda = " << n_lambda << '\n';
  }
  return kExitOk;
}

int cmd_charactertable(const Options& o) {
  StrictPartition l = StrictPartition::parse(o.lambda);
  auto table = character_table(l);
  if (o.format == "json") {
    print(to_json(table, l.size()));
  } else {
    Json j = to_json(table, l.size());
    for (const auto& row : j) {
      std::cout << row.at("representative").get<std::string>() << '\t' << row.at("size").get<std::size_t>() << '\t'
                << field_from_json(row.at("value")).str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_qschur(const Options& o) {
  StrictPartition l = StrictPartition::parse(o.lambda);
  if (o.bounds.N < 1) throw UsageError("--N must be positive");
  SymPolynomial q = schur_q(l, o.bounds.N);
  if (o.format == "json") {
    print(to_json(q));
  } else {
    std::cout << factor_str(q.str()) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fusion elements, characters and Capelli operators for the queer Lie superalgebra"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "text"};

  auto* psi_cmd = app.add_subcommand("psi", "Fusion element Psi_lambda of the Sergeev algebra");
  psi_cmd->add_option("--lambda", o.lambda, "strict partition, e.g. 3,1")->required();
  psi_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  psi_cmd->add_option("--truncation", o.truncation, "series truncation order (default from QCAPELLI_TRUNCATION)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite, one JSON line per instance");
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n-max", o.bounds.n_max);
  verify_cmd->add_option("--N", o.bounds.N);
  verify_cmd->add_option("--M", o.bounds.M);
  verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 64));

  auto* capelli_cmd = app.add_subcommand("capelli", "gamma(C_lambda), I_lambda, T_lambda, Q_lambda and n_lambda");
  capelli_cmd->add_option("--lambda", o.lambda)->required();
  capelli_cmd->add_option("--N", o.bounds.N);
  capelli_cmd->add_option("--M", o.bounds.M);
  capelli_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* chars_cmd = app.add_subcommand("charactertable", "Normalized character of U_lambda on conjugacy classes");
  chars_cmd->add_option("--lambda", o.lambda)->required();
  chars_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* q_cmd = app.add_subcommand("qschur", "Schur Q-polynomial Q_lambda(t_1..t_N)");
  q_cmd->add_option("--lambda", o.lambda)->required();
  q_cmd->add_option("--N", o.bounds.N);
  q_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (psi_cmd->parsed()) return cmd_psi(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (capelli_cmd->parsed()) return cmd_capelli(o);
    if (chars_cmd->parsed()) return cmd_charactertable(o);
    if (q_cmd->parsed()) return cmd_qschur(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SeriesError& e) {
    // truncation budget too small for the requested limit
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
