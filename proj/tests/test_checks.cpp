#include <atomic>

#include "doctest.h"
#include "qcapelli/checks.hpp"
#include "qcapelli/error.hpp"

using namespace qcapelli;

TEST_CASE("foundation properties") {
  CHECK(verify_field_axioms(1, 100));
  CHECK(verify_sqrt_int(100));
  CHECK(verify_series_laws(5, 20));
  CHECK(verify_u_series_square(3, 2));
  CHECK(verify_jm_commute(4));
  CHECK(verify_power_sum_central(3, 2));
  CHECK(verify_character_sanity(StrictPartition({2, 1})));
}

TEST_CASE("suite construction") {
  CHECK_THROWS_AS(suite_instances("nope", {}), UsageError);
  CHECK_THROWS_AS(suite_instances("field", {0, 2, 2}), UsageError);
  CHECK_THROWS_AS(suite_instances("field", {3, 0, 2}), UsageError);
  auto field = suite_instances("field", {});
  REQUIRE(field.size() == 2);
  CHECK(field[0].statement == "field-axioms");
  std::size_t total = 0;
  for (const auto& s : suite_names()) {
    if (s != "all") total += suite_instances(s, {}).size();
  }
  CHECK(suite_instances("all", {}).size() == total);
  auto classical = suite_instances("classical", {3, 2, 3});
  CHECK(classical.size() == 2);
}

TEST_CASE("runner keeps input order and records failures") {
  std::vector<CheckInstance> checks;
  std::atomic<int> calls{0};
  for (int i = 0; i < 20; ++i) {
    checks.push_back({"dummy", {{"i", i}}, [i, &calls] {
                        ++calls;
                        if (i == 7) throw UsageError("boom");
                        return i != 3;
                      }});
  }
  std::vector<int> seen;
  auto results = run_checks(checks, 4, [&](const CheckResult& r) { seen.push_back(r.params.at("i").get<int>()); });
  CHECK(calls == 20);
  REQUIRE(results.size() == 20);
  for (int i = 0; i < 20; ++i) {
    CHECK(seen[static_cast<std::size_t>(i)] == i);
    CHECK(results[static_cast<std::size_t>(i)].pass == (i != 3 && i != 7));
  }
  CHECK(results[7].error == "boom");
  Json j = to_json(results[7]);
  CHECK(j.at("statement") == "dummy");
  CHECK(j.at("error") == "boom");
  CHECK(run_checks({}, 3).empty());
}

TEST_CASE("small suites pass") {
  for (const char* s : {"field", "series", "classical"}) {
    for (const auto& r : run_checks(suite_instances(s, {2, 2, 2}), 2)) {
      INFO(r.statement << " " << r.params.dump() << " " << r.error);
      CHECK(r.pass);
    }
  }
}
