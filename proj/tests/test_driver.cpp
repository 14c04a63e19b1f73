#include <doctest.h>

#include <json.hpp>

#include "thetaring/driver.hpp"

using namespace thetaring;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.primes = {2, 3};
  c.exponents = {1};
  c.trials = 10;
  return c;
}

}  // namespace

TEST_CASE("grid") {
  RunConfig c;
  auto grid = c.grid();
  CHECK(grid.size() == 7);
  CHECK(grid[2] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(grid.back() == std::pair<std::uint64_t, unsigned>{5, 2});
  c.primes = {3};
  CHECK(c.grid() == std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {3, 2}});
  c.exponents = {4};
  CHECK(c.grid() == std::vector<std::pair<std::uint64_t, unsigned>>{{3, 4}});
}

TEST_CASE("usage errors") {
  RunConfig c;
  c.primes = {4};
  CHECK_THROWS_AS(cmd_axioms(c), UsageError);
  c.primes = {2};
  c.exponents = {0};
  CHECK_THROWS_AS(cmd_verify(c), UsageError);
}

TEST_CASE("verify report") {
  Report r = cmd_verify(small_config());
  CHECK(r.passed());
  REQUIRE(r.cells.size() == 2);
  for (const auto& cell : r.cells)
    for (const auto& v : cell.verdicts) CHECK(v.verdict == Verdict::pass);

  auto json = nlohmann::json::parse(r.to_machine());
  CHECK(json["schema"] == "thetaring-report/1");
  CHECK(json["command"] == "verify");
  CHECK(r.to_machine() == cmd_verify(small_config()).to_machine());
}

TEST_CASE("span limit skips a cell") {
  RunConfig c;
  c.primes = {2};
  c.exponents = {5};
  c.span_limit = 64;
  Report r = cmd_verify(c);
  REQUIRE(r.cells.size() == 1);
  for (const auto& v : r.cells[0].verdicts) {
    CHECK(v.verdict == Verdict::skipped);
    CHECK_FALSE(v.reason.empty());
  }
  CHECK(r.passed());
}

TEST_CASE("axioms and fn-check") {
  Report a = cmd_axioms(small_config());
  CHECK(a.passed());
  CHECK(a.to_machine() == cmd_axioms(small_config()).to_machine());
  RunConfig other = small_config();
  other.seed = 2;
  CHECK(cmd_axioms(other).passed());

  RunConfig f = small_config();
  f.degree_cap = 16;
  CHECK(cmd_fn_check(f).passed());
  f.degree_cap = 1;
  Report skipped = cmd_fn_check(f);
  CHECK(skipped.passed());
  for (const auto& s : skipped.suites) CHECK(s.skip_reason == "degree cap admits only n = 0");
}

TEST_CASE("bound") {
  CHECK(cmd_bound(12) == 6);
  CHECK(cmd_bound(9) == 12);
  CHECK(cmd_bound(-7) == 8);
  CHECK(cmd_bound(1) == 1);
  CHECK_THROWS_AS(cmd_bound(0), std::domain_error);
}
