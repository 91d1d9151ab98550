#include <doctest.h>

#include "huckel/verify.hpp"

using namespace huckel;

TEST_CASE("conjecture reports") {
  CHECK(verify_conjecture1(2).pass());
  VerifyOptions o;
  o.mode = Mode::Specialized;
  o.seed = 42;
  const VerifyReport r = verify_conjecture1(6, o);
  CHECK(r.pass());
  // five random points plus the y = 1 specialization
  CHECK(r.points.size() == 6);
  CHECK(verify_conjecture2(2, 3).pass());
  CHECK(verify_conjecture3(1, 2).pass());
}

TEST_CASE("seeded points are reproducible") {
  VerifyOptions o;
  o.mode = Mode::Specialized;
  o.seed = 9;
  CHECK(verify_conjecture1(3, o).points == verify_conjecture1(3, o).points);
}

TEST_CASE("symbolic guard") {
  CHECK_THROWS_AS(verify_conjecture1(5), Error);
}

TEST_CASE("report json") {
  const VerifyReport r = verify_conjecture2(1, 1);
  const Json j = report_json(r, false);
  CHECK(j["verdict"] == "pass");
  CHECK_FALSE(j.contains("elapsed_s"));
  CHECK(report_json(r, true).contains("elapsed_s"));
}

TEST_CASE("theta row") {
  const ThetaRow r = theta_row(5);
  CHECK(r.a == 429);
  CHECK(r.aht == 25);
  CHECK(r.theta[0] == CycInt(26741));
  CHECK(r.pi4 == 13167);
  CHECK_FALSE(r.pi4_sqrt2);
  CHECK(r.mitra);
}

TEST_CASE("parallel runs keep order") {
  std::vector<std::function<VerifyReport()>> tasks;
  for (int n = 0; n <= 3; ++n) tasks.push_back([n] { return verify_rank1_coupling(n + 1); });
  const auto out = run_parallel(tasks, 3);
  REQUIRE(out.size() == 4);
  for (int n = 0; n <= 3; ++n) CHECK(out[std::size_t(n)].n == n + 1);
}
