#include <doctest.h>

#include "support.hpp"
#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/lp.hpp"

using namespace turancover;
using testing::hg;

namespace {

LpOptions float_mode() {
  LpOptions lp;
  lp.mode = LpMode::kFloat;
  return lp;
}

}  // namespace

TEST_CASE("cover LP anchors") {
  const auto single = solve_vc_lp(testing::single_edge());
  CHECK(single.objective == 1);
  CHECK(single.support().size() == 1);

  CHECK(solve_vc_lp(complete(4, 3)).objective == Rational(4, 3));
  CHECK(solve_vc_lp(blow_up(complete(4, 3), 2).hyper).objective == 2);
  CHECK(solve_vc_lp(hg(3, 4, {})).objective == 0);
}

TEST_CASE("matching LP anchors") {
  CHECK(solve_matching_lp(testing::single_edge()).objective == 1);
  CHECK(solve_matching_lp(blow_up(complete(4, 3), 2).hyper).objective == 2);
  CHECK(solve_matching_lp(testing::two_disjoint_edges()).objective == 2);
  const auto y = solve_matching_lp(complete(4, 3));
  CHECK(y.kind == LpKind::kDual);
  CHECK(y.objective == Rational(4, 3));
}

TEST_CASE("both tableau orientations agree") {
  // m <= active vertices uses the covering rows, the other case the packing rows.
  const auto wide = hg(3, 9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}});
  const auto tall = complete(6, 3);
  for (const auto* h : {&wide, &tall}) {
    const auto pair = solve_lp_pair(*h);
    CHECK(pair.primal.objective == pair.dual.objective);
    CHECK(check_complementary_slackness(pair.primal, pair.dual, *h).passed);
  }
  CHECK(solve_vc_lp(tall).objective == 2);
}

TEST_CASE("strong duality and support bound on random instances") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t t = 2 + seed % 4;
    const std::size_t n = t + 2 + seed % (11 - t);
    const auto h = random_hypergraph(n, t, seed % 2 ? 0.2 : 0.5, seed);
    const auto pair = solve_lp_pair(h);
    CHECK(pair.primal.objective == pair.dual.objective);
    const auto report = check_complementary_slackness(pair.primal, pair.dual, h);
    CHECK_MESSAGE(report.passed, report.violation);
    CHECK(Rational(report.support_size) <= report.support_bound);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("deleting an edge never raises tau*") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto h = random_hypergraph(9, 3, 0.3, seed);
    if (h.num_edges() < 2) continue;
    std::vector<std::size_t> keep(h.num_edges() - 1);
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i + 1;
    CHECK(solve_vc_lp(h.edge_subgraph(keep)).objective <= solve_vc_lp(h).objective);
  }
}

TEST_CASE("float mode tracks exact mode") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = random_hypergraph(10, 3, 0.3, seed);
    const double exact = to_double(solve_vc_lp(h).objective);
    const double approx = to_double(solve_vc_lp(h, float_mode()).objective);
    CHECK(approx == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("slackness checker") {
  const auto e = testing::single_edge();
  LPSolution x{LpKind::kPrimal, LpMode::kExact, {1, 0, 0}, 1};
  LPSolution y{LpKind::kDual, LpMode::kExact, {1}, 1};
  const auto ok = check_complementary_slackness(x, y, e);
  CHECK(ok.passed);
  CHECK(ok.support_size == 1);
  CHECK(ok.support_bound == 3);

  // x_v > 0 at a vertex whose dual row is slack.
  const auto h = hg(3, 5, {{0, 1, 2}, {0, 3, 4}});
  LPSolution px{LpKind::kPrimal, LpMode::kExact, {1, 0, 0, 0, 0}, 1};
  LPSolution py{LpKind::kDual, LpMode::kExact, {1, 0}, 1};
  CHECK(check_complementary_slackness(px, py, h).passed);
  px.values = {1, 0, 0, 1, 0};
  px.objective = 2;
  const auto bad = check_complementary_slackness(px, py, h);
  CHECK_FALSE(bad.passed);
  CHECK(bad.violation.find("vertex 3") != std::string::npos);

  auto fx = x;
  fx.mode = LpMode::kFloat;
  CHECK_THROWS_AS(check_complementary_slackness(fx, y, e), ParameterError);
  CHECK_THROWS_AS(check_complementary_slackness(y, x, e), ParameterError);
}

TEST_CASE("exact size guard") {
  LpOptions tight;
  tight.size_guard = 10;
  CHECK_THROWS_AS(solve_vc_lp(complete(6, 3), tight), ResourceError);
  LpOptions fl = float_mode();
  fl.size_guard = 10;
  CHECK(to_double(solve_vc_lp(complete(6, 3), fl).objective) == doctest::Approx(2.0));
}

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(4, 6)) == "2/3");
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("5") == 5);
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(floor_to_micro(0.1234567) == Rational(123456, 1000000));
  CHECK(floor_to_int(Rational(-1, 2)) == -1);
  CHECK(ceil_to_int(Rational(7, 3)) == 3);
}
