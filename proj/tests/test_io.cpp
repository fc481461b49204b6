#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/io.hpp"
#include "turancover/lp.hpp"
#include "turancover/rounding.hpp"
#include "turancover/setcover.hpp"

using namespace turancover;

namespace {

Instance parse_instance(const std::string& text, DuplicatePolicy policy = DuplicatePolicy::kReject) {
  std::istringstream in(text);
  LineReader reader(in);
  return read_instance(reader, policy);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("hypergraph round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = random_hypergraph(9, 3 + seed % 3, 0.3, seed);
    std::ostringstream out;
    write_hypergraph(out, h);
    CHECK(parse_instance(out.str()).hyper == h);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  const auto inst = parse_instance("# a comment\n\nHG 3 4 1\n# inside\n2 1 0\n");
  CHECK(inst.hyper.num_edges() == 1);
  CHECK(inst.hyper.edge(0) == Edge{0, 1, 2});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("XX 3 4 1\n") == 1);
  CHECK(parse_error_line("HG 3 4 2\n0 1 2\n0 1\n") == 3);
  CHECK(parse_error_line("HG 3 4 1\n0 1 9\n") == 2);
  CHECK(parse_error_line("HG 3 4 2\n0 1 2\n") > 0);
  CHECK(parse_error_line("HG 3 4 1\n0 1 x\n") == 2);
  CHECK(parse_error_line("HG 3 4 2\n0 1 2\n2 1 0\n") > 0);
  CHECK(parse_instance("HG 3 4 2\n0 1 2\n2 1 0\n", DuplicatePolicy::kMerge).hyper.num_edges() == 1);
}

TEST_CASE("blow-up round trip") {
  const auto b = blow_up(complete(5, 3), 2);
  std::ostringstream out;
  write_blowup(out, b);
  const auto inst = parse_instance(out.str());
  REQUIRE(inst.blowup);
  CHECK(inst.blowup->labels == b.labels);
  CHECK(inst.blowup->base == b.base);
  CHECK(inst.blowup->k == 2);
  CHECK(out.str().find("LABELS 3 5 2\n") != std::string::npos);

  // Bare LABELS header: base parameters inferred.
  const auto bare = parse_instance("HG 3 3 1\n0 1 2\nLABELS\n0 1\n0 2\n1 2\n");
  REQUIRE(bare.blowup);
  CHECK(bare.blowup->base_t() == 3);
  CHECK(bare.blowup->base_n() == 3);
}

TEST_CASE("set system round trip") {
  const auto s = greedy_hard_setsystem(4);
  std::ostringstream out;
  write_set_system(out, s);
  std::istringstream in(out.str());
  LineReader reader(in);
  CHECK(read_set_system(reader) == s);

  std::istringstream bad("SS 3 1\n2 0\n");
  LineReader bad_reader(bad);
  CHECK_THROWS_AS(read_set_system(bad_reader), ParseError);
}

TEST_CASE("LP solution round trip") {
  const auto h = complete(4, 3);
  for (LpMode mode : {LpMode::kExact, LpMode::kFloat}) {
    LpOptions lp;
    lp.mode = mode;
    const auto pair = solve_lp_pair(h, lp);
    for (const auto* s : {&pair.primal, &pair.dual}) {
      std::ostringstream out;
      write_lp_solution(out, *s);
      std::istringstream in(out.str());
      LineReader reader(in);
      const auto back = read_lp_solution(reader);
      CHECK(back.kind == s->kind);
      CHECK(back.mode == mode);
      CHECK(back.values == s->values);
      CHECK(back.objective == s->objective);
    }
  }
}

TEST_CASE("cover output") {
  const auto r = ahtp_cover(complete(4, 3), RoundingParams::make(3, 7, 2));
  std::ostringstream out;
  write_cover_result(out, r);
  const auto text = out.str();
  CHECK(text.rfind("COVER ", 0) == 0);
  CHECK(text.find("BREAKDOWN U=") != std::string::npos);
  CHECK(text.find("LP OPT=2/1 RESIDUAL=") != std::string::npos);
  CHECK(text.find("SEED 7 TRIAL ") != std::string::npos);
  std::istringstream in(text + "HG 3 4 0\n");
  LineReader reader(in);
  CHECK(read_cover(reader) == r.cover.members());
  CHECK(reader.peek()->front() == "HG");
}

TEST_CASE("greedy trace output") {
  std::ostringstream out;
  write_greedy_trace(out, greedy_set_cover(SetSystem(3, {{0, 1}, {2}})));
  CHECK(out.str() == "0 2 1\n1 1 0\n");
}

TEST_CASE("float formatting keeps 17 digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2) == "2");
}
