#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turancover/hypergraph.hpp"
#include "turancover/lp.hpp"
#include "turancover/rounding.hpp"
#include "turancover/set_system.hpp"
#include "turancover/setcover.hpp"

namespace turancover {

/// Line-oriented reader for the text formats. Blank lines and lines starting
/// with '#' are skipped; ParseError carries the 1-based line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next significant line split into tokens, or nullopt at end of input.
  const std::vector<std::string>* peek();
  std::vector<std::string> next(const char* expected);
  bool at_end() { return peek() == nullptr; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const;
  std::uint64_t to_uint(const std::string& token) const;

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::optional<std::vector<std::string>> buffered_;
  bool eof_ = false;
};

/// A hypergraph, optionally with blow-up labels.
struct Instance {
  Hypergraph hyper;
  std::optional<BlowUp> blowup;
};

void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph(LineReader& in, DuplicatePolicy duplicates = DuplicatePolicy::kReject);

/// `HG` block followed by `LABELS <base_t> <base_n> <k>` and one label per
/// vertex. A bare `LABELS` line is also accepted on input; base parameters
/// are then inferred from the labels.
void write_blowup(std::ostream& out, const BlowUp& b);
Instance read_instance(LineReader& in, DuplicatePolicy duplicates = DuplicatePolicy::kReject);

void write_set_system(std::ostream& out, const SetSystem& s);
SetSystem read_set_system(LineReader& in);

/// `LPSOL <primal|dual> <exact|float> <count>`, then `<id> <value>` per id,
/// then `OBJ <value>`. Exact values print as num/den, float values with 17
/// significant digits.
void write_lp_solution(std::ostream& out, const LPSolution& s);
LPSolution read_lp_solution(LineReader& in);

/// `COVER <size>`, ids one per line, `BREAKDOWN U= SPRIME= PARITY=`,
/// `LP OPT= RESIDUAL=`, `SEED <u64> TRIAL <i>`, `SOURCE ... ROUNDING= THRESHOLD=`.
void write_cover_result(std::ostream& out, const CoverResult& r);
/// Reads a COVER block and skips its trailing summary lines.
std::vector<VertexId> read_cover(LineReader& in);

void write_greedy_trace(std::ostream& out, const GreedyTrace& trace);

/// `MATCHING <k>` followed by k edge ids (any line layout).
std::vector<std::size_t> read_matching(LineReader& in);

std::string format_double(double value);

}  // namespace turancover
