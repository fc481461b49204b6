#include "turancover/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "turancover/errors.hpp"

namespace turancover {

const std::vector<std::string>* LineReader::peek() {
  if (buffered_) return &*buffered_;
  if (eof_) return nullptr;
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream split(text);
    std::vector<std::string> tokens;
    for (std::string tok; split >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front()[0] == '#') continue;
    buffered_ = std::move(tokens);
    return &*buffered_;
  }
  eof_ = true;
  return nullptr;
}

std::vector<std::string> LineReader::next(const char* expected) {
  if (!peek()) fail(std::string("unexpected end of input, expected ") + expected);
  auto tokens = std::move(*buffered_);
  buffered_.reset();
  return tokens;
}

void LineReader::fail(const std::string& what) const { throw ParseError(line_, what); }

std::uint64_t LineReader::to_uint(const std::string& token) const {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail("expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

namespace {

void expect_keyword(LineReader& in, const std::vector<std::string>& tokens, const char* keyword,
                    std::size_t arity) {
  if (tokens.front() != keyword) in.fail(std::string("expected '") + keyword + "' header");
  if (tokens.size() != arity + 1) {
    in.fail(std::string("'") + keyword + "' takes " + std::to_string(arity) + " fields");
  }
}

template <typename Fn>
auto wrap_parameter_errors(LineReader& in, Fn&& fn) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    in.fail(e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "HG " << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

Hypergraph read_hypergraph(LineReader& in, DuplicatePolicy duplicates) {
  auto header = in.next("HG header");
  expect_keyword(in, header, "HG", 3);
  const auto t = in.to_uint(header[1]);
  const auto n = in.to_uint(header[2]);
  const auto m = in.to_uint(header[3]);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto tokens = in.next("edge line");
    if (tokens.size() != t) {
      in.fail("edge has " + std::to_string(tokens.size()) + " vertices, expected " +
              std::to_string(t));
    }
    Edge e;
    for (const auto& tok : tokens) {
      auto v = in.to_uint(tok);
      if (v >= n) in.fail("vertex " + tok + " out of range");
      e.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(e));
  }
  return wrap_parameter_errors(in, [&] { return Hypergraph(t, n, std::move(edges), duplicates); });
}

void write_blowup(std::ostream& out, const BlowUp& b) {
  write_hypergraph(out, b.hyper);
  out << "LABELS " << b.base_t() << ' ' << b.base_n() << ' ' << b.k << '\n';
  for (const Edge& label : b.labels) {
    for (std::size_t i = 0; i < label.size(); ++i) out << (i ? " " : "") << label[i];
    out << '\n';
  }
}

Instance read_instance(LineReader& in, DuplicatePolicy duplicates) {
  Instance inst{read_hypergraph(in, duplicates), std::nullopt};
  const auto* next = in.peek();
  if (!next || next->front() != "LABELS") return inst;
  auto header = in.next("LABELS");
  if (header.size() != 1 && header.size() != 4) in.fail("LABELS takes zero or three fields");
  const std::size_t n = inst.hyper.num_vertices();
  std::vector<Edge> labels;
  labels.reserve(n);
  std::uint64_t max_label = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto tokens = in.next("label line");
    Edge label;
    for (const auto& tok : tokens) {
      auto x = in.to_uint(tok);
      max_label = std::max(max_label, x);
      label.push_back(static_cast<VertexId>(x));
    }
    labels.push_back(std::move(label));
  }
  std::size_t base_t = 0;
  std::size_t base_n = 0;
  if (header.size() == 4) {
    base_t = in.to_uint(header[1]);
    base_n = in.to_uint(header[2]);
    if (!labels.empty() && labels.front().size() != in.to_uint(header[3])) {
      in.fail("label size does not match k");
    }
  } else {
    // Base uniformity from the span of the first edge's labels.
    if (inst.hyper.num_edges() == 0) in.fail("cannot infer base parameters without edges");
    Edge merged;
    for (VertexId v : inst.hyper.edge(0)) merged.insert(merged.end(), labels[v].begin(), labels[v].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    base_t = merged.size();
    base_n = static_cast<std::size_t>(max_label) + 1;
  }
  inst.blowup = wrap_parameter_errors(
      in, [&] { return blow_up_from_labels(inst.hyper, std::move(labels), base_t, base_n); });
  return inst;
}

void write_set_system(std::ostream& out, const SetSystem& s) {
  out << "SS " << s.universe_size() << ' ' << s.num_sets() << '\n';
  for (const auto& set : s.sets()) {
    out << set.size();
    for (Element x : set) out << ' ' << x;
    out << '\n';
  }
}

SetSystem read_set_system(LineReader& in) {
  auto header = in.next("SS header");
  expect_keyword(in, header, "SS", 2);
  const auto n = in.to_uint(header[1]);
  const auto m = in.to_uint(header[2]);
  std::vector<std::vector<Element>> sets;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto tokens = in.next("set line");
    const auto size = in.to_uint(tokens.front());
    if (tokens.size() != size + 1) in.fail("set size does not match its element count");
    std::vector<Element> set;
    for (std::size_t j = 1; j < tokens.size(); ++j) {
      auto x = in.to_uint(tokens[j]);
      if (x >= n) in.fail("element " + tokens[j] + " out of range");
      set.push_back(static_cast<Element>(x));
    }
    sets.push_back(std::move(set));
  }
  return wrap_parameter_errors(in, [&] { return SetSystem(n, std::move(sets)); });
}

namespace {

std::string format_value(const Rational& v, LpMode mode) {
  return mode == LpMode::kExact ? to_string(v) : format_double(to_double(v));
}

}  // namespace

void write_lp_solution(std::ostream& out, const LPSolution& s) {
  out << "LPSOL " << (s.kind == LpKind::kPrimal ? "primal" : "dual") << ' '
      << (s.mode == LpMode::kExact ? "exact" : "float") << ' ' << s.values.size() << '\n';
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out << i << ' ' << format_value(s.values[i], s.mode) << '\n';
  }
  out << "OBJ " << format_value(s.objective, s.mode) << '\n';
}

LPSolution read_lp_solution(LineReader& in) {
  auto header = in.next("LPSOL header");
  expect_keyword(in, header, "LPSOL", 3);
  LPSolution s;
  if (header[1] == "primal") {
    s.kind = LpKind::kPrimal;
  } else if (header[1] == "dual") {
    s.kind = LpKind::kDual;
  } else {
    in.fail("unknown LP kind '" + header[1] + "'");
  }
  if (header[2] == "exact") {
    s.mode = LpMode::kExact;
  } else if (header[2] == "float") {
    s.mode = LpMode::kFloat;
  } else {
    in.fail("unknown LP mode '" + header[2] + "'");
  }
  const auto count = in.to_uint(header[3]);
  auto parse_value = [&](const std::string& tok) -> Rational {
    if (s.mode == LpMode::kExact) {
      return wrap_parameter_errors(in, [&] { return parse_rational(tok); });
    }
    try {
      std::size_t used = 0;
      double d = std::stod(tok, &used);
      if (used != tok.size()) in.fail("bad number '" + tok + "'");
      return from_double(d);
    } catch (const std::logic_error&) {
      in.fail("bad number '" + tok + "'");
    }
  };
  for (std::uint64_t i = 0; i < count; ++i) {
    auto tokens = in.next("value line");
    if (tokens.size() != 2 || in.to_uint(tokens[0]) != i) in.fail("expected '<id> <value>'");
    s.values.push_back(parse_value(tokens[1]));
  }
  auto obj = in.next("OBJ line");
  if (obj.size() != 2 || obj[0] != "OBJ") in.fail("expected 'OBJ <value>'");
  s.objective = parse_value(obj[1]);
  return s;
}

void write_cover_result(std::ostream& out, const CoverResult& r) {
  out << "COVER " << r.size() << '\n';
  for (VertexId v : r.cover.members()) out << v << '\n';
  out << "BREAKDOWN U=" << r.breakdown.thresholded.size()
      << " SPRIME=" << r.breakdown.discrepancy.size()
      << " PARITY=" << r.breakdown.parity_class.size() << '\n';
  out << "LP OPT=" << to_string(r.lp_opt) << " RESIDUAL=" << to_string(r.lp_opt_residual) << '\n';
  out << "SEED " << r.seed << " TRIAL " << r.trial_index << '\n';
  out << "SOURCE " << (r.source == CoverSource::kRounding ? "rounding" : "threshold")
      << " ROUNDING=" << r.rounding_size << " THRESHOLD=" << r.threshold_size << '\n';
}

std::vector<VertexId> read_cover(LineReader& in) {
  auto header = in.next("COVER header");
  expect_keyword(in, header, "COVER", 1);
  const auto size = in.to_uint(header[1]);
  std::vector<VertexId> members;
  for (std::uint64_t i = 0; i < size; ++i) {
    auto tokens = in.next("cover vertex");
    if (tokens.size() != 1) in.fail("expected one vertex id per line");
    members.push_back(static_cast<VertexId>(in.to_uint(tokens[0])));
  }
  while (const auto* tokens = in.peek()) {
    const auto& key = tokens->front();
    if (key != "BREAKDOWN" && key != "LP" && key != "SEED" && key != "SOURCE") break;
    in.next("cover summary");
  }
  return members;
}

void write_greedy_trace(std::ostream& out, const GreedyTrace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << trace.picked[i] << ' ' << trace.newly_covered[i] << ' ' << trace.uncovered_after[i]
        << '\n';
  }
}

std::vector<std::size_t> read_matching(LineReader& in) {
  auto header = in.next("MATCHING header");
  expect_keyword(in, header, "MATCHING", 1);
  const auto size = in.to_uint(header[1]);
  std::vector<std::size_t> ids;
  while (ids.size() < size) {
    for (const auto& tok : in.next("matching edge ids")) ids.push_back(in.to_uint(tok));
  }
  if (ids.size() != size) in.fail("matching lists more edge ids than declared");
  return ids;
}

}  // namespace turancover
