#include "turancover/lp.hpp"

#include <cmath>
#include <string>

#include "turancover/errors.hpp"

namespace turancover {

std::vector<std::size_t> LPSolution::support() const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) ids.push_back(i);
  }
  return ids;
}

namespace {

template <typename Num>
struct Sign;

template <>
struct Sign<Rational> {
  double eps = 0;
  bool pos(const Rational& x) const { return x > 0; }
  bool neg(const Rational& x) const { return x < 0; }
  bool zero(const Rational& x) const { return x == 0; }
};

template <>
struct Sign<double> {
  double eps = 1e-9;
  bool pos(double x) const { return x > eps; }
  bool neg(double x) const { return x < -eps; }
  bool zero(double x) const { return std::abs(x) <= eps; }
};

/// Dense simplex tableau with the right-hand side stored beside each row.
/// The reduced-cost row and the basis bookkeeping live alongside the body.
template <typename Num>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols, Sign<Num> sign)
      : rows_(rows), cols_(cols), body_(rows * cols, Num(0)), rhs_(rows, Num(0)),
        cost_(cols, Num(0)), basis_(rows, 0), sign_(sign) {}

  Num& at(std::size_t r, std::size_t c) { return body_[r * cols_ + c]; }
  Num& rhs(std::size_t r) { return rhs_[r]; }
  Num& cost(std::size_t c) { return cost_[c]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Sign<Num>& sign() const { return sign_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Num inv = Num(1) / at(pr, pc);
    nonzero_.clear();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!sign_.zero(at(pr, c)) || c == pc) {
        at(pr, c) *= inv;
        nonzero_.push_back(c);
      } else {
        at(pr, c) = Num(0);
      }
    }
    rhs_[pr] *= inv;
    auto eliminate = [&](Num* row, Num& rhs) {
      const Num factor = row[pc];
      if (sign_.zero(factor)) {
        row[pc] = Num(0);
        return;
      }
      const Num* src = &body_[pr * cols_];
      for (std::size_t c : nonzero_) row[c] -= factor * src[c];
      rhs -= factor * rhs_[pr];
      row[pc] = Num(0);
    };
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != pr) eliminate(&body_[r * cols_], rhs_[r]);
    }
    Num objective_dummy(0);
    eliminate(cost_.data(), objective_dummy);
    basis_[pr] = pc;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Num> body_, rhs_, cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  Sign<Num> sign_;
};

struct RawPair {
  std::vector<Rational> x;  // per vertex
  std::vector<Rational> y;  // per edge
};

template <typename Num>
Rational to_rational(const Num& value, const Sign<Num>& sign) {
  if constexpr (std::is_same_v<Num, Rational>) {
    return value < 0 ? Rational(0) : value;
  } else {
    if (sign.zero(value) || value < 0) return Rational(0);
    return from_double(value);
  }
}

/// Rows = edges. Columns: active vertices, then one surplus per edge. Starts
/// from the all-surplus basis, which is dual feasible, and runs the dual
/// simplex with the smallest-index rule for both the leaving row and ties in
/// the ratio test.
template <typename Num>
RawPair solve_cover_form(const Hypergraph& h, const std::vector<VertexId>& active, Sign<Num> sign) {
  const std::size_t m = h.num_edges();
  const std::size_t na = active.size();
  std::vector<std::int64_t> column_of(h.num_vertices(), -1);
  for (std::size_t j = 0; j < na; ++j) column_of[active[j]] = static_cast<std::int64_t>(j);

  Tableau<Num> tab(m, na + m, sign);
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexId v : h.edge(e)) tab.at(e, static_cast<std::size_t>(column_of[v])) = Num(-1);
    tab.at(e, na + e) = Num(1);
    tab.rhs(e) = Num(-1);
    tab.basis(e) = na + e;
  }
  for (std::size_t j = 0; j < na; ++j) tab.cost(j) = Num(1);

  while (true) {
    std::size_t leave = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (sign.neg(tab.rhs(r)) && (leave == m || tab.basis(r) < tab.basis(leave))) leave = r;
    }
    if (leave == m) break;
    std::size_t enter = tab.cols();
    Num best(0);
    for (std::size_t c = 0; c < tab.cols(); ++c) {
      if (!sign.neg(tab.at(leave, c))) continue;
      Num ratio = tab.cost(c) / -tab.at(leave, c);
      if (enter == tab.cols() || ratio < best) {
        best = ratio;
        enter = c;
      }
    }
    if (enter == tab.cols()) throw VerificationError("covering LP reported infeasible");
    tab.pivot(leave, enter);
  }

  RawPair out{std::vector<Rational>(h.num_vertices(), Rational(0)),
              std::vector<Rational>(m, Rational(0))};
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) < na) out.x[active[tab.basis(r)]] = to_rational(tab.rhs(r), sign);
  }
  for (std::size_t e = 0; e < m; ++e) out.y[e] = to_rational(tab.cost(na + e), sign);
  return out;
}

/// Rows = active vertices. Columns: edges, then one slack per row. Starts
/// from the slack basis (feasible since b = 1) and runs the primal simplex
/// under Bland's rule.
template <typename Num>
RawPair solve_packing_form(const Hypergraph& h, const std::vector<VertexId>& active, Sign<Num> sign) {
  const std::size_t m = h.num_edges();
  const std::size_t na = active.size();
  std::vector<std::int64_t> row_of(h.num_vertices(), -1);
  for (std::size_t i = 0; i < na; ++i) row_of[active[i]] = static_cast<std::int64_t>(i);

  Tableau<Num> tab(na, m + na, sign);
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexId v : h.edge(e)) tab.at(static_cast<std::size_t>(row_of[v]), e) = Num(1);
    tab.cost(e) = Num(1);
  }
  for (std::size_t i = 0; i < na; ++i) {
    tab.at(i, m + i) = Num(1);
    tab.rhs(i) = Num(1);
    tab.basis(i) = m + i;
  }

  while (true) {
    std::size_t enter = tab.cols();
    for (std::size_t c = 0; c < tab.cols(); ++c) {
      if (sign.pos(tab.cost(c))) {
        enter = c;
        break;
      }
    }
    if (enter == tab.cols()) break;
    std::size_t leave = na;
    Num best(0);
    for (std::size_t r = 0; r < na; ++r) {
      if (!sign.pos(tab.at(r, enter))) continue;
      Num ratio = tab.rhs(r) / tab.at(r, enter);
      if (leave == na || ratio < best || (ratio == best && tab.basis(r) < tab.basis(leave))) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == na) throw VerificationError("packing LP reported unbounded");
    tab.pivot(leave, enter);
  }

  RawPair out{std::vector<Rational>(h.num_vertices(), Rational(0)),
              std::vector<Rational>(m, Rational(0))};
  for (std::size_t r = 0; r < na; ++r) {
    if (tab.basis(r) < m) out.y[tab.basis(r)] = to_rational(tab.rhs(r), sign);
  }
  for (std::size_t i = 0; i < na; ++i) out.x[active[i]] = to_rational(Num(-tab.cost(m + i)), sign);
  return out;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total(0);
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace

LpPair solve_lp_pair(const Hypergraph& h, const LpOptions& options) {
  LpPair pair;
  pair.primal.kind = LpKind::kPrimal;
  pair.dual.kind = LpKind::kDual;
  pair.primal.mode = pair.dual.mode = options.mode;
  if (h.num_edges() == 0) {
    pair.primal.values.assign(h.num_vertices(), Rational(0));
    return pair;
  }
  if (options.mode == LpMode::kExact) {
    const auto product = static_cast<std::uint64_t>(h.num_vertices()) * h.num_edges();
    if (product > options.size_guard) {
      throw ResourceError("exact LP size guard exceeded: n*m = " + std::to_string(product) +
                          " > " + std::to_string(options.size_guard));
    }
  }
  std::vector<VertexId> active;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) > 0) active.push_back(v);
  }
  const bool cover_form = h.num_edges() <= active.size();
  RawPair raw;
  if (options.mode == LpMode::kExact) {
    Sign<Rational> sign;
    raw = cover_form ? solve_cover_form(h, active, sign) : solve_packing_form(h, active, sign);
  } else {
    Sign<double> sign{options.tolerance};
    raw = cover_form ? solve_cover_form(h, active, sign) : solve_packing_form(h, active, sign);
  }
  pair.primal.values = std::move(raw.x);
  pair.dual.values = std::move(raw.y);
  pair.primal.objective = sum(pair.primal.values);
  pair.dual.objective = sum(pair.dual.values);
  if (options.mode == LpMode::kFloat) {
    // Keep float objectives representable so they survive a text round trip.
    pair.primal.objective = from_double(to_double(pair.primal.objective));
    pair.dual.objective = from_double(to_double(pair.dual.objective));
  }
  return pair;
}

LPSolution solve_vc_lp(const Hypergraph& h, const LpOptions& options) {
  return solve_lp_pair(h, options).primal;
}

LPSolution solve_matching_lp(const Hypergraph& h, const LpOptions& options) {
  return solve_lp_pair(h, options).dual;
}

SlacknessReport check_complementary_slackness(const LPSolution& primal, const LPSolution& dual,
                                              const Hypergraph& h) {
  if (primal.mode != LpMode::kExact || dual.mode != LpMode::kExact) {
    throw ParameterError("complementary slackness is only checked for exact solutions");
  }
  if (primal.kind != LpKind::kPrimal || dual.kind != LpKind::kDual) {
    throw ParameterError("expected a (primal, dual) pair");
  }
  if (primal.values.size() != h.num_vertices() || dual.values.size() != h.num_edges()) {
    throw ParameterError("solution sizes do not match the hypergraph");
  }
  SlacknessReport report;
  report.support_size = primal.support().size();
  report.support_bound = Rational(h.uniformity()) * primal.objective;
  auto fail = [&](std::string what) {
    report.passed = false;
    report.violation = std::move(what);
    return report;
  };

  std::vector<Rational> load(h.num_vertices(), Rational(0));
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (dual.values[e] < 0) return fail("edge " + std::to_string(e) + " has negative dual value");
    for (VertexId v : h.edge(e)) load[v] += dual.values[e];
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (primal.values[v] < 0) return fail("vertex " + std::to_string(v) + " has negative value");
    if (load[v] > 1) return fail("vertex " + std::to_string(v) + " dual load exceeds 1");
  }
  std::vector<Rational> coverage(h.num_edges(), Rational(0));
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) coverage[e] += primal.values[v];
    if (coverage[e] < 1) return fail("edge " + std::to_string(e) + " is not covered");
  }
  if (sum(primal.values) != primal.objective || sum(dual.values) != dual.objective) {
    return fail("objective does not match the listed values");
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (primal.values[v] > 0 && load[v] != 1) {
      return fail("vertex " + std::to_string(v) + " has positive value but slack dual constraint");
    }
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (dual.values[e] > 0 && coverage[e] != 1) {
      return fail("edge " + std::to_string(e) + " has positive dual value but slack cover constraint");
    }
  }
  if (primal.objective != dual.objective) {
    return fail("objectives differ: " + to_string(primal.objective) + " vs " +
                to_string(dual.objective));
  }
  if (Rational(report.support_size) > report.support_bound) {
    return fail("support size " + std::to_string(report.support_size) + " exceeds t * objective");
  }
  report.passed = true;
  return report;
}

}  // namespace turancover
