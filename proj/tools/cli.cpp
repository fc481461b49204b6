#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "turancover/errors.hpp"
#include "turancover/generators.hpp"
#include "turancover/io.hpp"
#include "turancover/lp.hpp"
#include "turancover/oracles.hpp"
#include "turancover/rounding.hpp"
#include "turancover/setcover.hpp"

namespace turancover::cli {

namespace {

constexpr const char* kSizeGuardEnv = "TURANCOVER_SIZE_GUARD";

struct RunConfig {
  std::string input_path;
  std::string output_path;
  std::string instance_path;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::string mode = "exact";
  std::optional<std::uint64_t> size_guard;
  std::uint64_t node_limit = kDefaultNodeLimit;
  bool dedup = false;
  bool lenient = false;
  bool witness = false;
  bool no_echo = false;
  bool with_opt = false;

  std::optional<std::size_t> n, t, k, m, copies, edges_per_base;
  std::optional<double> p;
  std::size_t attempts = 200;
  std::string family = "tent";
};

class Command {
 public:
  Command(const RunConfig& cfg, std::istream& in, std::ostream& out)
      : cfg_(cfg), in_(in), out_(out) {}

  LpOptions lp_options() const {
    LpOptions lp;
    if (cfg_.mode == "exact") {
      lp.mode = LpMode::kExact;
    } else if (cfg_.mode == "float") {
      lp.mode = LpMode::kFloat;
    } else {
      throw ParameterError("--mode must be exact or float");
    }
    if (cfg_.size_guard) {
      lp.size_guard = *cfg_.size_guard;
    } else if (const char* env = std::getenv(kSizeGuardEnv)) {
      try {
        std::size_t used = 0;
        lp.size_guard = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::logic_error&) {
        throw ParameterError(std::string(kSizeGuardEnv) + " is not a non-negative integer");
      }
    }
    return lp;
  }

  std::uint64_t seed() const {
    if (cfg_.seed) return *cfg_.seed;
    if (!cfg_.lenient) throw ParameterError("randomized commands require --seed (or --no-strict)");
    return 0;
  }

  template <typename T>
  T need(const std::optional<T>& value, const char* flag) const {
    if (!value) throw ParameterError(std::string("missing required ") + flag);
    return *value;
  }

  DuplicatePolicy duplicates() const {
    return cfg_.dedup ? DuplicatePolicy::kMerge : DuplicatePolicy::kReject;
  }

  /// Input stream: --input file or stdin.
  LineReader& reader() {
    if (!reader_) {
      if (!cfg_.input_path.empty()) {
        file_.open(cfg_.input_path);
        if (!file_) throw ParameterError("cannot open " + cfg_.input_path);
        reader_.emplace(file_);
      } else {
        reader_.emplace(in_);
      }
    }
    return *reader_;
  }

  Instance read_instance_input() { return turancover::read_instance(reader(), duplicates()); }

  std::ostream& out() { return out_; }
  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ifstream file_;
  std::optional<LineReader> reader_;
};

std::vector<Hypergraph> load_family(const std::string& source, DuplicatePolicy duplicates) {
  if (source == "tent") return {canonical_tent()};
  std::ifstream file(source);
  if (!file) throw ParameterError("cannot open family file " + source);
  LineReader reader(file);
  std::vector<Hypergraph> family;
  while (!reader.at_end()) family.push_back(read_hypergraph(reader, duplicates));
  if (family.empty()) throw ParameterError("family file " + source + " holds no hypergraph");
  return family;
}

/// Base hypergraph for the rounding commands: the base of a blow-up input, or
/// the input itself.
Hypergraph rounding_base(const Instance& inst, std::size_t expected_k_offset, bool pairs) {
  if (!inst.blowup) return inst.hyper;
  const auto& b = *inst.blowup;
  const std::size_t want = pairs ? 2 : b.base_t() - expected_k_offset;
  if (b.k != want) {
    throw ParameterError("input blow-up has k=" + std::to_string(b.k) + ", this rounding needs k=" +
                         std::to_string(want));
  }
  return b.base;
}

/// Re-expresses a cover of `canonical` in the vertex ids of `given`.
CoverResult relabel(CoverResult r, const BlowUp& canonical, const BlowUp& given) {
  if (canonical.labels == given.labels) return r;
  std::map<Edge, VertexId> id_of;
  for (VertexId v = 0; v < given.labels.size(); ++v) id_of[given.labels[v]] = v;
  auto map_ids = [&](std::vector<VertexId> ids) {
    for (auto& v : ids) v = id_of.at(canonical.labels[v]);
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  r.cover = VertexSet(map_ids(r.cover.members()), given.hyper.num_vertices());
  r.breakdown.thresholded = map_ids(r.breakdown.thresholded);
  r.breakdown.discrepancy = map_ids(r.breakdown.discrepancy);
  r.breakdown.parity_class = map_ids(r.breakdown.parity_class);
  return r;
}

void print_ids(std::ostream& out, const char* tag, const auto& ids) {
  out << tag << ' ' << ids.size() << '\n';
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  out << '\n';
}

int cmd_gen(Command& c, const std::string& kind) {
  const auto& cfg = c.cfg();
  if (kind == "complete") {
    write_hypergraph(c.out(), complete(c.need(cfg.n, "--n"), c.need(cfg.t, "--t")));
  } else if (kind == "random") {
    const auto n = c.need(cfg.n, "--n");
    const auto t = c.need(cfg.t, "--t");
    if (cfg.m && cfg.p) throw ParameterError("give either --p or --m, not both");
    if (cfg.m) {
      write_hypergraph(c.out(), random_hypergraph_edges(n, t, *cfg.m, c.seed()));
    } else {
      write_hypergraph(c.out(), random_hypergraph(n, t, c.need(cfg.p, "--p or --m"), c.seed()));
    }
  } else if (kind == "lines") {
    write_hypergraph(c.out(), combinatorial_lines(c.need(cfg.n, "--n")));
  } else if (kind == "hard-setcover") {
    write_set_system(c.out(), greedy_hard_setsystem(c.need(cfg.k, "--k")));
  } else if (kind == "ffree") {
    const auto family = load_family(cfg.family, c.duplicates());
    write_hypergraph(c.out(), f_free_random(c.need(cfg.n, "--n"), c.need(cfg.t, "--t"), family,
                                            cfg.p, c.seed()));
  } else if (kind == "simplify") {
    const auto g = read_hypergraph(c.reader(), c.duplicates());
    write_hypergraph(c.out(), simplify_reduction(g, c.need(cfg.copies, "--B"),
                                                 c.need(cfg.edges_per_base, "--P"), c.seed()));
  } else if (kind == "simple-setcover") {
    write_set_system(c.out(), random_simple_setsystem(c.need(cfg.n, "--n"), cfg.attempts, c.seed()));
  }
  return 0;
}

int cmd_blowup(Command& c) {
  const auto g = read_hypergraph(c.reader(), c.duplicates());
  write_blowup(c.out(), blow_up(g, c.need(c.cfg().k, "--k")));
  return 0;
}

int cmd_lp(Command& c, const std::string& kind) {
  const auto inst = c.read_instance_input();
  const auto pair = solve_lp_pair(inst.hyper, c.lp_options());
  write_lp_solution(c.out(), kind == "vc" ? pair.primal : pair.dual);
  return 0;
}

int cmd_round(Command& c, const std::string& kind) {
  const auto& cfg = c.cfg();
  const auto inst = c.read_instance_input();
  const auto lp = c.lp_options();
  CoverResult result;
  std::optional<BlowUp> produced;
  if (kind == "threshold") {
    result = fallback_threshold_cover(inst.hyper, lp);
  } else if (kind == "ahtp") {
    const auto g = rounding_base(inst, 1, false);
    produced = blow_up(g, g.uniformity() - 1);
    result = ahtp_cover(g, RoundingParams::make(g.uniformity(), c.seed(), cfg.trials), lp);
  } else if (kind == "t2") {
    const auto g = rounding_base(inst, 0, true);
    produced = blow_up(g, 2);
    result = t2_cover(g, c.seed(), cfg.trials, lp);
  } else if (kind == "colorcode") {
    const auto g = rounding_base(inst, 1, false);
    produced = blow_up(g, g.uniformity() - 1);
    result = color_code_cover(*produced, c.seed(), cfg.trials);
  }
  if (produced && inst.blowup) result = relabel(std::move(result), *produced, *inst.blowup);
  write_cover_result(c.out(), result);
  if (!cfg.no_echo) {
    if (inst.blowup) {
      write_blowup(c.out(), *inst.blowup);
    } else if (produced) {
      write_blowup(c.out(), *produced);
    } else {
      write_hypergraph(c.out(), inst.hyper);
    }
  }
  return 0;
}

int cmd_oracle(Command& c, const std::string& kind) {
  const auto& cfg = c.cfg();
  const auto inst = c.read_instance_input();
  const auto& h = inst.hyper;
  auto& out = c.out();
  if (kind == "tau") {
    const auto r = brute_tau(h, cfg.node_limit);
    out << r.tau << '\n';
    if (cfg.witness) print_ids(out, "WITNESS", r.cover.members());
  } else if (kind == "nu") {
    const auto r = brute_nu(h, cfg.node_limit);
    out << r.nu << '\n';
    if (cfg.witness) print_ids(out, "WITNESS", r.matching);
  } else if (kind == "alpha") {
    const auto r = max_independent_set(h, cfg.node_limit);
    out << r.alpha << '\n';
    if (cfg.witness) print_ids(out, "WITNESS", r.members);
  } else if (kind == "taustar") {
    const auto lp = c.lp_options();
    const auto x = solve_vc_lp(h, lp);
    out << (lp.mode == LpMode::kExact ? to_string(x.objective) : format_double(to_double(x.objective)))
        << '\n';
  } else if (kind == "tents") {
    const auto tents = find_tents(h);
    out << tents.size() << '\n';
    if (cfg.witness) {
      for (const auto& tent : tents) {
        out << tent.legs[0] << ' ' << tent.legs[1] << ' ' << tent.legs[2] << ' ' << tent.base << '\n';
      }
    }
  } else if (kind == "rho") {
    out << to_string(rho(h)) << '\n';
  }
  return 0;
}

int cmd_setcover(Command& c) {
  const auto s = read_set_system(c.reader());
  const auto trace = greedy_set_cover(s);
  write_greedy_trace(c.out(), trace);
  if (c.cfg().with_opt) {
    const auto opt = brute_force_set_cover(s);
    c.out() << "OPT " << opt << '\n';
    const Rational ratio = is_simple_system(s)
                               ? greedy_ratio_check(s, opt)
                               : Rational(static_cast<long>(trace.size()), static_cast<long>(opt));
    c.out() << "RATIO " << to_string(ratio) << '\n';
  }
  return 0;
}

int verdict(Command& c, bool ok, const std::string& why) {
  if (ok) {
    c.out() << "OK\n";
    return 0;
  }
  c.out() << "FAIL " << why << '\n';
  return static_cast<int>(ExitCode::kVerification);
}

/// Reads a witness block and an instance in either order, the instance
/// optionally coming from --instance.
template <typename ReadWitness>
auto witness_and_instance(Command& c, const char* keyword, ReadWitness&& read_witness) {
  auto& reader = c.reader();
  std::optional<Instance> inst;
  const auto* head = reader.peek();
  if (!head) reader.fail(std::string("expected a ") + keyword + " block");
  if (head->front() != keyword) inst = c.read_instance_input();
  auto witness = read_witness(reader);
  if (!inst) {
    if (!c.cfg().instance_path.empty()) {
      std::ifstream file(c.cfg().instance_path);
      if (!file) throw ParameterError("cannot open " + c.cfg().instance_path);
      LineReader other(file);
      inst = read_instance(other, c.duplicates());
    } else {
      inst = c.read_instance_input();
    }
  }
  return std::make_pair(std::move(*inst), std::move(witness));
}

int cmd_verify(Command& c, const std::string& kind) {
  if (kind == "cover") {
    auto [inst, members] = witness_and_instance(c, "COVER", [](LineReader& r) { return read_cover(r); });
    for (VertexId v : members) {
      if (v >= inst.hyper.num_vertices()) return verdict(c, false, "vertex out of range");
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      return verdict(c, false, "cover repeats a vertex");
    }
    const VertexSet s(members, inst.hyper.num_vertices());
    return verdict(c, is_vertex_cover(inst.hyper, s), "some edge is not covered");
  }
  if (kind == "matching") {
    auto [inst, ids] = witness_and_instance(c, "MATCHING", [](LineReader& r) { return read_matching(r); });
    for (auto id : ids) {
      if (id >= inst.hyper.num_edges()) return verdict(c, false, "edge id out of range");
    }
    return verdict(c, is_matching(inst.hyper, ids), "selected edges intersect");
  }
  // simple: HG or SS input
  auto& reader = c.reader();
  const auto* head = reader.peek();
  if (head && head->front() == "SS") {
    return verdict(c, is_simple_system(read_set_system(reader)), "two sets share two elements");
  }
  return verdict(c, is_simple(c.read_instance_input().hyper), "two edges share two vertices");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph Turan cover toolkit: generators, exact LP, rounding, oracles."};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("-i,--input", cfg.input_path, "Read input from this file instead of stdin");
  app.add_option("-o,--output", cfg.output_path, "Write output to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "Root seed (required by randomized commands)");
  app.add_option("--trials", cfg.trials, "Independent colorings to try")->check(CLI::PositiveNumber);
  app.add_option("--mode", cfg.mode, "LP arithmetic")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--size-guard", cfg.size_guard, "Exact LP limit on n*m (env " +
                                                      std::string(kSizeGuardEnv) + ")");
  app.add_option("--limit", cfg.node_limit, "Search-node budget for the brute-force oracles");
  app.add_flag("--dedup", cfg.dedup, "Merge duplicate edges instead of rejecting them");
  app.add_flag("--no-strict", cfg.lenient, "Allow randomized commands without --seed (seed 0)");
  app.add_flag("--witness", cfg.witness, "Oracles: also print a witness block");
  app.add_flag("--no-echo", cfg.no_echo, "round: do not append the instance after the cover");
  app.add_flag("--opt", cfg.with_opt, "setcover greedy: also brute-force the optimum and ratio");
  app.add_option("--n", cfg.n, "Vertex count / cube dimension / universe size");
  app.add_option("--t", cfg.t, "Uniformity");
  app.add_option("--k", cfg.k, "Blow-up order / hard instance size");
  app.add_option("--m", cfg.m, "Number of random edges");
  app.add_option("--p", cfg.p, "Edge probability");
  app.add_option("--B", cfg.copies, "Cloud size for simplify");
  app.add_option("--P", cfg.edges_per_base, "Edges per base edge for simplify");
  app.add_option("--attempts", cfg.attempts, "Random set proposals for simple-setcover");
  app.add_option("--family", cfg.family, "Forbidden family: 'tent' or a file of HG blocks");
  app.add_option("--instance", cfg.instance_path, "verify: read the instance from this file");

  std::string group, kind;
  auto add_group = [&](const std::string& name, const std::string& help,
                       std::vector<std::string> kinds) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&group, name] { group = name; });
    if (!kinds.empty()) {
      sub->require_subcommand(1);
      for (const auto& k : kinds) {
        auto* leaf = sub->add_subcommand(k);
        leaf->fallthrough();
        leaf->callback([&kind, k] { kind = k; });
      }
    }
  };
  add_group("gen", "Generate an instance",
            {"complete", "random", "lines", "hard-setcover", "ffree", "simplify", "simple-setcover"});
  add_group("blowup", "k-blow-up of an HG instance", {});
  add_group("lp", "Solve the cover LP or its matching dual", {"vc", "matching"});
  add_group("round", "Rounding algorithms on a blow-up", {"ahtp", "t2", "colorcode", "threshold"});
  add_group("oracle", "Exact brute-force quantities", {"tau", "nu", "taustar", "tents", "rho", "alpha"});
  add_group("setcover", "Greedy set cover", {"greedy"});
  add_group("verify", "Check a cover, matching or simplicity", {"cover", "matching", "simple"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kParameter);
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    Command c(cfg, in, buffer);
    if (group == "gen") {
      status = cmd_gen(c, kind);
    } else if (group == "blowup") {
      status = cmd_blowup(c);
    } else if (group == "lp") {
      status = cmd_lp(c, kind);
    } else if (group == "round") {
      status = cmd_round(c, kind);
    } else if (group == "oracle") {
      status = cmd_oracle(c, kind);
    } else if (group == "setcover") {
      status = cmd_setcover(c);
    } else if (group == "verify") {
      status = cmd_verify(c, kind);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  }

  if (!cfg.output_path.empty()) {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.output_path << '\n';
      return static_cast<int>(ExitCode::kParameter);
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace turancover::cli
