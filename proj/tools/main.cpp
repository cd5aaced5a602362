// relaxcol: command-line front end for the relaxed-coloring toolkit.
// Subcommands: solve, reduce, verify, eval, gen. JSON reports on stdout,
// errors on stderr, stable exit codes (see README).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relaxcol/errors.hpp"
#include "relaxcol/io.hpp"
#include "relaxcol/reductions.hpp"
#include "relaxcol/solvers.hpp"
#include "relaxcol/verify.hpp"

namespace rc = relaxcol;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitBadParams = 5;
constexpr int kExitViolated = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rc::ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct SolveArgs {
  std::string instance_path;
  std::string method = "exact";
  std::string objective = "covered";
  std::vector<double> p_values;
  std::uint64_t seed = 0;
  std::int64_t iters = 10000;
  int restarts = 0;
  std::int64_t decision_c = -1;
  bool has_decision = false;
  std::string out_path;
  std::string id;
  bool timing = false;
};

json kappa_histogram(const std::vector<std::int64_t>& kappa) {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t kv : kappa) ++hist[kv];
  json rows = json::array();
  for (const auto& [value, count] : hist) rows.push_back({value, count});
  return rows;
}

json cost_rows(const rc::Instance& inst, const rc::Coloring& c,
               const std::vector<double>& ps) {
  json rows = json::array();
  for (double p : ps) {
    double cost = std::visit(
        [&](const auto& g) { return rc::generalized_cost(g, c, {p}); }, inst.graph);
    rows.push_back({p, cost});
  }
  return rows;
}

json base_report(const rc::Instance& inst, const std::string& id) {
  json rep;
  rep["instance"] = id;
  rep["n"] = inst.vertex_count();
  rep["m"] = inst.edge_total();
  rep["multigraph"] = inst.is_multigraph();
  rep["scheme"] = {{"k", inst.scheme.k}, {"r", inst.scheme.r}};
  return rep;
}

int cmd_solve(const SolveArgs& args) {
  auto started = std::chrono::steady_clock::now();
  rc::Instance inst = rc::parse_instance(read_file(args.instance_path));
  const rc::ColorScheme s = inst.scheme;

  rc::SolveOutcome outcome;
  if (args.method == "exact") {
    outcome = std::visit([&](const auto& g) { return rc::solve_exact(g, s); }, inst.graph);
  } else if (args.method == "structural12") {
    if (inst.is_multigraph())
      throw std::invalid_argument("structural12 needs a simple graph instance");
    if (!(s.k == 2 && s.r == 1))
      throw std::invalid_argument("structural12 needs scheme k=2 r=1");
    outcome = rc::solve_r12_structural(std::get<rc::Graph>(inst.graph));
  } else if (args.method == "half") {
    if (inst.is_multigraph())
      throw std::invalid_argument("half needs a simple graph instance");
    outcome = rc::solve_half_approx(std::get<rc::Graph>(inst.graph), s);
  } else if (args.method == "greedy") {
    outcome = std::visit([&](const auto& g) { return rc::solve_greedy(g, s); }, inst.graph);
  } else if (args.method == "local") {
    rc::Objective obj;
    if (args.objective == "covered")
      obj.kind = rc::Objective::Kind::covered;
    else if (args.objective == "generalized")
      obj.kind = rc::Objective::Kind::generalized;
    else if (args.objective == "defective")
      obj.kind = rc::Objective::Kind::defective;
    else
      throw std::invalid_argument("unknown objective '" + args.objective + "'");
    obj.p = args.p_values.empty() ? 1.0 : args.p_values.front();
    rc::SearchBudget budget{args.iters, args.seed, args.restarts};
    outcome = std::visit(
        [&](const auto& g) { return rc::solve_local_search(g, s, obj, budget); }, inst.graph);
  } else {
    throw std::invalid_argument("unknown method '" + args.method + "'");
  }

  if (!outcome) {
    std::cerr << "no feasible coloring exists for scheme k=" << s.k << " r=" << s.r << "\n";
    return kExitInfeasible;
  }
  const rc::Solution& sol = *outcome;

  std::string out_path = args.out_path.empty() ? args.instance_path + ".sol" : args.out_path;
  write_file(out_path, rc::serialize_coloring(sol.coloring));

  auto profile = std::visit(
      [&](const auto& g) { return rc::conflict_profile(g, sol.coloring); }, inst.graph);

  json rep = base_report(inst, args.id.empty() ? args.instance_path : args.id);
  rep["method"] = args.method;
  rep["feasible"] = true;
  rep["value"] = sol.value;
  rep["conflicts"] = profile.conflicts;
  rep["kappa_histogram"] = kappa_histogram(profile.kappa);
  std::vector<double> ps = args.p_values.empty() ? std::vector<double>{1.0} : args.p_values;
  rep["cost"] = cost_rows(inst, sol.coloring, ps);
  rep["seed"] = args.seed;
  rep["coloring_file"] = out_path;
  if (args.has_decision)
    rep["decision"] = {{"c", args.decision_c},
                       {"answer", sol.value >= args.decision_c ? "yes" : "no"}};
  if (args.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    rep["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  std::cout << rep.dump() << "\n";
  return kExitOk;
}

struct ReduceArgs {
  std::string instance_path;
  std::string reduction;
  std::int64_t q = 0;  // 0: default n^2
  int k = 3;
  int r = 2;
  std::string out_path;
  std::string sidecar_path;
};

int cmd_reduce(const ReduceArgs& args) {
  rc::Instance inst = rc::parse_instance(read_file(args.instance_path));
  if (inst.is_multigraph())
    throw std::invalid_argument("reductions start from a simple graph instance");
  const rc::Graph& g = std::get<rc::Graph>(inst.graph);
  const int n = g.vertex_count();

  std::string sidecar = args.sidecar_path.empty() ? args.out_path + ".json" : args.sidecar_path;
  json meta;
  std::string instance_text;

  if (args.reduction == "clique-augment") {
    std::int64_t q = args.q > 0 ? args.q : static_cast<std::int64_t>(n) * n;
    if (q < 1) throw std::invalid_argument("clique-augment needs q >= 1 (n may be 0)");
    rc::AugmentedGraph ag = rc::augment_with_clique(g, q);
    instance_text = rc::serialize_instance(ag.graph, rc::ColorScheme{2, 1});
    meta = {{"reduction", "clique-augment"},
            {"original_n", ag.original_n},
            {"clique_first", ag.clique_first()},
            {"clique_size", ag.clique_size}};
  } else if (args.reduction == "lred-multigraph") {
    if (args.r < 2 || args.r > args.k)
      throw std::invalid_argument("lred needs 2 <= r <= k");
    if (args.k == 2) {
      // identity at k = 2: the problem already is maxcut
      rc::Multigraph mg = rc::Multigraph::from_graph(g);
      instance_text = rc::serialize_instance(mg, rc::ColorScheme{2, 2});
      meta = {{"reduction", "lred-multigraph"}, {"original_n", n}, {"k", 2},
              {"clique_first", n},              {"clique_count", 0}};
    } else {
      rc::LRedMultigraph lm = rc::build_lred_multigraph(g, args.k);
      instance_text =
          rc::serialize_instance(lm.multigraph, rc::ColorScheme{args.k, args.r});
      meta = {{"reduction", "lred-multigraph"},
              {"original_n", lm.original_n},
              {"k", lm.k},
              {"clique_first", lm.clique_first()},
              {"clique_count", lm.clique_count()}};
    }
  } else if (args.reduction == "lred-expand") {
    if (args.r < 2 || args.r > args.k)
      throw std::invalid_argument("lred needs 2 <= r <= k");
    if (args.k == 2) {
      instance_text = rc::serialize_instance(g, rc::ColorScheme{2, 2});
      meta = {{"reduction", "lred-expand"}, {"original_n", n},       {"multigraph_n", n},
              {"k", 2},                     {"copies", json::array()}};
    } else {
      rc::LRedMultigraph lm = rc::build_lred_multigraph(g, args.k);
      rc::GadgetMap gm = rc::expand_multigraph(lm);
      instance_text =
          rc::serialize_instance(gm.expanded_graph, rc::ColorScheme{args.k, args.r});
      json copies = json::array();
      for (const rc::GadgetCopy& copy : gm.copies)
        copies.push_back({{"u", copy.u}, {"v", copy.v}, {"internal", copy.internal}});
      meta = {{"reduction", "lred-expand"},
              {"original_n", gm.original_n},
              {"multigraph_n", gm.multigraph_n},
              {"k", gm.k},
              {"copies", copies}};
    }
  } else {
    throw std::invalid_argument("unknown reduction '" + args.reduction + "'");
  }

  write_file(args.out_path, instance_text);
  write_file(sidecar, meta.dump(2) + "\n");
  json rep = {{"instance", args.instance_path},
              {"reduction", args.reduction},
              {"output", args.out_path},
              {"sidecar", sidecar}};
  std::cout << rep.dump() << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 20;
  int n_max = 5;
  double edge_prob = 0.5;
  int k = 3;
  int r = 2;
  int trials = 0;
  int k_min = 2;
  int k_max = 5;
  std::int64_t q = 0;  // 0: n^2; smaller overrides surface honest violations
};

json witness_json(const rc::Witness& w) {
  json out;
  out["note"] = w.note;
  if (w.graph) out["graph"] = rc::serialize_instance(*w.graph, rc::ColorScheme{2, 2});
  if (w.multigraph)
    out["multigraph"] = rc::serialize_instance(*w.multigraph, rc::ColorScheme{2, 2});
  if (w.coloring) out["coloring"] = *w.coloring;
  if (w.second_coloring) out["second_coloring"] = *w.second_coloring;
  return out;
}

json certificate_json(const rc::ReductionCertificate& cert) {
  json out;
  out["property"] = cert.property;
  out["instance"] = cert.instance;
  out["holds"] = cert.holds;
  out["flagged"] = cert.flagged;
  out["measured_alpha"] = cert.measured_alpha ? json(*cert.measured_alpha) : json(nullptr);
  out["measured_beta"] = cert.measured_beta ? json(*cert.measured_beta) : json(nullptr);
  out["witness"] = cert.witness ? witness_json(*cert.witness) : json(nullptr);
  return out;
}

int cmd_verify(const VerifyArgs& args) {
  std::vector<rc::ReductionCertificate> certs;
  auto run_suite = [&](const std::string& suite) {
    if (suite == "gadget") {
      for (int k = args.k_min; k <= args.k_max; ++k) certs.push_back(rc::check_gadget(k));
    } else if (suite == "mis") {
      for (int i = 0; i < args.count; ++i) {
        int n = 1 + i % args.n_max;
        rc::Graph g = rc::random_graph({n, args.edge_prob, args.seed + i});
        std::int64_t q = args.q > 0 ? args.q : static_cast<std::int64_t>(n) * n;
        certs.push_back(rc::check_mis_equivalence(g, q));
      }
    } else if (suite == "collapse") {
      for (int i = 0; i < args.count; ++i) {
        int n = 1 + i % args.n_max;
        rc::Graph g = rc::random_graph({n, args.edge_prob, args.seed + i});
        certs.push_back(rc::check_collapse_ratio(g, args.k, args.trials, args.seed + i));
      }
    } else if (suite == "lred") {
      int n_cap = std::min(args.n_max, 4);
      for (int i = 0; i < args.count; ++i) {
        int n = i % (n_cap + 1);
        rc::Graph g = rc::random_graph({n, args.edge_prob, args.seed + i});
        certs.push_back(
            rc::check_lreduction_gap(g, args.k, args.r, args.trials, args.seed + i));
      }
    } else if (suite == "cost") {
      for (int i = 0; i < args.count; ++i) {
        int n = 2 + i % std::max(1, args.n_max);
        rc::Graph g = rc::random_graph({n, args.edge_prob, args.seed + i});
        certs.push_back(
            rc::check_cost_limits(g, args.trials > 0 ? args.trials : 200, args.seed + i));
      }
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  };

  if (args.suite == "all") {
    for (const char* s : {"gadget", "mis", "collapse", "lred", "cost"}) run_suite(s);
  } else {
    run_suite(args.suite);
  }

  bool all_hold = true;
  for (const auto& cert : certs) {
    std::cout << certificate_json(cert).dump() << "\n";
    all_hold = all_hold && cert.holds;
  }
  return all_hold ? kExitOk : kExitViolated;
}

struct EvalArgs {
  std::string instance_path;
  std::string coloring_path;
  std::vector<double> p_values;
  std::string id;
  bool timing = false;
};

int cmd_eval(const EvalArgs& args) {
  auto started = std::chrono::steady_clock::now();
  rc::Instance inst = rc::parse_instance(read_file(args.instance_path));
  rc::Coloring c = rc::parse_coloring(read_file(args.coloring_path), inst.vertex_count(),
                                      inst.scheme.k);

  auto profile =
      std::visit([&](const auto& g) { return rc::conflict_profile(g, c); }, inst.graph);
  bool feasible = std::visit(
      [&](const auto& g) { return rc::is_feasible(g, c, inst.scheme); }, inst.graph);

  json rep = base_report(inst, args.id.empty() ? args.instance_path : args.id);
  rep["coloring_file"] = args.coloring_path;
  rep["feasible"] = feasible;
  rep["value"] = profile.covered;
  rep["conflicts"] = profile.conflicts;
  rep["kappa_histogram"] = kappa_histogram(profile.kappa);
  std::vector<double> ps = args.p_values.empty() ? std::vector<double>{1.0} : args.p_values;
  rep["cost"] = cost_rows(inst, c, ps);
  if (args.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    rep["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  std::cout << rep.dump() << "\n";
  return kExitOk;
}

struct GenArgs {
  int n = 0;
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
  int k = 2;
  int r = 2;
  std::string out_path;
};

int cmd_gen(const GenArgs& args) {
  rc::ColorScheme s{args.k, args.r};
  rc::validate_scheme(s);
  rc::Graph g = rc::random_graph({args.n, args.edge_prob, args.seed});
  std::string text = rc::serialize_instance(g, s);
  if (args.out_path.empty())
    std::cout << text;
  else
    write_file(args.out_path, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relaxed graph coloring: solvers, reductions, verification"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance and emit a coloring");
  solve->add_option("instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--method", solve_args.method, "exact|structural12|greedy|local|half")
      ->check(CLI::IsMember({"exact", "structural12", "greedy", "local", "half"}));
  solve->add_option("--objective", solve_args.objective, "covered|generalized|defective")
      ->check(CLI::IsMember({"covered", "generalized", "defective"}));
  solve->add_option("--p", solve_args.p_values, "cost exponent(s) to report");
  solve->add_option("--seed", solve_args.seed, "search seed");
  solve->add_option("--iters", solve_args.iters, "local search move budget");
  solve->add_option("--restarts", solve_args.restarts, "local search restarts");
  auto* copt = solve->add_option("--c", solve_args.decision_c,
                                 "decision threshold: report whether value >= c");
  solve->add_option("-o,--out", solve_args.out_path, "coloring output path");
  solve->add_option("--id", solve_args.id, "instance id used in the report");
  solve->add_flag("--timing", solve_args.timing, "include wall time in the report");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "transform an instance");
  reduce->add_option("instance", reduce_args.instance_path, "instance file")->required();
  reduce
      ->add_option("--reduction", reduce_args.reduction,
                   "clique-augment|lred-multigraph|lred-expand")
      ->required()
      ->check(CLI::IsMember({"clique-augment", "lred-multigraph", "lred-expand"}));
  reduce->add_option("--q", reduce_args.q, "clique size (default n^2)");
  reduce->add_option("--k", reduce_args.k, "color count for lred reductions");
  reduce->add_option("--r", reduce_args.r, "relaxed colors on the emitted scheme");
  reduce->add_option("-o,--out", reduce_args.out_path, "output instance path")->required();
  reduce->add_option("--sidecar", reduce_args.sidecar_path,
                     "metadata path (default: out path + .json)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run certification suites");
  verify->add_option("--suite", verify_args.suite, "gadget|mis|collapse|lred|cost|all")
      ->required()
      ->check(CLI::IsMember({"gadget", "mis", "collapse", "lred", "cost", "all"}));
  verify->add_option("--seed", verify_args.seed, "base seed");
  verify->add_option("--count", verify_args.count, "instances per suite");
  verify->add_option("--n-max", verify_args.n_max, "largest vertex count");
  verify->add_option("--edge-prob", verify_args.edge_prob, "edge probability");
  verify->add_option("--k", verify_args.k, "colors for collapse/lred");
  verify->add_option("--r", verify_args.r, "relaxed colors for lred");
  verify->add_option("--trials", verify_args.trials, "random trials (0: exhaustive)");
  verify->add_option("--k-min", verify_args.k_min, "smallest gadget k");
  verify->add_option("--k-max", verify_args.k_max, "largest gadget k");
  verify->add_option("--q", verify_args.q, "clique size for the mis suite (default n^2)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a coloring file");
  eval->add_option("instance", eval_args.instance_path, "instance file")->required();
  eval->add_option("coloring", eval_args.coloring_path, "coloring file")->required();
  eval->add_option("--p", eval_args.p_values, "cost exponent(s) to report");
  eval->add_option("--id", eval_args.id, "instance id used in the report");
  eval->add_flag("--timing", eval_args.timing, "include wall time in the report");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--edge-prob", gen_args.edge_prob, "edge probability");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--k", gen_args.k, "scheme color count");
  gen->add_option("--r", gen_args.r, "scheme relaxed colors");
  gen->add_option("-o,--out", gen_args.out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  solve_args.has_decision = copt->count() > 0;

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*reduce) return cmd_reduce(reduce_args);
    if (*verify) return cmd_verify(verify_args);
    if (*eval) return cmd_eval(eval_args);
    if (*gen) return cmd_gen(gen_args);
  } catch (const rc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rc::TooLargeError& e) {
    std::cerr << "instance too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
