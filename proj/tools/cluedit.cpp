// Command-line front end: recognition, the structured solvers, the
// enumeration oracle, and the packing gadget tools behind one binary.
//
// Exit codes: 0 success, 1 infeasible / out of class / failed check,
// 2 usage or input problem, 3 enumeration budget exceeded.  Errors go to
// stderr as one-line JSON {"error": ..., "kind": ...}.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cluedit/cotree.hpp"
#include "cluedit/errors.hpp"
#include "cluedit/gadget.hpp"
#include "cluedit/gen.hpp"
#include "cluedit/graph.hpp"
#include "cluedit/io.hpp"
#include "cluedit/nlc.hpp"
#include "cluedit/oracle.hpp"
#include "cluedit/tpg.hpp"

using namespace cluedit;

namespace {

int fail(int code, const std::string& kind, const std::string& message,
         const nlohmann::json& extra = nullptr) {
  nlohmann::json j;
  j["error"] = message;
  j["kind"] = kind;
  if (!extra.is_null()) j["detail"] = extra;
  std::cerr << j.dump() << "\n";
  return code;
}

nlohmann::json witness_json(const ForbiddenSubgraph& w) {
  nlohmann::json j;
  j["kind"] = w.kind == ForbiddenSubgraph::Kind::P4 ? "P4" : "C4";
  j["vertices"] = w.vertices;
  return j;
}

struct SolveOptions {
  std::string graph_path;
  std::string expr_path;
  std::string cls = "auto";  // auto | tpg | cograph | oracle
  int p = -1;
  bool at_most = false;
  bool check = false;
  std::string dump_table_path;
  unsigned long long budget = kOracleBudget;
};

void emit(long long cost, const Clustering& clustering,
          const std::string& engine) {
  std::cout << clustering_json(cost, clustering, engine) << "\n";
}

// Oracle comparison behind --check; throws BudgetExceeded upward.
bool oracle_agrees(const Graph& g, const SolveOptions& opt, long long cost) {
  if (opt.p < 0) return brute_force_optimal(g, opt.budget).cost == cost;
  auto ref = brute_force_p(g, opt.p, !opt.at_most, opt.budget);
  return ref.has_value() && ref->cost == cost;
}

int solve_on_expression(const SolveOptions& opt) {
  NlcExpression e = parse_expression(read_text_file(opt.expr_path));
  auto sol = solve_p_cluster(e, opt.p, !opt.at_most);
  if (!sol)
    return fail(1, "infeasible",
                "no clustering with exactly " + std::to_string(opt.p) +
                    " clusters");
  if (opt.check && !oracle_agrees(eval_expression(e).graph, opt, sol->cost))
    return fail(1, "mismatch", "expression solver disagrees with the oracle");
  emit(sol->cost, sol->clustering, "nlc");
  return 0;
}

int solve_tpg_engine(const Graph& g, const SolveOptions& opt) {
  TpgTableResult tr = dp_table(g);
  if (!tr.table)
    return fail(1, "not-in-class", "graph is not trivially perfect",
                witness_json(*tr.witness));
  if (!opt.dump_table_path.empty())
    write_text_file(opt.dump_table_path, dp_table_tsv(*tr.table));
  Solution sol = solve_from_table(*tr.table);
  if (opt.check && !oracle_agrees(g, opt, sol.cost))
    return fail(1, "mismatch", "table solver disagrees with the oracle");
  emit(sol.cost, sol.clustering, "tpg");
  return 0;
}

int solve_nlc_engine(const Graph& g, const SolveOptions& opt) {
  CographResult cr = build_cotree(g);
  if (!cr.is_cograph())
    return fail(1, "not-in-class", "graph is not a cograph",
                nlohmann::json{{"kind", "P4"}, {"vertices", cr.p4}});
  CotreeExpression ce = cotree_to_expression(*cr.cotree);
  auto sol = solve_p_cluster(ce.expr, opt.p, !opt.at_most);
  if (!sol)
    return fail(1, "infeasible",
                "no clustering with exactly " + std::to_string(opt.p) +
                    " clusters");
  Clustering mapped;
  for (const auto& cluster : sol->clustering) {
    std::vector<int> c;
    for (int v : cluster) c.push_back(ce.vertex_of_leaf[v]);
    mapped.push_back(std::move(c));
  }
  if (opt.check && !oracle_agrees(g, opt, sol->cost))
    return fail(1, "mismatch", "expression solver disagrees with the oracle");
  emit(sol->cost, mapped, "nlc");
  return 0;
}

int solve_oracle_engine(const Graph& g, const SolveOptions& opt) {
  if (opt.p < 0) {
    Solution sol = brute_force_optimal(g, opt.budget);
    emit(sol.cost, sol.clustering, "oracle");
    return 0;
  }
  auto sol = brute_force_p(g, opt.p, !opt.at_most, opt.budget);
  if (!sol)
    return fail(1, "infeasible",
                "no clustering with exactly " + std::to_string(opt.p) +
                    " clusters");
  emit(sol->cost, sol->clustering, "oracle");
  return 0;
}

int run_solve(const SolveOptions& opt) {
  if (opt.at_most && opt.p < 0)
    return fail(2, "usage", "--at-most requires --p");
  if (!opt.expr_path.empty()) {
    if (!opt.graph_path.empty())
      return fail(2, "usage", "give either a graph file or --expr, not both");
    if (opt.p < 0) return fail(2, "usage", "--expr requires --p");
    if (!opt.dump_table_path.empty())
      return fail(2, "usage", "only the tpg engine can dump its table");
    return solve_on_expression(opt);
  }
  if (opt.graph_path.empty())
    return fail(2, "usage", "no input graph");
  Graph g = read_graph_file(opt.graph_path);

  if (opt.cls == "tpg") {
    if (opt.p >= 0)
      return fail(2, "usage",
                  "the tpg engine solves the unrestricted problem; drop --p");
    return solve_tpg_engine(g, opt);
  }
  if (opt.cls == "cograph") {
    if (opt.p < 0) return fail(2, "usage", "--class cograph requires --p");
    return solve_nlc_engine(g, opt);
  }
  if (opt.cls == "oracle") {
    if (!opt.dump_table_path.empty())
      return fail(2, "usage", "only the tpg engine can dump its table");
    return solve_oracle_engine(g, opt);
  }

  // auto: most specific engine that applies
  if (opt.p < 0) {
    TpgTableResult tr = dp_table(g);
    if (tr.table) {
      if (!opt.dump_table_path.empty())
        write_text_file(opt.dump_table_path, dp_table_tsv(*tr.table));
      Solution sol = solve_from_table(*tr.table);
      if (opt.check && !oracle_agrees(g, opt, sol.cost))
        return fail(1, "mismatch", "table solver disagrees with the oracle");
      emit(sol.cost, sol.clustering, "tpg");
      return 0;
    }
    if (!opt.dump_table_path.empty())
      return fail(2, "usage", "only the tpg engine can dump its table");
    return solve_oracle_engine(g, opt);
  }
  if (build_cotree(g).is_cograph()) return solve_nlc_engine(g, opt);
  if (!opt.dump_table_path.empty())
    return fail(2, "usage", "only the tpg engine can dump its table");
  return solve_oracle_engine(g, opt);
}

int run_recognize(const std::string& path) {
  Graph g = read_graph_file(path);
  CographResult r = build_cotree(g);
  if (!r.is_cograph()) {
    std::cout << "neither\n"
              << "p4 " << r.p4[0] << " " << r.p4[1] << " " << r.p4[2] << " "
              << r.p4[3] << "\n";
    return 1;
  }
  bool tp = is_trivially_perfect(*r.cotree);
  std::cout << (tp ? "trivially-perfect" : "cograph") << "\n"
            << cotree_sexpr(*r.cotree) << "\n";
  return 0;
}

int run_oracle(const std::string& path, int p, bool at_most, bool all_optimal,
               unsigned long long budget) {
  if (at_most && p < 0) return fail(2, "usage", "--at-most requires --p");
  Graph g = read_graph_file(path);
  if (all_optimal) {
    if (p >= 0)
      return fail(2, "usage", "--all-optimal enumerates the unrestricted optima");
    std::vector<Clustering> all = enumerate_all_optimal(g, budget);
    nlohmann::json j;
    j["cost"] = all.empty() ? 0 : cost_of_clustering(g, all.front());
    j["count"] = all.size();
    nlohmann::json list = nlohmann::json::array();
    for (const Clustering& c : all) list.push_back(canonical_clustering(c));
    j["clusterings"] = list;
    std::cout << j.dump() << "\n";
    return 0;
  }
  SolveOptions opt;
  opt.p = p;
  opt.at_most = at_most;
  opt.budget = budget;
  return solve_oracle_engine(g, opt);
}

nlohmann::json gadget_sidecar(const PackingInstance& inst,
                              const GadgetOutput& out) {
  nlohmann::json j;
  j["a_blocks"] = out.a_blocks;
  j["b"] = inst.capacity;
  j["b_blocks"] = out.b_blocks;
  j["h"] = out.h;
  j["items"] = inst.items;
  j["k"] = inst.bins;
  j["n"] = out.graph.n();
  j["t"] = out.t;
  return j;
}

long long default_h(const PackingInstance& inst) {
  long long a = inst.total();
  return a * a + 1;
}

int run_gadget_build(const std::string& packing_path, long long h,
                     const std::string& out_path) {
  PackingInstance inst = parse_packing(read_text_file(packing_path));
  if (h < 0) h = default_h(inst);
  GadgetOutput out = build_gadget(inst, h);
  write_text_file(out_path, graph_to_text(out.graph));
  nlohmann::json sidecar = gadget_sidecar(inst, out);
  write_text_file(out_path + ".json", sidecar.dump() + "\n");
  std::cout << sidecar.dump() << "\n";
  return 0;
}

int run_gadget_verify(const std::string& packing_path, long long h,
                      unsigned long long budget) {
  PackingInstance inst = parse_packing(read_text_file(packing_path));
  if (h < 0) h = default_h(inst);
  GadgetReport rep = verify_gadget(inst, h, budget);
  nlohmann::json j;
  j["all_pass"] = rep.all_pass();
  j["c_star"] = rep.c_star;
  j["checks"] = {{"cluster_count", rep.check_cluster_count},
                 {"cost_lower_bound", rep.check_cost_lower_bound},
                 {"equal_sizes", rep.check_equal_sizes},
                 {"equality_iff_packing", rep.check_equality_iff_packing},
                 {"quotient_matches_blocks", rep.quotient_matches_blocks}};
  j["cluster_sizes"] = rep.cluster_sizes;
  j["h"] = rep.h;
  j["optimal_cluster_count"] = rep.optimal_cluster_count;
  j["packing"] = rep.packing_decision;
  j["quotient_parts"] = rep.quotient_parts;
  j["t"] = rep.t;
  std::cout << j.dump() << "\n";
  return rep.all_pass() ? 0 : 1;
}

int run_gen(int n, std::uint64_t seed, const std::string& cls, int max_arity,
            double root_one_prob, bool no_shuffle,
            const std::string& out_path) {
  CotreeGenConfig cfg;
  cfg.leaves = n;
  cfg.tpg = cls == "tpg";
  cfg.max_arity = max_arity;
  cfg.root_one_prob = root_one_prob;
  cfg.shuffle_ids = !no_shuffle;
  std::mt19937_64 rng(seed);
  Graph g = random_cograph_with(cfg, rng);
  std::string text = graph_to_text(g);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int run_eval(const std::string& expr_path) {
  NlcExpression e = parse_expression(read_text_file(expr_path));
  std::cout << graph_to_text(eval_expression(e).graph);
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    nlohmann::json pos;
    pos["line"] = e.line;
    if (e.col > 0) pos["col"] = e.col;
    return fail(2, "parse", e.what(), pos);
  } catch (const BudgetExceeded& e) {
    nlohmann::json detail;
    detail["units"] = e.units;
    detail["count"] = e.count;
    return fail(3, "budget", e.what(), detail);
  } catch (const std::invalid_argument& e) {
    return fail(2, "input", e.what());
  } catch (const std::runtime_error& e) {
    return fail(2, "io", e.what());
  } catch (const std::exception& e) {
    return fail(2, "internal", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster editing on cographs and related classes"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "minimize edits to a cluster graph, picking the right engine");
  solve->add_option("graph", solve_opt.graph_path, "graph file");
  solve->add_option("--expr", solve_opt.expr_path,
                    "expression file (k-expression input instead of a graph)");
  solve->add_option("--class", solve_opt.cls, "engine: auto|tpg|cograph|oracle")
      ->check(CLI::IsMember({"auto", "tpg", "cograph", "oracle"}));
  solve->add_option("--p", solve_opt.p, "target cluster count")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--at-most", solve_opt.at_most,
                  "allow fewer than --p clusters");
  solve->add_flag("--check", solve_opt.check,
                  "cross-check the result against the oracle");
  solve->add_option("--dump-table", solve_opt.dump_table_path,
                    "write the tpg table as TSV to this path");
  solve->add_option("--budget", solve_opt.budget,
                    "oracle partition budget")
      ->check(CLI::PositiveNumber);

  std::string recognize_path;
  CLI::App* recognize = app.add_subcommand(
      "recognize", "classify a graph and print its cotree or a witness");
  recognize->add_option("graph", recognize_path, "graph file")->required();

  std::string oracle_path;
  int oracle_p = -1;
  bool oracle_at_most = false, oracle_all = false;
  unsigned long long oracle_budget = kOracleBudget;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive search over vertex partitions");
  oracle->add_option("graph", oracle_path, "graph file")->required();
  oracle->add_option("--p", oracle_p, "target cluster count")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--at-most", oracle_at_most, "allow fewer clusters");
  oracle->add_flag("--all-optimal", oracle_all, "list every optimal clustering");
  oracle->add_option("--budget", oracle_budget, "partition budget")
      ->check(CLI::PositiveNumber);

  CLI::App* gadget = app.add_subcommand(
      "gadget", "packing-hardness gadget construction and verification");
  gadget->require_subcommand(1);
  std::string build_packing, build_out;
  long long build_h = -1;
  CLI::App* gbuild = gadget->add_subcommand(
      "build", "write the gadget graph and its block sidecar");
  gbuild->set_help_flag("--help", "print help");  // frees -h for --h below
  gbuild->add_option("packing", build_packing, "packing file")->required();
  gbuild->add_option("-o,--out", build_out, "graph output path")->required();
  gbuild->add_option("--h", build_h, "anchor clique size (default a^2 + 1)")
      ->check(CLI::PositiveNumber);
  std::string verify_packing;
  long long verify_h = -1;
  unsigned long long verify_budget = kOracleBudget;
  CLI::App* gverify = gadget->add_subcommand(
      "verify", "brute-force the gadget's optima and report the checks");
  gverify->set_help_flag("--help", "print help");
  gverify->add_option("packing", verify_packing, "packing file")->required();
  gverify->add_option("--h", verify_h, "anchor clique size (default a^2 + 1)")
      ->check(CLI::PositiveNumber);
  gverify->add_option("--budget", verify_budget, "partition budget")
      ->check(CLI::PositiveNumber);

  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_class = "cograph", gen_out;
  int gen_arity = 4;
  double gen_root_one = 0.5;
  bool gen_no_shuffle = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a random cograph or tpg");
  gen->add_option("--n", gen_n, "vertex count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "generator seed (default 1)");
  gen->add_option("--class", gen_class, "cograph|tpg")
      ->check(CLI::IsMember({"cograph", "tpg"}));
  gen->add_option("--max-arity", gen_arity, "maximum children per node")
      ->check(CLI::Range(2, 1000000));
  gen->add_option("--root-one-prob", gen_root_one,
                  "probability the root is a join")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--no-shuffle", gen_no_shuffle, "keep cotree leaf order");
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  std::string eval_path;
  CLI::App* eval = app.add_subcommand("eval", "expand an expression to a graph");
  eval->add_option("--expr", eval_path, "expression file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  if (*solve) return guarded([&] { return run_solve(solve_opt); });
  if (*recognize) return guarded([&] { return run_recognize(recognize_path); });
  if (*oracle)
    return guarded([&] {
      return run_oracle(oracle_path, oracle_p, oracle_at_most, oracle_all,
                        oracle_budget);
    });
  if (*gadget) {
    if (*gbuild)
      return guarded(
          [&] { return run_gadget_build(build_packing, build_h, build_out); });
    return guarded(
        [&] { return run_gadget_verify(verify_packing, verify_h, verify_budget); });
  }
  if (*gen)
    return guarded([&] {
      return run_gen(gen_n, gen_seed, gen_class, gen_arity, gen_root_one,
                     gen_no_shuffle, gen_out);
    });
  if (*eval) return guarded([&] { return run_eval(eval_path); });
  return fail(2, "usage", "no subcommand");
}
