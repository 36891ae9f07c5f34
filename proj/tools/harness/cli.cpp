#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "copnum/errors.hpp"
#include "harness.hpp"

namespace copnum::harness {

namespace {

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f.flush()) throw std::runtime_error("failed writing " + path);
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return "input";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget";
  if (dynamic_cast<const GenerationError*>(&e)) return "generation";
  if (dynamic_cast<const IllegalMove*>(&e)) return "illegal-move";
  return "runtime";
}

void report(std::ostream& err, const std::string& kind, const std::string& field,
            const std::string& message) {
  Json record = {{"error", {{"kind", kind}, {"field", field}, {"message", message}}}};
  err << record.dump() << "\n";
}

void add_graph_options(CLI::App* sub, ExperimentSpec& s) {
  sub->add_option("--model", s.model, "Random model: gnp, gnm or regular");
  sub->add_option("--n", s.n, "Number of vertices");
  sub->add_option("--p", s.p, "Edge probability (gnp)");
  sub->add_option("--d", s.d, "Target average degree");
  sub->add_option("--d-mode", s.d_mode, "dense (d = log^3 n) or sparse (d = 1.1 log n)");
  sub->add_option("--m", s.m, "Edge count (gnm)");
}

void add_common(CLI::App* sub, ExperimentSpec& s) {
  sub->add_option("--seed", s.seed, "Experiment seed");
  sub->add_option("--trials", s.trials, "Number of independent trials");
  sub->add_option("--threads", s.threads, "Worker threads (0 = all cores)");
  sub->add_option("--out", s.out, "Result file");
  sub->add_option("--format", s.format, "csv or json");
  sub->add_option("--config", s.config, "key = value file mirroring the long flags; flags override it");
}

void add_strategy_options(CLI::App* sub, ExperimentSpec& s) {
  sub->add_option("--strategy", s.strategy, "auto, dense, sparse or greedy");
  sub->add_option("--robber", s.robber, "greedy or stationary");
  sub->add_option("--tol", s.tol, "Slack on the dense case threshold");
  sub->add_option("--eps0", s.eps0, "Radius schedule constant in (0, 1]");
  sub->add_option("--F", s.F, "Team count factor (teams = ceil(F log log n))");
  sub->add_option("--eps", s.eps, "Degree threshold constant for the stationed set");
  sub->add_option("--horizon", s.horizon, "Cop-move limit (0 = n^2)");
}

// Appends "--key value" for every config entry whose flag is not already on
// the command line, so explicit flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("config", "--config: cannot read " + path);
  auto trim = [](std::string x) {
    const auto b = x.find_first_not_of(" \t\r");
    const auto e = x.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  auto given = [&](const std::string& flag) {
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config", "--config: line " + std::to_string(lineno) + " is not key = value");
    }
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    args.push_back(flag);
    args.push_back(trim(line.substr(eq + 1)));
  }
  return args;
}

}  // namespace

int execute(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    Artifact a = run(spec);
    if (!spec.out.empty()) {
      write_file(spec.out, spec.format == "json" ? render_json(spec, a.table) : render_csv(spec, a.table));
    }
    for (const auto& [path, content] : a.files) write_file(path, content);
    out << a.console;
    return 0;
  } catch (const UsageError& e) {
    report(err, "usage", e.field(), e.what());
    return 2;
  } catch (const std::exception& e) {
    report(err, kind_of(e), "", e.what());
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ExperimentSpec s;
  CLI::App app{"Cops and robbers on random graphs: generators, solvers, strategies, verifiers"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  add_graph_options(gen, s);
  add_common(gen, s);
  gen->add_option("--edges", s.edges, "Edge-list destination (default: stdout)");

  auto* exact = app.add_subcommand("exact", "Exact cop number by retrograde analysis");
  exact->add_option("--graph", s.graph, "Edge-list file or built-in name (petersen, path-k, cycle-k, grid-RxC, ...)");
  exact->add_option("--k-max", s.k_max, "Largest cop count tried");
  exact->add_option("--budget", s.budget, "Position cap per solve");
  exact->add_option("--dump", s.dump, "Write the position table of the winning k here");
  add_common(exact, s);

  auto* sim = app.add_subcommand("simulate", "Play a cop strategy against a robber");
  add_graph_options(sim, s);
  sim->add_option("--graph", s.graph, "Play on a fixed graph instead of a random model");
  add_strategy_options(sim, s);
  sim->add_option("--C", s.C, "Team density constant");
  sim->add_option("--cops", s.cops, "Cop count for the greedy baseline");
  sim->add_option("--traces", s.traces, "Directory for per-trial JSONL traces");
  add_common(sim, s);

  auto* ver = app.add_subcommand("verify-expansion", "Expansion reports with witnesses");
  add_graph_options(ver, s);
  ver->add_option("--graph", s.graph, "Check a fixed graph instead of a random model");
  ver->add_option("--mode", s.mode, "auto, dense or sparse");
  ver->add_option("--c", s.c, "Dense lower-bound constant");
  ver->add_option("--expansion-tol", s.expansion_tol, "Dense ratio tolerance");
  ver->add_option("--eps", s.eps, "Sparse density constant");
  ver->add_option("--delta", s.delta, "Sparse radius window");
  ver->add_option("--probes", s.probes, "Probes per graph");
  ver->add_option("--access-probes", s.access_probes, "Accessibility probes per graph (sparse)");
  add_common(ver, s);

  auto* bounds = app.add_subcommand("bounds", "Tail bounds against Monte Carlo frequencies");
  bounds->add_option("--draws", s.draws, "Binomial draws per (n, p)");
  add_common(bounds, s);

  auto* zig = app.add_subcommand("zigzag", "Tabulate the zigzag exponent function");
  zig->add_option("--grid", s.grid, "Step 1/k between abscissae");
  add_common(zig, s);

  auto* scale = app.add_subcommand("scaling", "Smallest swept budget reaching a capture rate, per n");
  add_graph_options(scale, s);
  add_strategy_options(scale, s);
  scale->add_option("--n-grid", s.n_grid, "Ascending orders")->delimiter(',');
  scale->add_option("--C-grid", s.c_grid, "Ascending team constants")->delimiter(',');
  scale->add_option("--target", s.target, "Required capture rate");
  add_common(scale, s);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = merge_config(std::move(args));
  } catch (const UsageError& e) {
    report(err, "usage", e.field(), e.what());
    return 2;
  }
  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "usage", "", e.what());
    return 2;
  }
  s.command = app.get_subcommands().front()->get_name();
  return execute(s, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"copnum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace copnum::harness
