#pragma once

// Experiment front end shared by the copnum executable and the acceptance
// tests. A command takes an ExperimentSpec, produces a Table plus console
// text, and writes the table to --out as CSV or JSON.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum::harness {

using Json = nlohmann::ordered_json;

/// Invalid experiment description. field() names the offending option.
class UsageError : public std::invalid_argument {
 public:
  UsageError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentSpec {
  std::string command;
  /// Path of the key = value file the flags were merged from (not part of the meta block).
  std::string config;

  // Graph source: either --graph (file or built-in name) or a random model.
  std::string graph;
  std::string model = "gnp";
  std::size_t n = 0;
  double p = -1.0;     // negative: derive from d
  double d = 0.0;      // 0: derive from d_mode or p
  std::string d_mode;  // "", "dense" (log^3 n) or "sparse" (1.1 log n)
  std::uint64_t m = 0;

  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::string out;
  std::string format = "csv";
  /// gen: canonical edge-list destination (stdout when empty).
  std::string edges;

  // exact
  std::size_t k_max = 4;
  std::uint64_t budget = 50'000'000;
  std::string dump;

  // simulate / scaling
  std::string strategy = "auto";  // auto, dense, sparse, greedy
  std::string robber = "greedy";  // greedy, stationary
  double C = 2.0;
  double tol = 0.0;
  double eps0 = 1.0;
  double F = 1.0;
  std::size_t cops = 1;  // greedy cop baseline
  std::uint64_t horizon = 0;
  std::string traces;

  // verify-expansion
  std::string mode = "auto";  // auto, dense, sparse
  double c = 0.5;
  double expansion_tol = 0.25;
  double eps = 0.6;
  double delta = 0.05;
  std::size_t probes = 100;
  std::size_t access_probes = 10;

  // bounds
  std::size_t draws = 100000;

  // zigzag
  double grid = 0.01;

  // scaling
  std::vector<std::size_t> n_grid{400, 900, 1600, 2500};
  std::vector<double> c_grid{0.25, 0.5, 1, 2, 4, 8, 16};
  double target = 0.9;
};

/// Throws UsageError naming the first invalid field. Runs before any work.
void validate(const ExperimentSpec& spec);

/// Density actually used for random graphs of order n under this spec.
double effective_degree(const ExperimentSpec& spec, std::size_t n);

/// The key/value block embedded in every artifact. Excludes the output
/// path and thread count, which cannot change results.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentSpec& spec);

struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;  // objects keyed by column name
  Json summary = Json::object();
};

struct Artifact {
  Table table;
  /// Human-readable result printed to stdout.
  std::string console;
  /// Additional files (path, content) produced by the command.
  std::vector<std::pair<std::string, std::string>> files;
};

/// Runs one command. Throws UsageError, InputError, BudgetExceeded, ...
Artifact run(const ExperimentSpec& spec);

std::string render_csv(const ExperimentSpec& spec, const Table& table);
std::string render_json(const ExperimentSpec& spec, const Table& table);

/// Executes a command as the CLI does: writes --out (and any extra files),
/// prints the console text, reports errors as one JSON line on `err`.
/// Returns 0 on success, 2 on a usage error, 1 on any other failure.
int execute(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and executes the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Loads --graph: a built-in name such as "petersen" or an edge-list file.
Graph load_graph(const std::string& source);

}  // namespace copnum::harness
