#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "copnum/version.hpp"
#include "harness.hpp"

namespace copnum::harness {

namespace {

const std::set<std::string> kCommands{"gen",   "exact",  "simulate", "verify-expansion",
                                      "bounds", "zigzag", "scaling"};

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw UsageError(field, "--" + field + ": " + message);
}

void require_one_of(const std::string& value, const std::set<std::string>& allowed,
                    const std::string& field) {
  if (allowed.count(value)) return;
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  throw UsageError(field, "--" + field + ": '" + value + "' is not one of " + list);
}

bool uses_model(const ExperimentSpec& s) {
  if (s.command == "gen" || s.command == "scaling") return true;
  return (s.command == "simulate" || s.command == "verify-expansion") && s.graph.empty();
}

std::string number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ',';
    if constexpr (std::is_floating_point_v<T>) {
      s += number(x);
    } else {
      s += std::to_string(x);
    }
  }
  return s;
}

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_float()) return number(v.get<double>());
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

void validate(const ExperimentSpec& s) {
  if (!kCommands.count(s.command)) throw UsageError("command", "unknown command '" + s.command + "'");
  require_one_of(s.format, {"csv", "json"}, "format");
  require(s.trials >= 1, "trials", "must be at least 1");

  if (s.command == "exact") {
    require(!s.graph.empty(), "graph", "exact needs a graph file or built-in name");
    require(s.k_max >= 1, "k-max", "must be at least 1");
    require(s.budget >= 1, "budget", "must be positive");
  }
  if (uses_model(s)) {
    require_one_of(s.model, {"gnp", "gnm", "regular"}, "model");
    require_one_of(s.d_mode, {"", "dense", "sparse"}, "d-mode");
    if (s.command != "scaling") require(s.n >= 2, "n", "must be at least 2");
    require(s.p < 0.0 || s.p <= 1.0, "p", "must lie in [0, 1]");
    require(std::isfinite(s.d) && s.d >= 0.0, "d", "must be a nonnegative number");
    const bool has_density = s.p >= 0.0 || s.d > 0.0 || !s.d_mode.empty() || s.m > 0;
    require(has_density || s.command == "scaling", "d", "give one of --p, --d, --d-mode or --m");
    if (s.model == "gnm") {
      require(s.p < 0.0, "p", "gnm takes --m or --d, not --p");
    }
    if (s.model == "regular") {
      require(s.p < 0.0 && s.m == 0, "model", "regular graphs take --d or --d-mode");
    }
  }
  if (s.command == "simulate" || s.command == "scaling") {
    require_one_of(s.strategy, {"auto", "dense", "sparse", "greedy"}, "strategy");
    require_one_of(s.robber, {"greedy", "stationary"}, "robber");
    require(s.C > 0.0 && std::isfinite(s.C), "C", "must be positive");
    require(s.tol >= 0.0 && s.tol < 1.0, "tol", "must lie in [0, 1)");
    require(s.eps0 > 0.0 && s.eps0 <= 1.0, "eps0", "must lie in (0, 1]");
    require(s.F > 0.0 && std::isfinite(s.F), "F", "must be positive");
    require(s.cops >= 1, "cops", "must be at least 1");
    require(s.eps > 0.0 && s.eps < 1.0, "eps", "must lie in (0, 1)");
  }
  if (s.command == "verify-expansion") {
    require_one_of(s.mode, {"auto", "dense", "sparse"}, "mode");
    require(s.c > 0.0, "c", "must be positive");
    require(s.expansion_tol >= 0.0, "expansion-tol", "must be nonnegative");
    require(s.eps > 0.0 && s.eps < 1.0, "eps", "must lie in (0, 1)");
    require(s.delta > 0.0 && s.delta < s.eps / 6.0, "delta", "must lie in (0, eps / 6)");
    require(s.probes >= 1, "probes", "must be at least 1");
  }
  if (s.command == "bounds") require(s.draws >= 1, "draws", "must be at least 1");
  if (s.command == "zigzag") {
    require(s.grid > 0.0 && s.grid <= 1.0, "grid", "must lie in (0, 1]");
    const double steps = std::round(1.0 / s.grid);
    require(std::abs(steps * s.grid - 1.0) < 1e-9, "grid", "must be 1/k for an integer k");
  }
  if (s.command == "scaling") {
    require(!s.n_grid.empty(), "n-grid", "must not be empty");
    require(std::is_sorted(s.n_grid.begin(), s.n_grid.end()) &&
                std::adjacent_find(s.n_grid.begin(), s.n_grid.end()) == s.n_grid.end(),
            "n-grid", "must be strictly ascending");
    require(s.n_grid.front() >= 4, "n-grid", "orders must be at least 4");
    require(!s.c_grid.empty(), "C-grid", "must not be empty");
    require(std::is_sorted(s.c_grid.begin(), s.c_grid.end()) && s.c_grid.front() > 0.0, "C-grid",
            "must be positive and ascending");
    require(s.target > 0.0 && s.target <= 1.0, "target", "must lie in (0, 1]");
    require(s.strategy == "auto" || s.strategy == "dense" || s.strategy == "sparse", "strategy",
            "scaling sweeps the dense or sparse strategy");
  }
}

double effective_degree(const ExperimentSpec& s, std::size_t n) {
  const double ln = std::log(static_cast<double>(n));
  if (s.d_mode == "dense") return ln * ln * ln;
  if (s.d_mode == "sparse") return 1.1 * ln;
  if (s.d > 0.0) return s.d;
  if (s.p >= 0.0) return s.p * static_cast<double>(n - 1);
  if (s.m > 0) return 2.0 * static_cast<double>(s.m) / static_cast<double>(n);
  return ln * ln * ln;  // scaling defaults to the dense regime
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentSpec& s) {
  std::vector<std::pair<std::string, std::string>> kv{
      {"tool", "copnum"}, {"version", kVersion}, {"command", s.command}};
  auto add = [&](const std::string& k, const std::string& v) { kv.emplace_back(k, v); };
  if (!s.graph.empty()) add("graph", s.graph);
  if (uses_model(s)) {
    add("model", s.model);
    if (s.command != "scaling") add("n", std::to_string(s.n));
    if (s.p >= 0.0) add("p", number(s.p));
    if (s.d > 0.0) add("d", number(s.d));
    if (!s.d_mode.empty()) add("d_mode", s.d_mode);
    if (s.m > 0) add("m", std::to_string(s.m));
  }
  add("seed", std::to_string(s.seed));
  if (s.command != "gen" && s.command != "exact" && s.command != "zigzag" && s.command != "bounds") {
    add("trials", std::to_string(s.trials));
  }
  add("format", s.format);
  if (s.command == "exact") {
    add("k_max", std::to_string(s.k_max));
    add("budget", std::to_string(s.budget));
  }
  if (s.command == "simulate" || s.command == "scaling") {
    add("strategy", s.strategy);
    add("robber", s.robber);
    if (s.command == "simulate") add("C", number(s.C));
    add("tol", number(s.tol));
    add("eps0", number(s.eps0));
    add("F", number(s.F));
    add("eps", number(s.eps));
    if (s.strategy == "greedy") add("cops", std::to_string(s.cops));
    add("horizon", std::to_string(s.horizon));
  }
  if (s.command == "verify-expansion") {
    add("mode", s.mode);
    add("c", number(s.c));
    add("expansion_tol", number(s.expansion_tol));
    add("eps", number(s.eps));
    add("delta", number(s.delta));
    add("probes", std::to_string(s.probes));
    add("access_probes", std::to_string(s.access_probes));
  }
  if (s.command == "bounds") add("draws", std::to_string(s.draws));
  if (s.command == "zigzag") add("grid", number(s.grid));
  if (s.command == "scaling") {
    add("n_grid", join(s.n_grid));
    add("C_grid", join(s.c_grid));
    add("target", number(s.target));
  }
  return kv;
}

std::string render_csv(const ExperimentSpec& spec, const Table& table) {
  std::ostringstream out;
  for (const auto& [k, v] : describe(spec)) out << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const Json& row : table.rows) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const auto it = row.find(table.columns[i]);
      out << (i ? "," : "") << (it == row.end() ? std::string() : cell_text(*it));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const ExperimentSpec& spec, const Table& table) {
  Json meta = Json::object();
  for (const auto& [k, v] : describe(spec)) meta[k] = v;
  Json doc = {{"meta", meta}, {"columns", table.columns}, {"rows", table.rows}, {"summary", table.summary}};
  return doc.dump(2) + "\n";
}

Graph load_graph(const std::string& source) {
  if (is_named_graph(source)) return named_graph(source);
  return read_edge_list_file(source);
}

}  // namespace copnum::harness
