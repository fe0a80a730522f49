#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hcnlab/bounds.hpp"
#include "hcnlab/checks.hpp"
#include "hcnlab/export.hpp"
#include "hcnlab/oracle.hpp"
#include "hcnlab/topology.hpp"
#include "hcnlab/verification.hpp"

namespace hcnlab::cli {

namespace {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                std::string(text) + "'");
  }
  return value;
}

Network parse_net(const std::string& text) {
  if (text == "hcn") return Network::hcn;
  if (text == "q") return Network::hypercube;
  throw ConfigError("--net must be hcn or q");
}

std::vector<CutKind> parse_kinds(const std::string& text) {
  if (text == "vertex") return {CutKind::vertex};
  if (text == "edge") return {CutKind::edge};
  if (text == "both") return {CutKind::vertex, CutKind::edge};
  throw ConfigError("--kind must be vertex, edge or both");
}

Format parse_format(const std::string& text) {
  static const std::map<std::string, Format> formats{
      {"text", Format::text}, {"edgelist", Format::edgelist},
      {"dot", Format::dot},   {"json", Format::json},
      {"csv", Format::csv}};
  const auto it = formats.find(text);
  if (it == formats.end()) {
    throw ConfigError("--format must be one of text, edgelist, dot, json, csv");
  }
  return it->second;
}

int max_h_for(Network net, CutKind kind, int n) {
  if (net == Network::hcn) return kind == CutKind::vertex ? n - 1 : n;
  return kind == CutKind::vertex ? n - 2 : n - 1;
}

// (n, h, kind) triples of a sweep, sorted by n, then h, then vertex before
// edge.
struct Cell {
  int n;
  int h;
  CutKind kind;
};

std::vector<Cell> sweep_cells(const RunConfig& config) {
  std::vector<Cell> cells;
  for (int n = config.n.first; n <= config.n.last; ++n) {
    const int top = config.net == Network::hcn ? n : n - 1;
    for (int h = 0; h <= top; ++h) {
      if (config.h && *config.h != h) continue;
      for (CutKind kind : config.kinds) {
        if (h <= max_h_for(config.net, kind, n)) cells.push_back({n, h, kind});
      }
    }
  }
  return cells;
}

void require_single_n(const RunConfig& config, int max_n) {
  if (!config.n.single()) throw ConfigError("--n must be a single value here");
  if (config.n.first < 1 || config.n.first > max_n) {
    throw ConfigError("--n must be in [1, " + std::to_string(max_n) + "]");
  }
}

Json nullable(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string report_line(const VerificationReport& report) {
  std::ostringstream line;
  line << "# valid_h_cut=" << (report.is_valid_h_cut ? "true" : "false")
       << " disconnected=" << (report.is_disconnected ? "true" : "false")
       << " min_degree=";
  if (report.min_degree_after) {
    line << *report.min_degree_after;
  } else {
    line << "none";
  }
  line << " components=";
  for (std::size_t i = 0; i < report.component_sizes.size(); ++i) {
    line << (i ? "," : "") << report.component_sizes[i];
  }
  line << " h=" << report.h;
  return line.str();
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["is_disconnected"] = report.is_disconnected;
  j["min_degree_after"] = report.min_degree_after
                              ? Json(*report.min_degree_after)
                              : Json(nullptr);
  j["component_sizes"] = report.component_sizes;
  j["is_valid_h_cut"] = report.is_valid_h_cut;
  j["h"] = report.h;
  return j;
}

template <Topology T>
Json members_json(const CutSpec& cut, const T& labels) {
  std::vector<std::string> members;
  for (VertexId v : cut.vertices) members.push_back(labels.label(v));
  for (const auto& [u, v] : cut.edges) {
    std::string a = labels.label(u);
    std::string b = labels.label(v);
    if (b < a) std::swap(a, b);
    members.push_back(a + " " + b);
  }
  std::sort(members.begin(), members.end());
  return members;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const RunConfig& config, std::ostream& out) {
  require_single_n(config, kMaxGenDimension);
  const int n = config.n.first;
  if (config.format != Format::edgelist && config.format != Format::dot &&
      config.format != Format::text) {
    throw ConfigError("gen supports --format edgelist or dot");
  }
  const bool dot = config.format == Format::dot;
  if (config.net == Network::hcn) {
    const HcnNetwork hcn(n);
    dot ? write_dot(out, hcn) : write_edge_list(out, hcn);
  } else {
    const HypercubeNetwork cube(n);
    dot ? write_dot(out, cube) : write_edge_list(out, cube);
  }
  return exit_code::ok;
}

// ---------------------------------------------------------------- cut

template <Topology T>
int emit_cuts(const RunConfig& config, const T& network, std::ostream& out) {
  const int n = config.n.first;
  const int h = *config.h;
  bool all_valid = true;
  Json array = Json::array();
  for (CutKind kind : config.kinds) {
    if (h < 0 || h > max_h_for(config.net, kind, n)) {
      throw ConfigError("h=" + std::to_string(h) + " is outside the " +
                        std::string(to_string(kind)) + " cut range [0, " +
                        std::to_string(max_h_for(config.net, kind, n)) + "]");
    }
  }
  for (CutKind kind : config.kinds) {
    CutSpec cut;
    if (config.net == Network::hcn) {
      cut = kind == CutKind::vertex ? hcn_subcube_vertex_cut(n, h, config.x1)
                                    : hcn_subcube_edge_cut(n, h, config.x1);
    } else {
      cut = construct_cut(Network::hypercube, kind, n, h);
    }
    const VerificationReport report = verify_h_cut(network, cut, h);
    all_valid = all_valid && report.is_valid_h_cut;
    if (config.format == Format::json) {
      Json j;
      j["kind"] = to_string(kind);
      j["net"] = to_string(config.net);
      j["n"] = n;
      j["h"] = h;
      j["size"] = cut.size();
      j["anchor"] = cut.anchor ? Json(cut.anchor->to_string()) : Json(nullptr);
      j["members"] = members_json(cut, network);
      j["report"] = report_json(report);
      array.push_back(std::move(j));
    } else {
      write_cut_spec(out, cut, network);
      out << report_line(report) << '\n';
    }
  }
  if (config.format == Format::json) out << array.dump(2) << '\n';
  return all_valid ? exit_code::ok : exit_code::discrepancy;
}

int cmd_cut(const RunConfig& config, std::ostream& out) {
  require_single_n(config, kMaxGenDimension);
  if (!config.h) throw ConfigError("cut needs a single --h value");
  if (config.format != Format::text && config.format != Format::json) {
    throw ConfigError("cut supports --format text or json");
  }
  if (config.x1) {
    if (config.net != Network::hcn) throw ConfigError("--x1 applies to hcn only");
    if (config.x1->length() != config.n.first) {
      throw ConfigError("--x1 must have n bits");
    }
  }
  if (config.net == Network::hcn) return emit_cuts(config, HcnNetwork(config.n.first), out);
  if (config.n.first < 2) throw ConfigError("hypercube cuts need n >= 2");
  return emit_cuts(config, HypercubeNetwork(config.n.first), out);
}

// ---------------------------------------------------------------- oracle

SearchBudget budget_from(const RunConfig& config) {
  SearchBudget budget;
  budget.worker_count = std::max(1u, config.workers);
  if (config.time_limit) {
    budget.time_limit = std::chrono::duration_cast<std::chrono::milliseconds>(*config.time_limit);
  }
  if (config.max_cut_size) budget.max_cut_size = *config.max_cut_size;
  return budget;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  const int cap = config.net == Network::hcn ? kMaxOracleHcnDimension
                                             : kMaxOracleHypercubeDimension;
  require_single_n(config, cap);
  if (!config.h || *config.h < 0) throw ConfigError("oracle needs a single --h >= 0");
  if (config.format != Format::text && config.format != Format::json) {
    throw ConfigError("oracle reports JSON only");
  }
  const int n = config.n.first;
  const int h = *config.h;
  const Graph g = build_network(config.net, n);

  int code = exit_code::ok;
  for (CutKind kind : config.kinds) {
    const bool defined = formula_defined(config.net, kind, n, h);
    SearchBudget budget = budget_from(config);
    std::optional<std::uint64_t> formula;
    std::optional<FormulaVerification> construction;
    if (defined) {
      formula = formula_value(config.net, kind, n, h);
      construction = verify_formula(g, config.net, kind, n, h, std::nullopt);
      // Search through the closed-form value so the exact value surfaces.
      if (!config.max_cut_size) budget.max_cut_size = *formula + 1;
    }
    const OracleOutcome outcome = kind == CutKind::vertex
                                      ? min_h_vertex_cut_exact(g, h, budget)
                                      : min_h_edge_cut_exact(g, h, budget);
    if (outcome.status == OracleStatus::budget_exhausted) {
      code = exit_code::budget_exhausted;
    }

    Json j;
    j["net"] = to_string(config.net);
    j["n"] = n;
    j["h"] = h;
    j["kind"] = to_string(kind);
    j["formula"] = nullable(formula);
    j["constructed_size"] =
        construction ? Json(construction->constructed_size) : Json(nullptr);
    j["construction_valid"] =
        construction ? Json(construction->construction_valid) : Json(nullptr);
    j["oracle_status"] = to_string(outcome.status);
    j["oracle_value"] = outcome.value ? Json(*outcome.value) : Json(nullptr);
    j["subsets_examined"] = outcome.subsets_examined;
    j["elapsed_ms"] =
        config.timing
            ? Json(std::chrono::duration_cast<std::chrono::milliseconds>(outcome.elapsed).count())
            : Json(nullptr);
    j["witness"] = outcome.witness ? members_json(*outcome.witness, g) : Json(nullptr);
    out << j.dump() << '\n';
  }
  return code;
}

// ---------------------------------------------------------------- table

struct TableRow {
  Network net;
  int n;
  int h;
  CutKind kind;
  std::uint64_t formula_value;
  std::size_t constructed_size;
  bool construction_valid;
  std::optional<OracleStatus> oracle_status;
  std::optional<std::size_t> oracle_value;
  std::optional<std::uint64_t> subsets_examined;
  std::optional<std::int64_t> elapsed_ms;
  Verdict verdict;
};

Json row_json(const TableRow& row) {
  Json j;
  j["net"] = to_string(row.net);
  j["n"] = row.n;
  j["h"] = row.h;
  j["kind"] = to_string(row.kind);
  j["formula"] = row.formula_value;
  j["constructed_size"] = row.constructed_size;
  j["construction_valid"] = row.construction_valid;
  j["oracle_status"] = row.oracle_status ? Json(to_string(*row.oracle_status)) : Json(nullptr);
  j["oracle_value"] = row.oracle_value ? Json(*row.oracle_value) : Json(nullptr);
  j["subsets_examined"] = nullable(row.subsets_examined);
  j["elapsed_ms"] = row.elapsed_ms ? Json(*row.elapsed_ms) : Json(nullptr);
  j["verdict"] = to_string(row.verdict);
  return j;
}

template <class T>
std::string csv_cell(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream s;
  s << *v;
  return s.str();
}

void write_csv_row(std::ostream& out, const TableRow& row) {
  out << to_string(row.net) << ',' << row.n << ',' << row.h << ','
      << to_string(row.kind) << ',' << row.formula_value << ','
      << row.constructed_size << ',' << (row.construction_valid ? "true" : "false")
      << ',' << (row.oracle_status ? std::string(to_string(*row.oracle_status)) : "")
      << ',' << csv_cell(row.oracle_value) << ',' << csv_cell(row.subsets_examined)
      << ',' << csv_cell(row.elapsed_ms) << ',' << to_string(row.verdict) << '\n';
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  if (config.n.first < 1 || config.n.last > kMaxGenDimension) {
    throw ConfigError("--n range must lie in [1, " + std::to_string(kMaxGenDimension) + "]");
  }
  if (config.net == Network::hypercube && config.n.first < 2) {
    throw ConfigError("hypercube sweeps start at n = 2");
  }
  if (config.format != Format::text && config.format != Format::csv &&
      config.format != Format::json) {
    throw ConfigError("table supports --format csv or json");
  }
  const int oracle_cap = config.net == Network::hcn ? kMaxOracleHcnDimension
                                                    : kMaxOracleHypercubeDimension;
  if (config.oracle_max_n > oracle_cap) {
    throw ConfigError("--oracle-max-n must be at most " + std::to_string(oracle_cap));
  }
  const auto cells = sweep_cells(config);
  if (cells.empty()) throw ConfigError("the requested sweep is empty");

  std::vector<TableRow> rows;
  std::optional<Graph> graph;
  int graph_n = 0;
  for (const Cell& cell : cells) {
    const bool with_oracle = cell.n <= config.oracle_max_n;
    FormulaVerification v;
    if (with_oracle) {
      if (!graph || graph_n != cell.n) {
        graph = build_network(config.net, cell.n);
        graph_n = cell.n;
      }
      v = verify_formula(*graph, config.net, cell.kind, cell.n, cell.h, budget_from(config));
    } else {
      v = verify_formula(config.net, cell.kind, cell.n, cell.h, std::nullopt);
    }
    TableRow row{config.net, cell.n, cell.h, cell.kind, v.formula,
                 v.constructed_size, v.construction_valid, {}, v.established_value,
                 {}, {}, v.verdict};
    if (v.oracle) {
      row.oracle_status = v.oracle->status;
      row.subsets_examined = v.oracle->subsets_examined;
      if (config.timing) {
        row.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(v.oracle->elapsed).count();
      }
    }
    rows.push_back(row);
  }

  std::size_t confirmed = 0, upper_only = 0, discrepant = 0;
  for (const auto& row : rows) {
    switch (row.verdict) {
      case Verdict::confirmed: ++confirmed; break;
      case Verdict::upper_bound_only: ++upper_only; break;
      case Verdict::discrepancy: ++discrepant; break;
    }
  }

  if (config.format == Format::json) {
    Json doc;
    doc["rows"] = Json::array();
    for (const auto& row : rows) doc["rows"].push_back(row_json(row));
    doc["summary"] = {{"confirmed", confirmed},
                      {"upper_bound_only", upper_only},
                      {"discrepant", discrepant}};
    out << doc.dump(2) << '\n';
  } else {
    out << "net,n,h,kind,formula,constructed_size,construction_valid,"
           "oracle_status,oracle_value,subsets_examined,elapsed_ms,verdict\n";
    for (const auto& row : rows) write_csv_row(out, row);
    out << "# summary confirmed=" << confirmed << " upper_bound_only=" << upper_only
        << " discrepant=" << discrepant << '\n';
  }
  return discrepant == 0 ? exit_code::ok : exit_code::discrepancy;
}

// ---------------------------------------------------------------- check

enum class Suite { crossing, quotient, regularity, split, order_bound, neighborhood_bound };

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> suites{
      {"crossing", Suite::crossing},
      {"quotient", Suite::quotient},
      {"regularity", Suite::regularity},
      {"split", Suite::split},
      {"order-bound", Suite::order_bound},
      {"lemma25", Suite::order_bound},
      {"neighborhood-bound", Suite::neighborhood_bound},
      {"lemma26", Suite::neighborhood_bound}};
  const auto it = suites.find(name);
  if (it == suites.end()) throw ConfigError("unknown suite '" + name + "'");
  return it->second;
}

void print_result(std::ostream& out, const PropertyResult& r, bool& all) {
  out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  all = all && r.passed;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  std::vector<std::string> names = config.suites;
  if (names.empty()) names = {"crossing", "quotient", "regularity"};
  std::vector<Suite> suites;
  for (const auto& name : names) {
    const Suite suite = parse_suite(name);
    const bool bounded = suite == Suite::order_bound || suite == Suite::neighborhood_bound;
    const int cap = bounded ? kExhaustiveBoundDimension : kMaxStructureCheckDimension;
    const int floor = suite == Suite::split ? 2 : 1;
    if (config.n.first < floor || config.n.last > cap) {
      throw ConfigError("suite " + name + " runs for n in [" + std::to_string(floor) +
                        ", " + std::to_string(cap) + "]");
    }
    suites.push_back(suite);
  }

  bool all = true;
  for (Suite suite : suites) {
    for (int n = config.n.first; n <= config.n.last; ++n) {
      switch (suite) {
        case Suite::crossing:
          print_result(out, check_crossing_matching(n), all);
          print_result(out, check_crossing_pairs(n), all);
          print_result(out, check_external_involution(n), all);
          break;
        case Suite::quotient:
          print_result(out, check_block_quotient(n), all);
          break;
        case Suite::regularity:
          print_result(out, check_hcn_regularity(n), all);
          break;
        case Suite::split:
          print_result(out, check_hypercube_splits(n), all);
          break;
        case Suite::order_bound:
          for (int h = 0; h <= n; ++h) {
            const auto c = check_subgraph_order_bound(n, h);
            PropertyResult r{"order-bound n=" + std::to_string(n) + " h=" + std::to_string(h),
                             c.holds, {}};
            r.detail = "smallest qualifying |X|=" +
                       (c.smallest_qualifying ? std::to_string(*c.smallest_qualifying)
                                              : std::string("none")) +
                       " bound=" + std::to_string(1u << h) +
                       (c.tight ? " tight" : "") + " subsets=" +
                       std::to_string(c.subsets_checked);
            print_result(out, r, all);
          }
          break;
        case Suite::neighborhood_bound:
          for (int h = 0; h <= n - 1; ++h) {
            const auto c = check_closed_neighborhood_bound(n, h);
            PropertyResult r{"neighborhood-bound n=" + std::to_string(n) +
                                 " h=" + std::to_string(h),
                             c.holds, {}};
            r.detail = "min |X|+|N(X)|=" +
                       (c.min_value ? std::to_string(*c.min_value) : std::string("none")) +
                       " bound=" + std::to_string(c.bound) +
                       " subsets=" + std::to_string(c.subsets_checked);
            print_result(out, r, all);
          }
          break;
      }
    }
  }
  return all ? exit_code::ok : exit_code::discrepancy;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::gen: return cmd_gen(config, out);
    case Command::cut: return cmd_cut(config, out);
    case Command::oracle: return cmd_oracle(config, out);
    case Command::table: return cmd_table(config, out);
    case Command::check: return cmd_check(config, out);
  }
  return exit_code::invalid_config;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  IntRange range;
  if (dots == std::string_view::npos) {
    range.first = range.last = parse_int(text, "dimension");
  } else {
    range.first = parse_int(text.substr(0, dots), "range start");
    range.last = parse_int(text.substr(dots + 2), "range end");
  }
  if (range.first > range.last) throw std::invalid_argument("empty range");
  return range;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.out_path) {
      const int code = dispatch(config, out);
      out.flush();
      return code;
    }
    std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return exit_code::io_failure;
    }
    const int code = dispatch(config, file);
    file.flush();
    if (!file) {
      err << "error: failed writing " << *config.out_path << '\n';
      return exit_code::io_failure;
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_config;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_config;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_config;
  }
}

int run_args(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Hierarchical cubic network conditional connectivity toolkit", "hcnlab"};
  app.require_subcommand(1);
  // -h is taken by the conditional degree flag.
  app.set_help_flag("--help", "Print this help message and exit");

  std::string net = "hcn", n_text, h_text, kind_text, format_text, x1_text, out_path;
  std::optional<std::int64_t> time_limit;
  std::optional<std::size_t> max_cut_size;
  unsigned workers = 1;
  int oracle_max_n = 2;
  bool timing = false;
  std::vector<std::string> suites;

  auto add_common = [&](CLI::App* sub, bool with_h) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--net", net, "Network: hcn or q")->capture_default_str();
    sub->add_option("--n", n_text, "Dimension N or range A..B")->required();
    if (with_h) sub->add_option("--h", h_text, "Conditional degree H or 'all'");
    sub->add_option("--out", out_path, "Write output to PATH");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--time-limit", time_limit, "Seconds per oracle call");
    sub->add_option("--workers", workers, "Parallel search workers")->capture_default_str();
    sub->add_flag("--timing", timing, "Report wall-clock fields");
  };

  auto* gen = app.add_subcommand("gen", "Emit HCN_n or Q_n");
  add_common(gen, false);
  gen->add_option("--format", format_text, "edgelist or dot");

  auto* cut = app.add_subcommand("cut", "Emit and verify the subcube cut");
  add_common(cut, true);
  cut->add_option("--kind", kind_text, "vertex, edge or both");
  cut->add_option("--x1", x1_text, "Anchor block bits");
  cut->add_option("--format", format_text, "text or json");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum h-cut search");
  add_common(oracle, true);
  add_budget(oracle);
  oracle->add_option("--kind", kind_text, "vertex, edge or both");
  oracle->add_option("--max-cut-size", max_cut_size, "Search sizes below this");
  oracle->add_option("--format", format_text, "json");

  auto* table = app.add_subcommand("table", "Formula verification sweep");
  add_common(table, true);
  add_budget(table);
  table->add_option("--kind", kind_text, "vertex, edge or both");
  table->add_option("--format", format_text, "csv or json");
  table->add_option("--oracle-max-n", oracle_max_n, "Largest n given an oracle search")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Structural and bound property suites");
  add_common(check, false);
  check->add_option("--suite", suites,
                    "crossing, quotient, regularity, split, order-bound (lemma25), "
                    "neighborhood-bound (lemma26)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_config;
  }

  RunConfig config;
  try {
    if (gen->parsed()) config.command = Command::gen;
    if (cut->parsed()) config.command = Command::cut;
    if (oracle->parsed()) config.command = Command::oracle;
    if (table->parsed()) config.command = Command::table;
    if (check->parsed()) config.command = Command::check;

    config.net = parse_net(net);
    config.n = parse_range(n_text);
    if (!h_text.empty() && h_text != "all") config.h = parse_int(h_text, "h");
    if (!kind_text.empty()) {
      config.kinds = parse_kinds(kind_text);
    } else if (config.command == Command::table) {
      config.kinds = {CutKind::vertex, CutKind::edge};
    }
    if (!format_text.empty()) config.format = parse_format(format_text);
    if (!x1_text.empty()) config.x1 = BinaryWord::parse(x1_text);
    if (!out_path.empty()) config.out_path = out_path;

    if (!time_limit) {
      if (const char* env = std::getenv("HCNLAB_TIME_LIMIT"); env && *env) {
        time_limit = parse_int(env, "HCNLAB_TIME_LIMIT");
      }
    }
    if (time_limit) {
      if (*time_limit < 0) throw ConfigError("time limit must be non-negative");
      config.time_limit = std::chrono::seconds(*time_limit);
    }
    config.workers = workers;
    config.max_cut_size = max_cut_size;
    config.oracle_max_n = oracle_max_n;
    config.timing = timing;
    config.suites = suites;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_config;
  }
  return run(config, out, err);
}

}  // namespace hcnlab::cli
