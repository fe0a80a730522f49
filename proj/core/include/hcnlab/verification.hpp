#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hcnlab/cuts.hpp"
#include "hcnlab/graph.hpp"
#include "hcnlab/oracle.hpp"

namespace hcnlab {

enum class Verdict { confirmed, upper_bound_only, discrepancy };

std::string_view to_string(Verdict verdict) noexcept;

/// Closed-form value for (network, kind). Throws std::invalid_argument
/// outside the established h-range or for Network::generic.
std::uint64_t formula_value(Network network, CutKind kind, int n, int h);

/// Whether formula_value is defined for these arguments.
bool formula_defined(Network network, CutKind kind, int n, int h) noexcept;

/// The standard subcube cut realizing the formula.
CutSpec construct_cut(Network network, CutKind kind, int n, int h);

Graph build_network(Network network, int n);

struct FormulaVerification {
  Network network = Network::hcn;
  CutKind kind = CutKind::vertex;
  int n = 0;
  int h = 0;
  std::uint64_t formula = 0;
  std::size_t constructed_size = 0;
  bool construction_valid = false;
  VerificationReport construction_report;
  /// Search of sizes below the formula value; empty when not run.
  std::optional<OracleOutcome> oracle;
  /// Exact value when settled: the formula when confirmed, or a smaller cut
  /// the oracle found.
  std::optional<std::size_t> established_value;
  Verdict verdict = Verdict::upper_bound_only;
};

/// Verifies the constructed cut at the formula value, then (when a budget is
/// given) searches every size below it. Confirmed iff the construction is a
/// valid h-cut of exactly the formula size and no smaller h-cut exists.
/// The oracle's max_cut_size is capped at the formula value.
FormulaVerification verify_formula(Network network, CutKind kind, int n, int h,
                                   const std::optional<SearchBudget>& budget);

/// Same with a pre-built network graph, for sweeps over h.
FormulaVerification verify_formula(const Graph& g, Network network,
                                   CutKind kind, int n, int h,
                                   const std::optional<SearchBudget>& budget);

}  // namespace hcnlab
