#include "hcnlab/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcnlab/formulas.hpp"
#include "hcnlab/topology.hpp"

namespace hcnlab {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::upper_bound_only: return "upper_bound_only";
    case Verdict::discrepancy: return "discrepancy";
  }
  return "unknown";
}

std::uint64_t formula_value(Network network, CutKind kind, int n, int h) {
  switch (network) {
    case Network::hcn:
      return kind == CutKind::vertex ? hcn_super_connectivity(n, h)
                                     : hcn_super_edge_connectivity(n, h);
    case Network::hypercube:
      return kind == CutKind::vertex ? hypercube_super_connectivity(n, h)
                                     : hypercube_super_edge_connectivity(n, h);
    case Network::generic:
      break;
  }
  throw std::invalid_argument("no closed form for a generic graph");
}

bool formula_defined(Network network, CutKind kind, int n, int h) noexcept {
  try {
    formula_value(network, kind, n, h);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

CutSpec construct_cut(Network network, CutKind kind, int n, int h) {
  switch (network) {
    case Network::hcn:
      return kind == CutKind::vertex ? hcn_subcube_vertex_cut(n, h)
                                     : hcn_subcube_edge_cut(n, h);
    case Network::hypercube:
      return kind == CutKind::vertex ? hypercube_subcube_vertex_cut(n, h)
                                     : hypercube_subcube_edge_cut(n, h);
    case Network::generic:
      break;
  }
  throw std::invalid_argument("no construction for a generic graph");
}

Graph build_network(Network network, int n) {
  switch (network) {
    case Network::hcn: return build_hcn(n);
    case Network::hypercube: return build_hypercube(n);
    case Network::generic: break;
  }
  throw std::invalid_argument("cannot build a generic network");
}

namespace {

template <Topology T>
FormulaVerification check_construction(const T& g, Network network,
                                       CutKind kind, int n, int h) {
  FormulaVerification result;
  result.network = network;
  result.kind = kind;
  result.n = n;
  result.h = h;
  result.formula = formula_value(network, kind, n, h);

  const CutSpec cut = construct_cut(network, kind, n, h);
  result.constructed_size = cut.size();
  result.construction_report = verify_h_cut(g, cut, h);
  result.construction_valid = result.construction_report.is_valid_h_cut;
  if (!result.construction_valid || result.constructed_size != result.formula) {
    result.verdict = Verdict::discrepancy;
  }
  return result;
}

}  // namespace

FormulaVerification verify_formula(Network network, CutKind kind, int n, int h,
                                   const std::optional<SearchBudget>& budget) {
  formula_value(network, kind, n, h);
  if (budget) {
    return verify_formula(build_network(network, n), network, kind, n, h, budget);
  }
  if (network == Network::hcn) {
    return check_construction(HcnNetwork(n), network, kind, n, h);
  }
  return check_construction(HypercubeNetwork(n), network, kind, n, h);
}

FormulaVerification verify_formula(const Graph& g, Network network,
                                   CutKind kind, int n, int h,
                                   const std::optional<SearchBudget>& budget) {
  FormulaVerification result = check_construction(g, network, kind, n, h);
  if (!budget) return result;
  const bool construction_matches = result.verdict != Verdict::discrepancy;

  SearchBudget below = *budget;
  below.max_cut_size = std::min<std::size_t>(below.max_cut_size, result.formula);
  result.oracle = kind == CutKind::vertex ? min_h_vertex_cut_exact(g, h, below)
                                          : min_h_edge_cut_exact(g, h, below);

  switch (result.oracle->status) {
    case OracleStatus::exact_value:
      // A valid h-cut strictly below the closed form.
      result.established_value = result.oracle->value;
      result.verdict = Verdict::discrepancy;
      break;
    case OracleStatus::no_cut_below_bound:
      if (construction_matches && below.max_cut_size == result.formula) {
        result.established_value = result.formula;
        result.verdict = Verdict::confirmed;
      }
      break;
    case OracleStatus::budget_exhausted:
      break;
  }
  return result;
}

}  // namespace hcnlab
