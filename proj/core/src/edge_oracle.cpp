#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <vector>

#include "hcnlab/connectivity.hpp"
#include "hcnlab/oracle.hpp"
#include "search_support.hpp"

namespace hcnlab {

namespace {

enum class Side : std::uint8_t { undecided, inside, outside };

struct SeedResult {
  bool complete = false;
  std::optional<std::size_t> best;
  std::vector<Edge> witness;
  std::uint64_t nodes = 0;
};

// Grows a connected side X from a seed, deciding frontier vertices in or out.
// Vertices below the seed are out, so each connected X is visited once, from
// its smallest vertex.
class SideGrower {
 public:
  SideGrower(const Graph& g, int h, detail::Deadline& deadline)
      : g_(g),
        h_(h),
        deadline_(deadline),
        count_(static_cast<VertexId>(g.vertex_count())),
        max_side_(g.vertex_count() / 2),
        side_(count_),
        inside_nbrs_(count_),
        outside_nbrs_(count_),
        frontier_((count_ + 63) / 64) {}

  SeedResult run(VertexId seed, std::size_t limit) {
    std::fill(side_.begin(), side_.end(), Side::undecided);
    std::fill(inside_nbrs_.begin(), inside_nbrs_.end(), 0);
    std::fill(outside_nbrs_.begin(), outside_nbrs_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    members_.clear();
    boundary_ = 0;
    limit_ = limit;
    aborted_ = false;
    result_ = {};

    for (VertexId v = 0; v < seed; ++v) mark_outside(v);
    if (max_side_ >= 1 && place_inside(seed)) grow();

    result_.complete = !aborted_;
    return std::move(result_);
  }

 private:
  void grow() {
    if (aborted_) return;
    ++result_.nodes;
    if ((++nodes_ & 0xFFF) == 0 && deadline_.poll()) {
      aborted_ = true;
      return;
    }
    const auto next = lowest_frontier();
    if (!next) {
      evaluate_leaf();
      return;
    }
    const VertexId v = *next;
    if (members_.size() < max_side_) {
      if (place_inside(v)) grow();
      undo_inside(v);
      if (aborted_) return;
    }
    if (place_outside(v)) grow();
    undo_outside(v);
  }

  void evaluate_leaf() {
    std::vector<Edge> cut;
    cut.reserve(boundary_);
    for (VertexId v : members_) {
      for (VertexId u : g_.neighbors(v)) {
        if (side_[u] == Side::outside) cut.push_back(make_edge(v, u));
      }
    }
    std::sort(cut.begin(), cut.end());
    if (!result_.best || cut.size() < *result_.best ||
        (cut.size() == *result_.best && cut < result_.witness)) {
      result_.best = cut.size();
      result_.witness = std::move(cut);
      limit_ = *result_.best;
    }
  }

  std::optional<VertexId> lowest_frontier() const {
    for (std::size_t w = 0; w < frontier_.size(); ++w) {
      if (frontier_[w] != 0) {
        return static_cast<VertexId>(w * 64 +
                                     static_cast<std::size_t>(std::countr_zero(frontier_[w])));
      }
    }
    return std::nullopt;
  }

  void set_frontier(VertexId v, bool on) {
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (on) {
      frontier_[v / 64] |= bit;
    } else {
      frontier_[v / 64] &= ~bit;
    }
  }

  int degree(VertexId v) const { return static_cast<int>(g_.degree(v)); }

  // Inside vertices need h neighbors that are not outside; outside vertices
  // need h neighbors that are not inside.
  bool inside_ok(VertexId v) const { return degree(v) - outside_nbrs_[v] >= h_; }
  bool outside_ok(VertexId v) const { return degree(v) - inside_nbrs_[v] >= h_; }

  void mark_outside(VertexId v) {
    side_[v] = Side::outside;
    for (VertexId u : g_.neighbors(v)) ++outside_nbrs_[u];
  }

  bool place_inside(VertexId v) {
    side_[v] = Side::inside;
    set_frontier(v, false);
    members_.push_back(v);
    boundary_ += static_cast<std::size_t>(outside_nbrs_[v]);
    bool ok = boundary_ <= limit_ && inside_ok(v);
    for (VertexId u : g_.neighbors(v)) {
      ++inside_nbrs_[u];
      if (side_[u] == Side::undecided) {
        set_frontier(u, true);
      } else if (side_[u] == Side::outside && !outside_ok(u)) {
        ok = false;
      }
    }
    return ok;
  }

  void undo_inside(VertexId v) {
    for (VertexId u : g_.neighbors(v)) {
      if (--inside_nbrs_[u] == 0 && side_[u] == Side::undecided) {
        set_frontier(u, false);
      }
    }
    boundary_ -= static_cast<std::size_t>(outside_nbrs_[v]);
    members_.pop_back();
    side_[v] = Side::undecided;
    set_frontier(v, inside_nbrs_[v] > 0);
  }

  bool place_outside(VertexId v) {
    side_[v] = Side::outside;
    set_frontier(v, false);
    boundary_ += static_cast<std::size_t>(inside_nbrs_[v]);
    bool ok = boundary_ <= limit_ && outside_ok(v);
    for (VertexId u : g_.neighbors(v)) {
      ++outside_nbrs_[u];
      if (side_[u] == Side::inside && !inside_ok(u)) ok = false;
    }
    return ok;
  }

  void undo_outside(VertexId v) {
    for (VertexId u : g_.neighbors(v)) --outside_nbrs_[u];
    boundary_ -= static_cast<std::size_t>(inside_nbrs_[v]);
    side_[v] = Side::undecided;
    set_frontier(v, inside_nbrs_[v] > 0);
  }

  const Graph& g_;
  const int h_;
  detail::Deadline& deadline_;
  const VertexId count_;
  const std::size_t max_side_;

  std::vector<Side> side_;
  std::vector<int> inside_nbrs_;
  std::vector<int> outside_nbrs_;
  std::vector<std::uint64_t> frontier_;
  std::vector<VertexId> members_;
  std::size_t boundary_ = 0;
  std::size_t limit_ = 0;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  SeedResult result_;
};

}  // namespace

OracleOutcome min_h_edge_cut_exact(const Graph& g, int h,
                                   const SearchBudget& budget) {
  if (h < 0) throw std::invalid_argument("h must be non-negative");
  if (!is_connected(g)) {
    throw std::invalid_argument("edge cut oracle needs a connected graph");
  }
  const auto start = detail::Deadline::Clock::now();
  detail::Deadline deadline(start, budget.time_limit);
  const unsigned workers = std::max(1u, budget.worker_count);
  const std::size_t count = g.vertex_count();

  OracleOutcome outcome;
  outcome.status = OracleStatus::no_cut_below_bound;
  const auto finish = [&] {
    outcome.elapsed = detail::Deadline::Clock::now() - start;
    return outcome;
  };

  // A vertex of degree below h keeps that deficit in every G - F.
  const auto low = min_degree(g);
  if (count < 2 || budget.max_cut_size == 0 ||
      (low && *low < static_cast<std::size_t>(h))) {
    return finish();
  }

  std::size_t limit = budget.max_cut_size - 1;
  if (h == 0) limit = std::min(limit, edge_connectivity(g));

  std::vector<SeedResult> results(count);
  std::vector<std::optional<SideGrower>> growers(workers);
  detail::for_each_partition(
      count, workers,
      [&](unsigned w, std::size_t seed) {
        if (!growers[w]) growers[w].emplace(g, h, deadline);
        results[seed] = growers[w]->run(static_cast<VertexId>(seed), limit);
      },
      [&](std::size_t) { return deadline.expired(); });

  const SeedResult* best = nullptr;
  bool complete = true;
  for (const auto& r : results) {
    outcome.subsets_examined += r.nodes;
    complete = complete && r.complete;
    if (!r.best) continue;
    if (best == nullptr || *r.best < *best->best ||
        (*r.best == *best->best && r.witness < best->witness)) {
      best = &r;
    }
  }
  if (!complete) {
    outcome.status = OracleStatus::budget_exhausted;
    return finish();
  }
  if (best != nullptr) {
    outcome.status = OracleStatus::exact_value;
    outcome.value = *best->best;
    CutSpec witness;
    witness.kind = CutKind::edge;
    witness.h = h;
    witness.edges = best->witness;
    outcome.witness = std::move(witness);
  }
  return finish();
}

}  // namespace hcnlab
