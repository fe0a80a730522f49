#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <vector>

#include "hcnlab/oracle.hpp"
#include "search_support.hpp"

namespace hcnlab {

std::string_view to_string(OracleStatus status) noexcept {
  switch (status) {
    case OracleStatus::exact_value: return "exact_value";
    case OracleStatus::no_cut_below_bound: return "no_cut_below_bound";
    case OracleStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = ~std::size_t{0};

// Two-vertex prefixes give the workers enough partitions on small graphs;
// beyond this size the prefix list itself gets too long.
constexpr std::size_t kTwoLevelPrefixLimit = 512;

struct PartitionResult {
  bool complete = false;
  bool found = false;
  std::vector<VertexId> witness;
  std::uint64_t leaves = 0;
};

// Depth-first enumeration of k-subsets in lexicographic order, restricted to
// one fixed prefix. Tracks the degree of every vertex in G - S.
class SubsetWalker {
 public:
  SubsetWalker(const Graph& g, int h, detail::Deadline& deadline,
               const std::atomic<std::size_t>& winner)
      : g_(g),
        h_(h),
        count_(static_cast<VertexId>(g.vertex_count())),
        deadline_(deadline),
        winner_(winner),
        in_cut_(count_, 0),
        remaining_(count_),
        stamp_(count_, 0) {
    for (VertexId v = 0; v < count_; ++v) {
      remaining_[v] = static_cast<int>(g.degree(v));
      if (remaining_[v] < h_) ++deficient_;
    }
  }

  PartitionResult run(std::size_t k, std::vector<VertexId> prefix,
                      std::size_t partition) {
    k_ = k;
    prefix_ = std::move(prefix);
    partition_ = partition;
    aborted_ = false;
    result_ = {};
    chosen_.clear();
    descend(0, 0);
    result_.complete = !aborted_;
    return std::move(result_);
  }

 private:
  bool descend(std::size_t depth, VertexId start) {
    if ((++nodes_ & 0xFFF) == 0 &&
        (deadline_.poll() ||
         winner_.load(std::memory_order_relaxed) < partition_)) {
      aborted_ = true;
      return false;
    }
    if (depth == k_) return evaluate_leaf();
    const VertexId last = count_ - static_cast<VertexId>(k_ - depth);
    for (VertexId e = start; e <= last; ++e) {
      // e-1 is now excluded for good; its degree can only drop further.
      if (e > start && remaining_[e - 1] < h_) break;
      if (depth < prefix_.size()) {
        if (e < prefix_[depth]) continue;
        if (e > prefix_[depth]) break;
      }
      add(e);
      bool feasible = true;
      for (VertexId u : g_.neighbors(e)) {
        if (u < e && !in_cut_[u] && remaining_[u] < h_) {
          feasible = false;
          break;
        }
      }
      const bool found = feasible && descend(depth + 1, e + 1);
      remove(e);
      if (found || aborted_) return found;
    }
    return false;
  }

  bool evaluate_leaf() {
    ++result_.leaves;
    if (deficient_ != 0 || !separates()) return false;
    result_.found = true;
    result_.witness = chosen_;
    return true;
  }

  bool separates() {
    const std::size_t survivors = count_ - k_;
    if (survivors < 2) return false;
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    VertexId root = 0;
    while (in_cut_[root]) ++root;
    stack_.clear();
    stack_.push_back(root);
    stamp_[root] = epoch_;
    std::size_t reached = 0;
    while (!stack_.empty()) {
      const VertexId v = stack_.back();
      stack_.pop_back();
      ++reached;
      for (VertexId u : g_.neighbors(v)) {
        if (!in_cut_[u] && stamp_[u] != epoch_) {
          stamp_[u] = epoch_;
          stack_.push_back(u);
        }
      }
    }
    return reached < survivors;
  }

  void add(VertexId e) {
    if (remaining_[e] < h_) --deficient_;
    in_cut_[e] = 1;
    for (VertexId u : g_.neighbors(e)) {
      if (!in_cut_[u] && remaining_[u] == h_) ++deficient_;
      --remaining_[u];
    }
    chosen_.push_back(e);
  }

  void remove(VertexId e) {
    chosen_.pop_back();
    for (VertexId u : g_.neighbors(e)) {
      ++remaining_[u];
      if (!in_cut_[u] && remaining_[u] == h_) --deficient_;
    }
    in_cut_[e] = 0;
    if (remaining_[e] < h_) ++deficient_;
  }

  const Graph& g_;
  const int h_;
  const VertexId count_;
  detail::Deadline& deadline_;
  const std::atomic<std::size_t>& winner_;

  std::vector<char> in_cut_;
  std::vector<int> remaining_;
  int deficient_ = 0;
  std::vector<VertexId> chosen_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> stack_;

  std::size_t k_ = 0;
  std::vector<VertexId> prefix_;
  std::size_t partition_ = 0;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  PartitionResult result_;
};

std::vector<std::vector<VertexId>> prefixes_for(std::size_t count,
                                                std::size_t k) {
  std::vector<std::vector<VertexId>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  const auto last_first = static_cast<VertexId>(count - k);
  if (k >= 2 && count <= kTwoLevelPrefixLimit) {
    for (VertexId a = 0; a <= last_first; ++a) {
      for (VertexId b = a + 1; b <= last_first + 1; ++b) out.push_back({a, b});
    }
  } else {
    for (VertexId a = 0; a <= last_first; ++a) out.push_back({a});
  }
  return out;
}

}  // namespace

OracleOutcome min_h_vertex_cut_exact(const Graph& g, int h,
                                     const SearchBudget& budget) {
  if (h < 0) throw std::invalid_argument("h must be non-negative");
  if (!is_connected(g)) {
    throw std::invalid_argument("vertex cut oracle needs a connected graph");
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

  // A cut must leave at least two vertices behind.
  const std::size_t last_size =
      count >= 2 ? std::min(budget.max_cut_size, count - 1) : 0;
  for (std::size_t k = 0; k < last_size; ++k) {
    if (deadline.poll()) {
      outcome.status = OracleStatus::budget_exhausted;
      return finish();
    }
    const auto prefixes = prefixes_for(count, k);
    std::vector<PartitionResult> results(prefixes.size());
    std::atomic<std::size_t> winner{kNone};

    std::vector<std::optional<SubsetWalker>> walkers(workers);
    detail::for_each_partition(
        prefixes.size(), workers,
        [&](unsigned w, std::size_t p) {
          if (!walkers[w]) walkers[w].emplace(g, h, deadline, winner);
          results[p] = walkers[w]->run(k, prefixes[p], p);
          if (results[p].found) detail::atomic_min(winner, p);
        },
        [&](std::size_t p) {
          return p > winner.load() || deadline.expired();
        });

    const std::size_t won = winner.load();
    const std::size_t settled = won == kNone ? prefixes.size() : won + 1;
    for (std::size_t p = 0; p < settled; ++p) {
      const bool needed_complete = p < won || won == kNone;
      if (needed_complete && !results[p].complete) {
        outcome.status = OracleStatus::budget_exhausted;
        for (const auto& r : results) outcome.subsets_examined += r.leaves;
        return finish();
      }
      outcome.subsets_examined += results[p].leaves;
    }
    if (won != kNone) {
      outcome.status = OracleStatus::exact_value;
      outcome.value = k;
      CutSpec witness;
      witness.kind = CutKind::vertex;
      witness.h = h;
      witness.vertices = std::move(results[won].witness);
      outcome.witness = std::move(witness);
      return finish();
    }
  }
  return finish();
}

}  // namespace hcnlab
