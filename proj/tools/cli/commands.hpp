#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcnlab/binary_word.hpp"
#include "hcnlab/cuts.hpp"

namespace hcnlab::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_failure = 1;
inline constexpr int invalid_config = 2;
inline constexpr int budget_exhausted = 3;
inline constexpr int discrepancy = 4;
}  // namespace exit_code

enum class Command { gen, cut, oracle, table, check };
enum class Format { text, edgelist, dot, json, csv };

/// Inclusive range of dimensions, "N" or "A..B" on the command line.
struct IntRange {
  int first = 1;
  int last = 1;
  bool single() const noexcept { return first == last; }
};

/// Throws std::invalid_argument on malformed or empty ranges.
IntRange parse_range(std::string_view text);

inline constexpr int kMaxGenDimension = 12;
inline constexpr int kMaxOracleHcnDimension = 7;
inline constexpr int kMaxOracleHypercubeDimension = 14;
inline constexpr int kMaxStructureCheckDimension = 7;

struct RunConfig {
  Command command = Command::gen;
  Network net = Network::hcn;
  IntRange n;
  /// nullopt means every h valid for the kind.
  std::optional<int> h;
  std::vector<CutKind> kinds{CutKind::vertex};
  Format format = Format::text;
  std::optional<BinaryWord> x1;
  std::optional<std::chrono::seconds> time_limit;
  unsigned workers = 1;
  std::optional<std::size_t> max_cut_size;
  int oracle_max_n = 2;
  /// Emit wall-clock fields; off by default so output is reproducible.
  bool timing = false;
  std::vector<std::string> suites;
  std::optional<std::string> out_path;
};

/// Runs one command. Writes to out_path when set, else `out`; diagnostics
/// go to `err`. Returns one of the exit_code values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and runs. Reads
/// HCNLAB_TIME_LIMIT when --time-limit is absent.
int run_args(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace hcnlab::cli
