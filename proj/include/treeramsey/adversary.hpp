#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeramsey {

/// Color `points` with `colors` colors so that no line is monochromatic.
struct ColoringProblem {
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> lines;
  unsigned colors = 2;
  std::vector<std::string> labels;  ///< optional, one per point

  /// Sorts and dedups each line; throws std::invalid_argument for empty
  /// lines, out-of-range points or zero colors.
  void normalize();
};

using Coloring = std::vector<std::uint8_t>;

enum class Pruning { Colors, None };

struct AdversaryOptions {
  Pruning pruning = Pruning::Colors;
  bool parallel = false;
};

/// Size guard on colored sets. Exceeding it makes a check UNDECIDED-AT-SCALE.
struct ScaleLimits {
  std::size_t max_points_d2 = 25;
  std::size_t max_points_d3 = 16;
  bool unsafe = false;

  std::size_t limit(unsigned colors) const;
  bool allows(std::size_t points, unsigned colors) const { return unsafe || points <= limit(colors); }
};

class ScaleGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool verify_avoiding(const ColoringProblem& prob, const Coloring& c);

/// Backtracking search for a coloring with no monochromatic line. Returns the
/// least avoiding coloring in search order (points by descending line
/// membership, ties by index; colors ascending), or nullopt when every
/// coloring has a monochromatic line.
std::optional<Coloring> find_avoiding_coloring(const ColoringProblem& prob, const AdversaryOptions& opts = {});
std::optional<Coloring> find_avoiding_coloring_serial(const ColoringProblem& prob, Pruning pruning = Pruning::Colors);
std::optional<Coloring> find_avoiding_coloring_parallel(const ColoringProblem& prob, Pruning pruning = Pruning::Colors);

/// Plain enumeration of all colorings (Gray code order for two colors); the oracle.
std::optional<Coloring> exhaustive_avoiding_coloring(const ColoringProblem& prob);

struct Refutation {
  unsigned parameter = 0;
  ColoringProblem problem;
  Coloring coloring;
};

enum class SearchStatus { Found, Undecided };

struct MinimalParameterResult {
  SearchStatus status = SearchStatus::Undecided;
  unsigned value = 0;                  ///< least passing parameter when Found
  std::vector<Refutation> refutations;  ///< one per refuted parameter, increasing
  std::string note;
};

/// Least n >= lo (and <= hi) whose problem admits no avoiding coloring.
/// Stops with Undecided when a problem exceeds the scale limits.
MinimalParameterResult minimal_parameter(const std::function<ColoringProblem(unsigned)>& gen, unsigned lo,
                                         unsigned hi, const ScaleLimits& limits = {},
                                         const AdversaryOptions& opts = {});

}  // namespace treeramsey
