#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pathsym {

enum class Step : std::uint8_t { N, E };

/// Lattice cell named by the coordinates of its north-east corner (1-based).
/// Cells strictly above the main diagonal satisfy y > x.
struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;
using LabelPair = std::pair<int, int>;
using LabelPairSet = std::set<LabelPair>;

/// Raised by DyckPath::parse; `kind` distinguishes the three rejection
/// reasons so callers can report them separately.
class PathParseError : public std::runtime_error {
 public:
  enum class Kind { IllegalChar, Unbalanced, BelowDiagonal };
  PathParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A north/east step sequence from (0,0) to (n,n) staying weakly above the
/// diagonal. Immutable after construction; the constructor validates.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);

  /// Accepts the alphabet {N,E} or {1,0} (1=N, 0=E); mixing is allowed.
  static DyckPath parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  std::string str() const;

  auto operator<=>(const DyckPath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// Reading labels of the N steps (diagonal by diagonal, left to right) and
/// the permutation sigma obtained by reading the labels of each column from
/// bottom to top starting with the leftmost column. Both vectors are
/// 0-indexed by row - 1 resp. position - 1 and hold 1-based labels.
struct ReadingLabels {
  std::vector<int> label_of_row;
  std::vector<int> sigma;
};

/// A filling of the path's rows with positive integers; letter r sits right
/// of the r-th N step.
struct Word {
  explicit Word(std::vector<int> letters);
  const std::vector<int>& letters() const { return letters_; }

 private:
  std::vector<int> letters_;
};

CellSet area_cells(const DyckPath& path);
CellSet corners(const DyckPath& path);
std::vector<int> x_coords(const DyckPath& path);
DyckPath reverse_path(const DyckPath& path);
ReadingLabels reading_labels(const DyckPath& path);
LabelPairSet dinv_pairs(const DyckPath& path);

/// Rebuild the unique Dyck path of semilength n whose area is `cells`.
/// Throws std::invalid_argument when no such path exists.
DyckPath path_from_area(int n, const CellSet& cells);

DyckPath zeta(const DyckPath& path);
DyckPath zeta_inverse(const DyckPath& path);

long long inv_stat(const DyckPath& path, const Word& word);
long long dinv_stat(const DyckPath& path, const Word& word);

/// Flip the EN factors whose corner cells lie in S (each becomes NE).
/// Throws std::invalid_argument when S contains a non-corner.
DyckPath flip_corners(const DyckPath& path, const CellSet& s);

/// Block lengths (l_1,...,l_k) when the step word factors as
/// N^{l_1}E^{l_1}...N^{l_k}E^{l_k}; nullopt otherwise.
std::optional<std::vector<int>> balanced_blocks(const DyckPath& path);

/// All Dyck paths of semilength n in a fixed depth-first (N-before-E) order.
std::vector<DyckPath> all_paths(int n);

nlohmann::json cells_to_json(const CellSet& cells);
nlohmann::json pairs_to_json(const LabelPairSet& pairs);

}  // namespace pathsym
