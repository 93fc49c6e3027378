#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pathsym/dyck.hpp"

namespace pathsym {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// valid and indexes the degree-0 constants.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Comma-separated decreasing integers, e.g. "3,2"; "" is the empty
  /// partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                            // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                       // 1-based, 0 beyond the length
  std::string str() const;
  nlohmann::json to_json() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct ArmLegColeg {
  int arm = 0;
  int leg = 0;
  int coleg = 0;
};

Partition conjugate(const Partition& lambda);

/// Box (row, col), 1-based, row 1 the longest row; arm counts boxes strictly
/// right in the row, leg boxes strictly above in the column (toward shorter
/// rows), coleg boxes strictly below (row 1 has coleg 0).
ArmLegColeg arm_leg_coleg(const Partition& lambda, int row, int col);

/// Boxes of lambda stacked with the shortest row at the bottom and rows
/// weakly lengthening upward; reading orders run bottom to top. label[r][c]
/// is the 1-based reading label of the box in the r-th row from the bottom
/// (0-based r, c). "The row above" a box is therefore at r + 1.
struct LabeledDiagram {
  std::vector<int> row_len;
  std::vector<std::vector<int>> label;
};

LabeledDiagram inv_reading_order(const Partition& lambda);    // rows left to right
LabeledDiagram quinv_reading_order(const Partition& lambda);  // rows right to left

/// Attack pairs (attacker label, attacked label); the reading orders make
/// attacker < attacked automatic.
LabelPairSet inv_pairs(const Partition& lambda);
LabelPairSet quinv_pairs(const Partition& lambda);

DyckPath path_inv(const Partition& lambda);
DyckPath path_quinv(const Partition& lambda);
DyckPath path_balanced(const Partition& lambda);

long long alpha_inv(const Partition& lambda);
long long alpha_quinv(const Partition& lambda);

/// Sum of m_i(lambda) * m_j(lambda) over i > j; equivalently the number of
/// position pairs p < q with lambda_p != lambda_q.
long long mult_inversion_sum(const Partition& lambda);

long long corner_count(const Partition& lambda);  // |lambda| - lambda_1

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

bool dominates(const Partition& a, const Partition& b);

}  // namespace pathsym
