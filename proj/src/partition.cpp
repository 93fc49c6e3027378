#include "pathsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition: bad integer '" +
                                  std::string(tok) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

nlohmann::json Partition::to_json() const {
  return nlohmann::json(parts_);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.length() > 0) cols.assign(lambda.parts()[0], 0);
  for (int p : lambda.parts())
    for (int c = 0; c < p; ++c) ++cols[c];
  return Partition(std::move(cols));
}

ArmLegColeg arm_leg_coleg(const Partition& lambda, int row, int col) {
  if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row))
    throw std::invalid_argument("box outside the partition");
  const Partition conj = conjugate(lambda);
  return {lambda.part(row) - col, conj.part(col) - row, row - 1};
}

namespace {

LabeledDiagram reading_order(const Partition& lambda, bool left_to_right) {
  LabeledDiagram d;
  const auto& parts = lambda.parts();
  d.row_len.assign(parts.rbegin(), parts.rend());  // shortest row at the bottom
  int next = 1;
  for (int len : d.row_len) {
    std::vector<int> row(len);
    if (left_to_right) {
      for (int c = 0; c < len; ++c) row[c] = next++;
    } else {
      for (int c = len - 1; c >= 0; --c) row[c] = next++;
    }
    d.label.push_back(std::move(row));
  }
  return d;
}

LabelPairSet attack_pairs(const LabeledDiagram& d, bool inv) {
  LabelPairSet pairs;
  const int rows = static_cast<int>(d.row_len.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < d.row_len[r]; ++c) {
      const int attacker = d.label[r][c];
      if (inv) {
        for (int c2 = c + 1; c2 < d.row_len[r]; ++c2)
          pairs.insert({attacker, d.label[r][c2]});
        if (r + 1 < rows)
          for (int c2 = 0; c2 < c; ++c2)
            pairs.insert({attacker, d.label[r + 1][c2]});
      } else {
        for (int c2 = 0; c2 < c; ++c2)
          pairs.insert({attacker, d.label[r][c2]});
        if (r + 1 < rows)
          for (int c2 = c + 1; c2 < d.row_len[r + 1]; ++c2)
            pairs.insert({attacker, d.label[r + 1][c2]});
      }
    }
  }
  return pairs;
}

}  // namespace

LabeledDiagram inv_reading_order(const Partition& lambda) {
  return reading_order(lambda, true);
}

LabeledDiagram quinv_reading_order(const Partition& lambda) {
  return reading_order(lambda, false);
}

LabelPairSet inv_pairs(const Partition& lambda) {
  return attack_pairs(inv_reading_order(lambda), true);
}

LabelPairSet quinv_pairs(const Partition& lambda) {
  return attack_pairs(quinv_reading_order(lambda), false);
}

namespace {

void append(std::vector<Step>& steps, Step s, int count) {
  steps.insert(steps.end(), count, s);
}

}  // namespace

DyckPath path_inv(const Partition& lambda) {
  const int ell = lambda.length();
  if (ell == 0) return DyckPath{};
  std::vector<Step> steps;
  steps.reserve(2 * lambda.size());
  append(steps, Step::N, lambda.part(ell));
  for (int i = ell; i >= 2; --i) {
    for (int k = 0; k < lambda.part(i); ++k) {
      steps.push_back(Step::E);
      steps.push_back(Step::N);
    }
    append(steps, Step::N, lambda.part(i - 1) - lambda.part(i));
  }
  append(steps, Step::E, lambda.part(1));
  return DyckPath(std::move(steps));
}

DyckPath path_quinv(const Partition& lambda) {
  const int ell = lambda.length();
  if (ell == 0) return DyckPath{};
  std::vector<Step> steps;
  steps.reserve(2 * lambda.size());
  append(steps, Step::N, lambda.part(ell));
  for (int i = ell; i >= 2; --i) {
    append(steps, Step::N, lambda.part(i - 1) - lambda.part(i));
    for (int k = 0; k < lambda.part(i); ++k) {
      steps.push_back(Step::E);
      steps.push_back(Step::N);
    }
  }
  append(steps, Step::E, lambda.part(1));
  return DyckPath(std::move(steps));
}

DyckPath path_balanced(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<Step> steps;
  steps.reserve(2 * lambda.size());
  for (int c = conj.length(); c >= 1; --c) {
    append(steps, Step::N, conj.part(c));
    append(steps, Step::E, conj.part(c));
  }
  return DyckPath(std::move(steps));
}

long long alpha_inv(const Partition& lambda) {
  long long sum = 0;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) {
      const ArmLegColeg alc = arm_leg_coleg(lambda, r, c);
      if (alc.coleg != 0) sum += alc.arm;
    }
  return sum;
}

long long alpha_quinv(const Partition& lambda) {
  long long sum = 0;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) {
      const ArmLegColeg alc = arm_leg_coleg(lambda, r, c);
      if (alc.leg != 0) sum += alc.arm;
    }
  return sum;
}

long long mult_inversion_sum(const Partition& lambda) {
  long long count = 0;
  const auto& parts = lambda.parts();
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q)
      if (parts[p] != parts[q]) ++count;
  return count;
}

long long corner_count(const Partition& lambda) {
  return lambda.size() - lambda.part(1);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  if (n == 0) out.emplace_back();
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  long long sum_a = 0, sum_b = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sum_a += a.part(i);
    sum_b += b.part(i);
    if (sum_a < sum_b) return false;
  }
  return true;
}

}  // namespace pathsym
