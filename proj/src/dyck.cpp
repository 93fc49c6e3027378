#include "pathsym/dyck.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace pathsym {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long long n = 0, e = 0;
  for (Step s : steps_) {
    if (s == Step::N) ++n; else ++e;
    if (e > n) throw std::invalid_argument("step sequence dips below the diagonal");
  }
  if (n != e) throw std::invalid_argument("unbalanced step sequence");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'N': case '1': steps.push_back(Step::N); break;
      case 'E': case '0': steps.push_back(Step::E); break;
      default:
        throw PathParseError(PathParseError::Kind::IllegalChar,
                             std::string("illegal character '") + ch + "' in path");
    }
  }
  long long n = std::count(steps.begin(), steps.end(), Step::N);
  long long e = static_cast<long long>(steps.size()) - n;
  if (n != e)
    throw PathParseError(PathParseError::Kind::Unbalanced,
                         "unbalanced path: " + std::to_string(n) + " N vs " +
                             std::to_string(e) + " E steps");
  n = e = 0;
  for (Step s : steps) {
    if (s == Step::N) ++n; else ++e;
    if (e > n)
      throw PathParseError(PathParseError::Kind::BelowDiagonal,
                           "path dips below the diagonal");
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::N ? 'N' : 'E');
  return out;
}

namespace {

// Height of the i-th E step = number of N steps before it. Column i of the
// area then consists of the cells (i, j) with i < j <= h_i.
std::vector<int> column_heights(const DyckPath& path) {
  std::vector<int> h;
  int seen_n = 0;
  for (Step s : path.steps()) {
    if (s == Step::N) ++seen_n; else h.push_back(seen_n);
  }
  return h;
}

}  // namespace

CellSet area_cells(const DyckPath& path) {
  CellSet cells;
  const std::vector<int> h = column_heights(path);
  for (int i = 1; i <= static_cast<int>(h.size()); ++i)
    for (int j = i + 1; j <= h[i - 1]; ++j) cells.insert({i, j});
  return cells;
}

CellSet corners(const DyckPath& path) {
  CellSet cells;
  const auto& steps = path.steps();
  int seen_n = 0, seen_e = 0;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k] == Step::E && steps[k + 1] == Step::N)
      cells.insert({seen_e + 1, seen_n + 1});
    if (steps[k] == Step::N) ++seen_n; else ++seen_e;
  }
  return cells;
}

std::vector<int> x_coords(const DyckPath& path) {
  std::vector<int> xs;
  xs.reserve(path.semilength());
  int seen_e = 0;
  for (Step s : path.steps()) {
    if (s == Step::N) xs.push_back(seen_e + 1); else ++seen_e;
  }
  return xs;
}

DyckPath reverse_path(const DyckPath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  for (Step& s : steps) s = (s == Step::N) ? Step::E : Step::N;
  return DyckPath(std::move(steps));
}

ReadingLabels reading_labels(const DyckPath& path) {
  const int n = path.semilength();
  const std::vector<int> xs = x_coords(path);
  // Row r sits on diagonal r - x_r; label diagonals from the lowest up,
  // left to right (increasing x, equivalently increasing row) inside each.
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 1);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
    int da = a - xs[a - 1], db = b - xs[b - 1];
    if (da != db) return da < db;
    return xs[a - 1] < xs[b - 1];
  });
  ReadingLabels out;
  out.label_of_row.assign(n, 0);
  for (int label = 1; label <= n; ++label) out.label_of_row[rows[label - 1] - 1] = label;
  // sigma: columns left to right, rows bottom to top within a column.
  std::vector<int> by_column(n);
  std::iota(by_column.begin(), by_column.end(), 1);
  std::stable_sort(by_column.begin(), by_column.end(), [&](int a, int b) {
    if (xs[a - 1] != xs[b - 1]) return xs[a - 1] < xs[b - 1];
    return a < b;
  });
  out.sigma.reserve(n);
  for (int r : by_column) out.sigma.push_back(out.label_of_row[r - 1]);
  return out;
}

LabelPairSet dinv_pairs(const DyckPath& path) {
  const int n = path.semilength();
  const std::vector<int> xs = x_coords(path);
  const ReadingLabels labels = reading_labels(path);
  LabelPairSet pairs;
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      if (r == s) continue;
      const int dr = r - xs[r - 1], ds = s - xs[s - 1];
      const int lr = labels.label_of_row[r - 1], ls = labels.label_of_row[s - 1];
      if (dr == ds && lr < ls) pairs.insert({lr, ls});
      // Box s one diagonal above and strictly to the left of box r.
      if (ds == dr + 1 && xs[s - 1] < xs[r - 1]) pairs.insert({lr, ls});
    }
  }
  return pairs;
}

DyckPath path_from_area(int n, const CellSet& cells) {
  std::vector<int> h(n);
  std::iota(h.begin(), h.end(), 1);
  for (const Cell& c : cells) {
    if (c.x < 1 || c.x > n || c.y <= c.x || c.y > n)
      throw std::invalid_argument("cell outside the strict upper triangle");
    h[c.x - 1] = std::max(h[c.x - 1], c.y);
  }
  // Columns must be full intervals (i, h_i] and the heights monotone.
  std::size_t expected = 0;
  for (int i = 1; i <= n; ++i) {
    if (i > 1 && h[i - 1] < h[i - 2])
      throw std::invalid_argument("area set has non-monotone column heights");
    for (int j = i + 1; j <= h[i - 1]; ++j) {
      if (!cells.count({i, j}))
        throw std::invalid_argument("area set has a gap in a column");
      ++expected;
    }
  }
  if (expected != cells.size())
    throw std::invalid_argument("area set is not realizable by a Dyck path");
  std::vector<Step> steps;
  steps.reserve(2 * n);
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    for (int k = prev; k < h[i - 1]; ++k) steps.push_back(Step::N);
    steps.push_back(Step::E);
    prev = h[i - 1];
  }
  return DyckPath(std::move(steps));
}

namespace {

CellSet pairs_as_cells(const LabelPairSet& pairs) {
  CellSet cells;
  for (const auto& [i, j] : pairs) cells.insert({i, j});
  return cells;
}

}  // namespace

DyckPath zeta(const DyckPath& path) {
  return path_from_area(path.semilength(), pairs_as_cells(dinv_pairs(path)));
}

namespace {

using ZetaTable = std::map<DyckPath, DyckPath>;

std::shared_ptr<const ZetaTable> zeta_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ZetaTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  auto table = std::make_shared<ZetaTable>();
  for (const DyckPath& p : all_paths(n)) {
    auto [pos, inserted] = table->emplace(zeta(p), p);
    if (!inserted) throw std::logic_error("zeta is not injective");
  }
  tables.emplace(n, table);
  return table;
}

}  // namespace

DyckPath zeta_inverse(const DyckPath& path) {
  auto table = zeta_table(path.semilength());
  auto it = table->find(path);
  if (it == table->end()) throw std::logic_error("zeta is not surjective");
  return it->second;
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int v : letters_)
    if (v < 1) throw std::invalid_argument("word letters must be positive");
}

long long inv_stat(const DyckPath& path, const Word& word) {
  const auto& w = word.letters();
  if (static_cast<int>(w.size()) != path.semilength())
    throw std::invalid_argument("word length differs from the semilength");
  long long count = 0;
  for (const Cell& c : area_cells(path))
    if (w[c.x - 1] > w[c.y - 1]) ++count;
  return count;
}

long long dinv_stat(const DyckPath& path, const Word& word) {
  const auto& w = word.letters();
  const int n = path.semilength();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("word length differs from the semilength");
  const ReadingLabels labels = reading_labels(path);
  std::vector<int> row_of_label(n + 1, 0);
  for (int r = 1; r <= n; ++r) row_of_label[labels.label_of_row[r - 1]] = r;
  long long count = 0;
  for (const auto& [i, j] : dinv_pairs(path))
    if (w[row_of_label[i] - 1] > w[row_of_label[j] - 1]) ++count;
  return count;
}

DyckPath flip_corners(const DyckPath& path, const CellSet& s) {
  std::map<Cell, std::size_t> corner_step;
  const auto& steps = path.steps();
  int seen_n = 0, seen_e = 0;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k] == Step::E && steps[k + 1] == Step::N)
      corner_step[{seen_e + 1, seen_n + 1}] = k;
    if (steps[k] == Step::N) ++seen_n; else ++seen_e;
  }
  std::vector<Step> out = steps;
  for (const Cell& c : s) {
    auto it = corner_step.find(c);
    if (it == corner_step.end())
      throw std::invalid_argument("cell is not a corner of the path");
    out[it->second] = Step::N;
    out[it->second + 1] = Step::E;
  }
  return DyckPath(std::move(out));
}

std::optional<std::vector<int>> balanced_blocks(const DyckPath& path) {
  const auto& steps = path.steps();
  std::vector<int> blocks;
  std::size_t k = 0;
  while (k < steps.size()) {
    std::size_t run = 0;
    while (k + run < steps.size() && steps[k + run] == Step::N) ++run;
    if (run == 0) return std::nullopt;
    for (std::size_t j = 0; j < run; ++j)
      if (k + run + j >= steps.size() || steps[k + run + j] != Step::E)
        return std::nullopt;
    blocks.push_back(static_cast<int>(run));
    k += 2 * run;
  }
  return blocks;
}

namespace {

void gen_paths(int n, int used_n, int used_e, std::vector<Step>& acc,
               std::vector<DyckPath>& out) {
  if (used_n + used_e == 2 * n) {
    out.emplace_back(acc);
    return;
  }
  if (used_n < n) {
    acc.push_back(Step::N);
    gen_paths(n, used_n + 1, used_e, acc, out);
    acc.pop_back();
  }
  if (used_e < used_n) {
    acc.push_back(Step::E);
    gen_paths(n, used_n, used_e + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> all_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<Step> acc;
  acc.reserve(2 * n);
  gen_paths(n, 0, 0, acc, out);
  return out;
}

nlohmann::json cells_to_json(const CellSet& cells) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cell& c : cells) arr.push_back({c.x, c.y});
  return arr;
}

nlohmann::json pairs_to_json(const LabelPairSet& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return arr;
}

}  // namespace pathsym
