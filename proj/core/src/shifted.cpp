#include "qcapelli/shifted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qcapelli/error.hpp"

namespace qcapelli {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1]) throw UsageError("partition " + str() + " is not strict");
  }
}

StrictPartition StrictPartition::parse(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  if (s.empty()) throw UsageError("empty partition");
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("malformed partition '" + s + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed partition '" + s + "'");
    }
    if (used != tok.size()) throw UsageError("malformed partition '" + s + "'");
    parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

int StrictPartition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

std::string StrictPartition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

std::vector<int> ColumnTableau::row_entries(int r) const {
  std::vector<int> out;
  for (int col = r; col < r + shape[r]; ++col) out.push_back(entry_at(r, col));
  return out;
}

std::vector<int> ColumnTableau::row_reading() const {
  std::vector<int> out;
  for (int r = 1; r <= shape.length(); ++r) {
    for (int e : row_entries(r)) out.push_back(e);
  }
  return out;
}

int ColumnTableau::entry_at(int row, int column) const {
  for (std::size_t k = 0; k < cell_of.size(); ++k) {
    if (cell_of[k].row == row && cell_of[k].column == column) return static_cast<int>(k) + 1;
  }
  return 0;
}

ColumnTableau column_tableau(const StrictPartition& lambda) {
  ColumnTableau t;
  t.shape = lambda;
  int l = lambda.length();
  int last_col = 0;
  for (int r = 1; r <= l; ++r) last_col = std::max(last_col, r + lambda[r] - 1);
  for (int col = 1; col <= last_col; ++col) {
    for (int r = 1; r <= l; ++r) {
      if (col >= r && col <= r + lambda[r] - 1) {
        t.cell_of.push_back({r, col});
        t.content.push_back(col - r);
        t.row_of.push_back(r);
      }
    }
  }
  return t;
}

std::vector<FieldElement> z_values(const StrictPartition& lambda) {
  std::vector<FieldElement> z;
  for (int c : column_tableau(lambda).content) z.push_back(sqrt_int(static_cast<std::int64_t>(c) * (c + 1)));
  return z;
}

std::vector<Removal> removals(const StrictPartition& lambda) {
  std::vector<Removal> out;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<int> q = p;
    q[i] -= 1;
    if (q[i] == 0) q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
    bool strict = true;
    for (std::size_t k = 1; k < q.size(); ++k) strict = strict && q[k] < q[k - 1];
    if (!strict) continue;
    StrictPartition mu(q);
    int m = (mu.length() % 2 == 1 && lambda.length() % 2 == 0) ? 1 : 2;
    out.push_back({mu, m});
  }
  return out;
}

bool contains(const StrictPartition& lambda, const StrictPartition& mu) {
  if (lambda.length() > mu.length()) return false;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda[i] > mu[i]) return false;
  }
  return true;
}

std::int64_t count_standard(const StrictPartition& lambda) {
  ColumnTableau t = column_tableau(lambda);
  int n = t.size();
  std::vector<int> filled(static_cast<std::size_t>(n), 0);
  // predecessors: left neighbour and upper neighbour of each cell
  std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Cell c = t.cell_of[static_cast<std::size_t>(k)];
    int left = t.entry_at(c.row, c.column - 1), up = t.entry_at(c.row - 1, c.column);
    if (left) pred[static_cast<std::size_t>(k)].push_back(left - 1);
    if (up) pred[static_cast<std::size_t>(k)].push_back(up - 1);
  }
  std::function<std::int64_t(int)> place = [&](int placed) -> std::int64_t {
    if (placed == n) return 1;
    std::int64_t total = 0;
    for (int k = 0; k < n; ++k) {
      if (filled[static_cast<std::size_t>(k)]) continue;
      bool ready = true;
      for (int p : pred[static_cast<std::size_t>(k)]) ready = ready && filled[static_cast<std::size_t>(p)];
      if (!ready) continue;
      filled[static_cast<std::size_t>(k)] = 1;
      total += place(placed + 1);
      filled[static_cast<std::size_t>(k)] = 0;
    }
    return total;
  };
  return place(0);
}

std::vector<StrictPartition> enumerate_strict(int n, int max_len) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p - 1);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

}  // namespace qcapelli
