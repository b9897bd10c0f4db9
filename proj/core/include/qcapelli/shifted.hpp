#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/field.hpp"

namespace qcapelli {

class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);  // throws UsageError unless strict
  static StrictPartition parse(const std::string& s);  // "4,3,1"

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // n
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  bool empty() const { return parts_.empty(); }
  std::string str() const;  // "4,3,1"

  friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

struct Cell {
  int row;
  int column;
  friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.column == b.column; }
};

// Shifted diagram filled by columns, left to right and downwards in each column.
// Row i occupies columns i .. i + lambda_i - 1. Vectors are indexed by box number - 1.
struct ColumnTableau {
  StrictPartition shape;
  std::vector<Cell> cell_of;
  std::vector<int> content;
  std::vector<int> row_of;

  int size() const { return static_cast<int>(cell_of.size()); }
  // Box numbers in row r, left to right.
  std::vector<int> row_entries(int r) const;
  // Box numbers read row by row, top to bottom.
  std::vector<int> row_reading() const;
  // Box number at (row, column), or 0 if the cell is outside the diagram.
  int entry_at(int row, int column) const;
};

ColumnTableau column_tableau(const StrictPartition& lambda);
std::vector<FieldElement> z_values(const StrictPartition& lambda);

struct Removal {
  StrictPartition mu;
  int multiplicity;
};
std::vector<Removal> removals(const StrictPartition& lambda);

bool contains(const StrictPartition& lambda, const StrictPartition& mu);  // lambda inside mu
std::int64_t count_standard(const StrictPartition& lambda);
std::vector<StrictPartition> enumerate_strict(int n, int max_len);

}  // namespace qcapelli
