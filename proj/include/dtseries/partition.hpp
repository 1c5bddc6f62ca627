#pragma once

#include <vector>

namespace dtseries {

/// Box (row, col) of a Young diagram, both zero-based.
struct Cell {
  int row = 0;
  int col = 0;
};

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }

  bool contains(Cell c) const;
  /// Length of column `col` (the conjugate part).
  int column_length(int col) const;
  Partition conjugate() const;
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Boxes to the right of c in its row.
int arm(const Partition& p, Cell c);
/// Boxes below c in its column.
int leg(const Partition& p, Cell c);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace dtseries
