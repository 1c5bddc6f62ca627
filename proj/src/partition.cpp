#include "dtseries/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace dtseries {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::contains(Cell c) const {
  return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[static_cast<std::size_t>(c.row)];
}

int Partition::column_length(int col) const {
  int n = 0;
  while (n < length() && parts_[static_cast<std::size_t>(n)] > col) ++n;
  return n;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    for (int c = 0; c < parts_.front(); ++c) out.push_back(column_length(c));
  }
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 0; r < length(); ++r) {
    for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) out.push_back({r, c});
  }
  return out;
}

int arm(const Partition& p, Cell c) {
  if (!p.contains(c)) throw std::invalid_argument("arm: cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in diagram");
  return p.parts()[static_cast<std::size_t>(c.row)] - c.col - 1;
}

int leg(const Partition& p, Cell c) {
  if (!p.contains(c)) throw std::invalid_argument("leg: cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in diagram");
  return p.column_length(c.col) - c.row - 1;
}

namespace {

void build(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    build(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  build(n, n, prefix, out);
  return out;
}

}  // namespace dtseries
