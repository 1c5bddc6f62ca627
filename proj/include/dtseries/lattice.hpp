#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dtseries/rational.hpp"

namespace dtseries {

/// Dense row-major matrix over Z. Ranks here are tiny (at most a few dozen).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transposed() const;

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal (first `rank` entries nonzero).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer solutions of A x = b as x = particular + Z-span(kernel).
struct AffineLattice {
  IntVector particular;
  std::vector<IntVector> kernel;
};

/// Empty optional when b has non-integral entries or the system has no integral solution.
std::optional<AffineLattice> solve_integer_system(const IntMatrix& a, const RatVector& b);

/// Row-style Hermite normal form of a list of row vectors; zero rows dropped,
/// pivots positive, entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);

/// Signature (positive, negative, zero) of a symmetric integer form, by
/// congruence diagonalization over Q.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Signature signature(const IntMatrix& gram);

/// Bilinear form value x^T G y.
Integer form(const IntMatrix& gram, const IntVector& x, const IntVector& y);
Rational form(const IntMatrix& gram, const RatVector& x, const RatVector& y);

/// Solves M x = b over Q for square nonsingular M; empty when M is singular.
std::optional<RatVector> solve_rational(std::vector<RatVector> m, RatVector b);

}  // namespace dtseries
