#include "dtseries/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dtseries {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix * vector: length mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix * IntMatrix: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void axpy_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = s.D;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (!found || abs(d(i, j)) < abs(d(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(s.U, t, pi);
    swap_cols(d, t, pj);
    swap_cols(s.V, t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        axpy_row(d, i, t, q);
        axpy_row(s.U, i, t, q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(s.U, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        axpy_col(d, j, t, q);
        axpy_col(s.V, j, t, q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(s.V, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold in any row whose trailing entries d(t,t) does not divide.
      for (std::size_t i = t + 1; i < m && !dirty; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            axpy_row(d, t, i, Integer(-1));
            axpy_row(s.U, t, i, Integer(-1));
            dirty = true;
            break;
          }
        }
      }
      if (!dirty) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.U, t);
    }
    s.rank = t + 1;
  }
  return s;
}

std::optional<AffineLattice> solve_integer_system(const IntMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer_system: length mismatch");
  IntVector bi;
  if (!to_integer(b, bi)) return std::nullopt;

  const SmithForm s = smith_normal_form(a);
  const IntVector ub = s.U * bi;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  AffineLattice sol;
  sol.particular = s.V * y;
  std::vector<IntVector> kernel;
  for (std::size_t j = s.rank; j < a.cols(); ++j) kernel.push_back(s.V.col(j));
  sol.kernel = hermite_rows(std::move(kernel));
  return sol;
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw GeometryError("signature: form is not symmetric");
  const std::size_t n = gram.rows();
  std::vector<RatVector> a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram(i, j);
  }
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    }
    if (p == n) {
      // No usable diagonal entry: fold an off-diagonal one onto the diagonal
      // via x_k -> x_k + x_j, which sets a_kk to 2 a_kj.
      std::size_t q = n;
      for (std::size_t i = k; i < n && q == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            p = i;
            q = j;
            break;
          }
        }
      }
      if (q == n) {
        sig.zero += n - k;
        return sig;
      }
      for (std::size_t j = 0; j < n; ++j) a[p][j] += a[q][j];
      for (std::size_t i = 0; i < n; ++i) a[i][p] += a[i][q];
    }
    std::swap(a[k], a[p]);
    for (auto& row : a) std::swap(row[k], row[p]);

    const Rational pivot = a[k][k];
    if (pivot > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[k][i] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return sig;
}

Integer form(const IntMatrix& gram, const IntVector& x, const IntVector& y) { return dot(x, gram * y); }

Rational form(const IntMatrix& gram, const RatVector& x, const RatVector& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols()) throw std::invalid_argument("form: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

std::optional<RatVector> solve_rational(std::vector<RatVector> m, RatVector b) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      b[i] -= f * b[k];
    }
  }
  RatVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return x;
}

}  // namespace dtseries
