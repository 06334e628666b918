#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "shapelab/base.hpp"

namespace shapelab::exactla {

// Dense matrix over Int, row-major. Dimensions may be zero in either
// direction; a 0xN or Nx0 matrix is a legitimate value, not an error.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("matrix dimensions must be nonnegative");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Int(0));
  }

  IntMatrix(long rows, long cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("matrix dimensions must be nonnegative");
    if (e_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
      throw std::invalid_argument("entry count does not match dimensions");
  }

  // Literal-friendly constructor, mainly for tests and small fixtures.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows.begin()->size());
    IntMatrix m(r, c);
    long i = 0;
    for (const auto& row : rows) {
      if (static_cast<long>(row.size()) != c)
        throw std::invalid_argument("ragged row in matrix literal");
      long j = 0;
      for (long v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Int& at(long i, long j) {
    return e_[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
  }
  const Int& at(long i, long j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Int> column(long j) const {
    std::vector<Int> v(static_cast<std::size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
  }

  void set_column(long j, const std::vector<Int>& v) {
    for (long i = 0; i < rows_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
  }

  // Columns [lo, hi) as a new matrix.
  IntMatrix take_cols(long lo, long hi) const {
    IntMatrix m(rows_, hi - lo);
    for (long i = 0; i < rows_; ++i)
      for (long j = lo; j < hi; ++j) m.at(i, j - lo) = at(i, j);
    return m;
  }

  // Rows [lo, hi) as a new matrix.
  IntMatrix take_rows(long lo, long hi) const {
    IntMatrix m(hi - lo, cols_);
    for (long i = lo; i < hi; ++i)
      for (long j = 0; j < cols_; ++j) m.at(i - lo, j) = at(i, j);
    return m;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<long>(x.size()) != cols_)
      throw std::invalid_argument("vector length does not match column count");
    std::vector<Int> y(static_cast<std::size_t>(rows_), Int(0));
    for (long i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (long j = 0; j < cols_; ++j)
        if (at(i, j) != 0) acc += at(i, j) * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("inner dimensions do not match");
    IntMatrix p(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (long j = 0; j < o.cols_; ++j)
          if (o.at(k, j) != 0) p.at(i, j) += a * o.at(k, j);
      }
    return p;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("dimension mismatch in subtraction");
    IntMatrix d(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) d.e_[k] = e_[k] - o.e_[k];
    return d;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("dimension mismatch in addition");
    IntMatrix s(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = e_[k] + o.e_[k];
    return s;
  }

  void swap_rows(long a, long b) {
    if (a == b) return;
    for (long j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  void swap_cols(long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }

  // row[dst] += c * row[src]
  void add_row_multiple(long dst, long src, const Int& c) {
    if (c == 0) return;
    for (long j = 0; j < cols_; ++j)
      if (at(src, j) != 0) at(dst, j) += c * at(src, j);
  }

  // col[dst] += c * col[src]
  void add_col_multiple(long dst, long src, const Int& c) {
    if (c == 0) return;
    for (long i = 0; i < rows_; ++i)
      if (at(i, src) != 0) at(i, dst) += c * at(i, src);
  }

  void negate_row(long i) {
    for (long j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
  }

  std::string to_string() const {
    std::ostringstream out;
    out << rows_ << "x" << cols_ << " [";
    for (long i = 0; i < rows_; ++i) {
      out << (i ? "; " : "");
      for (long j = 0; j < cols_; ++j)
        out << (j ? " " : "") << at(i, j).get_str();
    }
    out << "]";
    return out.str();
  }

 private:
  long rows_, cols_;
  std::vector<Int> e_;
};

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (long i = 0; i < b.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  long r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  IntMatrix m(r, c);
  long ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (long i = 0; i < b.rows(); ++i)
      for (long j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

// Smith normal form data: D = U * A * V with U, V invertible over Int,
// D diagonal with nonnegative entries d_0 | d_1 | ... | d_{rank-1}, the
// rest zero.
struct SmithDecomposition {
  IntMatrix U, D, V;
  long rank = 0;

  Int diag(long i) const { return D.at(i, i); }
};

namespace detail {

inline bool divides(const Int& d, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Deterministic pivot rule: nonzero entry of minimal |value| in the
// trailing submatrix, ties broken by smallest row, then smallest column.
inline bool find_pivot(const IntMatrix& d, long t, long& pi, long& pj) {
  bool found = false;
  Int best = 0;
  for (long i = t; i < d.rows(); ++i)
    for (long j = t; j < d.cols(); ++j) {
      const Int& v = d.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s;
  s.D = a;
  s.U = IntMatrix::identity(a.rows());
  s.V = IntMatrix::identity(a.cols());
  IntMatrix& d = s.D;
  const long steps = std::min(a.rows(), a.cols());

  for (long t = 0; t < steps; ++t) {
    long pi = 0, pj = 0;
    if (!detail::find_pivot(d, t, pi, pj)) break;

    for (;;) {
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      // Clear below the pivot; a nonzero remainder yields a strictly
      // smaller entry, so repick and start over.
      bool dirty = false;
      for (long i = t + 1; i < d.rows() && !dirty; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      if (!dirty) {
        for (long j = t + 1; j < d.cols() && !dirty; ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = d.at(t, j) / d.at(t, t);
          d.add_col_multiple(j, t, -q);
          s.V.add_col_multiple(j, t, -q);
          if (d.at(t, j) != 0) dirty = true;
        }
      }
      if (!dirty) {
        // Row and column are clear. Enforce divisibility into the rest
        // of the submatrix before moving on.
        bool fixed = false;
        for (long i = t + 1; i < d.rows() && !fixed; ++i)
          for (long j = t + 1; j < d.cols() && !fixed; ++j)
            if (!detail::divides(d.at(t, t), d.at(i, j))) {
              d.add_row_multiple(t, i, 1);
              s.U.add_row_multiple(t, i, 1);
              fixed = true;
            }
        if (!fixed) break;
      }
      if (!detail::find_pivot(d, t, pi, pj))
        throw std::logic_error("pivot vanished during reduction");
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }

  for (long t = 0; t < steps; ++t)
    if (d.at(t, t) != 0) ++s.rank;
  return s;
}

// Canonical column echelon form spanning the same column lattice:
// positive pivots walking down the rows, entries left of each pivot
// reduced into [0, pivot). Besides being a normal form this keeps
// entries small; a basis read off the SNF transform can carry entries
// thousands of bits wide even when the lattice itself is tame.
inline IntMatrix column_hermite(IntMatrix k) {
  const long m = k.rows(), n = k.cols();
  long c = 0;
  for (long row = 0; row < m && c < n; ++row) {
    // Euclid across the row until one nonzero entry remains at c.
    for (;;) {
      long best = -1;
      Int best_abs = 0;
      for (long j = c; j < n; ++j) {
        if (k.at(row, j) == 0) continue;
        Int a = abs(k.at(row, j));
        if (best == -1 || a < best_abs) {
          best = j;
          best_abs = a;
        }
      }
      if (best == -1) break;
      k.swap_cols(c, best);
      bool cleared = true;
      for (long j = c + 1; j < n; ++j) {
        if (k.at(row, j) == 0) continue;
        Int q = k.at(row, j) / k.at(row, c);
        k.add_col_multiple(j, c, -q);
        if (k.at(row, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (k.at(row, c) == 0) continue;  // row is zero beyond the pivots
    if (k.at(row, c) < 0)
      for (long i = 0; i < m; ++i) k.at(i, c) = -k.at(i, c);
    for (long j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), k.at(row, j).get_mpz_t(),
                 k.at(row, c).get_mpz_t());
      k.add_col_multiple(j, c, -q);
    }
    ++c;
  }
  return k;
}

// Basis of the integer null space of A, as columns. The result has
// A.cols() rows and (A.cols() - rank) columns, normalized to the
// column Hermite form of the kernel lattice, hence deterministic.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  return column_hermite(s.V.take_cols(s.rank, a.cols()));
}

// Exact solver for A x = b over Int, factored so many right-hand sides
// can reuse one Smith decomposition.
class LinearSolver {
 public:
  explicit LinearSolver(IntMatrix a)
      : a_rows_(a.rows()), a_cols_(a.cols()), s_(smith_normal_form(a)) {}

  long rows() const { return a_rows_; }
  long cols() const { return a_cols_; }

  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
    if (static_cast<long>(b.size()) != a_rows_)
      throw std::invalid_argument("right-hand side length does not match");
    std::vector<Int> c = s_.U.apply(b);
    std::vector<Int> y(static_cast<std::size_t>(a_cols_), Int(0));
    const long m = std::min(a_rows_, a_cols_);
    for (long i = 0; i < m; ++i) {
      const Int& di = s_.D.at(i, i);
      Int& ci = c[static_cast<std::size_t>(i)];
      if (di == 0) {
        if (ci != 0) return std::nullopt;
      } else {
        if (!detail::divides(di, ci)) return std::nullopt;
        mpz_divexact(y[static_cast<std::size_t>(i)].get_mpz_t(),
                     ci.get_mpz_t(), di.get_mpz_t());
      }
    }
    for (long i = m; i < a_rows_; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    return s_.V.apply(y);
  }

 private:
  long a_rows_, a_cols_;
  SmithDecomposition s_;
};

inline std::optional<std::vector<Int>> solve_linear(const IntMatrix& a,
                                                    const std::vector<Int>& b) {
  return LinearSolver(a).solve(b);
}

// Solve A X = B column by column; nullopt if any column has no solution.
inline std::optional<IntMatrix> solve_columns(const IntMatrix& a,
                                              const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_columns: row counts differ");
  LinearSolver solver(a);
  IntMatrix x(a.cols(), b.cols());
  for (long j = 0; j < b.cols(); ++j) {
    auto col = solver.solve(b.column(j));
    if (!col) return std::nullopt;
    x.set_column(j, *col);
  }
  return x;
}

}  // namespace shapelab::exactla
