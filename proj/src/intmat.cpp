#include "ckdual/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ckdual/errors.hpp"

namespace ckdual {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw DimensionMismatch("ragged row list");
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::column_vector(const IntVector& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hconcat: row counts differ");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("vconcat: column counts differ");
  IntMatrix m(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = below(i, j);
  return m;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("block out of range");
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference: shapes differ");
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rational_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

namespace {

// Working state of the Smith reduction: d is reduced in place while the
// four transformation matrices record every elementary operation.
struct SnfWork {
  IntMatrix d, u, u_inv, v, v_inv;

  explicit SnfWork(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void row_add(std::size_t target, std::size_t source, const Int& f) {
    d.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
    u_inv.add_col_multiple(source, target, -f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void row_negate(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void col_add(std::size_t target, std::size_t source, const Int& f) {
    d.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
    v_inv.add_row_multiple(source, target, -f);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfWork w(m);
  IntMatrix& d = w.d;
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // Pivot: nonzero entry of smallest absolute value in the trailing block.
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        w.row_add(i, t, -q);
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        w.col_add(j, t, -q);
        if (d(t, j) != 0) residue = true;
      }
      if (residue) {
        // A remainder is strictly smaller than the pivot; promote the smallest.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility into the trailing block.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      w.row_add(t, bad, Int(1));
    }
    if (d(t, t) < 0) w.row_negate(t);
  }

  return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v), std::move(w.u_inv),
                   std::move(w.v_inv)};
}

std::size_t SnfResult::rank() const {
  std::size_t k = 0;
  const std::size_t lim = std::min(d.rows(), d.cols());
  while (k < lim && d(k, k) != 0) ++k;
  return k;
}

IntVector SnfResult::invariant_factors() const {
  IntVector out;
  for (std::size_t k = 0; k < rank(); ++k) out.push_back(d(k, k));
  return out;
}

IntMatrix KernelBasis::as_matrix() const { return IntMatrix::from_columns(vectors, ambient); }

KernelBasis kernel_basis(const IntMatrix& m) {
  // m·v = u⁻¹·d, so the kernel is v applied to the coordinates past the rank.
  const SnfResult snf = smith_normal_form(m);
  KernelBasis kb;
  kb.ambient = m.cols();
  for (std::size_t j = snf.rank(); j < m.cols(); ++j) kb.vectors.push_back(snf.v.column(j));
  return kb;
}

std::optional<IntVector> image_membership(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("image_membership: vector length " + std::to_string(b.size()) +
                            " vs " + std::to_string(m.rows()) + " rows");
  const SnfResult snf = smith_normal_form(m);
  const IntVector y = snf.u * b;
  const std::size_t rank = snf.rank();
  IntVector z(m.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank) {
      if (y[i] % snf.d(i, i) != 0) return std::nullopt;
      z[i] = y[i] / snf.d(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v * z;
}

bool lattice_contains(const IntMatrix& b, const IntMatrix& a) {
  if (a.rows() != b.rows()) throw DimensionMismatch("lattice_contains: ambient dimensions differ");
  if (a.cols() == 0) return true;
  const SnfResult snf = smith_normal_form(b);
  const std::size_t rank = snf.rank();
  const IntMatrix y = snf.u * a;
  for (std::size_t j = 0; j < y.cols(); ++j)
    for (std::size_t i = 0; i < y.rows(); ++i) {
      if (i < rank) {
        if (y(i, j) % snf.d(i, i) != 0) return false;
      } else if (y(i, j) != 0) {
        return false;
      }
    }
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

IntVector operator-(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: lengths differ");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator*(const Int& k, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVector ones(std::size_t n) { return IntVector(n, Int(1)); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace ckdual
