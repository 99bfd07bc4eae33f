#pragma once

// Dense matrices over the integers with exact (GMP) entries, and the
// Smith-normal-form engine behind every kernel and cokernel computation.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ckdual {

using Int = mpz_class;
using IntVector = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);
  static IntMatrix column_vector(const IntVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix hconcat(const IntMatrix& right) const;
  IntMatrix vconcat(const IntMatrix& below) const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;

  // Row and column operations used by the normal-form engine.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& m);

/// u · m · v == d with u, v unimodular and d in Smith form.
/// `u_inverse` and `v_inverse` are kept alongside so callers can move
/// between original and normalized coordinates in both directions.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;
  IntMatrix v_inverse;

  std::size_t rank() const;
  /// Diagonal entries d_1, ..., d_rank (all positive).
  IntVector invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Saturated basis of the integer kernel {x : m·x = 0}.
struct KernelBasis {
  std::size_t ambient = 0;
  std::vector<IntVector> vectors;

  std::size_t rank() const noexcept { return vectors.size(); }
  /// Basis vectors as the columns of an (ambient × rank) matrix.
  IntMatrix as_matrix() const;
};

KernelBasis kernel_basis(const IntMatrix& m);

/// Witness x with m·x == b, or nullopt when b is not in the column lattice of m.
/// Throws DimensionMismatch when b.size() != m.rows().
std::optional<IntVector> image_membership(const IntMatrix& m, const IntVector& b);

/// Lattice containment: every column of `a` lies in the column lattice of `b`.
bool lattice_contains(const IntMatrix& b, const IntMatrix& a);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

IntVector operator-(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator*(const Int& k, const IntVector& v);
bool is_zero(const IntVector& v);
IntVector ones(std::size_t n);
std::string to_string(const IntVector& v);

}  // namespace ckdual
