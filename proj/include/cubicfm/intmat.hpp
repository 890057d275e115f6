#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicfm {

/// Dense matrix of arbitrary-precision integers, row-major.
/// All arithmetic in this module is exact; there is no floating point.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> data);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> entries_;
};

struct SmithDecomposition {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix s;  // diagonal, s1 | s2 | ..., nonnegative, zeros trailing
  IntMatrix v;  // unimodular, cols x cols
};

/// U*A*V = S with U, V unimodular and S in Smith normal form.
/// Pivoting: smallest nonzero absolute value, ties broken by lowest index,
/// so the transforms are reproducible across platforms.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& a);

/// Basis of the saturated integer kernel {x : A*x = 0}, one row per basis
/// vector. Returns a 0 x cols matrix when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the saturation (primitive closure) of the row span of B.
/// Requires the rows of B to be linearly independent over Q.
IntMatrix saturate(const IntMatrix& b);

/// Canonical row-style Hermite normal form of the row span: positive pivots,
/// entries above each pivot reduced into [0, pivot). Two integer matrices
/// span the same sublattice iff their HNFs are equal.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

/// Exact characteristic polynomial coefficients, p(x) = sum c[k] x^k with
/// c[n] = 1, via Faddeev-LeVerrier (divisions are exact over Z).
std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a);

}  // namespace cubicfm
