#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the integral lattice Z^n.
using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense integer matrix with exact entries, stored row-major.
/// Zero-row and zero-column matrices are valid.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// Stacks the given vectors as rows. All vectors must share one length;
  /// `cols` fixes the width when the list is empty.
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  IntegerMatrix transpose() const;
  /// Columns [first, last) as a new matrix.
  IntegerMatrix column_block(std::size_t first, std::size_t last) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// column[target] += factor * column[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v);
RationalVector operator*(const IntegerMatrix& a, const RationalVector& v);

std::string to_string(const IntegerMatrix& m);

/// left * M * right == diag(diagonal), with left and right unimodular and
/// diagonal a nonnegative divisibility chain (trailing zeros allowed).
/// The transforms are not canonical; only these invariants are.
struct SmithDecomposition {
  IntegerMatrix left;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntegerMatrix right;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Row-style Hermite normal form: unimodular U with U * M == H, H in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot).
struct HermiteDecomposition {
  IntegerMatrix transform;
  IntegerMatrix form;
};

HermiteDecomposition hermite_normal_form(const IntegerMatrix& m);

/// Rank over Q (fraction-free Bareiss elimination).
std::size_t rational_rank(const IntegerMatrix& m);

/// Inverse of a matrix with determinant +-1. Throws InputError otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// True iff the vectors are linearly independent and extend to a Z-basis
/// of Z^n, i.e. they span a direct summand. The empty list qualifies.
bool is_basis_of_lattice_summand(std::span<const LatticeVector> vectors);

/// v divided by the gcd of its entries; orientation preserved.
LatticeVector primitive(const LatticeVector& v);

Integer gcd_of(std::span<const Integer> values);
Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& x, const LatticeVector& u);

std::string to_string(const LatticeVector& v);

}  // namespace toric
