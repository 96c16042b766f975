#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mci/scalar.hpp"

namespace mci {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector concat(const Vector& a, const Vector& b);

/// Dense row-major matrix. Linear maps are stored in "images" form: row i is
/// the image of basis vector i, so a map acts on row vectors by v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);
  std::vector<Vector> row_vectors() const;
  void append_row(const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// v * M.
Vector apply(const Vector& v, const Matrix& m);

/// Horizontal concatenation of maps with a common source dimension: the
/// joint map v -> (v M1, v M2, ...).
Matrix hconcat(const Field& f, std::size_t source_dim, std::span<const Matrix> blocks);
Matrix vconcat(const Field& f, std::size_t cols, std::span<const Matrix> blocks);

/// Reduced row echelon form; zero rows are dropped.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (in reduced echelon form) of { v : v * M = 0 }.
Matrix left_kernel(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n kept as a reduced echelon basis; equality of subspaces is
/// equality of these matrices.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambient_dim);
  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace from_matrix(const Matrix& m);
  static Subspace whole(const Field& f, std::size_t ambient_dim);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its component along the pivots; zero iff v is in the subspace.
  Vector reduce(const Vector& v) const;
  /// Coordinates of a member with respect to the echelon basis.
  Vector coordinates(const Vector& v) const;
  /// Adds v; returns true when the dimension grew.
  bool insert(const Vector& v);

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mci
