#include "mci/matrix.hpp"

#include <algorithm>

#include "mci/errors.hpp"

namespace mci {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  r += b;
  return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::internal, "vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::internal, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) fail(ErrorKind::internal, "row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void Matrix::append_row(const Vector& v) {
  if (v.size() != cols_) fail(ErrorKind::internal, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::internal, "matrix shape mismatch");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector apply(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) fail(ErrorKind::internal, "vector/matrix shape mismatch");
  Vector r = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

Matrix hconcat(const Field& f, std::size_t source_dim, std::span<const Matrix> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != source_dim) fail(ErrorKind::internal, "hconcat row mismatch");
    cols += b.cols();
  }
  Matrix m(f, source_dim, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < source_dim; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return m;
}

Matrix vconcat(const Field& f, std::size_t cols, std::span<const Matrix> blocks) {
  Matrix m(f, 0, cols);
  for (const auto& b : blocks) {
    if (b.cols() != cols) fail(ErrorKind::internal, "vconcat column mismatch");
    for (std::size_t r = 0; r < b.rows(); ++r) m.append_row(b.row(r));
  }
  return m;
}

Echelon row_reduce(const Matrix& input) {
  Matrix m = input;
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot_row, c), m(lead, c));
    Scalar inv = m(lead, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix basis(f, lead, m.cols());
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(r, c) = m(r, c);
  return {std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix left_kernel(const Matrix& m) {
  // v M = 0  <=>  M^T v^T = 0; solve with the reduced form of M^T.
  const Field& f = m.field();
  Echelon e = row_reduce(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.basis(r, free);
    basis.push_back(std::move(v));
  }
  return row_reduce(Matrix::from_rows(f, n, basis)).basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const Field& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(f);
  }
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.basis(r, n + c);
  return inv;
}

Subspace::Subspace(const Field& f, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return from_matrix(Matrix::from_rows(f, ambient_dim, vectors));
}

Subspace Subspace::from_matrix(const Matrix& m) {
  Subspace s(m.field(), m.cols());
  Echelon e = row_reduce(m);
  s.basis_ = std::move(e.basis);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient_dim) {
  return from_matrix(Matrix::identity(f, ambient_dim));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorKind::internal, "subspace ambient mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return mci::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) fail(ErrorKind::internal, "vector is not in the subspace");
  Vector c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  if (mci::is_zero(r)) return false;
  Matrix m = basis_;
  m.append_row(r);
  *this = from_matrix(m);
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = a U = b W  <=>  (a, b) [U; -W] = 0.
  const Field& f = field();
  Matrix stacked(f, dim() + other.dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) stacked.set_row(r, basis_.row(r));
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.set_row(dim() + r, -other.basis_.row(r));
  Matrix k = left_kernel(stacked);
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Vector row = k.row(r);
    Vector a(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dim()));
    vectors.push_back(mci::apply(a, basis_));
  }
  return span(f, ambient_, vectors);
}

Subspace Subspace::sum(const Subspace& other) const {
  Matrix m = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) m.append_row(other.basis_.row(r));
  return from_matrix(m);
}

}  // namespace mci
