#include "stabcat/exactfield.hpp"

#include <string>

#include "stabcat/error.hpp"

namespace stabcat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p < (1u << 31) && is_prime(p), ErrorKind::InvalidInput,
          "field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Scalar PrimeField::inv(Scalar a) const {
  require(a % p_ != 0, ErrorKind::InternalAssertion, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t rows, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& data) {
  // A zero-row matrix is serialized as [], so only check rows when present.
  require(data.size() == rows || (rows == 0 && data.empty()),
          ErrorKind::DimensionMismatch,
          "expected " + std::to_string(rows) + " rows, got " +
              std::to_string(data.size()));
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(data[r].size() == cols, ErrorKind::DimensionMismatch,
            "expected " + std::to_string(cols) + " columns in row " +
                std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(data[r][c]);
  }
  return m;
}

Matrix Matrix::column(PrimeField field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::DimensionMismatch,
          "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_,
          ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

bool Matrix::is_zero() const {
  for (Scalar x : data_)
    if (x) return false;
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  require(v.size() == cols_, ErrorKind::DimensionMismatch,
          "vector length does not match matrix columns");
  Vector out(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p;
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorKind::DimensionMismatch,
          "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = static_cast<Scalar>((out(i, j) + a * rhs(k, j)) % p);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch,
          "hstack row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "vstack column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

// ---------------------------------------------------------------- RREF

RowEchelon rref(const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(sel, c), r(row, c));
    const Scalar inv = f.inv(r(row, col));
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) = f.mul(r(row, c), inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Scalar factor = r(i, col);
      if (!factor) continue;
      for (std::size_t c = col; c < r.cols(); ++c)
        r(i, c) = f.sub(r(i, c), f.mul(factor, r(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

namespace {

std::vector<std::size_t> free_columns(std::size_t n,
                                      const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

Matrix kernel_basis(const Matrix& m) {
  const PrimeField& f = m.field();
  RowEchelon e = rref(m);
  auto free = free_columns(m.cols(), e.pivots);
  Matrix k(f, m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      k(e.pivots[i], j) = f.neg(e.reduced(i, free[j]));
  }
  return k;
}

std::optional<Solution> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch,
          "solve: A has " + std::to_string(a.rows()) + " rows, B has " +
              std::to_string(b.rows()));
  const std::size_t n = a.cols();
  RowEchelon e = rref(hstack(a, b));
  // A pivot inside the B block means 0 = nonzero.
  if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(e.pivots[i], c) = e.reduced(i, n + c);
  return Solution{std::move(x), kernel_basis(a)};
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(PrimeField field, std::size_t ambient)
    : ambient_(ambient), basis_(field, 0, ambient) {}

Subspace Subspace::row_space(const Matrix& rows) {
  RowEchelon e = rref(rows);
  Subspace s(rows.field(), rows.cols());
  s.basis_ = e.reduced.block(0, 0, e.rank(), rows.cols());
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::column_space(const Matrix& cols) {
  return row_space(cols.transpose());
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  return row_space(Matrix::identity(field, ambient));
}

std::vector<std::size_t> Subspace::free_coordinates() const {
  return free_columns(ambient_, pivots_);
}

Vector Subspace::reduce(const Vector& v) const {
  require(v.size() == ambient_, ErrorKind::DimensionMismatch,
          "vector does not live in the ambient space");
  const PrimeField& f = field();
  Vector out = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      out[j] = f.sub(out[j], f.mul(c, basis_(i, j)));
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  for (Scalar x : reduce(v))
    if (x) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  Vector r = reduce(v);
  Vector out;
  out.reserve(ambient_ - pivots_.size());
  for (std::size_t c : free_coordinates()) out.push_back(r[c]);
  return out;
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  require(v.ambient_dim() == w.ambient_dim(), ErrorKind::DimensionMismatch,
          "intersect: ambient mismatch");
  if (v.is_zero() || w.is_zero()) return Subspace(v.field(), v.ambient_dim());
  // (x, y) with V^T x = W^T y  <=>  [V^T | -W^T] (x;y) = 0.
  Matrix vt = v.inclusion();
  Matrix wt = w.inclusion();
  Matrix k = kernel_basis(hstack(vt, wt.scaled(v.field().neg(1))));
  Matrix xs = k.block(0, 0, v.dim(), k.cols());
  return Subspace::column_space(vt * xs);
}

Subspace sum(const Subspace& v, const Subspace& w) {
  require(v.ambient_dim() == w.ambient_dim(), ErrorKind::DimensionMismatch,
          "sum: ambient mismatch");
  return Subspace::row_space(vstack(v.basis(), w.basis()));
}

bool contains(const Subspace& v, const Subspace& w) {
  require(v.ambient_dim() == w.ambient_dim(), ErrorKind::DimensionMismatch,
          "contains: ambient mismatch");
  for (std::size_t i = 0; i < w.dim(); ++i) {
    auto row = w.basis().row(i);
    if (!v.contains(Vector(row.begin(), row.end()))) return false;
  }
  return true;
}

Subspace complement(const Subspace& v) {
  auto free = v.free_coordinates();
  Matrix m(v.field(), free.size(), v.ambient_dim());
  for (std::size_t i = 0; i < free.size(); ++i) m(i, free[i]) = 1;
  return Subspace::row_space(m);
}

Subspace image(const Matrix& m, const Subspace& v) {
  require(m.cols() == v.ambient_dim(), ErrorKind::DimensionMismatch,
          "image: map does not act on this subspace");
  return Subspace::column_space(m * v.inclusion());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  require(m.rows() == w.ambient_dim(), ErrorKind::DimensionMismatch,
          "preimage: map does not land in this subspace's ambient");
  // x with m x ∈ W  <=>  the free coordinates of reduce(m x) vanish.
  auto free = w.free_coordinates();
  // reduce() is linear: apply it to each column of m.
  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector r = w.reduce(m.column_vector(c));
    for (std::size_t i = 0; i < m.rows(); ++i) reduced(i, c) = r[i];
  }
  return Subspace::column_space(kernel_basis(reduced.select_rows(free)));
}

Subspace kernel(const Matrix& m) {
  return Subspace::column_space(kernel_basis(m));
}

Subspace column_image(const Matrix& m) { return Subspace::column_space(m); }

}  // namespace stabcat
