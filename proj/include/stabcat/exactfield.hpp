#pragma once

// Dense exact linear algebra over a prime field Z/p.
//
// Every basis produced here is canonical: subspaces are stored by their
// reduced row-echelon basis, kernels are read off the RREF, and quotient
// coordinates use the non-pivot coordinate vectors as the complement.  All
// higher layers inherit their determinism from these conventions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stabcat {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 101;

  /// Throws InvalidInput unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Scalar reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar inv(Scalar a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p; all rows must have length `cols`.
  static Matrix from_rows(PrimeField field, std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& data);
  /// Matrix whose single column is v.
  static Matrix column(PrimeField field, const Vector& v);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Scalar>& entries() const { return data_; }

  Vector column_vector(std::size_t c) const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  Vector apply(const Vector& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns span {x : m x = 0}; one column per free variable of rref(m), with
/// the free variable set to 1.
Matrix kernel_basis(const Matrix& m);

struct Solution {
  Matrix particular;  // a.cols() x b.cols(), free coordinates set to zero
  Matrix kernel;      // a.cols() x nullity
};

/// Solves a X = b.  Throws DimensionMismatch if row counts differ; returns
/// nullopt when the system is inconsistent.
std::optional<Solution> solve(const Matrix& a, const Matrix& b);

/// Subspace of F^n stored by its canonical RREF basis (one vector per row).
class Subspace {
 public:
  Subspace() = default;
  Subspace(PrimeField field, std::size_t ambient);  // zero subspace

  /// Row space of `rows`.
  static Subspace row_space(const Matrix& rows);
  /// Column space of `cols`.
  static Subspace column_space(const Matrix& cols);
  static Subspace full(PrimeField field, std::size_t ambient);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return pivots_.size() == ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not used as pivots, ascending.
  std::vector<std::size_t> free_coordinates() const;

  bool contains(const Vector& v) const;
  /// Coefficients of v in the RREF basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v with its component along this subspace removed (pivot entries zero).
  Vector reduce(const Vector& v) const;
  /// Quotient coordinates of v: the free coordinates of reduce(v).
  Vector quotient_coordinates(const Vector& v) const;

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const { return basis_.transpose(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& v, const Subspace& w);
Subspace sum(const Subspace& v, const Subspace& w);
/// True iff w ⊆ v.
bool contains(const Subspace& v, const Subspace& w);
/// Span of the coordinate vectors at the free coordinates of v.
Subspace complement(const Subspace& v);

/// Image of a subspace under a linear map (m has v.ambient_dim() columns).
Subspace image(const Matrix& m, const Subspace& v);
/// Preimage of w under m.
Subspace preimage(const Matrix& m, const Subspace& w);
Subspace kernel(const Matrix& m);
Subspace column_image(const Matrix& m);

}  // namespace stabcat
