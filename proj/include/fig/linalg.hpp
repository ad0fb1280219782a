#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fig/field.hpp"

namespace fig {

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// Dense matrix over a Field. Entries are stored reduced: machine residues
/// for GF(p), lowest-terms GMP rationals for Q. Vectors are single columns.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Row-major integer entries, reduced into the field.
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<long>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long value);
  bool is_zero_at(std::size_t r, std::size_t c) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& factor) const;
  Matrix transpose() const;

  Matrix select_rows(const std::vector<std::size_t>& which) const;
  Matrix select_cols(const std::vector<std::size_t>& which) const;
  Matrix column(std::size_t c) const { return select_cols({c}); }

  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& other) const;

  // Raw storage; exactly one of these is in use depending on the field.
  std::vector<std::uint32_t>& residues() { return mod_; }
  const std::vector<std::uint32_t>& residues() const { return mod_; }
  std::vector<mpq_class>& rationals() { return rat_; }
  const std::vector<mpq_class>& rationals() const { return rat_; }

 private:
  void require_same_shape(const Matrix& other, const char* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<mpq_class> rat_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Unique reduced row echelon form.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of k^d stored as the rows of its reduced echelon basis; the
/// echelon basis is canonical, so equality of subspaces is equality of bases.
class SubspaceBasis {
 public:
  SubspaceBasis() : SubspaceBasis(Field::rationals(), 0) {}
  SubspaceBasis(const Field& field, std::size_t ambient_dim);

  static SubspaceBasis full(const Field& field, std::size_t ambient_dim);
  static SubspaceBasis span_rows(const Matrix& rows);
  static SubspaceBasis span_columns(const Matrix& columns);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return pivots_.size() == ambient_; }

  /// dim × ambient, reduced echelon.
  const Matrix& basis() const { return basis_; }
  /// ambient × dim.
  Matrix columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> complement() const;

  /// Normal form of each column modulo the subspace (pivot entries cleared).
  Matrix reduce(const Matrix& columns) const;
  bool contains(const Matrix& columns) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of columns lying in the subspace: the entries at the pivots.
  Matrix coordinates(const Matrix& columns) const { return columns.select_rows(pivots_); }

  /// Projection onto the canonical complement (codim × ambient).
  Matrix quotient_projection() const;
  /// Inclusion of the canonical complement (ambient × codim).
  Matrix complement_lift() const;

  bool operator==(const SubspaceBasis& other) const;

 private:
  friend SubspaceBasis kernel_basis(const Matrix& m);
  SubspaceBasis(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel_basis(const Matrix& m);
SubspaceBasis image_basis(const Matrix& m);

/// Some x with a·x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Smallest subspace containing `seed` and stable under every operator.
SubspaceBasis saturate_subspace(const SubspaceBasis& seed, const std::vector<Matrix>& operators);

SubspaceBasis intersect_subspaces(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum_subspaces(const SubspaceBasis& a, const SubspaceBasis& b);
/// {x : m·x ∈ target}.
SubspaceBasis preimage(const Matrix& m, const SubspaceBasis& target);
/// m·source.
SubspaceBasis image_of(const Matrix& m, const SubspaceBasis& source);

}  // namespace fig
