#pragma once

#include <optional>
#include <vector>

#include "ncx/errors.hpp"
#include "ncx/rings.hpp"

namespace ncx {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Dense matrix over a fixed Field, row-major storage.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols);  // zero-filled

  static Matrix identity(const Field& f, int n);
  static Matrix zero(const Field& f, int rows, int cols);
  // Superdiagonal shift: at(i, i+1) = 1, so shift(n) maps e_{i+1} to e_i.
  static Matrix shift(const Field& f, int n);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols);
  static Matrix col_vector(const Vec& v);
  static Matrix diagonal(const Field& f, const Vec& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(int i, int j) const;
  Scalar& at(int i, int j);

  Vec row(int i) const;
  Vec col(int j) const;
  void set_col(int j, const Vec& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  friend Matrix operator*(const Scalar& c, const Matrix& m) { return m * c; }
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix pow(long k) const;  // square matrices, k >= 0
  bool is_zero() const;
  bool is_identity() const;

  Vec apply(const Vec& v) const;  // matrix-vector product

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);
  // Block-diagonal assembly; all blocks share a field.
  static Matrix block_diag(const Field& f, const std::vector<Matrix>& blocks);

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

// Row-reduced echelon form together with its pivot columns.
struct Echelon {
  Matrix R;
  std::vector<int> pivots;  // pivots[k] = column index of the k-th pivot row
};
Echelon rref(Matrix M);

// Linear subspace of k^ambient in canonical form: the basis matrix has
// columns that are the nonzero rows of a reduced row echelon form, so two
// subspaces are equal iff their basis matrices are entrywise equal.
class Subspace {
 public:
  static Subspace zero_space(const Field& f, int ambient);
  static Subspace full_space(const Field& f, int ambient);
  static Subspace span(const Field& f, int ambient, const std::vector<Vec>& generators);
  static Subspace span_cols(const Matrix& M);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }  // ambient x dim, canonical
  const Field& field() const { return basis_.field(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_;
  Matrix basis_;  // canonical column form
};

int rank(const Matrix& M);
Subspace kernel(const Matrix& M);
Subspace image(const Matrix& M);

// Inverse of a square invertible matrix; throws Error when singular.
Matrix inverse(const Matrix& M);

// dim(Z/B); requires B to be contained in Z.
// Throws ContainmentViolation otherwise.
int subquotient_dim(const Subspace& Z, const Subspace& B);

// One solution of Mx = b with free variables set to zero, or nullopt if the
// system is inconsistent.
std::optional<Vec> solve(const Matrix& M, const Vec& b);

// A quotient space Z/B with a chosen set of representative vectors: the
// columns of reps are members of Z extending a basis of B to a basis of Z
// (greedily drawn from the canonical basis of Z, in order).
struct Quotient {
  Subspace Z;
  Subspace B;
  Matrix reps;  // ambient x dim(Z/B)
  int dim() const { return reps.cols(); }
  int ambient_dim() const { return Z.ambient_dim(); }
};

Quotient make_quotient(const Subspace& Z, const Subspace& B);

// Class of z expressed in the representative basis of Q; throws
// ContainmentViolation when z does not lie in Z.
Vec quotient_coords(const Quotient& Q, const Vec& z);

// Matrix of the map induced on quotients by f (columns = images of src reps
// expressed in dst coordinates). Throws ContainmentViolation when f does not
// carry src.Z into dst.Z or src.B into dst.B.
Matrix induced_on_quotients(const Quotient& src, const Quotient& dst, const Matrix& f);

}  // namespace ncx
