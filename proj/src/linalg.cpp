#include "ncx/linalg.hpp"

#include <utility>

namespace ncx {

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<size_t>(n), f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v.at(static_cast<size_t>(i)) = f.one();
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = c * x;
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), f.zero()) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }

Matrix Matrix::shift(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw Error("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols) {
  int c = static_cast<int>(cols.size());
  int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  Matrix m(f, r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[static_cast<size_t>(j)].size()) != r)
      throw Error("ragged column list");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  return m;
}

Matrix Matrix::col_vector(const Vec& v) {
  if (v.empty()) throw Error("cannot infer field of empty vector");
  Matrix m(v[0].field(), static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

Matrix Matrix::diagonal(const Field& f, const Vec& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<size_t>(i)];
  return m;
}

const Scalar& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
  return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

Scalar& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
  return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

Vec Matrix::row(int i) const {
  Vec v;
  v.reserve(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw Error("column size mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw Error("matrix shape/field mismatch in +");
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw Error("matrix shape/field mismatch in -");
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw Error("matrix shape/field mismatch in *");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = c * x;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(long k) const {
  if (rows_ != cols_) throw Error("pow needs a square matrix");
  if (k < 0) throw Error("negative matrix power");
  Matrix r = identity(field_, rows_);
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("apply: size mismatch");
  Vec r = zero_vec(field_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
      r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + a * v[static_cast<size_t>(j)];
    }
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || !(a.field_ == b.field_)) throw Error("hstack mismatch");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_ || !(a.field_ == b.field_)) throw Error("vstack mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  for (int j = 0; j < a.cols_; ++j) {
    for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw Error("kron field mismatch");
  Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix Matrix::block_diag(const Field& f, const std::vector<Matrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& blk : blocks) {
    if (!(blk.field() == f)) throw Error("block_diag field mismatch");
    rows += blk.rows();
    cols += blk.cols();
  }
  Matrix r(f, rows, cols);
  int ro = 0, co = 0;
  for (const auto& blk : blocks) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) r.at(ro + i, co + j) = blk.at(i, j);
    ro += blk.rows();
    co += blk.cols();
  }
  return r;
}

Echelon rref(Matrix M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int p = -1;
    for (int i = r; i < M.rows(); ++i)
      if (!M.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(r, j));
    Scalar inv = M.at(r, c).inv();
    for (int j = c; j < M.cols(); ++j) M.at(r, j) = inv * M.at(r, j);
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      Scalar factor = M.at(i, c);
      for (int j = c; j < M.cols(); ++j) M.at(i, j) = M.at(i, j) - factor * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(M), std::move(pivots)};
}

Subspace Subspace::zero_space(const Field& f, int ambient) {
  return Subspace(ambient, Matrix(f, ambient, 0));
}

Subspace Subspace::full_space(const Field& f, int ambient) {
  return Subspace(ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& generators) {
  Matrix rows(f, static_cast<int>(generators.size()), ambient);
  for (size_t i = 0; i < generators.size(); ++i) {
    if (static_cast<int>(generators[i].size()) != ambient) throw Error("generator size mismatch");
    for (int j = 0; j < ambient; ++j)
      rows.at(static_cast<int>(i), j) = generators[i][static_cast<size_t>(j)];
  }
  Echelon e = rref(std::move(rows));
  int d = static_cast<int>(e.pivots.size());
  Matrix basis(f, ambient, d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < ambient; ++j) basis.at(j, k) = e.R.at(k, j);
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span_cols(const Matrix& M) {
  std::vector<Vec> gens;
  gens.reserve(static_cast<size_t>(M.cols()));
  for (int j = 0; j < M.cols(); ++j) gens.push_back(M.col(j));
  return span(M.field(), M.rows(), gens);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  for (int j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.col(j))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("coordinates: size mismatch");
  return solve(basis_, v);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw Error("sum: ambient mismatch");
  std::vector<Vec> gens;
  for (int j = 0; j < a.dim(); ++j) gens.push_back(a.basis_.col(j));
  for (int j = 0; j < b.dim(); ++j) gens.push_back(b.basis_.col(j));
  return span(a.field(), a.ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw Error("intersect: ambient mismatch");
  // Kernel of [A | B] gives coefficient pairs (x, y) with Ax + By = 0, so Ax
  // runs over the intersection.
  if (a.dim() == 0 || b.dim() == 0) return zero_space(a.field(), a.ambient_);
  Matrix stacked = Matrix::hstack(a.basis_, b.basis_);
  Subspace ker = kernel(stacked);
  std::vector<Vec> gens;
  for (int j = 0; j < ker.dim(); ++j) {
    Vec full = ker.basis().col(j);
    Vec x(full.begin(), full.begin() + a.dim());
    gens.push_back(a.basis_.apply(x));
  }
  return span(a.field(), a.ambient_, gens);
}

int rank(const Matrix& M) { return static_cast<int>(rref(M).pivots.size()); }

Subspace kernel(const Matrix& M) {
  Echelon e = rref(M);
  const Field& f = M.field();
  std::vector<bool> is_pivot(static_cast<size_t>(M.cols()), false);
  for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < M.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    Vec x = zero_vec(f, M.cols());
    x[static_cast<size_t>(c)] = f.one();
    for (size_t k = 0; k < e.pivots.size(); ++k)
      x[static_cast<size_t>(e.pivots[k])] = -e.R.at(static_cast<int>(k), c);
    gens.push_back(std::move(x));
  }
  return Subspace::span(f, M.cols(), gens);
}

Subspace image(const Matrix& M) { return Subspace::span_cols(M); }

Matrix inverse(const Matrix& M) {
  if (M.rows() != M.cols()) throw Error("inverse needs a square matrix");
  int n = M.rows();
  Echelon e = rref(Matrix::hstack(M, Matrix::identity(M.field(), n)));
  for (size_t k = 0; k < e.pivots.size(); ++k)
    if (e.pivots[k] != static_cast<int>(k)) throw Error("matrix is singular");
  if (static_cast<int>(e.pivots.size()) != n) throw Error("matrix is singular");
  Matrix inv(M.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.R.at(i, n + j);
  return inv;
}

int subquotient_dim(const Subspace& Z, const Subspace& B) {
  if (Z.ambient_dim() != B.ambient_dim())
    throw ContainmentViolation("subquotient: ambient dimension mismatch");
  if (!Z.contains(B)) throw ContainmentViolation("subquotient: B is not contained in Z");
  return Z.dim() - B.dim();
}

std::optional<Vec> solve(const Matrix& M, const Vec& b) {
  if (static_cast<int>(b.size()) != M.rows()) throw Error("solve: size mismatch");
  const Field& f = M.field();
  Matrix aug = Matrix::hstack(M, Matrix(f, M.rows(), 1));
  aug.set_col(M.cols(), b);
  Echelon e = rref(std::move(aug));
  for (int p : e.pivots)
    if (p == M.cols()) return std::nullopt;
  Vec x = zero_vec(f, M.cols());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    x[static_cast<size_t>(e.pivots[k])] = e.R.at(static_cast<int>(k), M.cols());
  return x;
}

Quotient make_quotient(const Subspace& Z, const Subspace& B) {
  if (Z.ambient_dim() != B.ambient_dim())
    throw ContainmentViolation("quotient: ambient dimension mismatch");
  if (!Z.contains(B)) throw ContainmentViolation("quotient: B is not contained in Z");
  const Field& f = Z.field();
  // Greedily extend a basis of B by canonical basis vectors of Z.
  std::vector<Vec> current;
  for (int j = 0; j < B.dim(); ++j) current.push_back(B.basis().col(j));
  Subspace spanned = B;
  std::vector<Vec> reps;
  for (int j = 0; j < Z.dim() && static_cast<int>(reps.size()) < Z.dim() - B.dim(); ++j) {
    Vec cand = Z.basis().col(j);
    if (spanned.contains(cand)) continue;
    reps.push_back(cand);
    current.push_back(cand);
    spanned = Subspace::span(f, Z.ambient_dim(), current);
  }
  Matrix rep_mat = reps.empty() ? Matrix(f, Z.ambient_dim(), 0) : Matrix::from_cols(f, reps);
  return Quotient{Z, B, std::move(rep_mat)};
}

Vec quotient_coords(const Quotient& Q, const Vec& z) {
  Matrix sys = Matrix::hstack(Q.reps, Q.B.basis());
  auto c = solve(sys, z);
  if (!c) throw ContainmentViolation("quotient_coords: vector is outside the numerator space");
  return Vec(c->begin(), c->begin() + Q.dim());
}

Matrix induced_on_quotients(const Quotient& src, const Quotient& dst, const Matrix& f) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim())
    throw Error("induced_on_quotients: shape mismatch");
  // Well-definedness: f must carry the denominator into the denominator.
  for (int j = 0; j < src.B.dim(); ++j)
    if (!dst.B.contains(f.apply(src.B.basis().col(j))))
      throw ContainmentViolation("induced map does not preserve the denominator space");
  Matrix out(f.field(), dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    Vec img = f.apply(src.reps.col(j));
    if (!dst.Z.contains(img))
      throw ContainmentViolation("induced map does not preserve the numerator space");
    out.set_col(j, quotient_coords(dst, img));
  }
  return out;
}

}  // namespace ncx
