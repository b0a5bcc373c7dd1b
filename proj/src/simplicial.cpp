#include "ncx/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ncx/errors.hpp"

namespace ncx {

namespace {

std::string istr(int v) { return std::to_string(v); }

bool is_iso(const Matrix& M) { return M.rows() == M.cols() && rank(M) == M.rows(); }

// d_m^k starting at degree n (composed through ascending degrees).
Matrix power_d(const CosimplicialModule& E, int m, int n, int k) {
  Matrix acc = Matrix::identity(E.ctx.field, E.dim(n));
  for (int j = 0; j < k; ++j) acc = d_m_at(E, m, n + j) * acc;
  return acc;
}

// delta_m^k starting at degree n.
Matrix power_delta(const CosimplicialModule& E, int m, int n, int k) {
  Matrix acc = Matrix::identity(E.ctx.field, E.dim(n));
  for (int j = 0; j < k; ++j) acc = delta_m_at(E, m, n + j) * acc;
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// CosimplicialModule / SimplicialModule basics.
// ---------------------------------------------------------------------------

int CosimplicialModule::dim(int n) const {
  if (n < 0 || n > D) return 0;
  return dims[static_cast<size_t>(n)];
}

const Matrix& CosimplicialModule::f(int n, int i) const {
  if (n < 0 || n >= D) throw Error("coface degree " + istr(n) + " out of range");
  if (i < 0 || i > n + 1) throw Error("coface index " + istr(i) + " out of range at degree " + istr(n));
  return cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const Matrix& CosimplicialModule::s(int n, int i) const {
  if (!has_codegeneracies()) throw Error("module has no codegeneracies");
  if (n < 0 || n >= D) throw Error("codegeneracy degree " + istr(n) + " out of range");
  if (i < 0 || i > n) throw Error("codegeneracy index " + istr(i) + " out of range at degree " + istr(n));
  return codegens[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

int SimplicialModule::dim(int n) const {
  if (n < 0 || n > D) return 0;
  return dims[static_cast<size_t>(n)];
}

namespace {

const Matrix& product_of(const CosimplicialModule& E, int a, int b) {
  return E.product[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

void validate_shapes(const CosimplicialModule& E) {
  if (E.D < 0 || static_cast<int>(E.dims.size()) != E.D + 1)
    throw RelationViolation("degree window and dimension list disagree");
  if (static_cast<int>(E.cofaces.size()) != E.D)
    throw RelationViolation("coface list does not cover the window");
  for (int n = 0; n < E.D; ++n) {
    if (static_cast<int>(E.cofaces[n].size()) != n + 2)
      throw RelationViolation("degree " + istr(n) + " must carry " + istr(n + 2) + " cofaces");
    for (int i = 0; i <= n + 1; ++i) {
      const Matrix& m = E.cofaces[n][i];
      if (m.rows() != E.dim(n + 1) || m.cols() != E.dim(n))
        throw RelationViolation("coface shape mismatch at degree " + istr(n));
    }
  }
  if (E.has_codegeneracies()) {
    if (static_cast<int>(E.codegens.size()) != E.D)
      throw RelationViolation("codegeneracy list does not cover the window");
    for (int n = 0; n < E.D; ++n) {
      if (static_cast<int>(E.codegens[n].size()) != n + 1)
        throw RelationViolation("degree " + istr(n) + " must carry " + istr(n + 1) +
                                " codegeneracies");
      for (int i = 0; i <= n; ++i) {
        const Matrix& m = E.codegens[n][i];
        if (m.rows() != E.dim(n) || m.cols() != E.dim(n + 1))
          throw RelationViolation("codegeneracy shape mismatch at degree " + istr(n));
      }
    }
  }
}

void validate_relations(const CosimplicialModule& E) {
  // f_j f_i = f_i f_{j-1} for i < j.
  for (int n = 0; n + 2 <= E.D; ++n)
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        if (!(E.f(n + 1, j) * E.f(n, i) == E.f(n + 1, i) * E.f(n, j - 1)))
          throw RelationViolation("coface relation fails at degree " + istr(n) + " (i=" +
                                  istr(i) + ", j=" + istr(j) + ")");
  if (!E.has_codegeneracies()) return;
  // s_j s_i = s_i s_{j+1} for i <= j.
  for (int n = 0; n + 2 <= E.D; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(E.s(n, j) * E.s(n + 1, i) == E.s(n, i) * E.s(n + 1, j + 1)))
          throw RelationViolation("codegeneracy relation fails at degree " + istr(n) + " (i=" +
                                  istr(i) + ", j=" + istr(j) + ")");
  // Mixed relations on E^n.
  for (int n = 0; n < E.D; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Matrix lhs = E.s(n, j) * E.f(n, i);
        if (i == j || i == j + 1) {
          if (!lhs.is_identity())
            throw RelationViolation("mixed relation (identity case) fails at degree " + istr(n) +
                                    " (i=" + istr(i) + ", j=" + istr(j) + ")");
        } else if (i < j) {
          if (!(lhs == E.f(n - 1, i) * E.s(n - 1, j - 1)))
            throw RelationViolation("mixed relation fails at degree " + istr(n) + " (i=" +
                                    istr(i) + ", j=" + istr(j) + ")");
        } else {  // i > j + 1
          if (!(lhs == E.f(n - 1, i - 1) * E.s(n - 1, j)))
            throw RelationViolation("mixed relation fails at degree " + istr(n) + " (i=" +
                                    istr(i) + ", j=" + istr(j) + ")");
        }
      }
}

void validate_product(const CosimplicialModule& E, int cap) {
  const Field& F = E.ctx.field;
  if (static_cast<int>(E.product.size()) != E.D + 1)
    throw RelationViolation("product table does not cover the window");
  for (int a = 0; a <= E.D; ++a) {
    if (static_cast<int>(E.product[a].size()) != E.D + 1 - a)
      throw RelationViolation("product table row " + istr(a) + " has the wrong length");
    for (int b = 0; a + b <= E.D; ++b) {
      const Matrix& m = product_of(E, a, b);
      if (m.rows() != E.dim(a + b) || m.cols() != E.dim(a) * E.dim(b))
        throw RelationViolation("product shape mismatch at bidegree (" + istr(a) + "," +
                                istr(b) + ")");
    }
  }
  if (static_cast<int>(E.unit.size()) != E.dim(0))
    throw RelationViolation("unit has the wrong dimension");
  Matrix unit_col = Matrix::col_vector(E.unit);
  int top = std::min(E.D, cap);
  // Unit laws.
  for (int b = 0; b <= top; ++b) {
    Matrix ib = Matrix::identity(F, E.dim(b));
    if (!(product_of(E, 0, b) * Matrix::kron(unit_col, ib) == ib))
      throw RelationViolation("left unit law fails in degree " + istr(b));
    if (!(product_of(E, b, 0) * Matrix::kron(ib, unit_col) == ib))
      throw RelationViolation("right unit law fails in degree " + istr(b));
  }
  // Associativity.
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b)
      for (int c = 0; a + b + c <= top; ++c) {
        Matrix lhs = product_of(E, a + b, c) *
                     Matrix::kron(product_of(E, a, b), Matrix::identity(F, E.dim(c)));
        Matrix rhs = product_of(E, a, b + c) *
                     Matrix::kron(Matrix::identity(F, E.dim(a)), product_of(E, b, c));
        if (!(lhs == rhs))
          throw RelationViolation("associativity fails at tridegree (" + istr(a) + "," +
                                  istr(b) + "," + istr(c) + ")");
      }
  // Coface compatibility.
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= std::min(E.D - 1, cap); ++b) {
      Matrix ia = Matrix::identity(F, E.dim(a));
      Matrix ib = Matrix::identity(F, E.dim(b));
      for (int i = 0; i <= a + b + 1; ++i) {
        Matrix lhs = E.f(a + b, i) * product_of(E, a, b);
        Matrix rhs = (i <= a) ? product_of(E, a + 1, b) * Matrix::kron(E.f(a, i), ib)
                              : product_of(E, a, b + 1) * Matrix::kron(ia, E.f(b, i - a));
        if (!(lhs == rhs))
          throw RelationViolation("coface/product compatibility fails at bidegree (" + istr(a) +
                                  "," + istr(b) + "), i=" + istr(i));
      }
      Matrix cross_l = product_of(E, a + 1, b) * Matrix::kron(E.f(a, a + 1), ib);
      Matrix cross_r = product_of(E, a, b + 1) * Matrix::kron(ia, E.f(b, 0));
      if (!(cross_l == cross_r))
        throw RelationViolation("outer coface exchange fails at bidegree (" + istr(a) + "," +
                                istr(b) + ")");
    }
  if (!E.has_codegeneracies()) return;
  // Codegeneracy compatibility.
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top && a + b <= E.D; ++b) {
      if (a + b < 1) continue;
      Matrix ia = Matrix::identity(F, E.dim(a));
      Matrix ib = Matrix::identity(F, E.dim(b));
      for (int i = 0; i <= a + b - 1; ++i) {
        Matrix lhs = E.s(a + b - 1, i) * product_of(E, a, b);
        Matrix rhs = (i < a) ? product_of(E, a - 1, b) * Matrix::kron(E.s(a - 1, i), ib)
                             : product_of(E, a, b - 1) * Matrix::kron(ia, E.s(b - 1, i - a));
        if (!(lhs == rhs))
          throw RelationViolation("codegeneracy/product compatibility fails at bidegree (" +
                                  istr(a) + "," + istr(b) + "), i=" + istr(i));
      }
    }
}

}  // namespace

void CosimplicialModule::validate(int product_degree_cap) const {
  validate_shapes(*this);
  validate_relations(*this);
  if (has_product()) validate_product(*this, product_degree_cap);
}

void SimplicialModule::validate() const { dual(*this).validate(); }

CosimplicialModule dual(const SimplicialModule& E) {
  CosimplicialModule out{E.ctx, E.D, E.dims, {}, {}, {}, {}};
  out.cofaces.resize(E.faces.size());
  for (size_t n = 0; n < E.faces.size(); ++n)
    for (const Matrix& m : E.faces[n]) out.cofaces[n].push_back(m.transpose());
  out.codegens.resize(E.degens.size());
  for (size_t n = 0; n < E.degens.size(); ++n)
    for (const Matrix& m : E.degens[n]) out.codegens[n].push_back(m.transpose());
  return out;
}

SimplicialModule dual(const CosimplicialModule& E) {
  SimplicialModule out{E.ctx, E.D, E.dims, {}, {}};
  out.faces.resize(E.cofaces.size());
  for (size_t n = 0; n < E.cofaces.size(); ++n)
    for (const Matrix& m : E.cofaces[n]) out.faces[n].push_back(m.transpose());
  out.degens.resize(E.codegens.size());
  for (size_t n = 0; n < E.codegens.size(); ++n)
    for (const Matrix& m : E.codegens[n]) out.degens[n].push_back(m.transpose());
  return out;
}

// ---------------------------------------------------------------------------
// Differentials.
// ---------------------------------------------------------------------------

Matrix alternating_sum_at(const CosimplicialModule& E, int n) {
  if (n < 0 || n >= E.D) throw Error("differential degree " + istr(n) + " out of range");
  Matrix acc = Matrix::zero(E.ctx.field, E.dim(n + 1), E.dim(n));
  for (int i = 0; i <= n + 1; ++i)
    acc = (i % 2 == 0) ? acc + E.f(n, i) : acc - E.f(n, i);
  return acc;
}

Matrix delta_m_at(const CosimplicialModule& E, int m, int n) {
  if (m < 0) throw Error("negative index for delta");
  if (n < 0 || n >= E.D) throw Error("differential degree " + istr(n) + " out of range");
  Matrix acc = Matrix::zero(E.ctx.field, E.dim(n + 1), E.dim(n));
  if (n < m - 1) return acc;
  Scalar qp = E.ctx.field.one();
  for (int i = 0; i <= n - m + 1; ++i) {
    acc = acc + E.f(n, i) * qp;
    qp = qp * E.ctx.q;
  }
  return acc;
}

Matrix d_m_at(const CosimplicialModule& E, int m, int n) {
  if (m < 0) throw Error("negative index for the deformed differential");
  if (n < 0 || n >= E.D) throw Error("differential degree " + istr(n) + " out of range");
  if (n < m - 1) return alternating_sum_at(E, n);
  Matrix acc = delta_m_at(E, m + 1, n);
  Scalar c = E.ctx.q.pow(n - m + 1);
  for (int r = 0; r <= m; ++r) {
    Matrix t = E.f(n, n - m + r + 1) * c;
    acc = (r % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

Matrix interpolation_at(const CosimplicialModule& E, int p, int m, int n) {
  if (p < 0) throw Error("negative truncation parameter");
  if (n < p - 1) throw Error("interpolating differential undefined below degree " + istr(p - 1));
  if (n < 0 || n >= E.D) throw Error("differential degree " + istr(n) + " out of range");
  Matrix acc = delta_m_at(E, p + 1, n);
  Scalar c = q_number(E.ctx, m) * E.ctx.q.pow(n - p + 1);
  for (int i = 0; i <= p; ++i) {
    Matrix t = E.f(n, n - p + i + 1) * c;
    acc = (i % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

NComplex standard_differential(const CosimplicialModule& E) {
  std::vector<Matrix> d;
  for (int n = 0; n < E.D; ++n) d.push_back(alternating_sum_at(E, n));
  for (int n = 0; n + 2 <= E.D; ++n)
    if (!(d[n + 1] * d[n]).is_zero())
      throw RelationViolation("alternating-sum differential fails to square to zero at degree " +
                              istr(n));
  QContext c2 = make_context(E.ctx.field, E.ctx.q, 2);
  return NComplex(c2, 0, E.dims, d, true, false);
}

Quotient ordinary_cohomology(const CosimplicialModule& E, int n) {
  return homology_graded(standard_differential(E), 1, n);
}

std::vector<Matrix> delta_m(const CosimplicialModule& E, int m) {
  require_a0(E.ctx);
  if (m < 0) throw Error("negative index for delta");
  std::vector<Matrix> out;
  for (int n = 0; n < E.D; ++n) out.push_back(delta_m_at(E, m, n));
  for (int n = 0; n <= std::min(m - 2, E.D - 1); ++n)
    if (!out[n].is_zero())
      throw RelationViolation("delta must vanish below degree " + istr(m - 1));
  return out;
}

std::vector<Matrix> d_m(const CosimplicialModule& E, int m) {
  require_a0(E.ctx);
  if (m < 0) throw Error("negative index for the deformed differential");
  std::vector<Matrix> out;
  for (int n = 0; n < E.D; ++n) out.push_back(d_m_at(E, m, n));
  // Low-degree convention: up to degree m-1 the deformed differential is the
  // alternating sum (at degree m-1 this is a genuine identity of the
  // defining formula, not a branch).
  for (int n = 0; n <= std::min(m - 1, E.D - 1); ++n)
    if (!(out[n] == alternating_sum_at(E, n)))
      throw RelationViolation("low-degree convention fails at degree " + istr(n));
  if (m == 0)
    for (int n = 0; n < E.D; ++n)
      if (!(out[n] == delta_m_at(E, 0, n)))
        throw RelationViolation("the m = 0 differentials disagree at degree " + istr(n));
  return out;
}

// ---------------------------------------------------------------------------
// Identity checks.
// ---------------------------------------------------------------------------

bool lemma8_check(const CosimplicialModule& E, int max_p) {
  const Field& F = E.ctx.field;
  for (int m = 0; m <= E.D; ++m)
    for (int n = m; n <= E.D; ++n)
      for (int p = 0; p <= max_p && n + p + 1 <= E.D; ++p) {
        Matrix A = Matrix::zero(F, E.dim(n + 1), E.dim(n));
        for (int r = 0; r <= m; ++r)
          A = (r % 2 == 0) ? A + E.f(n, n - m + r + 1) : A - E.f(n, n - m + r + 1);
        Scalar c = q_number(E.ctx, p + 1) * E.ctx.q.pow(n - m + 1);
        Matrix tail = power_delta(E, m + 1, n + 1, p);
        if (!(power_d(E, m, n, p + 1) == tail * (delta_m_at(E, m + 1, n) + A * c)))
          throw RelationViolation("power identity (i) fails: m=" + istr(m) + ", p=" + istr(p) +
                                  ", degree " + istr(n));
        if (!(power_delta(E, m, n, p + 1) ==
              tail * (delta_m_at(E, m + 1, n) + E.f(n, n - m + 1) * c)))
          throw RelationViolation("power identity (ii) fails: m=" + istr(m) + ", p=" + istr(p) +
                                  ", degree " + istr(n));
      }
  for (int m = 0; m <= E.D + 1; ++m)
    for (int n = 0; n + 2 <= E.D; ++n)
      if (!(d_m_at(E, m + 1, n + 1) * d_m_at(E, m, n) ==
            delta_m_at(E, m + 1, n + 1) * delta_m_at(E, m + 1, n)))
        throw RelationViolation("cross identity (iii) fails: m=" + istr(m) + ", degree " +
                                istr(n));
  return true;
}

bool corollary34_check(const CosimplicialModule& E) {
  require_a0(E.ctx);
  const Field& F = E.ctx.field;
  int N = E.ctx.N;
  for (int m = 0; m <= E.D; ++m)
    for (int n = m; n + N - 1 <= E.D; ++n) {
      Matrix rhs = power_delta(E, m + 1, n + 1, N - 2) * d_m_at(E, m + 1, n);
      if (!(power_d(E, m, n, N - 1) == rhs))
        throw RelationViolation("step-down identity (a) fails: m=" + istr(m) + ", degree " +
                                istr(n));
      if (m >= 1) {
        Matrix lhs = d_m_at(E, m - 1, n + N - 2) * power_delta(E, m, n, N - 2);
        if (!(lhs == rhs))
          throw RelationViolation("step-down identity (b) fails: m=" + istr(m) + ", degree " +
                                  istr(n));
      }
    }
  for (int m = 0; m <= E.D + 1; ++m)
    for (int n = 0; n + N <= E.D; ++n) {
      if (!power_d(E, m, n, N).is_zero())
        throw RelationViolation("nilpotency of the deformed differential fails: m=" + istr(m) +
                                ", degree " + istr(n));
      if (!power_delta(E, m, n, N).is_zero())
        throw RelationViolation("nilpotency of delta fails: m=" + istr(m) + ", degree " +
                                istr(n));
    }
  // Sorted-monomial expansion of delta powers (checked on the low degrees,
  // where the enumeration stays small):
  //   delta_m^p = [p]_q! sum_{i_1 > ... > i_p} q^{i_1+...+i_p - p(p-1)/2} f_{i_1}...f_{i_p}.
  int cap = std::min(E.D, 5);
  for (int m = 0; m <= cap; ++m)
    for (int p = 1; p <= 3; ++p)
      for (int n = 0; n + p <= cap; ++n) {
        // G_k(b): partial sums over the k innermost factors with innermost
        // index bound b, built by the recursion
        //   G_k(b) = G_k(b-1) + q^b f(n+k-1, b) G_{k-1}(b-1).
        int bound = n + p - m;
        Matrix lhs = power_delta(E, m, n, p);
        if (bound < p - 1) {
          if (!lhs.is_zero())
            throw RelationViolation("sorted expansion fails (empty sum): m=" + istr(m) +
                                    ", p=" + istr(p) + ", degree " + istr(n));
          continue;
        }
        std::vector<Matrix> prev;  // G_{k-1}(b) indexed by b = -1..bound
        prev.push_back(Matrix::identity(F, E.dim(n)));
        for (int b = 0; b <= bound; ++b) prev.push_back(prev.back());
        for (int k = 1; k <= p; ++k) {
          std::vector<Matrix> cur;
          cur.push_back(Matrix::zero(F, E.dim(n + k), E.dim(n)));
          for (int b = 0; b <= bound; ++b) {
            Matrix next = cur.back();
            if (b <= n + k) next = next + E.f(n + k - 1, b) * prev[b] * E.ctx.q.pow(b);
            cur.push_back(next);
          }
          prev = std::move(cur);
        }
        Scalar coeff = q_factorial(E.ctx, p) * E.ctx.q.pow(-(long)p * (p - 1) / 2);
        if (!(lhs == prev.back() * coeff))
          throw RelationViolation("sorted expansion fails: m=" + istr(m) + ", p=" + istr(p) +
                                  ", degree " + istr(n));
      }
  return true;
}

NComplex remark3_differential(const CosimplicialModule& E, int p, int m) {
  require_a0(E.ctx);
  if (p < 0 || p > E.D) throw Error("truncation parameter out of range");
  if (m < 1 || m > E.ctx.N - 1) throw Error("interpolation index out of range");
  int lo = std::max(p - 1, 0);
  std::vector<int> dims(E.dims.begin() + lo, E.dims.end());
  std::vector<Matrix> d;
  for (int n = lo; n < E.D; ++n) d.push_back(interpolation_at(E, p, m, n));
  // Endpoint identities: the m = 1 member is d_p on the whole window and the
  // m = N-1 member is d_{p+1} on degrees >= p (at degree p-1 they differ by
  // the unit [N-1]_q).
  if (m == 1)
    for (int n = lo; n < E.D; ++n)
      if (!(d[n - lo] == d_m_at(E, p, n)))
        throw RelationViolation("interpolation endpoint m=1 disagrees at degree " + istr(n));
  if (m == E.ctx.N - 1)
    for (int n = std::max(lo, p); n < E.D; ++n)
      if (!(d[n - lo] == d_m_at(E, p + 1, n)))
        throw RelationViolation("interpolation endpoint m=N-1 disagrees at degree " + istr(n));
  return NComplex(E.ctx, lo, dims, d, true, false);
}

NComplex truncate(const CosimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0 || p > E.D) throw Error("truncation parameter out of range");
  int lo = std::max(p - 1, 0);
  std::vector<int> dims(E.dims.begin() + lo, E.dims.end());
  std::vector<Matrix> d;
  for (int n = lo; n < E.D; ++n) d.push_back(d_m_at(E, p, n));
  return NComplex(E.ctx, lo, dims, d, true, false);
}

// ---------------------------------------------------------------------------
// Comparison diagrams.
// ---------------------------------------------------------------------------

namespace {

// The alternating-sum complex on degrees lo..D as a spot-indexed complex.
OrdinaryComplex ordinary_row(const CosimplicialModule& E, int lo) {
  std::vector<int> dims, labels;
  std::vector<Matrix> d;
  std::vector<bool> ok;
  for (int n = lo; n <= E.D; ++n) {
    dims.push_back(E.dim(n));
    labels.push_back(n);
    ok.push_back(n < E.D);
  }
  for (int n = lo; n < E.D; ++n) d.push_back(alternating_sum_at(E, n));
  OrdinaryComplex out{E.ctx.field, lo, std::move(dims), std::move(d), std::move(labels),
                      std::move(ok)};
  out.check();
  return out;
}

// Alternating product of (N-2)-fold delta powers with descending first
// index: apply delta_s^{N-2}, then delta_{s-2}^{N-2}, ..., down to index
// p+1 or p+2, composing through ascending degrees from degree s.
Matrix descending_delta_vertical(const CosimplicialModule& E, int p, int s, int* final_degree) {
  int N = E.ctx.N;
  Matrix vert = Matrix::identity(E.ctx.field, E.dim(s));
  int deg = s;
  for (int idx = s; idx >= p + 1; idx -= 2)
    for (int j = 0; j < N - 2; ++j) {
      vert = delta_m_at(E, idx, deg) * vert;
      ++deg;
    }
  if (final_degree) *final_degree = deg;
  return vert;
}

OrdinaryComplexMap compose_ordinary(const OrdinaryComplexMap& g, const OrdinaryComplexMap& f) {
  int lo = std::max(f.mlo, g.mlo);
  int hi = std::min(f.mhi(), g.mhi());
  if (lo > hi) throw Error("composite of spot maps has empty overlap");
  for (int s = lo; s <= hi; ++s)
    if (f.target.dim(s) != g.source.dim(s))
      throw Error("composite of spot maps through mismatched complexes at spot " + istr(s));
  for (int s = lo; s < hi; ++s)
    if (!(f.target.dmap(s) == g.source.dmap(s)))
      throw Error("composite of spot maps through mismatched differentials at spot " + istr(s));
  std::vector<Matrix> phi;
  for (int s = lo; s <= hi; ++s) phi.push_back(g.at(s) * f.at(s));
  return OrdinaryComplexMap(f.source, g.target, lo, std::move(phi));
}

}  // namespace

OrdinaryComplexMap theorem1_diagram(const CosimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0 || p > E.D) throw Error("truncation parameter out of range");
  int lo = std::max(p - 1, 0);
  OrdinaryComplex top = ordinary_row(E, lo);
  NComplex Ep = truncate(E, p);
  OrdinaryComplex bottom = extract_contracted_complex(Ep, 1, p - 1);
  if (bottom.lo != lo) throw Error("internal: contraction starts at spot " + istr(bottom.lo));
  std::vector<Matrix> phi;
  int hi = std::min(top.hi(), bottom.hi());
  for (int s = lo; s <= hi; ++s) {
    if (s <= p) {
      phi.push_back(Matrix::identity(E.ctx.field, E.dim(s)));
      continue;
    }
    int deg = 0;
    Matrix v = descending_delta_vertical(E, p, s, &deg);
    if (deg != bottom.degree_label[static_cast<size_t>(s - bottom.lo)])
      throw Error("internal: vertical lands at degree " + istr(deg));
    phi.push_back(std::move(v));
  }
  return OrdinaryComplexMap(std::move(top), std::move(bottom), lo, std::move(phi));
}

OrdinaryComplexMap phi_map(const CosimplicialModule& E, int m, int p) {
  if (m < 1 || m > E.ctx.N - 1) throw Error("homology index out of range");
  OrdinaryComplexMap f = theorem1_diagram(E, p);
  if (m == 1) return f;
  NComplex Ep = truncate(E, p);
  OrdinaryComplexMap g = delta_map(Ep, m - 1, 1, p - 1);
  return compose_ordinary(g, f);
}

OrdinaryComplex cbar_complex(const CosimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0 || p > E.D) throw Error("truncation parameter out of range");
  int N = E.ctx.N;
  auto deg_of = [&](int s) {
    if (s <= p) return s;
    int t = s - p;
    if (t % 2 == 1) return N * ((t + 1) / 2) + p - 1;
    return N * (t / 2) + p;
  };
  std::vector<int> dims, labels;
  std::vector<Matrix> d;
  std::vector<bool> ok;
  for (int s = 0; deg_of(s) <= E.D; ++s) {
    dims.push_back(E.dim(deg_of(s)));
    labels.push_back(deg_of(s));
  }
  int count = static_cast<int>(dims.size());
  for (int s = 0; s + 1 < count; ++s) {
    int g = deg_of(s);
    if (s < p)
      d.push_back(alternating_sum_at(E, g));
    else if ((s - p) % 2 == 0)
      d.push_back(power_d(E, p, g, N - 1));
    else
      d.push_back(d_m_at(E, p, g));
  }
  for (int s = 0; s < count; ++s) ok.push_back(s + 1 < count);
  OrdinaryComplex out{E.ctx.field, 0, std::move(dims), std::move(d), std::move(labels),
                      std::move(ok)};
  out.check();
  return out;
}

OrdinaryComplexMap psi_bar(const CosimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0 || p + 1 > E.D) throw Error("truncation parameter out of range");
  int N = E.ctx.N;
  OrdinaryComplex src = cbar_complex(E, p + 1);
  OrdinaryComplex tgt = cbar_complex(E, p);
  int hi = std::min(src.hi(), tgt.hi());
  std::vector<Matrix> phi;
  for (int s = 0; s <= hi; ++s) {
    int g = src.degree_label[static_cast<size_t>(s)];
    if (s <= p || (s - p) % 2 == 0) {
      phi.push_back(Matrix::identity(E.ctx.field, E.dim(g)));
      continue;
    }
    Matrix v = Matrix::identity(E.ctx.field, E.dim(g));
    int deg = g;
    for (int j = 0; j < N - 2; ++j) {
      v = delta_m_at(E, p + 1, deg) * v;
      ++deg;
    }
    if (deg != tgt.degree_label[static_cast<size_t>(s)])
      throw Error("internal: column lands at degree " + istr(deg));
    phi.push_back(std::move(v));
  }
  return OrdinaryComplexMap(std::move(src), std::move(tgt), 0, std::move(phi));
}

OrdinaryComplexMap psi_bar_ell(const CosimplicialModule& E, int p, int l) {
  require_a0(E.ctx);
  int N = E.ctx.N;
  if (l < 1 || l > N - 2) throw Error("ladder shift out of range");
  if (p < 0 || p + l - 1 > E.D) throw Error("truncation parameter out of range");
  const Field& F = E.ctx.field;
  auto src_deg = [&](int s) {
    if (s == 0) return p + l - 1;  // zero spot, bookkeeping label only
    int t = s - 1;
    return (t % 2 == 0) ? N * (t / 2) + p + l : N * ((t - 1) / 2) + p + l + 1;
  };
  auto tgt_deg = [&](int s) {
    if (s == 0) return p + l - 1;
    int t = s - 1;
    return (t % 2 == 0) ? N * (t / 2) + p + l : N * ((t + 1) / 2) + p + l - 1;
  };
  std::vector<int> sdims, slabels, tdims, tlabels;
  std::vector<Matrix> sd, td;
  std::vector<bool> sok, tok;
  for (int s = 0; src_deg(s) <= E.D; ++s) {
    sdims.push_back(s == 0 ? 0 : E.dim(src_deg(s)));
    slabels.push_back(src_deg(s));
  }
  for (int s = 0; tgt_deg(s) <= E.D; ++s) {
    tdims.push_back(E.dim(tgt_deg(s)));
    tlabels.push_back(tgt_deg(s));
  }
  int scount = static_cast<int>(sdims.size()), tcount = static_cast<int>(tdims.size());
  for (int s = 0; s + 1 < scount; ++s) {
    if (s == 0) {
      sd.push_back(Matrix::zero(F, sdims[1], 0));
      continue;
    }
    int g = src_deg(s);
    sd.push_back((s % 2 == 1) ? d_m_at(E, p + 1, g) : power_d(E, p + 1, g, N - 1));
  }
  for (int s = 0; s + 1 < tcount; ++s) {
    int g = tgt_deg(s);
    if (s == 0)
      td.push_back(d_m_at(E, p, g));
    else
      td.push_back((s % 2 == 1) ? power_d(E, p, g, N - 1) : d_m_at(E, p, g));
  }
  for (int s = 0; s < scount; ++s) sok.push_back(s + 1 < scount);
  for (int s = 0; s < tcount; ++s) tok.push_back(s + 1 < tcount);
  OrdinaryComplex src{F, 0, std::move(sdims), std::move(sd), std::move(slabels), std::move(sok)};
  OrdinaryComplex tgt{F, 0, std::move(tdims), std::move(td), std::move(tlabels), std::move(tok)};
  src.check();
  tgt.check();
  int hi = std::min(src.hi(), tgt.hi());
  std::vector<Matrix> phi;
  for (int s = 0; s <= hi; ++s) {
    if (s == 0) {
      phi.push_back(Matrix::zero(F, tgt.dim(0), 0));
      continue;
    }
    int g = src.degree_label[static_cast<size_t>(s)];
    if (s % 2 == 1) {
      phi.push_back(Matrix::identity(F, E.dim(g)));
      continue;
    }
    Matrix v = Matrix::identity(F, E.dim(g));
    int deg = g;
    for (int j = 0; j < N - 2; ++j) {
      v = delta_m_at(E, p + 1, deg) * v;
      ++deg;
    }
    if (deg != tgt.degree_label[static_cast<size_t>(s)])
      throw Error("internal: ladder column lands at degree " + istr(deg));
    phi.push_back(std::move(v));
  }
  return OrdinaryComplexMap(std::move(src), std::move(tgt), 0, std::move(phi));
}

PsiBarMaps psi_bar_maps(const CosimplicialModule& E, int p, int l, bool assume_delta_vanishing) {
  require_a0(E.ctx);
  PsiBarMaps out{psi_bar(E, p), psi_bar_ell(E, p, l), false};
  bool premise = false;
  Assumptions a = check_assumptions(E.ctx);
  if (a.a1) {
    if (E.has_codegeneracies())
      premise = true;
    else if (assume_delta_vanishing && delta_vanishing_check(E, p))
      premise = true;
  }
  if (!premise) return out;
  for (const OrdinaryComplexMap* f : {&out.column, &out.ladder})
    for (int s = f->mlo; s <= f->mhi(); ++s) {
      if (!f->source.valid(s) || !f->target.valid(s)) continue;
      if (!is_iso(induced_map_ordinary(*f, s)))
        throw MismatchReport("comparison column fails to induce an isomorphism at spot " +
                             istr(s) + " (degrees " +
                             istr(f->source.degree_label[static_cast<size_t>(s - f->source.lo)]) +
                             " -> " +
                             istr(f->target.degree_label[static_cast<size_t>(s - f->target.lo)]) +
                             ")");
    }
  out.isomorphisms_asserted = true;
  return out;
}

// ---------------------------------------------------------------------------
// Contraction of (E_{p+1}, delta_{p+1}) and the kernel criterion.
// ---------------------------------------------------------------------------

namespace {

// chi : E^n -> E^{n-1}, equal to q^{p-n+1} s_{n-1-p} for n >= p+1 and zero on
// E^p (and below the window).
Matrix chi_at(const CosimplicialModule& E, int p, int n) {
  int rows = (n - 1 >= 0) ? E.dim(n - 1) : 0;
  if (n - 1 < p || n > E.D) return Matrix::zero(E.ctx.field, rows, E.dim(n));
  return E.s(n - 1, n - 1 - p) * E.ctx.q.pow(p - n + 1);
}

NComplex delta_complex(const CosimplicialModule& E, int p) {
  std::vector<int> dims(E.dims.begin() + p, E.dims.end());
  std::vector<Matrix> d;
  for (int n = p; n < E.D; ++n) d.push_back(delta_m_at(E, p + 1, n));
  return NComplex(E.ctx, p, dims, d, true, false);
}

}  // namespace

bool lemma9_contraction(const CosimplicialModule& E, int p) {
  require_a1(E.ctx);
  if (!E.has_codegeneracies())
    throw PremiseNotMet("the explicit contraction requires codegeneracies");
  if (p < 0 || p >= E.D) throw Error("truncation parameter out of range");
  const Field& F = E.ctx.field;
  int N = E.ctx.N;
  Scalar qinv = E.ctx.q.inv();
  for (int n = p; n <= E.D - 1; ++n) {
    Matrix cd = chi_at(E, p, n + 1) * delta_m_at(E, p + 1, n);
    Matrix dc = (n >= 1) ? delta_m_at(E, p + 1, n - 1) * chi_at(E, p, n)
                         : Matrix::zero(F, E.dim(0), E.dim(0));
    if (!(cd - dc * qinv == Matrix::identity(F, E.dim(n))))
      throw MismatchReport("contraction commutator fails at degree " + istr(n));
  }
  NComplex Ed = delta_complex(E, p);
  for (int m = 1; m <= N - 1; ++m)
    for (int n = p; n <= E.D; ++n) {
      if (!Ed.cell_valid(n, m)) continue;
      if (homology_graded(Ed, m, n).dim() != 0)
        throw MismatchReport("delta homology fails to vanish at degree " + istr(n) +
                             ", index " + istr(m));
    }
  // Factorial trace identity on degrees where every composite stays inside
  // the window.
  QContext invctx = make_context(F, qinv, N);
  Scalar fact = q_factorial(invctx, N - 1);
  for (int n = p; n + N - 1 <= E.D; ++n) {
    Matrix total = Matrix::zero(F, E.dim(n), E.dim(n));
    for (int k = 0; k <= N - 1; ++k) {
      Matrix acc = Matrix::identity(F, E.dim(n));
      int deg = n;
      for (int j = 0; j < k; ++j) {
        acc = delta_m_at(E, p + 1, deg) * acc;
        ++deg;
      }
      for (int j = 0; j < N - 1; ++j) {
        acc = chi_at(E, p, deg) * acc;
        --deg;
      }
      for (int j = 0; j < N - 1 - k; ++j) {
        // Once chi has bottomed out below the window, acc is the zero map
        // out of a zero space; lift it back up degree by degree.
        acc = (deg < 0) ? Matrix::zero(F, E.dim(deg + 1), acc.cols())
                        : delta_m_at(E, p + 1, deg) * acc;
        ++deg;
      }
      total = total + acc;
    }
    if (!(total == Matrix::identity(F, E.dim(n)) * fact))
      throw MismatchReport("factorial trace identity fails at degree " + istr(n));
  }
  return true;
}

bool delta_vanishing_check(const CosimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0 || p >= E.D) throw Error("truncation parameter out of range");
  NComplex Ed = delta_complex(E, p);
  for (int m = 1; m <= E.ctx.N - 1; ++m)
    for (int n = p; n <= E.D; ++n) {
      if (!Ed.cell_valid(n, m)) continue;
      if (homology_graded(Ed, m, n).dim() != 0) return false;
    }
  return true;
}

std::optional<Vec> lemma10_witness(const CosimplicialModule& E, int p, int m, int n,
                                   const Vec& x) {
  require_a1(E.ctx);
  if (!E.has_codegeneracies())
    throw PremiseNotMet("the kernel criterion requires codegeneracies");
  int N = E.ctx.N;
  if (p < 0 || n < p || n > E.D) throw Error("degree out of range");
  if (m < 1 || m > N - 1) throw Error("homology index out of range");
  if (n + m > E.D)
    throw DegreeOutOfWindow("kernel condition needs degrees up to " + istr(n + m));
  if (static_cast<int>(x.size()) != E.dim(n)) throw Error("element has the wrong dimension");
  Matrix dm = power_d(E, p, n, m);
  Matrix L = interpolation_at(E, p, m, n);
  bool in_kernel = vec_is_zero(dm.apply(x));
  int src = n + m - N;
  if (src < 0) {
    bool cond = vec_is_zero(L.apply(x));
    if (in_kernel != cond)
      throw MismatchReport("kernel criterion disagrees at degree " + istr(n));
    if (in_kernel) return Vec{};
    return std::nullopt;
  }
  Matrix W = power_d(E, p, src, N - m);
  auto sol = solve(L * W, L.apply(x));
  if (in_kernel) {
    if (!sol)
      throw MismatchReport("kernel criterion fails to produce a witness at degree " + istr(n));
    Vec y = *sol;
    if (!vec_is_zero(L.apply(vec_sub(x, W.apply(y)))))
      throw Error("internal: witness residual is nonzero");
    return y;
  }
  if (sol)
    throw MismatchReport("kernel criterion produced a witness for a non-cycle at degree " +
                         istr(n));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homology dictionaries.
// ---------------------------------------------------------------------------

DictionaryReport theorem234_check(const CosimplicialModule& E, int p,
                                  bool assume_delta_vanishing) {
  require_a1(E.ctx);
  if (p < 0 || p > E.D) throw Error("truncation parameter out of range");
  if (E.has_codegeneracies()) {
    if (p < E.D) lemma9_contraction(E, p);
  } else if (!(assume_delta_vanishing && delta_vanishing_check(E, p))) {
    throw PremiseNotMet(
        "the dictionary requires codegeneracies or the verified vanishing premise");
  }
  int N = E.ctx.N;
  NComplex ord = standard_differential(E);
  NComplex Ep = truncate(E, p);
  DictionaryReport rep;
  rep.ordinary.assign(static_cast<size_t>(E.D + 1), -1);
  for (int n = 0; n <= E.D; ++n)
    if (ord.cell_valid(n, 1)) rep.ordinary[static_cast<size_t>(n)] = homology_graded(ord, 1, n).dim();
  rep.table = homology_table(Ep);
  std::vector<std::string> failures;
  for (const auto& cell : rep.table.cells) {
    if (!cell.valid) continue;
    long pred = 0;
    bool known = true;
    std::string rule = "zero cell";
    int a = cell.n - (p - 1);
    if (a % N == 0) {
      int r = a / N;
      if (r == 0) {
        pred = kernel(alternating_sum_at(E, p - 1)).dim();
        rule = "kernel of the first differential";
      } else {
        int od = 2 * r + p - 1;
        if (od <= E.D && rep.ordinary[static_cast<size_t>(od)] >= 0) {
          pred = rep.ordinary[static_cast<size_t>(od)];
          rule = "ordinary degree " + istr(od);
        } else {
          known = false;
        }
      }
    } else if ((a + cell.m) % N == 0) {
      int r = (a + cell.m) / N - 1;
      int od = 2 * r + p;
      if (od <= E.D && rep.ordinary[static_cast<size_t>(od)] >= 0) {
        pred = rep.ordinary[static_cast<size_t>(od)];
        rule = "ordinary degree " + istr(od);
      } else {
        known = false;
      }
    }
    if (!known) continue;
    if (pred != cell.dim)
      failures.push_back("cell (degree " + istr(cell.n) + ", index " + istr(cell.m) +
                         "): found " + istr(cell.dim) + ", dictionary predicts " +
                         std::to_string(pred));
    else
      rep.checked.push_back("cell (degree " + istr(cell.n) + ", index " + istr(cell.m) +
                            ") = " + std::to_string(pred) + " [" + rule + "]");
  }
  for (int m = 1; m <= N - 1; ++m) {
    OrdinaryComplexMap fm = phi_map(E, m, p);
    for (int s = fm.mlo; s <= fm.mhi(); ++s) {
      if (!fm.source.valid(s) || !fm.target.valid(s)) continue;
      if (!is_iso(induced_map_ordinary(fm, s)))
        failures.push_back("comparison map for index " + istr(m) +
                           " fails to be bijective at spot " + istr(s));
      else
        rep.checked.push_back("comparison map for index " + istr(m) + " bijective at spot " +
                              istr(s));
    }
  }
  if (!failures.empty()) {
    std::ostringstream os;
    os << "dictionary mismatches:";
    for (const auto& f : failures) os << "\n  " << f;
    throw MismatchReport(os.str());
  }
  rep.ok = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Chain side.
// ---------------------------------------------------------------------------

Matrix chain_boundary_at(const SimplicialModule& E, int n) {
  if (n < 1 || n > E.D) throw Error("boundary degree " + istr(n) + " out of range");
  Matrix acc = Matrix::zero(E.ctx.field, E.dim(n - 1), E.dim(n));
  for (int i = 0; i <= n; ++i) {
    const Matrix& f = E.faces[static_cast<size_t>(n - 1)][static_cast<size_t>(i)];
    acc = (i % 2 == 0) ? acc + f : acc - f;
  }
  return acc;
}

Matrix chain_d_m_at(const SimplicialModule& E, int m, int n) {
  if (m < 0) throw Error("negative index for the chain differential");
  if (n < 1 || n > E.D) throw Error("chain differential degree " + istr(n) + " out of range");
  if (n < m) return chain_boundary_at(E, n);
  const auto& faces = E.faces[static_cast<size_t>(n - 1)];
  Matrix acc = Matrix::zero(E.ctx.field, E.dim(n - 1), E.dim(n));
  Scalar qp = E.ctx.field.one();
  for (int i = 0; i <= n - m - 1; ++i) {
    acc = acc + faces[static_cast<size_t>(i)] * qp;
    qp = qp * E.ctx.q;
  }
  Scalar c = E.ctx.q.pow(n - m);
  for (int r = 0; r <= m; ++r) {
    Matrix t = faces[static_cast<size_t>(n - m + r)] * c;
    acc = (r % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

Quotient ordinary_homology(const SimplicialModule& E, int n) {
  if (n < 0 || n > E.D - 1)
    throw DegreeOutOfWindow("ordinary chain homology at degree " + istr(n) +
                            " is not determined");
  Subspace Z = (n == 0) ? Subspace::full_space(E.ctx.field, E.dim(0))
                        : kernel(chain_boundary_at(E, n));
  Subspace B = image(chain_boundary_at(E, n + 1));
  return make_quotient(Z, B);
}

NComplex chain_ncomplex(const SimplicialModule& E, int p) {
  require_a0(E.ctx);
  if (p < 0) throw Error("negative truncation parameter");
  std::vector<int> dims;
  std::vector<Matrix> d;
  for (int k = 0; k <= E.D; ++k) dims.push_back(E.dim(E.D - k));
  for (int k = 0; k < E.D; ++k) d.push_back(chain_d_m_at(E, p, E.D - k));
  return NComplex(E.ctx, 0, dims, d, false, true);
}

Quotient chain_homology(const SimplicialModule& E, int p, int m, int n) {
  return homology_graded(chain_ncomplex(E, p), m, E.D - n);
}

DictionaryReport theorem4_simplicial_check(const SimplicialModule& E, int variant) {
  require_a1(E.ctx);
  if (variant != 0 && variant != 1) throw Error("variant must be 0 or 1");
  int N = E.ctx.N, D = E.D;
  DictionaryReport rep;
  rep.ordinary.assign(static_cast<size_t>(D + 1), -1);
  for (int n = 0; n <= D - 1; ++n)
    rep.ordinary[static_cast<size_t>(n)] = ordinary_homology(E, n).dim();
  NComplex F = chain_ncomplex(E, variant);
  rep.table.graded = true;
  rep.table.N = N;
  std::vector<std::string> failures;
  for (int n = 0; n <= D; ++n)
    for (int m = 1; m <= N - 1; ++m) {
      bool valid = F.cell_valid(D - n, m);
      int dim = valid ? homology_graded(F, m, D - n).dim() : -1;
      rep.table.cells.push_back({n, m, dim, valid});
      if (!valid) continue;
      long pred = 0;
      bool known = true;
      if (variant == 0) {
        if ((n + 1) % N == 0) {
          int od = 2 * ((n + 1) / N) - 1;
          if (od <= D && rep.ordinary[static_cast<size_t>(od)] >= 0)
            pred = rep.ordinary[static_cast<size_t>(od)];
          else
            known = false;
        } else if ((n - (m - 1)) % N == 0) {
          int od = 2 * ((n - m + 1) / N);
          if (od <= D && rep.ordinary[static_cast<size_t>(od)] >= 0)
            pred = rep.ordinary[static_cast<size_t>(od)];
          else
            known = false;
        }
      } else {
        if (n % N == 0) {
          int od = 2 * (n / N);
          if (od <= D && rep.ordinary[static_cast<size_t>(od)] >= 0)
            pred = rep.ordinary[static_cast<size_t>(od)];
          else
            known = false;
        } else if ((n - m) % N == 0) {
          int od = 2 * ((n - m) / N) + 1;
          if (od <= D && rep.ordinary[static_cast<size_t>(od)] >= 0)
            pred = rep.ordinary[static_cast<size_t>(od)];
          else
            known = false;
        }
      }
      if (!known) continue;
      if (pred != dim)
        failures.push_back("chain cell (degree " + istr(n) + ", index " + istr(m) +
                           "): found " + istr(dim) + ", dictionary predicts " +
                           std::to_string(pred));
      else
        rep.checked.push_back("chain cell (degree " + istr(n) + ", index " + istr(m) + ") = " +
                              std::to_string(pred));
    }
  if (!failures.empty()) {
    std::ostringstream os;
    os << "chain dictionary mismatches:";
    for (const auto& f : failures) os << "\n  " << f;
    throw MismatchReport(os.str());
  }
  rep.ok = true;
  return rep;
}

DictionaryCell dictionary_cell(int N, int p, int n, int m) {
  if (N < 2 || p < 0 || m < 1 || m > N - 1 || n < p - 1)
    throw Error("dictionary cell parameters out of range");
  DictionaryCell out;
  int a = n - (p - 1);
  if (a % N == 0) {
    int r = a / N;
    if (r == 0) {
      out.kind = DictionaryCell::kernel;
      out.degree = p - 1;
    } else {
      out.kind = DictionaryCell::ordinary;
      out.degree = 2 * r + p - 1;
    }
  } else if ((a + m) % N == 0) {
    out.kind = DictionaryCell::ordinary;
    out.degree = 2 * ((a + m) / N - 1) + p;
  }
  return out;
}

std::optional<int> chain_dictionary_degree(int N, int p, int n, int m) {
  if (N < 2 || m < 1 || m > N - 1 || n < 0) throw Error("chain cell parameters out of range");
  if (p != 0 && p != 1) throw Error("variant must be 0 or 1");
  if (p == 0) {
    if ((n + 1) % N == 0) return 2 * ((n + 1) / N) - 1;
    if ((n - (m - 1)) % N == 0) return 2 * ((n - m + 1) / N);
  } else {
    if (n % N == 0) return 2 * (n / N);
    if ((n - m) % N == 0) return 2 * ((n - m) / N) + 1;
  }
  return std::nullopt;
}

}  // namespace ncx
