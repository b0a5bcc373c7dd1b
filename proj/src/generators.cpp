#include "ncx/generators.hpp"

#include <algorithm>

namespace ncx {

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime_field())
    return f.from_int(static_cast<long>(rng() % static_cast<unsigned long>(f.modulus())));
  std::vector<Rational> c(static_cast<size_t>(f.degree()));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 7) - 3);
  return f.from_coeffs(c);
}

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

Matrix random_invertible(const Field& f, int n, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
  throw Error("failed to draw an invertible matrix");
}

Matrix random_nilpotent(const QContext& ctx, int dim, Rng& rng) {
  std::vector<Matrix> blocks;
  int remaining = dim;
  while (remaining > 0) {
    int s = 1 + static_cast<int>(rng() % static_cast<unsigned long>(std::min(ctx.N, remaining)));
    blocks.push_back(Matrix::shift(ctx.field, s));
    remaining -= s;
  }
  Matrix d0 = Matrix::block_diag(ctx.field, blocks);
  Matrix p = random_invertible(ctx.field, dim, rng);
  return p * d0 * inverse(p);
}

NDiffModule random_module(const QContext& ctx, int dim, Rng& rng) {
  return NDiffModule(ctx, dim == 0 ? Matrix::zero(ctx.field, 0, 0) : random_nilpotent(ctx, dim, rng));
}

Matrix random_poly_in_d(const NDiffModule& E, Rng& rng) {
  Matrix out = Matrix::zero(E.ctx.field, E.dim, E.dim);
  for (int k = 0; k <= E.ctx.N - 1; ++k)
    out = out + E.d.pow(k) * random_scalar(E.ctx.field, rng);
  return out;
}

NComplex random_ncomplex(const QContext& ctx, int lo, int len, int max_dim, Rng& rng) {
  int N = ctx.N;
  std::vector<int> dims(static_cast<size_t>(len), 0);
  // Strings: (first degree offset, length); each contributes one basis vector
  // per covered degree, mapped forward by the differential.
  struct StringRec {
    int start;
    int length;
    std::vector<int> idx;  // coordinate in each covered degree
  };
  std::vector<StringRec> strings;
  int attempts = 1 + static_cast<int>(rng() % static_cast<unsigned long>(2 * len * max_dim));
  for (int t = 0; t < attempts; ++t) {
    int start = static_cast<int>(rng() % static_cast<unsigned long>(len));
    int maxlen = std::min(N, len - start);
    int length = 1 + static_cast<int>(rng() % static_cast<unsigned long>(maxlen));
    bool fits = true;
    for (int k = start; k < start + length; ++k)
      if (dims[static_cast<size_t>(k)] >= max_dim) fits = false;
    if (!fits) continue;
    StringRec rec{start, length, {}};
    for (int k = start; k < start + length; ++k) {
      rec.idx.push_back(dims[static_cast<size_t>(k)]);
      ++dims[static_cast<size_t>(k)];
    }
    strings.push_back(std::move(rec));
  }
  std::vector<Matrix> d0;
  for (int k = 0; k + 1 < len; ++k)
    d0.push_back(Matrix::zero(ctx.field, dims[static_cast<size_t>(k + 1)], dims[static_cast<size_t>(k)]));
  for (const auto& rec : strings)
    for (int k = rec.start; k + 1 < rec.start + rec.length; ++k)
      d0[static_cast<size_t>(k)].at(rec.idx[static_cast<size_t>(k + 1 - rec.start)],
                                    rec.idx[static_cast<size_t>(k - rec.start)]) = ctx.field.one();
  std::vector<Matrix> q;
  for (int k = 0; k < len; ++k)
    q.push_back(dims[static_cast<size_t>(k)] == 0
                    ? Matrix::zero(ctx.field, 0, 0)
                    : random_invertible(ctx.field, dims[static_cast<size_t>(k)], rng));
  std::vector<Matrix> d;
  for (int k = 0; k + 1 < len; ++k)
    d.push_back(q[static_cast<size_t>(k + 1)] * d0[static_cast<size_t>(k)] *
                inverse(q[static_cast<size_t>(k)]));
  return NComplex(ctx, lo, std::move(dims), std::move(d), true, true);
}

SESUngraded random_ses(const QContext& ctx, int dim, Rng& rng) {
  NDiffModule F = random_module(ctx, dim, rng);
  int picks = 1 + static_cast<int>(rng() % 3);
  std::vector<Vec> orbit;
  for (int t = 0; t < picks; ++t) {
    Vec v = random_matrix(ctx.field, dim, 1, rng).col(0);
    for (int j = 0; j < ctx.N; ++j) orbit.push_back(F.d.pow(j).apply(v));
  }
  Subspace sub = Subspace::span(ctx.field, dim, orbit);
  Matrix alpha = sub.basis();
  // Differential of the submodule in its own basis.
  Matrix dE(ctx.field, sub.dim(), sub.dim());
  for (int j = 0; j < sub.dim(); ++j) {
    auto c = solve(alpha, F.d.apply(alpha.col(j)));
    if (!c) throw Error("orbit span is not stable under the differential");
    dE.set_col(j, *c);
  }
  // Quotient with representatives, then the induced differential.
  Quotient q = make_quotient(Subspace::full_space(ctx.field, dim), sub);
  Matrix beta(ctx.field, q.dim(), dim);
  for (int j = 0; j < dim; ++j) beta.set_col(j, quotient_coords(q, unit_vec(ctx.field, dim, j)));
  Matrix dG(ctx.field, q.dim(), q.dim());
  for (int j = 0; j < q.dim(); ++j) dG.set_col(j, quotient_coords(q, F.d.apply(q.reps.col(j))));
  NDiffModule E(ctx, dE), G(ctx, dG);
  return make_ses(std::move(E), F, std::move(G), std::move(alpha), std::move(beta));
}

SESGraded random_ses_graded(const QContext& ctx, int lo, int len, int max_dim, Rng& rng) {
  NComplex F = random_ncomplex(ctx, lo, len, max_dim, rng);
  int hi = F.hi();
  // Homogeneous generators and their forward orbits.
  std::vector<std::vector<Vec>> gens(static_cast<size_t>(len));
  int picks = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < picks; ++t) {
    int deg = lo + static_cast<int>(rng() % static_cast<unsigned long>(len));
    if (F.dim(deg) == 0) continue;
    Vec v = random_matrix(ctx.field, F.dim(deg), 1, rng).col(0);
    for (int n = deg; n <= hi; ++n)
      gens[static_cast<size_t>(n - lo)].push_back(F.d_pow(deg, n - deg).apply(v));
  }
  std::vector<Subspace> sub;
  for (int n = lo; n <= hi; ++n)
    sub.push_back(Subspace::span(ctx.field, F.dim(n), gens[static_cast<size_t>(n - lo)]));
  std::vector<int> dimsE, dimsG;
  std::vector<Matrix> alpha, beta, dE, dG;
  std::vector<Quotient> quot;
  for (int n = lo; n <= hi; ++n) {
    const Subspace& s = sub[static_cast<size_t>(n - lo)];
    dimsE.push_back(s.dim());
    alpha.push_back(s.basis());
    Quotient q = make_quotient(Subspace::full_space(ctx.field, F.dim(n)), s);
    dimsG.push_back(q.dim());
    Matrix b(ctx.field, q.dim(), F.dim(n));
    for (int j = 0; j < F.dim(n); ++j)
      b.set_col(j, quotient_coords(q, unit_vec(ctx.field, F.dim(n), j)));
    beta.push_back(std::move(b));
    quot.push_back(std::move(q));
  }
  for (int n = lo; n < hi; ++n) {
    size_t k = static_cast<size_t>(n - lo);
    Matrix de(ctx.field, dimsE[k + 1], dimsE[k]);
    for (int j = 0; j < dimsE[k]; ++j) {
      auto c = solve(alpha[k + 1], F.d(n).apply(alpha[k].col(j)));
      if (!c) throw Error("graded orbit span is not stable under the differential");
      de.set_col(j, *c);
    }
    dE.push_back(std::move(de));
    Matrix dg(ctx.field, dimsG[k + 1], dimsG[k]);
    for (int j = 0; j < dimsG[k]; ++j)
      dg.set_col(j, quotient_coords(quot[k + 1], F.d(n).apply(quot[k].reps.col(j))));
    dG.push_back(std::move(dg));
  }
  NComplex E(ctx, lo, dimsE, dE, true, true);
  NComplex G(ctx, lo, dimsG, dG, true, true);
  return make_ses_graded(std::move(E), F, std::move(G), std::move(alpha), std::move(beta));
}

}  // namespace ncx
