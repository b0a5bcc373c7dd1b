#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

#include "ncx/errors.hpp"
#include "ncx/simplicial.hpp"

namespace ncx {

namespace {

std::string istr(long v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Abstract simplicial complexes.
// ---------------------------------------------------------------------------

SimplicialComplexK::SimplicialComplexK(int vertices_, std::vector<std::vector<int>> facets_)
    : vertices(vertices_), facets(std::move(facets_)) {
  if (vertices <= 0) throw Error("a simplicial complex needs at least one vertex");
  std::vector<bool> covered(static_cast<size_t>(vertices), false);
  for (auto& f : facets) {
    if (f.empty()) throw Error("empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 0 || v >= vertices) throw Error("facet vertex " + istr(v) + " out of range");
      covered[static_cast<size_t>(v)] = true;
    }
  }
  for (int v = 0; v < vertices; ++v)
    if (!covered[static_cast<size_t>(v)])
      throw Error("vertex " + istr(v) + " lies in no facet");
}

bool SimplicialComplexK::is_face(const std::vector<int>& support) const {
  if (support.empty()) return false;
  for (const auto& f : facets)
    if (std::includes(f.begin(), f.end(), support.begin(), support.end())) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Structure-constant algebras.
// ---------------------------------------------------------------------------

Vec Algebra::product(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw Error("algebra element has the wrong dimension");
  Vec out = zero_vec(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      Scalar c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      const Vec& row = mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k)
        out[static_cast<size_t>(k)] = out[static_cast<size_t>(k)] + c * row[static_cast<size_t>(k)];
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(product(x, unit_vec(field, dim, j)));
  return Matrix::from_cols(field, cols);
}

Matrix Algebra::right_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(product(unit_vec(field, dim, j), x));
  return Matrix::from_cols(field, cols);
}

void Algebra::validate() const {
  if (dim <= 0) throw RelationViolation("algebra dimension must be positive");
  if (static_cast<int>(mult.size()) != dim) throw RelationViolation("structure table size mismatch");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != dim)
      throw RelationViolation("structure table row size mismatch");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != dim)
        throw RelationViolation("structure constant vector size mismatch");
  }
  if (static_cast<int>(unit.size()) != dim) throw RelationViolation("unit size mismatch");
  for (int i = 0; i < dim; ++i) {
    Vec ei = unit_vec(field, dim, i);
    if (product(unit, ei) != ei || product(ei, unit) != ei)
      throw RelationViolation("unit law fails on basis element " + istr(i));
    for (int j = 0; j < dim; ++j) {
      Vec ej = unit_vec(field, dim, j);
      for (int k = 0; k < dim; ++k) {
        Vec ek = unit_vec(field, dim, k);
        if (product(product(ei, ej), ek) != product(ei, product(ej, ek)))
          throw RelationViolation("associativity fails on basis triple (" + istr(i) + "," +
                                  istr(j) + "," + istr(k) + ")");
      }
    }
  }
}

Algebra ground_algebra(const Field& f) {
  Algebra A{f, 1, {f.one()}, {{{f.one()}}}};
  return A;
}

Algebra dual_numbers_algebra(const Field& f) {
  Scalar o = f.one(), z = f.zero();
  Algebra A{f,
            2,
            {o, z},
            {{{o, z}, {z, o}}, {{z, o}, {z, z}}}};
  return A;
}

Algebra product_field_algebra(const Field& f) {
  Scalar o = f.one(), z = f.zero();
  Algebra A{f,
            2,
            {o, o},
            {{{o, z}, {z, z}}, {{z, z}, {z, o}}}};
  return A;
}

Algebra matrix2_algebra(const Field& f) {
  Scalar o = f.one(), z = f.zero();
  Algebra A{f, 4, {o, z, z, o}, {}};  // unit = E00 + E11
  A.mult.assign(4, std::vector<Vec>(4, Vec(4, z)));
  // Basis E_{rc} at index 2r+c with E_{ab} E_{cd} = [b==c] E_{ad}.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c)
            A.mult[static_cast<size_t>(2 * a + b)][static_cast<size_t>(2 * c + d)]
                  [static_cast<size_t>(2 * a + d)] = o;
  return A;
}

Bimodule regular_bimodule(const Algebra& A) {
  Bimodule M;
  M.dim = A.dim;
  for (int i = 0; i < A.dim; ++i) {
    Vec ei = unit_vec(A.field, A.dim, i);
    M.left.push_back(A.left_mult(ei));
    M.right.push_back(A.right_mult(ei));
  }
  return M;
}

long dimension_guard() {
  const char* env = std::getenv("NCOMPLEX_MAX_DIM");
  if (!env || !*env) return 2048;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return 2048;
  return v;
}

namespace {

void guard_dimension(long dim, int degree) {
  long cap = dimension_guard();
  if (dim > cap)
    throw SizeGuard("degree " + istr(degree) + " would have dimension " + istr(dim) +
                    ", above the limit " + istr(cap));
}

// Weakly increasing (len)-tuples supported on a face, in lexicographic order.
std::vector<std::vector<int>> weak_tuples(const SimplicialComplexK& K, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < K.vertices; ++v) {
      std::vector<int> support(cur.begin(), cur.end());
      support.push_back(v);
      support.erase(std::unique(support.begin(), support.end()), support.end());
      if (!K.is_face(support)) continue;
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Arbitrary (len)-tuples supported on a face, in lexicographic order.
std::vector<std::vector<int>> free_tuples(const SimplicialComplexK& K, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < K.vertices; ++v) {
      std::vector<int> support(cur.begin(), cur.end());
      support.push_back(v);
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      if (!K.is_face(support)) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

using Index = std::map<std::vector<int>, int>;

Index index_of(const std::vector<std::vector<int>>& basis) {
  Index idx;
  for (size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = static_cast<int>(k);
  return idx;
}

std::vector<int> erase_at(const std::vector<int>& t, int i) {
  std::vector<int> out(t);
  out.erase(out.begin() + i);
  return out;
}

long encode(const std::vector<int>& t, int base) {
  long f = 0;
  for (int v : t) f = f * base + v;
  return f;
}

std::vector<int> decode(long flat, int len, int base) {
  std::vector<int> out(static_cast<size_t>(len));
  for (int t = len - 1; t >= 0; --t) {
    out[static_cast<size_t>(t)] = static_cast<int>(flat % base);
    flat /= base;
  }
  return out;
}

}  // namespace

CosimplicialModule constant_cosimplicial(const QContext& ctx, int D) {
  if (D < 0) throw Error("negative degree window");
  CosimplicialModule E{ctx, D, {}, {}, {}, {}, {}};
  E.dims.assign(static_cast<size_t>(D + 1), 1);
  Matrix one = Matrix::identity(ctx.field, 1);
  E.cofaces.resize(static_cast<size_t>(D));
  E.codegens.resize(static_cast<size_t>(D));
  for (int n = 0; n < D; ++n) {
    E.cofaces[static_cast<size_t>(n)].assign(static_cast<size_t>(n + 2), one);
    E.codegens[static_cast<size_t>(n)].assign(static_cast<size_t>(n + 1), one);
  }
  E.product.resize(static_cast<size_t>(D + 1));
  for (int a = 0; a <= D; ++a)
    E.product[static_cast<size_t>(a)].assign(static_cast<size_t>(D + 1 - a), one);
  E.unit = {ctx.field.one()};
  return E;
}

SimplicialModule build_simplicial_set_module(const SimplicialComplexK& K, const QContext& ctx,
                                             int D) {
  if (D < 0) throw Error("negative degree window");
  SimplicialModule E{ctx, D, {}, {}, {}};
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<Index> index;
  for (int n = 0; n <= D + 0; ++n) {
    basis.push_back(weak_tuples(K, n + 1));
    guard_dimension(static_cast<long>(basis.back().size()), n);
    index.push_back(index_of(basis.back()));
    E.dims.push_back(static_cast<int>(basis.back().size()));
  }
  E.faces.resize(static_cast<size_t>(D));
  E.degens.resize(static_cast<size_t>(D));
  for (int n = 0; n < D; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      Matrix f = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n)],
                              E.dims[static_cast<size_t>(n + 1)]);
      for (size_t c = 0; c < basis[static_cast<size_t>(n + 1)].size(); ++c) {
        const auto& t = basis[static_cast<size_t>(n + 1)][c];
        int r = index[static_cast<size_t>(n)].at(erase_at(t, i));
        f.at(r, static_cast<int>(c)) = ctx.field.one();
      }
      E.faces[static_cast<size_t>(n)].push_back(std::move(f));
    }
    for (int i = 0; i <= n; ++i) {
      Matrix s = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n + 1)],
                              E.dims[static_cast<size_t>(n)]);
      for (size_t c = 0; c < basis[static_cast<size_t>(n)].size(); ++c) {
        std::vector<int> t = basis[static_cast<size_t>(n)][c];
        t.insert(t.begin() + i, t[static_cast<size_t>(i)]);
        int r = index[static_cast<size_t>(n + 1)].at(t);
        s.at(r, static_cast<int>(c)) = ctx.field.one();
      }
      E.degens[static_cast<size_t>(n)].push_back(std::move(s));
    }
  }
  return E;
}

CosimplicialModule build_simplicial_forms(const SimplicialComplexK& K, const QContext& ctx,
                                          int D) {
  if (D < 0) throw Error("negative degree window");
  CosimplicialModule E{ctx, D, {}, {}, {}, {}, {}};
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<Index> index;
  for (int n = 0; n <= D; ++n) {
    basis.push_back(free_tuples(K, n + 1));
    guard_dimension(static_cast<long>(basis.back().size()), n);
    index.push_back(index_of(basis.back()));
    E.dims.push_back(static_cast<int>(basis.back().size()));
  }
  E.cofaces.resize(static_cast<size_t>(D));
  E.codegens.resize(static_cast<size_t>(D));
  for (int n = 0; n < D; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      Matrix f = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n + 1)],
                              E.dims[static_cast<size_t>(n)]);
      for (size_t r = 0; r < basis[static_cast<size_t>(n + 1)].size(); ++r) {
        const auto& t = basis[static_cast<size_t>(n + 1)][r];
        int c = index[static_cast<size_t>(n)].at(erase_at(t, i));
        f.at(static_cast<int>(r), c) = f.at(static_cast<int>(r), c) + ctx.field.one();
      }
      E.cofaces[static_cast<size_t>(n)].push_back(std::move(f));
    }
    for (int i = 0; i <= n; ++i) {
      Matrix s = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n)],
                              E.dims[static_cast<size_t>(n + 1)]);
      for (size_t c = 0; c < basis[static_cast<size_t>(n + 1)].size(); ++c) {
        const auto& t = basis[static_cast<size_t>(n + 1)][c];
        if (t[static_cast<size_t>(i)] != t[static_cast<size_t>(i + 1)]) continue;
        int r = index[static_cast<size_t>(n)].at(erase_at(t, i));
        s.at(r, static_cast<int>(c)) = ctx.field.one();
      }
      E.codegens[static_cast<size_t>(n)].push_back(std::move(s));
    }
  }
  E.product.resize(static_cast<size_t>(D + 1));
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      int da = E.dims[static_cast<size_t>(a)], db = E.dims[static_cast<size_t>(b)];
      Matrix m = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(a + b)], da * db);
      for (int x = 0; x < da; ++x) {
        const auto& s = basis[static_cast<size_t>(a)][static_cast<size_t>(x)];
        for (int y = 0; y < db; ++y) {
          const auto& t = basis[static_cast<size_t>(b)][static_cast<size_t>(y)];
          if (s.back() != t.front()) continue;
          std::vector<int> glue(s);
          glue.insert(glue.end(), t.begin() + 1, t.end());
          std::vector<int> support(glue);
          std::sort(support.begin(), support.end());
          support.erase(std::unique(support.begin(), support.end()), support.end());
          if (!K.is_face(support)) continue;
          int r = index[static_cast<size_t>(a + b)].at(glue);
          m.at(r, x * db + y) = ctx.field.one();
        }
      }
      E.product[static_cast<size_t>(a)].push_back(std::move(m));
    }
  E.unit = Vec(static_cast<size_t>(E.dims[0]), ctx.field.one());
  return E;
}

namespace {

void hochschild_guards(const Algebra& A, int D) {
  if (A.dim > 4)
    throw SizeGuard("multilinear cochains are limited to algebras of dimension at most 4");
  if (D > 6) throw SizeGuard("multilinear cochains are limited to degree windows up to 6");
}

}  // namespace

CosimplicialModule build_hochschild(const Algebra& A, const Bimodule& M, const QContext& ctx,
                                    int D) {
  if (D < 0) throw Error("negative degree window");
  if (A.field != ctx.field) throw Error("algebra and context field disagree");
  hochschild_guards(A, D);
  A.validate();
  int dA = A.dim, dM = M.dim;
  if (static_cast<int>(M.left.size()) != dA || static_cast<int>(M.right.size()) != dA)
    throw Error("bimodule action tables have the wrong size");
  CosimplicialModule E{ctx, D, {}, {}, {}, {}, {}};
  long dn = dM;
  for (int n = 0; n <= D; ++n) {
    guard_dimension(dn, n);
    E.dims.push_back(static_cast<int>(dn));
    dn *= dA;
  }
  const Scalar one = ctx.field.one();
  E.cofaces.resize(static_cast<size_t>(D));
  E.codegens.resize(static_cast<size_t>(D));
  for (int n = 0; n < D; ++n) {
    long args = 1;
    for (int t = 0; t < n; ++t) args *= dA;  // dA^n argument tuples
    for (int i = 0; i <= n + 1; ++i) {
      Matrix f = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n + 1)],
                              E.dims[static_cast<size_t>(n)]);
      for (long fi = 0; fi < args; ++fi) {
        std::vector<int> tup = decode(fi, n, dA);
        for (int j = 0; j < dM; ++j) {
          int col = static_cast<int>(fi * dM + j);
          if (i == 0) {
            for (int k = 0; k < dA; ++k)
              for (int jp = 0; jp < dM; ++jp) {
                const Scalar& c = M.left[static_cast<size_t>(k)].at(jp, j);
                if (c.is_zero()) continue;
                long rflat = (static_cast<long>(k) * args + fi) * dM + jp;
                f.at(static_cast<int>(rflat), col) = f.at(static_cast<int>(rflat), col) + c;
              }
          } else if (i == n + 1) {
            for (int k = 0; k < dA; ++k)
              for (int jp = 0; jp < dM; ++jp) {
                const Scalar& c = M.right[static_cast<size_t>(k)].at(jp, j);
                if (c.is_zero()) continue;
                long rflat = (fi * dA + k) * dM + jp;
                f.at(static_cast<int>(rflat), col) = f.at(static_cast<int>(rflat), col) + c;
              }
          } else {
            // Multiply arguments i and i+1: the cochain with tuple `tup`
            // pulls back along every pair (k, k') whose product meets
            // basis element tup[i-1].
            for (int k = 0; k < dA; ++k)
              for (int kp = 0; kp < dA; ++kp) {
                const Scalar& c = A.mult[static_cast<size_t>(k)][static_cast<size_t>(kp)]
                                        [static_cast<size_t>(tup[static_cast<size_t>(i - 1)])];
                if (c.is_zero()) continue;
                std::vector<int> rt(tup);
                rt[static_cast<size_t>(i - 1)] = k;
                rt.insert(rt.begin() + i, kp);
                long rflat = encode(rt, dA) * dM + j;
                f.at(static_cast<int>(rflat), col) = f.at(static_cast<int>(rflat), col) + c;
              }
          }
        }
      }
      E.cofaces[static_cast<size_t>(n)].push_back(std::move(f));
    }
    long args1 = args * dA;  // dA^{n+1} tuples at degree n+1
    for (int i = 0; i <= n; ++i) {
      Matrix s = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n)],
                              E.dims[static_cast<size_t>(n + 1)]);
      for (long fi = 0; fi < args1; ++fi) {
        std::vector<int> tup = decode(fi, n + 1, dA);
        const Scalar& c = A.unit[static_cast<size_t>(tup[static_cast<size_t>(i)])];
        if (c.is_zero()) continue;
        long rbase = encode(erase_at(tup, i), dA) * dM;
        for (int j = 0; j < dM; ++j) {
          int col = static_cast<int>(fi * dM + j);
          s.at(static_cast<int>(rbase + j), col) = s.at(static_cast<int>(rbase + j), col) + c;
        }
      }
      E.codegens[static_cast<size_t>(n)].push_back(std::move(s));
    }
  }
  return E;
}

CosimplicialModule build_hochschild(const Algebra& A, const QContext& ctx, int D) {
  CosimplicialModule E = build_hochschild(A, regular_bimodule(A), ctx, D);
  int dA = A.dim;
  E.product.resize(static_cast<size_t>(D + 1));
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      int da = E.dims[static_cast<size_t>(a)], db = E.dims[static_cast<size_t>(b)];
      Matrix m = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(a + b)], da * db);
      for (int x = 0; x < da; ++x) {
        long xi = x / dA;
        int u = x % dA;
        for (int y = 0; y < db; ++y) {
          long yi = y / dA;
          int v = y % dA;
          const Vec& row = A.mult[static_cast<size_t>(u)][static_cast<size_t>(v)];
          long argb = db / dA;  // dA^b argument tuples on the right factor
          long rbase = (xi * argb + yi) * dA;
          for (int w = 0; w < dA; ++w) {
            const Scalar& c = row[static_cast<size_t>(w)];
            if (c.is_zero()) continue;
            m.at(static_cast<int>(rbase + w), x * db + y) =
                m.at(static_cast<int>(rbase + w), x * db + y) + c;
          }
        }
      }
      E.product[static_cast<size_t>(a)].push_back(std::move(m));
    }
  E.unit = A.unit;
  return E;
}

CosimplicialModule build_tensor_cosimplicial(const Algebra& A, const QContext& ctx, int D) {
  if (D < 0) throw Error("negative degree window");
  if (A.field != ctx.field) throw Error("algebra and context field disagree");
  if (A.dim > 4) throw SizeGuard("tensor powers need a generator of dimension at most 4");
  A.validate();
  int dA = A.dim;
  CosimplicialModule E{ctx, D, {}, {}, {}, {}, {}};
  long dn = dA;
  for (int n = 0; n <= D; ++n) {
    guard_dimension(dn, n);
    E.dims.push_back(static_cast<int>(dn));
    dn *= dA;
  }
  E.cofaces.resize(static_cast<size_t>(D));
  E.codegens.resize(static_cast<size_t>(D));
  for (int n = 0; n < D; ++n) {
    long slots = E.dims[static_cast<size_t>(n)];  // dA^{n+1}
    for (int i = 0; i <= n + 1; ++i) {
      Matrix f = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n + 1)],
                              E.dims[static_cast<size_t>(n)]);
      for (long col = 0; col < slots; ++col) {
        std::vector<int> tup = decode(col, n + 1, dA);
        for (int u = 0; u < dA; ++u) {
          const Scalar& c = A.unit[static_cast<size_t>(u)];
          if (c.is_zero()) continue;
          std::vector<int> rt(tup);
          rt.insert(rt.begin() + i, u);
          long r = encode(rt, dA);
          f.at(static_cast<int>(r), static_cast<int>(col)) =
              f.at(static_cast<int>(r), static_cast<int>(col)) + c;
        }
      }
      E.cofaces[static_cast<size_t>(n)].push_back(std::move(f));
    }
    long slots1 = E.dims[static_cast<size_t>(n + 1)];
    for (int i = 0; i <= n; ++i) {
      Matrix s = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(n)],
                              E.dims[static_cast<size_t>(n + 1)]);
      for (long col = 0; col < slots1; ++col) {
        std::vector<int> tup = decode(col, n + 2, dA);
        const Vec& row = A.mult[static_cast<size_t>(tup[static_cast<size_t>(i)])]
                               [static_cast<size_t>(tup[static_cast<size_t>(i + 1)])];
        for (int w = 0; w < dA; ++w) {
          const Scalar& c = row[static_cast<size_t>(w)];
          if (c.is_zero()) continue;
          std::vector<int> rt(tup);
          rt[static_cast<size_t>(i)] = w;
          rt.erase(rt.begin() + i + 1);
          long r = encode(rt, dA);
          s.at(static_cast<int>(r), static_cast<int>(col)) =
              s.at(static_cast<int>(r), static_cast<int>(col)) + c;
        }
      }
      E.codegens[static_cast<size_t>(n)].push_back(std::move(s));
    }
  }
  E.product.resize(static_cast<size_t>(D + 1));
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      int da = E.dims[static_cast<size_t>(a)], db = E.dims[static_cast<size_t>(b)];
      Matrix m = Matrix::zero(ctx.field, E.dims[static_cast<size_t>(a + b)], da * db);
      for (int x = 0; x < da; ++x) {
        std::vector<int> s = decode(x, a + 1, dA);
        for (int y = 0; y < db; ++y) {
          std::vector<int> t = decode(y, b + 1, dA);
          const Vec& row = A.mult[static_cast<size_t>(s.back())][static_cast<size_t>(t.front())];
          for (int w = 0; w < dA; ++w) {
            const Scalar& c = row[static_cast<size_t>(w)];
            if (c.is_zero()) continue;
            std::vector<int> glue(s.begin(), s.end() - 1);
            glue.push_back(w);
            glue.insert(glue.end(), t.begin() + 1, t.end());
            long r = encode(glue, dA);
            m.at(static_cast<int>(r), x * db + y) = m.at(static_cast<int>(r), x * db + y) + c;
          }
        }
      }
      E.product[static_cast<size_t>(a)].push_back(std::move(m));
    }
  E.unit = A.unit;
  return E;
}

}  // namespace ncx
