#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncx/generators.hpp"
#include "ncx/ncomplex.hpp"

using namespace ncx;

namespace {

QContext ctx7_3() { return make_context(Field::prime(7), Field::prime(7).from_int(2), 3); }
QContext ctx5_4() { return make_context(Field::prime(5), Field::prime(5).from_int(2), 4); }
QContext ctx11_5() { return make_context(Field::prime(11), Field::prime(11).from_int(3), 5); }

// k^2 with the length-2 shift string, as an N-differential module.
NDiffModule d2_module(const QContext& ctx) {
  return NDiffModule(ctx, Matrix::shift(ctx.field, 2));
}

}  // namespace

TEST_CASE("ungraded homology examples") {
  QContext c = ctx7_3();
  NDiffModule zero(c, Matrix::zero(c.field, 0, 0));
  for (int n = 1; n <= 2; ++n) CHECK(homology_ungraded(zero, n).dim() == 0);
  NDiffModule full(c, Matrix::shift(c.field, 3));
  CHECK(homology_ungraded(full, 1).dim() == 0);
  CHECK(homology_ungraded(full, 2).dim() == 0);
  NDiffModule half = d2_module(c);
  CHECK(homology_ungraded(half, 1).dim() == 1);
  CHECK(homology_ungraded(half, 2).dim() == 1);
  // Construction rejects a non-nilpotent differential.
  CHECK_THROWS_AS(NDiffModule(c, Matrix::identity(c.field, 2)), NilpotencyViolation);
  // B inside Z on random instances.
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    NDiffModule e = random_module(c, 6, rng);
    for (int n = 1; n <= 2; ++n) {
      Quotient h = homology_ungraded(e, n);
      CHECK(h.Z.contains(h.B));
      CHECK(h.dim() == h.Z.dim() - h.B.dim());
    }
  }
}

TEST_CASE("graded homology examples and window semantics") {
  QContext c = ctx7_3();
  const Field& f = c.field;
  // Complex concentrated in one degree, zero differential.
  NComplex point(c, 5, {1}, {});
  for (int m = 1; m <= 2; ++m) CHECK(homology_graded(point, m, 5).dim() == 1);
  CHECK(homology_graded(point, 1, 4).dim() == 0);
  // Two-term complex with an identity differential, N = 3: the length-2
  // string contributes to H^0_(2) and H^1_(1).
  NComplex twoterm(c, 0, {1, 1}, {Matrix::identity(f, 1)});
  CHECK(homology_graded(twoterm, 1, 0).dim() == 0);
  CHECK(homology_graded(twoterm, 2, 0).dim() == 1);
  CHECK(homology_graded(twoterm, 1, 1).dim() == 1);
  CHECK(homology_graded(twoterm, 2, 1).dim() == 0);
  // For N = 2 the same complex is acyclic.
  QContext c2 = make_context(Field::prime(7), Field::prime(7).from_int(6), 2);
  NComplex twoterm2(c2, 0, {1, 1}, {Matrix::identity(f, 1)});
  CHECK(homology_graded(twoterm2, 1, 0).dim() == 0);
  CHECK(homology_graded(twoterm2, 1, 1).dim() == 0);
  // Truncated window: boundary cells are not determined...
  NComplex trunc(c, 0, {1, 1, 1, 1}, {Matrix::identity(f, 1), Matrix::zero(f, 1, 1), Matrix::identity(f, 1)},
                 false, false);
  CHECK_THROWS_AS(homology_graded(trunc, 1, 3), DegreeOutOfWindow);
  CHECK_THROWS_AS(homology_graded(trunc, 2, 0), DegreeOutOfWindow);
  CHECK_FALSE(trunc.cell_valid(1, 1));  // boundaries come from below the window
  CHECK(trunc.cell_valid(1, 2));        // kernel and image both inside
  CHECK(trunc.cell_valid(2, 1));
  // ...unless an in-window zero degree cuts the dependence.
  NComplex cut(c, 0, {1, 1, 1, 0}, {Matrix::identity(f, 1), Matrix::zero(f, 1, 1), Matrix::zero(f, 0, 1)},
               false, false);
  CHECK(cut.cell_valid(3, 1));
  CHECK(cut.cell_valid(2, 2));
  CHECK(homology_graded(cut, 2, 2).dim() == 1);  // ker through the zero degree
  // All-zero complex.
  NComplex zero(c, 0, {0, 0, 0}, {Matrix::zero(f, 0, 0), Matrix::zero(f, 0, 0)});
  for (int n = 0; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) CHECK(homology_graded(zero, m, n).dim() == 0);
  // Chains of N composable differentials must vanish.
  CHECK_THROWS_AS(NComplex(c, 0, {1, 1, 1, 1},
                           {Matrix::identity(f, 1), Matrix::identity(f, 1), Matrix::identity(f, 1)}),
                  NilpotencyViolation);
}

TEST_CASE("induced maps, identity and zero and d") {
  QContext c = ctx7_3();
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    NDiffModule e = random_module(c, 7, rng);
    NModuleMap idmap(e, e, Matrix::identity(c.field, 7));
    NModuleMap zmap(e, e, Matrix::zero(c.field, 7, 7));
    NModuleMap dmap(e, e, e.d);
    for (int n = 1; n <= 2; ++n) {
      CHECK(induced_map(idmap, n).is_identity());
      CHECK(induced_map(zmap, n).is_zero());
      // The map induced by d factors through the homology-index shifts in
      // both orders.
      Matrix by_d = induced_map(dmap, n);
      if (n - 1 >= 1) CHECK(by_d == map_i(e, n - 1, 1) * map_d(e, n, 1));
      if (n + 1 <= c.N - 1) CHECK(by_d == map_d(e, n + 1, 1) * map_i(e, n, 1));
    }
  }
  // A non-chain-map is rejected.
  NDiffModule e = random_module(c, 5, rng);
  bool rejected_some = false;
  for (int t = 0; t < 20 && !rejected_some; ++t) {
    Matrix r = random_matrix(c.field, 5, 5, rng);
    if (!(r * e.d == e.d * r)) {
      CHECK_THROWS_AS(NModuleMap(e, e, r), NotAHomomorphism);
      rejected_some = true;
    }
  }
  CHECK(rejected_some);
}

TEST_CASE("hexagon exactness") {
  QContext c3 = ctx7_3();
  NDiffModule zero(c3, Matrix::zero(c3.field, 0, 0));
  CHECK(hexagon_check(zero, 1, 1).exact);
  NDiffModule half = d2_module(c3);
  HexagonReport rep = hexagon_check(half, 1, 1);
  CHECK(rep.exact);
  for (const auto& node : rep.nodes) CHECK(node.space_dim == 1);
  QContext c4 = ctx5_4();
  Rng rng(123);
  for (int t = 0; t < 10; ++t) {
    NDiffModule e(c4, random_nilpotent(c4, 12, rng));
    CHECK(hexagon_check(e, 1, 1).exact);
    CHECK(hexagon_check(e, 1, 2).exact);
    CHECK(hexagon_check(e, 2, 1).exact);
  }
  QContext c5 = ctx11_5();
  for (int t = 0; t < 5; ++t) {
    NDiffModule e(c5, random_nilpotent(c5, 9, rng));
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; l + m <= 4; ++m) CHECK(hexagon_check(e, l, m).exact);
  }
}

TEST_CASE("five lemma") {
  QContext c = ctx5_4();
  Rng rng(77);
  NDiffModule e = random_module(c, 8, rng);
  CHECK(five_lemma_check(NModuleMap(e, e, Matrix::identity(c.field, 8))));
  for (int t = 0; t < 15; ++t) {
    NDiffModule src = random_module(c, 8, rng);
    Matrix p = random_invertible(c.field, 8, rng);
    NDiffModule dst(c, p * src.d * inverse(p));
    CHECK(five_lemma_check(NModuleMap(src, dst, p)));
  }
  // Premise failure: zero map between modules with nonzero H_(1).
  NDiffModule a(c, Matrix::zero(c.field, 1, 1));
  CHECK_THROWS_AS(five_lemma_check(NModuleMap(a, a, Matrix::zero(c.field, 1, 1))), PremiseNotMet);
}

TEST_CASE("doubled module with the squared-zero differential") {
  QContext c3 = ctx7_3();
  NDiffModule zero(c3, Matrix::zero(c3.field, 0, 0));
  CHECK(remark1_check(zero));
  CHECK(remark1_check(d2_module(c3)));
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    QContext c = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    CHECK(remark1_check(random_module(c, 3 + static_cast<int>(rng() % 6), rng)));
  }
}

TEST_CASE("connecting map: submodule of the full shift block") {
  QContext c = ctx7_3();
  const Field& f = c.field;
  // F = k^3 with the full shift; E = span(e1) with zero differential.
  NDiffModule F(c, Matrix::shift(f, 3));
  NDiffModule E(c, Matrix::zero(f, 1, 1));
  Matrix alpha(f, 3, 1);
  alpha.at(0, 0) = f.one();
  NDiffModule G(c, Matrix::shift(f, 2));
  Matrix beta(f, 2, 3);  // classes of e2, e3
  beta.at(0, 1) = f.one();
  beta.at(1, 2) = f.one();
  SESUngraded s = make_ses(E, F, G, alpha, beta);
  // Both connecting maps are nonzero 1x1 matrices.
  for (int n = 1; n <= 2; ++n) {
    Matrix del = connecting_map(s, n);
    CHECK(del.rows() == 1);
    CHECK(del.cols() == 1);
    CHECK_FALSE(del.at(0, 0).is_zero());
    CHECK(hexagon_ses_check(s, n).exact);
  }
}

TEST_CASE("connecting map: split and degenerate sequences") {
  QContext c = ctx7_3();
  const Field& f = c.field;
  // Split: F = E + G with no interaction and zero differentials.
  NDiffModule E(c, Matrix::zero(f, 1, 1)), G(c, Matrix::zero(f, 1, 1)),
      F(c, Matrix::zero(f, 2, 2));
  Matrix alpha(f, 2, 1), beta(f, 1, 2);
  alpha.at(0, 0) = f.one();
  beta.at(0, 1) = f.one();
  SESUngraded s = make_ses(E, F, G, alpha, beta);
  for (int n = 1; n <= 2; ++n) {
    CHECK(connecting_map(s, n).is_zero());
    CHECK(hexagon_ses_check(s, n).exact);
  }
  // E = F via the identity, G = 0.
  NDiffModule zeroG(c, Matrix::zero(f, 0, 0));
  SESUngraded s2 = make_ses(E, E, zeroG, Matrix::identity(f, 1), Matrix::zero(f, 0, 1));
  CHECK(connecting_map(s2, 1).cols() == 0);
  // Malformed input is rejected.
  CHECK_THROWS_AS(make_ses(E, F, G, Matrix::zero(f, 2, 1), beta), ExactnessViolation);
}

TEST_CASE("homology cycle of a short exact sequence, random instances") {
  Rng rng(2024);
  for (int t = 0; t < 20; ++t) {
    QContext c = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    SESUngraded s = random_ses(c, 5 + static_cast<int>(rng() % 5), rng);
    for (int n = 1; n <= c.N - 1; ++n) CHECK(hexagon_ses_check(s, n).exact);
  }
}

TEST_CASE("connecting map functoriality along a ladder") {
  QContext c = ctx7_3();
  Rng rng(404);
  for (int t = 0; t < 10; ++t) {
    SESUngraded s = random_ses(c, 6, rng);
    // A polynomial in the middle differential preserves the submodule, so it
    // induces a ladder from the sequence to itself.
    Matrix mu = random_poly_in_d(s.F, rng);
    Matrix lam(c.field, s.E.dim, s.E.dim);
    for (int j = 0; j < s.E.dim; ++j) {
      auto col = solve(s.alpha, mu.apply(s.alpha.col(j)));
      REQUIRE(col.has_value());
      lam.set_col(j, *col);
    }
    // The induced map on the quotient side via any preimages.
    Matrix nu(c.field, s.G.dim, s.G.dim);
    for (int j = 0; j < s.G.dim; ++j) {
      auto pre = solve(s.beta, unit_vec(c.field, s.G.dim, j));
      REQUIRE(pre.has_value());
      nu.set_col(j, s.beta.apply(mu.apply(*pre)));
    }
    REQUIRE(s.alpha * lam == mu * s.alpha);
    REQUIRE(nu * s.beta == s.beta * mu);
    for (int n = 1; n <= c.N - 1; ++n) {
      Matrix del = connecting_map(s, n);
      Matrix lam_star = induced_map(NModuleMap(s.E, s.E, lam), c.N - n);
      Matrix nu_star = induced_map(NModuleMap(s.G, s.G, nu), n);
      CHECK(lam_star * del == del * nu_star);
    }
  }
}

TEST_CASE("graded short exact sequences and the long homology sequence") {
  Rng rng(909);
  for (int t = 0; t < 15; ++t) {
    QContext c = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    SESGraded s = random_ses_graded(c, 0, 6, 3, rng);
    for (int n = 1; n <= c.N - 1; ++n)
      for (int p = 0; p < c.N; ++p) CHECK(hexagon_ses_check_graded(s, n, p).exact);
  }
}

TEST_CASE("vanishing propagation") {
  QContext c = ctx5_4();
  NDiffModule full(c, Matrix::shift(c.field, 4));
  CHECK(vanishing_propagation_check(full));
  for (int n = 1; n <= 3; ++n) CHECK(homology_ungraded(full, n).dim() == 0);
  NDiffModule point(c, Matrix::zero(c.field, 1, 1));
  CHECK(vanishing_propagation_check(point));
  Rng rng(55);
  int observed_vanishing = 0;
  for (int t = 0; t < 30; ++t) {
    NDiffModule e = random_module(c, 4 + static_cast<int>(rng() % 6), rng);
    CHECK(vanishing_propagation_check(e));
    if (homology_ungraded(e, 1).dim() == 0) ++observed_vanishing;
  }
  CHECK(observed_vanishing > 0);
}

TEST_CASE("homotopy equivalence of induced maps") {
  QContext c = ctx7_3();
  Rng rng(808);
  NDiffModule e = random_module(c, 6, rng);
  std::vector<Matrix> zeros(3, Matrix::zero(c.field, 6, 6));
  Matrix lam = random_poly_in_d(e, rng);
  CHECK(homotopy_check(e, e, lam, lam, zeros));
  // Contractible instance: identity is homotopic to zero.
  QContext cz = make_context(Field::cyclotomic(4), Field::cyclotomic(4).zeta(), 4);
  NDiffModule block(cz, contraction_pair_d(cz));
  Matrix h = contraction_pair_h(cz);
  Matrix hshare = h.pow(3) * q_factorial(cz, 3).inv();
  std::vector<Matrix> hs(4, hshare);
  CHECK(homotopy_check(block, block, Matrix::identity(cz.field, 4), Matrix::zero(cz.field, 4, 4), hs));
  for (int n = 1; n <= 3; ++n) CHECK(homology_ungraded(block, n).dim() == 0);
  // Random homotopies: mu := lambda - sum d^{N-1-k} h_k d^k with h_k = h + p_k(d).
  for (int t = 0; t < 15; ++t) {
    NDiffModule f = random_module(c, 7, rng);
    Matrix lambda = random_poly_in_d(f, rng);
    Matrix hc = random_matrix(c.field, 7, 7, rng);
    std::vector<Matrix> hk;
    Matrix sum = Matrix::zero(c.field, 7, 7);
    for (int k = 0; k < 3; ++k) {
      hk.push_back(hc + random_poly_in_d(f, rng));
      sum = sum + f.d.pow(2 - k) * hk.back() * f.d.pow(k);
    }
    Matrix mu = lambda - sum;
    CHECK(homotopy_check(f, f, lambda, mu, hk));
  }
  // Premise violation is flagged.
  std::vector<Matrix> bad(3, Matrix::identity(c.field, 6));
  CHECK_THROWS_AS(homotopy_check(e, e, lam, lam, bad), PremiseNotMet);
}

TEST_CASE("contraction collapses homology") {
  QContext c = ctx7_3();
  Matrix D = contraction_pair_d(c), H = contraction_pair_h(c);
  // Frozen entries: subdiagonal ([2]_q, [1]_q) = (3, 1) mod 7.
  CHECK(H.at(1, 0) == c.field.from_int(3));
  CHECK(H.at(2, 1) == c.field.from_int(1));
  CHECK(H * D - c.q * (D * H) == Matrix::identity(c.field, 3));
  NDiffModule e(c, D);
  CHECK(contraction_check(e, H));
  // The trace identity evaluates to [2]_q! Id = 3 Id mod 7.
  Matrix total = Matrix::zero(c.field, 3, 3);
  Matrix h2 = H * H;
  for (int k = 0; k <= 2; ++k) total = total + D.pow(2 - k) * h2 * D.pow(k);
  CHECK(total == Matrix::identity(c.field, 3) * c.field.from_int(3));
  // Works for every N with q a primitive root of unity.
  for (int N : {2, 3, 4, 5, 6}) {
    Field f = Field::cyclotomic(N);
    QContext cz = make_context(f, f.zeta(), N);
    NDiffModule ez(cz, contraction_pair_d(cz));
    CHECK(contraction_check(ez, contraction_pair_h(cz)));
  }
  // Zero-dimensional module passes vacuously; bad h is rejected.
  NDiffModule z(c, Matrix::zero(c.field, 0, 0));
  CHECK(contraction_check(z, Matrix::zero(c.field, 0, 0)));
  CHECK_THROWS_AS(contraction_check(e, Matrix::zero(c.field, 3, 3)), PremiseNotMet);
  // Context without the invertibility assumption is rejected.
  QContext bad = make_context(Field::cyclotomic(3), Field::cyclotomic(3).one(), 3);
  NDiffModule eb(bad, Matrix::shift(bad.field, 3));
  CHECK_THROWS_AS(contraction_check(eb, contraction_pair_h(bad)), AssumptionViolation);
}

TEST_CASE("multiplicities") {
  QContext c = ctx7_3();
  NDiffModule flat(c, Matrix::zero(c.field, 5, 5));
  CHECK(multiplicities(flat) == std::vector<long>{5, 0, 0});
  NDiffModule full(c, Matrix::shift(c.field, 3));
  CHECK(multiplicities(full) == std::vector<long>{0, 0, 1});
  Matrix mixed = Matrix::block_diag(c.field, {Matrix::shift(c.field, 2), Matrix::zero(c.field, 1, 1)});
  CHECK(multiplicities(NDiffModule(c, mixed)) == std::vector<long>{1, 1, 0});
  QContext c4 = ctx5_4();
  CHECK(multiplicities(NDiffModule(c4, Matrix::shift(c4.field, 4))) ==
        std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("dimension formula for generalized homology") {
  QContext c3 = ctx7_3();
  NDiffModule point(c3, Matrix::zero(c3.field, 1, 1));
  CHECK(proposition2_check(point));
  CHECK(homology_ungraded(point, 1).dim() == 1);
  QContext c4 = ctx5_4();
  NDiffModule full(c4, Matrix::shift(c4.field, 4));
  CHECK(proposition2_check(full));
  Rng rng(606);
  Field qz3 = Field::cyclotomic(3);
  QContext cz = make_context(qz3, qz3.zeta(), 3);
  for (int t = 0; t < 50; ++t) {
    QContext c = (t % 3 == 0) ? cz : ((t % 3 == 1) ? c3 : c4);
    int dim = (t % 3 == 0) ? 4 + static_cast<int>(rng() % 3) : 4 + static_cast<int>(rng() % 7);
    CHECK(proposition2_check(random_module(c, dim, rng)));
  }
  QContext c5 = ctx11_5();
  for (int t = 0; t < 10; ++t) CHECK(proposition2_check(random_module(c5, 10, rng)));
}

TEST_CASE("two-periodic contraction of a graded complex") {
  Rng rng(7001);
  // N = 2: the contraction is the complex itself, re-indexed.
  QContext c2 = make_context(Field::prime(7), Field::prime(7).from_int(6), 2);
  NComplex e2 = random_ncomplex(c2, 0, 5, 3, rng);
  OrdinaryComplex c20 = extract_contracted_complex(e2, 1, 0);
  for (int s = c20.lo; s <= c20.hi(); ++s) {
    CHECK(c20.degree_label[static_cast<size_t>(s - c20.lo)] == s);
    CHECK(c20.dim(s) == e2.dim(s));
    if (s < c20.hi()) CHECK(c20.dmap(s) == e2.d(s));
  }
  // N = 3, m = 1, p = 0 on a 0..6 window: degrees 0,1,3,4,6 and maps d, d^2, d, d^2.
  QContext c3 = ctx7_3();
  NComplex e3 = random_ncomplex(c3, 0, 7, 3, rng);
  OrdinaryComplex c30 = extract_contracted_complex(e3, 1, 0);
  CHECK(c30.degree_label == std::vector<int>{0, 1, 3, 4, 6});
  CHECK(c30.dmap(c30.lo + 0) == e3.d_pow(0, 1));
  CHECK(c30.dmap(c30.lo + 1) == e3.d_pow(1, 2));
  CHECK(c30.dmap(c30.lo + 2) == e3.d_pow(3, 1));
  CHECK(c30.dmap(c30.lo + 3) == e3.d_pow(4, 2));
  // Spot homology is literally the generalized homology of the complex.
  for (int t = 0; t < 10; ++t) {
    QContext c = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    NComplex e = random_ncomplex(c, -2, 2 * c.N + 1, 3, rng);
    for (int m = 1; m <= c.N - 1; ++m)
      for (int p = -1; p <= 1; ++p) {
        OrdinaryComplex C = extract_contracted_complex(e, m, p);
        for (int s = C.lo; s <= C.hi(); ++s) {
          int deg = C.degree_label[static_cast<size_t>(s - C.lo)];
          bool even = ((s - p) % 2 + 2) % 2 == 0;
          Quotient via_spot = C.homology(s);
          Quotient direct = homology_graded(e, even ? m : c.N - m, deg);
          CHECK(via_spot.Z == direct.Z);
          CHECK(via_spot.B == direct.B);
          CHECK(via_spot.reps == direct.reps);
        }
      }
  }
}

TEST_CASE("vertical maps between contractions") {
  Rng rng(7002);
  QContext c = ctx5_4();
  // Zero differential: odd verticals are zero, even are identities.
  NComplex flat(c, 0, {2, 2, 2, 2, 2, 2, 2, 2},
                std::vector<Matrix>(7, Matrix::zero(c.field, 2, 2)));
  OrdinaryComplexMap fm = delta_map(flat, 1, 1, 0);
  for (int s = fm.mlo; s <= fm.mhi(); ++s) {
    bool even = ((s - 0) % 2 + 2) % 2 == 0;
    if (even)
      CHECK(fm.at(s).is_identity());
    else
      CHECK(fm.at(s).is_zero());
  }
  for (int t = 0; t < 8; ++t) {
    NComplex e = random_ncomplex(c, 0, 9, 3, rng);
    // The multi-step law is asserted inside the builder.
    OrdinaryComplexMap dm = delta_map(e, 2, 1, 0);
    // Induced maps match the identity- and d-induced maps on homology.
    for (int s = dm.mlo; s <= dm.mhi(); ++s) {
      if (!dm.source.valid(s) || !dm.target.valid(s)) continue;
      int deg = dm.source.degree_label[static_cast<size_t>(s - dm.source.lo)];
      bool even = ((s - 0) % 2 + 2) % 2 == 0;
      Matrix via_spot = induced_map_ordinary(dm, s);
      Quotient src = homology_graded(e, even ? 1 : c.N - 1, deg);
      Quotient dst = homology_graded(e, even ? 3 : c.N - 3, even ? deg : deg + 2);
      Matrix direct = induced_on_quotients(src, dst,
                                           even ? Matrix::identity(c.field, e.dim(deg))
                                                : e.d_pow(deg, 2));
      CHECK(via_spot == direct);
    }
  }
}

TEST_CASE("equivalent vanishing conditions") {
  QContext c = ctx5_4();
  const Field& f = c.field;
  Rng rng(7003);
  // Zero complex: all three conditions hold.
  NComplex zero(c, 0, {0, 0, 0, 0, 0, 0, 0, 0}, std::vector<Matrix>(7, Matrix::zero(f, 0, 0)));
  Lemma7Result z = lemma7_check(zero, 1, 1, 0);
  CHECK(z.a);
  CHECK(z.b);
  CHECK(z.c);
  // One isolated basis vector at degree p + m spoils all three conditions.
  NComplex spike(c, 0, {0, 1, 0, 0, 0}, {Matrix::zero(f, 1, 0), Matrix::zero(f, 0, 1),
                                         Matrix::zero(f, 0, 0), Matrix::zero(f, 0, 0)});
  Lemma7Result s = lemma7_check(spike, 1, 1, 0);
  CHECK_FALSE(s.a);
  CHECK_FALSE(s.b);
  CHECK_FALSE(s.c);
  // Random instances: the three conditions agree (asserted internally too).
  int true_cases = 0, false_cases = 0;
  for (int t = 0; t < 50; ++t) {
    QContext cc = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    NComplex e = random_ncomplex(cc, 0, 2 * cc.N + 1, 2, rng);
    for (int l = 1; l + 1 <= cc.N - 1; ++l) {
      Lemma7Result r = lemma7_check(e, l, 1, 0);
      CHECK(r.a == r.b);
      CHECK(r.b == r.c);
      (r.a ? true_cases : false_cases) += 1;
    }
  }
  CHECK(false_cases > 0);  // random instances exercise the nontrivial branch
  // Concentration conditions agree as well.
  for (int t = 0; t < 20; ++t) {
    QContext cc = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    NComplex e = random_ncomplex(cc, 0, 2 * cc.N, 2, rng);
    Corollary2Result r = corollary2_check(e, 1);
    CHECK(r.i == r.ii);
    CHECK(r.ii == r.iii);
  }
}

TEST_CASE("nilpotency of the two shift maps on total homology") {
  QContext c3 = ctx7_3();
  NDiffModule acyclic(c3, Matrix::shift(c3.field, 3));
  CHECK(kapranov_check(acyclic));
  NDiffModule half = d2_module(c3);
  KapranovData k = kapranov_data(half);
  CHECK(k.total_dim == 2);
  CHECK(k.i_total.is_zero());          // the H_(1) class is already a boundary in H_(2)
  CHECK_FALSE(k.d_total.is_zero());    // d carries the H_(2) class onto the H_(1) class
  Matrix sum = k.i_total + k.d_total;
  CHECK((sum * sum).is_zero());
  CHECK(kernel(sum) == image(sum));
  CHECK(kapranov_check(half));
  Rng rng(7004);
  for (int t = 0; t < 50; ++t) {
    QContext c = (t % 3 == 0) ? ctx7_3() : ((t % 3 == 1) ? ctx5_4() : ctx11_5());
    CHECK(kapranov_check(random_module(c, 4 + static_cast<int>(rng() % 6), rng)));
  }
}

TEST_CASE("tensor product of graded complexes") {
  QContext c = ctx7_3();
  const Field& f = c.field;
  Rng rng(7005);
  // Tensoring with the ground field in degree zero changes nothing.
  NComplex e1 = random_ncomplex(c, 0, 5, 3, rng);
  NComplex unit(c, 0, {1}, {});
  NComplex t1 = tensor_ncomplex(e1, unit);
  CHECK(t1.lo() == e1.lo());
  CHECK(t1.hi() == e1.hi());
  for (int n = t1.lo(); n <= t1.hi(); ++n) {
    CHECK(t1.dim(n) == e1.dim(n));
    if (n < t1.hi()) CHECK(t1.d(n) == e1.d(n));
  }
  // Two length-2 strings in adjacent degree windows: the frozen 4-dim complex.
  NComplex s1(c, 0, {1, 1}, {Matrix::identity(f, 1)});
  NComplex s2(c, 1, {1, 1}, {Matrix::identity(f, 1)});
  NComplex T = tensor_ncomplex(s1, s2);
  CHECK(T.lo() == 1);
  CHECK(T.hi() == 3);
  CHECK(T.dim(1) == 1);
  CHECK(T.dim(2) == 2);
  CHECK(T.dim(3) == 1);
  // Blocks of degree 2: (0,2) then (1,1).
  auto blocks = tensor_blocks(s1, s2, 2);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::pair<int, int>(0, 2));
  CHECK(blocks[1] == std::pair<int, int>(1, 1));
  Matrix d1(f, 2, 1);
  d1.at(0, 0) = f.one();  // into (0,2)
  d1.at(1, 0) = f.one();  // into (1,1)
  CHECK(T.d(1) == d1);
  Matrix d2(f, 1, 2);
  d2.at(0, 0) = f.one();  // from (0,2)
  d2.at(0, 1) = c.q;      // from (1,1), scaled by q^{a1} = q
  CHECK(T.d(2) == d2);
  // Homology of the frozen complex.
  CHECK(homology_graded(T, 1, 1).dim() == 0);
  CHECK(homology_graded(T, 2, 1).dim() == 0);
  CHECK(homology_graded(T, 1, 2).dim() == 1);
  CHECK(homology_graded(T, 2, 2).dim() == 1);
  CHECK(homology_graded(T, 1, 3).dim() == 0);
  CHECK(homology_graded(T, 2, 3).dim() == 0);
  // Random tensors construct successfully (power expansion asserted inside).
  for (int t = 0; t < 6; ++t) {
    QContext cc = (t % 2 == 0) ? ctx7_3() : ctx5_4();
    NComplex a = random_ncomplex(cc, 0, 4, 2, rng);
    NComplex b = random_ncomplex(cc, -1, 4, 2, rng);
    NComplex tt = tensor_ncomplex(a, b);
    CHECK(tt.lo() == a.lo() + b.lo());
    for (int m = 1; m <= cc.N - 1; ++m)
      for (int n = tt.lo(); n <= tt.hi(); ++n) CHECK(homology_graded(tt, m, n).dim() >= 0);
  }
  // Context must satisfy the invertibility assumption.
  QContext bad = make_context(Field::cyclotomic(3), Field::cyclotomic(3).one(), 3);
  NComplex b1(bad, 0, {1}, {});
  CHECK_THROWS_AS(tensor_ncomplex(b1, b1), AssumptionViolation);
}

TEST_CASE("homology tables") {
  QContext c = ctx7_3();
  NDiffModule half = d2_module(c);
  HomologyTable tu = homology_table(half);
  CHECK_FALSE(tu.graded);
  REQUIRE(tu.cells.size() == 2);
  CHECK(tu.cells[0].dim == 1);
  CHECK(tu.cells[1].dim == 1);
  Rng rng(7006);
  NComplex e = random_ncomplex(c, 0, 5, 3, rng);
  HomologyTable tg = homology_table(e);
  CHECK(tg.graded);
  CHECK(tg.cells.size() == 5 * 2);
  for (const auto& cell : tg.cells) {
    CHECK(cell.valid);
    CHECK(cell.dim >= 0);
  }
}
