#pragma once

#include <optional>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/rings.hpp"
#include "ncx/simplicial.hpp"

namespace ncx {

// ---------------------------------------------------------------------------
// Graded algebras and q-differentials.
// ---------------------------------------------------------------------------

// Grading semantics for a finite-dimensional graded algebra: `natural` keeps
// degrees 0..D and silently truncates products that would land above D;
// `mod_n` keeps one component per residue class 0..N-1 and wraps the product
// degree modulo N (so every product is stored and every identity is closed).
enum class Grading { natural, mod_n };

// Associative unital graded algebra with an explicit basis in each degree.
// product[a][b] has dim(a+b) rows (degree taken mod N for mod_n gradings) and
// dim(a)*dim(b) columns, acting on kron(alpha, beta) with the left factor
// most significant.
struct GradedAlgebra {
  QContext ctx;
  Grading grading = Grading::natural;
  int D = 0;  // top stored degree; N-1 for mod_n gradings
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> product;
  Vec unit;  // degree-0 unit

  int dim(int n) const;
  // Degree of a product of homogeneous degrees a and b; -1 when the result
  // is truncated away (natural grading above D).
  int product_degree(int a, int b) const;
  Vec multiply(int a, const Vec& x, int b, const Vec& y) const;
  // Left/right multiplication by a fixed degree-a element, as a matrix on
  // degree b (resp. degree-b element acting on degree a). Zero-row matrices
  // above the window.
  Matrix left_mult(int a, const Vec& x, int b) const;
  Matrix right_mult(int a, const Vec& y, int b) const;

  // Associativity on basis triples (total degree capped) and the unit laws
  // on every basis element. Throws RelationViolation.
  void validate(int assoc_degree_cap = 6) const;
};

// A degree-1 endomorphism of a graded algebra that satisfies the graded
// q-Leibniz rule d(ab) = d(a)b + q^a a d(b) and d^N = 0 in-window. For
// natural gradings d.size() == D (maps a -> a+1); for mod_n gradings
// d.size() == N and the maps wrap.
struct QDifferential {
  GradedAlgebra A;
  std::vector<Matrix> d;

  Matrix at(int a) const;            // the map leaving degree a
  Matrix power(int a, int k) const;  // d^k starting at degree a
  // Shapes, the q-Leibniz rule (LeibnizFailure) and nilpotency of order N
  // in-window (NilpotencyViolation).
  void validate() const;
};

// The graded q-Leibniz rule for a degree-1 map, checked as a matrix identity
// over all composable degree pairs. Throws LeibnizFailure naming the pair.
bool q_leibniz_check(const GradedAlgebra& A, const std::vector<Matrix>& d);

// The degree-ell q-derivation law L(ab) = L(a)b + q^{ell a} a L(b); L[a] is
// the map leaving degree a (wrapping for mod_n gradings).
bool q_derivation_check(const GradedAlgebra& A, int ell,
                        const std::vector<Matrix>& L);

// The q-binomial expansion of the n-th power of a q-Leibniz map,
//   d^n(ab) = sum_m q^{a(n-m)} [n over m]_q d^m(a) d^{n-m}(b),
// checked as a matrix identity. At n = N the middle q-binomials vanish and
// the identity says d^N is an untwisted derivation.
bool d_power_product_check(const QDifferential& T, int n);

// Inner graded q-derivation attached to a homogeneous element lambda of
// degree ell: alpha |-> lambda alpha - q^{ell a} alpha lambda. Entry a of the
// result is the map leaving degree a.
std::vector<Matrix> ad_q(const GradedAlgebra& A, int ell, const Vec& lambda);

// The signed expansion of powers of an inner degree-1 q-derivation,
//   (ad_q e)^n(alpha) = sum_m (-1)^m q^{ma + m(m-1)/2} [n over m]_q
//                        e^{n-m} alpha e^m.
bool ad_q_expansion_check(const GradedAlgebra& A, const Vec& e, int n);

// Under the invertibility assumption, (ad_q e)^N is the plain commutator
// with e^N: (ad_q e)^N(alpha) = e^N alpha - alpha e^N.
bool ad_q_nth_power_check(const GradedAlgebra& A, const Vec& e);

// The scalar identity (-1)^N q^{N(N-1)/2} = -1 forced by the invertibility
// assumption.
bool sign_identity_check(const QContext& ctx);

// The cyclically graded matrix algebra: M_N(k) graded by (row - column) mod N
// with e = lambda_1 E^2_1 + ... + lambda_N E^1_N of degree 1; checks
// e^N = lambda_1...lambda_N * 1 and installs d = ad_q(e), a q-differential
// because e^N is central. Requires the invertibility assumption
// (AssumptionViolation).
QDifferential matrix_example(const QContext& ctx,
                             const std::vector<Scalar>& lambdas);

// Degree-unrolling of a mod_n-graded q-differential algebra: degree n of the
// lift is a copy of residue class n mod N, products add degrees on the nose
// (truncated at D), and the differential is copied classwise. The classwise
// identity maps form the projection homomorphism back onto the input.
QDifferential pstar_lift(const QDifferential& T, int D);

// View a cosimplicial module carrying a product as a graded algebra
// (PremiseNotMet when no product is stored).
GradedAlgebra graded_algebra_of(const CosimplicialModule& E);

// ---------------------------------------------------------------------------
// The tensor algebra of A (x) A and its universal maps.
// ---------------------------------------------------------------------------

// The tensor algebra of the free bimodule A (x) A over an associative unital
// algebra A, truncated at degree D: degree n is the (n+1)-fold tensor power
// of A, the product merges the facing factors, and the differential is the
// q-weighted coface sum d_1. Construction verifies the q-Leibniz rule,
// in-window nilpotency, the generator values d_1(x) = 1(x)x - x(x)1 and
// d_1(tau) = tau^2 for tau = 1(x)1, and the closed forms
// d_1^n(tau) = [n]_q! 1^{(x)(n+2)} and d_1^n(x) = [n]_q! 1^{(x)n} d(x).
// Throws SizeGuard on oversized instances.
QDifferential tensor_algebra(const Algebra& A, const QContext& ctx, int D);

// The universal extension of a unital homomorphism phi : A -> target^0 and a
// degree-1 element alpha: the unique graded unital algebra map from the
// tensor algebra of A (passed as `domain`) sending x_0 (x) ... (x) x_n to
// phi(x_0) alpha phi(x_1) ... alpha phi(x_n). Checks that phi is a unital
// homomorphism and that the result is one (NotAHomomorphism); entry n of the
// result maps degree n of the domain to degree n of the target.
std::vector<Matrix> universal_extension(const Algebra& A,
                                        const GradedAlgebra& domain,
                                        const GradedAlgebra& target,
                                        const Matrix& phi, const Vec& alpha);

// A homomorphism of cosimplicial modules: maps[n] commutes with every coface
// and (when both sides carry them) every codegeneracy.
bool cosimplicial_map_check(const CosimplicialModule& src,
                            const CosimplicialModule& tgt,
                            const std::vector<Matrix>& maps);

// The canonical map from the tensor algebra to multilinear cochains,
//   Psi(x_0 (x) ... (x) x_n)(y_1, ..., y_n) = x_0 y_1 x_1 ... y_n x_n,
// realized as the universal extension of the identity along the identity
// 1-cochain. src/tgt must be the tensor and cochain cosimplicial modules of
// the same algebra over the same window.
std::vector<Matrix> hochschild_psi(const Algebra& A,
                                   const CosimplicialModule& tensor,
                                   const CosimplicialModule& cochains);

// ---------------------------------------------------------------------------
// The generated differential envelope and triviality of its cohomology.
// ---------------------------------------------------------------------------

// The differential envelope of A inside its tensor algebra: degree n is the
// span of the products x_0 d^{n_1}(x_1) ... d^{n_p}(x_p) with every
// n_i in 1..N-1. Construction verifies stability under the differential,
// closure under the product, and dim d^l(A) = dim A - 1 for l in 1..N-1.
struct Envelope {
  QDifferential ambient;            // the tensor algebra
  std::vector<Subspace> component;  // degree-n span inside ambient degree n
};
Envelope universal_envelope(const Algebra& A, const QContext& ctx, int D);

// Degree-1 cocycles form a unital subalgebra and top-power coboundaries a
// two-sided ideal inside them; checked by membership of basis products.
bool cocycle_ideal_check(const QDifferential& T);

// Builds omega(x) = omega0(x * x0) from a pairing witness omega0(x0) = 1;
// the result satisfies omega(1) = 1. Throws PremiseNotMet when the witness
// pairing is not 1.
Vec pairing_functional(const Algebra& A, const Vec& omega0, const Vec& x0);

// Triviality of the tensor-algebra cohomology: augments the tensor algebra
// by rank-one modules in degrees -(N-1)..-1 with the extended differential
// (e_{-1} |-> 1, e_{-i} |-> e_{-(i-1)}), builds the contracting homotopy
//   h(x_0 (x) ... (x) x_n) = omega(x_0) x_1 (x) ... (x) x_n,
//   h(x_0) = -q^{-1} omega(x_0) e_{-1},
//   h(e_{-i}) = -q^{-(i+1)} [i+1]_q e_{-(i+1)},  h(e_{-(N-1)}) = 0,
// verifies h d - q d h = Id degreewise, checks that every homology cell of
// the augmented complex vanishes, that the unaugmented tensor algebra has
// H^0_(m) of dimension 1 and nothing above, and repeats both statements for
// the sub-N-complex carried by the differential envelope. omega defaults to
// the coordinate of the unit when the unit is a basis vector; PremiseNotMet
// when omega(1) != 1 or no default exists.
struct TrivialityReport {
  bool contraction_exact = false;  // h d - q d h = Id on the augmented module
  bool tensor_trivial = false;     // H^0 = k, H^{>=1} = 0 for the tensor algebra
  bool envelope_trivial = false;   // same for the envelope sub-N-complex
  bool augmented_acyclic = false;  // every valid cell of the augmentation is 0
  HomologyTable table;             // cells of the unaugmented tensor algebra
};
TrivialityReport triviality_check(const Algebra& A, const QContext& ctx, int D,
                                  std::optional<Vec> omega = std::nullopt);

// Exploratory: the symmetrized composition of N degree-1 q-derivations of a
// mod_n-graded algebra is an untwisted derivation (the degree-N q-derivation
// law, with q^N = 1). derivations holds N families of per-degree maps.
bool symmetrized_derivation_check(
    const GradedAlgebra& A,
    const std::vector<std::vector<Matrix>>& derivations);

}  // namespace ncx
