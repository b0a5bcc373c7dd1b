#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/rings.hpp"

namespace ncx {

// ---------------------------------------------------------------------------
// (Pre-)(co)simplicial modules over a finite degree window.
// ---------------------------------------------------------------------------

// Degrees 0..D with cofaces f_i : E^n -> E^{n+1} (0 <= i <= n+1) for every
// n < D, optional codegeneracies s_i : E^{n+1} -> E^n (0 <= i <= n), and an
// optional graded product making the window the start of a graded unital
// algebra compatible with the cofaces (and codegeneracies when present).
struct CosimplicialModule {
  QContext ctx;
  int D = 0;
  std::vector<int> dims;                      // size D+1
  std::vector<std::vector<Matrix>> cofaces;   // [n][i], n in 0..D-1
  std::vector<std::vector<Matrix>> codegens;  // [n][i], empty when withheld
  std::vector<std::vector<Matrix>> product;   // [a][b]: E^a (x) E^b -> E^{a+b}
  Vec unit;                                   // degree-0 unit when product present

  int dim(int n) const;                 // 0 outside 0..D
  const Matrix& f(int n, int i) const;  // coface on E^n
  const Matrix& s(int n, int i) const;  // codegeneracy E^{n+1} -> E^n
  bool has_codegeneracies() const { return !codegens.empty(); }
  bool has_product() const { return !product.empty(); }

  // Verifies shapes, the coface commutation relations, the codegeneracy
  // relations (including the two identity compositions), and -- when a
  // product is stored -- associativity, the unit laws and the coface /
  // codegeneracy compatibility of the product (total degree of the product
  // checks capped at product_degree_cap to bound the cost on large
  // instances). Throws RelationViolation.
  void validate(int product_degree_cap = 4) const;
};

// The dual picture: faces lower the degree, degeneracies raise it.
struct SimplicialModule {
  QContext ctx;
  int D = 0;
  std::vector<int> dims;                    // size D+1
  std::vector<std::vector<Matrix>> faces;   // [n][i]: E'_{n+1} -> E'_n, 0 <= i <= n+1
  std::vector<std::vector<Matrix>> degens;  // [n][i]: E'_n -> E'_{n+1}, 0 <= i <= n

  int dim(int n) const;
  bool has_degeneracies() const { return !degens.empty(); }
  void validate() const;  // transposed relation set (checked through the dual)
};

// Transposition swaps the two pictures basis-by-basis.
CosimplicialModule dual(const SimplicialModule& E);
SimplicialModule dual(const CosimplicialModule& E);

// ---------------------------------------------------------------------------
// The differentials built from cofaces.
// ---------------------------------------------------------------------------

// Alternating coface sum at degree n (the square-zero differential).
Matrix alternating_sum_at(const CosimplicialModule& E, int n);
// delta_m at degree n: sum_{i=0}^{n-m+1} q^i f_i; zero for n < m-1.
Matrix delta_m_at(const CosimplicialModule& E, int m, int n);
// d_m at degree n: delta_{m+1} + q^{n-m+1} sum_{r=0}^{m} (-1)^r f_{n-m+r+1}
// for n >= m-1, and the alternating sum below that degree.
Matrix d_m_at(const CosimplicialModule& E, int m, int n);
// d_{p,m} at degree n (n >= p-1): the interpolating differential
// delta_{p+1} + [m]_q q^{n-p+1} sum_{i=0}^{p} (-1)^i f_{n-p+i+1}.
Matrix interpolation_at(const CosimplicialModule& E, int p, int m, int n);

// The alternating-sum complex as a square-zero graded complex (the ambient
// context with nilpotency order 2); degrees 0..D, open above. Its graded
// homology in index 1 is the ordinary cohomology H^n(E).
// Throws RelationViolation when the square of the differential is nonzero.
NComplex standard_differential(const CosimplicialModule& E);
Quotient ordinary_cohomology(const CosimplicialModule& E, int n);

// Whole graded families delta_m / d_m over the window (entry k = the map at
// degree k, k in 0..D-1). Require [N]_q = 0; the low-degree conventions
// (delta_m = 0 below degree m-1; d_m equal to the alternating sum up to
// degree m-1; d_0 = delta_0) are asserted on the fly.
std::vector<Matrix> delta_m(const CosimplicialModule& E, int m);
std::vector<Matrix> d_m(const CosimplicialModule& E, int m);

// The three power identities tying d_m to delta_{m+1}: for every degree
// n >= m and every 0 <= p <= max_p that fits the window,
//   (i)  d_m^{p+1}    = delta_{m+1}^p (delta_{m+1} + [p+1]_q q^{n-m+1} A)
//   (ii) delta_m^{p+1} = delta_{m+1}^p (delta_{m+1} + [p+1]_q q^{n-m+1} f_{n-m+1})
// with A the signed coface block of d_m, and on all degrees
//   (iii) d_{m+1} d_m = delta_{m+1}^2.
// No constraint on q is needed. Throws RelationViolation naming the failing
// identity and degree; returns true.
bool lemma8_check(const CosimplicialModule& E, int max_p);

// Under [N]_q = 0: the two step-down identities
//   (a) d_m^{N-1} = delta_{m+1}^{N-2} d_{m+1}   (degrees >= m)
//   (b) d_{m-1} delta_m^{N-2} = delta_{m+1}^{N-2} d_{m+1}   (m >= 1)
// plus nilpotency d_m^N = 0 and delta_m^N = 0 in-window, and the sorted
// expansion delta_m^p = [p]_q! sum_{i_1 > ... > i_p} q^{i_1+...+i_p - p(p-1)/2}
// f_{i_1}...f_{i_p} for p <= 3. Throws RelationViolation; returns true.
bool corollary34_check(const CosimplicialModule& E);

// The interpolating differential d_{p,m} as a graded complex on degrees
// max(p-1,0)..D (nilpotency checked by construction); the endpoint
// identities d_{p,1} = d_p and d_{p,N-1} = d_{p+1} are asserted when m is 1
// or N-1. Requires [N]_q = 0.
NComplex remark3_differential(const CosimplicialModule& E, int p, int m);

// The truncation E_p = (+)_{n >= p-1} E^n with differential d_p, as a graded
// complex on degrees max(p-1,0)..D (open above). Requires [N]_q = 0, p <= D.
NComplex truncate(const CosimplicialModule& E, int p);

// The comparison homomorphism Phi_{1,p} from the alternating-sum complex of
// E_p to the 2-periodic contraction C_{1,p-1}(E_p, d_p): identities at spots
// p-1 and p, then alternating products of (N-2)-fold delta powers
// delta_{p+1}^{N-2} ... delta_{s}^{N-2} (largest index applied first).
// Every square is checked; throws CommutativityFailure.
OrdinaryComplexMap theorem1_diagram(const CosimplicialModule& E, int p);
// Phi_{m,p}: the composite of Phi_{1,p} with the vertical map
// C_{1,p-1} -> C_{m,p-1} (identity on even spots, d_p^{m-1} on odd spots).
OrdinaryComplexMap phi_map(const CosimplicialModule& E, int m, int p);

// The interleaved comparison row: degrees 0,...,p-1,p then alternating
// N+p-1, N+p, 2N+p-1, ... with maps d, then d_p^{N-1} and d_p in turn.
OrdinaryComplex cbar_complex(const CosimplicialModule& E, int p);
// Column map between consecutive interleaved rows (identities and
// delta_{p+1}^{N-2} in turn); squares checked.
OrdinaryComplexMap psi_bar(const CosimplicialModule& E, int p);
// The shifted ladder (1 <= l <= N-2) from the zero-extended contraction
// C_{1,p+l}(E_{p+1}, d_{p+1}) to C_{1,p-1+l}(E_p, d_p).
OrdinaryComplexMap psi_bar_ell(const CosimplicialModule& E, int p, int l);

struct PsiBarMaps {
  OrdinaryComplexMap column;        // between interleaved rows p+1 and p
  OrdinaryComplexMap ladder;        // the shifted ladder for the given l
  bool isomorphisms_asserted = false;
};

// Builds both comparison maps. When codegeneracies are present (or the
// vanishing premise is explicitly assumed and re-verified) and the context
// satisfies the invertibility assumption, every induced map on determined
// homology spots is asserted to be an isomorphism; otherwise the maps are
// only constructed. Throws MismatchReport on a failed isomorphism.
PsiBarMaps psi_bar_maps(const CosimplicialModule& E, int p, int l,
                        bool assume_delta_vanishing = false);

// The explicit contraction of (E_{p+1}, delta_{p+1}): verifies
//   chi delta_{p+1} - q^{-1} delta_{p+1} chi = Id  with  chi = q^{p-n} s_{n-p}
// degreewise in-window, that every determined homology cell of the
// delta_{p+1}-complex vanishes, and the factorial trace identity
//   sum_k delta^{N-1-k} chi^{N-1} delta^k = [N-1]_{1/q}! Id
// on degrees where all composites stay in-window. Requires codegeneracies
// and the invertibility assumption; throws PremiseNotMet otherwise.
bool lemma9_contraction(const CosimplicialModule& E, int p);

// The vanishing premise alone: every determined homology cell of
// (E_{p+1}, delta_{p+1}) is zero. Requires [N]_q = 0.
bool delta_vanishing_check(const CosimplicialModule& E, int p);

// Kernel membership witness: for x in E^n (n >= p), d_p^m(x) = 0 holds iff
// some y in E^{n+m-N} satisfies (delta_{p+1} + [m]_q q^{n-p+1} A)(x - d_p^{N-m} y) = 0
// with A the signed coface block of the interpolating differential. Returns
// the witness y (found by a linear solve and re-verified) or nullopt exactly
// when d_p^m(x) != 0. Requires codegeneracies and invertibility.
std::optional<Vec> lemma10_witness(const CosimplicialModule& E, int p, int m, int n,
                                   const Vec& x);

// ---------------------------------------------------------------------------
// Homology dictionaries.
// ---------------------------------------------------------------------------

struct DictionaryReport {
  HomologyTable table;           // generalized homology over the window
  std::vector<long> ordinary;    // ordinary (co)homology dims by degree; -1 unknown
  std::vector<std::string> checked;
  bool ok = true;
};

// The full cochain dictionary for (E_p, d_p): every determined cell
// H^n_(m)(E_p, d_p) must equal H^{2r+p-1}(E) when n = Nr+p-1 (r >= 1),
// H^{2r+p}(E) when n = N(r+1)-m+p-1, ker(d : E^{p-1} -> E^p) when n = p-1,
// and zero otherwise; additionally every comparison map Phi_{m,p} must
// induce bijections on determined homology spots. Premise: invertibility
// assumption plus codegeneracies (or the re-verified vanishing premise).
// Throws MismatchReport listing every failed cell.
DictionaryReport theorem234_check(const CosimplicialModule& E, int p,
                                  bool assume_delta_vanishing = false);

// The chain-side dictionary for (E', d'_0) (variant 0) or (E', d'_1)
// (variant 1), checked against ordinary homology H_n(E'):
//   variant 0: H_(m),Nr-1 = H_{2r-1}, H_(m),Nr+m-1 = H_{2r}, zero otherwise;
//   variant 1: H_(m),Nr   = H_{2r},   H_(m),Nr+m   = H_{2r+1}, zero otherwise.
// Throws MismatchReport.
DictionaryReport theorem4_simplicial_check(const SimplicialModule& E, int variant);

// The predicted identification of a single cochain cell H^n_(m)(E_p, d_p):
// the ordinary degree 2r+p-1 when n = Nr+p-1 (r >= 1), 2r+p when
// n+m = N(r+1)+p-1 (r >= 0), the kernel spot ker(d : E^{p-1} -> E^p) when
// n = p-1 and p >= 1, or the zero space otherwise.  The three families are
// mutually exclusive (an overlap would force m = 0 mod N).
struct DictionaryCell {
  enum Kind { zero, ordinary, kernel } kind = zero;
  int degree = 0;  // ordinary degree, or p-1 for the kernel spot
};
DictionaryCell dictionary_cell(int N, int p, int n, int m);

// Chain-side prediction for H_(m),n of (E', d'_p), p in {0, 1}: the ordinary
// homology degree, or nullopt when the cell is predicted zero.
//   p = 0: n = Nr-1 -> 2r-1 (r >= 1), n = Nr+m-1 -> 2r (r >= 0);
//   p = 1: n = Nr   -> 2r   (r >= 0), n = Nr+m   -> 2r+1 (r >= 0).
std::optional<int> chain_dictionary_degree(int N, int p, int n, int m);

// ---------------------------------------------------------------------------
// Chain-side operators (degree -1), realized by transposing the dual.
// ---------------------------------------------------------------------------

Matrix chain_boundary_at(const SimplicialModule& E, int n);        // E'_n -> E'_{n-1}
Matrix chain_d_m_at(const SimplicialModule& E, int m, int n);      // E'_n -> E'_{n-1}
Quotient ordinary_homology(const SimplicialModule& E, int n);
// Degree-reversed graded complex carrying d'_p: chain degree n is stored at
// window degree D-n (open below, exact above).
NComplex chain_ncomplex(const SimplicialModule& E, int p);
// H_(m),n of (E', d'_p) in the coordinates of E'_n.
Quotient chain_homology(const SimplicialModule& E, int p, int m, int n);

// ---------------------------------------------------------------------------
// Instance builders.
// ---------------------------------------------------------------------------

// An abstract simplicial complex: faces are the nonempty subsets of facets.
struct SimplicialComplexK {
  int vertices = 0;
  std::vector<std::vector<int>> facets;  // sorted, deduplicated
  // Validates ranges and that every vertex lies in some facet.
  SimplicialComplexK(int vertices_, std::vector<std::vector<int>> facets_);
  bool is_face(const std::vector<int>& support) const;  // support sorted unique
};

// A finite-dimensional unital associative algebra by structure constants.
struct Algebra {
  Field field;
  int dim = 0;
  Vec unit;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = coordinates of e_i e_j

  Vec product(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;   // y -> x y
  Matrix right_mult(const Vec& x) const;  // y -> y x
  void validate() const;  // associativity on basis triples + unit laws
};

Algebra ground_algebra(const Field& f);          // k itself
Algebra dual_numbers_algebra(const Field& f);    // k[e]/(e^2)
Algebra product_field_algebra(const Field& f);   // k x k
Algebra matrix2_algebra(const Field& f);         // 2x2 matrices over k

// A two-sided module over an Algebra via commuting action matrices.
struct Bimodule {
  int dim = 0;
  std::vector<Matrix> left;   // left[i] = action of basis element e_i
  std::vector<Matrix> right;  // right[i] = right action of e_i
};
Bimodule regular_bimodule(const Algebra& A);

// Largest permitted dimension for a generated degree; read from the
// NCOMPLEX_MAX_DIM environment variable, default 2048.
long dimension_guard();

// All dims 1, all cofaces/codegeneracies the identity.
CosimplicialModule constant_cosimplicial(const QContext& ctx, int D);

// Degree-n basis: weakly increasing (n+1)-tuples of vertices supported on a
// face (degenerate simplices included); faces delete, degeneracies repeat.
// Ordinary homology equals the classical simplicial homology of K.
SimplicialModule build_simplicial_set_module(const SimplicialComplexK& K, const QContext& ctx,
                                             int D);

// Functions on ordered n-simplices (arbitrary tuples supported on a face):
// cofaces omit an argument, codegeneracies repeat one, and the product
// concatenates along a shared last/first vertex. Carries the algebra
// structure.
CosimplicialModule build_simplicial_forms(const SimplicialComplexK& K, const QContext& ctx,
                                          int D);

// Multilinear cochains C^n(A, M) with values in a bimodule: the outer
// cofaces act by the module structure, the inner ones multiply adjacent
// arguments, codegeneracies insert the unit. Guarded by dimension_guard().
CosimplicialModule build_hochschild(const Algebra& A, const Bimodule& M, const QContext& ctx,
                                    int D);
// M = A with the cup product (algebra structure present).
CosimplicialModule build_hochschild(const Algebra& A, const QContext& ctx, int D);

// Tensor powers A^{(x)(n+1)}: cofaces insert the unit into a slot,
// codegeneracies multiply adjacent slots, product merges the facing slots.
// Guarded by dimension_guard().
CosimplicialModule build_tensor_cosimplicial(const Algebra& A, const QContext& ctx, int D);

}  // namespace ncx
