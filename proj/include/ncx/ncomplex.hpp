#pragma once

#include <string>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/rings.hpp"

namespace ncx {

// ---------------------------------------------------------------------------
// Ungraded side: a module with an endomorphism d satisfying d^N = 0.
// ---------------------------------------------------------------------------

struct NDiffModule {
  QContext ctx;
  int dim;
  Matrix d;
  // Checks squareness and d^N = 0; throws NilpotencyViolation otherwise.
  NDiffModule(QContext ctx_, Matrix d_);
};

// Generalized homology H_(n) = ker(d^n) / im(d^{N-n}) with chosen
// representatives (a Quotient in the coordinates of the module).
Quotient homology_ungraded(const NDiffModule& E, int n);

// A degree-preserving map of modules intertwining the differentials.
struct NModuleMap {
  NDiffModule source, target;
  Matrix phi;
  // Throws NotAHomomorphism unless phi d = d' phi (and shapes agree).
  NModuleMap(NDiffModule src, NDiffModule dst, Matrix phi_);
};

// Matrix of phi_* : H_(n)(source) -> H_(n)(target) on the canonical homology
// bases. Well-definedness is re-verified with independently shifted
// representatives.
Matrix induced_map(const NModuleMap& f, int n);

// The two structure maps on generalized homology:
//   map_i(E, n, a): H_(n) -> H_(n+a), induced by the identity (1 <= n, n+a <= N-1)
//   map_d(E, n, b): H_(n) -> H_(n-b), induced by d^b (1 <= n-b, n <= N-1)
Matrix map_i(const NDiffModule& E, int n, int a);
Matrix map_d(const NDiffModule& E, int n, int b);

// Premise: phi_* is an isomorphism on H_(1) and H_(N-1) (PremiseNotMet
// otherwise). Returns whether phi_* is an isomorphism on every H_(n).
bool five_lemma_check(const NModuleMap& f);

// Builds the 2-graded module E + E with delta(x, y) = (d^{N-1} y, d x),
// checks delta^2 = 0, and matches the two ordinary homology dimensions
// against H_(1)(E) and H_(N-1)(E); returns true.
bool remark1_check(const NDiffModule& E);

// ---------------------------------------------------------------------------
// Hexagons of the ungraded theory.
// ---------------------------------------------------------------------------

struct HexagonNode {
  std::string label;
  int space_dim = 0;
  int ker_dim = 0;  // kernel of the outgoing arrow
  int im_dim = 0;   // image of the incoming arrow
  bool exact = false;
};

struct HexagonReport {
  std::vector<HexagonNode> nodes;
  bool exact = true;
};

// Exactness of the six-term cycle
//   H_(m) -> H_(l+m) -> H_(l) -> H_(N-m) -> H_(N-l-m) -> H_(N-l) -> H_(m)
// with arrows [i]^l, [d]^m, [i]^{N-l-m}, [d]^l, [i]^m, [d]^{N-l-m}.
// Throws ExactnessFailure at the first failing node.
HexagonReport hexagon_check(const NDiffModule& E, int l, int m);

// ---------------------------------------------------------------------------
// Short exact sequences and connecting maps (ungraded).
// ---------------------------------------------------------------------------

struct SESUngraded {
  NDiffModule E, F, G;
  Matrix alpha;  // E -> F
  Matrix beta;   // F -> G
};

// Validates: alpha and beta are maps of N-differential modules, alpha is
// injective, beta is surjective, ker(beta) = im(alpha). Throws
// ExactnessViolation otherwise.
SESUngraded make_ses(NDiffModule E, NDiffModule F, NDiffModule G, Matrix alpha, Matrix beta);

// Connecting homomorphism H_(n)(G) -> H_(N-n)(E): lift through beta, apply
// d^n, pull back through alpha. Independence from both lift and
// representative choice is re-verified.
Matrix connecting_map(const SESUngraded& s, int n);

// Exactness of H_(n)(E) -> H_(n)(F) -> H_(n)(G) -> H_(N-n)(E) -> H_(N-n)(F)
// -> H_(N-n)(G) -> H_(n)(E). Throws ExactnessFailure at the first bad node.
HexagonReport hexagon_ses_check(const SESUngraded& s, int n);

// ---------------------------------------------------------------------------
// Homotopy, contraction, vanishing, multiplicities (ungraded).
// ---------------------------------------------------------------------------

// If some H_(k)(E) vanishes, all H_(n)(E) must vanish; returns whether the
// observed dimensions are consistent with that propagation rule.
bool vanishing_propagation_check(const NDiffModule& E);

// Premise (throws PremiseNotMet when violated):
//   lambda, mu are module maps E -> F and
//   lambda - mu = sum_{k=0}^{N-1} d_F^{N-1-k} h_k d_E^k.
// Then asserts lambda_* = mu_* on every H_(n); returns true.
bool homotopy_check(const NDiffModule& E, const NDiffModule& F, const Matrix& lambda,
                    const Matrix& mu, const std::vector<Matrix>& h);

// Premise: ctx satisfies the invertibility assumption on [1]..[N-1] with
// [N] = 0 (AssumptionViolation otherwise) and h d - q d h = Id
// (PremiseNotMet otherwise). Asserts H_(n)(E) = 0 for all n and the trace
// identity sum_{k=0}^{N-1} d^{N-1-k} h^{N-1} d^k = [N-1]_q! Id; returns true.
bool contraction_check(const NDiffModule& E, const Matrix& h);

// The size-N contraction pair: D has ones on the superdiagonal and H has
// subdiagonal entries [N-1]_q, [N-2]_q, ..., [1]_q, so that HD - qDH = Id
// whenever [N]_q = 0.
Matrix contraction_pair_d(const QContext& ctx);
Matrix contraction_pair_h(const QContext& ctx);

// Jordan-type multiplicities: m[n-1] = rank(d^{n-1}) - 2 rank(d^n) +
// rank(d^{n+1}) for n = 1..N, with rank(d^0) = dim. Asserts sum n*m_n = dim.
std::vector<long> multiplicities(const NDiffModule& E);

// Checks the closed dimension formula
//   dim H_(k) = dim H_(N-k) = sum_{r=1}^{k-1} r (m_r + m_{N-r}) + k sum_{s=k}^{N-k} m_s
// against directly computed homology, plus dim H_(n) = dim H_(N-n) for all n.
bool proposition2_check(const NDiffModule& E);

// ---------------------------------------------------------------------------
// Graded side: cochain N-complexes on a finite degree window.
// ---------------------------------------------------------------------------

class NComplex {
 public:
  // dims[k] is the dimension in degree lo+k; d[k] : E^{lo+k} -> E^{lo+k+1}.
  // below_exact / above_exact declare that degrees outside the window are
  // genuinely zero (not merely truncated away).
  // Checks every N-fold composite of consecutive differentials is zero;
  // throws NilpotencyViolation otherwise.
  NComplex(QContext ctx, int lo, std::vector<int> dims, std::vector<Matrix> d,
           bool below_exact = true, bool above_exact = true);

  const QContext& ctx() const { return ctx_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool below_exact() const { return below_exact_; }
  bool above_exact() const { return above_exact_; }

  // Dimension in degree n (0 outside the window).
  int dim(int n) const;
  // Differential E^n -> E^{n+1}; a zero matrix of the correct shape off-window.
  Matrix d(int n) const;
  // Composite d^k : E^n -> E^{n+k} (k >= 0).
  Matrix d_pow(int n, int k) const;

  // Whether H^n_(m) is fully determined by the stored window: both the
  // kernel chain up to degree n+m and the image chain from degree n+m-N must
  // be covered by the window, an exactness flag, or an intermediate degree
  // that is known to be zero.
  bool cell_valid(int n, int m) const;
  // Whether the dimension in degree n is known (window or exactness flag).
  bool degree_known(int n) const;

 private:
  bool known_zero(int n) const;
  QContext ctx_;
  int lo_;
  std::vector<int> dims_;
  std::vector<Matrix> d_;
  bool below_exact_, above_exact_;
};

// H^n_(m) = ker(d^m : E^n -> E^{n+m}) / d^{N-m}(E^{n+m-N}), in the
// coordinates of E^n. Throws DegreeOutOfWindow when the cell is not valid.
Quotient homology_graded(const NComplex& E, int m, int n);

// Degree-0 map of complexes over one window, intertwining differentials.
struct NComplexMap {
  NComplex source, target;
  std::vector<Matrix> phi;  // phi[k] in degree lo+k
  // Requires equal windows/context; throws NotAHomomorphism when a square
  // fails to commute.
  NComplexMap(NComplex src, NComplex dst, std::vector<Matrix> phi_);
  Matrix at(int n) const;
};

// phi_* : H^n_(m)(source) -> H^n_(m)(target).
Matrix induced_map_graded(const NComplexMap& f, int m, int n);

// ---------------------------------------------------------------------------
// Graded short exact sequences.
// ---------------------------------------------------------------------------

struct SESGraded {
  NComplex E, F, G;
  std::vector<Matrix> alpha, beta;  // per degree lo..hi
  Matrix alpha_at(int n) const;
  Matrix beta_at(int n) const;
};

SESGraded make_ses_graded(NComplex E, NComplex F, NComplex G, std::vector<Matrix> alpha,
                          std::vector<Matrix> beta);

// Connecting homomorphism of degree n: H^deg_(n)(G) -> H^{deg+n}_(N-n)(E).
Matrix connecting_map_graded(const SESGraded& s, int n, int deg);

// Graded long sequence through (E, F, G) homology in degrees deg = p mod N:
// ... -> H^{Nr+p}_(n)E -> H^{Nr+p}_(n)F -> H^{Nr+p}_(n)G -> H^{Nr+p+n}_{(N-n)}E -> ...
// Exactness is asserted at every node whose three neighboring cells are
// valid. Throws ExactnessFailure on a violation; returns the node reports.
HexagonReport hexagon_ses_check_graded(const SESGraded& s, int n, int p);

// ---------------------------------------------------------------------------
// Ordinary (2-nilpotent) complexes extracted from an N-complex.
// ---------------------------------------------------------------------------

struct OrdinaryComplex {
  Field field;
  int lo = 0;                      // first spot index
  std::vector<int> dims;           // per spot
  std::vector<Matrix> d;           // d[k] : spot lo+k -> lo+k+1
  std::vector<int> degree_label;   // underlying degree of each spot (bookkeeping)
  std::vector<bool> cell_ok;       // whether homology at each spot is determined

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  int dim(int s) const;
  Matrix dmap(int s) const;        // zero matrix of correct shape off-window
  bool valid(int s) const;
  // ker(d_s)/im(d_{s-1}); DegreeOutOfWindow when not valid.
  Quotient homology(int s) const;
  // d∘d = 0 verified; throws NilpotencyViolation otherwise.
  void check() const;
};

// A per-spot map of ordinary complexes, defined on the overlap of the two
// spot windows; every available square must commute.
struct OrdinaryComplexMap {
  OrdinaryComplex source, target;
  int mlo = 0;              // first spot covered
  std::vector<Matrix> phi;  // phi[k] acts at spot mlo+k
  OrdinaryComplexMap(OrdinaryComplex src, OrdinaryComplex dst, int mlo_,
                     std::vector<Matrix> phi_);
  int mhi() const { return mlo + static_cast<int>(phi.size()) - 1; }
  Matrix at(int s) const;
};

Matrix induced_map_ordinary(const OrdinaryComplexMap& f, int s);

// The 2-periodic contraction of an N-complex: spots alternate degrees
// N r + p and N r + p + m with differentials d^m and d^{N-m}. Spot index
// 2r+p carries degree Nr+p. Structural identities (period N in p, and the
// (m,p) -> (N-m, p+m) one-spot shift) are asserted on construction.
OrdinaryComplex extract_contracted_complex(const NComplex& E, int m, int p);

// Vertical map C_{m,p} -> C_{l+m,p}: identity on even spots, d^l on odd
// spots. Commutation is checked; the composite law (one step at a time
// equals the l-step map) is asserted.
OrdinaryComplexMap delta_map(const NComplex& E, int l, int m, int p);

struct Lemma7Result {
  bool a;  // vanishing of the two interleaved homology families
  bool b;  // the [i]^l and [d]^l maps are isomorphisms
  bool c;  // the vertical map induces isomorphisms on ordinary homology
};

// Evaluates the three conditions on the stored window and asserts their
// equivalence; throws DegreeOutOfWindow when no cell is decidable.
Lemma7Result lemma7_check(const NComplex& E, int l, int m, int p);

struct Corollary2Result {
  bool i;    // concentration: H^n_(m) = 0 unless n = p or n+m = p (mod N)
  bool ii;   // all one-step vertical maps induce isomorphisms
  bool iii;  // vanishing of the (1) and (N-1) families off the special degrees
};

Corollary2Result corollary2_check(const NComplex& E, int p);

// ---------------------------------------------------------------------------
// The differentials [i] + [d] on total generalized homology.
// ---------------------------------------------------------------------------

struct KapranovData {
  std::vector<Quotient> H;  // H_(1), ..., H_(N-1)
  Matrix i_total;           // block shift up by one homology index, 0 on top
  Matrix d_total;           // block shift down by one, 0 at the bottom
  int total_dim = 0;
};

KapranovData kapranov_data(const NDiffModule& E);

// Asserts [i]^{N-1} = 0, [d]^{N-1} = 0, ([i]+[d])^{N-1} = 0, and for N = 3
// that ker([i]+[d]) = im([i]+[d]); returns true.
bool kapranov_check(const NDiffModule& E);

// ---------------------------------------------------------------------------
// Tensor product of N-complexes.
// ---------------------------------------------------------------------------

// Graded tensor product with d(x (x) y) = d1 x (x) y + q^{deg x} x (x) d2 y.
// Requires the invertibility assumption on the context
// (AssumptionViolation). The N-fold power vanishing and the q-binomial
// expansion of d^n for n <= N are asserted.
NComplex tensor_ncomplex(const NComplex& E1, const NComplex& E2);

// Basis bookkeeping for the tensor product: the block of degree-a1 sources
// with degree a-a1 partners, listed by ascending a1, each block in
// row-major (i1 * dim2 + i2) order.
std::vector<std::pair<int, int>> tensor_blocks(const NComplex& E1, const NComplex& E2, int a);

// ---------------------------------------------------------------------------
// Homology tables.
// ---------------------------------------------------------------------------

struct HomologyTable {
  struct Cell {
    int n;        // degree (0 for ungraded tables)
    int m;        // homology index 1..N-1
    int dim;      // -1 when not determined by the window
    bool valid;
  };
  bool graded = false;
  int N = 0;
  std::vector<Cell> cells;
};

HomologyTable homology_table(const NDiffModule& E);
HomologyTable homology_table(const NComplex& E);

}  // namespace ncx
