#pragma once

// JSON (de)serialization for contexts, matrices, graded complexes, algebras
// and simplicial complexes, plus table rendering in json / csv / text form.
// All readers validate shapes and re-run the structural checks of the types
// they build; malformed data raises ncx::Error (or a json exception, which
// callers should treat the same way).

#include <string>
#include <vector>

#include <json.hpp>

#include "ncx/ncomplex.hpp"
#include "ncx/rings.hpp"
#include "ncx/simplicial.hpp"

namespace ncx {

using Json = nlohmann::json;

// --- scalars and contexts ---------------------------------------------------

// Prime field: integer residue.  Cyclotomic field: array of rationals, each
// an integer or an "a/b" string.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Field& f, const Json& j);

// {"field": {"prime": p} | {"cyclotomic": n}, "q": <scalar>, "N": n}
Json context_to_json(const QContext& ctx);
QContext context_from_json(const Json& j);

// Command-line literals: field "zmod:p" / "cyclotomic:n"; q an integer or
// "zeta" (primitive root, cyclotomic fields only).
Field field_from_spec(const std::string& spec);
Scalar scalar_from_spec(const Field& f, const std::string& spec);

// --- matrices and complexes -------------------------------------------------

// Row-major nested array of scalar literals; [] is the 0 x 0 matrix.
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Field& f, const Json& j, int rows, int cols);

// {"ctx": ..., "lo": int, "hi": int, "dims": [...], "d": [<matrix>...]}
// with one differential per adjacent degree pair.  Optional booleans
// "below_exact" / "above_exact" (default true) declare off-window exactness.
Json ncomplex_to_json(const NComplex& E);
NComplex ncomplex_from_json(const Json& j);

// --- simplicial complexes and algebras --------------------------------------

// {"vertices": n, "facets": [[...], ...]}; the text form lists one facet per
// line as whitespace-separated vertex indices (blank lines and '#' comments
// are skipped).
SimplicialComplexK simplicial_from_json(const Json& j);
SimplicialComplexK simplicial_from_text(const std::string& text);

// {"dim": n, "unit": index, "mult": [[[coeff, ...] ...] ...]} where
// mult[i][j] lists the coordinates of e_i e_j and basis element `index`
// is the unit.  Structure constants are validated on load.
Algebra algebra_from_json(const Field& f, const Json& j);

// Registry: "dual_numbers", "k_x_k", "matrix2".  Throws Error on unknown
// names.
Algebra preset_algebra(const std::string& name, const Field& f);

// --- homology tables --------------------------------------------------------

// Optional per-cell annotation (the dictionary prediction for nonzero cells).
struct TableNote {
  int n = 0, m = 0;
  std::string note;
};

Json table_to_json(const HomologyTable& t, const std::vector<TableNote>& notes = {});
std::string table_to_csv(const HomologyTable& t, const std::vector<TableNote>& notes = {});
std::string table_to_text(const HomologyTable& t, const std::vector<TableNote>& notes = {});

// --- files ------------------------------------------------------------------

std::string read_file(const std::string& path);
Json json_from_file(const std::string& path);

}  // namespace ncx
