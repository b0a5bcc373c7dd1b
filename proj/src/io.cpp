#include "ncx/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "ncx/errors.hpp"

namespace ncx {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0)
      throw Error("malformed rational literal: " + j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw Error("rational literal must be an integer or an \"a/b\" string");
}

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return Json(r.get_num().get_si());
  return Json(r.get_str());
}

}  // namespace

// --- scalars and contexts ---------------------------------------------------

Json scalar_to_json(const Scalar& x) {
  if (x.field().is_prime_field()) return Json(x.residue());
  Json arr = Json::array();
  for (const Rational& c : x.coeffs()) arr.push_back(rational_to_json(c));
  return arr;
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long>());
  if (j.is_string()) return f.from_rational(rational_from_json(j));
  if (j.is_array()) {
    if (f.is_prime_field())
      throw Error("coefficient arrays are cyclotomic-only scalar literals");
    std::vector<Rational> c;
    for (const Json& e : j) c.push_back(rational_from_json(e));
    return f.from_coeffs(c);
  }
  throw Error("scalar literal must be an integer, string or coefficient array");
}

Json context_to_json(const QContext& ctx) {
  Json field;
  if (ctx.field.is_prime_field())
    field = Json{{"prime", ctx.field.modulus()}};
  else
    field = Json{{"cyclotomic", ctx.field.order()}};
  return Json{{"field", field}, {"q", scalar_to_json(ctx.q)}, {"N", ctx.N}};
}

QContext context_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("q") || !j.contains("N"))
    throw Error("context needs \"field\", \"q\" and \"N\"");
  const Json& fj = j.at("field");
  Field f = Field::prime(2);
  if (fj.is_object() && fj.contains("prime"))
    f = Field::prime(fj.at("prime").get<long>());
  else if (fj.is_object() && fj.contains("cyclotomic"))
    f = Field::cyclotomic(fj.at("cyclotomic").get<int>());
  else
    throw Error("field must be {\"prime\": p} or {\"cyclotomic\": n}");
  Scalar q = scalar_from_json(f, j.at("q"));
  return make_context(f, q, j.at("N").get<int>());
}

Field field_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("field spec must be zmod:<p> or cyclotomic:<n>, got " + spec);
  std::string kind = spec.substr(0, colon);
  long value = 0;
  try {
    value = std::stol(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("malformed field spec: " + spec);
  }
  if (kind == "zmod") return Field::prime(value);
  if (kind == "cyclotomic") return Field::cyclotomic(static_cast<int>(value));
  throw Error("unknown field kind: " + kind);
}

Scalar scalar_from_spec(const Field& f, const std::string& spec) {
  if (spec == "zeta") return f.zeta();
  try {
    size_t used = 0;
    long v = std::stol(spec, &used);
    if (used == spec.size()) return f.from_int(v);
  } catch (const std::exception&) {
  }
  Rational r;
  if (r.set_str(spec, 10) == 0) {
    r.canonicalize();
    return f.from_rational(r);
  }
  throw Error("malformed scalar literal: " + spec);
}

// --- matrices and complexes -------------------------------------------------

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, int rows, int cols) {
  if (!j.is_array()) throw Error("matrix literal must be an array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw Error("matrix has " + std::to_string(j.size()) + " rows, expected " +
                std::to_string(rows));
  Matrix a = Matrix::zero(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error("matrix row " + std::to_string(i) + " must have " +
                  std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      a.at(i, c) = scalar_from_json(f, row.at(static_cast<size_t>(c)));
  }
  return a;
}

Json ncomplex_to_json(const NComplex& E) {
  Json dims = Json::array();
  Json diffs = Json::array();
  for (int n = E.lo(); n <= E.hi(); ++n) dims.push_back(E.dim(n));
  for (int n = E.lo(); n < E.hi(); ++n) diffs.push_back(matrix_to_json(E.d(n)));
  return Json{{"ctx", context_to_json(E.ctx())},
              {"lo", E.lo()},
              {"hi", E.hi()},
              {"dims", dims},
              {"d", diffs},
              {"below_exact", E.below_exact()},
              {"above_exact", E.above_exact()}};
}

NComplex ncomplex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ctx") || !j.contains("lo") ||
      !j.contains("dims") || !j.contains("d"))
    throw Error("complex needs \"ctx\", \"lo\", \"dims\" and \"d\"");
  QContext ctx = context_from_json(j.at("ctx"));
  int lo = j.at("lo").get<int>();
  std::vector<int> dims;
  for (const Json& e : j.at("dims")) {
    int v = e.get<int>();
    if (v < 0) throw Error("negative dimension in degree window");
    dims.push_back(v);
  }
  if (dims.empty()) throw Error("empty degree window");
  if (j.contains("hi") && j.at("hi").get<int>() != lo + static_cast<int>(dims.size()) - 1)
    throw Error("\"hi\" disagrees with \"lo\" + number of degrees");
  const Json& dj = j.at("d");
  if (!dj.is_array() || dj.size() + 1 != dims.size())
    throw Error("need one differential per adjacent degree pair");
  std::vector<Matrix> d;
  for (size_t k = 0; k + 1 < dims.size(); ++k)
    d.push_back(matrix_from_json(ctx.field, dj.at(k), dims[k + 1], dims[k]));
  bool below = j.value("below_exact", true);
  bool above = j.value("above_exact", true);
  return NComplex(ctx, lo, dims, d, below, above);
}

// --- simplicial complexes and algebras --------------------------------------

SimplicialComplexK simplicial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw Error("simplicial complex needs \"vertices\" and \"facets\"");
  int vertices = j.at("vertices").get<int>();
  std::vector<std::vector<int>> facets;
  for (const Json& fj : j.at("facets")) {
    std::vector<int> facet;
    for (const Json& v : fj) facet.push_back(v.get<int>());
    facets.push_back(std::move(facet));
  }
  return SimplicialComplexK(vertices, facets);
}

SimplicialComplexK simplicial_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> facets;
  int max_vertex = -1;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::vector<int> facet;
    int v = 0;
    while (row >> v) {
      facet.push_back(v);
      max_vertex = std::max(max_vertex, v);
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw Error("no facets in simplicial complex description");
  return SimplicialComplexK(max_vertex + 1, facets);
}

Algebra algebra_from_json(const Field& f, const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("mult"))
    throw Error("algebra needs \"dim\", \"unit\" and \"mult\"");
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw Error("algebra dimension must be positive");
  int unit_index = j.at("unit").get<int>();
  if (unit_index < 0 || unit_index >= dim) throw Error("unit index out of range");
  Algebra A{f, dim, unit_vec(f, dim, unit_index), {}};
  const Json& mj = j.at("mult");
  if (!mj.is_array() || static_cast<int>(mj.size()) != A.dim)
    throw Error("\"mult\" must list one row of products per basis element");
  A.mult.resize(static_cast<size_t>(A.dim));
  for (int i = 0; i < A.dim; ++i) {
    const Json& row = mj.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != A.dim)
      throw Error("\"mult\" row " + std::to_string(i) + " must have dim entries");
    for (int k = 0; k < A.dim; ++k) {
      const Json& cj = row.at(static_cast<size_t>(k));
      if (!cj.is_array() || static_cast<int>(cj.size()) != A.dim)
        throw Error("product coordinates must have dim entries");
      Vec coords;
      for (const Json& e : cj) coords.push_back(scalar_from_json(f, e));
      A.mult[static_cast<size_t>(i)].push_back(std::move(coords));
    }
  }
  A.validate();
  return A;
}

Algebra preset_algebra(const std::string& name, const Field& f) {
  if (name == "dual_numbers") return dual_numbers_algebra(f);
  if (name == "k_x_k") return product_field_algebra(f);
  if (name == "matrix2") return matrix2_algebra(f);
  throw Error("unknown algebra preset: " + name +
              " (known: dual_numbers, k_x_k, matrix2)");
}

// --- homology tables --------------------------------------------------------

namespace {

std::string note_for(const std::vector<TableNote>& notes, int n, int m) {
  for (const TableNote& t : notes)
    if (t.n == n && t.m == m) return t.note;
  return "";
}

}  // namespace

Json table_to_json(const HomologyTable& t, const std::vector<TableNote>& notes) {
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json cell{{"n", c.n}, {"m", c.m}, {"dim", c.dim}, {"valid", c.valid}};
    std::string note = note_for(notes, c.n, c.m);
    if (!note.empty()) cell["note"] = note;
    cells.push_back(std::move(cell));
  }
  return Json{{"graded", t.graded}, {"N", t.N}, {"cells", cells}};
}

std::string table_to_csv(const HomologyTable& t, const std::vector<TableNote>& notes) {
  std::ostringstream out;
  out << "n,m,dim,valid,note\n";
  for (const auto& c : t.cells)
    out << c.n << ',' << c.m << ',' << c.dim << ',' << (c.valid ? 1 : 0) << ','
        << note_for(notes, c.n, c.m) << '\n';
  return out.str();
}

std::string table_to_text(const HomologyTable& t, const std::vector<TableNote>& notes) {
  std::ostringstream out;
  out << "generalized homology (N = " << t.N << ")\n";
  out << "   n   m   dim\n";
  bool any = false;
  for (const auto& c : t.cells) {
    if (!c.valid || c.dim == 0) continue;
    any = true;
    out << "  " << std::setw(2) << c.n << "  " << std::setw(2) << c.m << "  "
        << std::setw(4) << c.dim;
    std::string note = note_for(notes, c.n, c.m);
    if (!note.empty()) out << "   " << note;
    out << '\n';
  }
  if (!any) out << "  (no nonzero cells)\n";
  long undetermined = 0;
  for (const auto& c : t.cells)
    if (!c.valid) ++undetermined;
  if (undetermined > 0)
    out << "  (" << undetermined << " cells not determined by the window)\n";
  return out.str();
}

// --- files ------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json json_from_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace ncx
