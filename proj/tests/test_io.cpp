#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncx/errors.hpp"
#include "ncx/generators.hpp"
#include "ncx/io.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/simplicial.hpp"

using namespace ncx;

TEST_CASE("scalar literals round-trip in both field kinds") {
  Field f7 = Field::prime(7);
  for (long v = 0; v < 7; ++v) {
    Scalar x = f7.from_int(v);
    CHECK(scalar_from_json(f7, scalar_to_json(x)) == x);
  }
  CHECK(scalar_from_json(f7, Json(12)) == f7.from_int(5));

  Field c3 = Field::cyclotomic(3);
  Scalar z = c3.zeta();
  Scalar mixed = z * c3.from_rational(Rational("2/3")) + c3.one();
  Json j = scalar_to_json(mixed);
  CHECK(j.is_array());
  CHECK(scalar_from_json(c3, j) == mixed);
  CHECK(scalar_from_json(c3, Json::parse("[\"1\", \"2/3\"]")) == mixed);
  CHECK(scalar_from_json(c3, Json(-1)) == -c3.one());

  CHECK_THROWS_AS(scalar_from_json(f7, Json::parse("[1, 2]")), Error);
  CHECK_THROWS_AS(scalar_from_json(f7, Json::parse("{\"v\": 1}")), Error);
  CHECK_THROWS_AS(scalar_from_json(c3, Json("not-a-number")), Error);
}

TEST_CASE("field and scalar command-line specs") {
  Field f = field_from_spec("zmod:11");
  CHECK(f.is_prime_field());
  CHECK(f.modulus() == 11);
  CHECK(scalar_from_spec(f, "3") == f.from_int(3));
  CHECK(scalar_from_spec(f, "-1") == f.from_int(10));

  Field c = field_from_spec("cyclotomic:4");
  CHECK(c.order() == 4);
  CHECK(scalar_from_spec(c, "zeta") == c.zeta());
  CHECK(scalar_from_spec(c, "1/2") == c.from_rational(Rational("1/2")));

  CHECK_THROWS_AS(field_from_spec("gf:9"), Error);
  CHECK_THROWS_AS(field_from_spec("zmod"), Error);
  CHECK_THROWS_AS(field_from_spec("zmod:x"), Error);
  CHECK_THROWS_AS(scalar_from_spec(f, "zeta"), Error);  // prime fields have no zeta
  CHECK_THROWS_AS(scalar_from_spec(f, "abc"), Error);
}

TEST_CASE("context round-trip preserves the whole structure") {
  QContext c1 = make_context(Field::prime(7), Field::prime(7).from_int(2), 3);
  QContext r1 = context_from_json(context_to_json(c1));
  CHECK(r1.field == c1.field);
  CHECK(r1.q == c1.q);
  CHECK(r1.N == 3);

  Field c6 = Field::cyclotomic(6);
  QContext c2 = make_context(c6, c6.zeta(), 6);
  QContext r2 = context_from_json(context_to_json(c2));
  CHECK(r2.field == c2.field);
  CHECK(r2.q == c2.q);

  CHECK_THROWS_AS(context_from_json(Json::parse("{\"q\": 1, \"N\": 2}")), Error);
  CHECK_THROWS_AS(context_from_json(Json::parse("{\"field\": {\"ring\": 4}, \"q\": 1, \"N\": 2}")),
                  Error);
  // make_context enforces N >= 2.
  CHECK_THROWS_AS(context_from_json(Json::parse("{\"field\": {\"prime\": 5}, \"q\": 1, \"N\": 1}")),
                  Error);
}

TEST_CASE("matrices and graded complexes round-trip") {
  QContext ctx = make_context(Field::prime(7), Field::prime(7).from_int(2), 3);
  Rng rng(5);
  Matrix a = random_matrix(ctx.field, 3, 4, rng);
  CHECK(matrix_from_json(ctx.field, matrix_to_json(a), 3, 4) == a);
  CHECK_THROWS_AS(matrix_from_json(ctx.field, matrix_to_json(a), 4, 3), Error);

  NComplex E = random_ncomplex(ctx, -1, 6, 5, rng);
  Json j = ncomplex_to_json(E);
  NComplex R = ncomplex_from_json(j);
  CHECK(R.lo() == E.lo());
  CHECK(R.hi() == E.hi());
  for (int n = E.lo(); n <= E.hi(); ++n) {
    CHECK(R.dim(n) == E.dim(n));
    if (n < E.hi()) CHECK(R.d(n) == E.d(n));
  }

  // A parsed complex re-runs the nilpotency check.
  Json corrupt = Json::parse(
      "{\"ctx\": {\"field\": {\"prime\": 7}, \"q\": 2, \"N\": 3},"
      " \"lo\": 0, \"dims\": [1, 1, 1, 1], \"d\": [[[1]], [[1]], [[1]]]}");
  CHECK_THROWS_AS(ncomplex_from_json(corrupt), NilpotencyViolation);
  corrupt["d"] = Json::parse("[[[1]], [[1]], [[0]]]");
  CHECK(ncomplex_from_json(corrupt).dim(0) == 1);  // d^3 = 0 after the repair

  Json mis = j;
  mis["hi"] = E.hi() + 1;
  CHECK_THROWS_AS(ncomplex_from_json(mis), Error);
  Json short_d = j;
  short_d["d"].erase(0);
  CHECK_THROWS_AS(ncomplex_from_json(short_d), Error);
}

TEST_CASE("simplicial complex descriptions in JSON and text form") {
  SimplicialComplexK K1 = simplicial_from_json(
      Json::parse("{\"vertices\": 3, \"facets\": [[0, 1], [1, 2], [0, 2]]}"));
  CHECK(K1.vertices == 3);
  CHECK(K1.facets.size() == 3);

  SimplicialComplexK K2 = simplicial_from_text("# the circle\n0 1\n1 2\n\n0 2\n");
  CHECK(K2.vertices == 3);
  CHECK(K2.facets == K1.facets);

  CHECK_THROWS_AS(simplicial_from_text("# nothing here\n"), Error);
  // Vertex 2 appears in no facet: rejected by the complex itself.
  CHECK_THROWS_AS(simplicial_from_json(Json::parse("{\"vertices\": 3, \"facets\": [[0, 1]]}")),
                  Error);
}

TEST_CASE("algebra structure constants load and validate") {
  Field f = Field::prime(7);
  // k[e]/(e^2) with basis (1, e).
  Json j = Json::parse(
      "{\"dim\": 2, \"unit\": 0, \"mult\":"
      " [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}");
  Algebra A = algebra_from_json(f, j);
  Algebra B = dual_numbers_algebra(f);
  CHECK(A.dim == B.dim);
  CHECK(A.unit == B.unit);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      CHECK(A.mult[static_cast<size_t>(i)][static_cast<size_t>(k)] ==
            B.mult[static_cast<size_t>(i)][static_cast<size_t>(k)]);

  // Broken structure constants are rejected on load: here 1*e = 0 violates
  // the unit law.
  Json bad = j;
  bad["mult"][0][1] = Json::parse("[0, 0]");
  CHECK_THROWS_AS(algebra_from_json(f, bad), Error);
  CHECK_THROWS_AS(algebra_from_json(f, Json::parse("{\"dim\": 2, \"unit\": 5, \"mult\": []}")),
                  Error);

  CHECK(preset_algebra("dual_numbers", f).dim == 2);
  CHECK(preset_algebra("k_x_k", f).dim == 2);
  CHECK(preset_algebra("matrix2", f).dim == 4);
  CHECK_THROWS_AS(preset_algebra("octonions", f), Error);
}

TEST_CASE("table rendering is deterministic across formats") {
  HomologyTable t;
  t.graded = true;
  t.N = 3;
  t.cells.push_back({0, 1, 1, true});
  t.cells.push_back({0, 2, 0, true});
  t.cells.push_back({1, 1, 2, true});
  t.cells.push_back({2, 2, -1, false});
  std::vector<TableNote> notes = {{1, 1, "dictionary: H^1"}};

  Json j = table_to_json(t, notes);
  CHECK(j["N"] == 3);
  CHECK(j["cells"].size() == 4);
  CHECK(j["cells"][2]["note"] == "dictionary: H^1");
  CHECK(j["cells"][3]["valid"] == false);

  std::string csv = table_to_csv(t, notes);
  CHECK(csv.find("0,1,1,1,\n") != std::string::npos);
  CHECK(csv.find("1,1,2,1,dictionary: H^1\n") != std::string::npos);
  CHECK(csv.find("2,2,-1,0,\n") != std::string::npos);

  std::string text = table_to_text(t, notes);
  CHECK(text.find("dictionary: H^1") != std::string::npos);
  CHECK(text.find("not determined") != std::string::npos);

  // Byte-identical on repeated rendering.
  CHECK(table_to_json(t, notes).dump(2) == j.dump(2));
  CHECK(table_to_csv(t, notes) == csv);
  CHECK(table_to_text(t, notes) == text);

  HomologyTable empty;
  empty.graded = true;
  empty.N = 3;
  CHECK(table_to_text(empty).find("no nonzero cells") != std::string::npos);
}

TEST_CASE("dictionary cell predictions cover the three families exclusively") {
  // N = 3, p = 1: degree n = 0 is the kernel spot, n = 3, 6 the odd ordinary
  // degrees, and (n + m) = 3r + 0 the even ones.
  DictionaryCell k = dictionary_cell(3, 1, 0, 1);
  CHECK(k.kind == DictionaryCell::kernel);
  CHECK(k.degree == 0);
  DictionaryCell a = dictionary_cell(3, 1, 3, 1);
  CHECK(a.kind == DictionaryCell::ordinary);
  CHECK(a.degree == 2);  // n = Nr + p - 1 with r = 1 -> 2r + p - 1
  DictionaryCell b = dictionary_cell(3, 1, 2, 1);
  CHECK(b.kind == DictionaryCell::ordinary);
  CHECK(b.degree == 1);  // n + m = N + p - 1 -> 2*0 + p
  CHECK(dictionary_cell(3, 1, 1, 1).kind == DictionaryCell::zero);

  for (int p = 0; p <= 3; ++p)
    for (int n = std::max(0, p - 1); n <= 12; ++n)
      for (int m = 1; m <= 2; ++m) {
        DictionaryCell c = dictionary_cell(3, p, n, m);
        int families = 0;
        if (n - (p - 1) > 0 && (n - (p - 1)) % 3 == 0) ++families;
        if ((n + m - (p - 1)) % 3 == 0) ++families;
        if (n == p - 1) ++families;
        CHECK(families <= 1);
        CHECK((c.kind != DictionaryCell::zero) == (families == 1));
      }
  CHECK_THROWS_AS(dictionary_cell(3, 1, -1, 1), Error);
  CHECK_THROWS_AS(dictionary_cell(3, 0, 2, 3), Error);

  // Chain side, N = 3: variant 0 hits H_1 at n = 2 for every m and H_0 at
  // n = m - 1; variant 1 starts at H_0 in degree 0.
  CHECK(chain_dictionary_degree(3, 0, 2, 1) == 1);
  CHECK(chain_dictionary_degree(3, 0, 2, 2) == 1);
  CHECK(chain_dictionary_degree(3, 0, 0, 1) == 0);
  CHECK(chain_dictionary_degree(3, 0, 1, 2) == 0);
  CHECK(!chain_dictionary_degree(3, 0, 1, 1).has_value());
  CHECK(chain_dictionary_degree(3, 1, 0, 1) == 0);
  CHECK(chain_dictionary_degree(3, 1, 3, 2) == 2);
  CHECK(chain_dictionary_degree(3, 1, 1, 1) == 1);
  CHECK(!chain_dictionary_degree(3, 1, 2, 1).has_value());
  CHECK_THROWS_AS(chain_dictionary_degree(3, 2, 1, 1), Error);
}
