// Batch front end: builds instances (from presets, simplicial complex files,
// algebra files or stored complexes), computes generalized homology tables,
// runs the named verification suites, and emits side-by-side comparisons
// against ordinary (co)homology.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 input
// error, 3 assumption violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncx/errors.hpp"
#include "ncx/io.hpp"
#include "ncx/linalg.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/qdga.hpp"
#include "ncx/simplicial.hpp"
#include "ncx/verify.hpp"

namespace {

using namespace ncx;

struct Options {
  std::string field = "zmod:7";
  std::string q = "2";
  int N = 3;
  int D = 0;  // 0 = default window N + 2
  std::string builder;
  std::string preset = "dual_numbers";
  std::string file;
  std::string variant = "d0";
  int p = 0;  // truncation degree for cochain instances
  std::string format = "text";
  std::string out;
  std::string suite = "core";
  int trials = 50;
  unsigned long long seed = 0;
};

void add_context_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.field, "ground field, zmod:<p> or cyclotomic:<n>");
  cmd->add_option("--q", o.q, "deformation scalar: an integer, a/b, or zeta");
  cmd->add_option("--N", o.N, "nilpotency order of the differential (>= 2)");
  cmd->add_option("--D", o.D, "degree window (defaults to N + 2, must be >= N)");
  cmd->add_option("--format", o.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

void add_instance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--builder", o.builder,
                  "instance kind: simplicial-chains, simplicial-forms, hochschild, "
                  "tensor, constant, ncomplex, zero");
  cmd->add_option("--preset", o.preset, "algebra preset: dual_numbers, k_x_k, matrix2");
  cmd->add_option("--file", o.file, "instance description file (JSON, or facet lines)");
  cmd->add_option("--variant", o.variant, "chain differential: d0 or d1")
      ->check(CLI::IsMember({"d0", "d1"}));
  cmd->add_option("--p", o.p, "truncation degree for cochain instances (default 0)");
}

QContext context_of(const Options& o) {
  Field f = field_from_spec(o.field);
  return make_context(f, scalar_from_spec(f, o.q), o.N);
}

int window_of(const Options& o, const QContext& ctx) {
  int D = o.D > 0 ? o.D : ctx.N + 2;
  if (D < ctx.N) throw Error("degree window D must be at least N");
  return D;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw Error("cannot write file: " + o.out);
  out << text;
}

SimplicialComplexK load_complex(const std::string& path) {
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
    return simplicial_from_json(Json::parse(text));
  return simplicial_from_text(text);
}

Algebra load_algebra(const Options& o, const Field& f) {
  if (!o.file.empty()) return algebra_from_json(f, json_from_file(o.file));
  return preset_algebra(o.preset, f);
}

// --- table assembly ---------------------------------------------------------

struct Assembled {
  HomologyTable table;
  std::vector<TableNote> notes;
  // Ordinary (co)homology dims by degree for the comparison view; -1 unknown.
  std::vector<long> ordinary;
  // Kernel-spot dimension for truncated cochain instances (p >= 1), else -1.
  long kernel_dim = -1;
  int p = 0;
  bool chain_side = false;
};

std::string ordinary_name(const Assembled& a, int degree) {
  return (a.chain_side ? "H_" : "H^") + std::to_string(degree);
}

void annotate(Assembled& a, int N) {
  for (const auto& cell : a.table.cells) {
    if (!cell.valid || cell.dim == 0) continue;
    std::string note;
    if (a.chain_side) {
      std::optional<int> od = chain_dictionary_degree(N, a.p, cell.n, cell.m);
      if (od) {
        note = "dictionary: " + ordinary_name(a, *od);
        if (*od < static_cast<int>(a.ordinary.size()) && a.ordinary[*od] >= 0)
          note += " (dim " + std::to_string(a.ordinary[*od]) + ")";
      } else {
        note = "unexpected: dictionary predicts zero";
      }
    } else {
      DictionaryCell pred = dictionary_cell(N, a.p, cell.n, cell.m);
      if (pred.kind == DictionaryCell::ordinary) {
        note = "dictionary: " + ordinary_name(a, pred.degree);
        if (pred.degree < static_cast<int>(a.ordinary.size()) && a.ordinary[pred.degree] >= 0)
          note += " (dim " + std::to_string(a.ordinary[pred.degree]) + ")";
      } else if (pred.kind == DictionaryCell::kernel) {
        note = "dictionary: kernel of the first differential";
        if (a.kernel_dim >= 0) note += " (dim " + std::to_string(a.kernel_dim) + ")";
      } else {
        note = "unexpected: dictionary predicts zero";
      }
    }
    a.notes.push_back({cell.n, cell.m, note});
  }
}

Assembled assemble_cosimplicial(const CosimplicialModule& E, int p) {
  if (p < 0 || p > E.D) throw Error("truncation degree out of range");
  Assembled a;
  a.p = p;
  a.table = homology_table(truncate(E, p));
  a.ordinary.assign(static_cast<size_t>(E.D), -1);
  for (int n = 0; n <= E.D - 1; ++n) a.ordinary[static_cast<size_t>(n)] = ordinary_cohomology(E, n).dim();
  if (p >= 1) a.kernel_dim = kernel(alternating_sum_at(E, p - 1)).dim();
  annotate(a, E.ctx.N);
  return a;
}

Assembled assemble_chains(const SimplicialModule& E, int variant) {
  Assembled a;
  a.chain_side = true;
  a.p = variant;
  NComplex F = chain_ncomplex(E, variant);
  a.table.graded = true;
  a.table.N = E.ctx.N;
  for (int n = 0; n <= E.D; ++n)
    for (int m = 1; m <= E.ctx.N - 1; ++m) {
      bool valid = F.cell_valid(E.D - n, m);
      int dim = valid ? homology_graded(F, m, E.D - n).dim() : -1;
      a.table.cells.push_back({n, m, dim, valid});
    }
  a.ordinary.assign(static_cast<size_t>(E.D), -1);
  for (int n = 0; n <= E.D - 1; ++n) a.ordinary[static_cast<size_t>(n)] = ordinary_homology(E, n).dim();
  annotate(a, E.ctx.N);
  return a;
}

Assembled build_instance(const Options& o) {
  if (o.builder.empty()) throw Error("choose an instance with --builder");
  if (o.builder == "zero") {
    Assembled a;
    a.table.graded = true;
    a.table.N = o.N;
    return a;
  }
  QContext ctx = context_of(o);
  int D = window_of(o, ctx);
  if (o.builder == "ncomplex") {
    if (o.file.empty()) throw Error("builder ncomplex needs --file");
    Assembled a;
    a.table = homology_table(ncomplex_from_json(json_from_file(o.file)));
    return a;
  }
  if (o.builder == "simplicial-chains") {
    if (o.file.empty()) throw Error("builder simplicial-chains needs --file");
    SimplicialModule E = build_simplicial_set_module(load_complex(o.file), ctx, D);
    return assemble_chains(E, o.variant == "d1" ? 1 : 0);
  }
  if (o.builder == "simplicial-forms") {
    if (o.file.empty()) throw Error("builder simplicial-forms needs --file");
    return assemble_cosimplicial(build_simplicial_forms(load_complex(o.file), ctx, D), o.p);
  }
  if (o.builder == "hochschild")
    return assemble_cosimplicial(build_hochschild(load_algebra(o, ctx.field), ctx, D), o.p);
  if (o.builder == "tensor")
    return assemble_cosimplicial(build_tensor_cosimplicial(load_algebra(o, ctx.field), ctx, D),
                                 o.p);
  if (o.builder == "constant") return assemble_cosimplicial(constant_cosimplicial(ctx, D), o.p);
  throw Error("unknown builder: " + o.builder);
}

// --- commands ---------------------------------------------------------------

int cmd_homology(const Options& o) {
  Assembled a = build_instance(o);
  if (o.format == "json")
    emit(o, table_to_json(a.table, a.notes).dump(2) + "\n");
  else if (o.format == "csv")
    emit(o, table_to_csv(a.table, a.notes));
  else
    emit(o, table_to_text(a.table, a.notes));
  return 0;
}

int cmd_table(const Options& o) {
  Assembled a = build_instance(o);
  std::ostringstream out;
  out << "n,m,generalized_dim,dictionary,ordinary_dim,agree\n";
  for (const auto& cell : a.table.cells) {
    if (!cell.valid) continue;
    std::string name;
    long odim = 0;
    bool known = true;
    if (a.chain_side) {
      std::optional<int> od = chain_dictionary_degree(a.table.N, a.p, cell.n, cell.m);
      if (od) {
        name = ordinary_name(a, *od);
        if (*od < static_cast<int>(a.ordinary.size()) && a.ordinary[*od] >= 0)
          odim = a.ordinary[*od];
        else
          known = false;
      }
    } else {
      DictionaryCell pred = dictionary_cell(a.table.N, a.p, cell.n, cell.m);
      if (pred.kind == DictionaryCell::ordinary) {
        name = ordinary_name(a, pred.degree);
        if (pred.degree < static_cast<int>(a.ordinary.size()) && a.ordinary[pred.degree] >= 0)
          odim = a.ordinary[pred.degree];
        else
          known = false;
      } else if (pred.kind == DictionaryCell::kernel) {
        name = "ker(d)";
        if (a.kernel_dim >= 0)
          odim = a.kernel_dim;
        else
          known = false;
      }
    }
    if (name.empty()) name = "0";
    out << cell.n << ',' << cell.m << ',' << cell.dim << ',' << name << ',';
    if (known)
      out << odim << ',' << (cell.dim == odim ? 1 : 0) << '\n';
    else
      out << ",\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<VerifyResult> results;
  if (!o.file.empty()) {
    results.push_back(verify_instance_json(o.file));
  } else {
    QContext ctx = context_of(o);
    VerifyOptions vo{ctx, window_of(o, ctx), o.trials, o.seed, o.preset};
    results = run_suite(o.suite, vo);
  }
  bool all_pass = true;
  std::ostringstream out;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"item", r.item}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    out << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "item,pass,detail\n";
    for (const auto& r : results) {
      std::string detail = r.detail;
      for (char& c : detail)
        if (c == ',' || c == '\n') c = ';';
      out << r.item << ',' << (r.pass ? 1 : 0) << ',' << detail << '\n';
      all_pass = all_pass && r.pass;
    }
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << ' ' << r.item << " — " << r.detail << '\n';
      all_pass = all_pass && r.pass;
    }
  }
  emit(o, out.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homology of modules with a nilpotent differential (d^N = 0)"};
  app.require_subcommand(1);
  Options o;

  CLI::App* homology = app.add_subcommand("homology", "compute a generalized homology table");
  add_context_flags(homology, o);
  add_instance_flags(homology, o);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  add_context_flags(verify, o);
  verify->add_option("--suite", o.suite, "core, simplicial, qdga or all")
      ->check(CLI::IsMember({"core", "simplicial", "qdga", "all"}));
  verify->add_option("--preset", o.preset, "algebra preset: dual_numbers, k_x_k, matrix2");
  verify->add_option("--file", o.file, "validate a stored graded complex instead");
  verify->add_option("--trials", o.trials, "randomized trials per item (default 50)");
  verify->add_option("--seed", o.seed, "random seed (default 0)");

  CLI::App* table = app.add_subcommand("table", "ordinary vs generalized comparison (CSV)");
  add_context_flags(table, o);
  add_instance_flags(table, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (homology->parsed()) return cmd_homology(o);
    if (table->parsed()) return cmd_table(o);
    return cmd_verify(o);
  } catch (const AssumptionViolation& e) {
    std::cerr << "assumption violation: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
