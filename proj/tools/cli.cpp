#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidsep/braid.hpp"
#include "braidsep/json_io.hpp"
#include "braidsep/matrix.hpp"
#include "braidsep/representation.hpp"
#include "braidsep/separation.hpp"

namespace braidsep::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOpts {
  std::string format = "pretty";
  std::string catalog_path;
};

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<KnotEntry> resolve_catalog(const CommonOpts& opts) {
  if (!opts.catalog_path.empty()) return load_catalog(opts.catalog_path);
  return catalog();
}

// Options shared by every command that needs a representation.
struct RepOpts {
  int condition = 3;
  std::string branch = "minus";
  std::string a_text;
  std::string f_text;
  bool builtin = false;
  std::string import_path;

  void add_to(CLI::App* cmd, bool with_sources = true) {
    cmd->add_option("--condition", condition,
                    "parameter family condition (1..5)")
        ->check(CLI::Range(1, 5));
    cmd->add_option("--branch", branch, "sign branch of the condition")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--a", a_text, "family parameter a, e.g. 2-3i");
    cmd->add_option("--f", f_text,
                    "family parameter f (ignored by conditions 2, 4, 5)");
    if (with_sources) {
      cmd->add_flag("--builtin", builtin,
                    "use the built-in explicit representation");
      cmd->add_option("--in", import_path,
                      "import a representation from a JSON file");
    }
  }

  int branch_sign() const { return branch == "plus" ? 1 : -1; }

  RepParams params() const {
    if (a_text.empty())
      throw ParamError("--a is required to build a family representation");
    const Complex a = parse_complex(a_text);
    const bool f_free = condition == 1 || condition == 3;
    if (f_free && f_text.empty())
      throw ParamError("--f is required for condition " +
                       std::to_string(condition));
    const Complex f = f_text.empty() ? Complex(1.0) : parse_complex(f_text);
    return family_params(condition, branch_sign(), a, f);
  }

  Rep build() const {
    if (!import_path.empty()) {
      std::ifstream in(import_path);
      if (!in)
        throw Error("io", "cannot open representation file '" + import_path +
                              "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return rep_from_json(buffer.str());
    }
    if (builtin) return le_bruyn_rep();
    return family_rep(params());
  }
};

// Picks the braid word: --word wins; --knot resolves through the catalog,
// preferring the representative the bundled reference table was computed
// from (for 8_17 the catalog word and the reference word differ).
struct WordOpts {
  std::string word_text;
  std::string knot;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--word", word_text, "braid word, e.g. 's1^-1 s2^2'");
    cmd->add_option("--knot", knot, "catalog knot name, e.g. 8_17");
  }

  BraidWord resolve(const CommonOpts& common) const {
    if (!word_text.empty() && !knot.empty())
      throw ParamError("--word and --knot are mutually exclusive");
    if (!word_text.empty()) return parse_word(word_text);
    if (knot.empty()) throw ParamError("one of --word or --knot is required");
    const auto entries = resolve_catalog(common);
    const KnotEntry* entry = lookup(entries, knot);
    if (!entry) throw CatalogError("unknown knot '" + knot + "'");
    if (const PublishedRow* row = published_reference().row(entry->name))
      return parse_word(row->word);
    return entry->word;
  }
};

void print_params(std::ostream& out, const RepParams& p) {
  out << "condition: " << p.condition << "  branch: "
      << (p.branch > 0 ? "plus" : "minus") << "\n"
      << "a: " << format_complex(p.a) << "  f: " << format_complex(p.f)
      << "\n"
      << "d: " << format_complex(p.d) << "  g: " << format_complex(p.g)
      << "\n";
}

Json params_json(const RepParams& p) {
  Json j;
  j["condition"] = p.condition;
  j["branch"] = p.branch;
  j["a"] = complex_json(p.a);
  j["f"] = complex_json(p.f);
  j["d"] = complex_json(p.d);
  j["g"] = complex_json(p.g);
  return j;
}

int cmd_parse(const CommonOpts& common, const std::string& text,
              std::ostream& out) {
  const BraidWord w = parse_word(text);
  const auto flype = as_flype_form(w);
  if (common.format == "json") {
    Json j;
    j["word"] = format_word(w);
    Json syllables = Json::array();
    for (const Syllable& s : w.syllables())
      syllables.push_back(Json::array({s.generator, s.exponent}));
    j["syllables"] = std::move(syllables);
    j["count"] = w.size();
    j["exponent_sum"] = w.exponent_sum();
    if (flype)
      j["flype_form"] = Json{{"a", flype->a},
                             {"b", flype->b},
                             {"c", flype->c},
                             {"epsilon", flype->epsilon}};
    else
      j["flype_form"] = nullptr;
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "word,syllables,exponent_sum,flype_form\n"
        << format_word(w) << ',' << w.size() << ',' << w.exponent_sum() << ','
        << (flype ? "yes" : "no") << "\n";
  } else {
    out << "word: " << format_word(w) << "\n"
        << "syllables: " << w.size() << "\n"
        << "exponent sum: " << w.exponent_sum() << "\n";
    if (flype)
      out << "flype form: a=" << flype->a << " b=" << flype->b
          << " c=" << flype->c << " epsilon=" << flype->epsilon << "\n";
    else
      out << "flype form: none\n";
  }
  return 0;
}

int cmd_reverse(const CommonOpts& common, const std::string& text,
                std::ostream& out) {
  const BraidWord w = parse_word(text);
  const BraidWord r = reverse(w);
  if (common.format == "json") {
    Json j;
    j["word"] = format_word(w);
    j["reversed"] = format_word(r);
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "word,reversed\n" << format_word(w) << ',' << format_word(r)
        << "\n";
  } else {
    out << format_word(r) << "\n";
  }
  return 0;
}

int cmd_rep(const CommonOpts& common, const RepOpts& rep_opts,
            const std::string& export_path, std::ostream& out) {
  const Rep rep = rep_opts.build();
  if (!export_path.empty()) {
    std::ofstream file(export_path);
    if (!file)
      throw Error("io", "cannot write representation file '" + export_path +
                            "'");
    file << rep_to_json(rep) << "\n";
  }
  const Complex det1 = determinant(rep.sigma1());
  const Complex det2 = determinant(rep.sigma2());
  if (common.format == "json") {
    Json j = Json::parse(rep_to_json(rep));
    j["det_sigma1"] = complex_json(det1);
    j["det_sigma2"] = complex_json(det2);
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "kind,relation_residual,det_sigma1_re,det_sigma1_im\n"
        << to_string(rep.provenance().kind) << ','
        << g17(rep.relation_residual()) << ',' << g17(det1.real()) << ','
        << g17(det1.imag()) << "\n";
  } else {
    out << "provenance: " << to_string(rep.provenance().kind) << "\n";
    if (rep.provenance().params) print_params(out, *rep.provenance().params);
    if (rep.provenance().lambda)
      out << "lambda: " << format_complex(*rep.provenance().lambda) << "\n";
    out << "braid relation residual: " << rep.relation_residual() << "\n"
        << "det sigma1: " << format_complex(det1) << "\n"
        << "det sigma2: " << format_complex(det2) << "\n";
    if (!export_path.empty()) out << "exported to: " << export_path << "\n";
  }
  return 0;
}

int cmd_eval(const CommonOpts& common, const RepOpts& rep_opts,
             const WordOpts& word_opts, std::ostream& out) {
  const Rep rep = rep_opts.build();
  const BraidWord w = word_opts.resolve(common);
  const Mat6 m = evaluate(rep, w);
  if (common.format == "json") {
    Json j = Json::parse(matrix_to_json(m));
    j["word"] = format_word(w);
    j["trace"] = complex_json(trace(m));
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "row,col,re,im\n";
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k)
        out << i << ',' << k << ',' << g17(m(i, k).real()) << ','
            << g17(m(i, k).imag()) << "\n";
  } else {
    out << "rho(" << format_word(w) << "):\n";
    for (int i = 0; i < 6; ++i) {
      for (int k = 0; k < 6; ++k)
        out << (k == 0 ? "" : "  ") << format_complex(m(i, k), 6);
      out << "\n";
    }
    out << "trace: " << format_complex(trace(m)) << "\n";
  }
  return 0;
}

int cmd_trace(const CommonOpts& common, const RepOpts& rep_opts,
              const WordOpts& word_opts, std::ostream& out) {
  const Rep rep = rep_opts.build();
  const BraidWord w = word_opts.resolve(common);
  const Complex t = trace(evaluate(rep, w));
  const Complex tr = trace(evaluate(rep, reverse(w)));
  if (common.format == "json") {
    Json j;
    j["word"] = format_word(w);
    j["trace"] = complex_json(t);
    j["trace_reversed"] = complex_json(tr);
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "word,trace_re,trace_im,trace_reversed_re,trace_reversed_im\n"
        << format_word(w) << ',' << g17(t.real()) << ',' << g17(t.imag())
        << ',' << g17(tr.real()) << ',' << g17(tr.imag()) << "\n";
  } else {
    out << "word: " << format_word(w) << "\n"
        << "trace rho(w):  " << format_complex(t) << "\n"
        << "trace rho(w'): " << format_complex(tr) << "\n";
  }
  return 0;
}

int cmd_gap(const CommonOpts& common, const RepOpts& rep_opts,
            const WordOpts& word_opts, double tol, bool verdict_mode,
            std::ostream& out) {
  const Rep rep = rep_opts.build();
  const BraidWord w = word_opts.resolve(common);
  const Complex gap = trace_gap(rep, w);
  const bool separated = separates(rep, w, tol);
  if (common.format == "json") {
    Json j;
    j["word"] = format_word(w);
    j["gap"] = complex_json(gap);
    j["separated"] = separated;
    j["tolerance"] = tol;
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "word,gap_re,gap_im,separated,tolerance\n"
        << format_word(w) << ',' << g17(gap.real()) << ',' << g17(gap.imag())
        << ',' << (separated ? "true" : "false") << ',' << g17(tol) << "\n";
  } else if (verdict_mode) {
    out << "word: " << format_word(w) << "\n"
        << "gap: " << format_complex(gap) << "\n"
        << "separated: " << (separated ? "true" : "false")
        << " (relative tolerance " << tol << ")\n";
    if (separated)
      out << "the word and its reverse lie in distinct conjugacy classes\n";
  } else {
    out << "gap Tr rho(w) - Tr rho(w') for " << format_word(w) << ":\n"
        << format_complex(gap) << "\n";
  }
  return 0;
}

int cmd_table(const CommonOpts& common, const RepOpts& rep_opts,
              bool published, const std::vector<std::string>& a_list,
              const std::vector<std::string>& f_list, double tol,
              std::ostream& out) {
  const auto entries = resolve_catalog(common);
  std::vector<RepParams> param_sets;
  const PublishedReference* reference = nullptr;
  if (published) {
    if (!a_list.empty() || !f_list.empty())
      throw ParamError("--published cannot be combined with --a/--f columns");
    param_sets = published_param_sets();
    reference = &published_reference();
  } else {
    if (a_list.empty())
      throw ParamError("table needs --published or at least one --a column");
    const bool f_free =
        rep_opts.condition == 1 || rep_opts.condition == 3;
    if (f_free && f_list.size() != a_list.size())
      throw ParamError("--a and --f must be given the same number of times");
    for (std::size_t i = 0; i < a_list.size(); ++i) {
      const Complex a = parse_complex(a_list[i]);
      const Complex f =
          i < f_list.size() ? parse_complex(f_list[i]) : Complex(1.0);
      param_sets.push_back(
          family_params(rep_opts.condition, rep_opts.branch_sign(), a, f));
    }
  }

  const GapTable table = reproduce_table(param_sets, entries, reference, tol);

  if (common.format == "json") {
    out << gap_table_to_json(table) << "\n";
  } else if (common.format == "csv") {
    out << gap_table_to_csv(table);
  } else {
    for (const GapResult& row : table.rows) {
      out << std::left << std::setw(6) << row.knot << std::setw(36)
          << (" a=" + format_complex(row.params.a, 6) +
              " f=" + format_complex(row.params.f, 6))
          << " gap " << std::setw(28) << format_complex(row.gap, 6)
          << (row.separated ? " separated" : " not-separated");
      if (row.matches_reference)
        out << (*row.matches_reference ? "  matches reference"
                                       : "  MISMATCH vs reference");
      out << "\n";
    }
    // flype-admitting closures: the gap certifies non-conjugacy of w and its
    // reverse only, not non-invertibility of the closure
    out << "note: a separated verdict certifies only that the braid and its "
           "reverse are non-conjugate\n";
  }
  if (table.has_reference) {
    out << "reference match: " << table.match_count() << "/"
        << table.reference_count() << "\n";
    return table.all_match() ? 0 : 1;
  }
  return 0;
}

int cmd_search(const CommonOpts& common, const WordOpts& word_opts,
               const RepOpts& rep_opts, int draws, std::uint64_t seed,
               const std::vector<double>& box_values, double tol,
               std::ostream& out) {
  const BraidWord w = word_opts.resolve(common);
  SearchBox box;
  if (!box_values.empty()) {
    if (box_values.size() != 4)
      throw ParamError("--box needs four values: re-min re-max im-min im-max");
    box.a = ComplexBox{box_values[0], box_values[1], box_values[2],
                       box_values[3]};
    box.f = box.a;
  }
  if (!rep_opts.a_text.empty()) {
    const Complex a = parse_complex(rep_opts.a_text);
    box.a = ComplexBox{a.real(), a.real(), a.imag(), a.imag()};
  }
  if (!rep_opts.f_text.empty()) {
    const Complex f = parse_complex(rep_opts.f_text);
    box.f = ComplexBox{f.real(), f.real(), f.imag(), f.imag()};
  }
  const auto hits = search_separating_params(
      w, rep_opts.condition, rep_opts.branch_sign(), box, draws, seed, tol);

  if (common.format == "json") {
    Json rows = Json::array();
    for (const SearchHit& hit : hits) {
      Json j;
      j["params"] = params_json(hit.params);
      j["gap"] = complex_json(hit.gap);
      j["score"] = hit.score;
      rows.push_back(std::move(j));
    }
    Json j;
    j["word"] = format_word(w);
    j["draws"] = draws;
    j["seed"] = seed;
    j["hits"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "a,f,condition,branch,gap_re,gap_im,score\n";
    for (const SearchHit& hit : hits)
      out << format_complex(hit.params.a, 17) << ','
          << format_complex(hit.params.f, 17) << ',' << hit.params.condition
          << ',' << hit.params.branch << ',' << g17(hit.gap.real()) << ','
          << g17(hit.gap.imag()) << ',' << g17(hit.score) << "\n";
  } else {
    out << "word: " << format_word(w) << "\n"
        << "separating draws: " << hits.size() << "/" << draws << "\n";
    for (const SearchHit& hit : hits)
      out << "  a=" << format_complex(hit.params.a, 6)
          << " f=" << format_complex(hit.params.f, 6)
          << " gap=" << format_complex(hit.gap, 6) << " score=" << hit.score
          << "\n";
    if (hits.empty())
      out << "no separating parameters found in " << draws << " draws\n";
  }
  return 0;
}

int cmd_catalog(const CommonOpts& common, std::ostream& out) {
  const auto entries = resolve_catalog(common);
  if (common.format == "json") {
    Json rows = Json::array();
    for (const KnotEntry& e : entries) {
      Json j;
      j["name"] = e.name;
      j["crossings"] = e.crossings;
      j["word"] = format_word(e.word);
      Json aliases = Json::array();
      for (const BraidWord& alias : e.aliases)
        aliases.push_back(format_word(alias));
      j["aliases"] = std::move(aliases);
      rows.push_back(std::move(j));
    }
    out << rows.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "name,crossings,word,aliases\n";
    for (const KnotEntry& e : entries) {
      out << e.name << ',' << e.crossings << ',' << format_word(e.word) << ',';
      for (std::size_t i = 0; i < e.aliases.size(); ++i)
        out << (i ? ";" : "") << format_word(e.aliases[i]);
      out << "\n";
    }
  } else {
    for (const KnotEntry& e : entries) {
      out << std::left << std::setw(6) << e.name << " (" << e.crossings
          << " crossings)  " << format_word(e.word);
      if (!e.aliases.empty()) {
        out << "  aliases:";
        for (const BraidWord& alias : e.aliases)
          out << " [" << format_word(alias) << "]";
      }
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"6-dimensional block representations of the 3-strand braid "
               "group and trace-gap separation of braids from their "
               "reverses"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--catalog", common.catalog_path,
                 "knot catalog JSON file overriding the embedded one")
      ->envname("BRAIDSEP_CATALOG");

  std::string word_text;
  RepOpts rep_opts;
  WordOpts word_opts;
  std::string export_path;
  double tol = kDefaultSeparationTol;
  bool published = false;
  std::vector<std::string> a_columns;
  std::vector<std::string> f_columns;
  int draws = 100;
  std::uint64_t seed = 0;
  std::vector<double> box_values;

  CLI::App* parse_cmd =
      app.add_subcommand("parse", "parse and normalize a braid word");
  parse_cmd->add_option("word", word_text, "braid word text")->required();

  CLI::App* reverse_cmd =
      app.add_subcommand("reverse", "reverse a braid word");
  reverse_cmd->add_option("word", word_text, "braid word text")->required();

  CLI::App* rep_cmd = app.add_subcommand(
      "rep", "build, check and export a representation");
  rep_opts.add_to(rep_cmd);
  rep_cmd->add_option("--out", export_path,
                      "export the representation to a JSON file");

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate rho(w) as a 6x6 matrix");
  rep_opts.add_to(eval_cmd);
  word_opts.add_to(eval_cmd);

  CLI::App* trace_cmd =
      app.add_subcommand("trace", "trace of rho(w) and of rho(w')");
  rep_opts.add_to(trace_cmd);
  word_opts.add_to(trace_cmd);

  CLI::App* gap_cmd = app.add_subcommand(
      "gap", "trace gap Tr rho(w) - Tr rho(w') for a braid word");
  rep_opts.add_to(gap_cmd);
  word_opts.add_to(gap_cmd);
  gap_cmd->add_option("--tol", tol, "relative separation tolerance")
      ->capture_default_str();

  CLI::App* separate_cmd = app.add_subcommand(
      "separate", "decide whether rho separates w from its reverse");
  rep_opts.add_to(separate_cmd);
  word_opts.add_to(separate_cmd);
  separate_cmd->add_option("--tol", tol, "relative separation tolerance")
      ->capture_default_str();

  CLI::App* table_cmd = app.add_subcommand(
      "table", "gap table over the catalog; --published compares against "
               "the bundled reference values");
  rep_opts.add_to(table_cmd, /*with_sources=*/false);
  table_cmd->add_flag("--published", published,
                      "use the three reference parameter columns and report "
                      "match verdicts");
  table_cmd->add_option("--a", a_columns, "custom column parameter a")
      ->take_all();
  table_cmd->add_option("--f", f_columns, "custom column parameter f")
      ->take_all();
  table_cmd->add_option("--tol", tol, "relative separation tolerance")
      ->capture_default_str();

  CLI::App* search_cmd = app.add_subcommand(
      "search", "random search for separating family parameters");
  rep_opts.add_to(search_cmd, /*with_sources=*/false);
  word_opts.add_to(search_cmd);
  search_cmd->add_option("--draws", draws, "number of parameter draws")
      ->capture_default_str();
  search_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  search_cmd
      ->add_option("--box", box_values,
                   "sampling rectangle: re-min re-max im-min im-max "
                   "(default -4 4 -4 4); --a/--f pin single values")
      ->expected(4);
  search_cmd->add_option("--tol", tol, "relative separation tolerance")
      ->capture_default_str();

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list the knot catalog");
  (void)catalog_cmd;

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("braidsep");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(common, word_text, out);
    if (reverse_cmd->parsed()) return cmd_reverse(common, word_text, out);
    if (rep_cmd->parsed()) return cmd_rep(common, rep_opts, export_path, out);
    if (eval_cmd->parsed()) return cmd_eval(common, rep_opts, word_opts, out);
    if (trace_cmd->parsed())
      return cmd_trace(common, rep_opts, word_opts, out);
    if (gap_cmd->parsed())
      return cmd_gap(common, rep_opts, word_opts, tol, false, out);
    if (separate_cmd->parsed())
      return cmd_gap(common, rep_opts, word_opts, tol, true, out);
    if (table_cmd->parsed())
      return cmd_table(common, rep_opts, published, a_columns, f_columns, tol,
                       out);
    if (search_cmd->parsed())
      return cmd_search(common, word_opts, rep_opts, draws, seed, box_values,
                        tol, out);
    if (catalog_cmd->parsed()) return cmd_catalog(common, out);
    err << "error[usage]: no command given\n";
    return 2;
  } catch (const Error& e) {
    err << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace braidsep::cli
