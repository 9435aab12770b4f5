//
// strmod command line tool: words, classification, splits, module files,
// decomposition, the DVR catalog and the structural verification suite.
//
// Exit codes: 0 success, 1 domain error (invalid input data, certification
// failure, failed verification), 2 usage error.
//

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "strmod/classify.hpp"
#include "strmod/generators.hpp"
#include "strmod/io.hpp"
#include "strmod/ksdecomp.hpp"
#include "strmod/suite.hpp"

using nlohmann::json;
using namespace strmod;

namespace {

struct Options {
  std::string field_text = "32003";
  std::uint64_t seed = 0;
  int mc_budget = 20;
  bool machine = false;
  std::string in_path, out_path;
  int depth = -1;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "q")
    return FieldSpec::rationals();
  try {
    std::size_t used = 0;
    const long long p = std::stoll(text, &used);
    if (used != text.size())
      throw std::invalid_argument(text);
    return FieldSpec::prime(p);
  } catch (const std::invalid_argument&) {
    throw UsageError("--field expects Q or a prime, got \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw UsageError("--field value out of range: \"" + text + "\"");
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      if (m.field().is_rationals())
        row.push_back(scalar_to_text(m.field(), m.at(i, j)));
      else
        row.push_back(m.at(i, j).residue());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificate_json(const Certificate& c) {
  if (c.kind == Certificate::Kind::LocalEndo)
    return json{{"kind", "local-endo"}, {"residue-dim", c.residue_dim}};
  return json{{"kind", "monte-carlo"},
              {"samples", c.samples},
              {"sample-space", c.sample_space}};
}

void emit(const Options& opt, const json& doc, const std::string& pretty) {
  if (opt.machine)
    std::cout << doc.dump() << '\n';
  else
    std::cout << pretty << '\n';
}

void write_or_print(const Options& opt, const ModuleRep& m) {
  if (!opt.out_path.empty()) {
    save_module(m, opt.out_path);
    if (!opt.machine)
      std::cout << "wrote " << opt.out_path << '\n';
    else
      std::cout << json{{"written", opt.out_path}, {"dim", m.dim()}}.dump()
                << '\n';
    return;
  }
  std::cout << module_to_json(m) << '\n';
}

ModuleRep require_in(const Options& opt) {
  if (opt.in_path.empty())
    throw UsageError("this subcommand needs --in <module.json>");
  return load_module(opt.in_path);
}

int run_validate(const Options& opt, const std::string& word) {
  const ValidationReport rep = validate(word);
  json doc{{"ok", rep.ok}};
  std::string pretty = "ok";
  if (!rep.ok) {
    doc["error"] = rep.message;
    if (rep.position)
      doc["position"] = *rep.position;
    pretty = "invalid: " + rep.message;
    if (rep.position)
      pretty += " (offset " + std::to_string(*rep.position) + ")";
  }
  emit(opt, doc, pretty);
  return rep.ok ? 0 : 1;
}

int run_classify(const Options& opt, const std::string& word) {
  const Classification c = classify_word(parse_word(word));
  emit(opt, json{{"word", word}, {"classification", to_string(c)}},
       to_string(c));
  return 0;
}

int run_canon(const Options& opt, const std::string& word) {
  const std::string c = serialize(canonical_form(parse_word(word)));
  emit(opt, json{{"canonical", c}}, c);
  return 0;
}

int run_dual(const Options& opt, const std::string& word) {
  std::string out;
  if (validate(word).ok && word.find("band(") != std::string::npos)
    out = serialize(inverse_word(parse_band(word)));
  else
    out = serialize(inverse_word(parse_word(word)));
  emit(opt, json{{"dual", out}}, out);
  return 0;
}

int run_split(const Options& opt, const std::string& word,
              const std::optional<int>& at) {
  const StringWord w = parse_word(word);
  if (at) {
    const ConcatSplitResult r = concat_split(w, *at);
    const char* orient =
        r.orientation == ConnectorOrientation::InverseConnector
            ? "inverse-connector"
            : "direct-connector";
    emit(opt,
         json{{"sub", serialize(r.sub)},
              {"quot", serialize(r.quot)},
              {"connector", std::string(1, r.connector.to_char())},
              {"orientation", orient}},
         "sub:  \"" + serialize(r.sub) + "\"\nquot: \"" + serialize(r.quot) +
             "\"\nconnector: " + r.connector.to_char() + " (" + orient + ")");
    return 0;
  }
  const SplitResult r = arno_split(w);
  json doc{{"sub", serialize(r.sub)},
           {"quot", serialize(r.quot)},
           {"sub-class", to_string(classify_word(r.sub))},
           {"quot-class", to_string(classify_word(r.quot))}};
  if (r.split_index)
    doc["index"] = *r.split_index;
  else
    doc["index"] = nullptr;
  std::string pretty = "sub:  \"" + serialize(r.sub) + "\" (" +
                       to_string(classify_word(r.sub)) + ")\nquot: \"" +
                       serialize(r.quot) + "\" (" +
                       to_string(classify_word(r.quot)) + ")";
  if (r.split_index)
    pretty += "\nindex: " + std::to_string(*r.split_index);
  emit(opt, doc, pretty);
  return 0;
}

int run_truncate(const Options& opt, const std::string& word) {
  if (opt.depth < 0)
    throw UsageError("truncate needs --depth <n>");
  const std::string out = serialize(truncate_end(parse_word(word), opt.depth));
  emit(opt, json{{"word", out}}, out);
  return 0;
}

int run_materialize(const Options& opt, const std::string& word) {
  const FieldSpec f = parse_field(opt.field_text);
  StringWord w = parse_word(word);
  if (!w.is_finite() && opt.depth >= 0)
    w = truncate_end(w, opt.depth);
  const ModuleRep m = materialize_string(w, f);
  write_or_print(opt, m);
  return 0;
}

int run_band(const Options& opt, const std::string& band_text,
             const std::string& lambda_text, int size,
             const std::string& poly_text, int power) {
  const FieldSpec f = parse_field(opt.field_text);
  const PeriodicWord pw = parse_band(band_text);
  BandParam param = [&] {
    if (!lambda_text.empty()) {
      if (!poly_text.empty())
        throw UsageError("give either --lambda/--size or --poly/--power");
      return BandParam::jordan(f, scalar_from_text(f, lambda_text),
                               size < 1 ? 1 : size);
    }
    if (poly_text.empty())
      throw UsageError("band needs --lambda <scalar> or --poly <c0,c1,...>");
    std::vector<Scalar> coeffs;
    std::size_t pos = 0;
    while (pos <= poly_text.size()) {
      const std::size_t comma = poly_text.find(',', pos);
      const std::string piece =
          poly_text.substr(pos, comma == std::string::npos ? std::string::npos
                                                           : comma - pos);
      coeffs.push_back(scalar_from_text(f, piece));
      if (comma == std::string::npos)
        break;
      pos = comma + 1;
    }
    return BandParam::companion(Poly(f, std::move(coeffs)),
                                power < 1 ? 1 : power);
  }();
  write_or_print(opt, materialize_band(pw, param, f));
  return 0;
}

int run_soc_series(const Options& opt) {
  const ModuleRep m = require_in(opt);
  const std::vector<int> s = socle_series(m);
  std::string pretty;
  for (std::size_t i = 0; i < s.size(); ++i)
    pretty += (i ? " " : "") + std::to_string(s[i]);
  emit(opt, json{{"dim", m.dim()}, {"socle-series", s}}, pretty);
  return 0;
}

int run_hom_dim(const Options& opt, const std::string& a_path,
                const std::string& b_path) {
  const ModuleRep a = load_module(a_path);
  const ModuleRep b = load_module(b_path);
  const int d = hom_dim(a, b);
  emit(opt, json{{"hom-dim", d}}, std::to_string(d));
  return 0;
}

int run_iso(const Options& opt, const std::string& a_path,
            const std::string& b_path) {
  const ModuleRep a = load_module(a_path);
  const ModuleRep b = load_module(b_path);
  Rng rng(opt.seed);
  const IsoResult r = is_isomorphic(a, b, rng, opt.mc_budget);
  json doc{{"isomorphic", r.isomorphic}, {"certain", r.certain}};
  std::string pretty = r.isomorphic ? "isomorphic" : "not isomorphic";
  if (!r.certain) {
    doc["samples"] = r.samples;
    doc["sample-space"] = r.sample_space;
    pretty += " (one-sided Monte Carlo, " + std::to_string(r.samples) +
              " samples over " + std::to_string(r.sample_space) + ")";
  }
  if (r.witness)
    doc["witness"] = matrix_json(*r.witness);
  emit(opt, doc, pretty);
  return 0;
}

int run_decompose(const Options& opt) {
  const ModuleRep m = require_in(opt);
  const DecompositionResult r = decompose(m, opt.seed, opt.mc_budget);
  json parts = json::array();
  std::string pretty =
      "dim " + std::to_string(r.total_dim) + " = ";
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    const DecompositionPart& p = r.parts[i];
    parts.push_back(json{{"multiplicity", p.multiplicity},
                         {"module", json::parse(module_to_json(p.rep))},
                         {"certificate", certificate_json(p.certificate)}});
    if (i)
      pretty += " + ";
    pretty += std::to_string(p.multiplicity) + " x (dim " +
              std::to_string(p.rep.dim()) + ")";
  }
  if (r.parts.empty())
    pretty += "0";
  json doc{{"dim", r.total_dim},
           {"seed", opt.seed},
           {"parts", parts},
           {"witness", matrix_json(r.witness)}};
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
      throw DomainError("cannot write " + opt.out_path);
    out << doc.dump() << '\n';
  }
  emit(opt, doc, pretty);
  return 0;
}

int run_dvr(const Options& opt, const std::string& verb, const std::string& o1,
            const std::string& o2) {
  if (verb == "dual") {
    const std::string out = serialize(dvr_dual(parse_dvr(o1)));
    emit(opt, json{{"dual", out}}, out);
    return 0;
  }
  if (verb == "classify") {
    const std::string out = to_string(dvr_classify(parse_dvr(o1)));
    emit(opt, json{{"classification", out}}, out);
    return 0;
  }
  if (verb == "add") {
    if (o2.empty())
      throw UsageError("dvr add needs two objects");
    const std::string out = serialize(dvr_add(parse_dvr(o1), parse_dvr(o2)));
    emit(opt, json{{"sum", out}}, out);
    return 0;
  }
  throw UsageError("dvr verb must be dual, classify or add");
}

int run_paper_suite(const Options& opt) {
  SuiteOptions so;
  so.seed = opt.seed;
  so.mc_budget = opt.mc_budget;
  const FieldSpec f = parse_field(opt.field_text);
  if (f.is_rationals())
    throw UsageError("paper-suite runs over a prime field");
  so.prime = f.characteristic();

  const std::vector<CheckResult> results = run_verification_suite(so);
  bool all = true;
  json arr = json::array();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    arr.push_back(json{{"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
    if (!opt.machine) {
      char line[512];
      std::snprintf(line, sizeof line, "[%s] %-24s %s (%.2fs)",
                    r.passed ? " ok " : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
      std::cout << line << '\n';
    }
  }
  if (opt.machine)
    std::cout << json{{"passed", all}, {"checks", arr}}.dump() << '\n';
  else
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with string and band modules over k[[x,y]]/(xy)"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--field", opt.field_text, "coefficient field: Q or a prime")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized subcommands")
      ->capture_default_str();
  app.add_option("--mc-budget", opt.mc_budget, "Monte Carlo budget")
      ->capture_default_str();
  app.add_flag("--json", opt.machine, "machine-readable output");
  app.add_option("--in", opt.in_path, "input module file");
  app.add_option("--out", opt.out_path, "output file");
  app.add_option("--depth", opt.depth, "truncation depth");

  std::string word, band_text, lambda_text, poly_text;
  std::string path_a, path_b, dvr_verb, dvr_o1, dvr_o2;
  int at_index = -1, band_size = 1, band_power = 1;
  bool has_at = false;

  CLI::App* c_validate = app.add_subcommand("validate", "check a word or band(...)");
  c_validate->add_option("word", word)->required();
  CLI::App* c_classify = app.add_subcommand("classify", "chain conditions of a word");
  c_classify->add_option("word", word)->required();
  CLI::App* c_canon = app.add_subcommand("canon", "canonical form of a word");
  c_canon->add_option("word", word)->required();
  CLI::App* c_dual = app.add_subcommand("dual", "letterwise inverse of a word or band");
  c_dual->add_option("word", word)->required();
  CLI::App* c_split = app.add_subcommand(
      "split", "noetherian-by-artinian split, or --at j for a cut");
  c_split->add_option("word", word)->required();
  c_split->add_option("--at", at_index, "cut at core letter j")
      ->check(CLI::NonNegativeNumber);
  CLI::App* c_trunc = app.add_subcommand("truncate", "replace tails by --depth copies");
  c_trunc->add_option("word", word)->required();
  CLI::App* c_mat = app.add_subcommand("materialize", "string module of a finite word");
  c_mat->add_option("word", word)->required();
  CLI::App* c_band = app.add_subcommand("band", "band module of band(...)");
  c_band->add_option("band", band_text)->required();
  c_band->add_option("--lambda", lambda_text, "Jordan eigenvalue (nonzero)");
  c_band->add_option("--size", band_size, "Jordan size");
  c_band->add_option("--poly", poly_text, "monic polynomial c0,c1,...,1");
  c_band->add_option("--power", band_power, "polynomial power");
  CLI::App* c_soc = app.add_subcommand("soc-series", "socle filtration dimensions");
  CLI::App* c_hom = app.add_subcommand("hom-dim", "dim Hom(A, B) for module files");
  c_hom->add_option("a", path_a)->required();
  c_hom->add_option("b", path_b)->required();
  CLI::App* c_iso = app.add_subcommand("iso", "isomorphism test for module files");
  c_iso->add_option("a", path_a)->required();
  c_iso->add_option("b", path_b)->required();
  CLI::App* c_dec = app.add_subcommand("decompose", "indecomposable summands of --in");
  CLI::App* c_dvr = app.add_subcommand("dvr", "catalog ops: dual | classify | add");
  c_dvr->add_option("verb", dvr_verb)->required();
  c_dvr->add_option("object", dvr_o1);
  c_dvr->add_option("object2", dvr_o2);
  CLI::App* c_suite = app.add_subcommand("paper-suite", "run the verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  has_at = c_split->count("--at") > 0;

  try {
    if (c_validate->parsed())
      return run_validate(opt, word);
    if (c_classify->parsed())
      return run_classify(opt, word);
    if (c_canon->parsed())
      return run_canon(opt, word);
    if (c_dual->parsed())
      return run_dual(opt, word);
    if (c_split->parsed())
      return run_split(opt, word,
                       has_at ? std::optional<int>(at_index) : std::nullopt);
    if (c_trunc->parsed())
      return run_truncate(opt, word);
    if (c_mat->parsed())
      return run_materialize(opt, word);
    if (c_band->parsed())
      return run_band(opt, band_text, lambda_text, band_size, poly_text,
                      band_power);
    if (c_soc->parsed())
      return run_soc_series(opt);
    if (c_hom->parsed())
      return run_hom_dim(opt, path_a, path_b);
    if (c_iso->parsed())
      return run_iso(opt, path_a, path_b);
    if (c_dec->parsed())
      return run_decompose(opt);
    if (c_dvr->parsed())
      return run_dvr(opt, dvr_verb, dvr_o1, dvr_o2);
    if (c_suite->parsed())
      return run_paper_suite(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    if (opt.machine)
      std::cout << json{{"ok", false},
                        {"error", {{"kind", "usage"}, {"message", e.what()}}}}
                       .dump()
                << '\n';
    else
      std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    if (opt.machine)
      std::cout << json{{"ok", false},
                        {"error",
                         {{"kind", "domain"},
                          {"message", e.what()},
                          {"position", e.position()}}}}
                       .dump()
                << '\n';
    else
      std::cerr << "error: " << e.what() << " (offset " << e.position()
                << ")\n";
    return 1;
  } catch (const DomainError& e) {
    if (opt.machine)
      std::cout << json{{"ok", false},
                        {"error", {{"kind", "domain"}, {"message", e.what()}}}}
                       .dump()
                << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
