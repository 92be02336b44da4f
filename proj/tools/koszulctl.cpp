// Command-line front end. Every verb reads JSON, runs one library check or
// computation, and prints a text report (default) or deterministic JSON.
// Exit codes: 0 pass, 1 failed check, 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "koszul/errors.hpp"
#include "koszul/json_io.hpp"
#include "koszul/version.hpp"

namespace {

using nlohmann::json;
using namespace koszul;

struct Options {
  std::string format = "text";
  std::string output;
  std::size_t max_degree = 6;
};

void add_common(CLI::App* cmd, Options& opt, bool with_degree = true) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", opt.output, "write the report to a file instead of stdout");
  if (with_degree)
    cmd->add_option("--max-degree", opt.max_degree, "degree bound for graded computations")
        ->capture_default_str();
}

void emit(const Options& opt, const std::string& body) {
  if (opt.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw file_error("cannot write " + opt.output);
  out << body;
}

int finish(const Options& opt, json j, const std::string& text, bool pass) {
  j["tool_version"] = std::string(tool_version);
  emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text);
  return pass ? 0 : 1;
}

std::string dims_line(const GradedDims& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "]";
  return os.str();
}

json verdict_json(const KoszulVerdict& v) {
  json j;
  j["bound"] = v.bound;
  j["koszul_up_to"] = v.koszul_up_to;
  j["diagonal_match"] = v.diagonal_match;
  j["positive"] = v.positive();
  if (v.first_violation)
    j["first_violation"] = {v.first_violation->first, v.first_violation->second};
  else
    j["first_violation"] = nullptr;
  return j;
}

std::string verdict_text(const KoszulVerdict& v) {
  std::ostringstream os;
  os << "koszul certificate (bound " << v.bound << "): " << (v.positive() ? "POSITIVE" : "NEGATIVE")
     << "\n";
  os << "  certified up to degree " << v.koszul_up_to << "; no claim beyond this bound\n";
  if (v.first_violation)
    os << "  first violation at (i,j) = (" << v.first_violation->first << ","
       << v.first_violation->second << ")\n";
  os << "  diagonal matches the dual coalgebra dimensions: " << (v.diagonal_match ? "yes" : "no")
     << "\n";
  return os.str();
}

json tate_json(const TateReport& r) {
  json j;
  j["cond1"] = r.cond1;
  j["cond2"] = r.cond2;
  j["cond3"] = r.cond3;
  j["bs"] = r.bs;
  j["pass"] = r.pass();
  j["window"] = {{"l_min", r.l_min}, {"l_max", r.l_max}, {"w_min", r.w_min}, {"w_max", r.w_max}};
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"condition", std::string(condition_name(x.condition))},
                 {"l", x.l},
                 {"w", x.w},
                 {"dim", x.dim}});
  j["violations"] = std::move(v);
  return j;
}

std::string tate_text(const TateReport& r) {
  std::ostringstream os;
  os << "tate-type check over l in [" << r.l_min << "," << r.l_max << "], w in [" << r.w_min << ","
     << r.w_max << "]\n";
  os << "  COND1 negative twists vanish: " << (r.cond1 ? "pass" : "fail") << "\n";
  os << "  COND2 twist zero sits in shift zero: " << (r.cond2 ? "pass" : "fail") << "\n";
  os << "  COND3 unit endomorphisms are one-dimensional: " << (r.cond3 ? "pass" : "fail") << "\n";
  os << "  BS    no non-positive shifts into positive twists: " << (r.bs ? "pass" : "fail") << "\n";
  if (r.violations.empty()) {
    os << "violations: none\n";
  } else {
    for (const auto& x : r.violations)
      os << condition_name(x.condition) << " (" << x.l << "," << x.w << ") dim=" << x.dim << "\n";
  }
  return os.str();
}

int run_dual(const Options& opt, const std::string& file) {
  QuadraticPresentation q = presentation_from_json(load_json_file(file));
  QuadraticPresentation d = quadratic_dual(q);
  std::ostringstream os;
  os << "dual presentation on " << d.dim_v << " generators (";
  for (std::size_t i = 0; i < d.dim_v; ++i) os << (i ? ", " : "") << d.generator_names[i];
  os << "), " << d.relations.dim() << " relations\n";
  for (std::size_t r = 0; r < d.relations.dim(); ++r) {
    std::string sep = "  ";
    for_each_set_bit(d.relations.basis().row(r), [&](std::size_t b) {
      os << sep << d.generator_names[b / d.dim_v] << "." << d.generator_names[b % d.dim_v];
      sep = " + ";
    });
    os << "\n";
  }
  return finish(opt, to_json(d), os.str(), true);
}

int run_hilbert(const Options& opt, const std::string& file) {
  QuadraticPresentation q = presentation_from_json(load_json_file(file));
  HilbertCheck h = hilbert_product_check(q, opt.max_degree);
  json j;
  j["algebra_dims"] = h.algebra;
  j["dual_dims"] = h.dual;
  j["pass"] = h.pass;
  j["first_failure"] = h.first_failure ? json(*h.first_failure) : json(nullptr);
  std::ostringstream os;
  os << "degree      ";
  for (std::size_t n = 0; n <= opt.max_degree; ++n) os << " " << n;
  os << "\nalgebra dims " << dims_line(h.algebra) << "\ndual dims    " << dims_line(h.dual) << "\n";
  os << "series product == 1: " << (h.pass ? "pass" : "fail");
  if (h.first_failure) os << " (first failure at degree " << *h.first_failure << ")";
  os << "\n";
  return finish(opt, std::move(j), os.str(), h.pass);
}

int run_tor(const Options& opt, const std::string& file) {
  QuadraticPresentation q = presentation_from_json(load_json_file(file));
  TorTable t = tor_table(q, opt.max_degree);
  std::ostringstream os;
  os << "bigraded dimensions up to internal degree " << t.max_internal << "\n";
  os << "  i\\j";
  for (std::size_t jj = 0; jj <= t.max_internal; ++jj) os << " " << jj;
  os << "\n";
  for (std::size_t ii = 0; ii <= t.max_internal; ++ii) {
    os << "  " << ii << "  ";
    for (std::size_t jj = 0; jj <= t.max_internal; ++jj) os << " " << t.at(ii, jj);
    os << "\n";
  }
  return finish(opt, to_json(t), os.str(), true);
}

int run_koszul_check(const Options& opt, const std::string& file) {
  QuadraticPresentation q = presentation_from_json(load_json_file(file));
  KoszulVerdict v = koszul_certificate(q, opt.max_degree);
  return finish(opt, verdict_json(v), verdict_text(v), v.positive());
}

int run_milnor(const Options& opt, std::uint64_t q_flag, const std::string& file) {
  FieldSpec spec;
  if (q_flag && !file.empty()) throw schema_error("give either --q or a field spec file, not both");
  if (q_flag)
    spec = FiniteFieldSpec{q_flag};
  else if (!file.empty())
    spec = explicit_field_from_json(load_json_file(file));
  else
    throw schema_error("milnor needs --q or a field spec file");
  MilnorResult r = milnor_mod2(spec, opt.max_degree);
  json j;
  j["dims"] = r.dims;
  j["presentation"] = to_json(r.presentation);
  j["koszul"] = verdict_json(r.koszul);
  std::ostringstream os;
  os << "milnor mod-2 dims " << dims_line(r.dims) << "\n" << verdict_text(r.koszul);
  return finish(opt, std::move(j), os.str(), r.koszul.positive());
}

int run_tate_check(const Options& opt, const std::string& file) {
  HomTable t = hom_table_from_json(load_json_file(file));
  TateReport r = check_tate_type(t);
  return finish(opt, tate_json(r), tate_text(r), r.pass());
}

int run_vanish_check(const Options& opt, const std::string& file, int d_flag, bool d_given) {
  HomTable t = hom_table_from_json(load_json_file(file));
  int d;
  if (d_given)
    d = d_flag;
  else if (t.variety_dim)
    d = *t.variety_dim;
  else
    throw schema_error("vanish-check needs --d or a 'd' field in the table");
  VanishingReport r = check_vanishing_range(t, d);
  json j;
  j["d"] = r.variety_dim;
  j["pass"] = r.pass();
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"l", x.l}, {"w", x.w}, {"dim", x.dim}, {"clauses", x.clauses}});
  j["violations"] = std::move(v);
  std::ostringstream os;
  os << "vanishing ranges for variety dimension " << d << ": " << (r.pass() ? "pass" : "fail")
     << "\n";
  for (const auto& x : r.violations) {
    os << "  (" << x.l << "," << x.w << ") dim=" << x.dim << " violates";
    for (const auto& c : x.clauses) os << " " << c;
    os << "\n";
  }
  return finish(opt, std::move(j), os.str(), r.pass());
}

int run_predict(const Options& opt, const std::string& pres_file, const std::string& table_file) {
  QuadraticPresentation q = presentation_from_json(load_json_file(pres_file));
  HomTable t = hom_table_from_json(load_json_file(table_file));
  PredictVerdict v = predict_heart_equivalence(q, t, opt.max_degree);
  json j;
  j["bound"] = v.bound;
  j["table_diagonal"] = v.table_diagonal;
  j["off_diagonal_entry"] =
      v.off_diagonal_entry ? json({v.off_diagonal_entry->first, v.off_diagonal_entry->second})
                           : json(nullptr);
  j["certificate"] = verdict_json(v.certificate);
  j["predicted"] = v.predicted;
  std::ostringstream os;
  if (v.predicted) {
    os << "heart equivalence predicted up to degree " << v.bound << "\n";
  } else {
    os << "no heart-equivalence prediction\n";
    if (!v.table_diagonal)
      os << "  table has off-diagonal support at (" << v.off_diagonal_entry->first << ","
         << v.off_diagonal_entry->second << ")\n";
    if (!v.certificate.positive()) os << verdict_text(v.certificate);
  }
  return finish(opt, std::move(j), os.str(), v.predicted);
}

int run_hopf_verify(const Options& opt) {
  json j;
  std::ostringstream os;
  bool all = true;
  json sweeps = json::array();
  for (std::size_t d = 1; d <= 3; ++d) {
    ShuffleAxiomReport r = verify_shuffle_axioms(d, opt.max_degree);
    all = all && r.pass();
    sweeps.push_back({{"dim", d},
                      {"commutative", r.commutative},
                      {"associative", r.associative},
                      {"self_annihilating", r.self_annihilating},
                      {"bialgebra", r.bialgebra},
                      {"counit", r.counit},
                      {"pairs", r.pairs_checked},
                      {"triples", r.triples_checked}});
    os << "shuffle axioms, alphabet size " << d << ", total length <= " << opt.max_degree << ": "
       << (r.pass() ? "pass" : "fail") << " (" << r.pairs_checked << " pairs, " << r.triples_checked
       << " triples)\n";
  }
  json strict = json::array();
  auto strictness = [&](const std::string& name, const CoalgebraRef& c, std::size_t bound) {
    StrictnessReport s = verify_strict_grading(c, bound);
    all = all && s.pass;
    strict.push_back({{"coalgebra", name}, {"pass", s.pass}, {"primitive_dims", s.primitive_dims}});
    os << "primitives of " << name << " concentrated in degree 1: " << (s.pass ? "pass" : "fail")
       << "\n";
  };
  strictness("tensor(2)", TensorCoalgebra{2}, std::min<std::size_t>(opt.max_degree, 5));
  strictness("divided(2)", DividedPowerCoalgebra{2}, opt.max_degree);
  strictness("dual of square-zero(2)", QuadraticCoalgebra{square_zero_presentation(2)},
             std::min<std::size_t>(opt.max_degree, 5));
  strictness("dual of exterior(3)", QuadraticCoalgebra{exterior_presentation(3)},
             std::min<std::size_t>(opt.max_degree, 5));
  j["shuffle"] = std::move(sweeps);
  j["strictness"] = std::move(strict);
  j["pass"] = all;
  return finish(opt, std::move(j), os.str(), all);
}

int run_gmga(const Options& opt) {
  GmgaReport r = gmga_check(opt.max_degree);
  json j;
  j["max_degree"] = r.max_degree;
  j["dims_ok"] = r.dims_ok;
  j["products_ok"] = r.products_ok;
  j["pass"] = r.pass();
  std::ostringstream os;
  os << "divided powers on one generator vs truncated polynomials, degrees 0.." << r.max_degree
     << "\n";
  os << "  one monomial per degree on both sides: " << (r.dims_ok ? "pass" : "fail") << "\n";
  os << "  products follow the binary-digit dictionary: " << (r.products_ok ? "pass" : "fail")
     << "\n";
  if (r.first_mismatch)
    os << "  first mismatch at gamma_" << r.first_mismatch->first << " * gamma_"
       << r.first_mismatch->second << "\n";
  return finish(opt, std::move(j), os.str(), r.pass());
}

int run_comodule(const Options& opt, const std::string& file) {
  GradedComodule m = comodule_from_json(load_json_file(file));
  ComoduleReport r = validate(m);
  json j;
  j["valid"] = r.pass();
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"check", f.check}, {"detail", f.detail}});
  j["failures"] = std::move(fails);
  std::ostringstream os;
  os << "comodule on " << m.dim() << " basis elements: " << (r.pass() ? "valid" : "INVALID") << "\n";
  for (const auto& f : r.failures) os << "  " << f.check << ": " << f.detail << "\n";
  bool pass = r.pass();
  if (r.pass()) {
    WeightFiltration w = weight_filtration(m);
    auto fiber = fiber_functor(m);
    UnipotenceReport u = unipotence_check(m);
    pass = u.pass;
    json jw;
    jw["breakpoints"] = w.breakpoints;
    json layers = json::array();
    for (const auto& layer : w.layers) layers.push_back(layer.size());
    jw["layer_dims"] = std::move(layers);
    j["filtration"] = std::move(jw);
    json jf = json::array();
    for (auto [weight, dim] : fiber) jf.push_back({{"weight", weight}, {"dim", dim}});
    j["fiber"] = std::move(jf);
    j["unipotent"] = u.pass;
    os << "weight filtration breakpoints:";
    for (int c : w.breakpoints) os << " " << c;
    os << "\nfiber dimensions:";
    for (auto [weight, dim] : fiber) os << " " << weight << ":" << dim;
    os << "\nunipotent: " << (u.pass ? "yes" : "no") << "\n";
    for (const auto& reason : u.reasons) os << "  " << reason << "\n";
  }
  return finish(opt, std::move(j), os.str(), pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quadratic algebras over GF(2)"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  Options opt;
  std::string file, table_file;
  std::uint64_t q_flag = 0;
  int d_flag = 0;

  CLI::App* dual = app.add_subcommand("dual", "quadratic dual of a presentation");
  dual->add_option("presentation", file, "presentation JSON")->required();
  add_common(dual, opt, false);

  CLI::App* hilbert = app.add_subcommand("hilbert", "dimension series and the duality product check");
  hilbert->add_option("presentation", file)->required();
  add_common(hilbert, opt);

  CLI::App* tor = app.add_subcommand("tor", "bigraded bar homology dimensions");
  tor->add_option("presentation", file)->required();
  add_common(tor, opt);

  CLI::App* kcheck = app.add_subcommand("koszul-check", "bounded-degree Koszulity certificate");
  kcheck->add_option("presentation", file)->required();
  add_common(kcheck, opt);

  CLI::App* milnor = app.add_subcommand("milnor", "mod-2 Milnor K-theory of a field");
  milnor->add_option("spec", file, "explicit field spec JSON");
  milnor->add_option("--q", q_flag, "odd prime power: use the finite field of that order");
  add_common(milnor, opt);

  CLI::App* tate = app.add_subcommand("tate-check", "Tate-type conditions on a hom table");
  tate->add_option("table", file)->required();
  add_common(tate, opt, false);

  CLI::App* vanish = app.add_subcommand("vanish-check", "vanishing-range bounds on a hom table");
  vanish->add_option("table", file)->required();
  CLI::Option* d_opt = vanish->add_option("--d", d_flag, "variety dimension");
  add_common(vanish, opt, false);

  CLI::App* predict = app.add_subcommand("predict", "heart-equivalence prediction");
  predict->add_option("presentation", file)->required();
  predict->add_option("table", table_file)->required();
  add_common(predict, opt);

  CLI::App* hopf = app.add_subcommand("hopf-verify", "shuffle axioms and primitive concentration");
  add_common(hopf, opt);

  CLI::App* gmga = app.add_subcommand("gmga", "divided power vs truncated polynomial dictionary");
  add_common(gmga, opt);

  CLI::App* comodule = app.add_subcommand("comodule", "validate a weight-graded comodule");
  comodule->add_option("comodule", file)->required();
  add_common(comodule, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(dual)) return run_dual(opt, file);
    if (app.got_subcommand(hilbert)) return run_hilbert(opt, file);
    if (app.got_subcommand(tor)) return run_tor(opt, file);
    if (app.got_subcommand(kcheck)) return run_koszul_check(opt, file);
    if (app.got_subcommand(milnor)) return run_milnor(opt, q_flag, file);
    if (app.got_subcommand(tate)) return run_tate_check(opt, file);
    if (app.got_subcommand(vanish)) return run_vanish_check(opt, file, d_flag, d_opt->count() > 0);
    if (app.got_subcommand(predict)) return run_predict(opt, file, table_file);
    if (app.got_subcommand(hopf)) return run_hopf_verify(opt);
    if (app.got_subcommand(gmga)) return run_gmga(opt);
    if (app.got_subcommand(comodule)) return run_comodule(opt, file);
  } catch (const hilbert_mismatch_error& e) {
    std::cerr << "predict: " << e.what() << "\n";
    return 1;
  } catch (const file_error& e) {
    std::cerr << "error: file: " << e.what() << "\n";
    return 2;
  } catch (const degree_cap_error& e) {
    std::cerr << "error: degree-cap: " << e.what() << "\n";
    return 2;
  } catch (const schema_error& e) {
    std::cerr << "error: schema: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
