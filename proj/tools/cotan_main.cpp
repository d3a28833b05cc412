#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cotan/ci_analysis.hpp"
#include "cotan/ideal_file.hpp"
#include "cotan/json_out.hpp"

namespace {

using namespace cotan;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTruncated = 2;

struct CommonArgs {
  std::string file;
  ClassifyOptions opts;
  std::string module = "S";
  std::string format = "json";
  std::string out;
};

void add_output_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  cmd->add_option("--out", a.out, "write output to this path instead of stdout");
}

void add_bound_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--hom-bound", a.opts.hom_bound, "homological truncation")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--deg-bound", a.opts.deg_bound, "internal degree truncation")
      ->check(CLI::Range(1, 512))
      ->capture_default_str();
  cmd->add_option("--series-order", a.opts.series_order, "power series truncation")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  cmd->add_option("--jobs", a.opts.jobs, "worker threads for independent degree slots")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd->add_option("--r-max", a.opts.r_max, "largest zero-pattern modulus searched")
      ->check(CLI::Range(1, 128))
      ->capture_default_str();
}

void add_module_flag(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--module", a.module, "coefficient module")
      ->check(CLI::IsMember({"S", "K"}))
      ->capture_default_str();
}

int emit(const CommonArgs& a, const Json& doc, const std::string& md, int code) {
  std::string text = a.format == "md" ? md : doc.dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write to " + a.out);
    f << text;
  }
  return code;
}

struct LoadedIdeal {
  std::string bytes;
  IdealPresentation ideal;
};

LoadedIdeal load(const CommonArgs& a) {
  LoadedIdeal li;
  li.bytes = read_file_bytes(a.file);
  li.ideal = parse_ideal_text(li.bytes);
  return li;
}

int max_ring_weight(const RingPtr& ring) {
  int w = 1;
  for (int x : ring->weights) w = std::max(w, x);
  return w;
}

int run_invariants(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  IdealInvariants inv = invariants_of_ideal(li.ideal, a.opts.series_order);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  Json r;
  r["mu"] = inv.mu;
  r["height"] = inv.height;
  r["dim_s"] = inv.dim_s;
  r["complete_intersection"] = inv.complete_intersection;
  r["almost_complete_intersection"] = inv.almost_complete_intersection;
  r["degenerate"] = inv.degenerate;
  r["hilbert_s"] = series_json(inv.hilbert_s);
  doc["reports"] = Json{{"invariants", r}};
  std::ostringstream md;
  md << "# ideal invariants\n\n- mu = " << inv.mu << "\n- height = " << inv.height
     << "\n- dim S = " << inv.dim_s << "\n- complete intersection: "
     << (inv.complete_intersection ? "yes" : "no") << "\n- almost complete intersection: "
     << (inv.almost_complete_intersection ? "yes" : "no") << "\n- hilbert series: "
     << series_to_string(inv.hilbert_s) << "\n";
  return emit(a, doc, md.str(), kExitOk);
}

int run_resolve(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no resolution here");
  FreeResolution res = [&] {
    if (a.module == "S")
      return minimal_resolution(BaseRing(li.ideal.ring), minimal_generators(li.ideal),
                                std::max(li.ideal.ring->nvars() + 1, a.opts.hom_bound),
                                a.opts.deg_bound);
    QuotientRing s(li.ideal.ring, gb);
    return minimal_resolution(
        BaseRing(s), minimal_maximal_ideal_generators(s), a.opts.hom_bound,
        std::max(a.opts.deg_bound, a.opts.hom_bound * max_ring_weight(li.ideal.ring)));
  }();
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  Json r;
  r["module"] = a.module == "S" ? "S over R" : "K over S";
  r["complete"] = res.complete;
  r["length"] = res.length();
  std::vector<int> betti;
  for (int i = 0; i <= res.length(); ++i) betti.push_back(res.betti(i));
  r["betti"] = betti;
  std::map<std::pair<int, int>, int> graded = res.graded_betti();
  doc["tables"] = Json{{"graded_betti", bigraded_json(graded)}};
  doc["reports"] = Json{{"resolution", r}};
  std::ostringstream md;
  md << "# minimal free resolution (" << r["module"].get<std::string>() << ")\n\n"
     << (res.complete ? "resolution terminates" : "truncated at the bounds") << ", betti:";
  for (int b : betti) md << " " << b;
  md << "\n\n" << bigraded_markdown(graded, 0, res.length(), a.opts.deg_bound, "i\\t");
  return emit(a, doc, md.str(), res.complete ? kExitOk : kExitTruncated);
}

int run_koszul(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  KoszulHomology kh = koszul_homology(li.ideal, std::max(3, a.opts.hom_bound - 1), a.opts.deg_bound);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  Json tables;
  tables["koszul_homology"] = bigraded_json(kh.dims);
  tables["h1_square"] = degree_map_json(kh.h1_square_dims);
  tables["t3_via_koszul"] = degree_map_json(t3_via_koszul(kh));
  doc["tables"] = tables;
  Json r;
  r["h1_generator_degrees"] = kh.h1_degrees;
  r["h2_generator_degrees"] = kh.h2_degrees;
  doc["reports"] = Json{{"koszul", r}};
  std::ostringstream md;
  md << "# Koszul homology of the minimal generators\n\n"
     << bigraded_markdown(kh.dims, 0, kh.i_max, a.opts.deg_bound, "i\\t");
  return emit(a, doc, md.str(), kExitOk);
}

int run_tate(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no resolvent");
  Resolvent x = [&] {
    if (a.module == "S") return build_quotient_resolvent(li.ideal, a.opts.hom_bound, a.opts.deg_bound);
    QuotientRing s(li.ideal.ring, gb);
    return build_residue_field_resolvent(s, a.opts.hom_bound, a.opts.deg_bound);
  }();
  AcyclicityCertificate cert = certify_acyclicity(x);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  doc["tables"] = Json{{"bigraded_deviations", bigraded_json(x.bigraded_deviations())}};
  Json r;
  r["target"] = a.module == "S" ? "S over R" : "K over S";
  r["deviations"] = x.deviations(a.opts.hom_bound);
  r["acyclic_within_bounds"] = cert.acyclic;
  r["hom_checked"] = cert.hom_checked;
  if (!cert.acyclic) r["failures"] = cert.failures;
  doc["reports"] = Json{{"resolvent", r}};
  std::ostringstream md;
  md << "# Tate resolvent (" << r["target"].get<std::string>() << ")\n\n- deviations:";
  for (size_t i = 1; i < x.deviations(a.opts.hom_bound).size(); ++i)
    md << " " << x.deviations(a.opts.hom_bound)[i];
  md << "\n- acyclic within bounds: " << (cert.acyclic ? "yes" : "NO") << "\n";
  return emit(a, doc, md.str(), kExitOk);
}

int run_cotangent(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no cotangent complex");
  QuotientRing s(li.ideal.ring, gb);
  // one stage beyond the requested window keeps the top homology row exact
  Resolvent x = build_quotient_resolvent(li.ideal, a.opts.hom_bound + 1, a.opts.deg_bound);
  CotangentComplex l = cotangent_complex(x, s);
  CoeffModule m = a.module == "S" ? CoeffModule::kS : CoeffModule::kK;
  CotangentTable table =
      cotangent_dims(l, m, a.opts.hom_bound, a.opts.deg_bound, a.opts.jobs);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  doc["tables"] = Json{{"cotangent", bigraded_json(table.dims)}};
  Json r;
  r["module"] = a.module;
  r["route"] = table.route;
  r["i_max"] = table.i_max;
  r["minimal_complex"] = l.minimal;
  doc["reports"] = Json{{"cotangent", r}};
  std::ostringstream md;
  md << "# cotangent homology, coefficients " << a.module << "\n\n"
     << bigraded_markdown(table.dims, 1, table.i_max, a.opts.deg_bound, "i\\t");
  return emit(a, doc, md.str(), kExitOk);
}

int run_deviations(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no residue field data");
  QuotientRing s(li.ideal.ring, gb);
  Resolvent y = build_residue_field_resolvent(s, a.opts.hom_bound, a.opts.deg_bound);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  doc["tables"] = Json{{"bigraded_deviations", bigraded_json(y.bigraded_deviations())}};
  doc["reports"] = Json{{"deviations", Json{{"eps", y.deviations(a.opts.hom_bound)}}}};
  std::ostringstream md;
  md << "# deviations of the residue field map\n\n| i | eps_i |\n|---|---|\n";
  std::vector<int> eps = y.deviations(a.opts.hom_bound);
  for (size_t i = 1; i < eps.size(); ++i) md << "| " << i << " | " << eps[i] << " |\n";
  return emit(a, doc, md.str(), kExitOk);
}

int run_poincare(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no residue field data");
  QuotientRing s(li.ideal.ring, gb);
  Resolvent y = build_residue_field_resolvent(s, a.opts.hom_bound, a.opts.deg_bound);
  std::vector<int> eps = y.deviations(a.opts.hom_bound);
  std::vector<Int> eps_int(eps.begin(), eps.end());
  TruncSeries p = poincare_from_deviations(eps_int, a.opts.hom_bound);
  FreeResolution kres = minimal_resolution(
      BaseRing(s), minimal_maximal_ideal_generators(s), a.opts.hom_bound,
      std::max(a.opts.deg_bound, a.opts.hom_bound * max_ring_weight(li.ideal.ring)));
  bool ok = true;
  std::vector<int> betti;
  for (int i = 0; i <= a.opts.hom_bound; ++i) {
    int b = i <= kres.length() ? kres.betti(i) : 0;
    if (i > kres.length() && !kres.complete) break;
    betti.push_back(b);
    if (p[i] != b) ok = false;
  }
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  Json r;
  r["eps"] = eps;
  r["product_series"] = series_json(p);
  r["betti"] = betti;
  r["match"] = ok;
  doc["reports"] = Json{{"poincare", r}};
  std::ostringstream md;
  md << "# Poincare series from the deviation product\n\n- series: " << series_to_string(p)
     << "\n- betti:";
  for (int b : betti) md << " " << b;
  md << "\n- match: " << (ok ? "yes" : "NO") << "\n";
  return emit(a, doc, md.str(), kExitOk);
}

int run_alpha(const CommonArgs& a) {
  LoadedIdeal li = load(a);
  GroebnerBasis gb = buchberger(li.ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no residue field data");
  QuotientRing s(li.ideal.ring, gb);
  Resolvent y = build_residue_field_resolvent(s, a.opts.hom_bound, a.opts.deg_bound);
  std::vector<int> eps = y.deviations(a.opts.hom_bound);
  std::vector<Int> eps_int(eps.begin(), eps.end());
  AlphaSequence as = alpha_sequence(eps_int, a.opts.hom_bound);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  Json r;
  r["eps"] = int_list_json(as.eps);
  r["alpha"] = int_list_json(as.alpha);
  doc["reports"] = Json{{"alpha", r}};
  std::ostringstream md;
  md << "# alpha sequence\n\n| i | eps_i | alpha_i |\n|---|---|---|\n";
  for (size_t i = 1; i < as.alpha.size(); ++i)
    md << "| " << i << " | " << as.eps[i] << " | " << as.alpha[i] << " |\n";
  return emit(a, doc, md.str(), kExitOk);
}

int run_mahler(const CommonArgs& a, const std::string& input) {
  std::string bytes = read_file_bytes(input);
  std::vector<Rat> seq = parse_sequence_text(bytes);
  ZeroPatternReport report = mahler_zero_pattern(seq, a.opts.r_max, 2 * a.opts.r_max);
  Json doc = document_shell(input, bytes, nullptr, a.opts);
  doc["reports"] = Json{{"zero_pattern", zero_pattern_json(report)}};
  std::ostringstream md;
  md << "# zero pattern\n\n- verdict: " << zero_pattern_verdict_name(report.verdict) << "\n";
  if (report.verdict == ZeroPatternVerdict::kConsistent) {
    md << "- r = " << report.r << ", i0 = " << report.i0 << ", residues:";
    for (int c : report.residues) md << " " << c;
    md << "\n";
  }
  int code = report.verdict == ZeroPatternVerdict::kInconclusive ? kExitTruncated : kExitOk;
  return emit(a, doc, md.str(), code);
}

int run_report(const CommonArgs& a, bool full) {
  LoadedIdeal li = load(a);
  CIReport rep = classify(li.ideal, a.opts);
  Json doc = document_shell(a.file, li.bytes, &li.ideal, a.opts);
  if (full) {
    doc["reports"] = Json{{"classification", ci_report_json(rep)}};
    return emit(a, doc, ci_report_markdown(rep),
                rep.r_resolution.complete ? kExitOk : kExitTruncated);
  }
  Json r;
  r["verdict"] = rep.verdict;
  r["cotangent_all_vanish"] = rep.cotangent_all_vanish;
  r["conjecture_consistent"] = rep.conjecture_consistent;
  r["rank_shift_ok"] = rep.rank_shift_ok;
  r["poincare_ok"] = rep.poincare.ok;
  r["checks_ok"] = rep.tkos.all_ok && rep.wedge.all_ok;
  doc["reports"] = Json{{"ci_check", r}};
  std::ostringstream md;
  md << "# ci check\n\n- verdict: **" << rep.verdict << "**\n- cotangent rows vanish: "
     << (rep.cotangent_all_vanish ? "yes" : "no") << "\n- conjecture consistent: "
     << (rep.conjecture_consistent ? "yes" : "no") << "\n";
  return emit(a, doc, md.str(), rep.r_resolution.complete ? kExitOk : kExitTruncated);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded quotient analysis: resolvents, cotangent homology, deviations"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string mahler_input;
  std::function<int()> runner;

  auto add_ideal_command = [&](const std::string& name, const std::string& help, bool with_module,
                               std::function<int()> fn) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", args.file, "ideal file")->required();
    add_bound_flags(cmd, args);
    if (with_module) add_module_flag(cmd, args);
    add_output_flags(cmd, args);
    cmd->callback([&runner, fn] { runner = fn; });
    return cmd;
  };

  add_ideal_command("invariants", "generator count, height, dimension, Hilbert series", false,
                    [&] { return run_invariants(args); });
  add_ideal_command("resolve", "minimal graded free resolution", true,
                    [&] { return run_resolve(args); });
  add_ideal_command("koszul", "Koszul homology of the minimal generators", false,
                    [&] { return run_koszul(args); });
  add_ideal_command("tate", "Tate resolvent with acyclicity certificate", true,
                    [&] { return run_tate(args); });
  add_ideal_command("cotangent", "cotangent homology table", true,
                    [&] { return run_cotangent(args); });
  add_ideal_command("deviations", "deviations of the residue field map", false,
                    [&] { return run_deviations(args); });
  add_ideal_command("poincare", "Poincare series product form vs Betti numbers", false,
                    [&] { return run_poincare(args); });
  add_ideal_command("alpha", "alpha sequence from the deviations", false,
                    [&] { return run_alpha(args); });
  add_ideal_command("ci-check", "complete intersection verdict summary", false,
                    [&] { return run_report(args, false); });
  add_ideal_command("report", "full classification report", false,
                    [&] { return run_report(args, true); });

  CLI::App* mahler = app.add_subcommand("mahler", "zero pattern of a sequence file");
  mahler->add_option("--input", mahler_input, "one rational per line")->required();
  mahler->add_option("--r-max", args.opts.r_max, "largest modulus searched")
      ->check(CLI::Range(1, 128))
      ->capture_default_str();
  add_output_flags(mahler, args);
  mahler->callback([&] { runner = [&] { return run_mahler(args, mahler_input); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return runner();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
}
