#include "cotan/ci_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cotan {

namespace {

constexpr int kResidueFieldDepth = 8;

std::map<int, int> table_row(const CotangentTable& table, int i) {
  std::map<int, int> out;
  for (const auto& [key, d] : table.dims)
    if (key.first == i) out[key.second] = d;
  return out;
}

ResolutionSummary summarize(const FreeResolution& res) {
  ResolutionSummary s;
  s.complete = res.complete;
  s.length = res.length();
  for (int i = 0; i <= res.length(); ++i) s.betti.push_back(res.betti(i));
  return s;
}

void run_mahler(CIReport& rep, const ClassifyOptions& opts) {
  MahlerPipeline& mp = rep.mahler;
  std::vector<Int> seq(rep.k_resolution.betti.begin(), rep.k_resolution.betti.end());
  // a completed resolution certifies all later Betti numbers vanish
  if (rep.k_resolution.complete)
    seq.resize(kResidueFieldDepth + 1, Int(0));
  auto rec = recurrence_guess(seq, kResidueFieldDepth);
  if (!rec) {
    mp.note = "no linear recurrence matches the computed Betti window";
    return;
  }
  mp.recurrence_order = rec->order;
  mp.recurrence_coeffs = rec->coeffs;
  mp.numerator = rec->numerator;
  try {
    int n = 4 * opts.r_max;
    std::vector<Int> extended = extend_by_recurrence(seq, *rec, n);
    mp.extended_len = n;
    std::vector<Rat> coeffs(extended.begin(), extended.end());
    std::vector<Int> eps_ext = deviations_from_poincare(TruncSeries(std::move(coeffs)));
    mp.prefix_ok = true;
    for (int i = 1; i <= opts.hom_bound && i < static_cast<int>(eps_ext.size()); ++i)
      if (eps_ext[i] != rep.deviations[i]) mp.prefix_ok = false;
    AlphaSequence as = alpha_sequence(eps_ext, n - 1);
    mp.alpha = std::move(as.alpha);
    mp.pattern = mahler_zero_pattern(mp.alpha, opts.r_max, 2 * opts.r_max);
    mp.ran = true;
    if (!mp.prefix_ok)
      rep.notes.push_back(
          "extrapolated deviations disagree with the directly computed ones; the "
          "recurrence window is too short to trust");
  } catch (const std::domain_error& e) {
    mp.note = std::string("extended Betti series has no deviation product form: ") + e.what();
  }
}

}  // namespace

std::string tri_state_name(TriState v) {
  switch (v) {
    case TriState::kYes:
      return "yes";
    case TriState::kNo:
      return "no";
    default:
      return "not applicable";
  }
}

CIReport classify(const IdealPresentation& ideal, const ClassifyOptions& opts) {
  if (opts.hom_bound < 5) throw std::invalid_argument("classify needs hom_bound >= 5");
  if (opts.deg_bound < 2) throw std::invalid_argument("classify needs deg_bound >= 2");
  if (opts.series_order < opts.hom_bound)
    throw std::invalid_argument("classify needs series_order >= hom_bound");
  if (opts.jobs < 1 || opts.r_max < 1)
    throw std::invalid_argument("classify needs jobs >= 1 and r_max >= 1");
  ideal.validate();
  GroebnerBasis gb = buchberger(ideal);
  if (gb.contains_unit())
    throw std::invalid_argument("the unit ideal does not define a quotient ring");
  QuotientRing s(ideal.ring, gb);
  BaseRing sbase(s);
  int nvars = ideal.ring->nvars();

  CIReport rep;
  rep.opts = opts;
  rep.invariants = invariants_of_ideal(ideal, opts.series_order);
  rep.verdict = rep.invariants.complete_intersection ? "complete intersection"
                                                     : "not a complete intersection";

  std::vector<Poly> mingens = minimal_generators(ideal);
  FreeResolution rres =
      minimal_resolution(BaseRing(ideal.ring), mingens, std::max(nvars + 1, 3), opts.deg_bound);
  rep.r_resolution = summarize(rres);
  if (rres.complete) {
    rep.perfect = rres.length() == rep.invariants.height ? TriState::kYes : TriState::kNo;
    if (rep.perfect == TriState::kYes)
      rep.gorenstein = rres.betti(rres.length()) == 1 ? TriState::kYes : TriState::kNo;
  } else {
    rep.notes.push_back(
        "minimal resolution over the base ring did not terminate within the bounds; "
        "perfection left undetermined");
  }
  for (const auto& [key, d] : tor_table_vs(rres, sbase, opts.deg_bound))
    if (key.first == 2) rep.tor2[key.second] = d;

  // one stage beyond hom_bound so T_i is exact through i = hom_bound; the extra stage
  // catches late first-nonvanishing (an almost complete intersection can have
  // T_2 = ... = T_4 = 0 with T_5 != 0)
  Resolvent x = build_quotient_resolvent(ideal, opts.hom_bound + 1, opts.deg_bound);
  CotangentComplex l = cotangent_complex(x, s);
  CotangentTable ts =
      cotangent_dims(l, CoeffModule::kS, opts.hom_bound, opts.deg_bound, opts.jobs);
  for (int i = 2; i <= opts.hom_bound; ++i) {
    VanishingRow row;
    row.i = i;
    row.dims = table_row(ts, i);
    row.vanishes = row.dims.empty();
    if (!row.vanishes) rep.cotangent_all_vanish = false;
    rep.cotangent.push_back(std::move(row));
  }

  Resolvent y = build_residue_field_resolvent(s, opts.hom_bound, opts.deg_bound);
  rep.deviations = y.deviations(opts.hom_bound);
  rep.l_ranks.assign(opts.hom_bound + 1, 0);
  for (int i = 1; i <= std::min(l.top(), opts.hom_bound); ++i) rep.l_ranks[i] = l.rank(i);
  // a degree-one generator contributes to L_1 but lowers eps_1 instead of raising
  // eps_2, so the i = 1 comparison carries the embedding-dimension correction
  for (int i = 1; i < opts.hom_bound; ++i) {
    int expected = rep.deviations[i + 1] + (i == 1 ? nvars - rep.deviations[1] : 0);
    if (rep.l_ranks[i] != expected) rep.rank_shift_ok = false;
  }

  rep.tail.vanishes = false;
  for (int i = 2; i <= opts.hom_bound && !rep.tail.vanishes; ++i) {
    bool zero = true;
    for (int j = i; j <= opts.hom_bound; ++j) zero = zero && rep.deviations[j] == 0;
    if (zero) {
      rep.tail.vanishes = true;
      rep.tail.from = i;
    }
  }
  if (!rep.tail.vanishes)
    for (int i = 1; i <= opts.hom_bound; ++i)
      if (rep.deviations[i] > 0) rep.tail.positive_through = i;

  int max_weight = 1;
  for (int w : ideal.ring->weights) max_weight = std::max(max_weight, w);
  FreeResolution kres =
      minimal_resolution(BaseRing(s), minimal_maximal_ideal_generators(s), kResidueFieldDepth,
                         std::max(opts.deg_bound, kResidueFieldDepth * max_weight));
  rep.k_resolution = summarize(kres);

  {
    std::vector<Int> eps(rep.deviations.begin(), rep.deviations.end());
    TruncSeries p = poincare_from_deviations(eps, opts.hom_bound);
    int avail = rep.k_resolution.complete ? opts.hom_bound
                                          : static_cast<int>(rep.k_resolution.betti.size()) - 1;
    for (int i = 0; i <= std::min(opts.hom_bound, avail); ++i) {
      int beta = i < static_cast<int>(rep.k_resolution.betti.size()) ? rep.k_resolution.betti[i] : 0;
      if (p[i].get_den() != 1) throw std::logic_error("deviation product has a non-integer term");
      rep.poincare.product_coeffs.push_back(p[i].get_num());
      rep.poincare.betti.push_back(beta);
      if (p[i] != beta) rep.poincare.ok = false;
    }
  }

  run_mahler(rep, opts);

  KoszulHomology kh = koszul_homology(ideal, 3, opts.deg_bound);
  std::map<int, int> h2, h3;
  for (const auto& [key, d] : kh.dims) {
    if (key.first == 2) h2[key.second] = d;
    if (key.first == 3) h3[key.second] = d;
  }
  GradedPresentation pres = h1_presentation(kh, s, opts.deg_bound);
  std::map<int, int> wedge_h1 =
      exterior_square_dims(sbase, pres.gen_degrees, pres.relations, opts.deg_bound);
  rep.tkos = tkos_sequence_check(h3, wedge_h1, h2, kh.h1_square_dims, table_row(ts, 4),
                                 table_row(ts, 3), opts.deg_bound);

  ConormalModule con = conormal_module(ideal, s, opts.deg_bound);
  std::map<int, int> wedge_con =
      exterior_square_dims(sbase, con.degrees, con.relations, opts.deg_bound);
  rep.wedge = wedge_tor_check(rep.tor2, wedge_con, table_row(ts, 2), table_row(ts, 3), h2,
                              kh.h1_square_dims, opts.deg_bound);

  rep.conjecture_consistent = rep.invariants.complete_intersection == rep.cotangent_all_vanish;
  return rep;
}

}  // namespace cotan
