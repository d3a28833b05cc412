#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotan/cotangent.hpp"
#include "cotan/koszul_tor.hpp"
#include "cotan/series_lab.hpp"

namespace cotan {

struct ClassifyOptions {
  int hom_bound = 5;    // resolvent stages; >= 5 so degree-4 cotangent rows are exact
  int deg_bound = 10;   // internal degree truncation for all graded computations
  int series_order = 32;
  int jobs = 1;
  int r_max = 16;       // zero-pattern moduli searched
};

enum class TriState { kYes, kNo, kNotApplicable };
std::string tri_state_name(TriState v);

struct VanishingRow {
  int i = 0;
  bool vanishes = true;
  std::map<int, int> dims;  // t -> dim T_i(S/R,S)_t, nonzero entries only
};

struct ResolutionSummary {
  bool complete = false;  // last kernel vanished within the degree bound
  int length = 0;         // index of the last free module built
  std::vector<int> betti;
};

struct DeviationTail {
  bool vanishes = false;
  int from = 0;              // smallest i >= 2 with eps_j = 0 for i <= j <= hom_bound
  int positive_through = 0;  // largest index with eps > 0 when the tail never vanishes
};

struct PoincareCheck {
  bool ok = true;
  std::vector<Int> product_coeffs;  // from the deviation product, exact through hom_bound
  std::vector<int> betti;           // matching Betti numbers of K over S
};

// Rationality probe for the Betti sequence of K: guess a recurrence from the computed
// window, extend, re-extract deviations from the extended series, cross-check the
// prefix, and test the zero pattern of the associated alpha sequence.
struct MahlerPipeline {
  bool ran = false;
  std::string note;
  int recurrence_order = 0;
  std::vector<Rat> recurrence_coeffs;
  std::vector<Rat> numerator;
  int extended_len = 0;
  bool prefix_ok = false;
  std::vector<Int> alpha;  // index-aligned, [0] = 0
  ZeroPatternReport pattern;
};

struct CIReport {
  ClassifyOptions opts;
  IdealInvariants invariants;
  std::string verdict;  // "complete intersection" or "not a complete intersection"
  TriState perfect = TriState::kNotApplicable;
  TriState gorenstein = TriState::kNotApplicable;
  ResolutionSummary r_resolution;          // minimal resolution of S over R
  std::map<int, int> tor2;                 // t -> dim Tor_2(S,S)_t over the base ring
  std::vector<VanishingRow> cotangent;     // T_i(S/R,S) for i = 2..hom_bound
  bool cotangent_all_vanish = true;
  std::vector<int> deviations;             // index-aligned eps of K over S, [0] = 0
  std::vector<int> l_ranks;                // index-aligned ranks of L, [0] = 0
  // rank L_i == eps_(i+1) for 2 <= i < hom_bound; at i = 1 the degree-one generators
  // shift between the two sides, so rank L_1 == eps_2 + (nvars - eps_1)
  bool rank_shift_ok = true;
  DeviationTail tail;
  ResolutionSummary k_resolution;          // minimal resolution of K over S, depth 8
  PoincareCheck poincare;
  MahlerPipeline mahler;
  CheckReport tkos;   // stage-one homology sequence dims
  CheckReport wedge;  // conormal wedge vs Tor_2 dims
  bool conjecture_consistent = true;  // CI verdict iff all middle cotangent rows vanish
  std::vector<std::string> notes;
};

// Full classification battery for a homogeneous ideal; throws invalid_argument on the
// unit ideal or out-of-range options. The zero ideal classifies as a complete
// intersection with every cotangent row zero.
CIReport classify(const IdealPresentation& ideal, const ClassifyOptions& opts);

}  // namespace cotan
