#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotan/cotangent.hpp"

namespace cotan {

// Koszul complex on a minimal generating set of I, with its homology algebra data:
// per-bidegree dims, minimal module generators of H_1 and H_2 (cycle representatives),
// and the per-degree dims of the product H_1*H_1 inside H_2.
struct KoszulHomology {
  DGAlgebra algebra;
  int i_max = 0, t_max = 0;
  std::map<std::pair<int, int>, int> dims;  // (i, t) -> dim H_i, zeros omitted
  std::vector<DGElement> h1_gens, h2_gens;
  std::vector<int> h1_degrees, h2_degrees;
  std::map<int, int> h1_square_dims;  // t -> dim (H_1^2)_t, zeros omitted

  int dim(int i, int t) const;
};

KoszulHomology koszul_homology(const IdealPresentation& ideal, int i_max, int t_max);

// dim T_3(S/R,S)_t = dim H_2 - dim H_1^2 per degree (zeros omitted)
std::map<int, int> t3_via_koszul(const KoszulHomology& kh);

// Per-degree dims of the exterior square of a graded module given by a presentation:
// generators of the listed degrees, and for each degree the full relation space in
// module_piece coordinates. Computed as coker(F0 (x) F1 -> /\^2 F0).
std::map<int, int> exterior_square_dims(const BaseRing& base, const std::vector<int>& gen_degrees,
                                        const std::vector<std::vector<SparseVec>>& relations,
                                        int t_max);

// Presentation of H_1 as a module over S: the retained minimal generators plus the
// full relation space per degree (kernel of S^gens -> H_1 in module_piece coordinates).
struct GradedPresentation {
  std::vector<int> gen_degrees;
  std::vector<std::vector<SparseVec>> relations;
};
GradedPresentation h1_presentation(const KoszulHomology& kh, const QuotientRing& s, int t_max);

struct DegreeCheck {
  int t = 0;
  bool ok = true;
  std::string detail;
};
struct CheckReport {
  std::string name;
  bool all_ok = true;
  std::vector<DegreeCheck> rows;

  void add(int t, bool ok, std::string detail);
};

// Dimension-level consistency of the five-term sequence
// H_3 -> T_4 -> /\^2 H_1 -> H_2 -> T_3 -> 0 per degree: exactness at H_2 gives
// dim T_3 = dim H_2 - dim H_1^2, exactness at /\^2 H_1 gives
// dim T_4 >= dim /\^2 H_1 - dim H_1^2 - dim H_3.
CheckReport tkos_sequence_check(const std::map<int, int>& h3, const std::map<int, int>& wedge_h1,
                                const std::map<int, int>& h2, const std::map<int, int>& h1_square,
                                const std::map<int, int>& t4, const std::map<int, int>& t3,
                                int t_max);

// Dimension-level consistency of T_3 -> /\^2(I/I^2) -> Tor_2(S,S) -> T_2 -> 0 per
// degree: when H_1^2 = H_2 and T_3 = 0 hold throughout the truncation the sequence is
// short exact, requiring dim Tor_2 = dim /\^2(I/I^2) + dim T_2; otherwise the
// exactness inequalities dim T_2 <= dim Tor_2 <= dim /\^2(I/I^2) + dim T_2.
CheckReport wedge_tor_check(const std::map<int, int>& tor2, const std::map<int, int>& wedge_conormal,
                            const std::map<int, int>& t2, const std::map<int, int>& t3,
                            const std::map<int, int>& h2, const std::map<int, int>& h1_square,
                            int t_max);

}  // namespace cotan
