#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotan/dg.hpp"

namespace cotan {

enum class ResolventTarget { kQuotientRing, kResidueField };

// Acyclic closure built stage by stage: stage 1 is the Koszul complex on the minimal
// generators (of I over R, or of the maximal ideal over S), and stage i adjoins
// hom-degree-i variables killing a minimal generating set of H_{i-1} of the previous
// stage. Variables are only adjoined up to the bounds, so homology statements are
// exact for internal degree <= deg_bound and hom degree < hom_bound.
struct Resolvent {
  DGAlgebra algebra;
  ResolventTarget target = ResolventTarget::kQuotientRing;
  int hom_bound = 0;
  int deg_bound = 0;
  std::vector<int> h0_expected;  // augmentation target dims per internal degree 0..deg_bound

  // deviation eps_i = number of adjoined variables of homological degree i, i = 1..up_to
  std::vector<int> deviations(int up_to) const;
  std::map<std::pair<int, int>, int> bigraded_deviations() const;
};

// minimize = false keeps the generators exactly as given for stage 1 (the resulting
// resolvent is still acyclic, just not minimal); the default minimizes them first.
Resolvent build_quotient_resolvent(const IdealPresentation& ideal, int hom_bound, int deg_bound,
                                   bool minimize = true);
Resolvent build_residue_field_resolvent(const QuotientRing& s, int hom_bound, int deg_bound);

// Minimal generators of the maximal ideal of S: the variable classes surviving modulo
// m^2, swept per weight. Linearly independent modulo m^2 by construction.
std::vector<Poly> minimal_maximal_ideal_generators(const QuotientRing& s);

struct HomologySlice {
  int dim = 0;
  std::vector<DGElement> reps;  // cycle representatives of a basis of the homology
};

// homology at (hom, t) of the subalgebra on variables adjoined at step <= step_limit
HomologySlice resolvent_homology(const DGAlgebra& algebra, int step_limit, int hom, int t);

// The degree-hom homology of the step-limited subalgebra as a graded module over the
// coefficient ring: per-degree dims plus a minimal generating set of cycle
// representatives, found by sweeping off boundaries and maximal-ideal multiples of
// lower-degree cycles (graded Nakayama).
struct HomologyModule {
  std::map<int, int> dims;        // t -> dim of the homology in internal degree t
  std::vector<DGElement> gens;    // minimal module generators, ascending internal degree
  std::vector<int> gen_degrees;   // internal degrees matching gens
};
HomologyModule homology_module(const DGAlgebra& algebra, int step_limit, int hom, int deg_bound);

struct AcyclicityCertificate {
  int hom_checked = 0;  // homology verified to vanish for 1 <= hom <= hom_checked
  int deg_bound = 0;
  bool acyclic = true;
  std::vector<std::string> failures;              // human-readable nonzero slots
  std::map<std::pair<int, int>, int> dims_found;  // offending (hom, t) -> dim
};

// Verifies H_i of the full resolvent vanishes for 1 <= i < hom_bound, t <= deg_bound,
// and that H_0 matches the recorded augmentation target dimensions.
AcyclicityCertificate certify_acyclicity(const Resolvent& resolvent);

}  // namespace cotan
