#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotan/resolution.hpp"
#include "cotan/tate.hpp"

namespace cotan {

// Cotangent complex of the surjection R -> S = R/I, assembled from a resolvent of S
// over R: L_0 = 0 and L_i is the free S-module on the hom-degree-i variables, with
// differential the variable-linear part of the resolvent differential (products of two
// or more variables dropped) and coefficients reduced to S.
struct CotangentComplex {
  BaseRing s;
  std::vector<std::vector<int>> degrees;        // [i]: internal degrees of the L_i basis
  std::vector<std::vector<std::string>> names;  // matching resolvent variable names
  std::vector<PolyMatrix> diffs;                // [i]: L_i -> L_(i-1); [0] and [1] empty
  bool minimal = true;  // every differential entry lies in the maximal ideal

  int top() const { return static_cast<int>(degrees.size()) - 1; }
  int rank(int i) const;
};

CotangentComplex cotangent_complex(const Resolvent& x, QuotientRing s);

enum class CoeffModule { kS, kK };

// Graded homology dims of L tensored with S or K.
struct CotangentTable {
  CoeffModule coeff = CoeffModule::kS;
  std::string route;
  int i_max = 0, t_max = 0;
  std::map<std::pair<int, int>, int> dims;  // (i, t) -> dim, zero entries omitted
  // rows where only the kernel dim was available (no next differential): upper bounds
  std::vector<int> upper_bound_rows;

  int dim(int i, int t) const;
};

// dims of T_i(S/R, M)_t for 1 <= i <= i_max, 0 <= t <= t_max; rows up to top-1 are
// exact, the row i = top (if requested) is kernel-only and flagged
CotangentTable cotangent_dims(const CotangentComplex& l, CoeffModule m, int i_max, int t_max,
                              int jobs = 1);

// dims of T_(i+1)(S/R,S) per internal degree, read as the homology H_i of the
// stage-(i-1) subalgebra of the resolvent; defined for i >= 3
std::map<int, int> cotangent_via_stage_homology(const Resolvent& x, int i, int t_max);

// The conormal module I/I^2 with its presentation over S: per-degree dims computed by
// graded linear algebra in R (degree-t piece of I modulo the piece of I^2), plus the
// full relation space of S^mu -> I/I^2 per degree, in module_piece coordinates.
struct ConormalModule {
  std::vector<Poly> gens;  // minimal generators of I
  std::vector<int> degrees;
  std::map<int, int> dims;                        // t -> dim (I/I^2)_t, zeros omitted
  std::vector<std::vector<SparseVec>> relations;  // [t]: kernel of S^mu -> I/I^2
};
ConormalModule conormal_module(const IdealPresentation& ideal, const QuotientRing& s, int t_max);

}  // namespace cotan
