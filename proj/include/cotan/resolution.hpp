#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cotan/groebner.hpp"
#include "cotan/linalg.hpp"

namespace cotan {

// Coefficient base for module computations: the free polynomial ring, or a quotient of
// it acting through normal forms.
class BaseRing {
 public:
  explicit BaseRing(RingPtr ring) : ring_(std::move(ring)) {}
  explicit BaseRing(QuotientRing quot) : ring_(quot.ring()), quot_(std::move(quot)) {}

  const RingPtr& ring() const { return ring_; }
  const QuotientRing* quotient() const { return quot_ ? &*quot_ : nullptr; }
  Poly reduce(const Poly& p) const { return quot_ ? quot_->nf(p) : p; }
  const std::vector<Monomial>& monomials(int t) const;
  int dim(int t) const { return static_cast<int>(monomials(t).size()); }

 private:
  RingPtr ring_;
  std::optional<QuotientRing> quot_;
  mutable std::map<int, std::vector<Monomial>> free_cache_;
};

// Sparse matrix with polynomial entries; zero entries are never stored.
struct PolyMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Poly> entries;

  void set(int r, int c, Poly p);
  const Poly* get(int r, int c) const;
};

// Degree-t piece of a graded free module with the given generator degrees: labels are
// (generator index, base monomial of degree t - deg_k) pairs.
struct PieceBasis {
  std::vector<std::pair<int, Monomial>> labels;
  std::map<std::pair<int, Monomial>, int> index;

  int dim() const { return static_cast<int>(labels.size()); }
};

PieceBasis module_piece(const BaseRing& base, const std::vector<int>& degrees, int t);

// Matrix of the degree-t piece of a graded map between free modules.
SparseMatrixQ expand_matrix(const BaseRing& base, const PolyMatrix& d,
                            const std::vector<int>& src_degrees,
                            const std::vector<int>& dst_degrees, int t);

// Minimal graded free resolution of the cyclic module base/(gens), built step by step:
// F_(i+1) is the free module on a minimal generating set of ker d_i, found per internal
// degree by sweeping off maximal-ideal multiples of lower-degree kernel elements.
// Graded data is exact for internal degree <= deg_bound; `complete` records whether the
// last kernel vanished in every degree within the bound.
struct FreeResolution {
  BaseRing base;
  int hom_bound = 0;
  int deg_bound = 0;
  std::vector<std::vector<int>> degrees;  // degrees[i] = generator degrees of F_i
  std::vector<PolyMatrix> diffs;          // diffs[i]: F_i -> F_(i-1); diffs[0] unused
  bool complete = false;

  int length() const { return static_cast<int>(degrees.size()) - 1; }
  int betti(int i) const;
  std::map<std::pair<int, int>, int> graded_betti() const;
  // every differential entry lies in the maximal ideal
  bool is_minimal() const;
};

FreeResolution minimal_resolution(BaseRing base, const std::vector<Poly>& gens, int hom_bound,
                                  int deg_bound);

// Graded dims of Tor_i(coker, residue field) read off a minimal resolution.
std::map<std::pair<int, int>, int> tor_table(const FreeResolution& res);

// Graded dims of Tor_i(coker, with-coker): the resolution tensored with `with` and
// homology taken per internal degree t <= min(t_max, deg_bound). Only nonzero dims
// are stored.
std::map<std::pair<int, int>, int> tor_table_vs(const FreeResolution& res, const BaseRing& with,
                                                int t_max);

}  // namespace cotan
