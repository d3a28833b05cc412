#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotan/poly.hpp"
#include "cotan/series.hpp"

namespace cotan {

// Homogeneous ideal given by generators, plus optional boolean flags from the input file.
struct IdealPresentation {
  RingPtr ring;
  std::vector<Poly> gens;
  std::map<std::string, bool> flags;

  // throws if a generator is inhomogeneous (message carries the two differing degrees)
  void validate() const;
};

// Reduced Groebner basis for the fixed degrevlex order: monic elements, no leading
// monomial divides another, tails fully reduced, sorted by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}
  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& elements() const { return elements_; }
  bool contains_unit() const;

 private:
  RingPtr ring_;
  std::vector<Poly> elements_;
};

// Buchberger completion with normal pair selection (lowest lcm degree first) and both
// classical pair-dropping criteria, followed by auto-reduction.
GroebnerBasis buchberger(const IdealPresentation& ideal);

// Remainder of full multivariate division by the basis; deterministic reducer choice.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// Minimal generating subset of the input generators (graded Nakayama, degree sweep).
std::vector<Poly> minimal_generators(const IdealPresentation& ideal);

struct IdealInvariants {
  int mu = 0;      // minimal number of generators
  int height = 0;  // ht I = dim R - dim R/I
  int dim_s = 0;   // Krull dimension of S = R/I
  bool complete_intersection = false;  // mu == height
  bool almost_complete_intersection = false;  // mu == height + 1
  bool degenerate = false;                    // I = 0 or I = (1)
  TruncSeries hilbert_s;                      // Hilbert series of S, truncated
};

IdealInvariants invariants_of_ideal(const IdealPresentation& ideal, int hilbert_order);

// Hilbert series of R/(monomial ideal) by the colon-ideal splitting recursion.
TruncSeries hilbert_series_quotient(const RingPtr& ring, const std::vector<Monomial>& monomial_gens,
                                    int order);

// The quotient ring S = R/I realized through normal forms: standard monomials are the
// per-degree bases, multiplication is polynomial product followed by reduction.
class QuotientRing {
 public:
  QuotientRing(RingPtr ring, GroebnerBasis gb);
  const RingPtr& ring() const { return ring_; }
  const GroebnerBasis& gb() const { return gb_; }
  Poly nf(const Poly& f) const { return normal_form(f, gb_); }
  // standard monomials of degree t, degrevlex-descending; cached
  const std::vector<Monomial>& std_monomials(int t) const;
  int dim(int t) const { return static_cast<int>(std_monomials(t).size()); }

 private:
  RingPtr ring_;
  GroebnerBasis gb_;
  mutable std::map<int, std::vector<Monomial>> std_cache_;
};

}  // namespace cotan
