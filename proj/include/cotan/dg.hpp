#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotan/free_module.hpp"
#include "cotan/groebner.hpp"
#include "cotan/linalg.hpp"
#include "cotan/poly.hpp"

namespace cotan {

class DGAlgebra;

// Multiplicative word in the adjoined variables, kept in canonical form: even
// homological-degree variables as (id, exponent) pairs sorted by id, odd ones as a
// strictly increasing id list. Odd squares vanish; reordering odd factors costs signs,
// which element operations account for, so a stored word always carries sign +1.
struct VarWord {
  std::vector<std::pair<int, int>> evens;  // id -> exponent >= 1
  std::vector<int> odds;                   // strictly ascending ids

  bool trivial() const { return evens.empty() && odds.empty(); }
  auto operator<=>(const VarWord&) const = default;
};

// Sum of terms coeff * word with coefficients in the base ring (reduced to normal form
// when the base is a quotient). Zero polynomials are never stored.
struct DGElement {
  std::map<VarWord, Poly> terms;
  bool is_zero() const { return terms.empty(); }
};

struct DGVariable {
  int id = 0;
  std::string name;
  int hom_degree = 0;  // >= 1; parity decides commutation behavior
  int int_degree = 0;
  DGElement boundary;       // element of bidegree (hom_degree - 1, int_degree)
  int adjunction_step = 0;  // resolvent stage that created the variable
};

// Basis of one bidegree (hom, t) of the algebra restricted to variables adjoined at
// step <= step_limit: labels are (word, base monomial) pairs in a fixed order.
struct BidegreeBasis {
  int step_limit = 0, hom = 0, t = 0;
  std::vector<std::pair<VarWord, Monomial>> labels;
  std::map<std::pair<VarWord, Monomial>, int> index;

  int dim() const { return static_cast<int>(labels.size()); }
};

// Free graded-commutative differential algebra over R (or S = R/I when a quotient is
// supplied): odd variables are exterior, even variables polynomial, and the
// differential extends the variable boundaries by the Leibniz rule. Requires Q
// coefficients; even powers are plain powers with d(T^j) = j z T^(j-1).
class DGAlgebra {
 public:
  explicit DGAlgebra(RingPtr ring) : ring_(std::move(ring)) {}
  DGAlgebra(RingPtr ring, QuotientRing base) : ring_(std::move(ring)), base_(std::move(base)) {}

  const RingPtr& ring() const { return ring_; }
  const QuotientRing* quotient() const { return base_ ? &*base_ : nullptr; }
  Poly reduce(const Poly& p) const { return base_ ? base_->nf(p) : p; }
  const std::vector<Monomial>& coeff_monomials(int t) const;

  // variables must be adjoined in nondecreasing homological degree and step
  int add_variable(std::string name, int hom_degree, int int_degree, DGElement boundary, int step);
  const DGVariable& variable(int id) const { return vars_.at(id); }
  int var_count() const { return static_cast<int>(vars_.size()); }
  int max_step() const { return max_step_; }
  std::vector<int> variables_of_step(int step) const;
  std::vector<int> variables_of_hom_degree(int hom) const;

  DGElement zero() const { return {}; }
  DGElement coeff_element(const Poly& c) const;
  DGElement var_element(int id) const;

  DGElement add(const DGElement& a, const DGElement& b) const;
  DGElement scale(const DGElement& a, const Rat& c) const;
  DGElement mul(const DGElement& a, const DGElement& b) const;
  DGElement mul_poly(const Poly& c, const DGElement& a) const;
  DGElement differential(const DGElement& a) const;

  int word_hom_degree(const VarWord& w) const;
  int word_int_degree(const VarWord& w) const;
  // (hom, int) degree of a bihomogeneous nonzero element
  std::optional<std::pair<int, int>> bidegree(const DGElement& a) const;
  std::string to_string(const DGElement& a) const;

  BidegreeBasis basis(int step_limit, int hom, int t) const;
  // differential matrix from src into dst; requires src.hom == dst.hom + 1, src.t == dst.t
  SparseMatrixQ diff_matrix(const BidegreeBasis& src, const BidegreeBasis& dst) const;

  SparseVec to_vector(const DGElement& a, const BidegreeBasis& basis) const;
  DGElement from_vector(const SparseVec& v, const BidegreeBasis& basis) const;
  LabeledFreeModule to_free_module(const BidegreeBasis& basis) const;

 private:
  void check_term(const VarWord& w) const;
  RingPtr ring_;
  std::optional<QuotientRing> base_;
  std::vector<DGVariable> vars_;
  int max_step_ = 0;
  mutable std::map<int, std::vector<Monomial>> free_monomials_;
};

// Adjoins one variable per cycle at the given homological degree, after verifying each
// is a cycle of homological degree hom_degree - 1. Zero cycles are permitted but need
// zero_cycle_int_degree to fix the new variable's internal degree. Returns new ids.
std::vector<int> adjoin_variables(DGAlgebra& algebra, const std::vector<DGElement>& cycles,
                                  int hom_degree, int step, int zero_cycle_int_degree = -1);

}  // namespace cotan
