#pragma once

#include <map>
#include <optional>

#include "cotan/rational.hpp"
#include "cotan/ring.hpp"

namespace cotan {

// Sparse multivariate polynomial over Q with terms kept in degrevlex-descending order,
// so begin() is the leading term. Zero terms are never stored.
class Poly {
 public:
  struct MonoGreater {
    RingPtr ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return degrevlex_less(*ring, b, a);
    }
  };
  using TermMap = std::map<Monomial, Rat, MonoGreater>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)), terms_(MonoGreater{ring_}) {}
  Poly(RingPtr ring, const Rat& c) : Poly(std::move(ring)) {
    if (c != 0) terms_.emplace(Monomial(ring_->nvars(), 0), c);
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rat& c);

  const Monomial& leading_monomial() const;
  const Rat& leading_coeff() const;

  // weighted degree of the leading term; -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  // the two distinct term degrees witnessing inhomogeneity, if any
  std::optional<std::pair<int, int>> inhomogeneity_witness() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly mono_multiple(const Monomial& m, const Rat& c) const;

  std::string to_string() const;

  static Poly variable(const RingPtr& ring, int var, int exp = 1);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Rat& c = 1);

 private:
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

}  // namespace cotan
