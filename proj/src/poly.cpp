#include "cotan/poly.hpp"

#include <sstream>

namespace cotan {

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !(ring_->var_names == o.ring_->var_names && ring_->weights == o.ring_->weights))
    throw std::invalid_argument("polynomial ring mismatch");
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != ring_->nvars())
    throw std::invalid_argument("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return weighted_degree(*ring_, terms_.begin()->first);
}

bool Poly::is_homogeneous() const { return !inhomogeneity_witness().has_value(); }

std::optional<std::pair<int, int>> Poly::inhomogeneity_witness() const {
  if (terms_.empty()) return std::nullopt;
  int d0 = weighted_degree(*ring_, terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    int d = weighted_degree(*ring_, m);
    if (d != d0) return std::make_pair(d0, d);
  }
  return std::nullopt;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly Poly::mono_multiple(const Monomial& m, const Rat& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), cc * c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (a < 0) a = -a;
    std::string ms = mono_to_string(*ring_, m);
    if (ms == "1") {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << ms;
    }
    first = false;
  }
  return os.str();
}

Poly Poly::variable(const RingPtr& ring, int var, int exp) {
  Monomial m(ring->nvars(), 0);
  m[var] = exp;
  return monomial(ring, m);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const Rat& c) {
  Poly p(ring);
  p.add_term(m, c);
  return p;
}

}  // namespace cotan
