#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotan {

// Exponent vector over a fixed variable list; entry k is the exponent of variable k.
using Monomial = std::vector<int>;

struct RingSpec {
  std::vector<std::string> var_names;
  std::vector<int> weights;  // positive internal degrees, same length as var_names

  int nvars() const { return static_cast<int>(var_names.size()); }
};

using RingPtr = std::shared_ptr<const RingSpec>;

// Validates names are unique and weights positive.
RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights = {});

int weighted_degree(const RingSpec& ring, const Monomial& m);

// Degree-reverse-lexicographic order (weighted degree first; ties broken so that the
// monomial with the larger exponent in the last differing variable is smaller).
bool degrevlex_less(const RingSpec& ring, const Monomial& a, const Monomial& b);

inline bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b);
// quotient b/a; caller guarantees divisibility
Monomial mono_div(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
std::string mono_to_string(const RingSpec& ring, const Monomial& m);

// All monomials of weighted degree exactly t, in degrevlex-descending order.
std::vector<Monomial> graded_piece_basis(const RingSpec& ring, int t);

}  // namespace cotan
