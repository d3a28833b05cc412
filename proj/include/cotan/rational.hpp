#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cotan {

// Exact rational scalar. All arithmetic in the library is exact; no floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Canonical form: "p/q" in lowest terms, "n" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// binomial(n, k) with n possibly large; k >= 0
inline Int binomial(const Int& n, unsigned long k) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace cotan
