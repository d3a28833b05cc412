#pragma once

#include <optional>
#include <vector>

#include "cotan/series.hpp"

namespace cotan {

// Poincare series of the residue field from the deviation sequence:
// P(t) = prod_i (1 + t^(2i-1))^(eps_(2i-1)) / (1 - t^(2i))^(eps_(2i)).
// eps is index-aligned (eps[0] ignored); factors beyond the order are immaterial.
TruncSeries poincare_from_deviations(const std::vector<Int>& eps, int order);

// Inverse of the product form: strips one factor per internal degree and reads the
// deviation off the lowest surviving coefficient. Returns eps[0..order], index-aligned.
// Throws domain_error when a candidate deviation is negative or not an integer, which
// certifies the input is not a Poincare series of this product shape.
std::vector<Int> deviations_from_poincare(const TruncSeries& p);

// Closed divisor-sum form for the odd-index terms of the associated sequence:
// alpha_1 = eps_1, and for odd i >= 3, alpha_i = sum over divisors j of i with
// 1 < j < i of (-1)^j * j * eps_j. Vanishes at odd primes regardless of eps.
Int alpha_divisor_form(const std::vector<Int>& eps, int i);

// alpha via the series route: A(t) = t * (dlog P(-t) + F'(t) + eps_1/(1-t)) with
// F(t) = sum_i eps_i t^i, so alpha_m = sum_(j|m) (-1)^j j eps_j + m eps_m + eps_1.
// Cross-checked against the divisor form at every odd index; disagreement throws
// logic_error. alpha[0] = 0, entries defined for 1 <= m <= order < eps.size().
struct AlphaSequence {
  std::vector<Int> eps;
  std::vector<Int> alpha;
};
AlphaSequence alpha_sequence(const std::vector<Int>& eps, int order);

enum class ZeroPatternVerdict { kConsistent, kInconsistent, kInconclusive };

struct ZeroPatternWitness {
  int r = 0;
  int zero_index = 0;     // index >= threshold with value zero
  int nonzero_index = 0;  // index >= threshold, same class mod r, value nonzero
};

// Whether the zero set of the sequence is eventually a union of residue classes:
// for modulus r and threshold i0 the forced classes are {i mod r : a_i = 0, i >= i0},
// and the pattern is consistent iff no nonzero index >= i0 falls in a forced class.
// Reports the smallest feasible r (then smallest i0), or a per-modulus witness pair
// proving every r <= r_max infeasible even at threshold i0_max. Sequences shorter
// than 4*r_max give an inconclusive verdict.
struct ZeroPatternReport {
  ZeroPatternVerdict verdict = ZeroPatternVerdict::kInconclusive;
  int r = 0;
  int i0 = 0;
  std::vector<int> residues;
  std::vector<ZeroPatternWitness> witnesses;
};
ZeroPatternReport mahler_zero_pattern(const std::vector<Int>& seq, int r_max, int i0_max);
// only zero versus nonzero matters, so rational input reduces to the integer case
ZeroPatternReport mahler_zero_pattern(const std::vector<Rat>& seq, int r_max, int i0_max);

// Linear recurrence a_n = sum_(j=1..k) c_j a_(n-j), valid for every n >= k of the
// given data, equivalently sum a_n t^n = numerator / denominator with
// denominator = 1 - c_1 t - ... - c_k t^k and deg numerator < k.
struct Recurrence {
  int order = 0;
  std::vector<Rat> coeffs;       // c_1..c_k
  std::vector<Rat> numerator;    // k low-order coefficients
  std::vector<Rat> denominator;  // 1, -c_1, ..., -c_k
};

// Smallest-order recurrence fitting the whole sequence, searched ascending; order k is
// only attempted when the data affords len >= 2k+4 verification rows. nullopt when no
// recurrence up to max_order fits.
std::optional<Recurrence> recurrence_guess(const std::vector<Int>& seq, int max_order);

// Extends the sequence to new_len values via the recurrence; a non-integer extension
// value throws domain_error.
std::vector<Int> extend_by_recurrence(const std::vector<Int>& seq, const Recurrence& rec,
                                      int new_len);

}  // namespace cotan
