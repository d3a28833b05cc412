#include "cotan/series_lab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cotan/linalg.hpp"

namespace cotan {

TruncSeries poincare_from_deviations(const std::vector<Int>& eps, int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  TruncSeries p = TruncSeries::one(order);
  for (int i = 1; i < static_cast<int>(eps.size()) && i <= order; ++i) {
    if (eps[i] < 0) throw std::invalid_argument("deviations must be >= 0");
    if (eps[i] == 0) continue;
    TruncSeries factor = (i % 2 == 1) ? pow_one_plus_tk(i, eps[i], order)
                                      : inv_pow_one_minus_tk(i, eps[i], order);
    p = series_mul(p, factor);
  }
  return p;
}

std::vector<Int> deviations_from_poincare(const TruncSeries& p) {
  int order = p.order();
  if (order < 0 || p[0] != 1) throw std::domain_error("series must start with constant term 1");
  std::vector<Int> eps(order + 1, Int(0));
  TruncSeries current = p;
  for (int i = 1; i <= order; ++i) {
    const Rat& c = current[i];
    if (c.get_den() != 1 || c < 0) {
      std::ostringstream os;
      os << "coefficient " << rat_to_string(c) << " at t^" << i
         << " is not a valid deviation; no product-form factorization exists";
      throw std::domain_error(os.str());
    }
    eps[i] = c.get_num();
    if (eps[i] == 0) continue;
    TruncSeries factor = (i % 2 == 1) ? pow_one_plus_tk(i, eps[i], order)
                                      : inv_pow_one_minus_tk(i, eps[i], order);
    current = series_div(current, factor);
  }
  return eps;
}

Int alpha_divisor_form(const std::vector<Int>& eps, int i) {
  if (i < 1 || i % 2 == 0 || i >= static_cast<int>(eps.size()))
    throw std::invalid_argument("divisor form needs an odd index inside the deviation range");
  if (i == 1) return eps[1];
  Int total = 0;
  for (int j = 2; j < i; ++j) {
    if (i % j != 0) continue;
    Int term = Int(j) * eps[j];
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

AlphaSequence alpha_sequence(const std::vector<Int>& eps, int order) {
  if (order < 1 || order >= static_cast<int>(eps.size()))
    throw std::invalid_argument("alpha order must satisfy 1 <= order < eps.size()");
  TruncSeries p = poincare_from_deviations(eps, order);
  std::vector<Rat> f_coeffs(order + 1, Rat(0));
  for (int i = 1; i <= order; ++i) f_coeffs[i] = Rat(eps[i]);
  TruncSeries fprime = series_derivative(TruncSeries(std::move(f_coeffs)));
  TruncSeries inner = series_add(log_derivative(compose_neg_t(p)), fprime);
  inner = series_add(inner, series_scale(TruncSeries::geometric(Rat(1), order - 1), Rat(eps[1])));
  TruncSeries a = series_mul_t(inner);

  AlphaSequence out;
  out.eps.assign(eps.begin(), eps.begin() + order + 1);
  out.alpha.assign(order + 1, Int(0));
  for (int m = 1; m <= order; ++m) {
    const Rat& c = a[m];
    if (c.get_den() != 1) throw std::logic_error("alpha series produced a non-integer");
    out.alpha[m] = c.get_num();
    if (m % 2 == 1 && out.alpha[m] != alpha_divisor_form(eps, m))
      throw std::logic_error("alpha series route disagrees with the divisor form");
  }
  return out;
}

ZeroPatternReport mahler_zero_pattern(const std::vector<Int>& seq, int r_max, int i0_max) {
  if (r_max < 1 || i0_max < 0) throw std::invalid_argument("zero pattern bounds out of range");
  ZeroPatternReport report;
  int len = static_cast<int>(seq.size());
  if (len < 4 * r_max) {
    report.verdict = ZeroPatternVerdict::kInconclusive;
    return report;
  }
  // conflict at (r, i0): some class mod r holds a zero and a nonzero index, both >= i0;
  // raising i0 only removes indices, so feasibility is monotone in i0
  auto conflict_class = [&](int r, int i0) -> int {
    std::vector<bool> has_zero(r, false), has_nonzero(r, false);
    for (int i = i0; i < len; ++i) (seq[i] == 0 ? has_zero : has_nonzero)[i % r] = true;
    for (int c = 0; c < r; ++c)
      if (has_zero[c] && has_nonzero[c]) return c;
    return -1;
  };
  for (int r = 1; r <= r_max; ++r) {
    for (int i0 = 0; i0 <= i0_max; ++i0) {
      if (conflict_class(r, i0) >= 0) continue;
      report.verdict = ZeroPatternVerdict::kConsistent;
      report.r = r;
      report.i0 = i0;
      std::set<int> residues;
      for (int i = i0; i < len; ++i)
        if (seq[i] == 0) residues.insert(i % r);
      report.residues.assign(residues.begin(), residues.end());
      report.witnesses.clear();  // only meaningful for the infeasibility proof
      return report;
    }
    int c = conflict_class(r, i0_max);
    ZeroPatternWitness w;
    w.r = r;
    w.zero_index = w.nonzero_index = -1;
    for (int i = i0_max; i < len; ++i) {
      if (i % r != c) continue;
      if (seq[i] == 0 && w.zero_index < 0) w.zero_index = i;
      if (seq[i] != 0 && w.nonzero_index < 0) w.nonzero_index = i;
    }
    report.witnesses.push_back(w);
  }
  report.verdict = ZeroPatternVerdict::kInconsistent;
  return report;
}

ZeroPatternReport mahler_zero_pattern(const std::vector<Rat>& seq, int r_max, int i0_max) {
  std::vector<Int> indicator(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) indicator[i] = seq[i] == 0 ? 0 : 1;
  return mahler_zero_pattern(indicator, r_max, i0_max);
}

std::optional<Recurrence> recurrence_guess(const std::vector<Int>& seq, int max_order) {
  int len = static_cast<int>(seq.size());
  for (int k = 1; k <= max_order && len >= 2 * k + 4; ++k) {
    SpanSolver solver(len - k);
    for (int j = 1; j <= k; ++j) {
      SparseVec col;
      for (int n = k; n < len; ++n)
        if (seq[n - j] != 0) col[n - k] = Rat(seq[n - j]);
      solver.add_generator(col);
    }
    SparseVec target;
    for (int n = k; n < len; ++n)
      if (seq[n] != 0) target[n - k] = Rat(seq[n]);
    auto coeffs = solver.solve(target);
    if (!coeffs) continue;
    Recurrence rec;
    rec.order = k;
    rec.coeffs = *coeffs;
    rec.denominator.assign(k + 1, Rat(0));
    rec.denominator[0] = 1;
    for (int j = 1; j <= k; ++j) rec.denominator[j] = -rec.coeffs[j - 1];
    rec.numerator.assign(k, Rat(0));
    for (int m = 0; m < k; ++m)
      for (int j = 0; j <= m; ++j) rec.numerator[m] += rec.denominator[j] * Rat(seq[m - j]);
    return rec;
  }
  return std::nullopt;
}

std::vector<Int> extend_by_recurrence(const std::vector<Int>& seq, const Recurrence& rec,
                                      int new_len) {
  if (static_cast<int>(seq.size()) < rec.order)
    throw std::invalid_argument("sequence shorter than the recurrence order");
  std::vector<Int> out = seq;
  while (static_cast<int>(out.size()) < new_len) {
    int n = static_cast<int>(out.size());
    Rat value(0);
    for (int j = 1; j <= rec.order; ++j) value += rec.coeffs[j - 1] * Rat(out[n - j]);
    if (value.get_den() != 1)
      throw std::domain_error("recurrence extension produced a non-integer value");
    out.push_back(value.get_num());
  }
  return out;
}

}  // namespace cotan
