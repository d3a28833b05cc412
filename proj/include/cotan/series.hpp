#pragma once

#include <vector>

#include "cotan/rational.hpp"

namespace cotan {

// Truncated power series over Q with explicit order: coefficients 0..order are known,
// everything above is unknown (not zero). Binary operations truncate to the smaller
// order; precision is never silently extended.
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int order) : c_(order + 1, Rat(0)) {}
  explicit TruncSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_.at(i); }
  Rat& operator[](int i) { return c_.at(i); }
  const std::vector<Rat>& coeffs() const { return c_; }

  TruncSeries truncate(int order) const;

  static TruncSeries one(int order);
  // polynomial from low-order coefficient list, carried to the given order
  static TruncSeries polynomial(std::vector<Rat> coeffs, int order);
  // 1/(1 - a t) to the given order
  static TruncSeries geometric(const Rat& a, int order);

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rat> c_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// requires b[0] != 0
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const Rat& s);
// d/dt, order drops by one
TruncSeries series_derivative(const TruncSeries& a);
// g'/g (logarithmic derivative), order drops by one; requires g[0] != 0
TruncSeries log_derivative(const TruncSeries& g);
// t -> -t
TruncSeries compose_neg_t(const TruncSeries& a);
// (1 + t^k)^e for e >= 0, exact binomial expansion
TruncSeries pow_one_plus_tk(int k, const Int& e, int order);
// (1 - t^k)^(-e) for e >= 0, exact binomial expansion
TruncSeries inv_pow_one_minus_tk(int k, const Int& e, int order);
// multiply by t: coefficients shift up, order grows by one
TruncSeries series_mul_t(const TruncSeries& a);

std::string series_to_string(const TruncSeries& a);

}  // namespace cotan
