#include "cotan/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cotan {

TruncSeries TruncSeries::truncate(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend series precision");
  std::vector<Rat> c(c_.begin(), c_.begin() + order + 1);
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s[0] = 1;
  return s;
}

TruncSeries TruncSeries::polynomial(std::vector<Rat> coeffs, int order) {
  TruncSeries s(order);
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s[i] = coeffs[i];
  return s;
}

TruncSeries TruncSeries::geometric(const Rat& a, int order) {
  TruncSeries s(order);
  Rat p(1);
  for (int i = 0; i <= order; ++i, p *= a) s[i] = p;
  return s;
}

namespace {
int common_order(const TruncSeries& a, const TruncSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  int n = common_order(a, b);
  TruncSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
  return s;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  int n = common_order(a, b);
  TruncSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
  return s;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int n = common_order(a, b);
  TruncSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      s[i + j] += a[i] * b[j];
    }
  }
  return s;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  if (b[0] == 0) throw std::invalid_argument("series division needs a unit constant term");
  int n = common_order(a, b);
  TruncSeries q(n);
  for (int i = 0; i <= n; ++i) {
    Rat acc = a[i];
    for (int j = 0; j < i; ++j) acc -= q[j] * b[i - j];
    q[i] = acc / b[0];
  }
  return q;
}

TruncSeries series_scale(const TruncSeries& a, const Rat& s) {
  TruncSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * s;
  return r;
}

TruncSeries series_derivative(const TruncSeries& a) {
  if (a.order() < 1) throw std::invalid_argument("derivative needs order >= 1");
  TruncSeries r(a.order() - 1);
  for (int i = 1; i <= a.order(); ++i) r[i - 1] = a[i] * i;
  return r;
}

TruncSeries log_derivative(const TruncSeries& g) {
  return series_div(series_derivative(g), g.truncate(g.order() - 1));
}

TruncSeries compose_neg_t(const TruncSeries& a) {
  TruncSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = (i % 2 == 0) ? a[i] : -a[i];
  return r;
}

TruncSeries pow_one_plus_tk(int k, const Int& e, int order) {
  if (k < 1 || e < 0) throw std::invalid_argument("pow_one_plus_tk arguments");
  TruncSeries s(order);
  for (long j = 0; j * k <= order; ++j) {
    if (e < j) break;
    s[static_cast<int>(j) * k] = Rat(binomial(e, static_cast<unsigned long>(j)));
  }
  return s;
}

TruncSeries inv_pow_one_minus_tk(int k, const Int& e, int order) {
  if (k < 1 || e < 0) throw std::invalid_argument("inv_pow_one_minus_tk arguments");
  TruncSeries s(order);
  s[0] = 1;
  if (e == 0) return s;
  for (long j = 1; j * k <= order; ++j)
    s[static_cast<int>(j) * k] = Rat(binomial(e + Int(j) - 1, static_cast<unsigned long>(j)));
  return s;
}

TruncSeries series_mul_t(const TruncSeries& a) {
  std::vector<Rat> c(a.order() + 2, Rat(0));
  for (int i = 0; i <= a.order(); ++i) c[i + 1] = a[i];
  return TruncSeries(std::move(c));
}

std::string series_to_string(const TruncSeries& a) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    if (any) os << " + ";
    os << rat_to_string(a[i]);
    if (i > 0) os << "*t^" << i;
    any = true;
  }
  if (!any) os << "0";
  os << " + O(t^" << a.order() + 1 << ")";
  return os.str();
}

}  // namespace cotan
