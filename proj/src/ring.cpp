#include "cotan/ring.hpp"

#include <algorithm>
#include <set>

namespace cotan {

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size())
    throw std::invalid_argument("weight count does not match variable count");
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("variable weights must be positive");
  auto r = std::make_shared<RingSpec>();
  r->var_names = std::move(names);
  r->weights = std::move(weights);
  return r;
}

int weighted_degree(const RingSpec& ring, const Monomial& m) {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += ring.weights[i] * m[i];
  return d;
}

bool degrevlex_less(const RingSpec& ring, const Monomial& a, const Monomial& b) {
  int da = weighted_degree(ring, a), db = weighted_degree(ring, b);
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial c(a);
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial c(b);
  for (size_t i = 0; i < a.size(); ++i) c[i] -= a[i];
  return c;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial c(a);
  for (size_t i = 0; i < b.size(); ++i) c[i] = std::max(c[i], b[i]);
  return c;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::string mono_to_string(const RingSpec& ring, const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {
void enumerate_degree(const RingSpec& ring, int var, int remaining, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (var == ring.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var == ring.nvars() - 1) {
    int w = ring.weights[var];
    if (remaining % w == 0) {
      cur[var] = remaining / w;
      out.push_back(cur);
      cur[var] = 0;
    }
    return;
  }
  int w = ring.weights[var];
  for (int e = remaining / w; e >= 0; --e) {
    cur[var] = e;
    enumerate_degree(ring, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}
}  // namespace

std::vector<Monomial> graded_piece_basis(const RingSpec& ring, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  Monomial cur(ring.nvars(), 0);
  enumerate_degree(ring, 0, t, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return degrevlex_less(ring, b, a); });
  return out;
}

}  // namespace cotan
