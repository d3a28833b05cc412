#include "cotan/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cotan/linalg.hpp"

namespace cotan {

void IdealPresentation::validate() const {
  for (const auto& g : gens) {
    if (auto w = g.inhomogeneity_witness()) {
      std::ostringstream os;
      os << "inhomogeneous generator " << g.to_string() << ": terms of degree " << w->first
         << " and " << w->second;
      throw std::invalid_argument(os.str());
    }
  }
}

bool GroebnerBasis::contains_unit() const {
  for (const auto& g : elements_)
    if (!g.is_zero() && g.degree() == 0) return true;
  return false;
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.mono_multiple(mono_div(l, f.leading_monomial()), 1 / f.leading_coeff());
  Poly b = g.mono_multiple(mono_div(l, g.leading_monomial()), 1 / g.leading_coeff());
  return a - b;
}

Poly reduce_full(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem(f.ring());
  Poly work = f;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      Rat c = work.leading_coeff() / g.leading_coeff();
      work = work - g.mono_multiple(mono_div(lm, g.leading_monomial()), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Rat c = work.leading_coeff();
      rem.add_term(lm, c);
      Poly lead(f.ring());
      lead.add_term(lm, -c);
      work = work + lead;
    }
  }
  return rem;
}

}  // namespace

Poly normal_form(const Poly& f, const GroebnerBasis& gb) { return reduce_full(f, gb.elements()); }

GroebnerBasis buchberger(const IdealPresentation& ideal) {
  ideal.validate();
  const RingPtr& ring = ideal.ring;

  std::vector<Poly> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(g * (1 / g.leading_coeff()));

  auto lcm_of = [&](int i, int j) {
    return mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
  };

  std::set<std::pair<int, int>> pending;
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) pending.insert({static_cast<int>(i), static_cast<int>(j)});

  while (!pending.empty()) {
    // normal selection: smallest lcm degree, then lowest index pair
    auto best = pending.begin();
    int best_deg = weighted_degree(*ring, lcm_of(best->first, best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      int d = weighted_degree(*ring, lcm_of(it->first, it->second));
      if (d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    // first criterion: coprime leading monomials
    if (mono_coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    // second (chain) criterion
    Monomial l = lcm_of(i, j);
    bool dropped = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].leading_monomial(), l)) continue;
      auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second})) {
        dropped = true;
        break;
      }
    }
    if (dropped) continue;

    Poly r = reduce_full(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    r = r * (1 / r.leading_coeff());
    basis.push_back(r);
    int n = static_cast<int>(basis.size()) - 1;
    for (int k = 0; k < n; ++k) pending.insert({k, n});
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (k == i) continue;
      const Monomial &a = basis[k].leading_monomial(), &b = basis[i].leading_monomial();
      if (divides(a, b) && !(a == b && k > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each element against the others
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Poly r = reduce_full(minimal[i], others);
    reduced.push_back(r * (1 / r.leading_coeff()));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return degrevlex_less(*ring, a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(ring, std::move(reduced));
}

std::vector<Poly> minimal_generators(const IdealPresentation& ideal) {
  ideal.validate();
  const RingPtr& ring = ideal.ring;
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return {};

  int t_max = 0;
  for (const auto& g : gens) t_max = std::max(t_max, g.degree());

  std::vector<Poly> kept;
  for (int t = 0; t <= t_max; ++t) {
    auto mono_basis = graded_piece_basis(*ring, t);
    if (mono_basis.empty()) continue;
    std::map<Monomial, int> index;
    for (size_t k = 0; k < mono_basis.size(); ++k) index[mono_basis[k]] = static_cast<int>(k);
    auto to_vec = [&](const Poly& p) {
      SparseVec v;
      for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
      return v;
    };
    QEchelon ech;
    // span of (m * I)_t: proper-degree multiples of the generators
    for (const auto& g : gens) {
      int rem = t - g.degree();
      if (rem < 1) continue;
      for (const auto& u : graded_piece_basis(*ring, rem)) ech.add(to_vec(g.mono_multiple(u, 1)));
    }
    for (const auto& g : gens) {
      if (g.degree() != t) continue;
      if (ech.add(to_vec(g))) kept.push_back(g);
    }
  }
  return kept;
}

namespace {

// dim R/J for a monomial ideal J: largest variable subset containing no generator support
int monomial_quotient_dim(const RingSpec& ring, const std::vector<Monomial>& gens) {
  int n = ring.nvars();
  for (const auto& g : gens) {
    bool constant = true;
    for (int e : g) constant &= (e == 0);
    if (constant) return -1;  // unit ideal, zero ring
  }
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool contained = true;
      for (int v = 0; v < n; ++v)
        if (g[v] > 0 && !(mask & (1u << v))) contained = false;
      if (contained) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < gens.size() && !redundant; ++k)
      if (k != i && divides(gens[k], gens[i]) && !(gens[k] == gens[i] && k > i)) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

TruncSeries hilbert_series_quotient(const RingPtr& ring, const std::vector<Monomial>& monomial_gens,
                                    int order) {
  std::vector<Monomial> gens = minimize_monomials(monomial_gens);
  for (const auto& g : gens) {
    bool constant = true;
    for (int e : g) constant &= (e == 0);
    if (constant) return TruncSeries(order);  // unit ideal: zero ring
  }
  if (gens.empty()) {
    TruncSeries hs = TruncSeries::one(order);
    for (int w : ring->weights) hs = series_mul(hs, inv_pow_one_minus_tk(w, 1, order));
    return hs;
  }
  Monomial m = gens.back();
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
  std::vector<Monomial> colon;
  for (const auto& g : rest) {
    Monomial q(g.size());
    for (size_t v = 0; v < g.size(); ++v) q[v] = std::max(0, g[v] - m[v]);
    colon.push_back(std::move(q));
  }
  TruncSeries a = hilbert_series_quotient(ring, rest, order);
  TruncSeries b = hilbert_series_quotient(ring, colon, order);
  int d = weighted_degree(*ring, m);
  TruncSeries shifted(order);
  for (int i = 0; i + d <= order; ++i) shifted[i + d] = b[i];
  return series_sub(a, shifted);
}

IdealInvariants invariants_of_ideal(const IdealPresentation& ideal, int hilbert_order) {
  ideal.validate();
  IdealInvariants inv;
  const RingPtr& ring = ideal.ring;
  int n = ring->nvars();

  GroebnerBasis gb = buchberger(ideal);
  std::vector<Monomial> lts;
  for (const auto& g : gb.elements()) lts.push_back(g.leading_monomial());

  bool zero_ideal = gb.elements().empty();
  bool unit_ideal = gb.contains_unit();
  inv.degenerate = zero_ideal || unit_ideal;

  inv.mu = static_cast<int>(minimal_generators(ideal).size());
  if (zero_ideal) {
    inv.dim_s = n;
    inv.height = 0;
  } else if (unit_ideal) {
    inv.dim_s = -1;  // zero ring
    inv.height = n;
  } else {
    inv.dim_s = monomial_quotient_dim(*ring, lts);
    inv.height = n - inv.dim_s;
  }
  // The zero ideal is cut out by the empty regular sequence, so it counts as a
  // complete intersection; only the unit ideal (zero quotient ring) is excluded.
  inv.complete_intersection = !unit_ideal && inv.mu == inv.height;
  inv.almost_complete_intersection = !unit_ideal && inv.mu == inv.height + 1;
  inv.hilbert_s = hilbert_series_quotient(ring, lts, hilbert_order);
  return inv;
}

QuotientRing::QuotientRing(RingPtr ring, GroebnerBasis gb)
    : ring_(std::move(ring)), gb_(std::move(gb)) {}

const std::vector<Monomial>& QuotientRing::std_monomials(int t) const {
  auto it = std_cache_.find(t);
  if (it != std_cache_.end()) return it->second;
  std::vector<Monomial> out;
  for (const auto& m : graded_piece_basis(*ring_, t)) {
    bool standard = true;
    for (const auto& g : gb_.elements())
      if (divides(g.leading_monomial(), m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return std_cache_.emplace(t, std::move(out)).first->second;
}

}  // namespace cotan
