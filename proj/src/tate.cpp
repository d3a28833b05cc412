#include "cotan/tate.hpp"

#include <sstream>
#include <stdexcept>

namespace cotan {

std::vector<int> Resolvent::deviations(int up_to) const {
  std::vector<int> eps(up_to + 1, 0);
  for (int id = 0; id < algebra.var_count(); ++id) {
    int h = algebra.variable(id).hom_degree;
    if (h <= up_to) eps[h] += 1;
  }
  return eps;
}

std::map<std::pair<int, int>, int> Resolvent::bigraded_deviations() const {
  std::map<std::pair<int, int>, int> out;
  for (int id = 0; id < algebra.var_count(); ++id) {
    const DGVariable& v = algebra.variable(id);
    out[{v.hom_degree, v.int_degree}] += 1;
  }
  return out;
}

HomologySlice resolvent_homology(const DGAlgebra& algebra, int step_limit, int hom, int t) {
  HomologySlice out;
  BidegreeBasis b = algebra.basis(step_limit, hom, t);
  if (b.dim() == 0) return out;
  BidegreeBasis below = algebra.basis(step_limit, hom - 1, t);
  BidegreeBasis above = algebra.basis(step_limit, hom + 1, t);
  RankKernel rk = exact_rank_and_kernel(algebra.diff_matrix(b, below));
  QEchelon boundaries;
  for (SparseVec& col : algebra.diff_matrix(above, b).columns()) boundaries.add(std::move(col));
  for (SparseVec& z : rk.kernel) {
    SparseVec residue = boundaries.reduce(std::move(z));
    if (residue.empty()) continue;
    out.reps.push_back(algebra.from_vector(residue, b));
    boundaries.add(std::move(residue));
    out.dim += 1;
  }
  return out;
}

HomologyModule homology_module(const DGAlgebra& a, int step_limit, int hom, int deg_bound) {
  HomologyModule out;
  const RingSpec& ring = *a.ring();
  std::vector<BidegreeBasis> bases(deg_bound + 1);
  std::vector<std::vector<SparseVec>> cycles(deg_bound + 1);
  for (int t = 0; t <= deg_bound; ++t) {
    bases[t] = a.basis(step_limit, hom, t);
    if (bases[t].dim() == 0) continue;
    BidegreeBasis below = a.basis(step_limit, hom - 1, t);
    cycles[t] = exact_rank_and_kernel(a.diff_matrix(bases[t], below)).kernel;
  }
  for (int t = 0; t <= deg_bound; ++t) {
    if (cycles[t].empty()) continue;
    QEchelon swept;
    for (SparseVec& col : a.diff_matrix(a.basis(step_limit, hom + 1, t), bases[t]).columns())
      swept.add(std::move(col));
    int h_dim = static_cast<int>(cycles[t].size()) - swept.rank();
    if (h_dim > 0) out.dims[t] = h_dim;
    for (int v = 0; v < ring.nvars(); ++v) {
      int s = t - ring.weights[v];
      if (s < 0 || cycles[s].empty()) continue;
      Poly xv = Poly::variable(a.ring(), v);
      for (const SparseVec& z : cycles[s])
        swept.add(a.to_vector(a.mul_poly(xv, a.from_vector(z, bases[s])), bases[t]));
    }
    for (const SparseVec& z : cycles[t]) {
      SparseVec residue = swept.reduce(z);
      if (residue.empty()) continue;
      out.gens.push_back(a.from_vector(residue, bases[t]));
      out.gen_degrees.push_back(t);
      swept.add(std::move(residue));
    }
  }
  return out;
}

namespace {

// Adjoins stages 2..hom_bound: stage i kills a minimal generating set of
// H_{i-1}(step <= i-1).
void build_stages(DGAlgebra& a, int hom_bound, int deg_bound) {
  for (int i = 2; i <= hom_bound; ++i) {
    HomologyModule h = homology_module(a, i - 1, i - 1, deg_bound);
    if (!h.gens.empty()) adjoin_variables(a, h.gens, i, i);
  }
}

}  // namespace

Resolvent build_quotient_resolvent(const IdealPresentation& ideal, int hom_bound, int deg_bound,
                                   bool minimize) {
  ideal.validate();
  if (hom_bound < 1 || deg_bound < 1) throw std::invalid_argument("resolvent bounds must be >= 1");
  GroebnerBasis gb = buchberger(ideal);
  if (gb.contains_unit()) throw std::invalid_argument("the unit ideal has no resolvent");
  QuotientRing s(ideal.ring, gb);

  Resolvent r{DGAlgebra(ideal.ring), ResolventTarget::kQuotientRing, hom_bound, deg_bound, {}};
  std::vector<Poly> stage_one = minimize ? minimal_generators(ideal) : ideal.gens;
  std::erase_if(stage_one, [](const Poly& g) { return g.is_zero(); });
  std::vector<DGElement> koszul;
  for (const Poly& g : stage_one) {
    if (g.degree() > deg_bound)
      throw std::invalid_argument("minimal generator degree exceeds the degree bound");
    koszul.push_back(r.algebra.coeff_element(g));
  }
  if (!koszul.empty()) adjoin_variables(r.algebra, koszul, 1, 1);
  build_stages(r.algebra, hom_bound, deg_bound);
  for (int t = 0; t <= deg_bound; ++t) r.h0_expected.push_back(s.dim(t));
  return r;
}

std::vector<Poly> minimal_maximal_ideal_generators(const QuotientRing& s) {
  const RingPtr& ring = s.ring();
  // variable classes surviving modulo m^2, swept per weight: every monomial of degree
  // >= 1 with >= 2 factors lies in m^2, so only weight-t variables can generate in t
  int max_weight = 0;
  for (int w : ring->weights) max_weight = std::max(max_weight, w);
  std::vector<Poly> gens;
  for (int t = 1; t <= max_weight; ++t) {
    const std::vector<Monomial>& coords = s.std_monomials(t);
    std::map<Monomial, int> index;
    for (size_t k = 0; k < coords.size(); ++k) index.emplace(coords[k], static_cast<int>(k));
    auto to_vec = [&](const Poly& p) {
      SparseVec v;
      for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
      return v;
    };
    QEchelon square;
    for (int v = 0; v < ring->nvars(); ++v) {
      int rem = t - ring->weights[v];
      if (rem < 1) continue;
      for (const Monomial& u : s.std_monomials(rem))
        square.add(to_vec(s.nf(Poly::monomial(ring, u) * Poly::variable(ring, v))));
    }
    for (int v = 0; v < ring->nvars(); ++v) {
      if (ring->weights[v] != t) continue;
      Poly xv = s.nf(Poly::variable(ring, v));
      if (xv.is_zero()) continue;
      if (!square.add(to_vec(xv))) continue;
      gens.push_back(std::move(xv));
    }
  }
  return gens;
}

Resolvent build_residue_field_resolvent(const QuotientRing& s, int hom_bound, int deg_bound) {
  if (hom_bound < 1 || deg_bound < 1) throw std::invalid_argument("resolvent bounds must be >= 1");
  const RingPtr& ring = s.ring();
  Resolvent r{DGAlgebra(ring, s), ResolventTarget::kResidueField, hom_bound, deg_bound, {}};
  std::vector<DGElement> koszul;
  for (const Poly& g : minimal_maximal_ideal_generators(s))
    if (g.degree() <= deg_bound) koszul.push_back(r.algebra.coeff_element(g));
  if (!koszul.empty()) adjoin_variables(r.algebra, koszul, 1, 1);
  build_stages(r.algebra, hom_bound, deg_bound);
  for (int t = 0; t <= deg_bound; ++t) r.h0_expected.push_back(t == 0 ? 1 : 0);
  return r;
}

AcyclicityCertificate certify_acyclicity(const Resolvent& r) {
  AcyclicityCertificate cert;
  cert.hom_checked = r.hom_bound - 1;
  cert.deg_bound = r.deg_bound;
  const DGAlgebra& a = r.algebra;
  for (int t = 0; t <= r.deg_bound; ++t) {
    BidegreeBasis b0 = a.basis(r.hom_bound, 0, t);
    BidegreeBasis b1 = a.basis(r.hom_bound, 1, t);
    int h0 = b0.dim() - exact_rank(a.diff_matrix(b1, b0));
    if (h0 != r.h0_expected[t]) {
      cert.acyclic = false;
      cert.dims_found[{0, t}] = h0;
      std::ostringstream os;
      os << "H_0 in degree " << t << " has dim " << h0 << ", expected " << r.h0_expected[t];
      cert.failures.push_back(os.str());
    }
  }
  for (int i = 1; i <= cert.hom_checked; ++i) {
    for (int t = 0; t <= r.deg_bound; ++t) {
      HomologySlice h = resolvent_homology(a, r.hom_bound, i, t);
      if (h.dim == 0) continue;
      cert.acyclic = false;
      cert.dims_found[{i, t}] = h.dim;
      std::ostringstream os;
      os << "H_" << i << " in degree " << t << " has dim " << h.dim;
      cert.failures.push_back(os.str());
    }
  }
  return cert;
}

}  // namespace cotan
