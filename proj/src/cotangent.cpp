#include "cotan/cotangent.hpp"

#include <stdexcept>

#include "cotan/parallel.hpp"

namespace cotan {

int CotangentComplex::rank(int i) const {
  if (i < 0 || i > top()) return 0;
  return static_cast<int>(degrees[i].size());
}

namespace {

// true when the word is a single bare variable (the linear part survives in L)
bool single_variable(const VarWord& w, int& var_id) {
  if (w.evens.empty() && w.odds.size() == 1) {
    var_id = w.odds[0];
    return true;
  }
  if (w.odds.empty() && w.evens.size() == 1 && w.evens[0].second == 1) {
    var_id = w.evens[0].first;
    return true;
  }
  return false;
}

}  // namespace

CotangentComplex cotangent_complex(const Resolvent& x, QuotientRing s) {
  if (x.target != ResolventTarget::kQuotientRing)
    throw std::invalid_argument("cotangent complex wants a resolvent of the quotient map");
  const DGAlgebra& a = x.algebra;

  // stages without adjoined variables up to the build bound are genuinely zero modules
  int top = std::max(x.hom_bound, 1);

  CotangentComplex l{BaseRing(std::move(s)),
                     std::vector<std::vector<int>>(top + 1),
                     std::vector<std::vector<std::string>>(top + 1),
                     std::vector<PolyMatrix>(top + 1),
                     true};
  std::vector<int> position(a.var_count(), -1);
  for (int id = 0; id < a.var_count(); ++id) {
    const DGVariable& v = a.variable(id);
    position[id] = static_cast<int>(l.degrees[v.hom_degree].size());
    l.degrees[v.hom_degree].push_back(v.int_degree);
    l.names[v.hom_degree].push_back(v.name);
  }

  for (int i = 1; i <= top; ++i) {
    PolyMatrix& d = l.diffs[i];
    d.rows = l.rank(i - 1);
    d.cols = l.rank(i);
    if (i == 1) continue;
    for (int id = 0; id < a.var_count(); ++id) {
      const DGVariable& v = a.variable(id);
      if (v.hom_degree != i) continue;
      for (const auto& [w, c] : v.boundary.terms) {
        int u = -1;
        if (!single_variable(w, u)) continue;
        Poly entry = l.s.reduce(c);
        if (entry.is_zero()) continue;
        if (entry.degree() == 0) l.minimal = false;
        const Poly* prev = d.get(position[u], position[id]);
        d.set(position[u], position[id], prev ? *prev + entry : entry);
      }
    }
  }
  return l;
}

int CotangentTable::dim(int i, int t) const {
  auto it = dims.find({i, t});
  return it == dims.end() ? 0 : it->second;
}

namespace {

// degree-t piece of L_i tensored with the residue field: only the degree-t generators
// survive, and only constant entries between equal-degree generators act
SparseMatrixQ residue_field_matrix(const CotangentComplex& l, int i, int t) {
  std::vector<int> src, dst;
  for (size_t j = 0; j < l.degrees[i].size(); ++j)
    if (l.degrees[i][j] == t) src.push_back(static_cast<int>(j));
  if (i >= 1)
    for (size_t j = 0; j < l.degrees[i - 1].size(); ++j)
      if (l.degrees[i - 1][j] == t) dst.push_back(static_cast<int>(j));
  SparseMatrixQ m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t cj = 0; cj < src.size(); ++cj)
    for (size_t rj = 0; rj < dst.size(); ++rj) {
      const Poly* e = l.diffs[i].get(dst[rj], src[cj]);
      if (!e || e->degree() != 0) continue;
      m.set(static_cast<int>(rj), static_cast<int>(cj), e->leading_coeff());
    }
  return m;
}

}  // namespace

CotangentTable cotangent_dims(const CotangentComplex& l, CoeffModule m, int i_max, int t_max,
                              int jobs) {
  if (i_max < 1) throw std::invalid_argument("cotangent table needs i_max >= 1");
  if (i_max > l.top())
    throw std::invalid_argument("cotangent table needs the complex built past i_max");
  CotangentTable table;
  table.coeff = m;
  table.route = m == CoeffModule::kS ? "L_tensor_S" : "L_tensor_K";
  table.i_max = i_max;
  table.t_max = t_max;
  if (i_max == l.top()) table.upper_bound_rows.push_back(i_max);

  for (int t = 0; t <= t_max; ++t) l.s.monomials(t);  // warm the shared cache

  std::vector<std::vector<int>> grid(i_max, std::vector<int>(t_max + 1, 0));
  parallel_for(i_max * (t_max + 1), jobs, [&](int task) {
    int i = 1 + task / (t_max + 1);
    int t = task % (t_max + 1);
    int kernel, image = 0;
    if (m == CoeffModule::kS) {
      SparseMatrixQ down = expand_matrix(l.s, l.diffs[i], l.degrees[i], l.degrees[i - 1], t);
      kernel = down.cols() - exact_rank(down);
      if (i < l.top())
        image = exact_rank(expand_matrix(l.s, l.diffs[i + 1], l.degrees[i + 1], l.degrees[i], t));
    } else {
      SparseMatrixQ down = residue_field_matrix(l, i, t);
      kernel = down.cols() - exact_rank(down);
      if (i < l.top()) image = exact_rank(residue_field_matrix(l, i + 1, t));
    }
    grid[i - 1][t] = kernel - image;
  });
  for (int i = 1; i <= i_max; ++i)
    for (int t = 0; t <= t_max; ++t)
      if (grid[i - 1][t] != 0) table.dims[{i, t}] = grid[i - 1][t];
  return table;
}

std::map<int, int> cotangent_via_stage_homology(const Resolvent& x, int i, int t_max) {
  if (i < 3) throw std::invalid_argument("stage-homology route needs i >= 3");
  if (x.hom_bound < i - 1)
    throw std::invalid_argument("stage-homology route needs the resolvent built to stage i-1");
  if (t_max > x.deg_bound)
    throw std::invalid_argument("stage-homology route beyond the resolvent degree bound");
  std::map<int, int> out;
  for (int t = 0; t <= t_max; ++t) {
    int d = resolvent_homology(x.algebra, i - 1, i, t).dim;
    if (d != 0) out[t] = d;
  }
  return out;
}

ConormalModule conormal_module(const IdealPresentation& ideal, const QuotientRing& s, int t_max) {
  ideal.validate();
  ConormalModule out;
  out.gens = minimal_generators(ideal);
  for (const Poly& g : out.gens) out.degrees.push_back(g.degree());
  out.relations.assign(t_max + 1, {});
  if (out.gens.empty()) return out;

  const RingPtr& ring = ideal.ring;
  BaseRing sbase(s);
  for (int t = 0; t <= t_max; ++t) {
    PieceBasis cols = module_piece(sbase, out.degrees, t);
    if (cols.dim() == 0) continue;
    std::vector<Monomial> ambient = graded_piece_basis(*ring, t);
    std::map<Monomial, int> ambient_index;
    for (size_t k = 0; k < ambient.size(); ++k)
      ambient_index.emplace(ambient[k], static_cast<int>(k));
    auto to_vec = [&](const Poly& p) {
      SparseVec v;
      for (const auto& [mono, c] : p.terms()) v[ambient_index.at(mono)] = c;
      return v;
    };

    QEchelon square;
    for (size_t a = 0; a < out.gens.size(); ++a)
      for (size_t b = a; b < out.gens.size(); ++b) {
        Poly prod = out.gens[a] * out.gens[b];
        int rem = t - prod.degree();
        if (rem < 0) continue;
        for (const Monomial& u : graded_piece_basis(*ring, rem))
          square.add(to_vec(prod.mono_multiple(u, Rat(1))));
      }

    SparseMatrixQ m(static_cast<int>(ambient.size()), cols.dim());
    for (int j = 0; j < cols.dim(); ++j) {
      const auto& [k, u] = cols.labels[j];
      SparseVec residue = square.reduce(to_vec(out.gens[k].mono_multiple(u, Rat(1))));
      for (const auto& [row, c] : residue) m.set(row, j, c);
    }
    RankKernel rk = exact_rank_and_kernel(m);
    if (rk.rank != 0) out.dims[t] = rk.rank;
    out.relations[t] = std::move(rk.kernel);
  }
  return out;
}

}  // namespace cotan
