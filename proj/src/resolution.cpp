#include "cotan/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotan {

const std::vector<Monomial>& BaseRing::monomials(int t) const {
  if (quot_) return quot_->std_monomials(t);
  auto it = free_cache_.find(t);
  if (it != free_cache_.end()) return it->second;
  return free_cache_.emplace(t, graded_piece_basis(*ring_, t)).first->second;
}

void PolyMatrix::set(int r, int c, Poly p) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix entry index");
  if (p.is_zero())
    entries.erase({r, c});
  else
    entries.insert_or_assign({r, c}, std::move(p));
}

const Poly* PolyMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? nullptr : &it->second;
}

PieceBasis module_piece(const BaseRing& base, const std::vector<int>& degrees, int t) {
  PieceBasis b;
  for (size_t k = 0; k < degrees.size(); ++k) {
    int rem = t - degrees[k];
    if (rem < 0) continue;
    for (const Monomial& u : base.monomials(rem)) b.labels.emplace_back(static_cast<int>(k), u);
  }
  for (size_t i = 0; i < b.labels.size(); ++i) b.index.emplace(b.labels[i], static_cast<int>(i));
  return b;
}

SparseMatrixQ expand_matrix(const BaseRing& base, const PolyMatrix& d,
                            const std::vector<int>& src_degrees,
                            const std::vector<int>& dst_degrees, int t) {
  PieceBasis src = module_piece(base, src_degrees, t);
  PieceBasis dst = module_piece(base, dst_degrees, t);
  SparseMatrixQ m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    const auto& [k, u] = src.labels[j];
    for (int r = 0; r < d.rows; ++r) {
      const Poly* e = d.get(r, k);
      if (!e) continue;
      Poly moved = base.reduce(e->mono_multiple(u, Rat(1)));
      for (const auto& [mono, c] : moved.terms()) m.add(dst.index.at({r, mono}), j, c);
    }
  }
  return m;
}

int FreeResolution::betti(int i) const {
  if (i < 0 || i >= static_cast<int>(degrees.size())) return 0;
  return static_cast<int>(degrees[i].size());
}

std::map<std::pair<int, int>, int> FreeResolution::graded_betti() const {
  std::map<std::pair<int, int>, int> out;
  for (size_t i = 0; i < degrees.size(); ++i)
    for (int t : degrees[i]) out[{static_cast<int>(i), t}] += 1;
  return out;
}

bool FreeResolution::is_minimal() const {
  for (const PolyMatrix& d : diffs)
    for (const auto& entry : d.entries)
      if (entry.second.degree() == 0) return false;
  return true;
}

FreeResolution minimal_resolution(BaseRing base, const std::vector<Poly>& gens, int hom_bound,
                                  int deg_bound) {
  if (hom_bound < 1 || deg_bound < 1)
    throw std::invalid_argument("resolution bounds must be >= 1");
  FreeResolution res{std::move(base), hom_bound, deg_bound, {}, {}, false};
  res.degrees.push_back({0});
  res.diffs.emplace_back();
  if (gens.empty()) {
    res.complete = true;
    return res;
  }

  PolyMatrix d1;
  d1.rows = 1;
  d1.cols = static_cast<int>(gens.size());
  std::vector<int> f1;
  for (size_t j = 0; j < gens.size(); ++j) {
    Poly g = res.base.reduce(gens[j]);
    if (g.is_zero() || !g.is_homogeneous())
      throw std::invalid_argument("resolution wants nonzero homogeneous generators");
    f1.push_back(g.degree());
    d1.set(0, static_cast<int>(j), std::move(g));
  }
  res.degrees.push_back(std::move(f1));
  res.diffs.push_back(std::move(d1));

  for (int i = 1; i < hom_bound; ++i) {
    const std::vector<int>& src = res.degrees[i];
    const std::vector<int>& dst = res.degrees[i - 1];
    std::vector<PieceBasis> pieces(deg_bound + 1);
    std::vector<std::vector<SparseVec>> kernels(deg_bound + 1);
    for (int t = 0; t <= deg_bound; ++t) {
      pieces[t] = module_piece(res.base, src, t);
      if (pieces[t].dim() == 0) continue;
      kernels[t] = exact_rank_and_kernel(expand_matrix(res.base, res.diffs[i], src, dst, t)).kernel;
    }

    std::vector<int> next_degrees;
    std::vector<std::vector<std::pair<int, Poly>>> next_cols;  // column -> (row, entry)
    const RingSpec& ring = *res.base.ring();
    for (int t = 1; t <= deg_bound; ++t) {
      if (kernels[t].empty()) continue;
      QEchelon swept;
      for (int v = 0; v < ring.nvars(); ++v) {
        int s = t - ring.weights[v];
        if (s < 0 || kernels[s].empty()) continue;
        for (const SparseVec& z : kernels[s]) {
          SparseVec moved;
          for (const auto& [idx, c] : z) {
            const auto& [k, u] = pieces[s].labels[idx];
            Poly p = res.base.reduce(Poly::monomial(res.base.ring(), u, c) *
                                     Poly::variable(res.base.ring(), v));
            for (const auto& [mono, cc] : p.terms()) moved[pieces[t].index.at({k, mono})] += cc;
          }
          std::erase_if(moved, [](const auto& e) { return e.second == 0; });
          swept.add(std::move(moved));
        }
      }
      for (const SparseVec& z : kernels[t]) {
        SparseVec residue = swept.reduce(z);
        if (residue.empty()) continue;
        std::map<int, Poly> col;
        for (const auto& [idx, c] : residue) {
          const auto& [k, u] = pieces[t].labels[idx];
          auto it = col.find(k);
          if (it == col.end())
            col.emplace(k, Poly::monomial(res.base.ring(), u, c));
          else
            it->second = it->second + Poly::monomial(res.base.ring(), u, c);
        }
        next_degrees.push_back(t);
        next_cols.emplace_back(col.begin(), col.end());
        swept.add(std::move(residue));
      }
    }

    if (next_degrees.empty()) {
      res.complete = true;
      break;
    }
    PolyMatrix d;
    d.rows = static_cast<int>(src.size());
    d.cols = static_cast<int>(next_degrees.size());
    for (size_t j = 0; j < next_cols.size(); ++j)
      for (auto& [r, p] : next_cols[j]) d.set(r, static_cast<int>(j), std::move(p));
    res.degrees.push_back(std::move(next_degrees));
    res.diffs.push_back(std::move(d));
  }
  return res;
}

std::map<std::pair<int, int>, int> tor_table(const FreeResolution& res) {
  if (!res.is_minimal()) throw std::logic_error("tor table needs a minimal resolution");
  return res.graded_betti();
}

std::map<std::pair<int, int>, int> tor_table_vs(const FreeResolution& res, const BaseRing& with,
                                                int t_max) {
  t_max = std::min(t_max, res.deg_bound);
  std::map<std::pair<int, int>, int> out;
  for (int i = 0; i <= res.length(); ++i) {
    for (int t = 0; t <= t_max; ++t) {
      int dim = module_piece(with, res.degrees[i], t).dim();
      if (dim == 0) continue;
      int rank_out = 0, rank_in = 0;
      if (i >= 1)
        rank_out =
            exact_rank(expand_matrix(with, res.diffs[i], res.degrees[i], res.degrees[i - 1], t));
      if (i + 1 <= res.length())
        rank_in = exact_rank(
            expand_matrix(with, res.diffs[i + 1], res.degrees[i + 1], res.degrees[i], t));
      int h = dim - rank_out - rank_in;
      if (h > 0) out[{i, t}] = h;
    }
  }
  return out;
}

}  // namespace cotan
