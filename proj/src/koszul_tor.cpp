#include "cotan/koszul_tor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cotan/tate.hpp"

namespace cotan {

namespace {

int at(const std::map<int, int>& m, int t) {
  auto it = m.find(t);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

int KoszulHomology::dim(int i, int t) const {
  auto it = dims.find({i, t});
  return it == dims.end() ? 0 : it->second;
}

KoszulHomology koszul_homology(const IdealPresentation& ideal, int i_max, int t_max) {
  if (i_max < 1 || t_max < 1) throw std::invalid_argument("koszul bounds must be >= 1");
  Resolvent x = build_quotient_resolvent(ideal, 1, t_max);
  KoszulHomology kh{std::move(x.algebra), i_max, t_max, {}, {}, {}, {}, {}, {}};
  const DGAlgebra& a = kh.algebra;
  for (int i = 0; i <= i_max; ++i) {
    HomologyModule h = homology_module(a, 1, i, t_max);
    for (const auto& [t, d] : h.dims) kh.dims[{i, t}] = d;
    if (i == 1) {
      kh.h1_gens = std::move(h.gens);
      kh.h1_degrees = std::move(h.gen_degrees);
    } else if (i == 2) {
      kh.h2_gens = std::move(h.gens);
      kh.h2_degrees = std::move(h.gen_degrees);
    }
  }

  std::vector<std::pair<int, DGElement>> products;  // (degree, h1_gen product), nonzero only
  for (size_t p = 0; p < kh.h1_gens.size(); ++p)
    for (size_t q = p + 1; q < kh.h1_gens.size(); ++q) {
      DGElement prod = a.mul(kh.h1_gens[p], kh.h1_gens[q]);
      if (prod.is_zero()) continue;
      if (!a.differential(prod).is_zero())
        throw std::logic_error("product of Koszul cycles failed to be a cycle");
      products.emplace_back(kh.h1_degrees[p] + kh.h1_degrees[q], std::move(prod));
    }
  for (int t = 0; t <= t_max; ++t) {
    BidegreeBasis b2 = a.basis(1, 2, t);
    if (b2.dim() == 0) continue;
    QEchelon ech;
    for (SparseVec& col : a.diff_matrix(a.basis(1, 3, t), b2).columns()) ech.add(std::move(col));
    int boundary_rank = ech.rank();
    for (const auto& [d, prod] : products) {
      if (t - d < 0) continue;
      for (const Monomial& u : a.coeff_monomials(t - d))
        ech.add(a.to_vector(a.mul_poly(Poly::monomial(a.ring(), u), prod), b2));
    }
    int dim = ech.rank() - boundary_rank;
    if (dim > 0) kh.h1_square_dims[t] = dim;
  }
  return kh;
}

std::map<int, int> t3_via_koszul(const KoszulHomology& kh) {
  std::map<int, int> out;
  for (int t = 0; t <= kh.t_max; ++t) {
    int v = kh.dim(2, t) - at(kh.h1_square_dims, t);
    if (v < 0) throw std::logic_error("H_1^2 dim exceeds H_2 dim");
    if (v > 0) out[t] = v;
  }
  return out;
}

std::map<int, int> exterior_square_dims(const BaseRing& base, const std::vector<int>& gen_degrees,
                                        const std::vector<std::vector<SparseVec>>& relations,
                                        int t_max) {
  std::map<int, int> out;
  int n = static_cast<int>(gen_degrees.size());
  for (int t = 0; t <= t_max; ++t) {
    std::map<std::tuple<int, int, Monomial>, int> index;
    int dim = 0;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int rem = t - gen_degrees[j] - gen_degrees[k];
        if (rem < 0) continue;
        for (const Monomial& u : base.monomials(rem)) index[{j, k, u}] = dim++;
      }
    if (dim == 0) continue;
    QEchelon image;
    for (int j = 0; j < n; ++j) {
      int s = t - gen_degrees[j];
      if (s < 0 || s >= static_cast<int>(relations.size()) || relations[s].empty()) continue;
      PieceBasis piece = module_piece(base, gen_degrees, s);
      for (const SparseVec& rho : relations[s]) {
        SparseVec w;
        for (const auto& [pos, c] : rho) {
          const auto& [k, u] = piece.labels.at(pos);
          if (k == j) continue;
          auto it = index.find({std::min(j, k), std::max(j, k), u});
          if (it == index.end()) throw std::logic_error("exterior square index misalignment");
          Rat& slot = w[it->second];
          slot += (j < k) ? c : -c;
          if (slot == 0) w.erase(it->second);
        }
        image.add(std::move(w));
      }
    }
    int h = dim - image.rank();
    if (h > 0) out[t] = h;
  }
  return out;
}

GradedPresentation h1_presentation(const KoszulHomology& kh, const QuotientRing& s, int t_max) {
  GradedPresentation pres;
  pres.gen_degrees = kh.h1_degrees;
  pres.relations.assign(t_max + 1, {});
  if (kh.h1_gens.empty()) return pres;
  BaseRing base(s);
  const DGAlgebra& a = kh.algebra;
  for (int t = 0; t <= t_max; ++t) {
    PieceBasis piece = module_piece(base, pres.gen_degrees, t);
    if (piece.dim() == 0) continue;
    BidegreeBasis b1 = a.basis(1, 1, t);
    QEchelon boundaries;
    for (SparseVec& col : a.diff_matrix(a.basis(1, 2, t), b1).columns())
      boundaries.add(std::move(col));
    SparseMatrixQ m(b1.dim(), piece.dim());
    for (int c = 0; c < piece.dim(); ++c) {
      const auto& [k, u] = piece.labels[c];
      DGElement el = a.mul_poly(Poly::monomial(a.ring(), u), kh.h1_gens[k]);
      for (const auto& [r, v] : boundaries.reduce(a.to_vector(el, b1))) m.set(r, c, v);
    }
    pres.relations[t] = exact_rank_and_kernel(m).kernel;
  }
  return pres;
}

void CheckReport::add(int t, bool ok, std::string detail) {
  rows.push_back({t, ok, std::move(detail)});
  if (!ok) all_ok = false;
}

CheckReport tkos_sequence_check(const std::map<int, int>& h3, const std::map<int, int>& wedge_h1,
                                const std::map<int, int>& h2, const std::map<int, int>& h1_square,
                                const std::map<int, int>& t4, const std::map<int, int>& t3,
                                int t_max) {
  CheckReport report;
  report.name = "stage-one homology sequence";
  for (int t = 0; t <= t_max; ++t) {
    int lo = at(wedge_h1, t) - at(h1_square, t);
    int hi = lo + at(h3, t);
    bool ok_t3 = at(t3, t) == at(h2, t) - at(h1_square, t);
    bool ok_t4 = lo <= at(t4, t) && at(t4, t) <= hi;
    std::ostringstream os;
    os << "T_3=" << at(t3, t) << " vs H_2-H_1^2=" << at(h2, t) - at(h1_square, t) << "; T_4="
       << at(t4, t) << " in [" << lo << "," << hi << "]";
    report.add(t, ok_t3 && ok_t4, os.str());
  }
  return report;
}

CheckReport wedge_tor_check(const std::map<int, int>& tor2, const std::map<int, int>& wedge_conormal,
                            const std::map<int, int>& t2, const std::map<int, int>& t3,
                            const std::map<int, int>& h2, const std::map<int, int>& h1_square,
                            int t_max) {
  CheckReport report;
  report.name = "conormal wedge vs Tor_2";
  bool split = t3.empty();
  for (int t = 0; t <= t_max && split; ++t)
    if (at(h2, t) != at(h1_square, t)) split = false;
  for (int t = 0; t <= t_max; ++t) {
    int lo = at(t2, t);
    int hi = at(wedge_conormal, t) + at(t2, t);
    bool ok = split ? at(tor2, t) == hi : (lo <= at(tor2, t) && at(tor2, t) <= hi);
    std::ostringstream os;
    os << "Tor_2=" << at(tor2, t) << (split ? " == " : " in [") << (split ? hi : lo);
    if (!split) os << "," << hi << "]";
    os << " (wedge=" << at(wedge_conormal, t) << ", T_2=" << at(t2, t) << ")";
    report.add(t, ok, os.str());
  }
  return report;
}

}  // namespace cotan
