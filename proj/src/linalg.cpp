#include "cotan/linalg.hpp"

#include <stdexcept>

namespace cotan {

void vec_axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseVec vec_scale(const SparseVec& x, const Rat& a) {
  SparseVec y;
  if (a == 0) return y;
  for (const auto& [i, v] : x) y.emplace(i, a * v);
  return y;
}

std::vector<Rat> vec_to_dense(const SparseVec& x, int dim) {
  std::vector<Rat> d(dim, Rat(0));
  for (const auto& [i, v] : x) d.at(i) = v;
  return d;
}

void SparseMatrixQ::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrixQ::add(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  auto key = std::make_pair(r, c);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (v != 0) entries_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

Rat SparseMatrixQ::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

SparseVec SparseMatrixQ::column(int c) const {
  SparseVec v;
  for (auto it = entries_.lower_bound({0, 0}); it != entries_.end(); ++it)
    if (it->first.second == c) v.emplace(it->first.first, it->second);
  return v;
}

std::vector<SparseVec> SparseMatrixQ::columns() const {
  std::vector<SparseVec> cols(cols_);
  for (const auto& [rc, v] : entries_) cols[rc.second].emplace(rc.first, v);
  return cols;
}

std::vector<SparseVec> SparseMatrixQ::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (const auto& [rc, v] : entries_) rows[rc.first].emplace(rc.second, v);
  return rows;
}

SparseMatrixQ mat_mul(const SparseMatrixQ& a, const SparseMatrixQ& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  auto brows = b.row_vectors();
  SparseMatrixQ out(a.rows(), b.cols());
  for (const auto& [rc, v] : a.entries())
    for (const auto& [c, w] : brows[rc.second]) out.add(rc.first, c, v * w);
  return out;
}

void QEchelon::eliminate(SparseVec& v) const {
  for (const auto& [pc, row] : rows_) {
    auto it = v.find(pc);
    if (it == v.end()) continue;
    Rat coef = -it->second;
    vec_axpy(v, coef, row);
  }
}

bool QEchelon::add(SparseVec v) {
  eliminate(v);
  if (v.empty()) return false;
  int pivot = v.begin()->first;
  Rat inv = 1 / v.begin()->second;
  for (auto& [i, c] : v) c *= inv;
  for (auto& [pc, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    Rat coef = -it->second;
    vec_axpy(row, coef, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

SparseVec QEchelon::reduce(SparseVec v) const {
  eliminate(v);
  return v;
}

RankKernel exact_rank_and_kernel(const SparseMatrixQ& m) {
  RankKernel rk;
  // full Gauss-Jordan; the RREF is unique, so the kernel basis below is canonical
  std::map<int, SparseVec> rows;
  for (auto& r : m.row_vectors()) {
    SparseVec v = std::move(r);
    for (const auto& [pc, row] : rows) {
      auto it = v.find(pc);
      if (it == v.end()) continue;
      vec_axpy(v, -it->second, row);
    }
    if (v.empty()) continue;
    int pivot = v.begin()->first;
    Rat inv = 1 / v.begin()->second;
    for (auto& [i, c] : v) c *= inv;
    for (auto& [pc, row] : rows) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      vec_axpy(row, -it->second, v);
    }
    rows.emplace(pivot, std::move(v));
  }
  rk.rank = static_cast<int>(rows.size());
  for (int f = 0; f < m.cols(); ++f) {
    if (rows.count(f)) continue;
    SparseVec k;
    k.emplace(f, Rat(1));
    for (const auto& [pc, row] : rows) {
      auto it = row.find(f);
      if (it != row.end()) k.emplace(pc, -it->second);
    }
    rk.kernel.push_back(std::move(k));
  }
  return rk;
}

int exact_rank(const SparseMatrixQ& m) {
  // forward-only elimination; pivots at lowest available column per incoming row
  std::map<int, SparseVec> rows;
  for (auto& r : m.row_vectors()) {
    SparseVec v = std::move(r);
    while (!v.empty()) {
      int c = v.begin()->first;
      auto it = rows.find(c);
      if (it == rows.end()) break;
      vec_axpy(v, -v.begin()->second, it->second);
    }
    if (v.empty()) continue;
    Rat inv = 1 / v.begin()->second;
    for (auto& [i, c] : v) c *= inv;
    rows.emplace(v.begin()->first, std::move(v));
  }
  return static_cast<int>(rows.size());
}

int SpanSolver::add_generator(const SparseVec& v) {
  int tag = dim_ + ngen_;
  SparseVec row = v;
  row.emplace(tag, Rat(1));
  // eliminate real coordinates only
  for (const auto& [pc, prow] : rows_) {
    auto it = row.find(pc);
    if (it == row.end()) continue;
    vec_axpy(row, -it->second, prow);
  }
  auto lead = row.begin();
  if (lead != row.end() && lead->first < dim_) {
    int pivot = lead->first;
    Rat inv = 1 / lead->second;
    for (auto& [i, c] : row) c *= inv;
    for (auto& [pc, prow] : rows_) {
      auto it = prow.find(pivot);
      if (it == prow.end()) continue;
      vec_axpy(prow, -it->second, row);
    }
    rows_.emplace(pivot, std::move(row));
  }
  return ngen_++;
}

std::optional<std::vector<Rat>> SpanSolver::solve(const SparseVec& target) const {
  SparseVec v = target;
  for (const auto& [pc, prow] : rows_) {
    auto it = v.find(pc);
    if (it == v.end()) continue;
    vec_axpy(v, -it->second, prow);
  }
  if (!v.empty() && v.begin()->first < dim_) return std::nullopt;
  std::vector<Rat> coeffs(ngen_, Rat(0));
  for (const auto& [i, c] : v) coeffs.at(i - dim_) = -c;
  return coeffs;
}

}  // namespace cotan
