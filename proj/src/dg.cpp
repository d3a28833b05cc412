#include "cotan/dg.hpp"

#include <algorithm>
#include <sstream>

namespace cotan {

const std::vector<Monomial>& DGAlgebra::coeff_monomials(int t) const {
  if (base_) return base_->std_monomials(t);
  auto it = free_monomials_.find(t);
  if (it != free_monomials_.end()) return it->second;
  return free_monomials_.emplace(t, graded_piece_basis(*ring_, t)).first->second;
}

void DGAlgebra::check_term(const VarWord& w) const {
  for (const auto& [id, e] : w.evens) {
    if (id < 0 || id >= var_count() || vars_[id].hom_degree % 2 != 0 || e < 1)
      throw std::invalid_argument("malformed even variable power");
  }
  for (int id : w.odds)
    if (id < 0 || id >= var_count() || vars_[id].hom_degree % 2 != 1)
      throw std::invalid_argument("malformed odd variable factor");
}

int DGAlgebra::add_variable(std::string name, int hom_degree, int int_degree, DGElement boundary,
                            int step) {
  if (hom_degree < 1) throw std::invalid_argument("adjoined variable needs hom degree >= 1");
  if (int_degree < 1) throw std::invalid_argument("adjoined variable needs internal degree >= 1");
  if (!vars_.empty() && hom_degree < vars_.back().hom_degree)
    throw std::invalid_argument("variables must be adjoined in nondecreasing hom degree");
  if (step < max_step_) throw std::invalid_argument("adjunction steps must be nondecreasing");

  // normalize and validate the boundary: bidegree (hom_degree-1, int_degree), a cycle
  DGElement b;
  for (const auto& [w, c] : boundary.terms) {
    check_term(w);
    Poly r = reduce(c);
    if (!r.is_zero()) b.terms.emplace(w, std::move(r));
  }
  if (!b.is_zero()) {
    auto bd = bidegree(b);
    if (!bd) throw std::invalid_argument("boundary is not bihomogeneous: " + to_string(b));
    if (bd->first != hom_degree - 1)
      throw std::invalid_argument("boundary hom degree mismatch: " + to_string(b));
    if (bd->second != int_degree)
      throw std::invalid_argument("boundary internal degree mismatch: " + to_string(b));
    DGElement dd = differential(b);
    if (!dd.is_zero())
      throw std::invalid_argument("boundary is not a cycle: d(" + to_string(b) +
                                  ") = " + to_string(dd));
  }
  DGVariable v;
  v.id = var_count();
  v.name = std::move(name);
  v.hom_degree = hom_degree;
  v.int_degree = int_degree;
  v.boundary = std::move(b);
  v.adjunction_step = step;
  vars_.push_back(std::move(v));
  max_step_ = std::max(max_step_, step);
  return vars_.back().id;
}

std::vector<int> DGAlgebra::variables_of_step(int step) const {
  std::vector<int> out;
  for (const auto& v : vars_)
    if (v.adjunction_step == step) out.push_back(v.id);
  return out;
}

std::vector<int> DGAlgebra::variables_of_hom_degree(int hom) const {
  std::vector<int> out;
  for (const auto& v : vars_)
    if (v.hom_degree == hom) out.push_back(v.id);
  return out;
}

DGElement DGAlgebra::coeff_element(const Poly& c) const {
  DGElement e;
  Poly r = reduce(c);
  if (!r.is_zero()) e.terms.emplace(VarWord{}, std::move(r));
  return e;
}

DGElement DGAlgebra::var_element(int id) const {
  const DGVariable& v = variable(id);
  VarWord w;
  if (v.hom_degree % 2 == 0)
    w.evens.emplace_back(id, 1);
  else
    w.odds.push_back(id);
  DGElement e;
  e.terms.emplace(std::move(w), Poly(ring_, Rat(1)));
  return e;
}

namespace {

void accumulate(DGElement& acc, const VarWord& w, const Poly& c) {
  if (c.is_zero()) return;
  auto it = acc.terms.find(w);
  if (it == acc.terms.end()) {
    acc.terms.emplace(w, c);
  } else {
    Poly s = it->second + c;
    if (s.is_zero())
      acc.terms.erase(it);
    else
      it->second = std::move(s);
  }
}

// merge sorted odd id lists counting inversions; returns 0 on a repeated id
int merge_odds(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<int, int>> merge_evens(const std::vector<std::pair<int, int>>& a,
                                             const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

}  // namespace

DGElement DGAlgebra::add(const DGElement& a, const DGElement& b) const {
  DGElement out = a;
  for (const auto& [w, c] : b.terms) accumulate(out, w, c);
  return out;
}

DGElement DGAlgebra::scale(const DGElement& a, const Rat& c) const {
  DGElement out;
  if (c == 0) return out;
  for (const auto& [w, p] : a.terms) out.terms.emplace(w, p * c);
  return out;
}

DGElement DGAlgebra::mul(const DGElement& a, const DGElement& b) const {
  DGElement out;
  std::vector<int> odds;
  for (const auto& [wa, ca] : a.terms) {
    check_term(wa);
    for (const auto& [wb, cb] : b.terms) {
      int sign = merge_odds(wa.odds, wb.odds, odds);
      if (sign == 0) continue;
      Poly c = reduce(ca * cb);
      if (c.is_zero()) continue;
      VarWord w;
      w.evens = merge_evens(wa.evens, wb.evens);
      w.odds = odds;
      accumulate(out, w, sign == 1 ? c : -c);
    }
  }
  return out;
}

DGElement DGAlgebra::mul_poly(const Poly& c, const DGElement& a) const {
  DGElement out;
  for (const auto& [w, p] : a.terms) {
    Poly r = reduce(c * p);
    if (!r.is_zero()) out.terms.emplace(w, std::move(r));
  }
  return out;
}

DGElement DGAlgebra::differential(const DGElement& a) const {
  // Leibniz over the reference factor order [even powers][ascending odd factors];
  // even factors contribute no sign, the p-th odd factor contributes (-1)^p
  DGElement out;
  DGElement single;
  for (const auto& [w, c] : a.terms) {
    check_term(w);
    for (size_t k = 0; k < w.evens.size(); ++k) {
      auto [id, e] = w.evens[k];
      if (vars_[id].boundary.is_zero()) continue;
      VarWord rest = w;
      if (e == 1)
        rest.evens.erase(rest.evens.begin() + k);
      else
        rest.evens[k].second -= 1;
      single.terms.clear();
      single.terms.emplace(std::move(rest), c * Rat(e));
      out = add(out, mul(vars_[id].boundary, single));
    }
    for (size_t p = 0; p < w.odds.size(); ++p) {
      int id = w.odds[p];
      if (vars_[id].boundary.is_zero()) continue;
      VarWord rest = w;
      rest.odds.erase(rest.odds.begin() + p);
      single.terms.clear();
      single.terms.emplace(std::move(rest), p % 2 == 0 ? c : -c);
      out = add(out, mul(vars_[id].boundary, single));
    }
  }
  return out;
}

int DGAlgebra::word_hom_degree(const VarWord& w) const {
  int d = 0;
  for (const auto& [id, e] : w.evens) d += vars_.at(id).hom_degree * e;
  for (int id : w.odds) d += vars_.at(id).hom_degree;
  return d;
}

int DGAlgebra::word_int_degree(const VarWord& w) const {
  int d = 0;
  for (const auto& [id, e] : w.evens) d += vars_.at(id).int_degree * e;
  for (int id : w.odds) d += vars_.at(id).int_degree;
  return d;
}

std::optional<std::pair<int, int>> DGAlgebra::bidegree(const DGElement& a) const {
  std::optional<std::pair<int, int>> bd;
  for (const auto& [w, c] : a.terms) {
    if (!c.is_homogeneous()) return std::nullopt;
    std::pair<int, int> cur{word_hom_degree(w), word_int_degree(w) + c.degree()};
    if (bd && *bd != cur) return std::nullopt;
    bd = cur;
  }
  return bd;
}

std::string DGAlgebra::to_string(const DGElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (c.term_count() > 1)
      os << "(" << cs << ")";
    else
      os << cs;
    for (const auto& [id, e] : w.evens) {
      os << "*" << vars_[id].name;
      if (e > 1) os << "^" << e;
    }
    for (int id : w.odds) os << "*" << vars_[id].name;
  }
  return os.str();
}

BidegreeBasis DGAlgebra::basis(int step_limit, int hom, int t) const {
  BidegreeBasis b;
  b.step_limit = step_limit;
  b.hom = hom;
  b.t = t;
  if (hom < 0 || t < 0) return b;

  std::vector<int> usable;
  for (const auto& v : vars_)
    if (v.adjunction_step <= step_limit) usable.push_back(v.id);

  std::vector<std::pair<VarWord, Monomial>> labels;
  VarWord cur;
  // depth-first over variable exponents; leftover internal degree goes to coefficients
  auto rec = [&](auto&& self, size_t k, int hom_left, int int_left) -> void {
    if (hom_left == 0) {
      for (const auto& m : coeff_monomials(int_left)) labels.emplace_back(cur, m);
      return;
    }
    if (k == usable.size()) return;
    const DGVariable& v = vars_[usable[k]];
    self(self, k + 1, hom_left, int_left);  // exponent 0
    if (v.hom_degree % 2 == 1) {
      if (v.hom_degree <= hom_left && v.int_degree <= int_left) {
        cur.odds.push_back(v.id);
        self(self, k + 1, hom_left - v.hom_degree, int_left - v.int_degree);
        cur.odds.pop_back();
      }
    } else {
      for (int e = 1; e * v.hom_degree <= hom_left && e * v.int_degree <= int_left; ++e) {
        cur.evens.emplace_back(v.id, e);
        self(self, k + 1, hom_left - e * v.hom_degree, int_left - e * v.int_degree);
        cur.evens.pop_back();
      }
    }
  };
  rec(rec, 0, hom, t);

  std::sort(labels.begin(), labels.end(), [&](const auto& a, const auto& c) {
    if (a.first != c.first) return a.first < c.first;
    return degrevlex_less(*ring_, c.second, a.second);  // degrevlex descending
  });
  b.labels = std::move(labels);
  for (size_t i = 0; i < b.labels.size(); ++i) b.index.emplace(b.labels[i], static_cast<int>(i));
  return b;
}

SparseMatrixQ DGAlgebra::diff_matrix(const BidegreeBasis& src, const BidegreeBasis& dst) const {
  if (src.hom != dst.hom + 1 || src.t != dst.t)
    throw std::invalid_argument("differential matrix bidegree mismatch");
  SparseMatrixQ m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    const auto& [w, u] = src.labels[j];
    DGElement e;
    e.terms.emplace(w, Poly::monomial(ring_, u));
    DGElement d = differential(e);
    for (const auto& [w2, c2] : d.terms)
      for (const auto& [m2, r2] : c2.terms()) m.add(dst.index.at({w2, m2}), j, r2);
  }
  return m;
}

SparseVec DGAlgebra::to_vector(const DGElement& a, const BidegreeBasis& basis) const {
  SparseVec v;
  for (const auto& [w, c] : a.terms)
    for (const auto& [m, r] : c.terms()) v[basis.index.at({w, m})] = r;
  return v;
}

DGElement DGAlgebra::from_vector(const SparseVec& v, const BidegreeBasis& basis) const {
  DGElement e;
  for (const auto& [i, c] : v) {
    const auto& [w, m] = basis.labels.at(i);
    Poly p = Poly::monomial(ring_, m, c);
    auto it = e.terms.find(w);
    if (it == e.terms.end())
      e.terms.emplace(w, std::move(p));
    else
      it->second = it->second + p;
  }
  return e;
}

LabeledFreeModule DGAlgebra::to_free_module(const BidegreeBasis& basis) const {
  LabeledFreeModule f;
  for (const auto& [w, m] : basis.labels) {
    std::ostringstream os;
    os << mono_to_string(*ring_, m);
    for (const auto& [id, e] : w.evens) {
      os << "*" << vars_[id].name;
      if (e > 1) os << "^" << e;
    }
    for (int id : w.odds) os << "*" << vars_[id].name;
    f.basis.push_back({os.str(), basis.t});
  }
  return f;
}

std::vector<int> adjoin_variables(DGAlgebra& algebra, const std::vector<DGElement>& cycles,
                                  int hom_degree, int step, int zero_cycle_int_degree) {
  std::vector<int> ids;
  int serial = static_cast<int>(algebra.variables_of_hom_degree(hom_degree).size());
  for (const auto& z : cycles) {
    int t;
    if (z.is_zero()) {
      if (zero_cycle_int_degree < 1)
        throw std::invalid_argument("zero cycle needs an explicit internal degree");
      t = zero_cycle_int_degree;
    } else {
      auto bd = algebra.bidegree(z);
      if (!bd || bd->first != hom_degree - 1)
        throw std::invalid_argument("cycle has wrong homological degree: " + algebra.to_string(z));
      t = bd->second;
    }
    std::string name = "T" + std::to_string(hom_degree) + "_" + std::to_string(serial++);
    ids.push_back(algebra.add_variable(std::move(name), hom_degree, t, z, step));
  }
  return ids;
}

}  // namespace cotan
