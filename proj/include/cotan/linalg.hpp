#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cotan/rational.hpp"

namespace cotan {

// Sparse column vector: index -> nonzero rational entry.
using SparseVec = std::map<int, Rat>;

void vec_axpy(SparseVec& y, const Rat& a, const SparseVec& x);  // y += a*x
SparseVec vec_scale(const SparseVec& x, const Rat& a);
std::vector<Rat> vec_to_dense(const SparseVec& x, int dim);

// Exact sparse matrix over Q. Rows and columns are 0-indexed.
class SparseMatrixQ {
 public:
  SparseMatrixQ() = default;
  SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rat& v);
  void add(int r, int c, const Rat& v);
  Rat get(int r, int c) const;

  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }
  SparseVec column(int c) const;
  std::vector<SparseVec> columns() const;
  // row-major view used by elimination: for row r, map col -> entry
  std::vector<SparseVec> row_vectors() const;

  bool is_zero() const { return entries_.empty(); }

 private:
  int rows_ = 0, cols_ = 0;
  std::map<std::pair<int, int>, Rat> entries_;
};

// multiply: (a*b), exact
SparseMatrixQ mat_mul(const SparseMatrixQ& a, const SparseMatrixQ& b);

struct RankKernel {
  int rank = 0;
  std::vector<SparseVec> kernel;  // canonical RREF kernel basis, free columns ascending
};

// Reduced row echelon with deterministic pivoting (lowest column index, then lowest
// row index). Kernel basis is the canonical one read off the RREF.
RankKernel exact_rank_and_kernel(const SparseMatrixQ& m);
int exact_rank(const SparseMatrixQ& m);

// Incremental exact row space: add vectors, query rank and residuals.
// Rows are kept fully reduced (Gauss-Jordan), pivots normalized to 1.
class QEchelon {
 public:
  // reduces v against the stored rows; if a nonzero residual remains it is stored
  // (rank grows) and true is returned
  bool add(SparseVec v);
  // residual of v modulo the stored row space (canonical, fully reduced)
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void eliminate(SparseVec& v) const;
  std::map<int, SparseVec> rows_;  // pivot column -> normalized reduced row
};

// Span with coordinates: solves target = sum c_i * gen_i exactly when possible.
class SpanSolver {
 public:
  explicit SpanSolver(int dim) : dim_(dim) {}
  // returns the index of the generator (position in the added order)
  int add_generator(const SparseVec& v);
  int generator_count() const { return ngen_; }
  // coefficients over the added generators, or nullopt if target is outside the span
  std::optional<std::vector<Rat>> solve(const SparseVec& target) const;

 private:
  int dim_;
  int ngen_ = 0;
  std::map<int, SparseVec> rows_;  // pivot (real coords only) -> augmented row
};

}  // namespace cotan
