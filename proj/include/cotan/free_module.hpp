#pragma once

#include <string>
#include <vector>

#include "cotan/linalg.hpp"

namespace cotan {

// Free module with printable basis labels carrying internal degrees.
struct LabeledFreeModule {
  struct Basis {
    std::string label;
    int degree = 0;
  };
  std::vector<Basis> basis;

  int rank() const { return static_cast<int>(basis.size()); }
};

// One graded slice of a complex: a basis for bidegree (i, t) and the differential
// matrix into the (i-1, t) slice.
struct ComplexSlice {
  LabeledFreeModule module;
  SparseMatrixQ differential;  // rows: target basis, cols: this basis
};

}  // namespace cotan
