// Smith normal form over a univariate polynomial ring k[y], with accumulated
// unimodular transformations P * A * Q = D and d_i | d_{i+1}.
#pragma once

#include <optional>

#include "degenlab/matrix.hpp"

namespace degenlab {

struct SmithResult {
    PolyMatrix D;   // diagonal, invariant factors monic, zeros trailing
    PolyMatrix P;   // rows x rows, det in k^x
    PolyMatrix Q;   // cols x cols, det in k^x
    int rank = 0;   // number of nonzero invariant factors
};

// Requires a one-variable ring. Throws std::invalid_argument otherwise.
SmithResult smith_normal_form(const PolyMatrix& a);

// Exact solution X of A * X = B over k[y] through the Smith form of A;
// nullopt when no polynomial solution exists.
std::optional<PolyMatrix> solve_via_snf(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace degenlab
