// Exact sparse linear algebra over the rationals. Rows are reduced incrementally
// against the current pivot set (integer-primitive rows, cross-multiplication,
// content extraction), then back-eliminated to the unique RREF, so the result is
// invariant under row permutation of the input.
#pragma once

#include "brauer/rational.hpp"

#include <vector>

namespace brauer {

struct Inconsistent : std::runtime_error {
    Inconsistent() : std::runtime_error("linear system is inconsistent") {}
};

struct LinSolveResult {
    int ncols = 0;
    int rank = 0;
    std::vector<int> pivot_cols;
    bool has_rhs = false;
    std::vector<Rational> particular;               // empty unless has_rhs
    std::vector<std::vector<Rational>> nullspace;   // primitive basis vectors
    int nullity() const { return ncols - rank; }
};

class SparseSolver {
public:
    explicit SparseSolver(int ncols);
    ~SparseSolver();
    SparseSolver(const SparseSolver&) = delete;
    SparseSolver& operator=(const SparseSolver&) = delete;

    // entries: (col, coeff), cols in [0, ncols); duplicates allowed (summed)
    void add_row(const std::vector<std::pair<int, Rational>>& entries,
                 const Rational& rhs = Rational(0));

    int current_rank() const;

    // Finalizes RREF. If has_rhs, throws Inconsistent when no solution exists.
    LinSolveResult solve(bool want_nullspace, bool has_rhs);

private:
    struct Impl;
    Impl* impl_;
};

LinSolveResult solve_sparse_linear_exact(int ncols,
                                         const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                                         const std::vector<Rational>* rhs);

} // namespace brauer
