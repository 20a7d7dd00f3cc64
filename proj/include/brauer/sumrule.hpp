// Sum rules at e=0: Pfaffian/determinant closed forms, equivariant localization
// fixed-point sums, the permutation-sector identity and commuting-variety degrees.
#pragma once

#include "brauer/qkz.hpp"

namespace brauer {

struct SymmetryViolation : std::runtime_error {
    explicit SymmetryViolation(const std::string& w) : std::runtime_error("SymmetryViolation: " + w) {}
};
struct NotAntisymmetric : std::runtime_error {
    NotAntisymmetric() : std::runtime_error("NotAntisymmetric: pfaffian input") {}
};
struct NotProportional : std::runtime_error {
    explicit NotProportional(const std::string& w) : std::runtime_error("NotProportional: " + w) {}
};

// sum of components at e=0; checks full Weyl symmetry
Poly compute_zsum(const QkzSolution& sol);

// recursive first-row (perfect matching) expansion; input must be exactly antisymmetric
LinFrac pfaffian(const std::vector<std::vector<LinFrac>>& M);
Rational pfaffian_num(std::vector<std::vector<Rational>> M);
Rational determinant_num(std::vector<std::vector<Rational>> M);
LinFrac determinant(const std::vector<std::vector<LinFrac>>& M);

// closed form for Z_L over the standard table (types p,i,c,o)
Poly zformula(BoundaryType type, int L, const VarTablePtr& t);

// fixed-point localization value of mdeg D_N (N = L, 2L, 4L), e = 0
Poly localization_mdeg(BoundaryType type, int L, const VarTablePtr& t);

struct SectorReport {
    VerifyReport rep;
    int observed_exponent = -1;   // Sigma phi = 2^k * product
    Poly sector_sum;              // Sigma phi over the sector
    Poly product;                 // the complete-intersection product
};
SectorReport sector_identity(BoundaryType type, int m, SolveCache& cache);

// degree of the symplectic commuting variety via the evaluation pipeline
Rational commuting_degree(int n);

} // namespace brauer
