// The Brauer loop model transfer matrix at loop weight beta=1 (e=0): plaquette
// sweep over face configurations, ground-state and stochasticity checks.
#pragma once

#include "brauer/qkz.hpp"

namespace brauer {

struct TransferMatrix {
    BoundaryType type;
    int L;
    VarTablePtr table;                // standard(L, {"w"}), e fixed to 0
    std::shared_ptr<const PatternSpace> space;
    LoopOperator op;

    TransferMatrix(BoundaryType ty, int l, VarTablePtr t, std::shared_ptr<const PatternSpace> sp)
        : type(ty), L(l), table(std::move(t)), space(std::move(sp)), op(space.get(), table) {}
};

TransferMatrix build_transfer(BoundaryType type, int L);
// slice with explicit site arguments and w value
LoopOperator build_transfer_args(BoundaryType type, int L, const PatternSpace& sp,
                                 const VarTablePtr& t, const std::vector<Poly>& zargs,
                                 const Poly& wval);

VerifyReport verify_transfer(const TransferMatrix& T, const QkzSolution& sol);
bool commuting_check(BoundaryType type, int L, const Rational& w1, const Rational& w2,
                     const std::vector<Rational>& zs, const Rational& A);

} // namespace brauer
