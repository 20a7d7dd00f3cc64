// R-matrices, K-matrices, sigma, divided differences and the symbolic
// verification of the operator identities. All loop-weight beta factors are
// absorbed with (2A-e)*beta = 2(A-e), so entries stay in LinFrac with linear
// denominators.
#pragma once

#include "brauer/linfrac.hpp"
#include "brauer/linkpat.hpp"

#include <functional>

namespace brauer {

struct InvalidKind : std::runtime_error {
    explicit InvalidKind(const std::string& w) : std::runtime_error("InvalidKind: " + w) {}
};

// the shift parameter as a polynomial in e: e for p,i,c and e/2 for o,m
Poly shift_s(const VarTablePtr& t, BoundaryType type);

class LoopOperator {
public:
    LoopOperator(const PatternSpace* space, VarTablePtr table)
        : space_(space), table_(std::move(table)) {}
    static LoopOperator identity(const PatternSpace* space, VarTablePtr table);

    const PatternSpace* space() const { return space_; }
    const VarTablePtr& table() const { return table_; }
    const std::map<std::pair<int, int>, LinFrac>& entries() const { return m_; }

    void add(int row, int col, const LinFrac& v);
    LinFrac entry(int row, int col) const;

    std::vector<LinFrac> apply(const std::vector<LinFrac>& v) const;
    std::vector<LinFrac> apply_poly(const std::vector<Poly>& v) const;
    LoopOperator compose(const LoopOperator& rhs) const;   // (*this) o rhs
    LoopOperator operator-(const LoopOperator& o) const;
    LoopOperator scaled(const LinFrac& c) const;
    LoopOperator substitute_var(int var, const Poly& value) const;
    bool is_zero() const;
    bool operator==(const LoopOperator& o) const { return (*this - o).is_zero(); }

private:
    const PatternSpace* space_;
    VarTablePtr table_;
    std::map<std::pair<int, int>, LinFrac> m_;
};

// checked operators on a pattern space; `arg` is any polynomial of degree <= 1
LoopOperator build_R(const PatternSpace& sp, int i, const Poly& arg);
LoopOperator build_K0(const PatternSpace& sp, const Poly& arg);   // identity when trivial
LoopOperator build_KL(const PatternSpace& sp, const Poly& arg);
LoopOperator build_sigma(const PatternSpace& sp, const VarTablePtr& t);
// plain generator matrix with absorbed loop weights (beta -> 2(A-e)/(2A-e))
LoopOperator build_generator_absorbed(const PatternSpace& sp, const Generator& g, const VarTablePtr& t);
// generator matrix over Q[beta] for the algebra-relation suite
// (beta must be a variable of the table)
LoopOperator build_generator_beta(const PatternSpace& sp, const Generator& g, const VarTablePtr& t);

// numerator form of R: r(arg)*R_i(arg), a polynomial matrix
LoopOperator build_R_numerator(const PatternSpace& sp, int i, const Poly& arg);

struct VerifyReport {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
};

VerifyReport verify_operator_identities(BoundaryType type, int L, const std::string& which);
VerifyReport verify_algebra_relations(BoundaryType type, int L);

// divided differences on component vectors over the standard table
// i in 0..L; kind: plain or primed (primed only for 0<i<L)
enum class DivDiff { Plain, Primed };
std::vector<LinFrac> divided_difference(BoundaryType type, const std::vector<Poly>& v, int L, int i,
                                        DivDiff kind);
Poly simple_root(const VarTablePtr& t, BoundaryType type, int L, int i);
Poly tau_apply(BoundaryType type, int L, const Poly& p, int i);   // Weyl reflection on polynomials

} // namespace brauer
