// Minimal-degree polynomial solutions of the qKZ system for the five boundary
// types: dense linear solve over monomial coefficients, recurrence/interpolation
// construction, numeric recurrence descent, and the full validation suite.
#pragma once

#include "brauer/rkops.hpp"

#include <memory>
#include <optional>

namespace brauer {

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& w) : std::runtime_error("NoSolution: " + w) {}
};
struct AmbiguousSolution : std::runtime_error {
    explicit AmbiguousSolution(const std::string& w) : std::runtime_error("AmbiguousSolution: " + w) {}
};
struct DegenerateNode : std::runtime_error {
    explicit DegenerateNode(const std::string& w) : std::runtime_error("DegenerateNode: " + w) {}
};

struct DegreeInfo {
    int total = 0;        // homogeneous degree of each component
    int pervar = 0;       // degree bound in each z_i (upper bound for o,m)
    bool bound_is_exact = true;
};
DegreeInfo degree_table(BoundaryType type, int L);

struct QkzSolution {
    BoundaryType type = BoundaryType::I;
    int L = 0;
    VarTablePtr table;                           // standard(L)
    std::shared_ptr<const PatternSpace> space;
    std::vector<Poly> comps;                     // indexed like the space
    std::string normalization;
    std::string method;
    int preanchor_nullity = -1;                  // set by solve_linear

    const Poly& comp(const LinkPattern& p) const { return comps.at(space->index_of(p)); }
};

// proportionality factors; v is the recurrence variable, spectators split into
// those left of the removed pair and those right of it
Poly p_factor_bulk_at(BoundaryType type, const Poly& v, const std::vector<Poly>& left,
                      const std::vector<Poly>& right);
Poly p_factor_left_at(BoundaryType type, const std::vector<Poly>& spectators);
Poly p_factor_right_at(BoundaryType type, const std::vector<Poly>& spectators);

// pattern embeddings used by the recurrences
LinkPattern phi_insert_bulk(const LinkPattern& small, int j);
LinkPattern phi_insert_left(BoundaryType type, const LinkPattern& small);
LinkPattern phi_insert_right(BoundaryType type, const LinkPattern& small);

// substitute src's z-variables by zargs (polynomials over dst); A,e map to A,e
Poly transplant(const Poly& src, const VarTablePtr& dst, const std::vector<Poly>& zargs);

class SolveCache {
public:
    const QkzSolution& get(BoundaryType type, int L);    // recursive strategy by default
    void put(QkzSolution sol);

private:
    std::map<std::pair<char, int>, QkzSolution> cache_;
};

QkzSolution base_solution(BoundaryType type, int L);     // L <= 1
QkzSolution solve_linear(BoundaryType type, int L, SolveCache& cache);
QkzSolution solve_recursive(BoundaryType type, int L, SolveCache& cache);

VerifyReport verify_solution(const QkzSolution& sol);
VerifyReport verify_component_relations(const QkzSolution& sol);
VerifyReport verify_recurrences(const QkzSolution& solL, const QkzSolution* solLm1,
                                const QkzSolution& solLm2);

// exact evaluation of the e=0 solution vector by numeric recurrence descent
std::vector<Rational> evaluate_point(BoundaryType type, int L, const std::vector<Rational>& zs,
                                     const Rational& A);

struct Eps2AReport {
    VerifyReport rep;
    std::vector<bool> vanished;      // per component
};
Eps2AReport eps2A_factorization(const QkzSolution& sol);

// complete factorization into rational linear forms; nullopt when impossible
// with the small-coefficient atom set
std::optional<std::vector<std::pair<Poly, int>>> factor_linear_complete(const Poly& p, Rational* unit);

// anchor component and its factorized target value (types p,i,o,m)
std::pair<LinkPattern, Poly> anchor_target(BoundaryType type, int L, const VarTablePtr& t);

} // namespace brauer
