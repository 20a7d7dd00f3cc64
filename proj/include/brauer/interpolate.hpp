// Lagrange interpolation in one table variable. Nodes are constants or linear
// forms in the other variables; node differences are divided out in LinFrac and
// the result must clear to a polynomial.
#pragma once

#include "brauer/linfrac.hpp"

#include <vector>

namespace brauer {

struct DuplicateNode : std::runtime_error {
    DuplicateNode() : std::runtime_error("DuplicateNode: coincident interpolation nodes") {}
};
struct InsufficientNodes : std::runtime_error {
    explicit InsufficientNodes(const std::string& w) : std::runtime_error("InsufficientNodes: " + w) {}
};

// unique polynomial of degree <= degree_bound in `var` through (nodes[i], values[i]);
// extra nodes beyond degree_bound+1 are consistency-checked.
Poly lagrange_interpolate(const std::vector<Poly>& nodes, const std::vector<Poly>& values,
                          int var, int degree_bound);

// even interpolation: result is even in `var` of degree <= 2*(nodes-1); node i is
// var = sqrt_nodes[i] (a linear form), and the basis is built in var^2.
Poly lagrange_interpolate_even(const std::vector<Poly>& sqrt_nodes, const std::vector<Poly>& values,
                               int var, int degree_bound_even);

std::vector<Poly> lagrange_interpolate_vec(const std::vector<Poly>& nodes,
                                           const std::vector<std::vector<Poly>>& values,
                                           int var, int degree_bound, bool even);

} // namespace brauer
