#include "brauer/interpolate.hpp"

namespace brauer {

namespace {

// divide f by (a-b) where a,b are nodes; throws DuplicateNode when a==b
LinFrac div_node_diff(const LinFrac& f, const Poly& a, const Poly& b) {
    Poly d = a - b;
    if (d.is_zero()) throw DuplicateNode();
    if (d.is_constant()) return f.scaled(d.constant_value().inv());
    return f.div_form(d);
}

Poly lagrange_core(const std::vector<Poly>& nodes, const std::vector<Poly>& values,
                   int var, int degree_bound, bool even) {
    const size_t need = (size_t)degree_bound + 1;
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: nodes/values mismatch");
    if (nodes.size() < need)
        throw InsufficientNodes(std::to_string(nodes.size()) + " nodes for degree " + std::to_string(degree_bound));
    VarTablePtr t;
    for (auto& v : values)
        if (v.table()) { t = v.table(); break; }
    if (!t) t = nodes.at(0).table();
    Poly x = Poly::variable(t, var);
    Poly xx = even ? x * x : x;
    auto nodeval = [&](size_t i) { return even ? nodes[i] * nodes[i] : nodes[i]; };

    LinFrac acc = LinFrac::zero(t);
    for (size_t i = 0; i < need; ++i) {
        LinFrac term{values[i]};
        for (size_t j = 0; j < need; ++j) {
            if (j == i) continue;
            term *= LinFrac(xx - nodeval(j));
            if (even) {
                term = div_node_diff(term, nodes[i], nodes[j]);
                term = div_node_diff(term, nodes[i], -nodes[j]);
            } else {
                term = div_node_diff(term, nodes[i], nodes[j]);
            }
        }
        acc += term;
    }
    Poly r = acc.clear_to_poly();
    int dmax = even ? 2 * degree_bound : degree_bound;
    if (r.degree_in(var) > dmax) throw NotDivisible("interpolation exceeded its degree bound");
    // consistency at surplus nodes
    for (size_t i = need; i < nodes.size(); ++i) {
        if (r.substitute_var(var, nodes[i]) != values[i])
            throw NotDivisible("interpolation inconsistent at a surplus node");
    }
    return r;
}

} // namespace

Poly lagrange_interpolate(const std::vector<Poly>& nodes, const std::vector<Poly>& values,
                          int var, int degree_bound) {
    return lagrange_core(nodes, values, var, degree_bound, false);
}

Poly lagrange_interpolate_even(const std::vector<Poly>& sqrt_nodes, const std::vector<Poly>& values,
                               int var, int degree_bound_even) {
    if (degree_bound_even % 2) throw std::invalid_argument("even interpolation needs an even bound");
    return lagrange_core(sqrt_nodes, values, var, degree_bound_even / 2, true);
}

std::vector<Poly> lagrange_interpolate_vec(const std::vector<Poly>& nodes,
                                           const std::vector<std::vector<Poly>>& values,
                                           int var, int degree_bound, bool even) {
    if (values.empty()) return {};
    size_t ncomp = values.front().size();
    std::vector<Poly> out;
    out.reserve(ncomp);
    for (size_t c = 0; c < ncomp; ++c) {
        std::vector<Poly> vc;
        vc.reserve(values.size());
        for (auto& v : values) vc.push_back(v.at(c));
        out.push_back(even ? lagrange_interpolate_even(nodes, vc, var, degree_bound)
                           : lagrange_interpolate(nodes, vc, var, degree_bound));
    }
    return out;
}

} // namespace brauer
