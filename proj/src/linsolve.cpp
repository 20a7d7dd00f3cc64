#include "brauer/linsolve.hpp"

#include <gmpxx.h>
#include <algorithm>
#include <map>

namespace brauer {

namespace {

// sparse integer row: sorted by column; the rhs travels as a sentinel column
using Row = std::vector<std::pair<int, mpz_class>>;

void make_primitive(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        (void)c;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            (void)c;
        }
}

// r := a*r - b*p (merge of sorted rows)
void axpy(Row& r, const mpz_class& a, const mpz_class& b, const Row& p) {
    Row out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    mpz_class t;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            t = a * r[i].second - b * p[j].second;
            if (t != 0) out.emplace_back(r[i].first, t);
            ++i; ++j;
        }
    }
    r = std::move(out);
}

} // namespace

struct SparseSolver::Impl {
    int ncols;
    int rhs_col;                       // sentinel column for the rhs
    std::map<int, Row> pivots;         // leading col -> primitive row

    void insert(Row r) {
        while (true) {
            make_primitive(r);
            if (r.empty()) return;
            int c = r.front().first;
            if (c == rhs_col) { pivots.emplace(c, std::move(r)); return; }   // 0 = nonzero marker row
            auto it = pivots.find(c);
            if (it == pivots.end()) { pivots.emplace(c, std::move(r)); return; }
            axpy(r, it->second.front().second, r.front().second, it->second);
        }
    }
};

SparseSolver::SparseSolver(int ncols) : impl_(new Impl) {
    impl_->ncols = ncols;
    impl_->rhs_col = ncols;
}

SparseSolver::~SparseSolver() { delete impl_; }

void SparseSolver::add_row(const std::vector<std::pair<int, Rational>>& entries, const Rational& rhs) {
    // clear rational denominators to an integer row
    mpz_class lcm = 1;
    for (auto& [c, q] : entries) {
        (void)c;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(q.raw()));
    }
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(rhs.raw()));
    std::map<int, mpz_class> acc;
    mpz_class t, f;
    for (auto& [c, q] : entries) {
        if (c < 0 || c >= impl_->ncols) throw std::out_of_range("add_row: bad column");
        mpz_divexact(f.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(q.raw()));
        t = mpz_class(mpq_numref(q.raw())) * f;
        acc[c] += t;
    }
    if (!rhs.is_zero()) {
        mpz_divexact(f.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(rhs.raw()));
        acc[impl_->rhs_col] += mpz_class(mpq_numref(rhs.raw())) * f;
    }
    Row r;
    r.reserve(acc.size());
    for (auto& [c, v] : acc)
        if (v != 0) r.emplace_back(c, std::move(v));
    impl_->insert(std::move(r));
}

int SparseSolver::current_rank() const {
    int rk = 0;
    for (auto& [c, row] : impl_->pivots) {
        (void)row;
        if (c != impl_->rhs_col) ++rk;
    }
    return rk;
}

LinSolveResult SparseSolver::solve(bool want_nullspace, bool has_rhs) {
    auto& pivots = impl_->pivots;
    const int rhs_col = impl_->rhs_col;
    if (has_rhs && pivots.count(rhs_col)) throw Inconsistent();

    // back-eliminate to full RREF (descending pivot columns)
    std::vector<int> cols;
    for (auto& [c, r] : pivots) { (void)r; if (c != rhs_col) cols.push_back(c); }
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const Row piv = pivots.at(*it);
        for (int c : cols) {
            if (c >= *it) break;
            Row& r = pivots.at(c);
            auto hit = std::lower_bound(r.begin(), r.end(), *it,
                                        [](const std::pair<int, mpz_class>& e, int col) { return e.first < col; });
            if (hit == r.end() || hit->first != *it) continue;
            axpy(r, piv.front().second, hit->second, piv);
            make_primitive(r);
        }
    }

    LinSolveResult res;
    res.ncols = impl_->ncols;
    res.rank = (int)cols.size();
    res.pivot_cols = cols;
    res.has_rhs = has_rhs;

    std::vector<char> is_pivot(impl_->ncols, 0);
    for (int c : cols) is_pivot[c] = 1;

    if (has_rhs) {
        res.particular.assign(impl_->ncols, Rational(0));
        for (int c : cols) {
            const Row& r = pivots.at(c);
            Rational lead, v;
            mpq_set_z(lead.raw(), r.front().second.get_mpz_t());
            for (auto& [cc, vv] : r) {
                if (cc == rhs_col) {
                    mpq_set_z(v.raw(), vv.get_mpz_t());
                    res.particular[c] = v / lead;
                }
            }
        }
    }
    if (want_nullspace) {
        for (int f = 0; f < impl_->ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> vec(impl_->ncols, Rational(0));
            vec[f] = Rational(1);
            for (int c : cols) {
                const Row& r = pivots.at(c);
                auto hit = std::lower_bound(r.begin(), r.end(), f,
                                            [](const std::pair<int, mpz_class>& e, int col) { return e.first < col; });
                if (hit == r.end() || hit->first != f) continue;
                Rational lead, v;
                mpq_set_z(lead.raw(), r.front().second.get_mpz_t());
                mpq_set_z(v.raw(), hit->second.get_mpz_t());
                vec[c] = -(v / lead);
            }
            // scale to a primitive integer vector for determinism
            Rational g(0);
            for (auto& q : vec)
                if (!q.is_zero()) g = g.is_zero() ? q.abs() : rat_gcd(g, q);
            if (!g.is_zero())
                for (auto& q : vec) q /= g;
            res.nullspace.push_back(std::move(vec));
        }
    }
    return res;
}

LinSolveResult solve_sparse_linear_exact(int ncols,
                                         const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                                         const std::vector<Rational>* rhs) {
    SparseSolver s(ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        s.add_row(rows[i], rhs ? (*rhs)[i] : Rational(0));
    return s.solve(true, rhs != nullptr);
}

} // namespace brauer
