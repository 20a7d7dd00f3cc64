#include "brauer/qkz.hpp"

#include "brauer/interpolate.hpp"
#include "brauer/linsolve.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace brauer {

namespace {

Poly pvar(const VarTablePtr& t, const std::string& n) { return Poly::variable(t, n); }
Poly zv(const VarTablePtr& t, int i) { return Poly::variable(t, "z" + std::to_string(i)); }

// r(x) = (A+x)(2A-x-e), k(x) = A+2x
Poly rpoly(const Poly& x) {
    auto t = x.table();
    Poly A = pvar(t, "A"), e = pvar(t, "e");
    return (A + x) * (A.scaled(Rational(2)) - x - e);
}
Poly kpoly(const Poly& x) {
    auto t = x.table();
    return pvar(t, "A") + x.scaled(Rational(2));
}

} // namespace

DegreeInfo degree_table(BoundaryType type, int L) {
    DegreeInfo d;
    int fl = L / 2, fl1 = (L - 1) / 2;
    if (L == 0) return d;
    switch (type) {
        case BoundaryType::P:
            d.total = 2 * fl * fl1;
            d.pervar = (L % 2 == 0) ? L - 2 : L - 1;
            break;
        case BoundaryType::I:
            d.total = L * (L - 1);
            d.pervar = 2 * (L - 1);
            break;
        case BoundaryType::C:
            d.total = 4 * fl * fl1;
            d.pervar = (L % 2 == 0) ? 2 * (L - 2) : 2 * (L - 1);
            break;
        case BoundaryType::O:
            d.total = L * (2 * L - 1);
            d.pervar = 4 * L - 3;
            d.bound_is_exact = false;
            break;
        case BoundaryType::M:
            d.total = 2 * L * (L - 1);
            d.pervar = 4 * (L - 1);
            d.bound_is_exact = false;
            break;
    }
    if (d.pervar < 0) d.pervar = 0;
    return d;
}

Poly p_factor_bulk_at(BoundaryType type, const Poly& v, const std::vector<Poly>& left,
                      const std::vector<Poly>& right) {
    auto t = v.table();
    Poly A = pvar(t, "A"), e = pvar(t, "e");
    Poly half_e = e.scaled(Rational(1, 2)), quarter_e = e.scaled(Rational(1, 4));
    Poly out = Poly::constant(t, Rational(2));
    for (auto& w : left) out *= rpoly(w - v);
    for (auto& w : right) out *= rpoly(A + v - w);
    std::vector<Poly> all = left;
    all.insert(all.end(), right.begin(), right.end());
    switch (type) {
        case BoundaryType::P:
            break;
        case BoundaryType::I:
            out *= kpoly(-v - half_e) * kpoly(A + v);
            for (auto& w : all) out *= rpoly(A + w + v);
            break;
        case BoundaryType::C:
            for (auto& w : all) out *= rpoly(A + w + v);
            break;
        case BoundaryType::O:
            out *= (A - half_e) * (A.scaled(Rational(2)) - half_e);
            out *= kpoly(-v - half_e) * kpoly(A + v) * kpoly(-v - quarter_e) * kpoly(A + v - quarter_e);
            for (auto& w : all)
                out *= rpoly(A + w + v) * rpoly(w - v - half_e) * rpoly(-v - w - half_e);
            break;
        case BoundaryType::M:
            out *= (A - half_e) * (A.scaled(Rational(2)) - half_e);
            out *= kpoly(-v - half_e) * kpoly(A + v);
            for (auto& w : all)
                out *= rpoly(A + w + v) * rpoly(w - v - half_e) * rpoly(-v - w - half_e);
            break;
    }
    return out;
}

Poly p_factor_left_at(BoundaryType type, const std::vector<Poly>& spec) {
    if (spec.empty()) throw InvalidKind("left boundary factor needs spectators");
    VarTablePtr t = spec.front().table();
    Poly A = pvar(t, "A"), e = pvar(t, "e");
    Poly out = Poly::constant(t, Rational(2));
    if (type == BoundaryType::I) {
        for (auto& w : spec)
            out *= (kpoly(A - w - e.scaled(Rational(1, 2))) * kpoly(A + w - e.scaled(Rational(1, 2))))
                       .scaled(Rational(1, 4));
    } else if (type == BoundaryType::O) {
        out *= A.scaled(Rational(2)) - e.scaled(Rational(1, 2));
        for (auto& w : spec)
            out *= (kpoly(A - w - e.scaled(Rational(1, 4))) * kpoly(A + w - e.scaled(Rational(3, 4))) *
                    kpoly(A + w - e.scaled(Rational(1, 4))) * kpoly(A - w - e.scaled(Rational(3, 4))))
                       .scaled(Rational(1, 16));
    } else {
        throw InvalidKind("left boundary recurrence only for i,o");
    }
    return out;
}

Poly p_factor_right_at(BoundaryType type, const std::vector<Poly>& spec) {
    if (spec.empty()) throw InvalidKind("right boundary factor needs spectators");
    VarTablePtr t = spec.front().table();
    Poly A = pvar(t, "A"), e = pvar(t, "e");
    Poly out = Poly::constant(t, Rational(2));
    if (type == BoundaryType::I) {
        for (auto& w : spec) out *= (kpoly(A + w) * kpoly(A - w - e)).scaled(Rational(1, 4));
    } else if (type == BoundaryType::O) {
        out *= A.scaled(Rational(2)) - e.scaled(Rational(1, 2));
        for (auto& w : spec)
            out *= (kpoly(A + w) * kpoly(A - w - e) * kpoly(A - w - e.scaled(Rational(1, 2))) *
                    kpoly(A + w - e.scaled(Rational(1, 2))))
                       .scaled(Rational(1, 16));
    } else if (type == BoundaryType::M) {
        for (auto& w : spec)
            out *= (kpoly(A + w) * kpoly(A - w - e) * kpoly(A - w - e.scaled(Rational(1, 2))) *
                    kpoly(A + w - e.scaled(Rational(1, 2))))
                       .scaled(Rational(1, 16));
    } else {
        throw InvalidKind("right boundary recurrence only for i,o,m");
    }
    return out;
}

LinkPattern phi_insert_bulk(const LinkPattern& small, int j) {
    int L = small.L + 2;
    auto mapsite = [j](int x) { return x < j ? x : x + 2; };
    std::vector<int> t(L, 0);
    t[j - 1] = j + 1;
    t[j] = j;
    for (int x = 1; x <= small.L; ++x) {
        int v = small.t[x - 1];
        t[mapsite(x) - 1] = (v > 0) ? mapsite(v) : v;
    }
    return LinkPattern{L, std::move(t)};
}

LinkPattern phi_insert_left(BoundaryType type, const LinkPattern& small) {
    int L = small.L + 1;
    std::vector<int> t(L, 0);
    t[0] = boundary_letter_left(type);
    for (int x = 1; x <= small.L; ++x) {
        int v = small.t[x - 1];
        t[x] = (v > 0) ? v + 1 : v;
    }
    return LinkPattern{L, std::move(t)};
}

LinkPattern phi_insert_right(BoundaryType type, const LinkPattern& small) {
    int L = small.L + 1;
    std::vector<int> t(L, 0);
    t[L - 1] = boundary_letter_right(type);
    for (int x = 1; x <= small.L; ++x) t[x - 1] = small.t[x - 1];
    return LinkPattern{L, std::move(t)};
}

Poly transplant(const Poly& src, const VarTablePtr& dst, const std::vector<Poly>& zargs) {
    auto st = src.table();
    Poly A = pvar(dst, "A"), e = pvar(dst, "e");
    Poly out(dst);
    int iA = st->require("A"), ie = st->require("e");
    std::vector<int> zidx;
    for (int i = 1;; ++i) {
        int idx = st->index_of("z" + std::to_string(i));
        if (idx < 0) break;
        zidx.push_back(idx);
    }
    if (zidx.size() != zargs.size()) throw std::invalid_argument("transplant: argument count mismatch");
    for (auto& [m, c] : src.terms()) {
        Poly term = Poly::constant(dst, c);
        for (size_t k = 0; k < zidx.size(); ++k)
            for (int p = 0; p < m.e[zidx[k]]; ++p) term *= zargs[k];
        for (int p = 0; p < m.e[iA]; ++p) term *= A;
        for (int p = 0; p < m.e[ie]; ++p) term *= e;
        out += term;
    }
    return out;
}

std::pair<LinkPattern, Poly> anchor_target(BoundaryType type, int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    Poly s = shift_s(t, type);
    switch (type) {
        case BoundaryType::I: {
            LinkPattern om{L, std::vector<int>(L, TGT_B)};
            Poly v = Poly::constant(t, Rational(1L << L));
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) v *= rpoly(zv(t, i) - zv(t, j));
            return {om, v};
        }
        case BoundaryType::O: {
            LinkPattern om{L, std::vector<int>(L, TGT_L)};
            Poly v = Poly::constant(t, Rational(1L << L));
            for (int i = 1; i <= L; ++i) v *= kpoly(zv(t, i));
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j)
                    v *= rpoly(zv(t, i) - zv(t, j)) * rpoly(zv(t, i) + zv(t, j));
            return {om, v};
        }
        case BoundaryType::M: {
            LinkPattern om{L, std::vector<int>(L, TGT_R)};
            Poly v = Poly::constant(t, Rational(1L << L));
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j)
                    v *= rpoly(zv(t, i) - zv(t, j)) * rpoly(-zv(t, i) - zv(t, j) - s);
            return {om, v};
        }
        case BoundaryType::P: {
            if (L % 2 == 0) {
                std::vector<int> tgt(L);
                for (int i = 1; i <= L; ++i) tgt[i - 1] = (i <= L / 2) ? i + L / 2 : i - L / 2;
                Poly v = Poly::constant(t, Rational(1L << (L / 2)));
                for (int i = 1; i <= L; ++i)
                    for (int j = i + 1; j <= L; ++j) {
                        if (j - i < L / 2) v *= A + zv(t, i) - zv(t, j);
                        if (j - i > L / 2) v *= A - zv(t, i) + zv(t, j) - s;
                    }
                return {LinkPattern{L, std::move(tgt)}, v};
            }
            int h = (L - 1) / 2;
            std::vector<int> tgt(L);
            for (int i = 1; i <= h; ++i) { tgt[i - 1] = i + h; tgt[i + h - 1] = i; }
            tgt[L - 1] = TGT_DOT;
            Poly v = Poly::constant(t, Rational(1L << (h + 1)));
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) {
                    if (j - i < h || i > h) v *= A + zv(t, i) - zv(t, j);
                    if (j - i > h) v *= A - zv(t, i) + zv(t, j) - s;
                }
            return {LinkPattern{L, std::move(tgt)}, v};
        }
        case BoundaryType::C:
            throw InvalidKind("closed type has no factorized anchor component");
    }
    throw InvalidKind("anchor_target");
}

QkzSolution base_solution(BoundaryType type, int L) {
    if (L > 1) throw InvalidKind("base_solution only covers L <= 1");
    QkzSolution sol;
    sol.type = type;
    sol.L = L;
    sol.table = VarTable::standard(L);
    sol.space = std::make_shared<PatternSpace>(type, L);
    sol.method = "base";
    sol.normalization = "omega-anchored";
    if (L == 0) {
        sol.comps = {Poly::constant(sol.table, Rational(1))};
        return sol;
    }
    if (type == BoundaryType::O) {
        Poly A = pvar(sol.table, "A"), z1 = zv(sol.table, 1), e = pvar(sol.table, "e");
        Poly psil = (A + z1.scaled(Rational(2))).scaled(Rational(2));
        Poly psir = (A - e.scaled(Rational(1, 2)) - z1.scaled(Rational(2))).scaled(Rational(2));
        sol.comps = {psil, psir};   // patterns sorted (l) < (r)
        return sol;
    }
    sol.comps = {Poly::constant(sol.table, Rational(2))};
    return sol;
}

// --------------------------------------------------------------------------
// dense linear solve over monomial coefficients

namespace {

std::vector<Mono> monomial_basis(int nvars, int nz, int total, int pervar) {
    std::vector<Mono> out;
    Mono m{std::vector<int16_t>(nvars, 0)};
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars - 1) {
            m.e[v] = (int16_t)left;
            out.push_back(m);
            m.e[v] = 0;
            return;
        }
        int cap = (v < nz) ? std::min(left, pervar) : left;
        for (int k = 0; k <= cap; ++k) {
            m.e[v] = (int16_t)k;
            rec(v + 1, left - k);
        }
        m.e[v] = 0;
    };
    rec(0, total);
    return out;
}

struct RowKeyLess {
    bool operator()(const std::pair<int, Mono>& a, const std::pair<int, Mono>& b) const {
        if (a.first != b.first) return a.first < b.first;
        MonoOrder lt;
        if (lt(a.second, b.second)) return true;
        return false;
    }
};

struct Assembler {
    const PatternSpace& sp;
    VarTablePtr t;
    std::vector<Mono> basis;
    SparseSolver solver;
    using RowGroup = std::map<std::pair<int, Mono>, std::vector<std::pair<int, Rational>>, RowKeyLess>;

    Assembler(const PatternSpace& s, VarTablePtr tt, std::vector<Mono> b)
        : sp(s), t(std::move(tt)), basis(std::move(b)),
          solver((int)(sp.size() * basis.size())) {}

    int col(int pat, int mono) const { return pat * (int)basis.size() + mono; }

    static void scatter(RowGroup& rg, int outpat, const Poly& contribution, int column) {
        for (auto& [m, c] : contribution.terms()) rg[{outpat, m}].emplace_back(column, c);
    }
    void flush(RowGroup& rg) {
        for (auto& [key, entries] : rg) {
            (void)key;
            solver.add_row(entries);
        }
        rg.clear();
    }
    Poly mono_poly(const Mono& m) const {
        Poly p(t);
        p.add_term(m, Rational(1));
        return p;
    }
};

} // namespace

QkzSolution solve_linear(BoundaryType type, int L, SolveCache& cache) {
    auto t = VarTable::standard(L);
    PatternSpace sp(type, L);
    DegreeInfo deg = degree_table(type, L);
    auto basis = monomial_basis((int)t->size(), L, deg.total, deg.pervar);
    Assembler as(sp, t, basis);
    const int NP = sp.size();
    const int NB = (int)as.basis.size();
    Poly A = pvar(t, "A");
    Poly s = shift_s(t, type);

    bool k0 = (type == BoundaryType::I || type == BoundaryType::O);
    bool kL = (type == BoundaryType::I || type == BoundaryType::O || type == BoundaryType::M);
    bool chat = (type != BoundaryType::P);

    // componentwise symmetries for trivial K (sparsest rows first)
    for (int end = 0; end <= 1; ++end) {
        if (!chat) break;
        if (end == 0 ? k0 : kL) continue;
        Assembler::RowGroup rg;
        int idx = end == 0 ? 0 : L;
        for (int p = 0; p < NP; ++p)
            for (int m = 0; m < NB; ++m) {
                Poly zm = as.mono_poly(as.basis[m]);
                Poly d = zm - tau_apply(type, L, zm, idx);
                if (!d.is_zero()) Assembler::scatter(rg, p, d, as.col(p, m));
            }
        as.flush(rg);
    }

    // cleared boundary exchange: (A+2z1+s) psi - (4z1+2s) E0 psi = (A-2z1-s) tau0 psi
    if (k0) {
        Assembler::RowGroup rg;
        Poly c_id = A + zv(t, 1).scaled(Rational(2)) + s;
        Poly c_e = zv(t, 1).scaled(Rational(4)) + s.scaled(Rational(2));
        Poly c_tau = A - zv(t, 1).scaled(Rational(2)) - s;
        for (int p = 0; p < NP; ++p) {
            int pe = sp.act(Generator::e0(), p).index;
            for (int m = 0; m < NB; ++m) {
                Poly zm = as.mono_poly(as.basis[m]);
                Assembler::scatter(rg, p, c_id * zm, as.col(p, m));
                Assembler::scatter(rg, pe, -(c_e * zm), as.col(p, m));
                Assembler::scatter(rg, p, -(c_tau * tau_apply(type, L, zm, 0)), as.col(p, m));
            }
        }
        as.flush(rg);
    }
    // (A-2zL) psi + 4zL EL psi = (A+2zL) tauL psi
    if (kL) {
        Assembler::RowGroup rg;
        Poly c_id = A - zv(t, L).scaled(Rational(2));
        Poly c_e = zv(t, L).scaled(Rational(4));
        Poly c_tau = A + zv(t, L).scaled(Rational(2));
        for (int p = 0; p < NP; ++p) {
            int pe = sp.act(Generator::eL(), p).index;
            for (int m = 0; m < NB; ++m) {
                Poly zm = as.mono_poly(as.basis[m]);
                Assembler::scatter(rg, p, c_id * zm, as.col(p, m));
                Assembler::scatter(rg, pe, c_e * zm, as.col(p, m));
                Assembler::scatter(rg, p, -(c_tau * tau_apply(type, L, zm, L)), as.col(p, m));
            }
        }
        as.flush(rg);
    }

    // cleared bulk exchange: N_i(alpha) psi = r(alpha) tau_i psi
    for (int i = 1; i <= L - 1; ++i) {
        Assembler::RowGroup rg;
        Poly alpha = zv(t, i) - zv(t, i + 1);
        Poly ralpha = rpoly(alpha);
        auto N = build_R_numerator(sp, i, alpha);
        std::map<int, std::vector<std::pair<int, Poly>>> cols;
        for (auto& [rc, val] : N.entries()) cols[rc.second].emplace_back(rc.first, val.clear_to_poly());
        for (int p = 0; p < NP; ++p) {
            for (int m = 0; m < NB; ++m) {
                Poly zm = as.mono_poly(as.basis[m]);
                for (auto& [row, coeff] : cols[p]) Assembler::scatter(rg, row, coeff * zm, as.col(p, m));
                Assembler::scatter(rg, p, -(ralpha * tau_apply(type, L, zm, i)), as.col(p, m));
            }
        }
        as.flush(rg);
    }

    // rotation for p: psi_{sigma^{-1}(pi)}(z) = psi_pi(z2,...,zL,z1+s)
    if (type == BoundaryType::P) {
        Assembler::RowGroup rg;
        std::map<int, Poly> rot;
        for (int i = 1; i < L; ++i) rot.emplace(t->require("z" + std::to_string(i)), zv(t, i + 1));
        rot.emplace(t->require("z" + std::to_string(L)), zv(t, 1) + s);
        std::vector<int> sig_inv(NP);
        for (int p = 0; p < NP; ++p) sig_inv[sp.rotate(p)] = p;
        for (int p = 0; p < NP; ++p)
            for (int m = 0; m < NB; ++m) {
                Poly zm = as.mono_poly(as.basis[m]);
                Assembler::scatter(rg, p, zm, as.col(sig_inv[p], m));
                Assembler::scatter(rg, p, -zm.substitute(rot), as.col(p, m));
            }
        as.flush(rg);
    }

    auto res = as.solver.solve(true, false);
    QkzSolution sol;
    sol.type = type;
    sol.L = L;
    sol.table = t;
    sol.space = std::make_shared<PatternSpace>(type, L);
    sol.method = "linear";
    sol.preanchor_nullity = res.nullity();
    if (res.nullity() == 0) throw NoSolution("qKZ system has only the zero solution at the table degree");
    if (res.nullity() > 1)
        throw AmbiguousSolution("qKZ nullspace dimension " + std::to_string(res.nullity()));

    sol.comps.assign(NP, Poly(t));
    auto& ker = res.nullspace.front();
    for (int p = 0; p < NP; ++p) {
        Poly comp(t);
        for (int m = 0; m < NB; ++m) {
            const Rational& c = ker[as.col(p, m)];
            if (!c.is_zero()) comp.add_term(as.basis[m], c);
        }
        sol.comps[p] = std::move(comp);
    }

    Rational content(0);
    for (auto& c : sol.comps)
        if (!c.is_zero()) content = content.is_zero() ? c.content() : rat_gcd(content, c.content());
    if (!content.is_zero() && !content.is_one())
        for (auto& c : sol.comps) c = c.scaled(content.inv());

    if (type == BoundaryType::C) {
        if (L < 2) throw InvalidKind("closed anchor needs L >= 2");
        const QkzSolution& w = cache.get(type, L - 2);
        std::vector<Poly> spec;
        for (int i = 3; i <= L; ++i) spec.push_back(zv(t, i));
        Poly pf = p_factor_bulk_at(type, zv(t, 1), {}, spec);
        int iz2 = t->require("z2");
        Poly sub = A + zv(t, 1);
        Rational q(0);
        for (int c = 0; c < w.space->size(); ++c) {
            int big = sol.space->index_of(phi_insert_bulk(w.space->pattern(c), 1));
            Poly target = pf * transplant(w.comps[c], t, spec);
            Poly got = sol.comps[big].substitute_var(iz2, sub);
            if (target.is_zero() != got.is_zero()) throw NoSolution("closed anchor mismatch");
            if (target.is_zero()) continue;
            Rational ratio = target.leading().second / got.leading().second;
            if (!(target == got.scaled(ratio))) throw NoSolution("closed anchor not proportional");
            if (q.is_zero()) q = ratio;
            else if (q != ratio) throw NoSolution("closed anchor inconsistent across components");
        }
        if (q.is_zero()) throw NoSolution("closed anchor had no nonzero component");
        for (auto& c : sol.comps) c = c.scaled(q);
    } else {
        auto [om, target] = anchor_target(type, L, t);
        Poly& got = sol.comps[sol.space->index_of(om)];
        if (got.is_zero()) throw NoSolution("anchor component vanished");
        Rational q = target.leading().second / got.leading().second;
        if (!(target == got.scaled(q))) throw NoSolution("anchor component does not factorize as expected");
        for (auto& c : sol.comps) c = c.scaled(q);
    }
    sol.normalization = "omega-anchored";
    return sol;
}

// --------------------------------------------------------------------------
// recurrence/interpolation strategy

namespace {

struct Transport {
    const PatternSpace& sp;
    BoundaryType type;
    int L;
    VarTablePtr t;
    std::vector<Poly> args;
    std::vector<LinFrac> vec;

    void swap_slots(int k) {
        auto R = build_R(sp, k, args[k - 1] - args[k]);
        vec = R.apply(vec);
        std::swap(args[k - 1], args[k]);
    }
    void reflect_first() {
        Poly s = shift_s(t, type);
        auto K = build_K0(sp, -args[0] - s.scaled(Rational(1, 2)));
        vec = K.apply(vec);
        args[0] = -args[0] - s;
    }
    void reflect_last() {
        auto K = build_KL(sp, args[L - 1]);
        vec = K.apply(vec);
        args[L - 1] = -args[L - 1];
    }
    void sigma_unrotate() {
        Poly s = shift_s(t, type);
        LoopOperator inv(&sp, t);
        for (int col = 0; col < sp.size(); ++col) inv.add(col, sp.rotate(col), LinFrac::one(t));
        vec = inv.apply(vec);
        std::vector<Poly> na;
        na.push_back(args[L - 1] - s);
        for (int i = 0; i + 1 < L; ++i) na.push_back(args[i]);
        args = std::move(na);
    }
};

struct NodeValue {
    Poly node;
    std::vector<Poly> vals;
};

std::vector<Poly> clear_vec(const std::vector<LinFrac>& v) {
    std::vector<Poly> out;
    out.reserve(v.size());
    for (auto& f : v) out.push_back(f.clear_to_poly());
    return out;
}

} // namespace

const QkzSolution& SolveCache::get(BoundaryType type, int L) {
    auto key = std::make_pair(to_char(type), L);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QkzSolution sol = solve_recursive(type, L, *this);
    auto pos = cache_.emplace(key, std::move(sol)).first;
    return pos->second;
}

void SolveCache::put(QkzSolution sol) {
    cache_[{to_char(sol.type), sol.L}] = std::move(sol);
}

QkzSolution solve_recursive(BoundaryType type, int L, SolveCache& cache) {
    if (L <= 1) return base_solution(type, L);
    if ((type == BoundaryType::P || type == BoundaryType::C) && L == 2) {
        QkzSolution s = solve_linear(type, L, cache);
        s.method = "recursive";
        return s;
    }
    auto t = VarTable::standard(L);
    PatternSpace sp(type, L);
    DegreeInfo deg = degree_table(type, L);
    Poly A = pvar(t, "A");
    Poly s = shift_s(t, type);
    const int izL = t->require("z" + std::to_string(L));

    auto spectators = [&](int j) {
        std::vector<Poly> out;
        for (int i = 1; i <= L - 1; ++i)
            if (i != j) out.push_back(zv(t, i));
        return out;
    };

    auto pair_node = [&](int j, bool reflected, bool negate) {
        const QkzSolution& w = cache.get(type, L - 2);
        auto spec = spectators(j);
        Poly v = reflected ? (-zv(t, j) - s) : zv(t, j);
        Poly pf = p_factor_bulk_at(type, v, spec, {});
        Transport tr{sp, type, L, t, {}, std::vector<LinFrac>(sp.size(), LinFrac::zero(t))};
        for (int c = 0; c < w.space->size(); ++c) {
            Poly val = pf * transplant(w.comps[c], t, spec);
            if (val.is_zero()) continue;
            tr.vec[sp.index_of(phi_insert_bulk(w.space->pattern(c), L - 1))] = LinFrac(val);
        }
        tr.args = spec;
        tr.args.push_back(v);
        tr.args.push_back(A + v);
        for (int k = L - 2; k >= j; --k) tr.swap_slots(k);
        if (reflected) {
            for (int k = j - 1; k >= 1; --k) tr.swap_slots(k);
            tr.reflect_first();
            for (int k = 1; k <= j - 1; ++k) tr.swap_slots(k);
        }
        if (negate) tr.reflect_last();
        return NodeValue{tr.args[L - 1], clear_vec(tr.vec)};
    };

    auto right_node = [&]() {
        const QkzSolution& w = cache.get(type, L - 1);
        std::vector<Poly> spec;
        for (int i = 1; i <= L - 1; ++i) spec.push_back(zv(t, i));
        Poly pf = p_factor_right_at(type, spec);
        std::vector<Poly> vals(sp.size(), Poly(t));
        for (int c = 0; c < w.space->size(); ++c)
            vals[sp.index_of(phi_insert_right(type, w.space->pattern(c)))] =
                pf * transplant(w.comps[c], t, spec);
        return NodeValue{A.scaled(Rational(-1, 2)), std::move(vals)};
    };

    auto left_node = [&]() {
        const QkzSolution& w = cache.get(type, L - 1);
        std::vector<Poly> spec;
        for (int i = 1; i <= L - 1; ++i) spec.push_back(zv(t, i));
        Poly pf = p_factor_left_at(type, spec);
        Transport tr{sp, type, L, t, {}, std::vector<LinFrac>(sp.size(), LinFrac::zero(t))};
        for (int c = 0; c < w.space->size(); ++c) {
            Poly val = pf * transplant(w.comps[c], t, spec);
            if (val.is_zero()) continue;
            tr.vec[sp.index_of(phi_insert_left(type, w.space->pattern(c)))] = LinFrac(val);
        }
        tr.args.push_back((A - s).scaled(Rational(1, 2)));
        for (auto& z : spec) tr.args.push_back(z);
        for (int k = 1; k <= L - 1; ++k) tr.swap_slots(k);
        return NodeValue{tr.args[L - 1], clear_vec(tr.vec)};
    };

    auto rotate_node = [&]() {
        const QkzSolution& w = cache.get(type, L - 2);
        std::vector<Poly> spec;
        for (int i = 2; i <= L - 1; ++i) spec.push_back(zv(t, i));
        Poly v = zv(t, 1) + s - A;
        Poly pf = p_factor_bulk_at(type, v, spec, {});
        Transport tr{sp, type, L, t, {}, std::vector<LinFrac>(sp.size(), LinFrac::zero(t))};
        for (int c = 0; c < w.space->size(); ++c) {
            Poly val = pf * transplant(w.comps[c], t, spec);
            if (val.is_zero()) continue;
            tr.vec[sp.index_of(phi_insert_bulk(w.space->pattern(c), L - 1))] = LinFrac(val);
        }
        tr.args = spec;
        tr.args.push_back(v);
        tr.args.push_back(zv(t, 1) + s);
        tr.sigma_unrotate();
        return NodeValue{tr.args[L - 1], clear_vec(tr.vec)};
    };

    std::vector<NodeValue> nodes;
    bool even_interp = (type == BoundaryType::C);
    switch (type) {
        case BoundaryType::I:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, true));
            nodes.push_back(right_node());
            break;
        case BoundaryType::C:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, false));
            if (L % 2 == 1) nodes.push_back(pair_node(1, true, false));
            break;
        case BoundaryType::O:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, true));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, true, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, true, true));
            nodes.push_back(right_node());
            nodes.push_back(left_node());
            break;
        case BoundaryType::M:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, true));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, true, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, true, true));
            nodes.push_back(right_node());
            break;
        case BoundaryType::P:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(pair_node(j, false, false));
            if (L % 2 == 1) nodes.push_back(rotate_node());
            break;
    }

    std::vector<Poly> npolys;
    std::vector<std::vector<Poly>> nvals;
    for (auto& n : nodes) {
        npolys.push_back(n.node);
        nvals.push_back(n.vals);
    }
    QkzSolution sol;
    sol.type = type;
    sol.L = L;
    sol.table = t;
    sol.space = std::make_shared<PatternSpace>(type, L);
    sol.method = "recursive";
    sol.normalization = "omega-anchored";
    sol.comps = lagrange_interpolate_vec(npolys, nvals, izL, deg.pervar, even_interp);
    for (auto& c : sol.comps) {
        int d;
        if (!c.homogeneous(&d) || (!c.is_zero() && d != deg.total))
            throw NoSolution("recursive solution not homogeneous of the expected degree");
    }
    return sol;
}

// --------------------------------------------------------------------------
// verification

VerifyReport verify_component_relations(const QkzSolution& sol) {
    VerifyReport rep;
    auto& sp = *sol.space;
    auto t = sol.table;
    int L = sol.L;
    Poly A = pvar(t, "A"), e = pvar(t, "e");
    Poly s = shift_s(t, sol.type);
    Poly two_A_e = A.scaled(Rational(2)) - e;
    bool k0 = (sol.type == BoundaryType::I || sol.type == BoundaryType::O);
    bool kL = (sol.type == BoundaryType::I || sol.type == BoundaryType::O || sol.type == BoundaryType::M);
    bool chat = (sol.type != BoundaryType::P);

    for (int i = 1; i <= L - 1; ++i) {
        Poly alpha = zv(t, i) - zv(t, i + 1);
        auto dd = divided_difference(sol.type, sol.comps, L, i, DivDiff::Primed);
        auto dp = divided_difference(sol.type, sol.comps, L, i, DivDiff::Plain);
        LinFrac coef{two_A_e - alpha};
        for (int p = 0; p < sp.size(); ++p) {
            const LinkPattern& pat = sp.pattern(p);
            if (pat.target(i) != i + 1) {
                int fp = sp.act(Generator::f(i), p).index;
                rep.check(coef * (-dd[p]) == LinFrac(sol.comps[p] + sol.comps[fp]),
                          "qKZf at i=" + std::to_string(i) + " " + pat.str());
                Poly q;
                rep.check(sol.comps[p].divides_exactly(A + alpha, &q),
                          "(A+z_i-z_{i+1}) factor at i=" + std::to_string(i) + " " + pat.str());
                int a = pat.target(i), b = pat.target(i + 1);
                if (a < 0 && a == b && a != TGT_DOT) {
                    Poly q2;
                    bool div = sol.comps[p].divides_exactly(rpoly(alpha), &q2);
                    rep.check(div, "r factor for doubled letter at i=" + std::to_string(i) + " " + pat.str());
                    if (div)
                        rep.check(tau_apply(sol.type, L, q2, i) == q2,
                                  "S symmetry for doubled letter at i=" + std::to_string(i) + " " + pat.str());
                }
            } else {
                Poly sum(t);
                for (int r = 0; r < sp.size(); ++r) {
                    if (r == p) continue;
                    if (sp.act(Generator::e(i), r).index == p) sum += sol.comps[r];
                }
                rep.check(LinFrac(rpoly(alpha)) * (-dp[p]) == LinFrac(two_A_e * sum),
                          "qKZi at i=" + std::to_string(i) + " " + pat.str());
            }
        }
    }
    if (chat) {
        Poly kleft = kpoly(-zv(t, 1) - s.scaled(Rational(1, 2)));
        for (int p = 0; p < sp.size(); ++p) {
            const LinkPattern& pat = sp.pattern(p);
            if (!k0) {
                rep.check(tau_apply(sol.type, L, sol.comps[p], 0) == sol.comps[p],
                          "tau_0 symmetry " + pat.str());
                continue;
            }
            if (pat.target(1) != boundary_letter_left(sol.type)) {
                Poly q;
                bool div = sol.comps[p].divides_exactly(kleft, &q);
                rep.check(div, "k(-z1-s/2) factor " + pat.str());
                if (div) rep.check(tau_apply(sol.type, L, q, 0) == q, "S^0 symmetry " + pat.str());
            } else {
                auto d0 = divided_difference(sol.type, {sol.comps[p]}, L, 0, DivDiff::Plain);
                Poly sum(t);
                for (int r = 0; r < sp.size(); ++r) {
                    if (r == p) continue;
                    if (sp.act(Generator::e0(), r).index == p) sum += sol.comps[r];
                }
                rep.check(LinFrac(kleft) * (-d0[0]) == LinFrac(sum.scaled(Rational(2))),
                          "qKZl " + pat.str());
            }
        }
        Poly kright = kpoly(zv(t, L));
        for (int p = 0; p < sp.size(); ++p) {
            const LinkPattern& pat = sp.pattern(p);
            if (!kL) {
                rep.check(tau_apply(sol.type, L, sol.comps[p], L) == sol.comps[p],
                          "tau_L symmetry " + pat.str());
                continue;
            }
            if (pat.target(L) != boundary_letter_right(sol.type)) {
                Poly q;
                bool div = sol.comps[p].divides_exactly(kright, &q);
                rep.check(div, "k(z_L) factor " + pat.str());
                if (div) rep.check(tau_apply(sol.type, L, q, L) == q, "S^L evenness " + pat.str());
            } else {
                auto dL = divided_difference(sol.type, {sol.comps[p]}, L, L, DivDiff::Plain);
                Poly sum(t);
                for (int r = 0; r < sp.size(); ++r) {
                    if (r == p) continue;
                    if (sp.act(Generator::eL(), r).index == p) sum += sol.comps[r];
                }
                rep.check(LinFrac(kright) * (-dL[0]) == LinFrac(sum.scaled(Rational(2))),
                          "qKZr " + pat.str());
            }
        }
    }
    return rep;
}

VerifyReport verify_solution(const QkzSolution& sol) {
    VerifyReport rep;
    auto& sp = *sol.space;
    auto t = sol.table;
    int L = sol.L;
    DegreeInfo deg = degree_table(sol.type, L);
    Poly A = pvar(t, "A");
    Poly s = shift_s(t, sol.type);

    for (int p = 0; p < sp.size(); ++p) {
        int d;
        rep.check(sol.comps[p].homogeneous(&d), "component not homogeneous " + sp.pattern(p).str());
        if (!sol.comps[p].is_zero()) {
            rep.check(d == deg.total, "component degree " + sp.pattern(p).str());
            for (int i = 1; i <= L; ++i)
                rep.check(sol.comps[p].degree_in(t->require("z" + std::to_string(i))) <= deg.pervar,
                          "per-variable bound " + sp.pattern(p).str());
        }
        rep.check(!sol.comps[p].is_zero() || L == 0, "vanishing component " + sp.pattern(p).str());
    }

    for (int i = 1; i <= L - 1; ++i) {
        Poly alpha = zv(t, i) - zv(t, i + 1);
        auto N = build_R_numerator(sp, i, alpha);
        auto lhs = N.apply_poly(sol.comps);
        Poly ralpha = rpoly(alpha);
        for (int p = 0; p < sp.size(); ++p)
            rep.check(lhs[p] == LinFrac(ralpha * tau_apply(sol.type, L, sol.comps[p], i)),
                      "exchange relation i=" + std::to_string(i) + " comp " + std::to_string(p));
    }
    if (sol.type == BoundaryType::P) {
        std::map<int, Poly> rot;
        for (int i = 1; i < L; ++i) rot.emplace(t->require("z" + std::to_string(i)), zv(t, i + 1));
        rot.emplace(t->require("z" + std::to_string(L)), zv(t, 1) + s);
        for (int p = 0; p < sp.size(); ++p)
            rep.check(sol.comps[p] == sol.comps[sp.rotate(p)].substitute(rot),
                      "rotation equation comp " + std::to_string(p));
    } else {
        bool k0 = (sol.type == BoundaryType::I || sol.type == BoundaryType::O);
        if (k0) {
            Poly c_id = A + zv(t, 1).scaled(Rational(2)) + s;
            Poly c_e = zv(t, 1).scaled(Rational(4)) + s.scaled(Rational(2));
            Poly c_tau = A - zv(t, 1).scaled(Rational(2)) - s;
            for (int p = 0; p < sp.size(); ++p) {
                Poly e0psi(t);
                for (int r = 0; r < sp.size(); ++r)
                    if (sp.act(Generator::e0(), r).index == p) e0psi += sol.comps[r];
                rep.check(c_id * sol.comps[p] - c_e * e0psi ==
                              c_tau * tau_apply(sol.type, L, sol.comps[p], 0),
                          "K0 relation comp " + std::to_string(p));
            }
        } else {
            for (int p = 0; p < sp.size(); ++p)
                rep.check(tau_apply(sol.type, L, sol.comps[p], 0) == sol.comps[p],
                          "tau_0 symmetry comp " + std::to_string(p));
        }
        if (sol.type != BoundaryType::C) {
            Poly c_id = A - zv(t, L).scaled(Rational(2));
            Poly c_e = zv(t, L).scaled(Rational(4));
            Poly c_tau = A + zv(t, L).scaled(Rational(2));
            for (int p = 0; p < sp.size(); ++p) {
                Poly eLpsi(t);
                for (int r = 0; r < sp.size(); ++r)
                    if (sp.act(Generator::eL(), r).index == p) eLpsi += sol.comps[r];
                rep.check(c_id * sol.comps[p] + c_e * eLpsi ==
                              c_tau * tau_apply(sol.type, L, sol.comps[p], L),
                          "KL relation comp " + std::to_string(p));
            }
        } else {
            for (int p = 0; p < sp.size(); ++p)
                rep.check(tau_apply(sol.type, L, sol.comps[p], L) == sol.comps[p],
                          "tau_L symmetry comp " + std::to_string(p));
        }
    }

    auto facs = verify_component_relations(sol);
    rep.failures.insert(rep.failures.end(), facs.failures.begin(), facs.failures.end());

    if (sol.type != BoundaryType::C && L >= 1) {
        auto [om, target] = anchor_target(sol.type, L, t);
        rep.check(sol.comps[sp.index_of(om)] == target, "omega component product");
    }

    // joint primitivity in the Prop-gcd sense: no common polynomial factor over Q
    // (numerical factors are part of the multidegree normalization and are ignored)
    Rational content(0);
    for (auto& c : sol.comps)
        if (!c.is_zero()) content = content.is_zero() ? c.content() : rat_gcd(content, c.content());
    rep.notes.push_back("joint numeric content " + content.str());
    if (L >= 1) {
        std::vector<Poly> atoms;
        Poly e = pvar(t, "e");
        for (int i = 1; i <= L; ++i) {
            atoms.push_back(kpoly(zv(t, i)));
            atoms.push_back(kpoly(-zv(t, i) - s.scaled(Rational(1, 2))));
            atoms.push_back(A + zv(t, i));
            atoms.push_back(A - zv(t, i) - e);
            for (int j = 1; j <= L; ++j) {
                if (i == j) continue;
                atoms.push_back(A + zv(t, i) - zv(t, j));
                atoms.push_back(A + zv(t, i) + zv(t, j));
                atoms.push_back(A.scaled(Rational(2)) - zv(t, i) + zv(t, j) - e);
                atoms.push_back(A.scaled(Rational(2)) - zv(t, i) - zv(t, j) - e);
            }
        }
        for (auto& a : atoms) {
            bool divides_all = true;
            for (auto& c : sol.comps) {
                Poly q;
                if (!c.is_zero() && !c.divides_exactly(a, &q)) {
                    divides_all = false;
                    break;
                }
            }
            rep.check(!divides_all || L == 0, "common linear factor " + a.str());
        }
    }

    if (sol.type == BoundaryType::I || sol.type == BoundaryType::O || sol.type == BoundaryType::M) {
        int letter = boundary_letter_right(sol.type);
        int izL = t->require("z" + std::to_string(L));
        for (int p = 0; p < sp.size(); ++p) {
            if (sp.pattern(p).target(L) == letter) continue;
            rep.check(sol.comps[p].substitute_var(izL, A.scaled(Rational(-1, 2))).is_zero(),
                      "vanishing at z_L=-A/2 " + sp.pattern(p).str());
        }
    }
    if (sol.type == BoundaryType::I || sol.type == BoundaryType::O) {
        int letter = boundary_letter_left(sol.type);
        int iz1 = t->require("z1");
        Poly pt = (A - s).scaled(Rational(1, 2));
        for (int p = 0; p < sp.size(); ++p) {
            if (sp.pattern(p).target(1) == letter) continue;
            rep.check(sol.comps[p].substitute_var(iz1, pt).is_zero(),
                      "vanishing at z_1=(A-s)/2 " + sp.pattern(p).str());
        }
    }
    return rep;
}

VerifyReport verify_recurrences(const QkzSolution& solL, const QkzSolution* solLm1,
                                const QkzSolution& solLm2) {
    VerifyReport rep;
    auto t = solL.table;
    int L = solL.L;
    auto& sp = *solL.space;
    Poly A = pvar(t, "A");
    Poly s = shift_s(t, solL.type);

    for (int j = 1; j <= L - 1; ++j) {
        std::vector<Poly> specl, specr, spec;
        for (int i = 1; i <= j - 1; ++i) specl.push_back(zv(t, i));
        for (int i = j + 2; i <= L; ++i) specr.push_back(zv(t, i));
        spec = specl;
        spec.insert(spec.end(), specr.begin(), specr.end());
        Poly pf = p_factor_bulk_at(solL.type, zv(t, j), specl, specr);
        int izj1 = t->require("z" + std::to_string(j + 1));
        Poly sub = A + zv(t, j);
        std::vector<Poly> expect(sp.size(), Poly(t));
        for (int c = 0; c < solLm2.space->size(); ++c)
            expect[sp.index_of(phi_insert_bulk(solLm2.space->pattern(c), j))] =
                pf * transplant(solLm2.comps[c], t, spec);
        for (int p = 0; p < sp.size(); ++p)
            rep.check(solL.comps[p].substitute_var(izj1, sub) == expect[p],
                      "bulk recurrence j=" + std::to_string(j) + " " + sp.pattern(p).str());
    }
    if (solLm1) {
        if (solL.type == BoundaryType::I || solL.type == BoundaryType::O ||
            solL.type == BoundaryType::M) {
            std::vector<Poly> spec;
            for (int i = 1; i <= L - 1; ++i) spec.push_back(zv(t, i));
            Poly pf = p_factor_right_at(solL.type, spec);
            int izL = t->require("z" + std::to_string(L));
            std::vector<Poly> expect(sp.size(), Poly(t));
            for (int c = 0; c < solLm1->space->size(); ++c)
                expect[sp.index_of(phi_insert_right(solL.type, solLm1->space->pattern(c)))] =
                    pf * transplant(solLm1->comps[c], t, spec);
            for (int p = 0; p < sp.size(); ++p)
                rep.check(solL.comps[p].substitute_var(izL, A.scaled(Rational(-1, 2))) == expect[p],
                          "right boundary recurrence " + sp.pattern(p).str());
        }
        if (solL.type == BoundaryType::I || solL.type == BoundaryType::O) {
            std::vector<Poly> spec;
            for (int i = 2; i <= L; ++i) spec.push_back(zv(t, i));
            Poly pf = p_factor_left_at(solL.type, spec);
            int iz1 = t->require("z1");
            std::vector<Poly> expect(sp.size(), Poly(t));
            for (int c = 0; c < solLm1->space->size(); ++c)
                expect[sp.index_of(phi_insert_left(solL.type, solLm1->space->pattern(c)))] =
                    pf * transplant(solLm1->comps[c], t, spec);
            Poly pt = (A - s).scaled(Rational(1, 2));
            for (int p = 0; p < sp.size(); ++p)
                rep.check(solL.comps[p].substitute_var(iz1, pt) == expect[p],
                          "left boundary recurrence " + sp.pattern(p).str());
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// numeric recurrence descent at e=0

namespace {

Rational rnum(const Rational& A, const Rational& x) { return (A + x) * (A + A - x); }
Rational knum(const Rational& A, const Rational& x) { return A + x + x; }

struct NumOps {
    const PatternSpace& sp;
    Rational A;

    std::vector<Rational> apply_R(int i, const Rational& q, const std::vector<Rational>& v) const {
        Rational r = rnum(A, q);
        if (r.is_zero()) throw DegenerateNode("R pole in transport");
        std::vector<Rational> out(sp.size(), Rational(0));
        Rational twoA = A + A;
        Rational cid = twoA * (A - q) / r;
        Rational ce = twoA * q / r;
        Rational cf = (A - q) * q / r;
        for (int col = 0; col < sp.size(); ++col) {
            if (v[col].is_zero()) continue;
            out[col] += cid * v[col];
            out[sp.act(Generator::e(i), col).index] += ce * v[col];
            out[sp.act(Generator::f(i), col).index] += cf * v[col];
        }
        return out;
    }
    std::vector<Rational> apply_K(bool left, const Rational& w, const std::vector<Rational>& v) const {
        bool nontrivial = left ? (sp.type() == BoundaryType::I || sp.type() == BoundaryType::O)
                               : (sp.type() == BoundaryType::I || sp.type() == BoundaryType::O ||
                                  sp.type() == BoundaryType::M);
        if (!nontrivial) return v;
        Rational k = knum(A, w);
        if (k.is_zero()) throw DegenerateNode("K pole in transport");
        std::vector<Rational> out(sp.size(), Rational(0));
        Rational cid = (A - w - w) / k;
        Rational ce = (w + w + w + w) / k;
        Generator g = left ? Generator::e0() : Generator::eL();
        for (int col = 0; col < sp.size(); ++col) {
            if (v[col].is_zero()) continue;
            out[col] += cid * v[col];
            out[sp.act(g, col).index] += ce * v[col];
        }
        return out;
    }
};

Rational p_factor_bulk_num(BoundaryType type, const Rational& A, const Rational& v,
                           const std::vector<Rational>& spec) {
    Rational out(2);
    switch (type) {
        case BoundaryType::P:
            for (auto& w : spec) out *= rnum(A, w - v);
            break;
        case BoundaryType::I:
            out *= knum(A, -v) * knum(A, A + v);
            for (auto& w : spec) out *= rnum(A, w - v) * rnum(A, A + w + v);
            break;
        case BoundaryType::C:
            for (auto& w : spec) out *= rnum(A, w - v) * rnum(A, A + w + v);
            break;
        case BoundaryType::O:
        case BoundaryType::M:
            out *= A * (A + A);
            out *= knum(A, -v) * knum(A, A + v);
            if (type == BoundaryType::O) out *= knum(A, -v) * knum(A, A + v);
            for (auto& w : spec)
                out *= rnum(A, w - v) * rnum(A, A + w + v) * rnum(A, w - v) * rnum(A, -v - w);
            break;
    }
    return out;
}

Rational p_factor_right_num(BoundaryType type, const Rational& A, const std::vector<Rational>& spec) {
    Rational out(2);
    Rational quarter(1, 4), sixteenth(1, 16);
    if (type == BoundaryType::I) {
        for (auto& w : spec) out *= knum(A, A + w) * knum(A, A - w) * quarter;
    } else if (type == BoundaryType::O) {
        out *= A + A;
        for (auto& w : spec)
            out *= knum(A, A + w) * knum(A, A - w) * knum(A, A - w) * knum(A, A + w) * sixteenth;
    } else if (type == BoundaryType::M) {
        for (auto& w : spec)
            out *= knum(A, A + w) * knum(A, A - w) * knum(A, A - w) * knum(A, A + w) * sixteenth;
    } else {
        throw InvalidKind("numeric right factor");
    }
    return out;
}

Rational p_factor_left_num(BoundaryType type, const Rational& A, const std::vector<Rational>& spec) {
    Rational out(2);
    Rational quarter(1, 4), sixteenth(1, 16);
    if (type == BoundaryType::I) {
        for (auto& w : spec) out *= knum(A, A - w) * knum(A, A + w) * quarter;
    } else if (type == BoundaryType::O) {
        out *= A + A;
        for (auto& w : spec)
            out *= knum(A, A - w) * knum(A, A + w) * knum(A, A + w) * knum(A, A - w) * sixteenth;
    } else {
        throw InvalidKind("numeric left factor");
    }
    return out;
}

std::vector<Rational> eval_descend(BoundaryType type, int L, const std::vector<Rational>& zs,
                                   const Rational& A);

struct NumNode {
    Rational node;
    std::vector<Rational> vals;
};

NumNode num_pair_node(BoundaryType type, int L, const std::vector<Rational>& zs, const Rational& A,
                      const PatternSpace& sp, int j, bool reflected, bool negate) {
    std::vector<Rational> spec;
    for (int i = 0; i < L - 1; ++i)
        if (i != j - 1) spec.push_back(zs[i]);
    Rational v = reflected ? -zs[j - 1] : zs[j - 1];
    auto w = eval_descend(type, L - 2, spec, A);
    PatternSpace small(type, L - 2);
    Rational pf = p_factor_bulk_num(type, A, v, spec);
    std::vector<Rational> vec(sp.size(), Rational(0));
    for (int c = 0; c < small.size(); ++c)
        vec[sp.index_of(phi_insert_bulk(small.pattern(c), L - 1))] = pf * w[c];
    std::vector<Rational> args = spec;
    args.push_back(v);
    args.push_back(A + v);
    NumOps ops{sp, A};
    for (int k = L - 2; k >= j; --k) {
        vec = ops.apply_R(k, args[k - 1] - args[k], vec);
        std::swap(args[k - 1], args[k]);
    }
    if (reflected) {
        for (int k = j - 1; k >= 1; --k) {
            vec = ops.apply_R(k, args[k - 1] - args[k], vec);
            std::swap(args[k - 1], args[k]);
        }
        vec = ops.apply_K(true, -args[0], vec);
        args[0] = -args[0];
        for (int k = 1; k <= j - 1; ++k) {
            vec = ops.apply_R(k, args[k - 1] - args[k], vec);
            std::swap(args[k - 1], args[k]);
        }
    }
    if (negate) {
        vec = ops.apply_K(false, args[L - 1], vec);
        args[L - 1] = -args[L - 1];
    }
    return {args[L - 1], std::move(vec)};
}

NumNode num_right_node(BoundaryType type, int L, const std::vector<Rational>& zs, const Rational& A,
                       const PatternSpace& sp) {
    std::vector<Rational> spec(zs.begin(), zs.begin() + (L - 1));
    auto w = eval_descend(type, L - 1, spec, A);
    PatternSpace small(type, L - 1);
    Rational pf = p_factor_right_num(type, A, spec);
    std::vector<Rational> vec(sp.size(), Rational(0));
    for (int c = 0; c < small.size(); ++c)
        vec[sp.index_of(phi_insert_right(type, small.pattern(c)))] = pf * w[c];
    return {A * Rational(-1, 2), std::move(vec)};
}

NumNode num_left_node(BoundaryType type, int L, const std::vector<Rational>& zs, const Rational& A,
                      const PatternSpace& sp) {
    std::vector<Rational> spec(zs.begin(), zs.begin() + (L - 1));
    auto w = eval_descend(type, L - 1, spec, A);
    PatternSpace small(type, L - 1);
    Rational pf = p_factor_left_num(type, A, spec);
    std::vector<Rational> vec(sp.size(), Rational(0));
    for (int c = 0; c < small.size(); ++c)
        vec[sp.index_of(phi_insert_left(type, small.pattern(c)))] = pf * w[c];
    std::vector<Rational> args;
    args.push_back(A * Rational(1, 2));
    for (auto& z : spec) args.push_back(z);
    NumOps ops{sp, A};
    for (int k = 1; k <= L - 1; ++k) {
        vec = ops.apply_R(k, args[k - 1] - args[k], vec);
        std::swap(args[k - 1], args[k]);
    }
    return {args[L - 1], std::move(vec)};
}

NumNode num_rotate_node(BoundaryType type, int L, const std::vector<Rational>& zs, const Rational& A,
                        const PatternSpace& sp) {
    std::vector<Rational> spec(zs.begin() + 1, zs.begin() + (L - 1));
    Rational v = zs[0] - A;
    auto w = eval_descend(type, L - 2, spec, A);
    PatternSpace small(type, L - 2);
    Rational pf = p_factor_bulk_num(type, A, v, spec);
    std::vector<Rational> vec(sp.size(), Rational(0));
    for (int c = 0; c < small.size(); ++c)
        vec[sp.index_of(phi_insert_bulk(small.pattern(c), L - 1))] = pf * w[c];
    std::vector<Rational> out(sp.size(), Rational(0));
    for (int col = 0; col < sp.size(); ++col) out[col] = vec[sp.rotate(col)];
    return {v, std::move(out)};
}

std::vector<Rational> eval_descend(BoundaryType type, int L, const std::vector<Rational>& zs,
                                   const Rational& A) {
    if (L == 0) return {Rational(1)};
    if (L == 1) {
        if (type == BoundaryType::O) return {(A + zs[0] + zs[0]) * Rational(2), (A - zs[0] - zs[0]) * Rational(2)};
        return {Rational(2)};
    }
    if ((type == BoundaryType::P || type == BoundaryType::C) && L == 2) return {Rational(2)};

    PatternSpace sp(type, L);
    std::vector<NumNode> nodes;
    switch (type) {
        case BoundaryType::I:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, true));
            nodes.push_back(num_right_node(type, L, zs, A, sp));
            break;
        case BoundaryType::C:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, false));
            if (L % 2 == 1) nodes.push_back(num_pair_node(type, L, zs, A, sp, 1, true, false));
            break;
        case BoundaryType::O:
        case BoundaryType::M:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, true));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, true, false));
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, true, true));
            nodes.push_back(num_right_node(type, L, zs, A, sp));
            if (type == BoundaryType::O) nodes.push_back(num_left_node(type, L, zs, A, sp));
            break;
        case BoundaryType::P:
            for (int j = 1; j <= L - 1; ++j) nodes.push_back(num_pair_node(type, L, zs, A, sp, j, false, false));
            if (L % 2 == 1) nodes.push_back(num_rotate_node(type, L, zs, A, sp));
            break;
    }
    bool even = (type == BoundaryType::C);
    const Rational& tgt = zs[L - 1];
    std::vector<Rational> out(sp.size(), Rational(0));
    for (size_t k = 0; k < nodes.size(); ++k) {
        Rational lk(1);
        for (size_t j2 = 0; j2 < nodes.size(); ++j2) {
            if (j2 == k) continue;
            Rational dn = even ? (nodes[k].node * nodes[k].node - nodes[j2].node * nodes[j2].node)
                               : (nodes[k].node - nodes[j2].node);
            if (dn.is_zero()) throw DegenerateNode("coincident numeric nodes");
            Rational nm = even ? (tgt * tgt - nodes[j2].node * nodes[j2].node) : (tgt - nodes[j2].node);
            lk *= nm / dn;
        }
        if (lk.is_zero()) continue;
        for (int c = 0; c < sp.size(); ++c) out[c] += lk * nodes[k].vals[c];
    }
    return out;
}

} // namespace

std::vector<Rational> evaluate_point(BoundaryType type, int L, const std::vector<Rational>& zs,
                                     const Rational& A) {
    if ((int)zs.size() != L) throw std::invalid_argument("evaluate_point: need L coordinates");
    return eval_descend(type, L, zs, A);
}

// --------------------------------------------------------------------------
// the e = 2A specialization

std::optional<std::vector<std::pair<Poly, int>>> factor_linear_complete(const Poly& p, Rational* unit) {
    if (p.is_zero()) return std::nullopt;
    auto t = p.table();
    std::vector<Poly> atoms;
    std::vector<int> vars;
    for (size_t v = 0; v < t->size(); ++v)
        if (p.degree_in((int)v) > 0) vars.push_back((int)v);
    for (size_t a = 0; a < vars.size(); ++a) {
        atoms.push_back(Poly::variable(t, vars[a]));
        for (size_t b = a + 1; b < vars.size(); ++b)
            for (int ca = 1; ca <= 2; ++ca)
                for (int cb = -2; cb <= 2; ++cb) {
                    if (cb == 0) continue;
                    atoms.push_back(Poly::variable(t, vars[a]).scaled(Rational(ca)) +
                                    Poly::variable(t, vars[b]).scaled(Rational(cb)));
                }
    }
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a + 1; b < vars.size(); ++b)
            for (size_t c = b + 1; c < vars.size(); ++c)
                for (int ca = 1; ca <= 3; ++ca)
                    for (int cb = -2; cb <= 2; ++cb)
                        for (int cc = -2; cc <= 2; ++cc) {
                            if (cb == 0 || cc == 0) continue;
                            atoms.push_back(Poly::variable(t, vars[a]).scaled(Rational(ca)) +
                                            Poly::variable(t, vars[b]).scaled(Rational(cb)) +
                                            Poly::variable(t, vars[c]).scaled(Rational(cc)));
                        }
    std::vector<std::pair<Poly, int>> factors;
    Poly rem = p;
    for (auto& a : atoms) {
        if (rem.is_constant()) break;
        int mult = 0;
        Poly q;
        while (rem.divides_exactly(a, &q)) {
            rem = q;
            ++mult;
        }
        if (mult) factors.emplace_back(a, mult);
    }
    if (!rem.is_constant()) return std::nullopt;
    if (unit) *unit = rem.constant_value();
    return factors;
}

Eps2AReport eps2A_factorization(const QkzSolution& sol) {
    Eps2AReport out;
    auto t = sol.table;
    int ie = t->require("e");
    Poly twoA = pvar(t, "A").scaled(Rational(2));
    out.vanished.assign(sol.space->size(), false);
    for (int p = 0; p < sol.space->size(); ++p) {
        Poly sub = sol.comps[p].substitute_var(ie, twoA);
        const LinkPattern& pat = sol.space->pattern(p);
        if (sub.is_zero()) {
            out.vanished[p] = true;
            continue;
        }
        Rational unit;
        auto f = factor_linear_complete(sub, &unit);
        out.rep.check(f.has_value(), "no complete linear factorization at e=2A for " + pat.str());
    }
    if (sol.type == BoundaryType::M) {
        for (int p = 0; p < sol.space->size(); ++p) {
            bool all_bnd = true;
            for (int i = 1; i <= sol.L; ++i) all_bnd &= (sol.space->pattern(p).target(i) == TGT_R);
            out.rep.check(out.vanished[p] == !all_bnd,
                          "mixed e=2A survivor pattern " + sol.space->pattern(p).str());
        }
    }
    if (sol.type == BoundaryType::O) {
        for (int p = 0; p < sol.space->size(); ++p) {
            bool pure_boundary = true;
            for (int i = 1; i <= sol.L; ++i) {
                int v = sol.space->pattern(p).target(i);
                pure_boundary &= (v == TGT_L || v == TGT_R);
            }
            out.rep.check(out.vanished[p] == !pure_boundary,
                          "open e=2A survivor pattern " + sol.space->pattern(p).str());
        }
    }
    if (sol.type == BoundaryType::P || sol.type == BoundaryType::I || sol.type == BoundaryType::C) {
        for (int p = 0; p < sol.space->size(); ++p)
            out.rep.check(!out.vanished[p], "unexpected e=2A vanishing " + sol.space->pattern(p).str());
    }
    return out;
}

} // namespace brauer
