#include "brauer/rkops.hpp"

#include <sstream>

namespace brauer {

Poly shift_s(const VarTablePtr& t, BoundaryType type) {
    Poly e = Poly::variable(t, "e");
    if (type == BoundaryType::O || type == BoundaryType::M) return e.scaled(Rational(1, 2));
    return e;
}

LoopOperator LoopOperator::identity(const PatternSpace* space, VarTablePtr table) {
    LoopOperator op(space, table);
    for (int i = 0; i < space->size(); ++i) op.add(i, i, LinFrac::one(table));
    return op;
}

void LoopOperator::add(int row, int col, const LinFrac& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(row, col);
    auto it = m_.find(key);
    if (it == m_.end()) m_.emplace(key, v);
    else {
        it->second += v;
        if (it->second.is_zero()) m_.erase(it);
    }
}

LinFrac LoopOperator::entry(int row, int col) const {
    auto it = m_.find({row, col});
    return it == m_.end() ? LinFrac::zero(table_) : it->second;
}

std::vector<LinFrac> LoopOperator::apply(const std::vector<LinFrac>& v) const {
    std::vector<LinFrac> out(space_->size(), LinFrac::zero(table_));
    for (auto& [rc, val] : m_) {
        if (v[rc.second].is_zero()) continue;
        out[rc.first] += val * v[rc.second];
    }
    return out;
}

std::vector<LinFrac> LoopOperator::apply_poly(const std::vector<Poly>& v) const {
    std::vector<LinFrac> lifted;
    lifted.reserve(v.size());
    for (auto& p : v) lifted.emplace_back(p);
    return apply(lifted);
}

LoopOperator LoopOperator::compose(const LoopOperator& rhs) const {
    LoopOperator out(space_, table_);
    std::map<int, std::vector<std::pair<int, const LinFrac*>>> by_row;
    for (auto& [rc, val] : rhs.m_) by_row[rc.first].emplace_back(rc.second, &val);
    for (auto& [rc, val] : m_) {
        auto it = by_row.find(rc.second);
        if (it == by_row.end()) continue;
        for (auto& [col, pv] : it->second) out.add(rc.first, col, val * (*pv));
    }
    return out;
}

LoopOperator LoopOperator::operator-(const LoopOperator& o) const {
    LoopOperator out = *this;
    for (auto& [rc, val] : o.m_) out.add(rc.first, rc.second, -val);
    return out;
}

LoopOperator LoopOperator::scaled(const LinFrac& c) const {
    LoopOperator out(space_, table_);
    for (auto& [rc, val] : m_) out.add(rc.first, rc.second, val * c);
    return out;
}

LoopOperator LoopOperator::substitute_var(int var, const Poly& value) const {
    LoopOperator out(space_, table_);
    for (auto& [rc, val] : m_) out.add(rc.first, rc.second, val.substitute_var(var, value));
    return out;
}

bool LoopOperator::is_zero() const {
    for (auto& [rc, val] : m_) {
        (void)rc;
        if (!val.is_zero()) return false;
    }
    return true;
}

LoopOperator build_R(const PatternSpace& sp, int i, const Poly& arg) {
    auto t = arg.table();
    Poly A = Poly::variable(t, "A"), e = Poly::variable(t, "e");
    Poly two_A_e = A.scaled(Rational(2)) - e;        // 2A-e
    Poly absorbed = (A - e).scaled(Rational(2));     // (2A-e)*beta
    std::vector<Poly> rfacs{A + arg, A.scaled(Rational(2)) - arg - e};
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) {
        op.add(col, col, LinFrac(two_A_e * (A - arg)).div_forms(rfacs));
        auto ge = sp.act(Generator::e(i), col);
        Poly ce = (ge.beta_exponent ? absorbed : two_A_e) * arg;
        op.add(ge.index, col, LinFrac(ce).div_forms(rfacs));
        auto gf = sp.act(Generator::f(i), col);
        op.add(gf.index, col, LinFrac((A - arg) * arg).div_forms(rfacs));
    }
    return op;
}

LoopOperator build_R_numerator(const PatternSpace& sp, int i, const Poly& arg) {
    auto t = arg.table();
    Poly A = Poly::variable(t, "A"), e = Poly::variable(t, "e");
    Poly two_A_e = A.scaled(Rational(2)) - e;
    Poly absorbed = (A - e).scaled(Rational(2));
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) {
        op.add(col, col, LinFrac(two_A_e * (A - arg)));
        auto ge = sp.act(Generator::e(i), col);
        op.add(ge.index, col, LinFrac((ge.beta_exponent ? absorbed : two_A_e) * arg));
        auto gf = sp.act(Generator::f(i), col);
        op.add(gf.index, col, LinFrac((A - arg) * arg));
    }
    return op;
}

static LoopOperator build_K(const PatternSpace& sp, const Generator& g, const Poly& arg) {
    auto t = arg.table();
    Poly A = Poly::variable(t, "A");
    Poly kf = A + arg.scaled(Rational(2));           // k(arg)
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) {
        op.add(col, col, LinFrac(A - arg.scaled(Rational(2))).div_form(kf));
        auto ge = sp.act(g, col);
        op.add(ge.index, col, LinFrac(arg.scaled(Rational(4))).div_form(kf));
    }
    return op;
}

LoopOperator build_K0(const PatternSpace& sp, const Poly& arg) {
    if (sp.type() == BoundaryType::I || sp.type() == BoundaryType::O)
        return build_K(sp, Generator::e0(), arg);
    return LoopOperator::identity(&sp, arg.table());
}

LoopOperator build_KL(const PatternSpace& sp, const Poly& arg) {
    if (sp.type() == BoundaryType::I || sp.type() == BoundaryType::O || sp.type() == BoundaryType::M)
        return build_K(sp, Generator::eL(), arg);
    return LoopOperator::identity(&sp, arg.table());
}

LoopOperator build_sigma(const PatternSpace& sp, const VarTablePtr& t) {
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) op.add(sp.rotate(col), col, LinFrac::one(t));
    return op;
}

LoopOperator build_generator_absorbed(const PatternSpace& sp, const Generator& g, const VarTablePtr& t) {
    Poly A = Poly::variable(t, "A"), e = Poly::variable(t, "e");
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) {
        auto r = sp.act(g, col);
        LinFrac w = LinFrac::one(t);
        if (r.beta_exponent)
            w = LinFrac((A - e).scaled(Rational(2))).div_form(A.scaled(Rational(2)) - e);
        op.add(r.index, col, w);
    }
    return op;
}

LoopOperator build_generator_beta(const PatternSpace& sp, const Generator& g, const VarTablePtr& t) {
    Poly beta = Poly::variable(t, "beta");
    LoopOperator op(&sp, t);
    for (int col = 0; col < sp.size(); ++col) {
        auto r = sp.act(g, col);
        op.add(r.index, col, LinFrac(r.beta_exponent ? beta : Poly::constant(t, Rational(1))));
    }
    return op;
}

Poly simple_root(const VarTablePtr& t, BoundaryType type, int L, int i) {
    Poly s = shift_s(t, type);
    if (i >= 1 && i <= L - 1)
        return Poly::variable(t, "z" + std::to_string(i)) - Poly::variable(t, "z" + std::to_string(i + 1));
    if (type == BoundaryType::P) {
        if (i == L) return Poly::variable(t, "z" + std::to_string(L)) - Poly::variable(t, "z1") - s;
        throw InvalidKind("alpha_0 undefined for type p");
    }
    if (i == 0) return Poly::variable(t, "z1").scaled(Rational(-2)) - s;
    if (i == L) return Poly::variable(t, "z" + std::to_string(L)).scaled(Rational(2));
    throw InvalidKind("simple root index out of range");
}

Poly tau_apply(BoundaryType type, int L, const Poly& p, int i) {
    auto t = p.table();
    Poly s = shift_s(t, type);
    std::map<int, Poly> a;
    auto zi = [&](int k) { return t->require("z" + std::to_string(k)); };
    if (i >= 1 && i <= L - 1) {
        a.emplace(zi(i), Poly::variable(t, "z" + std::to_string(i + 1)));
        a.emplace(zi(i + 1), Poly::variable(t, "z" + std::to_string(i)));
    } else if (type == BoundaryType::P && i == L) {
        a.emplace(zi(L), Poly::variable(t, "z1") + s);
        a.emplace(zi(1), Poly::variable(t, "z" + std::to_string(L)) - s);
    } else if (i == 0) {
        a.emplace(zi(1), -Poly::variable(t, "z1") - s);
    } else if (i == L) {
        a.emplace(zi(L), -Poly::variable(t, "z" + std::to_string(L)));
    } else {
        throw InvalidKind("tau index out of range");
    }
    return p.substitute(a);
}

std::vector<LinFrac> divided_difference(BoundaryType type, const std::vector<Poly>& v, int L, int i,
                                        DivDiff kind) {
    if (v.empty()) return {};
    auto t = v.front().table();
    Poly alpha = simple_root(t, type, L, i);
    Poly A = Poly::variable(t, "A");
    std::vector<LinFrac> out;
    out.reserve(v.size());
    for (auto& f : v) {
        Poly tf = tau_apply(type, L, f, i);
        if (kind == DivDiff::Plain) {
            out.emplace_back(LinFrac(f - tf).div_form(alpha));
        } else {
            if (i < 1 || i > L - 1) throw InvalidKind("primed divided difference needs 0<i<L");
            // (A+alpha) d_i (A+alpha)^{-1} f  =  ((A-alpha) f - (A+alpha) tau f) / (alpha (A-alpha))
            Poly num = (A - alpha) * f - (A + alpha) * tf;
            out.emplace_back(LinFrac(num).div_form(alpha).div_form(A - alpha));
        }
    }
    return out;
}

namespace {

std::string opname(const std::string& base, int i) { return base + "_" + std::to_string(i); }

void check_equal(VerifyReport& rep, const LoopOperator& a, const LoopOperator& b, const std::string& what) {
    LoopOperator d = a - b;
    if (d.is_zero()) return;
    for (auto& [rc, val] : d.entries()) {
        if (val.is_zero()) continue;
        std::ostringstream os;
        os << what << " fails at entry (" << rc.first << "," << rc.second << ")";
        rep.failures.push_back(os.str());
        return;
    }
}

} // namespace

VerifyReport verify_operator_identities(BoundaryType type, int L, const std::string& which) {
    VerifyReport rep;
    auto t = VarTable::standard(L, {"x", "y"});
    PatternSpace sp(type, L);
    Poly x = Poly::variable(t, "x"), y = Poly::variable(t, "y");
    Poly A = Poly::variable(t, "A"), e = Poly::variable(t, "e");
    bool all = which == "all";
    int imax = (type == BoundaryType::P) ? L : L - 1;

    if (all || which == "unitarity") {
        for (int i = 1; i <= imax && L >= 2; ++i) {
            auto R1 = build_R(sp, i, x), R2 = build_R(sp, i, -x);
            check_equal(rep, R1.compose(R2), LoopOperator::identity(&sp, t), opname("unitarity R", i));
        }
        if (type == BoundaryType::I || type == BoundaryType::O) {
            auto K1 = build_K0(sp, x), K2 = build_K0(sp, -x);
            check_equal(rep, K1.compose(K2), LoopOperator::identity(&sp, t), "unitarity K0");
        }
        if (type == BoundaryType::I || type == BoundaryType::O || type == BoundaryType::M) {
            auto K1 = build_KL(sp, x), K2 = build_KL(sp, -x);
            check_equal(rep, K1.compose(K2), LoopOperator::identity(&sp, t), "unitarity KL");
        }
    }
    if (all || which == "ybe") {
        for (int i = 1; i + 1 <= imax && L >= 3; ++i) {
            int j = i + 1;
            auto lhs = build_R(sp, i, x).compose(build_R(sp, j, x + y)).compose(build_R(sp, i, y));
            auto rhs = build_R(sp, j, y).compose(build_R(sp, i, x + y)).compose(build_R(sp, j, x));
            check_equal(rep, lhs, rhs, opname("ybe", i));
        }
    }
    if (all || which == "reflection") {
        if (L >= 2 && (type == BoundaryType::I || type == BoundaryType::O)) {
            auto lhs = build_K0(sp, x).compose(build_R(sp, 1, x + y)).compose(build_K0(sp, y)).compose(build_R(sp, 1, y - x));
            auto rhs = build_R(sp, 1, y - x).compose(build_K0(sp, y)).compose(build_R(sp, 1, x + y)).compose(build_K0(sp, x));
            check_equal(rep, lhs, rhs, "reflection left");
        }
        if (L >= 2 && (type == BoundaryType::I || type == BoundaryType::O || type == BoundaryType::M)) {
            auto lhs = build_KL(sp, x).compose(build_R(sp, L - 1, x + y)).compose(build_KL(sp, y)).compose(build_R(sp, L - 1, y - x));
            auto rhs = build_R(sp, L - 1, y - x).compose(build_KL(sp, y)).compose(build_R(sp, L - 1, x + y)).compose(build_KL(sp, x));
            check_equal(rep, lhs, rhs, "reflection right");
        }
    }
    if (all || which == "rpoint") {
        // beta * R_i(A) = e_i, cleared as 2(A-e) R_i(A) = (2A-e) E_i
        for (int i = 1; i <= imax && L >= 2; ++i) {
            auto lhs = build_R(sp, i, A).scaled(LinFrac((A - e).scaled(Rational(2))));
            auto rhs = build_generator_absorbed(sp, Generator::e(i), t).scaled(LinFrac(A.scaled(Rational(2)) - e));
            check_equal(rep, lhs, rhs, opname("rpoint", i));
        }
    }
    if (all || which == "stochastic") {
        int ie = t->require("e");
        auto colsums_one = [&](const LoopOperator& op, const std::string& what) {
            LoopOperator z = op.substitute_var(ie, Poly(t));
            for (int col = 0; col < sp.size(); ++col) {
                LinFrac s = LinFrac::zero(t);
                for (int row = 0; row < sp.size(); ++row) s += z.entry(row, col);
                if (!(s == LinFrac::one(t))) {
                    rep.failures.push_back(what + ": column " + std::to_string(col) + " does not sum to 1");
                    return;
                }
            }
        };
        for (int i = 1; i <= imax && L >= 2; ++i) colsums_one(build_R(sp, i, x), opname("stochastic R", i));
        colsums_one(build_K0(sp, x), "stochastic K0");
        colsums_one(build_KL(sp, x), "stochastic KL");
    }
    return rep;
}

VerifyReport verify_algebra_relations(BoundaryType type, int L) {
    VerifyReport rep;
    auto t = VarTable::standard(0, {"beta"});
    PatternSpace sp(type, L);
    LinFrac beta{Poly::variable(t, "beta")};
    auto E = [&](int i) { return build_generator_beta(sp, Generator::e(i), t); };
    auto F = [&](int i) { return build_generator_beta(sp, Generator::f(i), t); };
    LoopOperator id = LoopOperator::identity(&sp, t);
    bool wrap = (type == BoundaryType::P);
    int imax = wrap ? L : L - 1;
    auto nxt = [&](int i) { return i == L ? 1 : i + 1; };

    for (int i = 1; i <= imax; ++i) {
        check_equal(rep, E(i).compose(E(i)), E(i).scaled(beta), opname("e^2=beta e", i));
        check_equal(rep, F(i).compose(F(i)), id, opname("f^2=1", i));
        check_equal(rep, F(i).compose(E(i)), E(i), opname("fe=e", i));
        check_equal(rep, E(i).compose(F(i)), E(i), opname("ef=e", i));
    }
    for (int i = 1; i <= imax; ++i) {
        int j = nxt(i);
        if ((j > imax || j != i + 1) && !wrap) continue;
        if (wrap && L == 2 && i == 2) continue;    // wrap neighbour coincides with i=1
        check_equal(rep, E(i).compose(E(j)).compose(E(i)), E(i), opname("e e' e=e", i));
        check_equal(rep, E(j).compose(E(i)).compose(E(j)), E(j), opname("e' e e'=e'", i));
        check_equal(rep, F(i).compose(E(j)).compose(E(i)), F(j).compose(E(i)), opname("fe'e=f'e", i));
        check_equal(rep, F(j).compose(E(i)).compose(E(j)), F(i).compose(E(j)), opname("f'ee'=fe'", i));
        check_equal(rep, F(i).compose(F(j)).compose(F(i)), F(j).compose(F(i)).compose(F(j)), opname("braid", i));
        check_equal(rep, E(i).compose(E(j)).compose(F(i)), E(i).compose(F(j)), opname("ee'f=ef'", i));
        check_equal(rep, E(j).compose(E(i)).compose(F(j)), E(j).compose(F(i)), opname("e'ef'=e'f", i));
    }
    for (int i = 1; i <= imax; ++i)
        for (int j = i + 2; j <= imax; ++j) {
            if (wrap && i == 1 && j == L) continue;
            check_equal(rep, E(i).compose(E(j)), E(j).compose(E(i)), "distant [e,e]");
            check_equal(rep, E(i).compose(F(j)), F(j).compose(E(i)), "distant [e,f]");
            check_equal(rep, F(i).compose(F(j)), F(j).compose(F(i)), "distant [f,f]");
        }

    bool has0 = sp.generator_valid(Generator::e0());
    bool hasL = sp.generator_valid(Generator::eL()) && type != BoundaryType::P;
    if (has0) {
        auto E0 = build_generator_beta(sp, Generator::e0(), t);
        check_equal(rep, E0.compose(E0), E0, "e0^2=e0");
        if (L >= 2) {
            check_equal(rep, E(1).compose(E0).compose(E(1)), E(1), "e1 e0 e1=e1");
            check_equal(rep, E0.compose(F(1)).compose(E0), E0.compose(E(1)).compose(E0), "e0 f1 e0=e0 e1 e0");
        }
    }
    if (hasL) {
        auto EL = build_generator_beta(sp, Generator::eL(), t);
        check_equal(rep, EL.compose(EL), EL, "eL^2=eL");
        if (L >= 2) {
            check_equal(rep, E(L - 1).compose(EL).compose(E(L - 1)), E(L - 1), "e_{L-1} eL e_{L-1}");
            check_equal(rep, EL.compose(F(L - 1)).compose(EL), EL.compose(E(L - 1)).compose(EL),
                        "eL f_{L-1} eL=eL e_{L-1} eL");
        }
    }
    auto prodE = [&](std::vector<int> idx, bool with0, bool withL) {
        LoopOperator p = id;
        if (with0) p = p.compose(build_generator_beta(sp, Generator::e0(), t));
        for (int i : idx) p = p.compose(E(i));
        if (withL) p = p.compose(build_generator_beta(sp, Generator::eL(), t));
        return p;
    };
    if (type == BoundaryType::P && L >= 3) {
        std::vector<int> i1, i2;
        for (int i = 1; i <= (L % 2 == 0 ? L - 1 : L); i += 2) i1.push_back(i);
        for (int i = 2; i <= (L % 2 == 0 ? L : L - 1); i += 2) i2.push_back(i);
        auto I1 = prodE(i1, false, false), I2 = prodE(i2, false, false);
        check_equal(rep, I1.compose(I2).compose(I1), I1.scaled(beta * beta), "I1 I2 I1 = beta^2 I1");
        check_equal(rep, I2.compose(I1).compose(I2), I2.scaled(beta * beta), "I2 I1 I2 = beta^2 I2");
    }
    if ((type == BoundaryType::I || type == BoundaryType::O) && L >= 2) {
        std::vector<int> i1, i2;
        bool withL1 = (L % 2 == 0), withL2 = (L % 2 == 1);
        for (int i = 2; i <= L - 1; i += 2) i1.push_back(i);
        for (int i = 1; i <= L - 1; i += 2) i2.push_back(i);
        auto I1 = prodE(i1, true, withL1);
        auto I2 = prodE(i2, false, withL2);
        check_equal(rep, I1.compose(I2).compose(I1), I1, "I1 I2 I1 = I1");
        check_equal(rep, I2.compose(I1).compose(I2), I2, "I2 I1 I2 = I2");
    }
    return rep;
}

} // namespace brauer
