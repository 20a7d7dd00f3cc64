#include "brauer/sumrule.hpp"

#include "brauer/interpolate.hpp"
#include "brauer/serialize.hpp"

#include <functional>

namespace brauer {

namespace {

Poly pvar(const VarTablePtr& t, const std::string& n) { return Poly::variable(t, n); }
Poly zv(const VarTablePtr& t, int i) { return Poly::variable(t, "z" + std::to_string(i)); }

} // namespace

Poly compute_zsum(const QkzSolution& sol) {
    auto t = sol.table;
    int ie = t->require("e");
    Poly z(t);
    for (auto& c : sol.comps) z += c;
    z = z.substitute_var(ie, Poly(t));
    // full Weyl symmetry: adjacent transpositions, and sign flips for the C-hat types
    for (int i = 1; i <= sol.L - 1; ++i) {
        std::map<int, Poly> sw{{t->require("z" + std::to_string(i)), zv(t, i + 1)},
                               {t->require("z" + std::to_string(i + 1)), zv(t, i)}};
        if (!(z.substitute(sw) == z)) throw SymmetryViolation("swap z" + std::to_string(i));
    }
    if (sol.type != BoundaryType::P) {
        for (int i = 1; i <= sol.L; ++i) {
            int iz = t->require("z" + std::to_string(i));
            if (!(z.substitute_var(iz, -zv(t, i)) == z))
                throw SymmetryViolation("sign flip z" + std::to_string(i));
        }
    }
    return z;
}

LinFrac pfaffian(const std::vector<std::vector<LinFrac>>& M) {
    size_t n = M.size();
    if (n % 2) throw NotAntisymmetric();
    VarTablePtr t;
    for (auto& row : M)
        for (auto& x : row)
            if (x.num().table()) { t = x.num().table(); break; }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!((M[i][j] + M[j][i]).is_zero())) throw NotAntisymmetric();
    std::function<LinFrac(std::vector<int>)> pf = [&](std::vector<int> idx) -> LinFrac {
        if (idx.empty()) return LinFrac::one(t);
        LinFrac acc = LinFrac::zero(t);
        int a = idx[0];
        for (size_t k = 1; k < idx.size(); ++k) {
            if (M[a][idx[k]].is_zero()) continue;
            std::vector<int> rest;
            for (size_t j = 1; j < idx.size(); ++j)
                if (j != k) rest.push_back(idx[j]);
            LinFrac term = M[a][idx[k]] * pf(rest);
            acc += (k % 2 == 1) ? term : -term;
        }
        return acc;
    };
    std::vector<int> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = (int)i;
    return pf(all);
}

Rational pfaffian_num(std::vector<std::vector<Rational>> M) {
    size_t n = M.size();
    if (n % 2) throw NotAntisymmetric();
    std::function<Rational(std::vector<int>)> pf = [&](std::vector<int> idx) -> Rational {
        if (idx.empty()) return Rational(1);
        Rational acc(0);
        int a = idx[0];
        for (size_t k = 1; k < idx.size(); ++k) {
            if (M[a][idx[k]].is_zero()) continue;
            std::vector<int> rest;
            for (size_t j = 1; j < idx.size(); ++j)
                if (j != k) rest.push_back(idx[j]);
            Rational term = M[a][idx[k]] * pf(rest);
            acc += (k % 2 == 1) ? term : -term;
        }
        return acc;
    };
    std::vector<int> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = (int)i;
    return pf(all);
}

Rational determinant_num(std::vector<std::vector<Rational>> M) {
    size_t n = M.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c].is_zero()) continue;
            Rational f = M[r][c] / M[c][c];
            for (size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det;
}

LinFrac determinant(const std::vector<std::vector<LinFrac>>& M) {
    size_t n = M.size();
    VarTablePtr t;
    for (auto& row : M)
        for (auto& x : row)
            if (x.num().table()) { t = x.num().table(); break; }
    std::function<LinFrac(std::vector<int>, size_t)> det = [&](std::vector<int> cols, size_t row) -> LinFrac {
        if (cols.empty()) return LinFrac::one(t);
        LinFrac acc = LinFrac::zero(t);
        for (size_t k = 0; k < cols.size(); ++k) {
            if (M[row][cols[k]].is_zero()) continue;
            std::vector<int> rest;
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            LinFrac term = M[row][cols[k]] * det(rest, row + 1);
            acc += (k % 2 == 0) ? term : -term;
        }
        return acc;
    };
    std::vector<int> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = (int)i;
    return det(all, 0);
}

// ----------------------------------------------------------------------

namespace {

// b(z_i, z_j) numerator factors and denominator factors
struct BFactor {
    std::vector<Poly> num;  // (A-zi+zj)(A+zi-zj)(A-zi-zj)(A+zi+zj)
    std::vector<Poly> den;  // (zi-zj)(zi+zj)
};

BFactor bfactor(const VarTablePtr& t, int i, int j) {
    Poly A = pvar(t, "A"), zi = zv(t, i), zj = zv(t, j);
    BFactor b;
    b.num = {A - zi + zj, A + zi - zj, A - zi - zj, A + zi + zj};
    b.den = {zi - zj, zi + zj};
    return b;
}

LinFrac product_over(const VarTablePtr& t, const std::vector<Poly>& nums, const std::vector<Poly>& dens) {
    LinFrac out = LinFrac::one(t);
    for (auto& n : nums) out *= LinFrac(n);
    out = out.div_forms(dens);
    return out;
}

} // namespace

Poly zformula(BoundaryType type, int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    if (L == 0) return Poly::constant(t, Rational(1));
    bool even = (L % 2 == 0);
    LinFrac pref = LinFrac::one(t);
    std::vector<std::vector<LinFrac>> M;
    int bsz = even ? L : L + 1;
    M.assign(bsz, std::vector<LinFrac>(bsz, LinFrac::zero(t)));
    auto fives = [&](int i, int j) {
        Poly zi = zv(t, i), zj = zv(t, j);
        return (A * A).scaled(Rational(5)) - (zi * zi).scaled(Rational(2)) - (zj * zj).scaled(Rational(2));
    };
    switch (type) {
        case BoundaryType::P: {
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) {
                    Poly zi = zv(t, i), zj = zv(t, j);
                    pref *= product_over(t, {A - zi + zj, A + zi - zj}, {zi - zj});
                }
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j) {
                    if (i == j) continue;
                    Poly zi = zv(t, i), zj = zv(t, j);
                    M[i - 1][j - 1] = product_over(t, {zi - zj}, {A - zi + zj, A + zi - zj});
                }
            if (even) {
                pref = pref.scaled(Rational(1L << (L / 2)));
            } else {
                Rational c(1);
                for (int k = 0; k < (L + 1) / 2; ++k) c *= Rational(-2);
                pref = pref.scaled(c);
                for (int i = 1; i <= L; ++i) {
                    M[i - 1][L] = -LinFrac::one(t);
                    M[L][i - 1] = LinFrac::one(t);
                }
            }
            return (pref * pfaffian(M)).clear_to_poly();
        }
        case BoundaryType::I:
        case BoundaryType::C: {
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) {
                    auto b = bfactor(t, i, j);
                    pref *= product_over(t, b.num, b.den);
                }
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j) {
                    if (i == j) continue;
                    auto b = bfactor(t, i, j);
                    LinFrac inv = product_over(t, b.den, b.num);
                    M[i - 1][j - 1] = (type == BoundaryType::I) ? inv * LinFrac(fives(i, j)) : inv;
                }
            if (even) {
                pref = pref.scaled(Rational(1L << (L / 2)));
            } else {
                // odd constant 2^((L+1)/2) for both i and c: forced by Z_1 = 2
                long c = 1L << ((L + 1) / 2);
                pref = pref.scaled(Rational(c));
                for (int i = 1; i <= L; ++i) {
                    M[i - 1][L] = LinFrac::one(t);
                    M[L][i - 1] = -LinFrac::one(t);
                }
            }
            return (pref * pfaffian(M)).clear_to_poly();
        }
        case BoundaryType::O: {
            for (int i = 1; i <= L; ++i)
                for (int j = i + 1; j <= L; ++j) {
                    auto b = bfactor(t, i, j);
                    pref *= product_over(t, b.num, b.den);
                    pref *= product_over(t, b.num, b.den);
                }
            Rational c(1);
            for (int k = 0; k < L; ++k) c *= Rational(2);
            pref = pref.scaled(c);                       // (2A)^L: the A^L part below
            for (int k = 0; k < L; ++k) pref *= LinFrac(A);
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j) {
                    if (i == j) {
                        // diagonal of the determinant: (5A^2-4z_i^2)/b(z_i,z_i) is singular;
                        // the o formula uses the same off-diagonal kernel, diagonal from the limit
                        continue;
                    }
                    auto b = bfactor(t, i, j);
                    M[i - 1][j - 1] = product_over(t, b.den, b.num) * LinFrac(fives(i, j));
                }
            if (!even) {
                pref = pref.scaled(Rational(2));
                for (int i = 1; i <= L; ++i) {
                    M[i - 1][L] = LinFrac::one(t);
                    M[L][i - 1] = -LinFrac::one(t);
                }
            }
            return (pref * determinant(M)).clear_to_poly();
        }
        case BoundaryType::M:
            throw InvalidKind("no closed-form sum rule for the mixed case");
    }
    throw InvalidKind("zformula");
}

// ----------------------------------------------------------------------
// localization

namespace {

// accumulate sum of 1/prod(dens) terms; div_forms folds the full rational
// content of each denominator into the numerator
struct FracSum {
    VarTablePtr t;
    LinFrac acc;
    explicit FracSum(VarTablePtr tt) : t(std::move(tt)), acc(LinFrac::zero(t)) {}
    void add(const std::vector<Poly>& dens) {
        acc += LinFrac::one(t).div_forms(dens);
    }
};

Poly loc_p(int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    int n = L / 2, r = L % 2;
    FracSum sum(t);
    // n-subsets of {1..L}
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if ((int)pick.size() == n) {
            std::vector<char> inI(L + 1, 0);
            for (int x : pick) inI[x] = 1;
            std::vector<Poly> dens;
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j) {
                    if (!inI[i] || inI[j]) continue;
                    dens.push_back(zv(t, j) - zv(t, i));
                    dens.push_back(A + zv(t, i) - zv(t, j));
                }
            sum.add(dens);
            return;
        }
        for (int x = from; x <= L; ++x) {
            pick.push_back(x);
            rec(x + 1);
            pick.pop_back();
        }
    };
    rec(1);
    LinFrac pref = LinFrac::one(t).scaled(Rational(1L << r));
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            pref *= LinFrac(i == j ? A : A + zv(t, i) - zv(t, j));
    return (pref * sum.acc).clear_to_poly();
}

Poly loc_i(int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    int n = L;
    FracSum sum(t);
    for (long mask = 0; mask < (1L << n); ++mask) {
        auto eps = [&](int i) { return (mask >> (i - 1)) & 1 ? Rational(1) : Rational(-1); };
        std::vector<Poly> dens;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Poly d1 = zv(t, i).scaled(eps(i)) + zv(t, j).scaled(eps(j));
                dens.push_back(d1);
                dens.push_back(A - d1);
            }
        sum.add(dens);
    }
    LinFrac pref = LinFrac::one(t);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Poly zi = zv(t, i), zj = zv(t, j);
            pref *= LinFrac((A + zi + zj) * (A + zi - zj) * (A - zi + zj) * (A - zi - zj));
        }
    for (int k = 0; k < n; ++k) pref = pref.div_form(A);
    return (pref * sum.acc).clear_to_poly();
}

Poly loc_c_even(int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    int n = L;
    FracSum sum(t);
    for (long mask = 0; mask < (1L << n); ++mask) {
        auto eps = [&](int i) { return (mask >> (i - 1)) & 1 ? Rational(1) : Rational(-1); };
        std::vector<Poly> dens;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Poly d1 = zv(t, i).scaled(eps(i)) + zv(t, j).scaled(eps(j));
                dens.push_back(d1);
                if (i < j) dens.push_back(A - d1);
            }
        sum.add(dens);
    }
    LinFrac pref = LinFrac::one(t);
    for (int k = 0; k < n; ++k) pref *= LinFrac(A);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly zi = zv(t, i), zj = zv(t, j);
            pref *= LinFrac((A + zi + zj) * (A + zi - zj) * (A - zi + zj) * (A - zi - zj));
        }
    return (pref * sum.acc).clear_to_poly();
}

Poly loc_m(int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    int m = L;
    FracSum sum(t);
    for (long mask = 0; mask < (1L << (2 * m)); ++mask) {
        auto eps = [&](int i) { return (mask >> (i - 1)) & 1 ? Rational(1) : Rational(-1); };
        auto epsp = [&](int i) { return (mask >> (m + i - 1)) & 1 ? Rational(1) : Rational(-1); };
        std::vector<Poly> dens;
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                dens.push_back(zv(t, i).scaled(eps(i)) + zv(t, j).scaled(eps(j)));
                dens.push_back(zv(t, i).scaled(epsp(i)) + zv(t, j).scaled(epsp(j)));
            }
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                dens.push_back(A - zv(t, i).scaled(eps(i)) - zv(t, j).scaled(epsp(j)));
        sum.add(dens);
    }
    LinFrac pref = LinFrac::one(t);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Poly zi = zv(t, i), zj = zv(t, j);
            if (i == j) {
                pref *= LinFrac((A + zi.scaled(Rational(2))) * (A - zi.scaled(Rational(2))) * A * A);
            } else {
                pref *= LinFrac((A + zi + zj) * (A + zi - zj) * (A - zi + zj) * (A - zi - zj));
            }
        }
    return (pref * sum.acc).clear_to_poly();
}

// odd closed sizes from the even ones through the sum-rule recurrences
Poly loc_c_odd(int L, const VarTablePtr& t);

Poly loc_c(int L, const VarTablePtr& t) {
    if (L == 0) return Poly::constant(t, Rational(1));
    if (L % 2 == 0) return loc_c_even(L, t);
    return loc_c_odd(L, t);
}

Poly loc_c_odd(int L, const VarTablePtr& t) {
    Poly A = pvar(t, "A");
    if (L == 1) return A.scaled(Rational(2));   // the double point a^2=0 in C*Id
    // interpolate A^L * Z_L in z_L^2 using Z_L(z_L = A+-z_j) = p^c(+-z_j | rest)|_{e=0} Z_{L-2}
    auto tsmall = VarTable::standard(L - 2);
    Poly small = loc_c(L - 2, tsmall);
    int ie = t->require("e");
    int izL = t->require("z" + std::to_string(L));
    std::vector<Poly> nodes, values;
    auto add_node = [&](int j, bool reflectj) {
        std::vector<Poly> spec;
        for (int i = 1; i <= L - 1; ++i)
            if (i != j) spec.push_back(zv(t, i));
        Poly v = reflectj ? -zv(t, j) : zv(t, j);
        Poly pf = p_factor_bulk_at(BoundaryType::C, v, spec, {}).substitute_var(ie, Poly(t));
        // value of A^L Z_L at z_L = A+v: pf * A^2 * (A^{L-2} Z_{L-2})(spec)
        Poly val = pf * A * A * transplant(small, t, spec);
        nodes.push_back(A + v);
        values.push_back(val);
    };
    for (int j = 1; j <= L - 1; ++j) add_node(j, false);
    add_node(1, true);
    DegreeInfo deg = degree_table(BoundaryType::C, L);
    return lagrange_interpolate_even(nodes, values, izL, deg.pervar);
}

} // namespace

Poly localization_mdeg(BoundaryType type, int L, const VarTablePtr& t) {
    switch (type) {
        case BoundaryType::P: return loc_p(L, t);
        case BoundaryType::I: return loc_i(L, t);
        case BoundaryType::C: return loc_c(L, t);
        case BoundaryType::O: {
            Poly h = loc_i(L, t);
            return h * h;
        }
        case BoundaryType::M: return loc_m(L, t);
    }
    throw InvalidKind("localization_mdeg");
}

// ----------------------------------------------------------------------

SectorReport sector_identity(BoundaryType type, int m, SolveCache& cache) {
    if (type != BoundaryType::I && type != BoundaryType::C)
        throw InvalidKind("sector identity is for types i and c");
    int L = 2 * m;
    SectorReport out;
    const QkzSolution& sol = cache.get(type, L);
    auto t = sol.table;
    Poly A = pvar(t, "A"), e = pvar(t, "e");

    auto in_sector = [&](const LinkPattern& p) {
        for (int i = 1; i <= m; ++i) {
            int v = p.target(i);
            if (v < m + 1 || v > 2 * m) return false;
        }
        return true;
    };
    Poly sum(t);
    for (int p = 0; p < sol.space->size(); ++p)
        if (in_sector(sol.space->pattern(p))) sum += sol.comps[p];
    Poly AL = Poly::constant(t, Rational(1));
    for (int k = 0; k < L; ++k) AL *= A;
    out.sector_sum = AL * sum;

    Poly prod = Poly::constant(t, Rational(1));
    Poly twoA = A.scaled(Rational(2));
    if (type == BoundaryType::I) {
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                prod *= (A + zv(t, i) - zv(t, j)) * (A - zv(t, i) - zv(t, j) - e);
                if (i < j) prod *= (twoA + zv(t, j) - zv(t, i) - e) * (twoA + zv(t, i) + zv(t, j));
            }
        for (int i = m + 1; i <= 2 * m; ++i)
            for (int j = i; j <= 2 * m; ++j) {
                prod *= (A + zv(t, i) - zv(t, j)) * (A + zv(t, i) + zv(t, j));
                if (i < j) prod *= (twoA + zv(t, j) - zv(t, i) - e) * (twoA - zv(t, i) - zv(t, j) - e);
            }
    } else {
        for (int k = 0; k < 2 * m; ++k) prod *= A;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                prod *= (A + zv(t, i) - zv(t, j)) * (A - zv(t, i) - zv(t, j) - e) *
                        (twoA + zv(t, j) - zv(t, i) - e) * (twoA + zv(t, i) + zv(t, j));
        for (int i = m + 1; i <= 2 * m; ++i)
            for (int j = i + 1; j <= 2 * m; ++j)
                prod *= (A + zv(t, i) - zv(t, j)) * (A + zv(t, i) + zv(t, j)) *
                        (twoA + zv(t, j) - zv(t, i) - e) * (twoA - zv(t, i) - zv(t, j) - e);
    }
    out.product = prod;

    Poly q;
    if (!out.sector_sum.divides_exactly(prod, &q) || !q.is_constant())
        throw NotProportional("sector sum vs complete-intersection product");
    Rational c = q.constant_value();
    // c must be an exact power of two
    int k = 0;
    Rational two(2);
    Rational cc = c;
    while (cc.is_integer() && !cc.is_one() && cc.sgn() > 0) {
        Rational half = cc / two;
        if (!half.is_integer() && !half.is_one()) break;
        cc = half;
        ++k;
        if (k > 64) break;
    }
    out.rep.check(cc.is_one() && c.sgn() > 0, "sector constant " + c.str() + " is not a power of two");
    out.observed_exponent = k;
    if (k != 2 * m)
        out.rep.notes.push_back("observed exponent " + std::to_string(k) + " differs from 2^n with n=" +
                                std::to_string(2 * m));

    if (type == BoundaryType::I) {
        const QkzSolution& solc = cache.get(BoundaryType::C, L);
        Poly fac = Poly::constant(t, Rational(1));
        for (int i = 1; i <= m; ++i) fac *= A - zv(t, i).scaled(Rational(2)) - e;
        for (int i = m + 1; i <= 2 * m; ++i) fac *= A + zv(t, i).scaled(Rational(2));
        for (int p = 0; p < sol.space->size(); ++p) {
            const LinkPattern& pat = sol.space->pattern(p);
            if (!in_sector(pat)) continue;
            Poly ci = change_table(solc.comps[solc.space->index_of(pat)], t);
            out.rep.check(sol.comps[p] == fac * ci, "phi^i = prefactor * phi^c at " + pat.str());
        }
    }
    return out;
}

Rational commuting_degree(int n) {
    if (n % 2) throw InvalidKind("commuting degree: n must be even");
    int L = n;
    PatternSpace sp(BoundaryType::I, L);
    std::vector<int> tgt(L);
    for (int i = 1; i <= L; ++i) tgt[i - 1] = L + 1 - i;
    int target_index = sp.index_of(LinkPattern{L, tgt});
    long mpi = 1L << (L / 2);

    int degree = L * (L - 1);
    // base direction with pairwise-generic coordinates
    std::vector<Rational> z0;
    const long seeds[] = {3, 7, 17, 43, 89, 151, 211, 283};
    for (int i = 0; i < L; ++i) z0.emplace_back(seeds[i], 5);

    std::vector<Rational> ts, hs;
    long tnum = 1;
    while ((int)ts.size() < degree + 1) {
        Rational tv(tnum, 97);
        ++tnum;
        std::vector<Rational> zs;
        for (auto& z : z0) zs.push_back(z * tv);
        try {
            auto vals = evaluate_point(BoundaryType::I, L, zs, Rational(1));
            ts.push_back(tv);
            hs.push_back(vals[target_index]);
        } catch (const DegenerateNode&) {
            continue;   // skip colliding sample points
        }
        if (tnum > 40 * (degree + 1)) throw DegenerateNode("could not collect sample points");
    }
    // h(0) by Lagrange at zero
    Rational h0(0);
    for (size_t k = 0; k < ts.size(); ++k) {
        Rational lk(1);
        for (size_t j = 0; j < ts.size(); ++j) {
            if (j == k) continue;
            lk *= (-ts[j]) / (ts[k] - ts[j]);
        }
        h0 += lk * hs[k];
    }
    return h0 / Rational(mpi);
}

} // namespace brauer
