#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/interpolate.hpp"
#include "brauer/linfrac.hpp"
#include "brauer/linsolve.hpp"
#include "brauer/poly.hpp"

#include <random>

using namespace brauer;

static Poly var(const VarTablePtr& t, const char* n) { return Poly::variable(t, n); }

TEST_CASE("rational basics") {
    Rational a(3, 6);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(2) / Rational(-4)) == Rational(-1, 2));
    CHECK(Rational("-12/8") == Rational(-3, 2));
    Rational r;
    CHECK(Rational(9, 4).sqrt_exact(r));
    CHECK(r == Rational(3, 2));
    CHECK(!Rational(2).sqrt_exact(r));
}

TEST_CASE("poly arithmetic and the r(z) expansion") {
    auto t = VarTable::standard(1);
    Poly A = var(t, "A"), z = var(t, "z1"), e = var(t, "e");

    Poly diff = (A + z) * (A - z);
    CHECK(diff == A * A - z * z);

    // r(z) = (A+z)(2A-z-e)
    Poly r = (A + z) * (A.scaled(Rational(2)) - z - e);
    Poly expect = (A * A).scaled(Rational(2)) + A * z - A * e - z * z - z * e;
    CHECK(r == expect);

    Poly p = r + diff;
    CHECK((p + (-p)).is_zero());
    CHECK(r.homogeneous());
    CHECK(r.total_degree() == 2);
}

TEST_CASE("exact division") {
    auto t = VarTable::standard(1);
    Poly A = var(t, "A"), z = var(t, "z1"), e = var(t, "e");
    Poly n = A * A - (z * z).scaled(Rational(4));
    CHECK(n.exact_div(A + z.scaled(Rational(2))) == A - z.scaled(Rational(2)));
    Poly rz = (A + z) * (A.scaled(Rational(2)) - z - e);
    CHECK(rz.exact_div(A + z) == A.scaled(Rational(2)) - z - e);
    Poly bad = A * A + Poly::constant(t, Rational(1));
    CHECK_THROWS_AS(bad.exact_div(A + Poly::constant(t, Rational(1))), NotDivisible);
}

TEST_CASE("exact_div(mul(a,b), b) == a on random polys") {
    auto t = VarTable::standard(2);
    std::mt19937 rng(7);
    auto rnd = [&]() {
        Poly p(t);
        for (int k = 0; k < 4; ++k) {
            Mono m{std::vector<int16_t>(t->size(), 0)};
            for (size_t v = 0; v < t->size(); ++v) m.e[v] = (int16_t)(rng() % 3);
            p.add_term(m, Rational((long)(rng() % 9) - 4));
        }
        return p;
    };
    int done = 0;
    for (int it = 0; it < 40 && done < 20; ++it) {
        Poly a = rnd(), b = rnd();
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("ring axioms on random small polys") {
    auto t = VarTable::standard(2);
    std::mt19937 rng(11);
    auto rnd = [&]() {
        Poly p(t);
        for (int k = 0; k < 3; ++k) {
            Mono m{std::vector<int16_t>(t->size(), 0)};
            for (size_t v = 0; v < t->size(); ++v) m.e[v] = (int16_t)(rng() % 2);
            p.add_term(m, Rational((long)(rng() % 7) - 3));
        }
        return p;
    };
    for (int it = 0; it < 20; ++it) {
        Poly a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("substitution implements the Weyl reflections involutively") {
    auto t = VarTable::standard(2);
    Poly A = var(t, "A"), z1 = var(t, "z1"), z2 = var(t, "z2"), e = var(t, "e");
    int i1 = t->require("z1"), i2 = t->require("z2");

    // tau_L: z_L -> -z_L
    Poly p = A + z1 + z2;
    CHECK(p.substitute_var(i2, -z2) == A + z1 - z2);

    // tau_0 (s=e): z1 -> -z1-e applied to (A-e-z1-z2) gives A+z1-z2
    Poly q = A - e - z1 - z2;
    CHECK(q.substitute_var(i1, -z1 - e) == A + z1 - z2);

    // involutivity of tau_0 and tau_i on a random-ish poly
    Poly r = (A + z1) * (z2 - e) + z1 * z1;
    CHECK(r.substitute_var(i1, -z1 - e).substitute_var(i1, -z1 - e) == r);
    std::map<int, Poly> swp{{i1, z2}, {i2, z1}};
    CHECK(r.substitute(swp).substitute(swp) == r);

    // beta at e=0: (A-e)/(A-e/2) -> 1
    int ie = t->require("e");
    Poly num = A - e, den = A - e.scaled(Rational(1, 2));
    CHECK(num.substitute_var(ie, Poly(t)) == den.substitute_var(ie, Poly(t)));
}

TEST_CASE("linfrac cancellation") {
    auto t = VarTable::standard(1);
    Poly A = var(t, "A"), z = var(t, "z1"), e = var(t, "e");
    Poly rz = (A + z) * (A.scaled(Rational(2)) - z - e);
    LinFrac f = LinFrac(rz).div_form(A + z);
    CHECK(f.is_poly());
    CHECK(f.clear_to_poly() == A.scaled(Rational(2)) - z - e);

    LinFrac g = LinFrac(A * A).div_form(A + z);
    CHECK(!g.is_poly());
    LinFrac h = g * LinFrac(A + z);
    CHECK(h.is_poly());

    // 1/(A+z) + 1/(A-z) = 2A/((A+z)(A-z))
    LinFrac one = LinFrac::one(t);
    LinFrac s = one.div_form(A + z) + one.div_form(A - z);
    LinFrac expect = LinFrac(A.scaled(Rational(2))).div_form(A + z).div_form(A - z);
    CHECK(s == expect);
}

TEST_CASE("sparse exact solver") {
    SUBCASE("identity system") {
        std::vector<std::vector<std::pair<int, Rational>>> rows{
            {{0, Rational(1)}}, {{1, Rational(1)}}, {{2, Rational(1)}}};
        std::vector<Rational> rhs{Rational(1), Rational(2), Rational(3)};
        auto res = solve_sparse_linear_exact(3, rows, &rhs);
        CHECK(res.rank == 3);
        CHECK(res.nullity() == 0);
        CHECK(res.particular[0] == Rational(1));
        CHECK(res.particular[1] == Rational(2));
        CHECK(res.particular[2] == Rational(3));
    }
    SUBCASE("x+y=0 homogeneous") {
        std::vector<std::vector<std::pair<int, Rational>>> rows{{{0, Rational(1)}, {1, Rational(1)}}};
        auto res = solve_sparse_linear_exact(2, rows, nullptr);
        CHECK(res.rank == 1);
        CHECK(res.nullspace.size() == 1);
        auto& v = res.nullspace[0];
        CHECK(v[0] + v[1] == Rational(0));
        CHECK(!v[0].is_zero());
    }
    SUBCASE("inconsistent") {
        std::vector<std::vector<std::pair<int, Rational>>> rows{
            {{0, Rational(1)}}, {{0, Rational(1)}}};
        std::vector<Rational> rhs{Rational(1), Rational(2)};
        CHECK_THROWS_AS(solve_sparse_linear_exact(1, rows, &rhs), Inconsistent);
    }
    SUBCASE("row permutation invariance and exactness") {
        std::mt19937 rng(3);
        std::vector<std::vector<std::pair<int, Rational>>> rows;
        for (int i = 0; i < 6; ++i) {
            std::vector<std::pair<int, Rational>> r;
            for (int j = 0; j < 5; ++j)
                if (rng() % 2) r.emplace_back(j, Rational((long)(rng() % 9) - 4));
            rows.push_back(r);
        }
        auto a = solve_sparse_linear_exact(5, rows, nullptr);
        std::shuffle(rows.begin(), rows.end(), rng);
        auto b = solve_sparse_linear_exact(5, rows, nullptr);
        CHECK(a.rank == b.rank);
        CHECK(a.pivot_cols == b.pivot_cols);
        REQUIRE(a.nullspace.size() == b.nullspace.size());
        for (size_t i = 0; i < a.nullspace.size(); ++i)
            CHECK(a.nullspace[i] == b.nullspace[i]);
        // verify rows * x = 0 exactly on the nullspace
        for (auto& v : a.nullspace)
            for (auto& r : rows) {
                Rational acc(0);
                for (auto& [c, q] : r) acc += q * v[c];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("lagrange interpolation") {
    auto t = VarTable::standard(2);
    Poly A = var(t, "A"), z1 = var(t, "z1"), z2 = var(t, "z2");
    int iz1 = t->require("z1");

    SUBCASE("constant nodes reproduce z1^2") {
        std::vector<Poly> nodes{Poly::constant(t, Rational(0)), Poly::constant(t, Rational(1)),
                                Poly::constant(t, Rational(2))};
        std::vector<Poly> values{Poly(t), Poly::constant(t, Rational(1)), Poly::constant(t, Rational(4))};
        Poly p = lagrange_interpolate(nodes, values, iz1, 2);
        CHECK(p == z1 * z1);
    }
    SUBCASE("linear-form nodes") {
        // reconstruct q = (z1 - A)(z1 + A) from nodes A+z2, -A-z2, 2A
        Poly q = z1 * z1 - A * A;
        int izv = iz1;
        std::vector<Poly> nodes{A + z2, -A - z2, A.scaled(Rational(2))};
        std::vector<Poly> values;
        for (auto& n : nodes) values.push_back(q.substitute_var(izv, n));
        Poly p = lagrange_interpolate(nodes, values, izv, 2);
        CHECK(p == q);
    }
    SUBCASE("duplicate node detected") {
        std::vector<Poly> nodes{A, A};
        std::vector<Poly> values{Poly(t), Poly(t)};
        CHECK_THROWS_AS(lagrange_interpolate(nodes, values, iz1, 1), DuplicateNode);
    }
    SUBCASE("inconsistent bound fails") {
        std::vector<Poly> nodes{Poly::constant(t, Rational(0)), Poly::constant(t, Rational(1)),
                                Poly::constant(t, Rational(2))};
        std::vector<Poly> values{Poly(t), Poly::constant(t, Rational(1)), Poly::constant(t, Rational(4))};
        CHECK_THROWS(lagrange_interpolate(nodes, values, iz1, 1));
    }
}
