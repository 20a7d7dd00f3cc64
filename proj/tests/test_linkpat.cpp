#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/linkpat.hpp"

using namespace brauer;

TEST_CASE("pattern counts match the closed formulas") {
    for (char tc : {'p', 'i', 'c', 'o', 'm'}) {
        auto ty = boundary_from_char(tc);
        int Lmax = (ty == BoundaryType::O) ? 6 : 8;
        for (int L = 0; L <= Lmax; ++L) {
            auto pats = enumerate_patterns(ty, L);
            CAPTURE(tc);
            CAPTURE(L);
            CHECK((long)pats.size() == count_patterns_formula(ty, L));
            // duplicate-free by construction of the sort+map
            PatternSpace sp(ty, L);
            CHECK(sp.size() == (int)pats.size());
        }
    }
    CHECK(enumerate_patterns(BoundaryType::I, 3).size() == 4);
    CHECK(enumerate_patterns(BoundaryType::O, 2).size() == 5);
    CHECK(enumerate_patterns(BoundaryType::C, 3).size() == 3);
}

TEST_CASE("closed L=3 patterns are 21*, *32, 3*1") {
    auto pats = enumerate_patterns(BoundaryType::C, 3);
    std::vector<std::string> got;
    for (auto& p : pats) got.push_back(p.str());
    std::vector<std::string> want{"(*,3,2)", "(2,1,*)", "(3,*,1)"};
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("generator actions") {
    PatternSpace sp(BoundaryType::I, 4);

    SUBCASE("e_i on a small link gives beta") {
        LinkPattern p{4, {2, 1, 4, 3}};
        auto [q, beta] = act_generator(BoundaryType::I, Generator::e(1), p);
        CHECK(q == p);
        CHECK(beta == 1);
    }
    SUBCASE("f_i is an involution with no weight") {
        for (auto& p : sp.patterns()) {
            for (int i = 1; i <= 3; ++i) {
                auto [q, b1] = act_generator(BoundaryType::I, Generator::f(i), p);
                auto [r, b2] = act_generator(BoundaryType::I, Generator::f(i), q);
                CHECK(b1 == 0);
                CHECK(b2 == 0);
                CHECK(r == p);
            }
        }
    }
    SUBCASE("e_L on identified (3,4,1,2) gives (3,b,1,b)") {
        LinkPattern p{4, {3, 4, 1, 2}};
        auto [q, beta] = act_generator(BoundaryType::I, Generator::eL(), p);
        CHECK(beta == 0);
        CHECK(q == LinkPattern{4, {3, TGT_B, 1, TGT_B}});
    }
    SUBCASE("results stay in the space") {
        for (int idx = 0; idx < sp.size(); ++idx) {
            for (int i = 1; i <= 3; ++i) {
                CHECK(sp.act(Generator::e(i), idx).index >= 0);
                CHECK(sp.act(Generator::f(i), idx).index >= 0);
            }
            CHECK(sp.act(Generator::e0(), idx).index >= 0);
            CHECK(sp.act(Generator::eL(), idx).index >= 0);
        }
    }
    SUBCASE("open and mixed stay in space too") {
        for (char tc : {'o', 'm'}) {
            PatternSpace so(boundary_from_char(tc), 3);
            for (int idx = 0; idx < so.size(); ++idx)
                for (int i = 1; i <= 2; ++i) {
                    CHECK(so.act(Generator::e(i), idx).index >= 0);
                    CHECK(so.act(Generator::f(i), idx).index >= 0);
                }
        }
    }
    SUBCASE("invalid generators refused") {
        CHECK_THROWS_AS(sp.act(Generator::e(4), 0), InvalidGenerator);
        PatternSpace sc(BoundaryType::C, 3);
        CHECK_THROWS_AS(sc.act(Generator::e0(), 0), InvalidGenerator);
        PatternSpace sm(BoundaryType::M, 2);
        CHECK_THROWS_AS(sm.act(Generator::e0(), 0), InvalidGenerator);
    }
}

TEST_CASE("sigma rotation") {
    LinkPattern p{4, {2, 1, 4, 3}};
    LinkPattern q = rotate_sigma(p);
    CHECK(q == LinkPattern{4, {4, 3, 2, 1}});
    LinkPattern r = p;
    for (int k = 0; k < 4; ++k) r = rotate_sigma(r);
    CHECK(r == p);
    // chord count preserved, also with the unpaired site
    PatternSpace sp(BoundaryType::P, 5);
    for (auto& pat : sp.patterns()) {
        auto s = rotate_sigma(pat);
        CHECK(pattern_stats(s).chords == pattern_stats(pat).chords);
        CHECK(sp.index_of(s) >= 0);
    }
    CHECK_THROWS_AS(PatternSpace(BoundaryType::I, 2).rotate(0), WrongType);
}

TEST_CASE("pattern stats and m_pi") {
    CHECK(pattern_stats(LinkPattern{3, {3, TGT_DOT, 1}}).chords == 1);
    CHECK(pattern_stats(LinkPattern{3, {3, TGT_DOT, 1}}).fixed_points == 1);
    CHECK(pattern_stats(LinkPattern{3, {3, TGT_DOT, 1}}).m_pi == 4);
    CHECK(pattern_stats(LinkPattern{2, {TGT_B, TGT_B}}).m_pi == 4);
    CHECK(pattern_stats(LinkPattern{2, {2, 1}}).m_pi == 2);
}

TEST_CASE("periodic lift") {
    SUBCASE("identified examples") {
        LinkPattern a{4, {3, TGT_B, 1, TGT_B}};
        LinkPattern la = periodic_lift(BoundaryType::I, a);
        CHECK(la == LinkPattern{8, {3, 7, 1, 5, 4, 8, 2, 6}});
        LinkPattern b{4, {3, 4, 1, 2}};
        LinkPattern lb = periodic_lift(BoundaryType::I, b);
        CHECK(lb == LinkPattern{8, {3, 4, 1, 2, 7, 8, 5, 6}});
    }
    SUBCASE("open lr and mixed rr examples") {
        LinkPattern lr{2, {TGT_L, TGT_R}};
        CHECK(periodic_lift(BoundaryType::O, lr) == LinkPattern{8, {8, 3, 2, 5, 4, 7, 6, 1}});
        LinkPattern rr{2, {TGT_R, TGT_R}};
        CHECK(periodic_lift(BoundaryType::M, rr) == LinkPattern{8, {4, 3, 2, 1, 8, 7, 6, 5}});
    }
    SUBCASE("lift symmetries and injectivity") {
        for (char tc : {'i', 'c', 'o', 'm'}) {
            auto ty = boundary_from_char(tc);
            for (int L = 1; L <= 4; ++L) {
                auto pats = enumerate_patterns(ty, L);
                std::vector<std::vector<int>> seen;
                for (auto& p : pats) {
                    auto q = periodic_lift(ty, p);
                    int N = q.L;
                    // involutive and symmetric: q(N-j+1) = N - q(j) + 1
                    for (int j = 1; j <= N; ++j) {
                        CHECK(q.target(q.target(j)) == j);
                        CHECK(q.target(N - j + 1) == N - q.target(j) + 1);
                    }
                    if (tc == 'o' || tc == 'm') {
                        int n = N / 2;
                        auto sh = [&](int x) { return (x + n - 1) % N + 1; };
                        for (int j = 1; j <= N; ++j)
                            CHECK(q.target(sh(j)) == sh(q.target(j)));
                    }
                    seen.push_back(q.t);
                }
                std::sort(seen.begin(), seen.end());
                CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            }
        }
    }
}
