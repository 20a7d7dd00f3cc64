#include "brauer/transfer.hpp"

#include "brauer/serialize.hpp"

#include <functional>

namespace brauer {

namespace {

Poly pvar(const VarTablePtr& t, const std::string& n) { return Poly::variable(t, n); }

// ports of the face lattice; bulk cell ports are S,N,W,E in that order
struct Layout {
    BoundaryType type;
    int L;
    int ncells;               // L (periodic) or 2L (double row)
    int nports;
    int k0_lo = -1, k0_up = -1, kL_lo = -1, kL_up = -1;
    std::vector<int> glue;    // port -> glued port, or -1 for externals
    std::vector<int> external;// port -> external id (T_i: i, B_i: L+i), or -1

    int cell_port(int cell, int dir) const { return 4 * cell + dir; }   // dir: 0=S 1=N 2=W 3=E
};

constexpr int DIR_S = 0, DIR_N = 1, DIR_W = 2, DIR_E = 3;

Layout make_layout(BoundaryType type, int L) {
    Layout lay;
    lay.type = type;
    lay.L = L;
    bool chat = (type != BoundaryType::P);
    lay.ncells = chat ? 2 * L : L;
    lay.nports = 4 * lay.ncells + (chat ? 4 : 0);
    if (chat) {
        lay.k0_lo = 4 * lay.ncells + 0;
        lay.k0_up = 4 * lay.ncells + 1;
        lay.kL_lo = 4 * lay.ncells + 2;
        lay.kL_up = 4 * lay.ncells + 3;
    }
    lay.glue.assign(lay.nports, -1);
    lay.external.assign(lay.nports, -1);
    auto tie = [&](int a, int b) {
        lay.glue[a] = b;
        lay.glue[b] = a;
    };
    // bottom row cells 0..L-1, top row cells L..2L-1 (cell L+i-1 sits over column i)
    for (int i = 1; i <= L; ++i) {
        int b = i - 1;
        lay.external[lay.cell_port(b, DIR_S)] = L + (i - 1);          // B_i
        if (chat) {
            int tp = L + i - 1;
            tie(lay.cell_port(b, DIR_N), lay.cell_port(tp, DIR_S));   // middle edge
            lay.external[lay.cell_port(tp, DIR_N)] = i - 1;           // T_i
        } else {
            lay.external[lay.cell_port(b, DIR_N)] = i - 1;
        }
    }
    // aux line
    for (int i = 1; i <= L - 1; ++i)
        tie(lay.cell_port(i - 1, DIR_E), lay.cell_port(i, DIR_W));
    if (chat) {
        for (int i = 1; i <= L - 1; ++i)
            tie(lay.cell_port(L + i, DIR_W), lay.cell_port(L + i - 1, DIR_E));
        tie(lay.cell_port(0, DIR_W), lay.k0_lo);
        tie(lay.cell_port(L - 1, DIR_E), lay.kL_lo);
        tie(lay.cell_port(2 * L - 1, DIR_E), lay.kL_up);
        tie(lay.cell_port(L, DIR_W), lay.k0_up);
    } else {
        tie(lay.cell_port(L - 1, DIR_E), lay.cell_port(0, DIR_W));
    }
    return lay;
}

// a fully decided configuration: internal matching between ports, letter ends
struct Diagram {
    std::vector<int> match;   // port -> port, or -1
    std::vector<int> letter;  // port -> letter code (TGT_*) or 0
    Poly weight;
};

// the three face pictures; mirrored swaps the two arc pictures
void face_options(std::vector<std::array<std::pair<int, int>, 2>>& pairs) {
    pairs = {
        {{{DIR_S, DIR_E}, {DIR_W, DIR_N}}},   // arcs towards the right
        {{{DIR_S, DIR_W}, {DIR_E, DIR_N}}},   // arcs towards the left
        {{{DIR_S, DIR_N}, {DIR_W, DIR_E}}},   // crossing
    };
}

struct Sweep {
    const Layout& lay;
    VarTablePtr t;
    Poly A;
    std::vector<Poly> zargs;
    Poly w;
    bool top_mirror;

    std::vector<Diagram> run() const {
        std::vector<std::array<std::pair<int, int>, 2>> pairs;
        face_options(pairs);
        const int L = lay.L;
        bool chat = (lay.type != BoundaryType::P);
        std::vector<Diagram> out;
        Diagram cur;
        cur.match.assign(lay.nports, -1);
        cur.letter.assign(lay.nports, 0);
        cur.weight = Poly::constant(t, Rational(1));

        std::function<void(int)> rec = [&](int cell) {
            if (cell == lay.ncells) {
                // boundary corners
                if (!chat) {
                    out.push_back(cur);
                    return;
                }
                auto corner = [&](int lo, int up, bool nontrivial, Poly arc_w, Poly line_w, int lett,
                                  std::function<void()> cont) {
                    Diagram save = cur;
                    cur.match[lo] = up;
                    cur.match[up] = lo;
                    cur.weight = save.weight * arc_w;
                    cont();
                    cur = save;
                    if (nontrivial) {
                        cur.letter[lo] = lett;
                        cur.letter[up] = lett;
                        cur.weight = save.weight * line_w;
                        cont();
                        cur = save;
                    }
                };
                Poly one = Poly::constant(t, Rational(1));
                bool k0 = (lay.type == BoundaryType::I || lay.type == BoundaryType::O);
                bool kL = (lay.type != BoundaryType::C);
                Poly twow = w.scaled(Rational(2));
                // K0(w): arc (-A+2w), lines 4(A-w); KL(w): arc (A-2w), lines 4w
                Poly k0_arc = k0 ? (twow - A) : one;
                Poly k0_line = (A - w).scaled(Rational(4));
                Poly kL_arc = kL ? (A - twow) : one;
                Poly kL_line = w.scaled(Rational(4));
                int lett0 = k0 ? boundary_letter_left(lay.type) : 0;
                int lettL = kL ? boundary_letter_right(lay.type) : 0;
                corner(lay.k0_lo, lay.k0_up, k0, k0_arc, k0_line, lett0, [&]() {
                    corner(lay.kL_lo, lay.kL_up, kL, kL_arc, kL_line, lettL, [&]() {
                        out.push_back(cur);
                    });
                });
                return;
            }
            bool top = chat && cell >= L;
            int site = top ? (cell - L + 1) : (cell + 1);
            Poly u = top ? (zargs[site - 1] + w) : (w - zargs[site - 1]);
            Poly wts[3] = {(A.scaled(Rational(2))) * (A - u), A.scaled(Rational(2)) * u, (A - u) * u};
            for (int choice = 0; choice < 3; ++choice) {
                int c = choice;
                if (top && top_mirror && choice < 2) c = 1 - choice;
                Diagram save = cur;
                for (auto& [d1, d2] : pairs[c]) {
                    int p1 = lay.cell_port(cell, d1), p2 = lay.cell_port(cell, d2);
                    cur.match[p1] = p2;
                    cur.match[p2] = p1;
                }
                cur.weight = save.weight * wts[choice];
                rec(cell + 1);
                cur = save;
            }
        };
        rec(0);
        return out;
    }
};

// reduce a configuration to its pairing on the 2L external ports (+letters)
std::vector<int> external_pairing(const Layout& lay, const Diagram& d) {
    const int next = 2 * lay.L;
    std::vector<int> ext2port(next, -1);
    for (int p = 0; p < lay.nports; ++p)
        if (lay.external[p] >= 0) ext2port[lay.external[p]] = p;
    std::vector<int> out(next, -9);
    for (int x = 0; x < next; ++x) {
        int p = ext2port[x];
        // walk: internal match, then glue, alternating
        int cursteps = 0;
        while (true) {
            if (d.letter[p]) { out[x] = d.letter[p]; break; }
            int q = d.match[p];
            if (q < 0) throw std::logic_error("transfer sweep: dangling port");
            if (d.letter[q]) { out[x] = d.letter[q]; break; }
            if (lay.external[q] >= 0) { out[x] = lay.external[q]; break; }
            p = lay.glue[q];
            if (p < 0) throw std::logic_error("transfer sweep: open gluing");
            if (lay.external[p] >= 0) { out[x] = lay.external[p]; break; }
            if (++cursteps > lay.nports) throw std::logic_error("transfer sweep: runaway walk");
        }
    }
    return out;
}

// paste a diagram (pairing on externals, letters negative) onto an input pattern
LinkPattern apply_diagram(const std::vector<int>& diag, int L, const LinkPattern& rho) {
    std::vector<int> t(L, 0);
    for (int i = 0; i < L; ++i) {
        int cur = diag[i];   // start from T_i
        while (true) {
            if (cur < 0) { t[i] = cur; break; }               // letter
            if (cur < L) { t[i] = cur + 1; break; }           // another T
            int b = cur - L;                                  // a B port: pass through rho
            int v = rho.t[b];
            if (v < 0) { t[i] = v; break; }
            cur = diag[L + (v - 1)];
        }
    }
    return LinkPattern{L, std::move(t)};
}

LoopOperator build_core(BoundaryType type, int L, const PatternSpace& sp, const VarTablePtr& t,
                        const std::vector<Poly>& zargs, const Poly& warg, bool top_mirror) {
    Layout lay = make_layout(type, L);
    Poly A = pvar(t, "A");
    Sweep sweep{lay, t, A, zargs, warg, top_mirror};
    auto diagrams = sweep.run();

    // merge configurations with equal external pairings
    std::map<std::vector<int>, Poly> merged;
    for (auto& d : diagrams) {
        auto key = external_pairing(lay, d);
        auto it = merged.find(key);
        if (it == merged.end()) merged.emplace(std::move(key), d.weight);
        else it->second += d.weight;
    }

    // common denominator
    std::vector<Poly> dens;
    bool chat = (type != BoundaryType::P);
    for (int i = 1; i <= L; ++i) {
        Poly ub = warg - zargs[i - 1];
        dens.push_back(A + ub);
        dens.push_back(A.scaled(Rational(2)) - ub);
        if (chat) {
            Poly ut = zargs[i - 1] + warg;
            dens.push_back(A + ut);
            dens.push_back(A.scaled(Rational(2)) - ut);
        }
    }
    if (chat) {
        if (type == BoundaryType::I || type == BoundaryType::O)
            dens.push_back(A.scaled(Rational(3)) - warg.scaled(Rational(2)));   // k(A-w)
        if (type != BoundaryType::C)
            dens.push_back(A + warg.scaled(Rational(2)));                       // k(w)
    }

    LoopOperator T(&sp, t);
    for (auto& [diag, wt] : merged) {
        if (wt.is_zero()) continue;
        LinFrac val = LinFrac(wt).div_forms(dens);
        for (int col = 0; col < sp.size(); ++col) {
            LinkPattern out = apply_diagram(diag, L, sp.pattern(col));
            T.add(sp.index_of(out), col, val);
        }
    }
    return T;
}

} // namespace

TransferMatrix build_transfer(BoundaryType type, int L) {
    auto t = VarTable::standard(L, {"w"});
    auto sp = std::make_shared<const PatternSpace>(type, L);
    TransferMatrix T(type, L, t, sp);
    std::vector<Poly> zargs;
    for (int i = 1; i <= L; ++i) zargs.push_back(pvar(t, "z" + std::to_string(i)));
    T.op = build_core(type, L, *sp, t, zargs, pvar(t, "w"), true);
    return T;
}

LoopOperator build_transfer_args(BoundaryType type, int L, const PatternSpace& sp,
                                 const VarTablePtr& t, const std::vector<Poly>& zargs,
                                 const Poly& wval) {
    return build_core(type, L, sp, t, zargs, wval, true);
}

VerifyReport verify_transfer(const TransferMatrix& T, const QkzSolution& sol) {
    VerifyReport rep;
    auto t = T.table;
    const PatternSpace& sp = *T.space;
    int L = T.L;
    // stochasticity: columns sum to 1
    for (int col = 0; col < sp.size(); ++col) {
        LinFrac s = LinFrac::zero(t);
        for (int row = 0; row < sp.size(); ++row) s += T.op.entry(row, col);
        rep.check(s == LinFrac::one(t), "column " + std::to_string(col) + " not stochastic");
    }
    // eigenvector: T psi = psi with symbolic w, components at e=0
    int ie = sol.table->require("e");
    std::vector<LinFrac> psi;
    for (auto& c : sol.comps) psi.emplace_back(change_table(c.substitute_var(ie, Poly(sol.table)), t));
    auto img = T.op.apply(psi);
    for (int p = 0; p < sp.size(); ++p)
        rep.check(img[p] == psi[p], "T psi != psi at component " + std::to_string(p));

    // interlacing on a numeric w slice
    std::vector<Poly> zs;
    for (int k = 1; k <= L; ++k) zs.push_back(pvar(t, "z" + std::to_string(k)));
    Poly wv = Poly::constant(t, Rational(5, 7));
    LoopOperator Tw = build_transfer_args(T.type, L, sp, t, zs, wv);
    for (int i = 1; i <= L - 1; ++i) {
        std::vector<Poly> zsw = zs;
        std::swap(zsw[i - 1], zsw[i]);
        LoopOperator Tswap = build_transfer_args(T.type, L, sp, t, zsw, wv);
        LoopOperator R = build_R(sp, i, zs[i - 1] - zs[i]);
        rep.check(R.compose(Tw) == Tswap.compose(R), "interlacing at i=" + std::to_string(i));
    }

    // bulk recurrence of the transfer matrix on a numeric w slice
    for (int i = 1; i <= L - 1 && L >= 3; ++i) {
        std::vector<Poly> zrec = zs;
        zrec[i] = pvar(t, "A") + zs[i - 1];
        LoopOperator Trec = build_transfer_args(T.type, L, sp, t, zrec, wv);
        PatternSpace small(T.type, L - 2);
        std::vector<Poly> zsmall;
        for (int k = 1; k <= L; ++k)
            if (k != i && k != i + 1) zsmall.push_back(zs[k - 1]);
        LoopOperator Tsmall = build_transfer_args(T.type, L - 2, small, t, zsmall, wv);
        for (int c = 0; c < small.size(); ++c) {
            int big = sp.index_of(phi_insert_bulk(small.pattern(c), i));
            for (int r = 0; r < sp.size(); ++r) {
                LinFrac lhs = Trec.entry(r, big);
                // the image row must itself be an embedded pattern
                LinFrac rhs = LinFrac::zero(t);
                for (int rs = 0; rs < small.size(); ++rs)
                    if (sp.index_of(phi_insert_bulk(small.pattern(rs), i)) == r)
                        rhs = Tsmall.entry(rs, c);
                rep.check(lhs == rhs, "transfer recurrence i=" + std::to_string(i) + " entry (" +
                                          std::to_string(r) + "," + std::to_string(big) + ")");
            }
        }
        break;   // one slot suffices for the slice check
    }
    return rep;
}

bool commuting_check(BoundaryType type, int L, const Rational& w1, const Rational& w2,
                     const std::vector<Rational>& zs, const Rational& A) {
    auto t = VarTable::standard(L, {"w"});
    PatternSpace sp(type, L);
    std::vector<Poly> zargs;
    for (auto& z : zs) zargs.push_back(Poly::constant(t, z));
    LoopOperator T1 = build_core(type, L, sp, t, zargs, Poly::constant(t, w1), true);
    LoopOperator T2 = build_core(type, L, sp, t, zargs, Poly::constant(t, w2), true);
    int iA = t->require("A");
    T1 = T1.substitute_var(iA, Poly::constant(t, A));
    T2 = T2.substitute_var(iA, Poly::constant(t, A));
    return T1.compose(T2) == T2.compose(T1);
}

} // namespace brauer
