#include "brauer/linkpat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace brauer {

BoundaryType boundary_from_char(char c) {
    switch (c) {
        case 'p': return BoundaryType::P;
        case 'i': return BoundaryType::I;
        case 'c': return BoundaryType::C;
        case 'o': return BoundaryType::O;
        case 'm': return BoundaryType::M;
    }
    throw WrongType(std::string("unknown boundary type '") + c + "'");
}

std::string LinkPattern::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < L; ++i) {
        if (i) os << ",";
        switch (t[i]) {
            case TGT_B: os << "b"; break;
            case TGT_L: os << "l"; break;
            case TGT_R: os << "r"; break;
            case TGT_DOT: os << "*"; break;
            default: os << t[i];
        }
    }
    os << ")";
    return os.str();
}

int boundary_letter_left(BoundaryType t) {
    switch (t) {
        case BoundaryType::I: return TGT_B;
        case BoundaryType::O: return TGT_L;
        default: throw InvalidGenerator("no left boundary generator for this type");
    }
}

int boundary_letter_right(BoundaryType t) {
    switch (t) {
        case BoundaryType::I: return TGT_B;
        case BoundaryType::O:
        case BoundaryType::M: return TGT_R;
        default: throw InvalidGenerator("no right boundary generator for this type");
    }
}

static std::vector<int> allowed_letters(BoundaryType type) {
    switch (type) {
        case BoundaryType::P:
        case BoundaryType::C: return {TGT_DOT};
        case BoundaryType::I: return {TGT_B};
        case BoundaryType::O: return {TGT_L, TGT_R};
        case BoundaryType::M: return {TGT_R};
    }
    return {};
}

std::vector<LinkPattern> enumerate_patterns(BoundaryType type, int L) {
    std::vector<LinkPattern> out;
    if (L == 0) {
        out.push_back(LinkPattern{0, {}});
        return out;
    }
    std::vector<int> t(L, 0);
    auto letters = allowed_letters(type);
    bool dot_allowed = (type == BoundaryType::P || type == BoundaryType::C) && (L % 2 == 1);
    std::function<void(int)> rec = [&](int used_dot) {
        int s = -1;
        for (int i = 0; i < L; ++i)
            if (t[i] == 0) { s = i; break; }
        if (s < 0) {
            out.push_back(LinkPattern{L, t});
            return;
        }
        for (int lt : letters) {
            if (lt == TGT_DOT && (!dot_allowed || used_dot)) continue;
            t[s] = lt;
            rec(used_dot + (lt == TGT_DOT ? 1 : 0));
            t[s] = 0;
        }
        for (int j = s + 1; j < L; ++j) {
            if (t[j] != 0) continue;
            t[s] = j + 1;
            t[j] = s + 1;
            rec(used_dot);
            t[s] = t[j] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

static long double_factorial(int k) {   // (k)!! with (-1)!! = 1
    long r = 1;
    for (int v = k; v > 1; v -= 2) r *= v;
    return r;
}

static long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long count_patterns_formula(BoundaryType type, int L) {
    if (L == 0) return 1;
    switch (type) {
        case BoundaryType::P:
        case BoundaryType::C:
            return double_factorial(2 * ((L + 1) / 2) - 1);
        case BoundaryType::I:
        case BoundaryType::M: {
            long s = 0;
            for (int j = 0; 2 * j <= L; ++j) s += binom(L, 2 * j) * double_factorial(2 * j - 1);
            return s;
        }
        case BoundaryType::O: {
            long s = 0;
            for (int j = 0; 2 * j <= L; ++j)
                s += (1L << (L - 2 * j)) * binom(L, 2 * j) * double_factorial(2 * j - 1);
            return s;
        }
    }
    return 0;
}

static bool is_site(int v) { return v > 0; }

// join the former partners u, v of a freshly created small link
static void join_targets(std::vector<int>& t, int u, int v) {
    if (is_site(u) && is_site(v)) {
        t[u - 1] = v;
        t[v - 1] = u;
    } else if (is_site(u)) {
        t[u - 1] = v;        // v is a letter: u now reaches the boundary / infinity
    } else if (is_site(v)) {
        t[v - 1] = u;
    }
    // letter-letter arcs close onto the boundary with weight 1
}

std::pair<LinkPattern, int> act_generator(BoundaryType type, const Generator& g, const LinkPattern& pat) {
    const int L = pat.L;
    std::vector<int> t = pat.t;
    int beta = 0;
    switch (g.kind) {
        case Generator::E:
        case Generator::F: {
            int p1 = g.i, p2 = g.i + 1;
            bool wrap = (g.i == L);
            if (wrap) {
                if (type != BoundaryType::P) throw InvalidGenerator("wrap-around generator needs type p");
                p1 = L; p2 = 1;
            } else if (g.i < 1 || g.i > L - 1) {
                throw InvalidGenerator("bulk index out of range");
            }
            int u = t[p1 - 1], v = t[p2 - 1];
            if (g.kind == Generator::E) {
                t[p1 - 1] = p2;
                t[p2 - 1] = p1;
                if (u == p2) beta = 1;
                else join_targets(t, u, v);
            } else {
                if (u != p2) {
                    t[p1 - 1] = v;
                    t[p2 - 1] = u;
                    if (is_site(v)) t[v - 1] = p1;
                    if (is_site(u)) t[u - 1] = p2;
                }
            }
            break;
        }
        case Generator::E0: {
            int letter = boundary_letter_left(type);
            int u = t[0];
            t[0] = letter;
            if (is_site(u)) t[u - 1] = letter;
            break;
        }
        case Generator::EL: {
            int letter = boundary_letter_right(type);
            int u = t[L - 1];
            t[L - 1] = letter;
            if (is_site(u)) t[u - 1] = letter;
            break;
        }
    }
    return {LinkPattern{L, std::move(t)}, beta};
}

LinkPattern rotate_sigma(const LinkPattern& pat) {
    const int L = pat.L;
    std::vector<int> t(L);
    auto shift = [L](int s) { return (s - 2 + L) % L + 1; };
    for (int i = 1; i <= L; ++i) {
        int v = pat.t[i - 1];
        t[shift(i) - 1] = is_site(v) ? shift(v) : v;
    }
    return LinkPattern{L, std::move(t)};
}

PatternStats pattern_stats(const LinkPattern& pat) {
    PatternStats st;
    for (int i = 1; i <= pat.L; ++i) {
        int v = pat.t[i - 1];
        if (v == TGT_DOT) st.fixed_points++;
        else if (!is_site(v)) st.chords++;          // boundary link
        else if (v > i) st.chords++;                // count each site pair once
    }
    st.m_pi = 1L << (st.chords + st.fixed_points);
    return st;
}

LinkPattern periodic_lift(BoundaryType type, const LinkPattern& pat) {
    const int L = pat.L;
    if (type == BoundaryType::P) throw WrongType("periodic_lift: input must be of type i,c,o,m");
    if (type == BoundaryType::I || type == BoundaryType::C) {
        int N = 2 * L;
        std::vector<int> t(N, 0);
        for (int j = 1; j <= L; ++j) {
            int k = pat.t[j - 1];
            if (is_site(k)) {
                t[j - 1] = k;
                t[N - j] = N - k + 1;
            } else {
                // b (and the odd closed unpaired site) pair with their mirror
                t[j - 1] = N - j + 1;
                t[N - j] = j;
            }
        }
        return LinkPattern{N, std::move(t)};
    }
    int N = 4 * L, n = 2 * L;
    std::vector<int> t(N, 0);
    for (int j = 1; j <= L; ++j) {
        int k = pat.t[j - 1];
        if (is_site(k)) {
            t[j - 1] = k;
            t[n + j - 1] = n + k;
            t[N - j] = N - k + 1;
            t[n - j] = n - k + 1;
        } else if (k == TGT_L) {
            t[j - 1] = N - j + 1;
            t[N - j] = j;
            t[n - j] = n + j;
            t[n + j - 1] = n - j + 1;
        } else if (k == TGT_R) {
            t[j - 1] = n - j + 1;
            t[n - j] = j;
            t[N - j] = n + j;
            t[n + j - 1] = N - j + 1;
        } else {
            throw WrongType("periodic_lift: unexpected target letter");
        }
    }
    return LinkPattern{N, std::move(t)};
}

PatternSpace::PatternSpace(BoundaryType type, int L) : type_(type), L_(L) {
    pats_ = enumerate_patterns(type, L);
    for (size_t i = 0; i < pats_.size(); ++i) index_.emplace(pats_[i].t, (int)i);
}

int PatternSpace::index_of(const LinkPattern& p) const {
    auto it = index_.find(p.t);
    if (it == index_.end()) throw std::out_of_range("pattern not in space: " + p.str());
    return it->second;
}

bool PatternSpace::generator_valid(const Generator& g) const {
    switch (g.kind) {
        case Generator::E:
        case Generator::F:
            if (g.i >= 1 && g.i <= L_ - 1) return true;
            return g.i == L_ && type_ == BoundaryType::P;
        case Generator::E0:
            return type_ == BoundaryType::I || type_ == BoundaryType::O;
        case Generator::EL:
            return type_ == BoundaryType::I || type_ == BoundaryType::O || type_ == BoundaryType::M;
    }
    return false;
}

GenResult PatternSpace::act(const Generator& g, int pattern_index) const {
    if (!generator_valid(g)) throw InvalidGenerator("generator not defined for this space");
    auto [q, beta] = act_generator(type_, g, pats_.at(pattern_index));
    return GenResult{index_of(q), beta};
}

int PatternSpace::rotate(int pattern_index) const {
    if (type_ != BoundaryType::P) throw WrongType("sigma requires type p");
    return index_of(rotate_sigma(pats_.at(pattern_index)));
}

} // namespace brauer
