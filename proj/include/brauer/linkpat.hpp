// Link patterns for the five boundary types, their enumeration and the
// diagrammatic generator actions.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

enum class BoundaryType : char { P = 'p', I = 'i', C = 'c', O = 'o', M = 'm' };

BoundaryType boundary_from_char(char c);
inline char to_char(BoundaryType t) { return (char)t; }

// target codes; integer order gives the canonical pattern order b < l < r < * < 1 < 2 < ...
constexpr int TGT_B = -4;     // generic boundary (identified)
constexpr int TGT_L = -3;     // left boundary (open)
constexpr int TGT_R = -2;     // right boundary (open, mixed)
constexpr int TGT_DOT = -1;   // unpaired site (odd periodic/closed)

struct InvalidGenerator : std::runtime_error {
    explicit InvalidGenerator(const std::string& w) : std::runtime_error("InvalidGenerator: " + w) {}
};
struct WrongType : std::runtime_error {
    explicit WrongType(const std::string& w) : std::runtime_error("WrongType: " + w) {}
};

struct LinkPattern {
    int L = 0;
    std::vector<int> t;      // t[i-1] = target of site i (site number or code)

    int target(int site) const { return t.at(site - 1); }
    bool operator==(const LinkPattern& o) const { return t == o.t; }
    bool operator<(const LinkPattern& o) const { return t < o.t; }
    std::string str() const;  // e.g. (3,b,1,b)
};

struct PatternStats {
    int chords = 0;        // site-site pairs plus boundary links
    int fixed_points = 0;  // unpaired sites
    long m_pi = 0;         // 2^(chords + fixed_points)
};

struct GenResult {
    int index = -1;        // pattern index in the space
    int beta_exponent = 0; // 1 when a bulk closed loop formed
};

// generators: E(i)/F(i) bulk 1<=i<=L-1; E0/EL boundary; for type p also i=L (wrap pair (L,1))
struct Generator {
    enum Kind { E, F, E0, EL } kind;
    int i = 0;             // bulk index; ignored for E0/EL
    static Generator e(int i) { return {E, i}; }
    static Generator f(int i) { return {F, i}; }
    static Generator e0() { return {E0, 0}; }
    static Generator eL() { return {EL, 0}; }
};

class PatternSpace {
public:
    PatternSpace(BoundaryType type, int L);

    BoundaryType type() const { return type_; }
    int L() const { return L_; }
    int size() const { return (int)pats_.size(); }
    const LinkPattern& pattern(int idx) const { return pats_.at(idx); }
    const std::vector<LinkPattern>& patterns() const { return pats_; }
    int index_of(const LinkPattern& p) const;

    bool generator_valid(const Generator& g) const;
    GenResult act(const Generator& g, int pattern_index) const;
    int rotate(int pattern_index) const;   // sigma, type p only

private:
    BoundaryType type_;
    int L_;
    std::vector<LinkPattern> pats_;
    std::map<std::vector<int>, int> index_;
};

std::vector<LinkPattern> enumerate_patterns(BoundaryType type, int L);
long count_patterns_formula(BoundaryType type, int L);

std::pair<LinkPattern, int> act_generator(BoundaryType type, const Generator& g, const LinkPattern& pat);
LinkPattern rotate_sigma(const LinkPattern& pat);              // type p
PatternStats pattern_stats(const LinkPattern& pat);
LinkPattern periodic_lift(BoundaryType type, const LinkPattern& pat);

// sector letter conventions
int boundary_letter_left(BoundaryType t);    // TGT_B or TGT_L
int boundary_letter_right(BoundaryType t);   // TGT_B or TGT_R

} // namespace brauer
