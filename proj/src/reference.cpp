#include "brauer/reference.hpp"

#include "brauer/serialize.hpp"

namespace brauer::reference {

namespace {

struct Entry {
    char type;
    int L;
    const char* pattern;
    const char* expr;
};

const Entry kTable[] = {
    {'i', 2, "(b,b)",
     "4 (2A-s+z2-z1) (A+z1-z2)"},
    {'i', 2, "(2,1)",
     "2 (A-s-2 z1) (A+2 z2)"},
    {'i', 3, "(2,1,b)",
     "4 (A-s-2 z1) (A+z2-z3) (A+z2+z3) (7 A^3-9 A^2 s+3 A s^2-3 A s z1+2 s^2 z1-3 A z1^2+2 s z1^2-4 A^"
     "2 z2+3 A s z2+2 s z1 z2+2 z1^2 z2-A z3^2-2 z2 z3^2)"},
    {'i', 3, "(b,b,b)",
     "8 (2 A-s+z3-z2) (2 A-s+z3-z1) (2 A-s+z2-z1) (A+z2-z3) (A+z1-z3) (A+z1-z2)"},
    {'i', 3, "(3,b,1)",
     "4 (A-s-z1-z2) (A-s-2 z1) (A+2 z3) (A+z2-z3) (A+z2+z3) (A+z1-z2)"},
    {'i', 3, "(b,3,2)",
     "4 (A-s-z1-z2) (A+2 z3) (A+z1-z2) (7 A^3-7 A^2 s+2 A s^2-A s z1+s^2 z1-A z1^2+s z1^2+4 A^2 z2-3 A"
     " s z2+s^2 z2+2 s z1 z2+2 z1^2 z2-3 A z3^2+s z3^2-2 z2 z3^2)"},
    {'c', 3, "(2,1,*)",
     "4 (A+z2-z3) (A+z2+z3) (3 A^2-3 A s+s^2+s z1+z1^2-2 A z2+s z2-z3^2)"},
    {'c', 3, "(*,3,2)",
     "4 (A-s-z1-z2) (A+z1-z2) (3 A^2-2 A s-s z1-z1^2+2 A z2-s z2+z3^2)"},
    {'c', 3, "(3,*,1)",
     "4 (A-s-z1-z2) (A+z2-z3) (A+z2+z3) (A+z1-z2)"},
    {'c', 4, "(3,4,1,2)",
     "4 (A+z1-z2) (A+z2-z3) (A+z3-z4) (A+z3+z4) (A-s-z1-z2) (5 A^3-6 A^2 s+3 A^2 z2-3 A^2 z3 +2 A s^2-"
     "A s z1-3 A s z2+2 A s z3-A z1^2-2 A z2 z3-A z4^2+s^2 z1+s^2 z2+s z1^2+s z1 z2+s z1 z3+s z2 z3 +z"
     "1^2 z2+z1^2 z3-z2 z4^2-z3 z4^2)"},
    {'c', 4, "(2,1,4,3)",
     "4 (A+z2-z3) (23 A^7-59 s A^6-7 z2 A^6+7 z3 A^6+60 s^2 A^5-10 z1^2 A^5-11 z2^2 A^5-11 z3^2 A^5-10"
     " z4^2 A^5 -10 s z1 A^5+9 s z2 A^5-19 s z3 A^5+2 z2 z3 A^5-28 s^3 A^4+3 z2^3 A^4-3 z3^3 A^4+28 s "
     "z1^2 A^4+23 s z2^2 A^4+19 s z3^2 A^4 +z2 z3^2 A^4+14 s z4^2 A^4-10 z2 z4^2 A^4-18 z3 z4^2 A^4+28"
     " s^2 z1 A^4+4 s^2 z2 A^4+18 z1^2 z2 A^4+18 s z1 z2 A^4+24 s^2 z3 A^4 +10 z1^2 z3 A^4-z2^2 z3 A^4"
     "+10 s z1 z3 A^4+5 s^4 A^3+3 z1^4 A^3+3 z4^4 A^3+6 s z1^3 A^3-5 s z2^3 A^3+3 s z3^3 A^3-4 z2 z3^3"
     " A^3 -20 s^2 z1^2 A^3-18 s^2 z2^2 A^3+4 z1^2 z2^2 A^3+4 s z1 z2^2 A^3-11 s^2 z3^2 A^3+9 z1^2 z3^"
     "2 A^3+3 z2^2 z3^2 A^3+9 s z1 z3^2 A^3-2 s z2 z3^2 A^3 -9 s^2 z4^2 A^3-11 z1^2 z4^2 A^3+9 z2^2 z4"
     "^2 A^3+4 z3^2 z4^2 A^3-11 s z1 z4^2 A^3+21 s z2 z4^2 A^3+30 s z3 z4^2 A^3+16 z2 z3 z4^2 A^3 -23 "
     "s^3 z1 A^3-9 s^3 z2 A^3-18 s z1^2 z2 A^3-18 s^2 z1 z2 A^3-14 s^3 z3 A^3-4 z2^3 z3 A^3-4 s z1^2 z"
     "3 A^3-s z2^2 z3 A^3 -4 s^2 z1 z3 A^3+16 z1^2 z2 z3 A^3+16 s z1 z2 z3 A^3-5 s z1^4 A^2-3 s z4^4 A"
     "^2+z2 z4^4 A^2+3 z3 z4^4 A^2-10 s^2 z1^3 A^2+2 s^2 z2^3 A^2 -4 z1^2 z2^3 A^2-4 s z1 z2^3 A^2-s^2"
     " z3^3 A^2-z1^2 z3^3 A^2+z2^2 z3^3 A^2-s z1 z3^3 A^2+5 s z2 z3^3 A^2+s^3 z1^2 A^2+5 s^3 z2^2 A^2 "
     "-11 s z1^2 z2^2 A^2-11 s^2 z1 z2^2 A^2+2 s^3 z3^2 A^2-z2^3 z3^2 A^2-11 s z1^2 z3^2 A^2-3 s z2^2 "
     "z3^2 A^2-11 s^2 z1 z3^2 A^2+2 s^2 z2 z3^2 A^2 +z1^2 z2 z3^2 A^2+s z1 z2 z3^2 A^2+4 s^3 z4^2 A^2+"
     "z2^3 z4^2 A^2+4 z3^3 z4^2 A^2+14 s z1^2 z4^2 A^2-10 s z2^2 z4^2 A^2-3 s z3^2 z4^2 A^2 +4 z2 z3^2"
     " z4^2 A^2+14 s^2 z1 z4^2 A^2-15 s^2 z2 z4^2 A^2+z1^2 z2 z4^2 A^2+s z1 z2 z4^2 A^2-19 s^2 z3 z4^2"
     " A^2-z1^2 z3 z4^2 A^2-z2^2 z3 z4^2 A^2 -s z1 z3 z4^2 A^2-19 s z2 z3 z4^2 A^2+6 s^4 z1 A^2+3 s^4 "
     "z2 A^2-3 z1^4 z2 A^2-6 s z1^3 z2 A^2-3 s^2 z1^2 z2 A^2+3 s^4 z3 A^2-z1^4 z3 A^2 -2 s z1^3 z3 A^2"
     "+4 s z2^3 z3 A^2-7 s^2 z1^2 z3 A^2+s^2 z2^2 z3 A^2-4 z1^2 z2^2 z3 A^2-4 s z1 z2^2 z3 A^2-6 s^3 z"
     "1 z3 A^2-2 s^3 z2 z3 A^2 -22 s z1^2 z2 z3 A^2-22 s^2 z1 z2 z3 A^2+2 s^2 z1^4 A+s^2 z4^4 A+z1^2 z"
     "4^4 A-2 z2^2 z4^4 A-z3^2 z4^4 A+s z1 z4^4 A-2 s z2 z4^4 A -3 s z3 z4^4 A-2 z2 z3 z4^4 A+4 s^3 z1"
     "^3 A+3 s z1^2 z2^3 A+3 s^2 z1 z2^3 A+2 z2^3 z3^3 A+s z2^2 z3^3 A-2 s^2 z2 z3^3 A-2 z1^2 z2 z3^3 "
     "A -2 s z1 z2 z3^3 A+2 s^4 z1^2 A-z1^4 z2^2 A-2 s z1^3 z2^2 A+5 s^2 z1^2 z2^2 A+6 s^3 z1 z2^2 A-2"
     " z1^4 z3^2 A-4 s z1^3 z3^2 A+2 s z2^3 z3^2 A +s^2 z1^2 z3^2 A+2 s^2 z2^2 z3^2 A+z1^2 z2^2 z3^2 A"
     "+s z1 z2^2 z3^2 A+3 s^3 z1 z3^2 A-s^3 z2 z3^2 A-2 s z1^2 z2 z3^2 A-2 s^2 z1 z2 z3^2 A-s^4 z4^2 A"
     " +z1^4 z4^2 A+2 s z1^3 z4^2 A-s z2^3 z4^2 A-3 s z3^3 z4^2 A-4 s^2 z1^2 z4^2 A+4 s^2 z2^2 z4^2 A+"
     "z1^2 z2^2 z4^2 A+s z1 z2^2 z4^2 A+s^2 z3^2 z4^2 A +z1^2 z3^2 z4^2 A+z2^2 z3^2 z4^2 A+s z1 z3^2 z"
     "4^2 A-2 s z2 z3^2 z4^2 A-5 s^3 z1 z4^2 A+5 s^3 z2 z4^2 A+s z1^2 z2 z4^2 A+s^2 z1 z2 z4^2 A +6 s^"
     "3 z3 z4^2 A-2 z2^3 z3 z4^2 A+3 s z1^2 z3 z4^2 A+3 s^2 z1 z3 z4^2 A+9 s^2 z2 z3 z4^2 A+6 z1^2 z2 "
     "z3 z4^2 A+6 s z1 z2 z3 z4^2 A+s z1^4 z2 A +2 s^2 z1^3 z2 A+4 s^3 z1^2 z2 A+3 s^4 z1 z2 A-s z1^4 "
     "z3 A-2 s^2 z1^3 z3 A-s^2 z2^3 z3 A+2 s^3 z1^2 z3 A+3 s z1^2 z2^2 z3 A+3 s^2 z1 z2^2 z3 A +3 s^4 "
     "z1 z3 A+s^4 z2 z3 A-2 z1^4 z2 z3 A-4 s z1^3 z2 z3 A+6 s^2 z1^2 z2 z3 A+8 s^3 z1 z2 z3 A-z3^3 z4^"
     "4+s z2^2 z4^4-z2 z3^2 z4^4 +s^2 z2 z4^4+z1^2 z2 z4^4+s z1 z2 z4^4+s^2 z3 z4^4+z1^2 z3 z4^4+s z1 "
     "z3 z4^4+s z2 z3 z4^4+z1^4 z2^3+2 s z1^3 z2^3+s^2 z1^2 z2^3-s z2^3 z3^3 -s^2 z2^2 z3^3-z1^2 z2^2 "
     "z3^3-s z1 z2^2 z3^3+2 s z1^4 z2^2+4 s^2 z1^3 z2^2+2 s^3 z1^2 z2^2+s z1^4 z3^2+2 s^2 z1^3 z3^2-s^"
     "2 z2^3 z3^2-z1^2 z2^3 z3^2-s z1 z2^3 z3^2 +s^3 z1^2 z3^2-s^3 z2^2 z3^2-2 s z1^2 z2^2 z3^2-2 s^2 "
     "z1 z2^2 z3^2-s z1^4 z4^2-2 s^2 z1^3 z4^2-z1^2 z2^3 z4^2-s z1 z2^3 z4^2+s^2 z3^3 z4^2+z1^2 z3^3 z"
     "4^2+z2^2 z3^3 z4^2 +s z1 z3^3 z4^2+s z2 z3^3 z4^2-s^3 z1^2 z4^2-s^3 z2^2 z4^2-2 s z1^2 z2^2 z4^2"
     "-2 s^2 z1 z2^2 z4^2+z2^3 z3^2 z4^2+s z2^2 z3^2 z4^2+s^2 z2 z3^2 z4^2+z1^2 z2 z3^2 z4^2 +s z1 z2 "
     "z3^2 z4^2-s^4 z2 z4^2-z1^4 z2 z4^2-2 s z1^3 z2 z4^2-3 s^2 z1^2 z2 z4^2-2 s^3 z1 z2 z4^2-s^4 z3 z"
     "4^2-z1^4 z3 z4^2-2 s z1^3 z3 z4^2+s z2^3 z3 z4^2 -3 s^2 z1^2 z3 z4^2-z1^2 z2^2 z3 z4^2-s z1 z2^2"
     " z3 z4^2-2 s^3 z1 z3 z4^2-2 s^3 z2 z3 z4^2-4 s z1^2 z2 z3 z4^2-4 s^2 z1 z2 z3 z4^2+s^2 z1^4 z2+2"
     " s^3 z1^3 z2 +s^4 z1^2 z2+s^2 z1^4 z3+2 s^3 z1^3 z3+s^4 z1^2 z3+z1^4 z2^2 z3+2 s z1^3 z2^2 z3+s^"
     "2 z1^2 z2^2 z3+2 s z1^4 z2 z3+4 s^2 z1^3 z2 z3+2 s^3 z1^2 z2 z3)"},
    {'c', 4, "(4,3,2,1)",
     "4 (A+z1-z2) (A+z3-z4) (A+z3+z4) (A-s-z1-z2) (11 A^4-18 A^3 s+8 A^3 z2-8 A^3 z3+10 A^2 s^2 -3 A^2"
     " s z1-11 A^2 s z2+8 A^2 s z3-3 A^2 z1^2+A^2 z2^2-8 A^2 z2 z3+A^2 z3^2-3 A^2 z4^2-2 A s^3+3 A s^2"
     " z1+5 A s^2 z2 -2 A s^2 z3+3 A s z1^2+2 A s z1 z3-A s z2^2+6 A s z2 z3+2 A s z4^2+2 A z1^2 z3-2 "
     "A z2^2 z3+2 A z2 z3^2-2 A z2 z4^2-s^3 z1 -s^3 z2-s^2 z1^2-s^2 z1 z2-s^2 z1 z3-s^2 z2 z3-s z1^2 z"
     "2-s z1^2 z3-s z1 z2^2+s z1 z4^2+s z2^2 z3+s z2 z4^2-z1^2 z2^2+z1^2 z4^2 +z2^2 z3^2-z3^2 z4^2)"},
    {'o', 2, "(r,l)",
     "4 (A-s-2 z1) (A+2 z2) (A+z1-z2) (A+z1+z2) (A-s-z1-z2) (A-s-z1+z2)"},
    {'o', 2, "(l,l)",
     "4 (A+2 z2) (A+z1-z2) (A+z1+z2) (A+2 z1) (2 A-2 s-z1-z2) (2 A-2 s-z1+z2)"},
    {'o', 2, "(r,r)",
     "4 (A+z1-z2) (A-s-2 z2) (A-s-z1-z2) (A-s-2 z1) (2 A-2 s-z1+z2) (2 A-s+z1+z2)"},
    {'o', 2, "(l,r)",
     "4 (A-s-z1-z2) (A+z1-z2) (A+z1+z2) (11 A^3-26 A^2 s+19 A s^2-4 s^3-3 A^2 z1+A s z1+2 s^2 z1-2 A z"
     "1^2+2 s z1^2+3 A^2 z2-7 A s z2+4 s^2 z2-8 A z1 z2+10 s z1 z2+4 z1^2 z2-2 A z2^2-4 z1 z2^2)"},
    {'o', 2, "(2,1)",
     "2 (A-s) (A-s-2 z1) (A+2 z2) (2 A-s) (5 A^2-7 A s+2 s^2-2 s z1-2 z1^2-2 z2^2)"},
    {'m', 2, "(2,1)",
     "2 (A-s) (A+2 z2) (4 A^2-5 A s+2 s^2+2 s z1+2 z1^2-2 z2^2)"},
    {'m', 2, "(r,r)",
     "4 (2 A-s+z1+z2) (2 A-2 s-z1+z2) (A-s-z1-z2) (A+z1-z2)"},
};

} // namespace

bool available(BoundaryType type, int L) {
    for (auto& e : kTable)
        if (e.type == to_char(type) && e.L == L) return true;
    return false;
}

const std::map<std::string, std::string>& strings(BoundaryType type, int L) {
    static std::map<std::pair<char, int>, std::map<std::string, std::string>> all;
    if (all.empty()) {
        for (auto& e : kTable) all[{e.type, e.L}][e.pattern] = e.expr;
    }
    auto it = all.find({to_char(type), L});
    if (it == all.end()) throw std::out_of_range("no reference table for this (type, L)");
    return it->second;
}

std::vector<Poly> solution(BoundaryType type, int L) {
    auto& tbl = strings(type, L);
    auto ts = VarTable::standard(L, {"s"});
    auto tstd = VarTable::standard(L);
    Poly shift = change_table(shift_s(tstd, type), ts);
    int is = ts->require("s");
    PatternSpace sp(type, L);
    std::vector<Poly> out;
    out.reserve(sp.size());
    for (int p = 0; p < sp.size(); ++p) {
        auto it = tbl.find(sp.pattern(p).str());
        if (it == tbl.end()) throw std::out_of_range("reference table missing " + sp.pattern(p).str());
        Poly raw = parse_poly(it->second, ts);
        out.push_back(change_table(raw.substitute_var(is, shift), tstd));
    }
    return out;
}

} // namespace brauer::reference
