#include "brauer/serialize.hpp"

#include <cctype>

namespace brauer {

Json poly_to_json(const Poly& p) {
    Json j;
    j["vars"] = Json::array();
    for (auto& n : p.table()->names()) j["vars"].push_back(n);
    j["terms"] = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json term;
        term["n"] = c.num_str();
        term["d"] = c.den_str();
        term["e"] = Json::array();
        for (auto x : m.e) term["e"].push_back((int)x);
        j["terms"].push_back(std::move(term));
    }
    return j;
}

Poly poly_from_json(const Json& j, VarTablePtr table) {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    if (!table) table = std::make_shared<VarTable>(names);
    Poly p(table);
    for (auto& term : j.at("terms")) {
        Rational c(term.at("n").get<std::string>() + "/" + term.at("d").get<std::string>());
        auto exps = term.at("e").get<std::vector<int>>();
        Mono m{std::vector<int16_t>(table->size(), 0)};
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            m.e.at(table->require(names.at(i))) = (int16_t)exps[i];
        }
        p.add_term(m, c);
    }
    return p;
}

static std::string target_str(int v) {
    switch (v) {
        case TGT_B: return "b";
        case TGT_L: return "l";
        case TGT_R: return "r";
        case TGT_DOT: return "*";
        default: return std::to_string(v);
    }
}

static int target_from_str(const std::string& s) {
    if (s == "b") return TGT_B;
    if (s == "l") return TGT_L;
    if (s == "r") return TGT_R;
    if (s == "*") return TGT_DOT;
    return std::stoi(s);
}

Json pattern_to_json(BoundaryType t, const LinkPattern& p) {
    Json j;
    j["type"] = std::string(1, to_char(t));
    j["L"] = p.L;
    j["target"] = Json::array();
    for (int v : p.t) j["target"].push_back(target_str(v));
    return j;
}

LinkPattern pattern_from_json(const Json& j, BoundaryType* type_out) {
    if (type_out) *type_out = boundary_from_char(j.at("type").get<std::string>().at(0));
    LinkPattern p;
    p.L = j.at("L").get<int>();
    for (auto& s : j.at("target")) p.t.push_back(target_from_str(s.get<std::string>()));
    return p;
}

Json linfrac_to_json(const LinFrac& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = Json::array();
    for (auto& [form, mult] : f.den()) {
        Json d;
        d["linform"] = form.str();
        d["mult"] = mult;
        j["den"].push_back(std::move(d));
    }
    return j;
}

Json operator_to_json(const LoopOperator& op) {
    Json j;
    j["size"] = op.space()->size();
    j["type"] = std::string(1, to_char(op.space()->type()));
    j["L"] = op.space()->L();
    j["entries"] = Json::array();
    for (auto& [rc, val] : op.entries()) {
        Json e;
        e["row"] = rc.first;
        e["col"] = rc.second;
        e["value"] = linfrac_to_json(val);
        j["entries"].push_back(std::move(e));
    }
    return j;
}

Json solution_to_json(const QkzSolution& s, const std::vector<std::string>& checks_passed) {
    Json j;
    j["type"] = std::string(1, to_char(s.type));
    j["L"] = s.L;
    j["degree"] = degree_table(s.type, s.L).total;
    j["normalization"] = s.normalization;
    j["method"] = s.method;
    if (s.preanchor_nullity >= 0) j["preanchor_nullity"] = s.preanchor_nullity;
    j["checks_passed"] = checks_passed;
    j["components"] = Json::object();
    for (int p = 0; p < s.space->size(); ++p)
        j["components"][s.space->pattern(p).str()] = poly_to_json(s.comps[p]);
    return j;
}

QkzSolution solution_from_json(const Json& j) {
    QkzSolution s;
    s.type = boundary_from_char(j.at("type").get<std::string>().at(0));
    s.L = j.at("L").get<int>();
    s.table = VarTable::standard(s.L);
    s.space = std::make_shared<PatternSpace>(s.type, s.L);
    s.normalization = j.value("normalization", "");
    s.method = j.value("method", "");
    s.preanchor_nullity = j.value("preanchor_nullity", -1);
    s.comps.assign(s.space->size(), Poly(s.table));
    for (auto& [key, val] : j.at("components").items()) {
        bool found = false;
        for (int p = 0; p < s.space->size(); ++p)
            if (s.space->pattern(p).str() == key) {
                s.comps[p] = poly_from_json(val, s.table);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("solution_from_json: unknown pattern " + key);
    }
    return s;
}

// ----------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    VarTablePtr table;

    void skip() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < src.size() && src[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos));
    }

    Poly expr() {
        skip();
        bool neg = accept('-');
        if (!neg) accept('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }
    Poly term() {
        Poly acc = factor();
        while (true) {
            skip();
            if (accept('*')) {
                acc = acc * factor();
                continue;
            }
            if (pos < src.size()) {
                char c = src[pos];
                if (c == '(' || std::isalpha((unsigned char)c) || std::isdigit((unsigned char)c)) {
                    acc = acc * factor();
                    continue;
                }
            }
            break;
        }
        return acc;
    }
    Poly factor() {
        Poly base = primary();
        skip();
        if (accept('^')) {
            skip();
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            if (start == pos) fail("exponent expected");
            base = base.pow(std::stoi(src.substr(start, pos - start)));
        }
        return base;
    }
    Poly primary() {
        skip();
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) fail("')' expected");
            return inner;
        }
        if (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            std::string num = src.substr(start, pos - start);
            if (accept('/')) {
                skip();
                size_t ds = pos;
                while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
                if (ds == pos) fail("denominator expected");
                num += "/" + src.substr(ds, pos - ds);
            }
            return Poly::constant(table, Rational(num));
        }
        if (pos < src.size() && std::isalpha((unsigned char)src[pos])) {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            return Poly::variable(table, src.substr(start, pos - start));
        }
        fail("unexpected character");
    }
};

} // namespace

Poly parse_poly(const std::string& src, const VarTablePtr& table) {
    Parser p{src, 0, table};
    Poly out = p.expr();
    p.skip();
    if (p.pos != src.size()) p.fail("trailing input");
    return out;
}

Poly change_table(const Poly& p, const VarTablePtr& dst) {
    Poly out(dst);
    auto st = p.table();
    std::vector<int> remap(st->size(), -1);
    for (size_t v = 0; v < st->size(); ++v) remap[v] = dst->index_of(st->name(v));
    for (auto& [m, c] : p.terms()) {
        Mono nm{std::vector<int16_t>(dst->size(), 0)};
        for (size_t v = 0; v < st->size(); ++v) {
            if (m.e[v] == 0) continue;
            if (remap[v] < 0)
                throw std::invalid_argument("change_table: active variable " + st->name(v) + " missing");
            nm.e[remap[v]] = m.e[v];
        }
        out.add_term(nm, c);
    }
    return out;
}

} // namespace brauer
