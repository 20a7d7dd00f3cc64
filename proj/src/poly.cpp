#include "brauer/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace brauer {

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], (int)i).second)
            throw std::invalid_argument("VarTable: duplicate name " + names_[i]);
    }
}

int VarTable::index_of(const std::string& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? -1 : it->second;
}

int VarTable::require(const std::string& n) const {
    int i = index_of(n);
    if (i < 0) throw std::invalid_argument("VarTable: unknown variable " + n);
    return i;
}

std::shared_ptr<const VarTable> VarTable::standard(int L, const std::vector<std::string>& extras) {
    std::vector<std::string> names;
    for (int i = 1; i <= L; ++i) names.push_back("z" + std::to_string(i));
    names.push_back("A");
    names.push_back("e");
    for (auto& x : extras) names.push_back(x);
    return std::make_shared<VarTable>(std::move(names));
}

Poly Poly::constant(VarTablePtr t, Rational c) {
    Poly p(std::move(t));
    if (!c.is_zero()) p.terms_.emplace(Mono{std::vector<int16_t>(p.table_->size(), 0)}, std::move(c));
    return p;
}

Poly Poly::variable(VarTablePtr t, int var) {
    Poly p(std::move(t));
    Mono m{std::vector<int16_t>(p.table_->size(), 0)};
    m.e.at(var) = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::variable(VarTablePtr t, const std::string& name) {
    int i = t->require(name);
    return variable(std::move(t), i);
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(table_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_table(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_table(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_table(b);
    Poly r(a.table_);
    if (a.is_zero() || b.is_zero()) return r;
    Mono m{std::vector<int16_t>(a.table_->size(), 0)};
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = (int16_t)(ma.e[i] + mb.e[i]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(table_);
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(table_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total();   // ordering is graded
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, (int)m.e.at(var));
    return d;
}

bool Poly::homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int d = terms_.begin()->first.total();
    for (auto& [m, c] : terms_)
        if (m.total() != d) return false;
    if (deg) *deg = d;
    return true;
}

Poly Poly::substitute(const std::map<int, Poly>& assign) const {
    for (auto& [v, p] : assign) {
        if (p.table_.get() != table_.get()) throw VarTableMismatch();
        (void)v;
    }
    Poly out(table_);
    // cache powers of substituted values
    std::map<int, std::vector<Poly>> powers;
    for (auto& [m, c] : terms_) {
        Poly term = Poly::constant(table_, c);
        for (size_t v = 0; v < m.e.size(); ++v) {
            int k = m.e[v];
            if (k == 0) continue;
            auto it = assign.find((int)v);
            if (it == assign.end()) {
                Mono mv{std::vector<int16_t>(table_->size(), 0)};
                mv.e[v] = (int16_t)k;
                Poly pv(table_);
                pv.terms_.emplace(std::move(mv), Rational(1));
                term = term * pv;
            } else {
                auto& pw = powers[(int)v];
                if (pw.empty()) pw.push_back(Poly::constant(table_, Rational(1)));
                while ((int)pw.size() <= k) pw.push_back(pw.back() * it->second);
                term = term * pw[k];
            }
        }
        out += term;
    }
    return out;
}

Poly Poly::substitute_var(int var, const Poly& value) const {
    std::map<int, Poly> a;
    a.emplace(var, value);
    return substitute(a);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != table_->size()) throw std::invalid_argument("evaluate: wrong point size");
    Rational acc(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t v = 0; v < m.e.size(); ++v)
            for (int k = 0; k < m.e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

Rational Poly::content() const {
    Rational g(0);
    for (auto& [m, c] : terms_) {
        if (g.is_zero()) g = c.abs();
        else g = rat_gcd(g, c);
        (void)m;
    }
    return g;
}

Poly Poly::primitive_part(Rational* content_out) const {
    Rational g = content();
    if (content_out) *content_out = g;
    if (g.is_zero() || g.is_one()) return *this;
    return scaled(g.inv());
}

bool Poly::divides_exactly(const Poly& d, Poly* quotient) const {
    if (d.is_zero()) throw std::domain_error("exact_div: zero divisor");
    check_table(d);
    Poly rem = *this;
    Poly q(table_);
    const Mono& dl = d.terms_.begin()->first;
    const Rational& dc = d.terms_.begin()->second;
    Mono qm{std::vector<int16_t>(table_->size(), 0)};
    while (!rem.is_zero()) {
        const Mono& rl = rem.terms_.begin()->first;
        bool ok = true;
        for (size_t i = 0; i < qm.e.size(); ++i) {
            qm.e[i] = (int16_t)(rl.e[i] - dl.e[i]);
            if (qm.e[i] < 0) ok = false;
        }
        if (!ok) return false;
        Rational qc = rem.terms_.begin()->second / dc;
        q.add_term(qm, qc);
        // rem -= qc * x^qm * d
        Mono m{std::vector<int16_t>(table_->size(), 0)};
        for (auto& [md, cd] : d.terms_) {
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = (int16_t)(md.e[i] + qm.e[i]);
            rem.add_term(m, -(qc * cd));
        }
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

Poly Poly::exact_div(const Poly& d) const {
    Poly q;
    if (!divides_exactly(d, &q))
        throw NotDivisible("(" + str() + ") / (" + d.str() + ")");
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sgn() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sgn() < 0 ? " - " : " + ");
            if (a.sgn() < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (!a.is_one() || m.total() == 0) {
            os << a.str();
            printed = true;
        }
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (printed) os << "*";
            os << table_->name(v);
            if (m.e[v] > 1) os << "^" << (int)m.e[v];
            printed = true;
        }
    }
    return os.str();
}

std::pair<LinForm, Rational> LinForm::make(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("LinForm: zero polynomial");
    if (p.total_degree() > 1) throw std::domain_error("LinForm: degree > 1: " + p.str());
    Rational c;
    Poly prim = p.primitive_part(&c);
    if (prim.leading().second.sgn() < 0) {
        prim = -prim;
        c = -c;
    }
    LinForm f;
    f.p_ = std::move(prim);
    return {f, c};
}

bool LinForm::operator<(const LinForm& o) const {
    auto ia = p_.terms().begin(), ib = o.p_.terms().begin();
    for (; ia != p_.terms().end() && ib != o.p_.terms().end(); ++ia, ++ib) {
        MonoOrder lt;
        if (lt(ia->first, ib->first)) return true;
        if (lt(ib->first, ia->first)) return false;
        if (ia->second < ib->second) return true;
        if (ib->second < ia->second) return false;
    }
    return ia == p_.terms().end() && ib != o.p_.terms().end();
}

Poly lin(VarTablePtr t, const Rational& c0, std::initializer_list<std::pair<const char*, Rational>> coeffs) {
    Poly p = Poly::constant(t, c0);
    for (auto& [name, c] : coeffs) p += Poly::variable(t, name).scaled(c);
    return p;
}

} // namespace brauer
