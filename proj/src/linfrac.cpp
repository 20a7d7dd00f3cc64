#include "brauer/linfrac.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

LinFrac::LinFrac(Poly num, std::vector<std::pair<LinForm, int>> den)
    : num_(std::move(num)), den_(std::move(den)) {
    std::sort(den_.begin(), den_.end(), [](auto& a, auto& b) { return a.first < b.first; });
    // merge duplicates
    std::vector<std::pair<LinForm, int>> merged;
    for (auto& [f, k] : den_) {
        if (k == 0) continue;
        if (k < 0) throw std::invalid_argument("LinFrac: negative multiplicity");
        if (!merged.empty() && merged.back().first == f) merged.back().second += k;
        else merged.emplace_back(f, k);
    }
    den_ = std::move(merged);
    canonicalize();
}

void LinFrac::canonicalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, k] : den_) {
        while (k > 0) {
            Poly q;
            if (!num_.divides_exactly(f.poly(), &q)) break;
            num_ = std::move(q);
            --k;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](auto& p) { return p.second == 0; }), den_.end());
}

Poly LinFrac::clear_to_poly() const {
    if (!den_.empty()) throw NotDivisible("fraction did not clear: " + str());
    return num_;
}

LinFrac LinFrac::operator-() const {
    LinFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

LinFrac LinFrac::scaled(const Rational& c) const {
    LinFrac r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

static int mult_of(const std::vector<std::pair<LinForm, int>>& den, const LinForm& f) {
    for (auto& [g, k] : den)
        if (g == f) return k;
    return 0;
}

LinFrac operator+(const LinFrac& a, const LinFrac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // lcm of denominators
    std::vector<std::pair<LinForm, int>> lcm = a.den_;
    for (auto& [f, k] : b.den_) {
        bool found = false;
        for (auto& [g, m] : lcm)
            if (g == f) { m = std::max(m, k); found = true; break; }
        if (!found) lcm.emplace_back(f, k);
    }
    Poly na = a.num_, nb = b.num_;
    for (auto& [f, k] : lcm) {
        int ka = k - mult_of(a.den_, f), kb = k - mult_of(b.den_, f);
        for (int i = 0; i < ka; ++i) na = na * f.poly();
        for (int i = 0; i < kb; ++i) nb = nb * f.poly();
    }
    return LinFrac(na + nb, std::move(lcm));
}

LinFrac operator-(const LinFrac& a, const LinFrac& b) { return a + (-b); }

LinFrac operator*(const LinFrac& a, const LinFrac& b) {
    std::vector<std::pair<LinForm, int>> den = a.den_;
    for (auto& [f, k] : b.den_) den.emplace_back(f, k);
    return LinFrac(a.num_ * b.num_, std::move(den));
}

LinFrac LinFrac::div_form(const Poly& linear) const {
    auto [f, c] = LinForm::make(linear);
    LinFrac r = *this;
    r.num_ = r.num_.scaled(c.inv());
    r.den_.emplace_back(f, 1);
    return LinFrac(r.num_, r.den_);
}

LinFrac LinFrac::div_forms(const std::vector<Poly>& linears) const {
    LinFrac r = *this;
    for (auto& p : linears) r = r.div_form(p);
    return r;
}

bool LinFrac::operator==(const LinFrac& o) const {
    return (*this - o).is_zero();
}

LinFrac LinFrac::substitute_var(int var, const Poly& value) const {
    Poly n = num_.substitute_var(var, value);
    LinFrac r(n);
    for (auto& [f, k] : den_) {
        Poly g = f.poly().substitute_var(var, value);
        if (g.is_zero()) throw std::domain_error("LinFrac: substitution kills a denominator form");
        if (g.is_constant()) {
            Rational c = g.constant_value();
            for (int i = 0; i < k; ++i) r = r.scaled(c.inv());
        } else {
            for (int i = 0; i < k; ++i) r = r.div_form(g);
        }
    }
    return r;
}

std::string LinFrac::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    for (auto& [f, k] : den_) {
        os << " / (" << f.str() << ")";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

} // namespace brauer
