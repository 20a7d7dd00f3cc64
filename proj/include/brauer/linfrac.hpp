// Fractions whose denominators are multisets of linear forms. Canonical form:
// no listed form divides the numerator. Anything quadratic (r, b factors) is
// stored split into its linear factors.
#pragma once

#include "brauer/poly.hpp"

#include <vector>

namespace brauer {

class LinFrac {
public:
    LinFrac() = default;
    explicit LinFrac(Poly num) : num_(std::move(num)) { canonicalize(); }
    LinFrac(Poly num, std::vector<std::pair<LinForm, int>> den);

    static LinFrac zero(VarTablePtr t) { return LinFrac(Poly(std::move(t))); }
    static LinFrac one(VarTablePtr t) { return LinFrac(Poly::constant(std::move(t), Rational(1))); }

    const Poly& num() const { return num_; }
    const std::vector<std::pair<LinForm, int>>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }

    // throws NotDivisible when the denominator has not fully cancelled
    Poly clear_to_poly() const;

    LinFrac operator-() const;
    friend LinFrac operator+(const LinFrac& a, const LinFrac& b);
    friend LinFrac operator-(const LinFrac& a, const LinFrac& b);
    friend LinFrac operator*(const LinFrac& a, const LinFrac& b);
    LinFrac& operator+=(const LinFrac& o) { *this = *this + o; return *this; }
    LinFrac& operator-=(const LinFrac& o) { *this = *this - o; return *this; }
    LinFrac& operator*=(const LinFrac& o) { *this = *this * o; return *this; }
    LinFrac scaled(const Rational& c) const;

    // divide by a polynomial that is a product of linear forms (given factored)
    LinFrac div_form(const Poly& linear) const;
    LinFrac div_forms(const std::vector<Poly>& linears) const;

    bool operator==(const LinFrac& o) const;

    // substitute a variable in numerator and denominator forms (must stay linear)
    LinFrac substitute_var(int var, const Poly& value) const;

    std::string str() const;

private:
    void canonicalize();
    Poly num_;
    std::vector<std::pair<LinForm, int>> den_;   // sorted by form
};

} // namespace brauer
