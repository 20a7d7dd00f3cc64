// Sparse multivariate polynomials with exact rational coefficients over a shared
// ordered variable table. Terms are kept in graded-lex order (highest first),
// which is the canonical serialization order.
#pragma once

#include "brauer/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

struct VarTableMismatch : std::runtime_error {
    VarTableMismatch() : std::runtime_error("operands use different variable tables") {}
};
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error("NotDivisible: " + what) {}
};

class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& n) const;      // -1 if absent
    int require(const std::string& n) const;        // throws if absent

    // Convention: z1..zL, then A, then e, then any extras (e.g. w, beta, x, y).
    static std::shared_ptr<const VarTable> standard(int L, const std::vector<std::string>& extras = {});

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

struct Mono {
    std::vector<int16_t> e;

    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// graded lex, highest term first
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.total(), db = b.total();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoOrder>;

    Poly() = default;
    explicit Poly(VarTablePtr t) : table_(std::move(t)) {}
    static Poly constant(VarTablePtr t, Rational c);
    static Poly variable(VarTablePtr t, int var);
    static Poly variable(VarTablePtr t, const std::string& name);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0); }
    Rational constant_value() const;   // requires is_constant()
    size_t num_terms() const { return terms_.size(); }

    void add_term(const Mono& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rational& c) const;
    Poly pow(int k) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    int total_degree() const;           // -1 for zero
    int degree_in(int var) const;       // -1 for zero
    bool homogeneous(int* deg = nullptr) const;

    // substitution: vars listed in `assign` are replaced by the given polynomials
    Poly substitute(const std::map<int, Poly>& assign) const;
    Poly substitute_var(int var, const Poly& value) const;
    // full numeric evaluation (every variable present in the poly must be assigned)
    Rational evaluate(const std::vector<Rational>& point) const;

    // gcd of all coefficients (nonnegative), 0 for the zero polynomial
    Rational content() const;
    Poly primitive_part(Rational* content_out = nullptr) const;

    // exact division: returns q with q*d == *this, throws NotDivisible otherwise
    Poly exact_div(const Poly& d) const;
    bool divides_exactly(const Poly& d, Poly* quotient = nullptr) const;

    const std::pair<const Mono, Rational>& leading() const { return *terms_.begin(); }

    std::string str() const;  // human-readable, canonical term order

private:
    void check_table(const Poly& o) const {
        if (table_.get() != o.table_.get()) throw VarTableMismatch();
    }
    VarTablePtr table_;
    TermMap terms_;
};

// Linear form: polynomial of total degree <= 1, normalized to primitive integer
// coefficients with positive leading coefficient. `make` returns the rational
// scale c with input == c * form.
class LinForm {
public:
    LinForm() = default;
    static std::pair<LinForm, Rational> make(const Poly& p);
    const Poly& poly() const { return p_; }
    bool operator==(const LinForm& o) const { return p_ == o.p_; }
    bool operator<(const LinForm& o) const;
    std::string str() const { return p_.str(); }

private:
    Poly p_;
};

// convenience builders for the ubiquitous small polys
Poly lin(VarTablePtr t, const Rational& c0, std::initializer_list<std::pair<const char*, Rational>> coeffs);

} // namespace brauer
