#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qovar/field.hpp"
#include "qovar/monomial.hpp"

namespace qovar {

// (d; mu1..mu4): degree in the form coefficients and in each variable pair.
struct MultiDegree {
    int d = 0;
    std::array<int, 4> mu{};
    bool operator==(const MultiDegree&) const = default;
};

struct Term {
    Monomial m;
    FieldElem c;
};

// Sparse exact polynomial over the fixed 28-indeterminate universe.
// Terms are kept sorted descending in graded-lex order with no zero
// coefficients, so equality is representation equality.
class Poly {
public:
    Poly() = default;
    static Poly constant(FieldElem c);
    static Poly monomial(Monomial m, FieldElem c = FieldElem(1));
    static Poly indet(int v) { return monomial(Monomial::of(v)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    FieldElem coefficient_of(const Monomial& m) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const FieldElem& c) const;
    Poly pow(int n) const;

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // formal partial derivative in indeterminate v
    Poly derivative(int v) const;
    Poly derivative(int v, int times) const;

    // simultaneous substitution; entries may be null (indeterminate maps to itself)
    Poly substitute(const std::array<const Poly*, indet::kCount>& assignment) const;

    // coefficient of the pure-variable monomial `vm` when the polynomial is
    // viewed in the variable components x1..t2 (vm must involve only those)
    Poly coefficient_extract(const Monomial& vm) const;
    // distinct variable-component patterns occurring in the polynomial
    std::vector<Monomial> variable_support() const;

    // exact division; throws if q is zero or does not divide
    Poly exact_divide(const Poly& q) const;

    // common (d; mu) of all terms, or nullopt for inhomogeneous input
    std::optional<MultiDegree> multidegree() const;

    std::string str() const;
    static Poly parse(const std::string& s);

    // assumes `raw` holds distinct monomials; sorts and drops zeros
    static Poly from_terms(std::vector<Term> raw);

private:
    std::vector<Term> terms_;
};

// multiplication without the parallel path, kept as the reference kernel
Poly mul_serial(const Poly& a, const Poly& b);

// the generic four-qubit ground form f = sum a[ijkl] x_i y_j z_k t_l
Poly ground_form();

// Open-addressing monomial -> coefficient accumulator used by every
// polynomial kernel; take() yields the canonical sorted Poly.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expect = 16);
    void add(const Monomial& m, const FieldElem& c);
    void add_poly(const Poly& p);
    void merge(TermAccumulator&& other);
    Poly take();
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<std::uint32_t> table_;  // value = entry index + 1, 0 empty
    std::vector<Term> entries_;
    std::size_t mask_ = 0;

    void rehash(std::size_t cap);
    std::uint32_t* slot_for(const Monomial& m);
};

}  // namespace qovar
