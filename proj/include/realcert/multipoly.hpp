#pragma once

#include <map>
#include <string>
#include <vector>

#include "realcert/rational.hpp"
#include "realcert/unipoly.hpp"

namespace realcert {

// Sparse multivariate polynomial over Q with a fixed variable count.
// Exponent vectors are dense tuples of length nvars; no zero coefficients
// are stored. Values are immutable in spirit: all operations return copies.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nvars = 1) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, Exponents e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& a) const;
    MultiPoly pow(int e) const;

    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(int* degree_out = nullptr) const;

    Rational eval(const std::vector<Rational>& point) const;
    // Substitute args[i] for variable i; args share a common variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& args) const;
    MultiPoly partial(int var) const;

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

// Homogeneous form wrapper: every stored term has total degree = degree().
class HomForm {
public:
    HomForm(MultiPoly p, int degree);
    explicit HomForm(const MultiPoly& p);  // infers the degree, zero forbidden

    const MultiPoly& poly() const { return p_; }
    int degree() const { return degree_; }
    int nvars() const { return p_.nvars(); }
    bool is_zero() const { return p_.is_zero(); }

    bool operator==(const HomForm& o) const { return degree_ == o.degree_ && p_ == o.p_; }

private:
    MultiPoly p_;
    int degree_;
};

// t |-> f(e + t*x), exact; degree <= deg f with equality iff f(x) != 0.
UniPoly restrict_to_line(const HomForm& f, const std::vector<Rational>& e,
                         const std::vector<Rational>& x);

// Bivariate form utilities (variables s = 0, t = 1).
UniPoly dehomogenize(const HomForm& f, int chart_var);  // set chart_var = 1
HomForm binary_form_from_coeffs(const std::vector<Rational>& by_t_degree);
std::vector<Rational> binary_form_coeffs(const HomForm& f);  // index = t-degree

// Resultant of two binary forms taken at their nominal degrees (so common
// zeros at infinity are seen). Nonzero iff no common projective zero.
Rational binary_resultant(const HomForm& f, const HomForm& g);

}  // namespace realcert
