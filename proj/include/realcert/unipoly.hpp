#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realcert/rational.hpp"

namespace realcert {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& a);
    static UniPoly monomial(const Rational& a, int deg);
    static UniPoly variable();  // t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& a) const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly pow(int e) const;

    // Quotient and remainder; divisor must be nonzero. Exact over Q.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Division that must leave no remainder.
    UniPoly exact_div(const UniPoly& d) const;

    bool is_monic() const { return !is_zero() && leading() == 1; }
    UniPoly monic() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Integer-coefficient view used by the sign-exact Sturm machinery: p scaled
// by a positive rational so all coefficients are coprime integers.
UniPoly primitive_integer_part(const UniPoly& p);

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
UniPoly squarefree_part(const UniPoly& p);        // monic p / gcd(p, p')

// Yun decomposition: p = lc * prod_i f_i^i with the f_i monic, squarefree,
// pairwise coprime. Returns the list (f_1, f_2, ...); trivial factors are 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Resultant of p, q seen as polynomials of their exact degrees.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Sturm sequence with pseudo-remainders; positive rescaling only, so sign
// variation counts match the rational chain exactly.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x);
int sign_variations_at_minus_inf(const std::vector<UniPoly>& chain);
int sign_variations_at_plus_inf(const std::vector<UniPoly>& chain);

// Number of distinct real roots (whole line / half-open interval (a, b]).
int sturm_count(const UniPoly& p);
int sturm_count_interval(const UniPoly& p, const Rational& a, const Rational& b);

// Upper bound B with all real roots in (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

// One real root location: either an exact rational value or an open isolating
// interval (lo, hi) containing exactly one root.
struct RootLoc {
    bool exact = false;
    Rational value;
    Rational lo, hi;
    bool contains(const Rational& x) const {
        return exact ? x == value : (lo < x && x < hi);
    }
};

// Isolating data for all distinct real roots of p (any multiplicities),
// sorted increasingly. Rational roots of moderate height are reported exactly.
std::vector<RootLoc> isolate_real_roots(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "t");

}  // namespace realcert
