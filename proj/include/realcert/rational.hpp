#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace realcert {

// Exact rational scalar. mpq_class keeps values canonical: gcd(num, den) = 1
// and den > 0, which is exactly the invariant we need everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline int sign(const Rational& x) { return sgn(x); }
inline Rational rat_abs(const Rational& x) { return abs(x); }

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// "a" or "a/b" with b > 0 after reduction.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(Integer(s));
            return r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (sgn(den) <= 0) throw Error("parse", "denominator must be positive: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("parse", "bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Integer rat_height(const Rational& x) {
    Integer n = abs(x.get_num());
    Integer d = x.get_den();
    return n > d ? n : d;
}

}  // namespace realcert
