#include "realcert/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "realcert/matrix.hpp"

namespace realcert {

UniPoly UniPoly::constant(const Rational& a) {
    if (a == 0) return UniPoly();
    return UniPoly(std::vector<Rational>{a});
}

UniPoly UniPoly::monomial(const Rational& a, int deg) {
    if (a == 0) return UniPoly();
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = a;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::variable() { return monomial(Rational(1), 1); }

const Rational& UniPoly::leading() const {
    if (is_zero()) throw Error("unipoly", "leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& a) const {
    if (a == 0) return UniPoly();
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * a;
    return UniPoly(std::move(r));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(int e) const {
    UniPoly acc = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("unipoly", "division by zero polynomial");
    std::vector<Rational> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quo(degree() - dd + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        Rational lead = rem[i];
        if (lead == 0) continue;
        Rational q = lead / d.leading();
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("unipoly", "inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw Error("unipoly", "cannot normalize zero polynomial");
    return scaled(Rational(1) / leading());
}

UniPoly primitive_integer_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    Integer num_gcd(0);
    for (const auto& c : p.coeffs()) {
        Integer n = c.get_num() * (den_lcm / c.get_den());
        num_gcd = gcd(num_gcd, n);
    }
    Rational scale(den_lcm, num_gcd);  // positive: gcd > 0, lcm > 0
    scale.canonicalize();
    return p.scaled(scale);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = primitive_integer_part(a);
    UniPoly g = primitive_integer_part(b);
    if (f.is_zero()) return g.is_zero() ? g : g.monic();
    if (g.is_zero()) return f.monic();
    if (f.degree() < g.degree()) std::swap(f, g);
    // Primitive PRS: pseudo-remainders with contents stripped each step.
    while (!g.is_zero()) {
        int delta = f.degree() - g.degree();
        Rational mult = g.leading();
        UniPoly scaled_f = f;
        for (int i = 0; i <= delta; ++i) scaled_f = scaled_f.scaled(mult);
        UniPoly r = scaled_f.divmod(g).second;
        f = g;
        g = r.is_zero() ? r : primitive_integer_part(r);
    }
    return f.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw Error("unipoly", "squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    // Yun's algorithm on the monic normalization.
    if (p.is_zero()) throw Error("unipoly", "squarefree decomposition of zero polynomial");
    std::vector<UniPoly> out;
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly df = f.derivative();
    UniPoly a = gcd(f, df);
    UniPoly b = f.exact_div(a);
    UniPoly c = df.exact_div(a);
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly fi = gcd(b, d);
        out.push_back(fi.monic());
        b = b.exact_div(fi);
        c = d.exact_div(fi);
        d = c - b.derivative();
    }
    return out;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    int m = p.degree(), n = q.degree();
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= p.leading();
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= q.leading();
        return r;
    }
    Mat<Rational> s(m + n, m + n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = q.coeff(n - j);
    return det_bareiss(s);
}

namespace {

int sign_at_plus_inf(const UniPoly& p) {
    return p.is_zero() ? 0 : sign(p.leading());
}

int sign_at_minus_inf(const UniPoly& p) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    if (p.is_zero()) throw Error("unipoly", "Sturm chain of zero polynomial");
    std::vector<UniPoly> chain;
    chain.push_back(primitive_integer_part(p));
    if (p.degree() == 0) return chain;
    chain.push_back(primitive_integer_part(p.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const UniPoly& f = chain[chain.size() - 2];
        const UniPoly& g = chain.back();
        int delta = f.degree() - g.degree();
        // Pseudo-remainder with an even power of lc(g) is a positive multiple
        // of the rational remainder, so the chain signs stay correct after
        // negation; odd powers need the extra sign flip folded in.
        Rational mult = g.leading();
        UniPoly sf = f;
        for (int i = 0; i <= delta; ++i) sf = sf.scaled(mult);
        UniPoly r = sf.divmod(g).second;
        bool mult_negative = ((delta + 1) % 2 == 1) && sign(mult) < 0;
        UniPoly next = mult_negative ? r : -r;
        if (next.is_zero()) break;
        chain.push_back(primitive_integer_part(next));
    }
    return chain;
}

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(sign(f.eval(x)));
    return count_variations(signs);
}

int sign_variations_at_minus_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(sign_at_minus_inf(f));
    return count_variations(signs);
}

int sign_variations_at_plus_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(sign_at_plus_inf(f));
    return count_variations(signs);
}

int sturm_count(const UniPoly& p) {
    if (p.is_zero()) throw Error("unipoly", "root count of zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at_minus_inf(chain) - sign_variations_at_plus_inf(chain);
}

int sturm_count_interval(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw Error("unipoly", "root count of zero polynomial");
    if (p.degree() == 0) return 0;
    if (!(a < b)) throw Error("unipoly", "empty interval for root count");
    auto chain = sturm_chain(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = rat_abs(p.coeff(i));
        if (a > m) m = a;
    }
    Rational bound = Rational(1) + m / rat_abs(p.leading());
    // Round up to an integer so isolation endpoints stay small.
    Integer z = bound.get_num() / bound.get_den() + 1;
    return Rational(z);
}

namespace {

// Search for a rational root of p inside (lo, hi) with denominator <= qmax.
// The interval is assumed narrow enough to contain at most one candidate per
// denominator, which a handful of bisection rounds guarantees.
std::optional<Rational> find_small_rational_root(const UniPoly& p, const Rational& lo,
                                                 const Rational& hi, long qmax) {
    for (long q = 1; q <= qmax; ++q) {
        Rational lq = lo * q, hq = hi * q;
        Integer a = lq.get_num() / lq.get_den();  // truncation toward zero
        for (Integer cand = a - 2; cand <= a + 2 + (hq - lq).get_num(); ++cand) {
            Rational r(cand, q);
            r.canonicalize();
            if (lo < r && r < hi && p.eval(r) == 0) return r;
        }
        if (hq - lq > 8) break;  // interval too wide for candidate scanning
    }
    return std::nullopt;
}

void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& chain, const Rational& a,
                 const Rational& b, int count, std::vector<RootLoc>& out) {
    if (count == 0) return;
    if (count == 1) {
        Rational lo = a, hi = b;
        // Shrink the bracket, snapping to exact roots found at midpoints.
        for (int round = 0; round < 48; ++round) {
            Rational mid = (lo + hi) / 2;
            if (p.eval(mid) == 0) {
                out.push_back(RootLoc{true, mid, mid, mid});
                return;
            }
            int left = sign_variations_at(chain, lo) - sign_variations_at(chain, mid);
            if (left == 1)
                hi = mid;
            else
                lo = mid;
        }
        if (p.eval(hi) == 0) {
            out.push_back(RootLoc{true, hi, hi, hi});
            return;
        }
        if (auto r = find_small_rational_root(p, lo, hi, 64)) {
            out.push_back(RootLoc{true, *r, *r, *r});
            return;
        }
        out.push_back(RootLoc{false, Rational(0), lo, hi});
        return;
    }
    Rational mid = (a + b) / 2;
    // Keep the split point off the root set so (a,mid] / (mid,b] cut cleanly.
    Rational step = (b - a) / 64;
    while (p.eval(mid) == 0) mid += step / 2, step = step / 2;
    int left = sign_variations_at(chain, a) - sign_variations_at(chain, mid);
    isolate_rec(p, chain, a, mid, left, out);
    isolate_rec(p, chain, mid, b, count - left, out);
}

}  // namespace

std::vector<RootLoc> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("unipoly", "cannot isolate roots of zero polynomial");
    std::vector<RootLoc> out;
    if (p.degree() == 0) return out;
    UniPoly sf = primitive_integer_part(squarefree_part(p));
    if (sf.degree() == 0) return out;
    auto chain = sturm_chain(sf);
    Rational b = cauchy_root_bound(sf);
    Rational a = -b;
    if (sf.eval(a) == 0 || sf.eval(b) == 0)
        throw Error("unipoly", "root bound not strict");  // cannot happen: bound is strict
    int total = sign_variations_at(chain, a) - sign_variations_at(chain, b);
    isolate_rec(sf, chain, a, b, total, out);
    std::sort(out.begin(), out.end(), [](const RootLoc& x, const RootLoc& y) {
        Rational xe = x.exact ? x.value : x.lo;
        Rational ye = y.exact ? y.value : y.lo;
        return xe < ye;
    });
    return out;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        bool neg = sign(c) < 0;
        Rational a = rat_abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool coeff_one = (a == 1);
        if (i == 0) {
            os << rat_str(a);
        } else {
            if (!coeff_one) os << rat_str(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace realcert
