#include "realcert/multipoly.hpp"

#include <numeric>

#include "realcert/matrix.hpp"

namespace realcert {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw Error("multipoly", "variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw Error("multipoly", "exponent arity mismatch");
    MultiPoly p(nvars);
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error("multipoly", "exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("multipoly", "variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("multipoly", "variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& a) const {
    MultiPoly r(nvars_);
    if (a == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * a;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly acc = MultiPoly::constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (t > d) d = t;
    }
    return d;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0)
            d = t;
        else if (t != d)
            return false;
    }
    if (degree_out) *degree_out = d;
    return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error("multipoly", "point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars_) throw Error("multipoly", "substitution arity mismatch");
    int target_vars = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args)
        if (a.nvars() != target_vars) throw Error("multipoly", "substitution argument arity mismatch");
    MultiPoly r(target_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly m = MultiPoly::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) m = m * args[i].pow(e[i]);
        r = r + m;
    }
    return r;
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw Error("multipoly", "variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

HomForm::HomForm(MultiPoly p, int degree) : p_(std::move(p)), degree_(degree) {
    int d;
    if (!p_.is_homogeneous(&d)) throw Error("homform", "polynomial is not homogeneous");
    if (!p_.is_zero() && d != degree_) throw Error("homform", "degree mismatch");
    if (degree_ < 0) throw Error("homform", "negative degree");
}

HomForm::HomForm(const MultiPoly& p) : p_(p) {
    int d;
    if (!p_.is_homogeneous(&d)) throw Error("homform", "polynomial is not homogeneous");
    if (p_.is_zero()) throw Error("homform", "cannot infer degree of zero form");
    degree_ = d;
}

UniPoly restrict_to_line(const HomForm& f, const std::vector<Rational>& e,
                         const std::vector<Rational>& x) {
    int nv = f.nvars();
    if (static_cast<int>(e.size()) != nv || static_cast<int>(x.size()) != nv)
        throw Error("restrict", "point arity mismatch");
    UniPoly acc;
    for (const auto& [exps, c] : f.poly().terms()) {
        UniPoly term = UniPoly::constant(c);
        for (int i = 0; i < nv; ++i) {
            if (exps[i] == 0) continue;
            UniPoly lin(std::vector<Rational>{e[i], x[i]});  // e_i + t x_i
            term = term * lin.pow(exps[i]);
        }
        acc = acc + term;
    }
    return acc;
}

UniPoly dehomogenize(const HomForm& f, int chart_var) {
    if (f.nvars() != 2) throw Error("multipoly", "dehomogenize expects a binary form");
    int other = 1 - chart_var;
    std::vector<Rational> c(f.degree() + 1, Rational(0));
    for (const auto& [e, coef] : f.poly().terms()) c[e[other]] = coef;
    return UniPoly(std::move(c));
}

HomForm binary_form_from_coeffs(const std::vector<Rational>& by_t_degree) {
    int n = static_cast<int>(by_t_degree.size()) - 1;
    MultiPoly p(2);
    for (int i = 0; i <= n; ++i) p.add_term({n - i, i}, by_t_degree[i]);
    return HomForm(std::move(p), n);
}

std::vector<Rational> binary_form_coeffs(const HomForm& f) {
    if (f.nvars() != 2) throw Error("multipoly", "expected a binary form");
    std::vector<Rational> c(f.degree() + 1, Rational(0));
    for (const auto& [e, coef] : f.poly().terms()) c[e[1]] = coef;
    return c;
}

Rational binary_resultant(const HomForm& f, const HomForm& g) {
    if (f.nvars() != 2 || g.nvars() != 2) throw Error("multipoly", "expected binary forms");
    int m = f.degree(), n = g.degree();
    auto fc = binary_form_coeffs(f);  // fc[i] multiplies s^(m-i) t^i
    auto gc = binary_form_coeffs(g);
    if (m == 0 || n == 0) {
        // Constant forms never share a projective zero unless zero.
        if (f.is_zero() || g.is_zero()) return Rational(0);
        Rational r(1);
        const auto& cst = (m == 0) ? fc[0] : gc[0];
        int other_deg = (m == 0) ? n : m;
        for (int i = 0; i < other_deg; ++i) r *= cst;
        return r;
    }
    Mat<Rational> s(m + n, m + n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = fc[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = gc[j];
    return det_bareiss(s);
}

}  // namespace realcert
