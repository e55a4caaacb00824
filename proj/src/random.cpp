#include "realcert/random.hpp"

#include <algorithm>
#include <set>

namespace realcert {

std::vector<Rational> random_point(Rng& rng, int n, long height) {
    std::vector<Rational> p(n);
    for (auto& c : p) c = Rational(rng.next_int(-height, height));
    return p;
}

std::vector<Rational> random_nonzero_point(Rng& rng, int n, long height) {
    for (;;) {
        auto p = random_point(rng, n, height);
        for (const auto& c : p)
            if (c != 0) return p;
    }
}

SymMatrix random_symmetric(Rng& rng, int n, long height) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational v(rng.next_int(-height, height));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return SymMatrix(std::move(m));
}

QMat random_invertible(Rng& rng, int n, long height) {
    for (;;) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rational(rng.next_int(-height, height));
        if (det_bareiss(m) != 0) return m;
    }
}

QMat random_orthogonal(Rng& rng, int n, long height) {
    QMat s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = rng.next_rational(height, height);
            s.at(i, j) = v;
            s.at(j, i) = -v;
        }
    QMat ident = qmat_identity(n);
    QMat num = ident - s;
    QMat den = ident + s;
    return solve_linear(den, num);  // (I + S)^-1 (I - S), orthogonal
}

UniPoly random_monic(Rng& rng, int degree, long height) {
    std::vector<Rational> c(degree + 1);
    for (int i = 0; i < degree; ++i) c[i] = Rational(rng.next_int(-height, height));
    c[degree] = Rational(1);
    return UniPoly(std::move(c));
}

UniPoly random_real_rooted_monic(Rng& rng, int degree, long height) {
    std::set<Rational> roots;
    while (static_cast<int>(roots.size()) < degree) roots.insert(rng.next_rational(height, 4));
    UniPoly p = UniPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * UniPoly(std::vector<Rational>{-r, Rational(1)});
    return p;
}

RationalMapP1 random_interlacing_map(Rng& rng, int degree, long height) {
    std::set<Rational> pts;
    while (static_cast<int>(pts.size()) < 2 * degree) pts.insert(rng.next_rational(height, 3));
    std::vector<Rational> sorted(pts.begin(), pts.end());
    UniPoly f = UniPoly::constant(Rational(1));
    UniPoly g = UniPoly::constant(Rational(1));
    for (int i = 0; i < 2 * degree; ++i) {
        UniPoly lin(std::vector<Rational>{-sorted[i], Rational(1)});
        if (i % 2 == 0)
            f = f * lin;
        else
            g = g * lin;
    }
    // Homogenize both to degree n.
    MultiPoly fh(2), gh(2);
    for (int i = 0; i <= degree; ++i) {
        fh.add_term({i, degree - i}, f.coeff(i));
        gh.add_term({i, degree - i}, g.coeff(i));
    }
    return RationalMapP1(HomForm(std::move(fh), degree), HomForm(std::move(gh), degree));
}

std::vector<Mat<MultiPoly>> random_commuting_symmetric_system(Rng& rng, int n, int c, int d,
                                                              long height) {
    if (d < c) throw Error("random", "need d >= c for a commuting system");
    QMat q = random_orthogonal(rng, n, 2);
    QMat qt = q.transpose();
    auto conj_diag = [&](const std::vector<Rational>& diag) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = diag[i];
        return q * m * qt;
    };
    std::vector<int> free_vars;
    free_vars.push_back(0);
    for (int j = c + 1; j <= d; ++j) free_vars.push_back(j);
    MultiPoly zero(d + 1);
    std::vector<Mat<MultiPoly>> system;
    for (int i = 1; i <= c; ++i) {
        Mat<MultiPoly> t(n, n, zero);
        for (int r = 0; r < n; ++r) t.at(r, r) = MultiPoly::variable(d + 1, i);
        for (int j : free_vars) {
            std::vector<Rational> diag(n);
            for (auto& v : diag) v = Rational(rng.next_int(-height, height));
            QMat a = conj_diag(diag);
            MultiPoly zj = MultiPoly::variable(d + 1, j);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    t.at(r, s) = t.at(r, s) - zj.scaled(a.at(r, s));
        }
        system.push_back(std::move(t));
    }
    return system;
}

}  // namespace realcert
