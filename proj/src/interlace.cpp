#include "realcert/interlace.hpp"

#include <numeric>

namespace realcert {

RationalMapP1::RationalMapP1(HomForm f, HomForm g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.nvars() != 2 || g_.nvars() != 2)
        throw Error("interlace", "map components must be binary forms");
    if (f_.degree() != g_.degree()) throw Error("interlace", "component degree mismatch");
    if (f_.degree() < 1) throw Error("interlace", "map degree must be at least 1");
    if (f_.is_zero() || g_.is_zero()) throw Error("interlace", "zero component");
    if (binary_resultant(f_, g_) == 0)
        throw Error("common-zero", "components share a projective zero");
}

namespace {

// Coefficients c_{ab} of (F(x) G(y) - F(y) G(x)) / (x - y); both indices run
// from 0 to n-1 where n is the nominal degree of the forms.
std::vector<std::vector<Rational>> bezout_table(const HomForm& f, const HomForm& g) {
    int n = f.degree();
    UniPoly F = dehomogenize(f, 1);
    UniPoly G = dehomogenize(g, 1);
    // Divide N(x, y) by (x - y) treating N as a polynomial in x over Q[y].
    // N has x-degree <= n and vanishes at x = y, so synthetic division by
    // (x - y) is exact: if N = sum_i N_i(y) x^i then the quotient satisfies
    // Q_{i} = N_{i+1} + y * Q_{i+1}.
    // Work with rows of y-coefficients.
    auto ypoly_zero = std::vector<Rational>(2 * n + 1, Rational(0));
    std::vector<std::vector<Rational>> N(n + 1, ypoly_zero);
    for (int i = 0; i <= F.degree(); ++i) {
        for (int j = 0; j <= G.degree(); ++j) {
            // F(x)G(y) term: x^i y^j; F(y)G(x) term: x^j y^i
            N[i][j] += F.coeff(i) * G.coeff(j);
            N[j][i] -= F.coeff(i) * G.coeff(j);
        }
    }
    std::vector<std::vector<Rational>> Q(n, ypoly_zero);
    std::vector<Rational> carry = ypoly_zero;  // Q_{i+1}
    for (int i = n - 1; i >= 0; --i) {
        std::vector<Rational> qi = N[i + 1];
        for (int d = 2 * n; d >= 1; --d) qi[d] += carry[d - 1];  // + y * Q_{i+1}
        Q[i] = qi;
        carry = qi;
    }
    // Remainder check: N_0 + y * Q_0 must vanish.
    std::vector<Rational> rem = N[0];
    for (int d = 2 * n; d >= 1; --d) rem[d] += Q[0][d - 1];
    for (const auto& c : rem)
        if (c != 0) throw Error("interlace", "Bezout division left a remainder");
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c[a][b] = Q[a][b];
    return c;
}

}  // namespace

SymMatrix bezoutian(const HomForm& f, const HomForm& g) {
    if (f.nvars() != 2 || g.nvars() != 2) throw Error("interlace", "expected binary forms");
    if (f.degree() != g.degree()) throw Error("interlace", "degree mismatch");
    int n = f.degree();
    if (n < 1) throw Error("interlace", "degree must be at least 1");
    auto c = bezout_table(f, g);
    QMat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = c[n - 1 - i][n - 1 - j];
    return SymMatrix(std::move(b));
}

SymMatrix bezoutian_ascending(const HomForm& f, const HomForm& g) {
    int n = f.degree();
    auto c = bezout_table(f, g);
    QMat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = c[i][j];
    return SymMatrix(std::move(b));
}

const std::vector<std::pair<long, long>>& pencil_grid() {
    static const std::vector<std::pair<long, long>> grid = [] {
        std::vector<std::pair<long, long>> g;
        g.emplace_back(1, 0);
        g.emplace_back(0, 1);
        for (long q = 1; q <= 7; ++q)
            for (long p = -7; p <= 7; ++p) {
                if (p == 0) continue;
                if (std::gcd(std::abs(p), q) != 1) continue;
                g.emplace_back(p, q);
            }
        return g;
    }();
    return grid;
}

namespace {

UniPoly pencil_member_chart(const RationalMapP1& m, long lam, long mu) {
    // lambda f + mu g restricted to the chart t = 1. Projective roots are all
    // real iff the chart polynomial is real-rooted (the dropped zeros sit at
    // the real point (1 : 0)).
    UniPoly F = dehomogenize(m.f(), 1);
    UniPoly G = dehomogenize(m.g(), 1);
    return F.scaled(Rational(lam)) + G.scaled(Rational(mu));
}

bool member_real_rooted(const RationalMapP1& m, long lam, long mu,
                        RealRootCertificate* cert_out) {
    UniPoly p = pencil_member_chart(m, lam, mu);
    if (p.is_zero()) return true;  // whole member concentrated at (1 : 0)
    RealRootCertificate c = is_real_rooted(p);
    if (cert_out) *cert_out = c;
    return c.all_real();
}

}  // namespace

PairClassification classify_pair(const RationalMapP1& m) {
    PairClassification out;
    SymMatrix b = bezoutian(m.f(), m.g());
    out.bezout_signature = signature(b);
    bool definite = out.bezout_signature.definite();
    if (definite) {
        out.verdict = PairVerdict::RealFiberedInterlacing;
        for (const auto& [lam, mu] : pencil_grid()) {
            ++out.sampled_members;
            if (!member_real_rooted(m, lam, mu, nullptr))
                throw Error("interlace",
                            "definite Bezoutian but a sampled pencil member is not real-rooted");
        }
        return out;
    }
    out.verdict = PairVerdict::NotRealFibered;
    for (const auto& [lam, mu] : pencil_grid()) {
        ++out.sampled_members;
        RealRootCertificate cert;
        if (!member_real_rooted(m, lam, mu, &cert)) {
            out.witness = std::make_pair(Rational(lam), Rational(mu));
            out.witness_certificate = cert;
            return out;
        }
    }
    // The Bezoutian is indefinite, so a failing member exists; widen the net
    // deterministically before giving up.
    for (long q = 1; q <= 101; ++q)
        for (long p = -101; p <= 101; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            ++out.sampled_members;
            RealRootCertificate cert;
            if (!member_real_rooted(m, p, q, &cert)) {
                out.witness = std::make_pair(Rational(p), Rational(q));
                out.witness_certificate = cert;
                return out;
            }
        }
    throw Error("interlace",
                "indefinite Bezoutian but no non-real-rooted member found on the search grid");
}

PairClassification classify_raw(const HomForm& f, const HomForm& g) {
    if (binary_resultant(f, g) == 0) {
        PairClassification out;
        out.verdict = PairVerdict::CommonZero;
        return out;
    }
    return classify_pair(RationalMapP1(f, g));
}

RationalMapP1 compose(const RationalMapP1& outer, const RationalMapP1& inner) {
    std::vector<MultiPoly> args{inner.f().poly(), inner.g().poly()};
    MultiPoly f = outer.f().poly().substitute(args);
    MultiPoly g = outer.g().poly().substitute(args);
    int deg = outer.degree() * inner.degree();
    return RationalMapP1(HomForm(std::move(f), deg), HomForm(std::move(g), deg));
}

RationalMapP1 mobius_power_map(int k) {
    if (k < 1) throw Error("interlace", "power map exponent must be positive");
    // (s + it)^k = A(s,t) + i B(s,t); the map is (A : B).
    MultiPoly a(2), b(2);
    Integer binom(1);
    for (int j = 0; j <= k; ++j) {
        Rational c(binom);
        // i^j cycle: 1, i, -1, -i
        switch (j % 4) {
            case 0: a.add_term({k - j, j}, c); break;
            case 1: b.add_term({k - j, j}, c); break;
            case 2: a.add_term({k - j, j}, -c); break;
            case 3: b.add_term({k - j, j}, -c); break;
        }
        binom = binom * (k - j) / (j + 1);
    }
    return RationalMapP1(HomForm(std::move(a), k), HomForm(std::move(b), k));
}

std::vector<RealProjectivePoint> real_ramification(const RationalMapP1& m) {
    const MultiPoly& f = m.f().poly();
    const MultiPoly& g = m.g().poly();
    MultiPoly w = f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0);
    std::vector<RealProjectivePoint> out;
    if (w.is_zero())
        throw Error("interlace", "ramification form vanishes identically");
    HomForm wf(w);
    UniPoly chart = dehomogenize(wf, 1);
    if (!chart.is_zero() && chart.degree() > 0) {
        for (const auto& loc : isolate_real_roots(chart))
            out.push_back(RealProjectivePoint{false, loc});
    }
    // The point (1 : 0) is ramified iff the s-leading coefficient vanishes.
    if (w.coeff(std::vector<int>{wf.degree(), 0}) == 0)
        out.push_back(RealProjectivePoint{true, RootLoc{}});
    return out;
}

}  // namespace realcert
