#include "realcert/realroots.hpp"

namespace realcert {

SymMatrix hermite_matrix(const UniPoly& p) {
    if (p.is_zero()) throw Error("realroots", "Hermite matrix of zero polynomial");
    if (!p.is_monic()) throw Error("realroots", "Hermite matrix requires a monic polynomial");
    int n = p.degree();
    if (n < 1) throw Error("realroots", "Hermite matrix requires degree >= 1");
    // Newton's identities for p = t^n + a_{n-1} t^{n-1} + ... + a_0.
    std::vector<Rational> s(2 * n - 1, Rational(0));
    s[0] = Rational(n);
    for (int k = 1; k <= 2 * n - 2; ++k) {
        Rational acc(0);
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            acc += p.coeff(n - i) * s[k - i];
        }
        Rational sk = -acc;
        if (k <= n) sk -= Rational(k) * p.coeff(n - k);
        s[k] = sk;
    }
    QMat h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = s[i + j];
    return SymMatrix(std::move(h));
}

RealRootCertificate is_real_rooted(const UniPoly& p) {
    if (p.is_zero()) throw Error("realroots", "real-rootedness of zero polynomial");
    RealRootCertificate cert;
    UniPoly sf = squarefree_part(p);
    cert.distinct_complex_roots = sf.degree();
    if (sf.degree() == 0) {
        cert.distinct_real_roots = 0;
        cert.verdict = RootVerdict::AllRealRoots;
        cert.method = RootMethod::Sturm;
        return cert;
    }
    cert.distinct_real_roots = sturm_count(sf);
    cert.verdict = (cert.distinct_real_roots == cert.distinct_complex_roots)
                       ? RootVerdict::AllRealRoots
                       : RootVerdict::NotAllReal;
    cert.method = RootMethod::Sturm;
    // Cross-check with the Hermite form on the squarefree part. The Hermite
    // route costs O(n^4) big-rational operations, so it is skipped for large
    // degrees where the Sturm chain alone stays cheap.
    if (sf.degree() <= 10) {
        SignatureResult sig = signature(hermite_matrix(sf.monic()));
        int hermite_real = sig.n_plus - sig.n_minus;
        int hermite_complex = sig.n_plus + sig.n_minus;
        if (hermite_real != cert.distinct_real_roots ||
            hermite_complex != cert.distinct_complex_roots)
            throw Error("realroots", "Sturm and Hermite certificates disagree");
    }
    return cert;
}

bool nonneg_on_reals(const UniPoly& p) {
    if (p.is_zero()) throw Error("realroots", "nonnegativity of zero polynomial");
    if (sign(p.leading()) < 0) return false;
    if (p.degree() % 2 != 0) return false;
    if (p.degree() == 0) return true;
    auto factors = squarefree_decomposition(p);
    UniPoly odd_part = UniPoly::constant(Rational(1));
    for (size_t i = 0; i < factors.size(); ++i)
        if (i % 2 == 0) odd_part = odd_part * factors[i];  // multiplicity i+1 odd
    if (odd_part.degree() == 0) return true;
    return sturm_count(odd_part) == 0;
}

}  // namespace realcert
