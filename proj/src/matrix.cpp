#include "realcert/matrix.hpp"

#include <sstream>

namespace realcert {

QMat qmat_identity(int n) { return QMat::identity(n, Rational(1), Rational(0)); }

Rational det_bareiss(QMat m) {
    if (m.rows() != m.cols()) throw Error("matrix", "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign_flips = 0;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            ++sign_flips;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    Rational d = m.at(n - 1, n - 1);
    return (sign_flips % 2 == 0) ? d : -d;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const QMat& m) {
    QMat w = m;
    return static_cast<int>(rref(w).size());
}

std::vector<std::vector<Rational>> kernel_basis(const QMat& m) {
    QMat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_c] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

KernelRank kernel_rank(const QMat& m) {
    QMat w = m;
    std::vector<int> pivots = rref(w);
    KernelRank out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_c] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), free_c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

UniPoly charpoly(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("matrix", "characteristic polynomial of non-square matrix");
    int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    QMat mk = m;
    for (int k = 1; k <= n; ++k) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Rational ck = tr / Rational(k);
        c[n - k] = -ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk.at(i, i) -= ck;
        mk = m * mk;
    }
    return UniPoly(std::move(c));
}

SymMatrix::SymMatrix(QMat m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw Error("matrix", "matrix is not symmetric");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int n = static_cast<int>(rows.size());
    QMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw Error("matrix", "ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return SymMatrix(std::move(m));
}

SignatureResult signature(const SymMatrix& m) {
    int n = m.size();
    SignatureResult out;
    if (n == 0) return out;
    UniPoly p = charpoly(m.mat());
    // Strip the zero eigenvalues, then Descartes on each half line. All roots
    // are real here, so the variation counts are exact with multiplicity.
    int low = 0;
    while (low <= p.degree() && p.coeff(low) == 0) ++low;
    out.n_zero = low;
    std::vector<int> signs_pos, signs_neg;
    for (int i = low; i <= p.degree(); ++i) {
        int s = sign(p.coeff(i));
        if (s == 0) continue;
        signs_pos.push_back(s);
        signs_neg.push_back(((i - low) % 2 == 0) ? s : -s);
    }
    auto variations = [](const std::vector<int>& v) {
        int count = 0;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] != v[i - 1]) ++count;
        return count;
    };
    out.n_plus = variations(signs_pos);
    out.n_minus = variations(signs_neg);
    if (out.n_plus + out.n_minus + out.n_zero != n)
        throw Error("matrix", "inertia counts are inconsistent");
    return out;
}

QMat solve_linear(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw Error("matrix", "solve: row mismatch");
    QMat aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != a.cols())
        throw Error("matrix", "solve: system is singular");
    for (int c : pivots)
        if (c >= a.cols()) throw Error("matrix", "solve: inconsistent system");
    QMat x(a.cols(), b.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
    return x;
}

std::string to_string(const QMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << rat_str(m.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace realcert
