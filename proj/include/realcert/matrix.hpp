#pragma once

#include <functional>
#include <vector>

#include "realcert/rational.hpp"
#include "realcert/unipoly.hpp"

namespace realcert {

template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n, const T& one, const T& zero) {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = at(i, k);
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using QMat = Mat<Rational>;

QMat qmat_identity(int n);

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational det_bareiss(QMat m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(const QMat& m);

// Exact basis of {v : Mv = 0}; one vector per free column of the RREF.
std::vector<std::vector<Rational>> kernel_basis(const QMat& m);

struct KernelRank {
    int rank = 0;
    std::vector<std::vector<Rational>> kernel;
};
KernelRank kernel_rank(const QMat& m);

// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recurrence
// (integer divisions only, exact over Q).
UniPoly charpoly(const QMat& m);

struct SignatureResult {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool operator==(const SignatureResult& o) const = default;
    bool positive_definite() const { return n_minus == 0 && n_zero == 0; }
    bool negative_definite() const { return n_plus == 0 && n_zero == 0; }
    bool definite() const { return positive_definite() || negative_definite(); }
    bool positive_semidefinite() const { return n_minus == 0; }
};

class SymMatrix {
public:
    explicit SymMatrix(QMat m);
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    int size() const { return m_.rows(); }
    const QMat& mat() const { return m_; }
    const Rational& at(int i, int j) const { return m_.at(i, j); }
    bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

private:
    QMat m_;
};

// Exact inertia. Symmetric matrices have all-real eigenvalues, so Descartes
// sign variations on the characteristic polynomial count them exactly.
SignatureResult signature(const SymMatrix& m);

QMat solve_linear(const QMat& a, const QMat& b);  // unique solution of Ax = b

std::string to_string(const QMat& m);

}  // namespace realcert
