#include "pdecert/imatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdecert {

IMat IMat::identity(int n) {
    IMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = Interval(1.0);
    return I;
}

IVec IMat::column(int j) const {
    IVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

void IMat::set_column(int j, const IVec& v) {
    for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

IMat operator+(const IMat& A, const IMat& B) {
    IMat C(A.rows, A.cols);
    for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = A.a[k] + B.a[k];
    return C;
}

IMat operator*(const IMat& A, const IMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    IMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Interval& aik = A(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Interval& bkj = B(k, j);
                if (!bkj.is_zero()) C(i, j) += aik * bkj;
            }
        }
    return C;
}

IMat operator*(const Interval& c, const IMat& A) {
    IMat C = A;
    for (auto& x : C.a) x = c * x;
    return C;
}

IVec operator*(const IMat& A, const IVec& x) {
    IVec y(A.rows, Interval(0.0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (!x[j].is_zero() && !A(i, j).is_zero()) y[i] += A(i, j) * x[j];
    return y;
}

IVec vadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec vsub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec vscale(const IVec& a, const Interval& c) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

IVec midpoint(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Interval(a[i].mid());
    return r;
}

IMat hull(const IMat& A, const IMat& B) {
    IMat C(A.rows, A.cols);
    for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = hull(A.a[k], B.a[k]);
    return C;
}

namespace {

Interval cut(const Interval& x, const Interval& y) {
    auto z = pdecert::intersect(x, y);
    if (!z) throw std::runtime_error("empty intersection of enclosures");
    return *z;
}

}  // namespace

IMat intersect(const IMat& A, const IMat& B) {
    IMat C(A.rows, A.cols);
    for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = cut(A.a[k], B.a[k]);
    return C;
}

IVec intersect(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = cut(a[i], b[i]);
    return r;
}

IMat fundamental_bound(const IMat& J, double tau) {
    const int n = J.rows;
    // N = tau * majorant, all entries >= 0, rounded up
    std::vector<double> N(static_cast<size_t>(n) * n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = i == j ? std::max(0.0, J(i, j).hi) : J(i, j).mag();
            v = rnd::mul_up(v, tau);
            N[i * n + j] = v;
            row = rnd::add_up(row, v);
        }
        norm = std::max(norm, row);
    }
    if (!std::isfinite(norm)) throw std::domain_error("unbounded Jacobian enclosure");
    int K = std::max(8, static_cast<int>(std::ceil(2.0 * norm)) + 8);
    // S = sum_{k<=K} N^k/k!, computed upward (all terms nonnegative)
    std::vector<double> S(static_cast<size_t>(n) * n, 0.0), T(S.size(), 0.0), U(S.size());
    for (int i = 0; i < n; ++i) S[i * n + i] = T[i * n + i] = 1.0;
    for (int k = 1; k <= K; ++k) {
        std::fill(U.begin(), U.end(), 0.0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                double t = T[i * n + l];
                if (t == 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    double nj = N[l * n + j];
                    if (nj != 0.0) U[i * n + j] = rnd::add_up(U[i * n + j], rnd::mul_up(t, nj));
                }
            }
        for (size_t q = 0; q < U.size(); ++q) {
            T[q] = rnd::div_up(U[q], double(k));
            S[q] = rnd::add_up(S[q], T[q]);
        }
    }
    // remainder sum_{k>K} norm^k/k! <= norm^{K+1}/(K+1)! / (1 - norm/(K+2))
    double rem = 1.0;
    for (int k = 1; k <= K + 1; ++k) rem = rnd::div_up(rnd::mul_up(rem, norm), double(k));
    rem = rnd::div_up(rem, rnd::sub_down(1.0, rnd::div_up(norm, double(K + 2))));
    IMat M(n, n);
    for (size_t q = 0; q < S.size(); ++q) M.a[q] = ball(rnd::add_up(S[q], rem));
    return M;
}

}  // namespace pdecert
