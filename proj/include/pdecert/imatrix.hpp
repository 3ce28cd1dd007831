#pragma once

#include <vector>

#include "pdecert/interval.hpp"

namespace pdecert {

using IVec = std::vector<Interval>;

/// Dense interval matrix, row-major.
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Interval> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Interval(0.0)) {}
    static IMat identity(int n);

    Interval& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Interval& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    IVec column(int j) const;
    void set_column(int j, const IVec& v);
};

IMat operator+(const IMat& A, const IMat& B);
IMat operator*(const IMat& A, const IMat& B);
IMat operator*(const Interval& c, const IMat& A);
IVec operator*(const IMat& A, const IVec& x);

IVec vadd(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vscale(const IVec& a, const Interval& c);
IVec midpoint(const IVec& a);
IMat hull(const IMat& A, const IMat& B);
/// Entrywise intersection; throws std::runtime_error if some entry is empty.
IMat intersect(const IMat& A, const IMat& B);
IVec intersect(const IVec& a, const IVec& b);

/// Box [-M,M] with M >= |Phi(t)| entrywise, t in [0,tau], for every
/// fundamental matrix of x' = A(t)x with A(t) in J.  Uses the Metzler majorant of J with the
/// diagonal clipped at zero, which makes exp(t*M) monotone in t.
IMat fundamental_bound(const IMat& J, double tau);

}  // namespace pdecert
