#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdecert/interval.hpp"

namespace pdecert {

struct BasisMismatch : std::invalid_argument {
    BasisMismatch() : std::invalid_argument("basis mismatch") {}
};
struct ExponentNotSummable : std::domain_error {
    explicit ExponentNotSummable(const std::string& w = "tail exponent not summable") : std::domain_error(w) {}
};
struct UnboundedRepresentation : std::domain_error {
    UnboundedRepresentation() : std::domain_error("norm of an unbounded representation") {}
};
struct HeadLengthMismatch : std::invalid_argument {
    HeadLengthMismatch() : std::invalid_argument("head length mismatch") {}
};
struct AdmissibilityViolation : std::domain_error {
    explicit AdmissibilityViolation(const std::string& w = "exponent admissibility violated") : std::domain_error(w) {}
};

enum class Basis { Sine, Cosine };

/// Which mode indices may be nonzero. Odd: only odd k; Even: only even k
/// (including the cosine constant).
enum class Parity { None, Odd, Even };

Parity combine_parity(Parity a, Parity b);
bool parity_allows(Parity p, long k);

/// Fourier coefficients with an explicit head (modes 1..n) and a tail bound:
/// mode k > n lies in C / k^s.  The cosine constant term is kept in c0.
struct TailVector {
    Basis basis = Basis::Sine;
    Parity parity = Parity::None;
    Interval c0{0.0};
    std::vector<Interval> head;
    Interval C{0.0};
    double s = 2.0;

    int n() const { return static_cast<int>(head.size()); }
    bool allowed(long k) const { return parity_allows(parity, k); }
    /// Enclosure of coefficient k (k = 0 is the cosine constant).
    Interval coeff(long k) const;
    bool bounded() const { return s > 1.0 || C.is_zero(); }
    bool tail_is_zero() const { return C.is_zero(); }

    static TailVector zero(Basis b, int n, double s, Parity p = Parity::None);
    /// Head-only vector from point or interval coefficients of modes 1..n.
    static TailVector from_head(Basis b, std::vector<Interval> head, Interval C = Interval(0.0), double s = 2.0,
                                Parity p = Parity::None);

    /// Forces forbidden-parity head entries to exactly zero.
    void enforce_parity();
};

/// Tail of u+v at a common head length n (three cases of the addition rule).
void tail_add(const Interval& Ca, double sa, const Interval& Cb, double sb, int n, Interval& C, double& s);

TailVector vadd(const TailVector& a, const TailVector& b);
TailVector vsub(const TailVector& a, const TailVector& b);
TailVector vscale(const TailVector& a, const Interval& c);

/// Same set with slower decay exponent s_new < s.
TailVector reindex_lower_s(const TailVector& a, double s_new);
/// Materializes tail modes n+1..n_new as explicit head intervals.
TailVector extend_head(const TailVector& a, int n_new);
/// Folds head modes k_new+1..n into the tail constant.
TailVector absorb_head(const TailVector& a, int k_new);
/// extend_head or absorb_head as needed.
TailVector with_head(const TailVector& a, int n_new);
/// Modes 1..m only (zero tail) / all modes except 1..m.
TailVector head_part(const TailVector& a, int m);
TailVector tail_part(const TailVector& a, int m);
/// Tail constant for exponent s_new valid from mode n+1 on.
Interval tail_constant_at(const TailVector& a, double s_new);

/// Upper bound |C| n^{1-s}/(s-1) on the sum of |c_i| over i > n.
Interval tail_sum_bound(const Interval& C, double s, long n);
/// Upper bound of the C0(0,pi) norm of every member.
Interval sup_norm_bound(const TailVector& a);
/// Interval containing sum |u_k|^2 k^4 for every member (s > 5/2).
Interval h2_norm_sq_bound(const TailVector& a);

bool vsubset(const TailVector& a, const TailVector& b);
bool vsubset_interior(const TailVector& a, const TailVector& b);
TailVector vintersect(const TailVector& a, const TailVector& b);
TailVector vhull(const TailVector& a, const TailVector& b);

/// Largest head magnitude; used by heuristics.
double head_max_mag(const TailVector& a);

/// Certificate lines "k: [lo,hi]" then "tail: C=[lo,hi] s=<s> n=<n>".
std::string to_certificate(const TailVector& a);

}  // namespace pdecert
