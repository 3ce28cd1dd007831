#pragma once

#include <vector>

#include "pdecert/tailvec.hpp"

namespace pdecert {

/// Product of two sine series as a cosine series.  Head length of the
/// result is 2n, modes beyond 2n are bounded by D/k^s.
TailVector conv_sin_sin(const TailVector& u, const TailVector& v);

/// Product of a cosine series and a sine series as a sine series.
TailVector conv_cos_sin(const TailVector& u, const TailVector& v);

/// Cosine series u (exponent s1 > 1) times sine series v with growing
/// coefficients (s2 <= 0, s1 + s2 > 1).  Result tail exponent is s2.
TailVector conv_cos_sin_unbounded(const TailVector& u, const TailVector& v);

/// Cosine series u (exponent s1 > 1) times slowly decaying sine series v
/// (0 < s2 <= 1, s1 - s2 > 1).  Result tail exponent is s2.
TailVector conv_cos_sin_slow(const TailVector& u, const TailVector& v);

/// Picks the cos*sin variant from the exponents of u and v.
TailVector conv_cos_sin_any(const TailVector& u, const TailVector& v);

/// Termwise x-derivative: sine <-> cosine, tail exponent lowered by one.
TailVector d_dx(const TailVector& v, bool require_bounded = false);

/// Finite Galerkin products on explicit coefficient arrays (no tails).
/// u, v hold sine modes 1..m at indices 0..m-1; out holds cosine modes 0..K.
void galerkin_sin_sin(const std::vector<Interval>& u, const std::vector<Interval>& v, int K,
                      std::vector<Interval>& out);
/// c holds cosine modes 0..mc; v sine modes 1..m; out sine modes 1..K.
void galerkin_cos_sin(const std::vector<Interval>& c, const std::vector<Interval>& v, int K,
                      std::vector<Interval>& out);

}  // namespace pdecert
