#pragma once

// Sup-norm estimates with one-sided certification.
//
// Every estimate reports the maximum modulus over an equispaced grid (a lower
// bound on the true sup, up to rounding) and, where available, a certified
// upper bound.
//
// For K = {(e^z, e^{alpha z}) : |z| <= 1} and circles |t| = r the function is
// the exponential sum f(t) = P(e^t, e^{alpha t}), which is entire, so its sup
// over the closed disk is attained on the boundary circle. Between adjacent
// grid points (arc distance 2 pi r / M) |f| cannot grow by more than
// (pi r / M) * sup|f'|, and sup|f'| on the disk is bounded by the smaller of
//   sum |c| |a| e^{r|a|}
// and the Taylor majorant sum_m |f^{(m)}(0)| r^{m-1}/(m-1)! with an explicit
// tail bound. The Taylor form matters for functions with heavy cancellation
// (the witness polynomial vanishes to order N at 0).
//
// For the bidisk the sup of a polynomial is attained on the torus
// |z| = |w| = 1 (maximum principle in each variable separately), and the
// coefficient sum bounds it from above.

#include "bwexp/core.hpp"

#include <optional>
#include <string>

namespace bwexp {

enum class NormMethod { curve_k, circle, bidisk_torus };

std::string to_string(NormMethod m);

struct NormEstimate {
    Real grid_max;
    std::optional<Real> certified_upper;
    int grid_points = 0;
    NormMethod method = NormMethod::circle;
};

inline constexpr int kDefaultCircleGrid = 512;
inline constexpr int kDefaultTorusGrid = 256;

/// Bound on sup |f'| over the closed disk |t| <= radius.
Real derivative_bound(const ExpSum& f, const Real& radius);

/// Sup of |P(e^t, e^{alpha t})| over |t| <= 1 from M equispaced points.
NormEstimate norm_on_K(const Poly2& p, const AlphaParam& alpha, int grid, Precision prec = {});

/// Sup of |f| on |t| = r from M equispaced points.
NormEstimate norm_on_circle(const ExpSum& f, const Real& r, int grid, Precision prec = {});

/// Sup of |P| on the closed bidisk from the M x M torus grid;
/// certified_upper = sum |c_jk|.
NormEstimate norm_on_bidisk(const Poly2& p, int grid, Precision prec = {});

/// normK * En * exp(n * log+ max(|z|, |w|)).
Real bw_envelope(const Complex& z, const Complex& w, const Real& norm_k, const Real& en, int n);

}  // namespace bwexp
