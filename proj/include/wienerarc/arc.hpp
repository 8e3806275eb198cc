#pragma once

#include <cstdint>

#include "wienerarc/coefficients.hpp"
#include "wienerarc/wiener.hpp"

namespace wienerarc {

// Half-open arc [a,b) on the circle identified with [0,1).
struct CircleArc {
    double a = 0.0;
    double b = 1.0;
};

// Throws ValidationError unless 0 <= a < b <= 1.
void validate(const CircleArc& arc);

// How the Cesaro limit term of the arc series is realized.
//   AtomDecomposition: (mu{a} - mu{b})/2 via the one-sided Wiener estimator
//                      (the default; comes with its own drift diagnostic).
//   DirectCesaro:      the raw mean (1/2N) sum_j mu-hat(j)(e(ja) - e(jb)).
//   SkippedContinuous: zero, valid only with a continuity certificate.
enum class LimitMethod { AtomDecomposition, DirectCesaro, SkippedContinuous };

// Smoothing of the main series partial sums. Auto resolves to None for
// finite-spectrum measures (their partial sums are eventually constant) and
// to BlockCesaro with block = N/10 otherwise.
enum class SmoothingKind { Auto, None, BlockCesaro };

struct ArcOptions {
    LimitMethod limit_method = LimitMethod::AtomDecomposition;
    SmoothingKind smoothing = SmoothingKind::Auto;
    std::int64_t block = 0;  // 0 = N/10 when BlockCesaro
};

// A reconstructed value plus truncation/limit-term diagnostics. The
// tail_estimate is a heuristic stability certificate (series spread over
// the last 10% of terms plus the limit-term oscillation); it is reported,
// never silently consumed.
struct SeriesResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double tail_estimate = 0.0;
    double limit_term = 0.0;
    double limit_oscillation = 0.0;
    LimitMethod limit_method = LimitMethod::AtomDecomposition;
    SmoothingKind smoothing = SmoothingKind::None;
    std::int64_t block = 0;  // resolved block size, 0 when unsmoothed
};

// Closed form of sum_{n>=1} sin(2 pi n x)/n: pi (1/2 - frac(x)) away from
// integers, 0 at integers.
double sawtooth(double x);

// mu[a,b) from the Fourier coefficients:
//   value = (b-a) + (1/pi) sum_{n<=N} Im(mu-hat(n)/n (e(nb)-e(na))) + limit.
// The Lebesgue component is folded into the closed-form (b-a) via the
// sawtooth identity, so the summed series carries mu-hat(n) alone. Arcs
// with a = 0 delegate to cdf(b).
SeriesResult arc_measure(const CoefficientProvider& provider, const CircleArc& arc,
                         std::int64_t terms, const ArcOptions& options = {});

// D_mu(x) = mu[0,x):
//   value = x + (1/pi) sum_{n<=N} Im(mu-hat(n)/n (e(nx)-1)) + limit,
// with limit (mu{0} - mu{x})/2 under AtomDecomposition. x = 0 and x = 1
// return 0 and 1 exactly.
SeriesResult cdf(const CoefficientProvider& provider, double x, std::int64_t terms,
                 const ArcOptions& options = {});

// (mu * conj(mu))[a,b) for a continuous mu:
//   value = (b-a) + (1/pi) sum_{n<=N} |mu-hat(n)|^2 (sin 2 pi n b - sin 2 pi n a)/n.
// Requires the continuity certificate; throws CertificateError otherwise.
SeriesResult autocorrelation_arc(const CoefficientProvider& provider, const CircleArc& arc,
                                 std::int64_t terms);

// The raw theorem form: series over (mu-hat(n) - 1) plus the Cesaro limit
// term evaluated directly, with the constant 1 added when a = 0. Converges
// more slowly than arc_measure (the -1 component is summed numerically);
// kept as an independent cross-check of the backbone.
SeriesResult arc_measure_direct(const CoefficientProvider& provider, const CircleArc& arc,
                                std::int64_t terms);

}  // namespace wienerarc
