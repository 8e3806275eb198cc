#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wienerarc/measure.hpp"

namespace wienerarc {

// Fractional part in [0,1).
double frac(double x);

// e(x) = exp(2 pi i x). The argument is reduced to [0,1) before scaling by
// 2 pi, so large n*x does not lose precision inside the trig call.
std::complex<double> unit_phase(double x);

// Smallest K with 2 pi |n| / 3^K < sqrt(2 eps): every cosine factor dropped
// beyond depth K in the Cantor coefficient product differs from 1 by less
// than eps (via 1 - cos t <= t^2/2).
int cantor_product_depth(std::int64_t n, double eps);

// Uniform access to the Fourier coefficients mu-hat(n) of a validated
// measure. Immutable after construction and safe to share across threads.
class CoefficientProvider {
public:
    // Validates the spec and derives the continuity certificate. A positive
    // cache_horizon precomputes coefficients 0..horizon for workloads that
    // sweep the same index range repeatedly.
    static CoefficientProvider make(MeasureSpec spec, std::int64_t cache_horizon = 0);

    // mu-hat(n) in closed form per family; n = 0 is exactly 1 for every
    // node, all being probability measures. Requires |n| <= 2^31 - 1.
    std::complex<double> coefficient(std::int64_t n) const;

    bool is_continuous() const noexcept { return continuous_; }
    bool has_finite_spectrum() const noexcept { return spectrum_bound_ >= 0; }
    std::int64_t spectrum_bound() const noexcept { return spectrum_bound_; }
    const MeasureSpec& spec() const noexcept { return spec_; }

private:
    explicit CoefficientProvider(MeasureSpec spec);

    MeasureSpec spec_;
    bool continuous_ = false;
    std::int64_t spectrum_bound_ = -1;
    std::vector<std::complex<double>> cache_;
};

}  // namespace wienerarc
