#include "wienerarc/coefficients.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "wienerarc/errors.hpp"

namespace wienerarc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kCantorEps = 1e-14;
constexpr std::int64_t kMaxIndex = 2147483647;  // 2^31 - 1

std::complex<double> eval(const MeasureSpec& spec, std::int64_t n);

std::complex<double> eval_atomic(const AtomicMeasure& m, std::int64_t n) {
    double re = 0.0, im = 0.0;
    for (const Atom& a : m.atoms) {
        const std::complex<double> ph = unit_phase(-static_cast<double>(n) * a.position);
        re += a.weight * ph.real();
        im += a.weight * ph.imag();
    }
    return {re, im};
}

// c-hat(n) = (-1)^n prod_{k>=1} cos(2 n pi / 3^k), truncated at the depth
// where the dropped tail is below kCantorEps. Arguments are reduced with
// integer arithmetic (n mod 3^k), which keeps the cosines accurate for
// large n. For |n| <= 2^31 the depth stays below 37, so 3^k fits in 64 bits.
double eval_cantor(std::int64_t n) {
    const std::int64_t m = std::llabs(n);
    const int depth = cantor_product_depth(m, kCantorEps);
    double prod = 1.0;
    std::int64_t pow3 = 1;
    for (int k = 1; k <= depth; ++k) {
        pow3 *= 3;
        prod *= std::cos(kTwoPi * static_cast<double>(m % pow3) / static_cast<double>(pow3));
    }
    return (m % 2 == 0) ? prod : -prod;
}

std::complex<double> eval(const MeasureSpec& spec, std::int64_t n) {
    if (n == 0) return {1.0, 0.0};  // every node is a probability measure
    return std::visit(
        [n](const auto& node) -> std::complex<double> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                return eval_atomic(node, n);
            } else if constexpr (std::is_same_v<T, LebesgueMeasure>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, CantorMeasure>) {
                return {eval_cantor(n), 0.0};
            } else if constexpr (std::is_same_v<T, CosineDensity>) {
                const std::uint64_t k = static_cast<std::uint64_t>(std::llabs(n));
                if (k <= node.coeffs.size()) return {node.coeffs[k - 1] / 2.0, 0.0};
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, Mixture>) {
                std::complex<double> sum{0.0, 0.0};
                for (std::size_t i = 0; i < node.parts.size(); ++i) {
                    sum += node.weights[i] * eval(node.parts[i], n);
                }
                return sum;
            } else if constexpr (std::is_same_v<T, Convolution>) {
                return eval(node.factors[0], n) * eval(node.factors[1], n);
            } else {
                return std::conj(eval(node.inner[0], n));
            }
        },
        spec.node);
}

}  // namespace

double frac(double x) {
    double f = x - std::floor(x);
    return f < 1.0 ? f : 0.0;
}

std::complex<double> unit_phase(double x) {
    const double t = kTwoPi * frac(x);
    return {std::cos(t), std::sin(t)};
}

int cantor_product_depth(std::int64_t n, double eps) {
    if (n == 0) throw ValidationError("cantor_product_depth requires n != 0");
    if (!(eps > 0.0)) throw ValidationError("cantor_product_depth requires eps > 0");
    const double threshold = kTwoPi * static_cast<double>(std::llabs(n)) / std::sqrt(2.0 * eps);
    int depth = 1;
    double pow3 = 3.0;
    while (pow3 <= threshold) {
        pow3 *= 3.0;
        ++depth;
    }
    return depth;
}

CoefficientProvider::CoefficientProvider(MeasureSpec spec) : spec_(std::move(spec)) {}

CoefficientProvider CoefficientProvider::make(MeasureSpec spec, std::int64_t cache_horizon) {
    validate(spec);
    CoefficientProvider p(std::move(spec));
    p.continuous_ = is_continuous(p.spec_);
    p.spectrum_bound_ = wienerarc::spectrum_bound(p.spec_);
    if (cache_horizon > 0) {
        if (cache_horizon > kMaxIndex) {
            throw ValidationError("cache horizon exceeds 2^31 - 1");
        }
        p.cache_.resize(static_cast<std::size_t>(cache_horizon) + 1);
        for (std::int64_t n = 0; n <= cache_horizon; ++n) {
            p.cache_[static_cast<std::size_t>(n)] = eval(p.spec_, n);
        }
    }
    return p;
}

std::complex<double> CoefficientProvider::coefficient(std::int64_t n) const {
    if (n > kMaxIndex || n < -kMaxIndex) {
        throw ValidationError("coefficient index exceeds 2^31 - 1");
    }
    const std::int64_t m = n < 0 ? -n : n;
    if (static_cast<std::size_t>(m) < cache_.size()) {
        const std::complex<double> z = cache_[static_cast<std::size_t>(m)];
        return n < 0 ? std::conj(z) : z;
    }
    return eval(spec_, n);
}

}  // namespace wienerarc
