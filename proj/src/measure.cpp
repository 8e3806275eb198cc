#include "wienerarc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wienerarc/errors.hpp"

namespace wienerarc {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

void validate_node(const MeasureSpec& spec, int depth);

void validate_atomic(const AtomicMeasure& m) {
    if (m.atoms.empty()) {
        throw ValidationError("atomic measure needs at least one atom");
    }
    double sum = 0.0;
    for (const Atom& a : m.atoms) {
        if (!(a.position >= 0.0 && a.position < 1.0)) {
            throw ValidationError("atom position " + std::to_string(a.position) +
                                  " outside [0,1)");
        }
        if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
            throw ValidationError("atom weight must be positive and finite");
        }
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw ValidationError("atom weights sum to " + std::to_string(sum) +
                              ", expected 1");
    }
    std::vector<double> positions;
    positions.reserve(m.atoms.size());
    for (const Atom& a : m.atoms) positions.push_back(a.position);
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
        throw ValidationError("duplicate atom positions");
    }
}

void validate_density(const CosineDensity& d) {
    double abs_sum = 0.0;
    for (double a : d.coeffs) {
        if (!std::isfinite(a)) throw ValidationError("density coefficient not finite");
        abs_sum += std::abs(a);
    }
    if (abs_sum >= 1.0) {
        throw ValidationError("cosine density needs sum |a_k| < 1, got " +
                              std::to_string(abs_sum));
    }
}

void validate_mixture(const Mixture& m, int depth) {
    if (m.parts.empty() || m.parts.size() != m.weights.size()) {
        throw ValidationError("mixture needs matching, nonempty weight/part lists");
    }
    double sum = 0.0;
    for (double w : m.weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ValidationError("mixture weight must be positive and finite");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw ValidationError("mixture weights sum to " + std::to_string(sum) +
                              ", expected 1");
    }
    for (const MeasureSpec& part : m.parts) validate_node(part, depth + 1);
}

void validate_node(const MeasureSpec& spec, int depth) {
    if (depth > 64) throw ValidationError("measure nesting too deep");
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                validate_atomic(node);
            } else if constexpr (std::is_same_v<T, CosineDensity>) {
                validate_density(node);
            } else if constexpr (std::is_same_v<T, Mixture>) {
                validate_mixture(node, depth);
            } else if constexpr (std::is_same_v<T, Convolution>) {
                if (node.factors.size() != 2) {
                    throw ValidationError("convolution needs exactly two factors");
                }
                validate_node(node.factors[0], depth + 1);
                validate_node(node.factors[1], depth + 1);
            } else if constexpr (std::is_same_v<T, Conjugate>) {
                if (node.inner.size() != 1) {
                    throw ValidationError("conjugate needs exactly one operand");
                }
                validate_node(node.inner[0], depth + 1);
            }
        },
        spec.node);
}

}  // namespace

void validate(const MeasureSpec& spec) { validate_node(spec, 0); }

bool is_continuous(const MeasureSpec& spec) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomicMeasure>) {
                return node.atoms.empty();
            } else if constexpr (std::is_same_v<T, Mixture>) {
                return std::all_of(node.parts.begin(), node.parts.end(),
                                   [](const MeasureSpec& p) { return is_continuous(p); });
            } else if constexpr (std::is_same_v<T, Convolution>) {
                return is_continuous(node.factors[0]) || is_continuous(node.factors[1]);
            } else if constexpr (std::is_same_v<T, Conjugate>) {
                return is_continuous(node.inner[0]);
            } else {
                return true;  // Lebesgue, Cantor, CosineDensity
            }
        },
        spec.node);
}

bool has_finite_spectrum(const MeasureSpec& spec) { return spectrum_bound(spec) >= 0; }

std::int64_t spectrum_bound(const MeasureSpec& spec) {
    return std::visit(
        [](const auto& node) -> std::int64_t {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, LebesgueMeasure>) {
                return 0;
            } else if constexpr (std::is_same_v<T, CosineDensity>) {
                return static_cast<std::int64_t>(node.coeffs.size());
            } else if constexpr (std::is_same_v<T, Mixture>) {
                std::int64_t bound = 0;
                for (const MeasureSpec& p : node.parts) {
                    std::int64_t b = spectrum_bound(p);
                    if (b < 0) return -1;
                    bound = std::max(bound, b);
                }
                return bound;
            } else if constexpr (std::is_same_v<T, Convolution>) {
                // The product of coefficients vanishes as soon as one factor does.
                std::int64_t b0 = spectrum_bound(node.factors[0]);
                std::int64_t b1 = spectrum_bound(node.factors[1]);
                if (b0 < 0) return b1;
                if (b1 < 0) return b0;
                return std::min(b0, b1);
            } else if constexpr (std::is_same_v<T, Conjugate>) {
                return spectrum_bound(node.inner[0]);
            } else {
                return -1;  // Atomic, Cantor
            }
        },
        spec.node);
}

MeasureSpec lebesgue() { return MeasureSpec{LebesgueMeasure{}}; }

MeasureSpec cantor_measure() { return MeasureSpec{CantorMeasure{}}; }

MeasureSpec dirac(double position) {
    return MeasureSpec{AtomicMeasure{{Atom{position, 1.0}}}};
}

MeasureSpec atomic(std::vector<Atom> atoms) {
    return MeasureSpec{AtomicMeasure{std::move(atoms)}};
}

MeasureSpec cosine_density(std::vector<double> coeffs) {
    return MeasureSpec{CosineDensity{std::move(coeffs)}};
}

MeasureSpec mixture(std::vector<double> weights, std::vector<MeasureSpec> parts) {
    return MeasureSpec{Mixture{std::move(weights), std::move(parts)}};
}

MeasureSpec convolution(MeasureSpec lhs, MeasureSpec rhs) {
    Convolution c;
    c.factors.push_back(std::move(lhs));
    c.factors.push_back(std::move(rhs));
    return MeasureSpec{std::move(c)};
}

MeasureSpec conjugate(MeasureSpec inner) {
    Conjugate c;
    c.inner.push_back(std::move(inner));
    return MeasureSpec{std::move(c)};
}

}  // namespace wienerarc
