#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace wienerarc {

struct MeasureSpec;

// One point mass: position in [0,1), weight > 0.
struct Atom {
    double position = 0.0;
    double weight = 0.0;
};

// Purely atomic measure; weights sum to 1, positions pairwise distinct.
struct AtomicMeasure {
    std::vector<Atom> atoms;
};

// Normalized Lebesgue measure on the circle.
struct LebesgueMeasure {};

// The uniform measure on the middle-thirds Cantor set.
struct CantorMeasure {};

// Density 1 + sum_k a_k cos(2 pi k t) with sum |a_k| < 1, so the density
// stays positive. An empty coefficient list is the constant density 1.
struct CosineDensity {
    std::vector<double> coeffs;  // a_1 .. a_K
};

// Convex combination of sub-measures; weights positive, summing to 1.
struct Mixture {
    std::vector<double> weights;
    std::vector<MeasureSpec> parts;  // same length as weights
};

// Convolution of exactly two measures (addition of independent samples
// mod 1); coefficients multiply.
struct Convolution {
    std::vector<MeasureSpec> factors;  // exactly two
};

// Pushforward under x -> 1 - x (mod 1); coefficients conjugate.
struct Conjugate {
    std::vector<MeasureSpec> inner;  // exactly one
};

// Symbolic description of a Borel probability measure on the circle,
// identified with [0,1).
struct MeasureSpec {
    std::variant<AtomicMeasure, LebesgueMeasure, CantorMeasure, CosineDensity,
                 Mixture, Convolution, Conjugate>
        node;
};

// Checks every structural invariant; throws ValidationError on the first
// violation. All other entry points assume a validated spec.
void validate(const MeasureSpec& spec);

// True iff the measure provably has no atoms: Lebesgue, Cantor and cosine
// densities are continuous; mixtures need every part continuous; a
// convolution is continuous as soon as one factor is.
bool is_continuous(const MeasureSpec& spec);

// True iff only finitely many Fourier coefficients are nonzero.
bool has_finite_spectrum(const MeasureSpec& spec);

// Largest |n| that can carry a nonzero coefficient for finite-spectrum
// specs; -1 otherwise.
std::int64_t spectrum_bound(const MeasureSpec& spec);

// Convenience constructors (no validation; call validate() or go through
// CoefficientProvider::make).
MeasureSpec lebesgue();
MeasureSpec cantor_measure();
MeasureSpec dirac(double position);
MeasureSpec atomic(std::vector<Atom> atoms);
MeasureSpec cosine_density(std::vector<double> coeffs);
MeasureSpec mixture(std::vector<double> weights, std::vector<MeasureSpec> parts);
MeasureSpec convolution(MeasureSpec lhs, MeasureSpec rhs);
MeasureSpec conjugate(MeasureSpec inner);

}  // namespace wienerarc
