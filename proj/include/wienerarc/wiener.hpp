#pragma once

#include <cstdint>

#include "wienerarc/coefficients.hpp"

namespace wienerarc {

// Averaging window for the Cesaro estimate of mu{x}:
//   Symmetric: indices -N..N,  OneSided: indices 1..N.
enum class Window { Symmetric, OneSided };

// One point-mass estimate together with its convergence diagnostic.
struct AtomEstimate {
    double value = 0.0;
    Window window = Window::Symmetric;
    std::int64_t terms = 0;
    // Largest deviation of the running averages sampled at N/10, 2N/10, ...
    // from the final average; a cheap drift certificate for the limit.
    double oscillation = 0.0;
};

// mu{x} as the Cesaro average of mu-hat(n) e(nx) over the chosen window.
// The real part is taken term-wise: the limit is a real mass, and for the
// symmetric window this halves the work via hermitian symmetry
// (the n and -n terms have equal real parts).
AtomEstimate atom_mass(const CoefficientProvider& provider, double x, Window window,
                       std::int64_t terms);

}  // namespace wienerarc
