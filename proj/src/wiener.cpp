#include "wienerarc/wiener.hpp"

#include <algorithm>
#include <cmath>

#include "wienerarc/errors.hpp"
#include "wienerarc/summation.hpp"

namespace wienerarc {

AtomEstimate atom_mass(const CoefficientProvider& provider, double x, Window window,
                       std::int64_t terms) {
    if (terms < 1) throw ValidationError("atom_mass requires terms >= 1");
    if (!(x >= 0.0 && x < 1.0)) throw ValidationError("atom position must lie in [0,1)");

    const Checkpoints cp(terms);
    double averages[10] = {};
    int next = 0;

    KahanSum sum;  // sum_{n=1..m} Re(mu-hat(n) e(nx))
    for (std::int64_t n = 1; n <= terms; ++n) {
        const std::complex<double> z = provider.coefficient(n);
        const std::complex<double> ph = unit_phase(static_cast<double>(n) * x);
        sum.add(z.real() * ph.real() - z.imag() * ph.imag());
        while (next < 10 && n == cp.at[next]) {
            const double s = sum.value();
            averages[next] = window == Window::Symmetric
                                 ? (1.0 + 2.0 * s) / static_cast<double>(2 * n + 1)
                                 : s / static_cast<double>(n);
            ++next;
        }
    }

    AtomEstimate estimate;
    estimate.value = averages[9];
    estimate.window = window;
    estimate.terms = terms;
    double osc = 0.0;
    for (int i = 0; i < 9; ++i) osc = std::max(osc, std::abs(averages[i] - averages[9]));
    estimate.oscillation = osc;
    return estimate;
}

}  // namespace wienerarc
