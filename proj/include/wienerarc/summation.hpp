#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace wienerarc {

// Kahan compensated accumulator; keeps sums of 1e7 terms drift-free.
class KahanSum {
public:
    void add(double x) noexcept {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const noexcept { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Consumes a series term by term and reports
//   value():          the average of the last `block` partial sums
//                     (block-Cesaro smoothing; block == 1 is the plain
//                     partial sum), and
//   tail_deviation(): the spread (max - min) of those block averages over
//                     the trailing 10% of the term range.
// The spread is the stability certificate attached to every reconstructed
// value; it is reported, never consumed silently.
class BlockAveragedSeries {
public:
    BlockAveragedSeries(std::int64_t n_terms, std::int64_t block)
        : block_(std::clamp<std::int64_t>(block, 1, n_terms)),
          watch_from_(std::clamp<std::int64_t>(n_terms - n_terms / 10 + 1, 1, n_terms)),
          ring_(static_cast<std::size_t>(block_), 0.0) {}

    void add(double term) {
        ++m_;
        partial_.add(term);
        const double s = partial_.value();
        const std::size_t slot = static_cast<std::size_t>(m_ % block_);
        if (m_ > block_) window_.add(-ring_[slot]);
        ring_[slot] = s;
        window_.add(s);
        if (m_ >= watch_from_) {
            const double sigma = window_.value() / static_cast<double>(std::min(m_, block_));
            hi_ = std::max(hi_, sigma);
            lo_ = std::min(lo_, sigma);
        }
    }

    double value() const {
        return m_ == 0 ? 0.0 : window_.value() / static_cast<double>(std::min(m_, block_));
    }
    double plain_sum() const { return partial_.value(); }
    double tail_deviation() const { return hi_ > lo_ ? hi_ - lo_ : 0.0; }
    std::int64_t block() const noexcept { return block_; }

private:
    std::int64_t block_;
    std::int64_t watch_from_;
    std::int64_t m_ = 0;
    KahanSum partial_;
    KahanSum window_;
    std::vector<double> ring_;
    double hi_ = -std::numeric_limits<double>::infinity();
    double lo_ = std::numeric_limits<double>::infinity();
};

// The ten running-average checkpoints m = max(1, i N / 10), i = 1..10, used
// by the Cesaro estimators to report how far the averages still drift.
struct Checkpoints {
    explicit Checkpoints(std::int64_t n) {
        for (int i = 0; i < 10; ++i) {
            at[i] = std::max<std::int64_t>(1, (static_cast<std::int64_t>(i) + 1) * n / 10);
        }
        at[9] = n;
    }
    std::int64_t at[10];
};

}  // namespace wienerarc
