#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ftwave {

/// The (at most two) basis functions that are nonzero at a point.
///
/// `lo`/`hi` are 0-based basis indices with w_lo + w_hi == 1 up to node rounding.
/// At a node, lo == hi and w_hi == 0.
struct Cover {
    std::size_t lo = 0;
    std::size_t hi = 0;
    double w_lo = 1.0;
    double w_hi = 0.0;
};

/// Uniform fuzzy partition of [a, b] by symmetric triangular basis functions.
///
/// Node i (0-based here, 1-based in file formats and printed output) sits at
/// a + h*i with the last node pinned to b. Basis i is the hat of half-width h
/// centred on node i; the first and last bases are half-triangles supported on
/// [a, x_1] and [x_{n-2}, b]. Immutable after construction.
class FuzzyPartition {
public:
    /// Throws std::invalid_argument on n < 2, b <= a, or non-finite endpoints.
    static FuzzyPartition uniform(double a, double b, std::size_t n);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double h() const noexcept { return h_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double node(std::size_t i) const { return nodes_.at(i); }

    /// Closed support [lo, hi] of basis i, clipped to [a, b].
    std::pair<double, double> support(std::size_t i) const;

    /// A_i(x). Throws std::out_of_range for a bad index or x outside [a, b].
    double basis(std::size_t i, double x) const;

    /// Both nonzero basis values at x. Throws std::out_of_range outside [a, b].
    Cover cover(double x) const;

    /// Indices (i, i+1) of the bases nonzero at x; (i, i) when x is a node.
    std::pair<std::size_t, std::size_t> covering_indices(double x) const {
        const Cover c = cover(x);
        return {c.lo, c.hi};
    }

    bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

    friend bool operator==(const FuzzyPartition&, const FuzzyPartition&) = default;

private:
    FuzzyPartition(double a, double b, std::vector<double> nodes);

    double a_;
    double b_;
    double h_;
    std::vector<double> nodes_;
};

}  // namespace ftwave
