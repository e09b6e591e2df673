#include "ftwave/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ftwave {

FuzzyPartition FuzzyPartition::uniform(double a, double b, std::size_t n) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("fuzzy partition: endpoints must be finite");
    if (n < 2) throw std::invalid_argument("fuzzy partition: requires n >= 2 nodes, got " + std::to_string(n));
    if (!(b > a)) throw std::invalid_argument("fuzzy partition: requires b > a");
    std::vector<double> nodes(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) nodes[i] = a + h * static_cast<double>(i);
    nodes[n - 1] = b;
    return FuzzyPartition(a, b, std::move(nodes));
}

FuzzyPartition::FuzzyPartition(double a, double b, std::vector<double> nodes)
    : a_(a), b_(b), h_((b - a) / static_cast<double>(nodes.size() - 1)), nodes_(std::move(nodes)) {}

std::pair<double, double> FuzzyPartition::support(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("basis index out of range");
    const double lo = i == 0 ? a_ : nodes_[i - 1];
    const double hi = i + 1 == size() ? b_ : nodes_[i + 1];
    return {lo, hi};
}

Cover FuzzyPartition::cover(double x) const {
    if (!contains(x)) throw std::out_of_range("point outside the partition interval");
    const std::size_t n = size();
    const double s = (x - a_) / h_;
    std::size_t k = s <= 0.0 ? 0 : static_cast<std::size_t>(s);
    if (k > n - 2) k = n - 2;
    // The estimate can be off by one near nodes; settle it against the stored nodes.
    while (k > 0 && x < nodes_[k]) --k;
    while (k + 2 < n && x >= nodes_[k + 1]) ++k;

    if (x == nodes_[k]) return {k, k, 1.0, 0.0};
    if (x == nodes_[k + 1]) return {k + 1, k + 1, 1.0, 0.0};
    // Each weight is 1 - |x - x_i|/h about its own node, so reflections about
    // a node give identical values; the clamp absorbs node rounding.
    const double w_lo = std::max(0.0, 1.0 - (x - nodes_[k]) / h_);
    const double w_hi = std::max(0.0, 1.0 - (nodes_[k + 1] - x) / h_);
    return {k, k + 1, w_lo, w_hi};
}

double FuzzyPartition::basis(std::size_t i, double x) const {
    if (i >= size()) throw std::out_of_range("basis index out of range");
    const Cover c = cover(x);
    if (i == c.lo) return c.w_lo;
    if (i == c.hi) return c.w_hi;
    return 0.0;
}

}  // namespace ftwave
