#include "ftwave/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ftwave {

UniformAxis UniformAxis::make(double lo, double hi, std::size_t count) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("axis: endpoints must be finite");
    if (count < 2) throw std::invalid_argument("axis: requires at least 2 samples, got " + std::to_string(count));
    if (!(hi > lo)) throw std::invalid_argument("axis: requires hi > lo");
    return UniformAxis{lo, hi, count};
}

std::vector<double> UniformAxis::coordinates() const {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = (*this)[k];
    return out;
}

UniformAxis UniformAxis::refined(std::size_t factor) const {
    if (factor == 0) throw std::invalid_argument("axis: refinement factor must be >= 1");
    return UniformAxis::make(lo, hi, (count - 1) * factor + 1);
}

namespace {
void check_values(std::span<const double> values, std::size_t expected) {
    if (values.size() != expected)
        throw std::invalid_argument("field: expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(values.size()));
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("field: values must be finite");
}
}  // namespace

SampledField::SampledField(UniformAxis x, std::vector<double> values) : x_(x), values_(std::move(values)) {
    x_ = UniformAxis::make(x.lo, x.hi, x.count);
    check_values(values_, x_.count);
}

SampledField::SampledField(UniformAxis x, UniformAxis t, std::vector<double> values)
    : x_(x), t_(t), values_(std::move(values)) {
    x_ = UniformAxis::make(x.lo, x.hi, x.count);
    t_ = UniformAxis::make(t.lo, t.hi, t.count);
    check_values(values_, x_.count * t_->count);
}

}  // namespace ftwave
