#pragma once

#include <stdexcept>
#include <string>

namespace hhv {

// Endpoint pair on the positive half-line. Construction enforces 0 < a < b.
class Interval {
public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!(a > 0.0) || !(a < b))
            throw std::invalid_argument("require 0 < a < b, got a=" + std::to_string(a) +
                                        " b=" + std::to_string(b));
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double width() const { return b_ - a_; }
    double midpoint() const { return 0.5 * (a_ + b_); }

    bool contains(double x) const { return x >= a_ && x <= b_; }

private:
    double a_;
    double b_;
};

}  // namespace hhv
