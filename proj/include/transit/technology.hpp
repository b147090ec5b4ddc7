#pragma once

#include <string>
#include <vector>

#include "transit/error.hpp"

namespace transit {

/// Fine charged per inspection event without a valid ticket.
class FineLevel {
public:
    explicit FineLevel(double value);
    double value() const { return value_; }

private:
    double value_;
};

// Inspection technology phi: maps inspector mass on a segment to inspection
// intensity. Monotonically increasing with phi(0) >= 0.
class MonitoringTechnology {
public:
    enum class Kind { linear, power, sampled };

    /// phi(m) = k * m with k > 0.
    static MonitoringTechnology linear(double k);
    /// phi(m) = m.
    static MonitoringTechnology identity();
    /// phi(m) = m^gamma with 0 < gamma <= 1; strictly concave for gamma < 1.
    static MonitoringTechnology power(double gamma);
    /// Piecewise-linear curve through (mass, intensity) samples.
    static MonitoringTechnology sampled(std::vector<double> masses,
                                        std::vector<double> intensities);

    double value(double mass) const;
    double derivative(double mass) const;

    Kind kind() const { return kind_; }
    bool is_linear() const { return kind_ == Kind::linear; }
    /// Linear with unit slope; the only case where fine calibration by
    /// division is exact.
    bool is_identity() const;
    bool strictly_concave() const { return kind_ == Kind::power && gamma_ < 1.0; }

    double linear_slope() const { return k_; }
    double power_exponent() const { return gamma_; }

    std::string describe() const;

private:
    MonitoringTechnology() = default;

    Kind kind_ = Kind::linear;
    double k_ = 1.0;
    double gamma_ = 1.0;
    std::vector<double> xs_, ys_;
};

}  // namespace transit
