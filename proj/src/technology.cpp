#include "transit/technology.hpp"

#include <cmath>
#include <limits>

namespace transit {

FineLevel::FineLevel(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0)
        throw ValidationError("fine level must be finite and non-negative");
}

MonitoringTechnology MonitoringTechnology::linear(double k) {
    if (!std::isfinite(k) || k <= 0.0)
        throw ValidationError("linear technology requires slope k > 0");
    MonitoringTechnology t;
    t.kind_ = Kind::linear;
    t.k_ = k;
    return t;
}

MonitoringTechnology MonitoringTechnology::identity() { return linear(1.0); }

MonitoringTechnology MonitoringTechnology::power(double gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0)
        throw ValidationError("power technology requires 0 < gamma <= 1");
    MonitoringTechnology t;
    t.kind_ = Kind::power;
    t.gamma_ = gamma;
    return t;
}

MonitoringTechnology MonitoringTechnology::sampled(std::vector<double> masses,
                                                   std::vector<double> intensities) {
    if (masses.size() != intensities.size() || masses.size() < 2)
        throw ValidationError("sampled technology needs >= 2 (mass, intensity) pairs");
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (!std::isfinite(masses[i]) || !std::isfinite(intensities[i]))
            throw ValidationError("sampled technology values must be finite");
        if (i > 0) {
            if (masses[i] <= masses[i - 1])
                throw ValidationError("sampled technology masses must be strictly increasing");
            if (intensities[i] <= intensities[i - 1])
                throw ValidationError("sampled technology must be monotonically increasing");
        }
    }
    if (masses.front() < 0.0)
        throw ValidationError("sampled technology masses must be non-negative");
    MonitoringTechnology t;
    t.kind_ = Kind::sampled;
    t.xs_ = std::move(masses);
    t.ys_ = std::move(intensities);
    if (t.value(0.0) < 0.0)
        throw ValidationError("sampled technology must satisfy phi(0) >= 0");
    return t;
}

double MonitoringTechnology::value(double mass) const {
    if (!std::isfinite(mass) || mass < 0.0)
        throw ValidationError("inspector mass must be finite and non-negative");
    switch (kind_) {
        case Kind::linear:
            return k_ * mass;
        case Kind::power:
            return std::pow(mass, gamma_);
        case Kind::sampled: {
            // Extrapolate with the slope of the first / last segment.
            std::size_t hi = 1;
            while (hi + 1 < xs_.size() && mass > xs_[hi]) ++hi;
            const double x0 = xs_[hi - 1], x1 = xs_[hi];
            const double y0 = ys_[hi - 1], y1 = ys_[hi];
            return y0 + (y1 - y0) * (mass - x0) / (x1 - x0);
        }
    }
    return 0.0;
}

double MonitoringTechnology::derivative(double mass) const {
    if (!std::isfinite(mass) || mass < 0.0)
        throw ValidationError("inspector mass must be finite and non-negative");
    switch (kind_) {
        case Kind::linear:
            return k_;
        case Kind::power:
            if (gamma_ == 1.0) return 1.0;
            if (mass == 0.0) return std::numeric_limits<double>::infinity();
            return gamma_ * std::pow(mass, gamma_ - 1.0);
        case Kind::sampled: {
            std::size_t hi = 1;
            while (hi + 1 < xs_.size() && mass > xs_[hi]) ++hi;
            return (ys_[hi] - ys_[hi - 1]) / (xs_[hi] - xs_[hi - 1]);
        }
    }
    return 0.0;
}

bool MonitoringTechnology::is_identity() const {
    return kind_ == Kind::linear && k_ == 1.0;
}

std::string MonitoringTechnology::describe() const {
    switch (kind_) {
        case Kind::linear:
            return is_identity() ? "phi(x)=x" : "phi(x)=" + std::to_string(k_) + "*x";
        case Kind::power:
            return "phi(x)=x^" + std::to_string(gamma_);
        case Kind::sampled:
            return "phi sampled (" + std::to_string(xs_.size()) + " points)";
    }
    return "?";
}

}  // namespace transit
