#pragma once

#include <optional>

#include "navbench/geometry.hpp"
#include "navbench/rng.hpp"

namespace navbench {

struct OdometryNoise {
    bool enabled{false};
    double sigma_xy{0.0};         // m, per-report Gaussian on x and y
    double sigma_theta{0.0};      // rad
    double drift_per_meter{0.0};  // m of accumulated offset per m traveled
};

/// Dead-reckoning-style corruption of ground-truth poses. Drift accumulates
/// along the direction of travel; Gaussian noise is resampled per report.
/// With enabled=false, reports are the truth and no RNG is consumed.
class OdometryModel {
public:
    explicit OdometryModel(const OdometryNoise& noise) : noise_(noise) {}

    Pose2D corrupt(const Pose2D& truth, Rng& rng) {
        if (!noise_.enabled) return truth;
        if (last_truth_) {
            const Vec2 delta = truth.position() - last_truth_->position();
            const double d = delta.norm();
            if (d > 0.0) drift_ += noise_.drift_per_meter * d * delta.normalized();
        }
        last_truth_ = truth;
        Pose2D out;
        out.x = truth.x + drift_.x + rng.normal(0.0, noise_.sigma_xy);
        out.y = truth.y + drift_.y + rng.normal(0.0, noise_.sigma_xy);
        out.theta = normalize_angle(truth.theta + rng.normal(0.0, noise_.sigma_theta));
        return out;
    }

    const OdometryNoise& noise() const { return noise_; }

private:
    OdometryNoise noise_;
    Vec2 drift_;
    std::optional<Pose2D> last_truth_;
};

}  // namespace navbench
