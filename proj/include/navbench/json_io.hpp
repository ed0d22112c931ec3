#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "navbench/crowd.hpp"
#include "navbench/geometry.hpp"
#include "navbench/laser.hpp"
#include "navbench/odometry.hpp"

namespace navbench {

/// Raised when a file's schema_version does not match what this build reads.
struct SchemaVersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_schema_version(const nlohmann::json& j, int expected,
                                 const std::string& what) {
    const int got = j.value("schema_version", -1);
    if (got != expected)
        throw SchemaVersionError(what + ": schema_version " + std::to_string(got) +
                                 ", this build reads version " + std::to_string(expected));
}

nlohmann::json vec2_to_json(const Vec2& v);
Vec2 vec2_from_json(const nlohmann::json& j);

nlohmann::json pose_to_json(const Pose2D& p);
Pose2D pose_from_json(const nlohmann::json& j);

nlohmann::json twist_to_json(const Twist& t);
Twist twist_from_json(const nlohmann::json& j);

nlohmann::json robot_model_to_json(const RobotModel& m);
RobotModel robot_model_from_json(const nlohmann::json& j);

nlohmann::json pedestrian_to_json(const PedestrianState& p);
PedestrianState pedestrian_from_json(const nlohmann::json& j);

nlohmann::json odometry_noise_to_json(const OdometryNoise& n);
OdometryNoise odometry_noise_from_json(const nlohmann::json& j);

nlohmann::json social_force_params_to_json(const SocialForceParams& p);
SocialForceParams social_force_params_from_json(const nlohmann::json& j);

nlohmann::json laser_scan_to_json(const LaserScan& scan);
LaserScan laser_scan_from_json(const nlohmann::json& j);

}  // namespace navbench
