// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jcas/config_file.hpp"
#include "jcas/types.hpp"

namespace jcas {

/// A vehicle ahead of the ego car, described by its relative kinematics.
struct VehicleSpec {
    std::string name;
    double initial_range = 0.0;  // m
    double relative_speed = 0.0; // m/s, positive = pulling away
    double rcs = 1.0;            // m^2
    std::string lane;            // metadata only
};

struct Scene {
    std::vector<VehicleSpec> vehicles;
    double frame_interval = 0.030; // s, one block
    std::vector<double> measurement_times;

    void validate() const;
};

/// Straight-line kinematics: range = initial_range + relative_speed * t.
/// Vehicles that have reached the ego position (range <= 0) are dropped.
std::vector<Target> targets_at(const Scene& scene, double t);

/// "fig4": two cars closing on each other; "fig5": car, motorcycle and truck.
Scene builtin_scene(std::string_view name);

Scene scene_from_config(const ConfigDocument& doc);
Scene load_scene(const std::filesystem::path& path);

} // namespace jcas
