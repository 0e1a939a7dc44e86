// SPDX-License-Identifier: Apache-2.0
#include "jcas/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jcas/error.hpp"

namespace jcas {

void Scene::validate() const
{
    if (!(frame_interval > 0.0)) {
        throw ConfigError("scene frame_interval must be positive");
    }
    if (!std::is_sorted(measurement_times.begin(), measurement_times.end())) {
        throw ConfigError("scene measurement times must be non-decreasing");
    }
    for (double t : measurement_times) {
        if (!(t >= 0.0)) {
            throw ConfigError("scene measurement times must be non-negative");
        }
    }
    for (const auto& v : vehicles) {
        if (!(v.initial_range > 0.0)) {
            throw ConfigError("vehicle '" + v.name + "' needs a positive initial range");
        }
        if (!(v.rcs > 0.0)) {
            throw ConfigError("vehicle '" + v.name + "' needs a positive RCS");
        }
    }
}

std::vector<Target> targets_at(const Scene& scene, double t)
{
    if (!(t >= 0.0)) {
        throw std::invalid_argument("targets_at: time must be non-negative");
    }
    std::vector<Target> out;
    out.reserve(scene.vehicles.size());
    for (const auto& v : scene.vehicles) {
        const double range = v.initial_range + v.relative_speed * t;
        if (range > 0.0) {
            out.push_back({range, v.relative_speed, v.rcs});
        }
    }
    return out;
}

Scene builtin_scene(std::string_view name)
{
    const double car_rcs = dbsm_to_m2(5.0);
    Scene scene;
    if (name == "fig4") {
        // Ego at 20 m/s; A at 40 m/s on the left lane, B at 25 m/s on the right.
        scene.vehicles = {
            {"A", 6.0, 20.0, car_rcs, "left"},
            {"B", 39.0, 5.0, car_rcs, "right"},
        };
        scene.measurement_times = {0.0, 0.2, 0.6};
    } else if (name == "fig5") {
        scene.vehicles = {
            {"C", 10.6, 20.0, car_rcs, "left"},
            {"D", 40.0, 3.0, 1.0, "left"},
            {"E", 40.2, 5.0, 100.0, "right"},
        };
        scene.measurement_times = {0.0};
    } else {
        throw ConfigError("unknown builtin scene '" + std::string(name) + "'");
    }
    return scene;
}

Scene scene_from_config(const ConfigDocument& doc)
{
    Scene scene;
    for (const auto& sec : doc.sections) {
        if (sec.name.empty()) {
            if (!sec.values.empty()) {
                throw ConfigError("scene file: keys must live inside a section");
            }
        } else if (sec.name != "scene" && sec.name != "vehicle" && sec.name != "ofdm") {
            throw ConfigError("scene file: unknown section [" + sec.name + "]");
        }
    }

    const auto* header = doc.find("scene");
    if (header == nullptr || header->array_item) {
        throw ConfigError("scene file: missing [scene] section");
    }
    for (const auto& [key, value] : header->values) {
        if (key == "frame_interval_s") {
            scene.frame_interval = header->number(key);
        } else if (key == "measurement_times_s") {
            scene.measurement_times = header->numbers(key);
        } else {
            throw ConfigError("scene file: unknown [scene] key '" + key + "'");
        }
    }
    if (scene.measurement_times.empty()) {
        throw ConfigError("scene file: measurement_times_s must list at least one time");
    }

    for (const auto* sec : doc.all("vehicle")) {
        if (!sec->array_item) {
            throw ConfigError("scene file: vehicles are declared with [[vehicle]]");
        }
        VehicleSpec v;
        for (const auto& [key, value] : sec->values) {
            if (key != "name" && key != "initial_range_m" && key != "relative_speed_mps" && key != "rcs_m2" &&
                key != "rcs_dbsm" && key != "lane") {
                throw ConfigError("scene file: unknown [[vehicle]] key '" + key + "'");
            }
        }
        v.name = sec->text("name");
        v.initial_range = sec->number("initial_range_m");
        v.relative_speed = sec->number("relative_speed_mps");
        if (sec->has("rcs_m2") == sec->has("rcs_dbsm")) {
            throw ConfigError("scene file: vehicle '" + v.name + "' needs exactly one of rcs_m2 / rcs_dbsm");
        }
        v.rcs = sec->has("rcs_m2") ? sec->number("rcs_m2") : dbsm_to_m2(sec->number("rcs_dbsm"));
        if (sec->has("lane")) {
            v.lane = sec->text("lane");
        }
        scene.vehicles.push_back(std::move(v));
    }
    if (scene.vehicles.empty()) {
        throw ConfigError("scene file: no [[vehicle]] blocks");
    }
    scene.validate();
    return scene;
}

Scene load_scene(const std::filesystem::path& path)
{
    return scene_from_config(load_config(path));
}

} // namespace jcas
