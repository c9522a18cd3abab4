// SPDX-License-Identifier: Apache-2.0
//
// risuav: sub-array channel modelling for large-scale RIS assisted UAV links
// Copyright (C) 2026 The risuav authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risuav/geometry.hpp"
#include "risuav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risuav
{
    namespace
    {
        void require(bool ok, const char *field, const std::string &what)
        {
            if (!ok)
                throw ValidationError(std::string(field) + ": " + what);
        }

        bool finite(double x) { return std::isfinite(x); }

        double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

        // Azimuth per the arccos expressions; the y component picks the half-plane.
        double azimuth_from(double dx, double dy, double horizontal)
        {
            double a = std::acos(clamp_unit(dx / horizontal));
            return dy < 0.0 ? -a : a;
        }

        AnglePair plane_angles(const RisFrame &frame, const Vec3 &dir)
        {
            AnglePair a;
            a.elevation = std::acos(clamp_unit(dir.dot(frame.normal)));
            a.azimuth = std::atan2(dir.dot(frame.up), dir.dot(frame.column));
            return a;
        }
    }

    void validate(const ScenarioConfig &cfg)
    {
        const double lambda = cfg.carrier_wavelength;
        require(finite(lambda) && lambda > 0.0, "carrier_wavelength", "must be positive");

        // Sub-wavelength units; a relative slack admits d = λ/2 computed as 0.5 * λ.
        const double half = 0.5 * lambda * (1.0 + 1e-12);
        require(finite(cfg.unit_width) && cfg.unit_width > 0.0 && cfg.unit_width <= half,
                "unit_width", "must lie in (0, lambda/2]");
        require(finite(cfg.unit_height) && cfg.unit_height > 0.0 && cfg.unit_height <= half,
                "unit_height", "must lie in (0, lambda/2]");

        require(cfg.ris_cols >= 1, "ris_cols", "must be >= 1");
        require(cfg.ris_rows >= 1, "ris_rows", "must be >= 1");
        require(cfg.tx_antennas >= 1, "tx_antennas", "must be >= 1");
        require(cfg.rx_antennas >= 1, "rx_antennas", "must be >= 1");
        require(finite(cfg.tx_spacing) && cfg.tx_spacing >= 0.0, "tx_spacing", "must be >= 0");
        require(finite(cfg.rx_spacing) && cfg.rx_spacing >= 0.0, "rx_spacing", "must be >= 0");

        require(finite(cfg.tx_velocity.speed) && cfg.tx_velocity.speed >= 0.0, "tx_velocity.speed", "must be >= 0");
        require(finite(cfg.rx_velocity.speed) && cfg.rx_velocity.speed >= 0.0, "rx_velocity.speed", "must be >= 0");
        require(finite(cfg.tx_velocity.azimuth) && finite(cfg.tx_velocity.elevation) && finite(cfg.rx_velocity.azimuth),
                "velocity", "angles must be finite");

        require(cfg.ris_center.allFinite(), "ris_center", "must be finite");
        require(cfg.ris_center.z() > 0.0, "ris_center.z", "must be above ground (> 0)");
        require(finite(cfg.uav_init_height) && cfg.uav_init_height > 0.0, "uav_init_height", "must be > 0");
        require(finite(cfg.mr_init_x), "mr_init_x", "must be finite");
        require(finite(cfg.ris_rotation), "ris_rotation", "must be finite");
        require(finite(cfg.geometry_update) && cfg.geometry_update >= 0.0, "geometry_update", "must be >= 0");
    }

    Vec3 velocity_vector(const ScenarioConfig &cfg, Side side)
    {
        if (side == Side::Tx)
        {
            const auto &v = cfg.tx_velocity;
            return v.speed * Vec3(std::cos(v.elevation) * std::cos(v.azimuth),
                                  std::cos(v.elevation) * std::sin(v.azimuth),
                                  std::sin(v.elevation));
        }
        const auto &v = cfg.rx_velocity;
        return v.speed * Vec3(std::cos(v.azimuth), std::sin(v.azimuth), 0.0);
    }

    MobilityState mobility(const ScenarioConfig &cfg, double t)
    {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw DomainError("time must be finite and >= 0, got " + std::to_string(t));

        MobilityState s;
        s.time = t;
        s.tx_displacement = velocity_vector(cfg, Side::Tx) * t;
        s.rx_displacement = velocity_vector(cfg, Side::Rx) * t;
        s.rx_displacement.z() = 0.0;
        return s;
    }

    Vec3 antenna_offset(const ScenarioConfig &cfg, Side side, int index)
    {
        const bool tx = side == Side::Tx;
        const int count = tx ? cfg.tx_antennas : cfg.rx_antennas;
        if (index < 1 || index > count)
            throw DomainError("antenna index " + std::to_string(index) + " outside [1, " + std::to_string(count) + "]");

        const double spacing = tx ? cfg.tx_spacing : cfg.rx_spacing;
        const AnglePair &o = tx ? cfg.tx_orientation : cfg.rx_orientation;
        const double coeff = 0.5 * double(count - 2 * index + 1) * spacing;
        return coeff * Vec3(std::cos(o.elevation) * std::cos(o.azimuth),
                            std::cos(o.elevation) * std::sin(o.azimuth),
                            std::sin(o.elevation));
    }

    TerminalPositions terminal_positions(const ScenarioConfig &cfg, double t)
    {
        const MobilityState s = mobility(cfg, t);
        TerminalPositions p;
        p.tx = Vec3(0.0, 0.0, cfg.uav_init_height) + s.tx_displacement;
        p.rx = Vec3(cfg.mr_init_x, 0.0, 0.0) + s.rx_displacement;
        return p;
    }

    double min_terminal_distance(const ScenarioConfig &cfg, double t)
    {
        const MobilityState s = mobility(cfg, t);
        const Vec3 &c = cfg.ris_center;
        const Vec3 &rt = s.tx_displacement;
        const Vec3 &rr = s.rx_displacement;

        const double dt = std::sqrt((c.x() - rt.x()) * (c.x() - rt.x()) +
                                    (c.y() - rt.y()) * (c.y() - rt.y()) +
                                    (c.z() - cfg.uav_init_height - rt.z()) * (c.z() - cfg.uav_init_height - rt.z()));
        const double dr = std::sqrt((c.x() - cfg.mr_init_x - rr.x()) * (c.x() - cfg.mr_init_x - rr.x()) +
                                    (c.y() - rr.y()) * (c.y() - rr.y()) +
                                    c.z() * c.z());
        if (dt < kDegenerateLength || dr < kDegenerateLength)
            throw DegenerateGeometryError("terminal coincides with the RIS centre");
        return std::min(dt, dr);
    }

    RisFrame ris_frame(const ScenarioConfig &cfg)
    {
        const double c = std::cos(cfg.ris_rotation), s = std::sin(cfg.ris_rotation);
        return {Vec3(c, s, 0.0), Vec3(s, -c, 0.0), Vec3(0.0, 0.0, 1.0)};
    }

    Vec3 ris_point(const ScenarioConfig &cfg, double a3, double a4)
    {
        return Vec3(cfg.ris_center.x() + a3 * std::cos(cfg.ris_rotation),
                    cfg.ris_center.y() + a3 * std::sin(cfg.ris_rotation),
                    cfg.ris_center.z() - a4);
    }

    SubArrayGeometry subarray_geometry(const ScenarioConfig &cfg, double t, double a3, double a4)
    {
        const MobilityState s = mobility(cfg, t);
        const Vec3 &rt = s.tx_displacement;
        const Vec3 &rr = s.rx_displacement;

        SubArrayGeometry g;
        g.center = ris_point(cfg, a3, a4);

        // UAV side
        const double tx_dx = g.center.x() - rt.x();
        const double tx_dy = g.center.y() - rt.y();
        const double tx_dz = cfg.ris_center.z() - a4 - cfg.uav_init_height - rt.z();
        g.dist_tx = std::sqrt(tx_dx * tx_dx + tx_dy * tx_dy + tx_dz * tx_dz);

        // MR side
        const double rx_dx = g.center.x() - cfg.mr_init_x - rr.x();
        const double rx_dy = g.center.y() - rr.y();
        const double rx_dz = cfg.ris_center.z() - a4;
        g.dist_rx = std::sqrt(rx_dx * rx_dx + rx_dy * rx_dy + rx_dz * rx_dz);

        if (g.dist_tx < kDegenerateLength || g.dist_rx < kDegenerateLength)
            throw DegenerateGeometryError("terminal collocated with a RIS point");

        const double tx_h = std::sqrt(std::max(g.dist_tx * g.dist_tx - tx_dz * tx_dz, 0.0));
        const double rx_h = std::sqrt(std::max(g.dist_rx * g.dist_rx - rx_dz * rx_dz, 0.0));
        if (tx_h < kDegenerateLength)
            throw DegenerateGeometryError("UAV on the vertical through a RIS point; azimuth undefined");
        if (rx_h < kDegenerateLength)
            throw DegenerateGeometryError("MR on the vertical through a RIS point; azimuth undefined");

        g.departure.elevation = std::asin(clamp_unit(tx_dz / g.dist_tx));
        g.departure.azimuth = azimuth_from(tx_dx, tx_dy, tx_h);
        g.arrival.elevation = std::asin(clamp_unit(rx_dz / g.dist_rx));
        g.arrival.azimuth = azimuth_from(rx_dx, rx_dy, rx_h);

        const RisFrame frame = ris_frame(cfg);
        g.incidence = plane_angles(frame, -unit_direction(g.departure));
        g.emergence = plane_angles(frame, -unit_direction(g.arrival));
        return g;
    }

    Vec3 unit_direction(double azimuth, double elevation)
    {
        const double ce = std::cos(elevation);
        return Vec3(ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation));
    }

    Vec3 plane_direction(const AnglePair &a)
    {
        const double sb = std::sin(a.elevation);
        return Vec3(sb * std::cos(a.azimuth), std::cos(a.elevation), sb * std::sin(a.azimuth));
    }

    Vec3 intra_offset(int m0, int n0, int cols, int rows, double unit_width, double unit_height)
    {
        return Vec3(0.5 * double(2 * m0 - cols - 1) * unit_width,
                    0.0,
                    -0.5 * double(2 * n0 - rows - 1) * unit_height);
    }

    double geometry_time(const ScenarioConfig &cfg, double t)
    {
        if (cfg.geometry_update > 0.0)
            return std::floor(t / cfg.geometry_update) * cfg.geometry_update;
        return t;
    }

    double doppler_time(const ScenarioConfig &cfg, double t)
    {
        if (cfg.doppler_reference == DopplerReference::Absolute)
            return t;
        return t - geometry_time(cfg, t);
    }
}
