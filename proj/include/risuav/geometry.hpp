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

#ifndef RISUAV_GEOMETRY_HPP
#define RISUAV_GEOMETRY_HPP

#include <Eigen/Core>

namespace risuav
{
    using Vec3 = Eigen::Vector3d;

    inline constexpr double kSpeedOfLight = 3.0e8; // m/s
    inline constexpr double kPi = 3.141592653589793238462643383279502884;
    inline constexpr double kTwoPi = 2.0 * kPi;

    // Distances/denominators below this are treated as degenerate [m]
    inline constexpr double kDegenerateLength = 1.0e-12;

    struct AnglePair
    {
        double azimuth = 0.0;   // [rad]
        double elevation = 0.0; // [rad]
    };

    struct UavVelocity
    {
        double speed = 0.0;     // v_T [m/s]
        double azimuth = 0.0;   // γ_T [rad]
        double elevation = 0.0; // η_T [rad]
    };

    struct MrVelocity
    {
        double speed = 0.0;   // v_R [m/s]
        double azimuth = 0.0; // γ_R [rad]
    };

    // How the time argument of the Doppler phase terms is measured.
    //  Geometry: seconds elapsed since the geometry (distances, angles, partition) was
    //            last evaluated; zero at every snapshot when geometry_update == 0.
    //  Absolute: seconds since t = 0, on top of displaced positions.
    enum class DopplerReference
    {
        Geometry,
        Absolute
    };

    // Static description of one scenario. The UAV array centre starts at (0, 0, H0),
    // the MR array centre at (xi_R, 0, 0). The RIS lies in a vertical plane through
    // ris_center, columns along [cos θ_I, sin θ_I, 0], row index increasing downwards.
    struct ScenarioConfig
    {
        double carrier_wavelength = 0.0; // λ [m]
        double uav_init_height = 0.0;    // H0 [m]
        Vec3 ris_center = Vec3::Zero();  // (x_I, y_I, z_I) [m]
        double mr_init_x = 0.0;          // ξ_R [m]
        double ris_rotation = 0.0;       // θ_I [rad]

        int ris_cols = 1;          // M
        int ris_rows = 1;          // N
        double unit_width = 0.0;   // d_c [m]
        double unit_height = 0.0;  // d_r [m]

        int tx_antennas = 1;       // M_T
        int rx_antennas = 1;       // M_R
        double tx_spacing = 0.0;   // δ_T [m]
        double rx_spacing = 0.0;   // δ_R [m]
        AnglePair tx_orientation;  // (ψ_T, φ_T)
        AnglePair rx_orientation;  // (ψ_R, φ_R)

        UavVelocity tx_velocity;
        MrVelocity rx_velocity;

        DopplerReference doppler_reference = DopplerReference::Geometry;
        double geometry_update = 0.0; // geometry refresh interval [s], 0 = every instant
    };

    // Throws ValidationError naming the first violated invariant.
    void validate(const ScenarioConfig &cfg);

    enum class Side
    {
        Tx,
        Rx
    };

    struct MobilityState
    {
        double time = 0.0;
        Vec3 tx_displacement = Vec3::Zero();
        Vec3 rx_displacement = Vec3::Zero(); // z is always 0
    };

    struct TerminalPositions
    {
        Vec3 tx;
        Vec3 rx;
    };

    // Orthonormal basis of the RIS plane, used for the incidence/emergence angles.
    struct RisFrame
    {
        Vec3 column; // [cos θ_I, sin θ_I, 0]
        Vec3 normal; // [sin θ_I, -cos θ_I, 0], faces the terminals
        Vec3 up;     // [0, 0, 1]
    };

    struct SubArrayGeometry
    {
        Vec3 center = Vec3::Zero();
        double dist_tx = 0.0; // ξ^T
        double dist_rx = 0.0; // ξ^R
        AnglePair departure;  // (α^T, β^T), UAV -> centre
        AnglePair arrival;    // (α^R, β^R), MR -> centre
        AnglePair incidence;  // (α^in, β^in), centre -> UAV in the RIS frame
        AnglePair emergence;  // (α^out, β^out), centre -> MR in the RIS frame
    };

    Vec3 velocity_vector(const ScenarioConfig &cfg, Side side);
    MobilityState mobility(const ScenarioConfig &cfg, double t);

    // Element offset from the ULA centre, 1-based index.
    Vec3 antenna_offset(const ScenarioConfig &cfg, Side side, int index);

    TerminalPositions terminal_positions(const ScenarioConfig &cfg, double t);

    // ξ_min(t): smaller of the two terminal distances to the RIS centre.
    double min_terminal_distance(const ScenarioConfig &cfg, double t);

    RisFrame ris_frame(const ScenarioConfig &cfg);

    // Point on the RIS at column offset a3 and row offset a4 (rows grow downwards).
    Vec3 ris_point(const ScenarioConfig &cfg, double a3, double a4);

    // Distances and angles from both terminals to the RIS point at offsets (a3, a4).
    SubArrayGeometry subarray_geometry(const ScenarioConfig &cfg, double t, double a3, double a4);

    // [cos β cos α, cos β sin α, sin β]
    Vec3 unit_direction(double azimuth, double elevation);
    inline Vec3 unit_direction(const AnglePair &a) { return unit_direction(a.azimuth, a.elevation); }

    // Direction on the RIS plane in local (column, normal, up) coordinates:
    // [sin β cos α, cos β, sin β sin α]
    Vec3 plane_direction(const AnglePair &a);

    // Offset of unit (m0, n0) (1-based) from the centre of a cols x rows sub-array,
    // in local (column, normal, up) coordinates.
    Vec3 intra_offset(int m0, int n0, int cols, int rows, double unit_width, double unit_height);

    // Instant at which geometry is evaluated for a snapshot requested at t.
    double geometry_time(const ScenarioConfig &cfg, double t);

    // Time argument of the Doppler phase terms for a snapshot at t.
    double doppler_time(const ScenarioConfig &cfg, double t);
}

#endif
