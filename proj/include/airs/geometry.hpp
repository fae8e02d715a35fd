// SPDX-License-Identifier: Apache-2.0
//
// airs-channel: wideband channel simulator for AIRS/IRS-assisted MIMO links
// Copyright (C) 2026 The airs-channel authors
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

#ifndef airs_geometry_H
#define airs_geometry_H

#include <Eigen/Core>

#include <vector>

// Geometric kernel of the three-path channel.
//
// Frame convention: one global Cartesian frame anchored on the ground below the Tx.
//   Tx array reference element : (0, 0, H_BS)
//   Rx array reference element : (D + v_R t cos chi_R, v_R t sin chi_R, 0)
//   IRS center                 : (x_I, y_I, H_IRS), static
//   AIRS center                : (x_A(0), y_A(0), H_AIRS) + v_A t m_A
// Per-link vectors are differences of these points. Panel offsets are column vectors
// rotated as R * [k_h d_h, k_v d_v, 0]^T (the transposed form of the row-vector
// product), with R = Rz(pitch) Ry(yaw) Rx(roll).

namespace airs::geometry
{
    using Vec3 = Eigen::Vector3d;
    using Mat3 = Eigen::Matrix3d;

    // Azimuth evaluation. `consistent` takes every azimuth as atan2 of the actual
    // direction vector; `closed_form` uses arctan/arcsin of coordinate ratios, which lose
    // quadrant information, and keeps D fixed in the scatterer-to-Tx range.
    enum class AngleConvention
    {
        consistent,
        closed_form
    };

    struct RotationAngles
    {
        double pitch = 0.0; // rotation about z [rad]
        double yaw = 0.0;   // rotation about y [rad]
        double roll = 0.0;  // rotation about x [rad]
    };

    struct UlaSpec
    {
        int count = 1;          // number of elements
        double spacing = 0.0;   // element spacing [m]
        double azimuth = 0.0;   // orientation azimuth [rad]
        double elevation = 0.0; // orientation elevation [rad]
    };

    struct SurfacePanel
    {
        int n_h = 1;                 // units along the horizontal panel axis
        int n_v = 1;                 // units along the vertical panel axis
        double unit_w = 0.0;         // horizontal unit size [m]
        double unit_h = 0.0;         // vertical unit size [m]
        RotationAngles rotation;     // panel orientation
        Vec3 anchor = Vec3::Zero();  // center position at t = 0, global frame [m]
        double speed = 0.0;          // [m/s], zero for a terrestrial IRS
        double move_azimuth = 0.0;   // chi_par [rad]
        double move_elevation = 0.0; // chi_perp [rad]

        int unit_count() const { return n_h * n_v; }
    };

    struct MobileSpec
    {
        double speed = 0.0;        // v_R [m/s]
        double move_azimuth = 0.0; // chi_R [rad]
    };

    // Static description of the link geometry.
    struct Scene
    {
        UlaSpec tx;
        UlaSpec rx;
        SurfacePanel irs;
        SurfacePanel airs;
        MobileSpec rx_motion;
        double distance = 0.0;  // D, horizontal Tx-Rx distance at t = 0 [m]
        double bs_height = 0.0; // H_BS [m]
        AngleConvention convention = AngleConvention::consistent;
    };

    enum class Surface
    {
        airs,
        irs
    };

    // Offsets of the active Tx and Rx elements relative to their reference elements.
    struct AntennaPair
    {
        Vec3 tx = Vec3::Zero();
        Vec3 rx = Vec3::Zero();
    };

    struct LinkVectors
    {
        Vec3 tx_airs; // eps^{T,A}(t): Tx -> AIRS
        Vec3 airs_rx; // eps^{A,R}(t): AIRS -> Rx
        Vec3 tx_irs;  // eps^{T,I}:    Tx -> IRS
        Vec3 irs_rx;  // eps^{I,R}(t): IRS -> Rx
    };

    struct AirsAngles
    {
        double departure_azimuth;   // alpha_A^T
        double departure_elevation; // beta_A^T
        double arrival_elevation;   // beta_R^A
        double arrival_azimuth;     // alpha_R^A
    };

    struct IrsAngles
    {
        double arrival_elevation; // beta_R^I
        double arrival_azimuth;   // alpha_R^I
    };

    struct ScattererInit
    {
        double range = 0.0;     // eps^{S,R}(0) [m]
        double azimuth = 0.0;   // alpha_R^{l,S}(0) [rad]
        double elevation = 0.0; // beta_R^{l,S}(0) [rad]
    };

    struct ScattererState
    {
        double range_sr; // eps^{S,R}(t) [m]
        double range_ts; // eps^{T,S}(t) [m]
        double azimuth;  // alpha_R^{l,S}(t) [rad]
        double elevation; // beta_R^{l,S}(t) [rad]
    };

    Mat3 rotation_matrix(const RotationAngles &angles);

    // Unscaled ULA axis, (p - 1) * spacing times this vector is the element offset.
    Vec3 ula_direction(const UlaSpec &spec);

    // Offset of element p (1-based) from the first element.
    Vec3 ula_offset(int p, const UlaSpec &spec);

    // Offset of unit (h, v) (1-based) from the panel center.
    Vec3 surface_unit_offset(int h, int v, const SurfacePanel &panel);

    // All unit offsets, index n = (h - 1) * n_v + (v - 1).
    std::vector<Vec3> surface_unit_offsets(const SurfacePanel &panel);

    Vec3 tx_position(const Scene &scene);
    Vec3 rx_position(double t, const Scene &scene);
    Vec3 panel_position(double t, const SurfacePanel &panel);

    // AIRS coordinates relative to the Tx height, (x_A(t), y_A(t), z_A(t)).
    Vec3 airs_position(double t, const SurfacePanel &panel, double bs_height);

    LinkVectors link_vectors(double t, const Scene &scene);

    // Norm of link + antenna_offset - unit_offset. `link` points from the surface
    // center to the antenna array reference element.
    double per_unit_distance(const Vec3 &link, const Vec3 &antenna_offset, const Vec3 &unit_offset);

    // Tx antenna -> unit -> Rx antenna length for every unit of one surface.
    std::vector<double> unit_path_lengths(const Scene &scene, Surface surface, double t,
                                          const AntennaPair &antennas);

    AirsAngles airs_angles(double t, const Scene &scene);
    IrsAngles irs_arrival_angles(double t, const Scene &scene);

    ScattererState scatterer_track(double t, const ScattererInit &initial, const MobileSpec &rx,
                                   double distance, double bs_height,
                                   AngleConvention convention = AngleConvention::consistent);

    // Global position of a scatterer seen from the Rx reference at t = 0 under `initial`.
    Vec3 scatterer_position(const ScattererInit &initial, const Scene &scene);

    // asin with the clipping policy: |x| <= 1 + 1e-12 is clipped, larger raises geometry_error.
    double safe_asin(double x);
}

#endif
