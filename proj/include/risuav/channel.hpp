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

#ifndef RISUAV_CHANNEL_HPP
#define RISUAV_CHANNEL_HPP

#include "risuav/geometry.hpp"
#include "risuav/partition.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

namespace risuav
{
    using Complex = std::complex<double>;

    enum class RisMode
    {
        Optimal,
        Fixed,
        Random
    };

    // 1-based transmit/receive antenna indices (p, q).
    struct AntennaPair
    {
        int tx = 1;
        int rx = 1;
    };

    // Per-unit reflection coefficients, stored row-major: unit (m, n) at (n-1)*cols + (m-1).
    // Phases are kept in [0, 2π).
    struct RisConfiguration
    {
        int cols = 0;
        int rows = 0;
        std::vector<double> amplitudes;
        std::vector<double> phases;
        RisMode mode = RisMode::Fixed;
        std::uint64_t seed = 0;   // random mode: seed of the ensemble used for Υ and Ω
        int draws = 10000;        // random mode: ensemble size
        AntennaPair reference;    // pair at which Ω (and optimal phases) are evaluated

        std::size_t index(int m, int n) const { return std::size_t(n - 1) * std::size_t(cols) + std::size_t(m - 1); }
        double amplitude(int m, int n) const { return amplitudes[index(m, n)]; }
        double phase(int m, int n) const { return phases[index(m, n)]; }

        // Every unit at the given amplitude and phase.
        static RisConfiguration uniform(const ScenarioConfig &cfg, double amplitude = 1.0, double phase = 0.0);

        // Unit amplitudes, phases drawn uniformly from [0, 2π) with the given seed.
        static RisConfiguration random(const ScenarioConfig &cfg, std::uint64_t seed, int draws = 10000);
    };

    // Throws ValidationError on size mismatch, amplitude outside [0, 1] or non-finite phase.
    void validate(const RisConfiguration &ris, const ScenarioConfig &cfg);

    enum class ChannelModel
    {
        Spherical,
        Planar,
        SubArray
    };

    const char *to_string(ChannelModel model);

    struct Tap
    {
        double delay = 0.0;    // [s]
        Eigen::MatrixXcd gain; // M_R x M_T
    };

    struct PowerGain
    {
        double omega = 0.0;      // Ω_RIS
        Eigen::MatrixXd upsilon; // Υ_pq, M_R x M_T (row q, column p)
    };

    struct ChannelSnapshot
    {
        double time = 0.0;
        ChannelModel model = ChannelModel::Spherical;
        std::vector<Tap> taps;      // sorted by delay; empty unless SynthesisOptions::keep_taps
        Eigen::MatrixXcd aggregate; // Σ taps, M_R x M_T
        PowerGain power;
        std::size_t path_count = 0; // sub-arrays (or units) summed before tap merging
    };

    struct SynthesisOptions
    {
        bool keep_taps = true;
    };

    // Exact per-unit spherical-wavefront CIR.
    ChannelSnapshot spherical_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, double t,
                                  const SynthesisOptions &opts = {});

    // Sub-array CIR for a given partition; planar inside each sub-array.
    ChannelSnapshot subarray_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                                 double t, const SynthesisOptions &opts = {});

    // Whole RIS as one sub-array.
    ChannelSnapshot planar_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, double t,
                               const SynthesisOptions &opts = {});

    // Distance-related phase φ^dis of every unit at pair (p, q), in cycles wrapped to [0, 1).
    // Layout as RisConfiguration::phases.
    std::vector<double> distance_phase_cycles(const ScenarioConfig &cfg, const Partition &partition, double t,
                                              const AntennaPair &pair);

    // Unit amplitudes with φ_mn = φ^dis_mn mod 2π at the reference pair.
    RisConfiguration optimal_phases(const ScenarioConfig &cfg, const Partition &partition, double t,
                                    const AntennaPair &reference = {});

    // Υ_pq by direct summation (Monte Carlo over random phases in random mode).
    // Throws ZeroChannelError when the result is zero.
    double normalization_factor(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                                double t, const AntennaPair &pair);

    // Ω_RIS evaluated at the configuration's reference pair. Throws BackIlluminationError
    // when any sub-array sees the UAV at cos β^in <= 0.
    double path_power_gain(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                           double t);

    // Closed form of Ω_RIS under phases optimal for the same partition.
    double optimal_power_gain(const ScenarioConfig &cfg, const Partition &partition, double t);

    struct Beamformers
    {
        Eigen::VectorXcd tx; // f_UAV, M_T
        Eigen::VectorXcd rx; // f_MR, M_R
        double gain = 0.0;   // |f_rxᵀ H f_tx|
    };

    // Dominant singular pair of the aggregate: f_tx = v1, f_rx = conj(u1), so f_rxᵀ H f_tx = σ1.
    // Throws ZeroChannelError for an all-zero channel.
    Beamformers matched_beamformers(const ChannelSnapshot &snapshot);

    struct ReceivedSignal
    {
        Complex y;
        double snr = 0.0;
        bool unbounded = false; // zero noise: snr holds kUnboundedSnr
    };

    inline constexpr double kUnboundedSnr = 1.0e300;

    // y = f_rxᵀ H f_tx s + n with s = sqrt(P_T) and n ~ CN(0, σ²) drawn from `seed`.
    // Throws DimensionMismatchError when the beamformers do not match the aggregate.
    ReceivedSignal received_signal(const ChannelSnapshot &snapshot, double tx_power, double noise_variance,
                                   const Beamformers &beamformers, std::uint64_t seed = 0);
}

#endif
