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

#include "risuav/channel.hpp"
#include "risuav/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace risuav
{
    namespace
    {
        // Paths accumulated per GEMM block
        constexpr int kBlock = 2048;

        // Taps closer than this are merged [s]
        constexpr double kTapMergeWindow = 1.0e-12;

        double wrap(double cycles) { return cycles - std::floor(cycles); }

        Complex cis_cycles(double cycles) { return std::polar(1.0, kTwoPi * wrap(cycles)); }

        double unit_uniform(std::mt19937_64 &rng) { return double(rng() >> 11) * 0x1.0p-53; }

        void fill_random_phases(std::mt19937_64 &rng, std::vector<double> &phases)
        {
            for (double &p : phases)
                p = kTwoPi * unit_uniform(rng);
        }

        std::vector<Vec3> antenna_offsets(const ScenarioConfig &cfg, Side side)
        {
            const int count = side == Side::Tx ? cfg.tx_antennas : cfg.rx_antennas;
            std::vector<Vec3> d;
            d.reserve(std::size_t(count));
            for (int i = 1; i <= count; ++i)
                d.push_back(antenna_offset(cfg, side, i));
            return d;
        }

        // Everything a path (one sub-array, or one unit in the spherical model) contributes
        // that does not depend on the unit inside it.
        struct PathTerms
        {
            SubArrayGeometry geometry;
            Vec3 tx_dir;      // e^T, UAV -> centre
            Vec3 rx_dir;      // e^R, MR -> centre
            Vec3 plane_sum;   // e^in + e^out, RIS-local coordinates
            double common;    // (-(ξ^T + ξ^R) + ⟨v_T t, e^T⟩ + ⟨v_R t, e^R⟩) / λ
            double weight;    // sqrt(cos β^in) / (ξ^T ξ^R)
            double delay;
        };

        struct Context
        {
            const ScenarioConfig &cfg;
            double geometry_t;
            double doppler_t;
            Vec3 tx_velocity;
            Vec3 rx_velocity;
            std::vector<Vec3> tx_offsets;
            std::vector<Vec3> rx_offsets;

            Context(const ScenarioConfig &c, double t)
                : cfg(c), geometry_t(geometry_time(c, t)), doppler_t(doppler_time(c, t)),
                  tx_velocity(velocity_vector(c, Side::Tx)), rx_velocity(velocity_vector(c, Side::Rx)),
                  tx_offsets(antenna_offsets(c, Side::Tx)), rx_offsets(antenna_offsets(c, Side::Rx))
            {
            }

            PathTerms path(double a3, double a4) const
            {
                PathTerms p;
                p.geometry = subarray_geometry(cfg, geometry_t, a3, a4);
                const SubArrayGeometry &g = p.geometry;
                const double cos_in = std::cos(g.incidence.elevation);
                const double cos_out = std::cos(g.emergence.elevation);
                if (!(cos_in > 0.0))
                    throw BackIlluminationError("UAV behind the RIS plane (cos beta_in = " + std::to_string(cos_in) + ")");
                if (!(cos_out > 0.0))
                    throw BackIlluminationError("MR behind the RIS plane (cos beta_out = " + std::to_string(cos_out) + ")");

                p.tx_dir = unit_direction(g.departure);
                p.rx_dir = unit_direction(g.arrival);
                p.plane_sum = plane_direction(g.incidence) + plane_direction(g.emergence);

                const double lambda = cfg.carrier_wavelength;
                p.common = (-(g.dist_tx + g.dist_rx) + doppler_t * tx_velocity.dot(p.tx_dir) +
                            doppler_t * rx_velocity.dot(p.rx_dir)) / lambda;
                p.weight = std::sqrt(cos_in) / (g.dist_tx * g.dist_rx);
                p.delay = (g.dist_tx + g.dist_rx) / kSpeedOfLight;
                return p;
            }

            double tx_cycles(const PathTerms &p, int index) const
            {
                return p.tx_dir.dot(tx_offsets[std::size_t(index - 1)]) / cfg.carrier_wavelength;
            }

            double rx_cycles(const PathTerms &p, int index) const
            {
                return p.rx_dir.dot(rx_offsets[std::size_t(index - 1)]) / cfg.carrier_wavelength;
            }

            Eigen::VectorXcd tx_steering(const PathTerms &p) const
            {
                Eigen::VectorXcd a(cfg.tx_antennas);
                for (int i = 1; i <= cfg.tx_antennas; ++i)
                    a(i - 1) = cis_cycles(tx_cycles(p, i));
                return a;
            }

            Eigen::VectorXcd rx_steering(const PathTerms &p) const
            {
                Eigen::VectorXcd b(cfg.rx_antennas);
                for (int i = 1; i <= cfg.rx_antennas; ++i)
                    b(i - 1) = cis_cycles(rx_cycles(p, i));
                return b;
            }

            double intra_cycles(const PathTerms &p, int m0, int n0, int cols, int rows) const
            {
                return intra_offset(m0, n0, cols, rows, cfg.unit_width, cfg.unit_height).dot(p.plane_sum) /
                       cfg.carrier_wavelength;
            }
        };

        // Calls f(global unit index, path terms, unit intra cycles) for every unit, sub-array by sub-array
        // (n_sub outer, m_sub inner; n0 outer, m0 inner). f_path(terms) is called once per sub-array first.
        template <class PathFn, class UnitFn>
        void visit_partition(const Context &ctx, const Partition &partition, PathFn &&f_path, UnitFn &&f_unit)
        {
            const int M = ctx.cfg.ris_cols;
            for (int ns = 1; ns <= partition.counts.rows; ++ns)
            {
                const int rows = partition.rows_at(ns);
                for (int ms = 1; ms <= partition.counts.cols; ++ms)
                {
                    const int cols = partition.cols_at(ms);
                    const PathTerms p = ctx.path(partition.a3(ms), partition.a4(ns));
                    f_path(p);
                    for (int n0 = 1; n0 <= rows; ++n0)
                    {
                        const int n = partition.unit_row(ns, n0);
                        for (int m0 = 1; m0 <= cols; ++m0)
                        {
                            const int m = partition.unit_col(ms, m0);
                            const std::size_t u = std::size_t(n - 1) * std::size_t(M) + std::size_t(m - 1);
                            f_unit(u, p, ctx.intra_cycles(p, m0, n0, cols, rows));
                        }
                    }
                }
            }
        }

        // Calls f(global unit index, path terms, φ^dis cycles wrapped to [0, 1)) for every unit.
        template <class UnitFn>
        void visit_distance_phase(const Context &ctx, const Partition &partition, const AntennaPair &pair,
                                  UnitFn &&f)
        {
            if (pair.tx < 1 || pair.tx > ctx.cfg.tx_antennas || pair.rx < 1 || pair.rx > ctx.cfg.rx_antennas)
                throw DomainError("antenna pair (" + std::to_string(pair.tx) + ", " + std::to_string(pair.rx) +
                                  ") outside the arrays");
            double steer = 0.0;
            visit_partition(
                ctx, partition,
                [&](const PathTerms &p) { steer = ctx.tx_cycles(p, pair.tx) + ctx.rx_cycles(p, pair.rx); },
                [&](std::size_t u, const PathTerms &p, double intra) { f(u, p, wrap(-p.common - steer - intra)); });
        }

        void check_partition(const ScenarioConfig &cfg, const Partition &partition)
        {
            long long cols = 0, rows = 0;
            for (int c : partition.col_sizes)
                cols += c;
            for (int r : partition.row_sizes)
                rows += r;
            if (cols != cfg.ris_cols || rows != cfg.ris_rows ||
                partition.col_sizes.size() != std::size_t(partition.counts.cols) ||
                partition.row_sizes.size() != std::size_t(partition.counts.rows))
                throw DimensionMismatchError("partition does not tile the configured RIS");
        }

        // Raw (unnormalised) path sum R = Σ_paths W b aᵀ, accumulated in fixed-size blocks.
        class PathAccumulator
        {
        public:
            PathAccumulator(int tx, int rx, bool keep)
                : a_(tx, kBlock), b_(rx, kBlock), w_(kBlock), sum_(Eigen::MatrixXcd::Zero(rx, tx)), keep_(keep)
            {
            }

            void add(double delay, Complex w, const Eigen::VectorXcd &a, const Eigen::VectorXcd &b)
            {
                a_.col(fill_) = a;
                b_.col(fill_) = b;
                w_(fill_) = w;
                if (++fill_ == kBlock)
                    flush();
                ++count_;
                if (keep_)
                    paths_.push_back({delay, w, a, b});
            }

            const Eigen::MatrixXcd &sum()
            {
                flush();
                return sum_;
            }

            std::size_t count() const { return count_; }

            struct Path
            {
                double delay;
                Complex w;
                Eigen::VectorXcd a;
                Eigen::VectorXcd b;
            };

            const std::vector<Path> &paths() const { return paths_; }

        private:
            void flush()
            {
                if (fill_ == 0)
                    return;
                sum_.noalias() += (b_.leftCols(fill_) * w_.head(fill_).asDiagonal()) * a_.leftCols(fill_).transpose();
                fill_ = 0;
            }

            Eigen::MatrixXcd a_, b_;
            Eigen::VectorXcd w_;
            Eigen::MatrixXcd sum_;
            int fill_ = 0;
            std::size_t count_ = 0;
            bool keep_;
            std::vector<Path> paths_;
        };

        // Per-unit data needed to redraw the path weights in the random-mode ensemble.
        struct EnsembleTable
        {
            std::vector<Complex> common;  // per path
            std::vector<std::size_t> unit; // per unit, global index
            std::vector<std::size_t> path; // per unit
            std::vector<Complex> intra;    // per unit
            Eigen::MatrixXcd a, b;         // per path steering, column-wise

            void set_steering(const std::vector<Eigen::VectorXcd> &tx, const std::vector<Eigen::VectorXcd> &rx,
                              const ScenarioConfig &cfg)
            {
                a.resize(cfg.tx_antennas, Eigen::Index(tx.size()));
                b.resize(cfg.rx_antennas, Eigen::Index(rx.size()));
                for (std::size_t s = 0; s < tx.size(); ++s)
                {
                    a.col(Eigen::Index(s)) = tx[s];
                    b.col(Eigen::Index(s)) = rx[s];
                }
            }
        };

        Eigen::MatrixXd ensemble_upsilon(const EnsembleTable &table, const RisConfiguration &ris)
        {
            if (ris.draws < 1)
                throw DomainError("random mode needs at least one draw");
            const Eigen::Index paths = Eigen::Index(table.common.size());
            Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(table.b.rows(), table.a.rows());
            std::vector<double> theta(ris.amplitudes.size());
            std::mt19937_64 rng(ris.seed);
            Eigen::VectorXcd w(paths);
            for (int k = 0; k < ris.draws; ++k)
            {
                fill_random_phases(rng, theta);
                w.setZero();
                for (std::size_t i = 0; i < table.unit.size(); ++i)
                {
                    const std::size_t u = table.unit[i];
                    w(Eigen::Index(table.path[i])) += std::polar(ris.amplitudes[u], theta[u]) * table.intra[i];
                }
                for (Eigen::Index s = 0; s < paths; ++s)
                    w(s) *= table.common[std::size_t(s)];
                acc += ((table.b * w.asDiagonal()) * table.a.transpose()).cwiseAbs2();
            }
            return acc / double(ris.draws);
        }

        std::vector<Tap> merge_taps(const std::vector<PathAccumulator::Path> &paths, const Eigen::MatrixXd &scale)
        {
            std::vector<Tap> raw;
            raw.reserve(paths.size());
            for (const auto &p : paths)
                raw.push_back({p.delay, scale.cwiseProduct((p.w * p.b * p.a.transpose()).eval())});
            std::stable_sort(raw.begin(), raw.end(), [](const Tap &x, const Tap &y) { return x.delay < y.delay; });

            std::vector<Tap> taps;
            for (auto &t : raw)
            {
                if (!taps.empty() && t.delay - taps.back().delay <= kTapMergeWindow)
                    taps.back().gain += t.gain;
                else
                    taps.push_back(std::move(t));
            }
            return taps;
        }

        // Normalises the raw sum into a snapshot: h = sqrt(Ω / Υ_pq) · R_pq.
        ChannelSnapshot finish(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                               double t, ChannelModel model, PathAccumulator &acc, const EnsembleTable *table,
                               const SynthesisOptions &opts)
        {
            ChannelSnapshot s;
            s.time = t;
            s.model = model;
            s.path_count = acc.count();

            const Eigen::MatrixXcd &raw = acc.sum();
            s.power.omega = path_power_gain(cfg, ris, partition, t);
            s.power.upsilon = ris.mode == RisMode::Random ? ensemble_upsilon(*table, ris) : raw.cwiseAbs2().eval();
            if ((s.power.upsilon.array() <= 0.0).any())
                throw ZeroChannelError("normalisation factor is zero for at least one antenna pair");

            const Eigen::MatrixXd scale = (s.power.omega / s.power.upsilon.array()).sqrt().matrix();
            s.aggregate = scale.cwiseProduct(raw);
            if (opts.keep_taps)
                s.taps = merge_taps(acc.paths(), scale);
            return s;
        }

        void check_inputs(const ScenarioConfig &cfg, const RisConfiguration &ris)
        {
            validate(cfg);
            validate(ris, cfg);
        }
    }

    RisConfiguration RisConfiguration::uniform(const ScenarioConfig &cfg, double amplitude, double phase)
    {
        RisConfiguration r;
        r.cols = cfg.ris_cols;
        r.rows = cfg.ris_rows;
        const std::size_t units = std::size_t(cfg.ris_cols) * std::size_t(cfg.ris_rows);
        r.amplitudes.assign(units, amplitude);
        r.phases.assign(units, kTwoPi * wrap(phase / kTwoPi));
        r.mode = RisMode::Fixed;
        return r;
    }

    RisConfiguration RisConfiguration::random(const ScenarioConfig &cfg, std::uint64_t seed, int draws)
    {
        RisConfiguration r = uniform(cfg);
        r.mode = RisMode::Random;
        r.seed = seed;
        r.draws = draws;
        std::mt19937_64 rng(seed);
        fill_random_phases(rng, r.phases);
        return r;
    }

    void validate(const RisConfiguration &ris, const ScenarioConfig &cfg)
    {
        const std::size_t units = std::size_t(cfg.ris_cols) * std::size_t(cfg.ris_rows);
        if (ris.cols != cfg.ris_cols || ris.rows != cfg.ris_rows || ris.amplitudes.size() != units ||
            ris.phases.size() != units)
            throw ValidationError("ris configuration: size does not match the " + std::to_string(cfg.ris_cols) +
                                  " x " + std::to_string(cfg.ris_rows) + " RIS");
        for (double a : ris.amplitudes)
            if (!(a >= 0.0 && a <= 1.0))
                throw ValidationError("ris configuration: amplitude outside [0, 1]");
        for (double p : ris.phases)
            if (!std::isfinite(p))
                throw ValidationError("ris configuration: non-finite phase");
    }

    const char *to_string(ChannelModel model)
    {
        switch (model)
        {
        case ChannelModel::Spherical:
            return "spherical";
        case ChannelModel::Planar:
            return "planar";
        case ChannelModel::SubArray:
            return "subarray";
        }
        return "unknown";
    }

    ChannelSnapshot spherical_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, double t,
                                  const SynthesisOptions &opts)
    {
        check_inputs(cfg, ris);
        const Context ctx(cfg, t);
        const int M = cfg.ris_cols, N = cfg.ris_rows;
        const bool random = ris.mode == RisMode::Random;

        PathAccumulator acc(cfg.tx_antennas, cfg.rx_antennas, opts.keep_taps);
        EnsembleTable table;
        std::vector<Eigen::VectorXcd> tx_cols, rx_cols;
        for (int n = 1; n <= N; ++n)
        {
            const double a4 = 0.5 * double(2 * n - 1 - N) * cfg.unit_height;
            for (int m = 1; m <= M; ++m)
            {
                const double a3 = 0.5 * double(2 * m - 1 - M) * cfg.unit_width;
                const PathTerms p = ctx.path(a3, a4);
                const std::size_t u = ris.index(m, n);
                const Complex common = cis_cycles(p.common);
                const Eigen::VectorXcd a = ctx.tx_steering(p);
                const Eigen::VectorXcd b = ctx.rx_steering(p);
                acc.add(p.delay, common * std::polar(ris.amplitudes[u], ris.phases[u]), a, b);
                if (random)
                {
                    table.path.push_back(table.common.size());
                    table.common.push_back(common);
                    table.unit.push_back(u);
                    table.intra.push_back(1.0);
                    tx_cols.push_back(a);
                    rx_cols.push_back(b);
                }
            }
        }
        if (random)
            table.set_steering(tx_cols, rx_cols, cfg);

        return finish(cfg, ris, unit_partition(cfg, t), t, ChannelModel::Spherical, acc, random ? &table : nullptr,
                      opts);
    }

    namespace
    {
        ChannelSnapshot subarray_snapshot(const ScenarioConfig &cfg, const RisConfiguration &ris,
                                          const Partition &partition, double t, ChannelModel model,
                                          const SynthesisOptions &opts)
        {
            check_inputs(cfg, ris);
            check_partition(cfg, partition);
            const Context ctx(cfg, t);
            const bool random = ris.mode == RisMode::Random;

            PathAccumulator acc(cfg.tx_antennas, cfg.rx_antennas, opts.keep_taps);
            EnsembleTable table;
            std::vector<Eigen::VectorXcd> tx_cols, rx_cols;

            Complex unit_sum = 0.0;
            const PathTerms *current = nullptr;
            PathTerms held;
            auto close_path = [&]()
            {
                if (current == nullptr)
                    return;
                const Complex common = cis_cycles(held.common);
                const Eigen::VectorXcd a = ctx.tx_steering(held);
                const Eigen::VectorXcd b = ctx.rx_steering(held);
                acc.add(held.delay, common * unit_sum, a, b);
                if (random)
                {
                    table.common.push_back(common);
                    tx_cols.push_back(a);
                    rx_cols.push_back(b);
                }
            };

            visit_partition(
                ctx, partition,
                [&](const PathTerms &p)
                {
                    close_path();
                    held = p;
                    current = &held;
                    unit_sum = 0.0;
                },
                [&](std::size_t u, const PathTerms &, double intra)
                {
                    unit_sum += std::polar(ris.amplitudes[u], ris.phases[u] + kTwoPi * wrap(intra));
                    if (random)
                    {
                        table.path.push_back(table.common.size());
                        table.unit.push_back(u);
                        table.intra.push_back(cis_cycles(intra));
                    }
                });
            close_path();

            if (random)
                table.set_steering(tx_cols, rx_cols, cfg);
            return finish(cfg, ris, partition, t, model, acc, random ? &table : nullptr, opts);
        }
    }

    ChannelSnapshot subarray_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                                 double t, const SynthesisOptions &opts)
    {
        return subarray_snapshot(cfg, ris, partition, t, ChannelModel::SubArray, opts);
    }

    ChannelSnapshot planar_cir(const ScenarioConfig &cfg, const RisConfiguration &ris, double t,
                               const SynthesisOptions &opts)
    {
        return subarray_snapshot(cfg, ris, single_partition(cfg, t), t, ChannelModel::Planar, opts);
    }

    std::vector<double> distance_phase_cycles(const ScenarioConfig &cfg, const Partition &partition, double t,
                                              const AntennaPair &pair)
    {
        validate(cfg);
        check_partition(cfg, partition);
        const Context ctx(cfg, t);
        std::vector<double> cycles(std::size_t(cfg.ris_cols) * std::size_t(cfg.ris_rows));
        visit_distance_phase(ctx, partition, pair,
                             [&](std::size_t u, const PathTerms &, double c) { cycles[u] = c; });
        return cycles;
    }

    RisConfiguration optimal_phases(const ScenarioConfig &cfg, const Partition &partition, double t,
                                    const AntennaPair &reference)
    {
        RisConfiguration r = RisConfiguration::uniform(cfg);
        r.mode = RisMode::Optimal;
        r.reference = reference;
        const std::vector<double> cycles = distance_phase_cycles(cfg, partition, t, reference);
        for (std::size_t u = 0; u < cycles.size(); ++u)
            r.phases[u] = kTwoPi * cycles[u];
        return r;
    }

    namespace
    {
        // |Σ_u g_u χ_u e^{j(φ_u - φ^dis_u)}|², averaged over the random ensemble in random mode.
        template <class WeightFn>
        double coherent_power(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                              double t, const AntennaPair &pair, WeightFn &&weight)
        {
            check_inputs(cfg, ris);
            check_partition(cfg, partition);
            const Context ctx(cfg, t);

            if (ris.mode != RisMode::Random)
            {
                Complex sum = 0.0;
                visit_distance_phase(ctx, partition, pair,
                                     [&](std::size_t u, const PathTerms &p, double c)
                                     {
                                         sum += weight(p) * std::polar(ris.amplitudes[u], ris.phases[u] - kTwoPi * c);
                                     });
                return std::norm(sum);
            }

            if (ris.draws < 1)
                throw DomainError("random mode needs at least one draw");
            std::vector<double> phase(ris.amplitudes.size()), g(ris.amplitudes.size());
            visit_distance_phase(ctx, partition, pair,
                                 [&](std::size_t u, const PathTerms &p, double c)
                                 {
                                     phase[u] = kTwoPi * c;
                                     g[u] = weight(p) * ris.amplitudes[u];
                                 });
            std::vector<double> theta(ris.amplitudes.size());
            std::mt19937_64 rng(ris.seed);
            double acc = 0.0;
            for (int k = 0; k < ris.draws; ++k)
            {
                fill_random_phases(rng, theta);
                Complex sum = 0.0;
                for (std::size_t u = 0; u < theta.size(); ++u)
                    sum += std::polar(g[u], theta[u] - phase[u]);
                acc += std::norm(sum);
            }
            return acc / double(ris.draws);
        }

        double power_prefactor(const ScenarioConfig &cfg)
        {
            const double lambda = cfg.carrier_wavelength;
            const double four_pi = 4.0 * kPi;
            return lambda * lambda * cfg.unit_width * cfg.unit_height / (four_pi * four_pi * four_pi);
        }
    }

    double normalization_factor(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                                double t, const AntennaPair &pair)
    {
        const double u = coherent_power(cfg, ris, partition, t, pair, [](const PathTerms &) { return 1.0; });
        if (!(u > 0.0))
            throw ZeroChannelError("normalisation factor is zero (all amplitudes zero or full cancellation)");
        return u;
    }

    double path_power_gain(const ScenarioConfig &cfg, const RisConfiguration &ris, const Partition &partition,
                           double t)
    {
        return power_prefactor(cfg) *
               coherent_power(cfg, ris, partition, t, ris.reference, [](const PathTerms &p) { return p.weight; });
    }

    double optimal_power_gain(const ScenarioConfig &cfg, const Partition &partition, double t)
    {
        validate(cfg);
        check_partition(cfg, partition);
        const Context ctx(cfg, t);
        double sum = 0.0;
        for (int ns = 1; ns <= partition.counts.rows; ++ns)
            for (int ms = 1; ms <= partition.counts.cols; ++ms)
            {
                const PathTerms p = ctx.path(partition.a3(ms), partition.a4(ns));
                sum += p.weight * double(partition.cols_at(ms)) * double(partition.rows_at(ns));
            }
        return power_prefactor(cfg) * sum * sum;
    }

    Beamformers matched_beamformers(const ChannelSnapshot &snapshot)
    {
        const Eigen::MatrixXcd &h = snapshot.aggregate;
        if (h.size() == 0 || h.cwiseAbs().maxCoeff() == 0.0)
            throw ZeroChannelError("matched beamformers need a non-zero channel");

        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Beamformers f;
        f.tx = svd.matrixV().col(0);
        f.rx = svd.matrixU().col(0).conjugate();

        // Fix the common phase: largest tx component (lowest index on ties) real and positive.
        Eigen::Index k = 0;
        for (Eigen::Index i = 1; i < f.tx.size(); ++i)
            if (std::abs(f.tx(i)) > std::abs(f.tx(k)) + 1e-12)
                k = i;
        const Complex rot = std::polar(1.0, -std::arg(f.tx(k)));
        f.tx *= rot;
        f.rx /= rot;

        f.gain = std::abs((f.rx.transpose() * h * f.tx).value());
        return f;
    }

    ReceivedSignal received_signal(const ChannelSnapshot &snapshot, double tx_power, double noise_variance,
                                   const Beamformers &beamformers, std::uint64_t seed)
    {
        const Eigen::MatrixXcd &h = snapshot.aggregate;
        if (beamformers.tx.size() != h.cols() || beamformers.rx.size() != h.rows())
            throw DimensionMismatchError("beamformers are " + std::to_string(beamformers.rx.size()) + " x " +
                                         std::to_string(beamformers.tx.size()) + ", channel is " +
                                         std::to_string(h.rows()) + " x " + std::to_string(h.cols()));
        if (!(tx_power >= 0.0) || !(noise_variance >= 0.0))
            throw DomainError("transmit power and noise variance must be >= 0");

        const Complex g = (beamformers.rx.transpose() * h * beamformers.tx).value();
        ReceivedSignal r;
        r.y = g * std::sqrt(tx_power);
        if (noise_variance == 0.0)
        {
            r.snr = kUnboundedSnr;
            r.unbounded = true;
            return r;
        }

        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * noise_variance));
        const double re = normal(rng);
        const double im = normal(rng);
        r.y += Complex(re, im);
        r.snr = std::norm(g) * tx_power / noise_variance;
        return r;
    }
}
