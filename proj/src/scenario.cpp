// SPDX-License-Identifier: Apache-2.0
//
// c2link: URLLC multi-connectivity link simulator for aerial vehicles
// Copyright (C) 2026 The c2link authors
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

#include "c2link/scenario.hpp"

#include "c2link/kernels.hpp"
#include "c2link/mathfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace c2link {

namespace {

// Stream roles; link streams never depend on the distance bin, so every bin
// reuses the same random numbers.
enum StreamRole : std::uint64_t {
    kPlacement = 1,
    kDestG2a = 2,
    kRelayG2a = 3,
    kA2a = 4,
    kG2h = 5,
    kH2a = 6,
    kBudget = 7,
};

RngStream stream_for(std::uint64_t seed, std::uint64_t role, std::uint64_t a, std::uint64_t b)
{
    return RngStream{seed, mix_stream_id(role, a, b)};
}

constexpr int kDestinationId = 1000;
constexpr int kHapId = 2000;
constexpr int kGroundStationId = 3000;

template <class Item>
void keep_strongest(std::vector<Item>& items, int count)
{
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.first.mean_power_w() > b.first.mean_power_w(); });
    if (static_cast<int>(items.size()) > count)
        items.resize(static_cast<std::size_t>(count));
}

InterfererSet make_interferers(const ScenarioConfig& c, std::vector<std::pair<ChannelTerm, int>> candidates)
{
    keep_strongest(candidates, c.interferer_count);
    InterfererSet set;
    set.p_interf = c.p_interf;
    set.mode = c.interference_mode;
    for (auto& [term, id] : candidates)
        set.sources.push_back(term);
    return set;
}

ChannelTerm g2a_term(const ScenarioConfig& c, const NodePose& bs, const NodePose& av)
{
    const double r2d = distance_2d(bs, av);
    ChannelTerm t;
    t.tx_power_w = dbm_to_watts(c.bs_tx_power_dbm);
    t.path_loss_db = pl_avg_g2a_db(r2d, bs.altitude, av.altitude, c.carrier_ghz, c.env);
    t.tx_gain = ula_gain(zenith_angle_deg(bs, av), c.ula());
    t.rx_gain = db_to_linear(c.av_gain_dbi);
    t.k_factor_db = rice_k_db(LinkKind::G2A, std::abs(elevation_angle_deg(bs, av)), c.rice);
    if (c.env.g2a_shadowing)
        t.shadow_sigma_db = p_los(r2d, bs.altitude, av.altitude, c.env) >= 0.5 ? c.env.sf_sigma_los_db
                                                                                 : c.env.sf_sigma_nlos_db;
    return t;
}

ChannelTerm a2a_term(const ScenarioConfig& c, const NodePose& tx, const NodePose& rx)
{
    ChannelTerm t;
    t.tx_power_w = dbm_to_watts(c.av_tx_power_dbm);
    t.path_loss_db = fspl_db(distance_3d(tx, rx), c.carrier_ghz);
    t.tx_gain = db_to_linear(c.av_gain_dbi);
    t.rx_gain = db_to_linear(c.av_gain_dbi);
    t.k_factor_db = rice_k_db(LinkKind::A2A, std::abs(elevation_angle_deg(tx, rx)), c.rice);
    return t;
}

NodePose beam_target(const NodePose& site)
{
    return NodePose{site.id, NodeKind::GroundBs, site.x, site.y, 0.0};
}

ChannelTerm h2a_term(const ScenarioConfig& c, const NodePose& hap, const NodePose& target, const NodePose& av)
{
    ChannelTerm t;
    t.tx_power_w = dbm_to_watts(c.hap_tx_power_dbm);
    t.path_loss_db = fspl_db(distance_3d(hap, av), c.carrier_ghz);
    t.tx_gain = hap_gain(off_boresight_deg(hap, target, av), c.hap_reflector());
    t.rx_gain = db_to_linear(c.av_gain_dbi);
    t.k_factor_db = rice_k_db(LinkKind::H2A, std::abs(elevation_angle_deg(av, hap)), c.rice);
    return t;
}

LinkModel make_a2a_link(const ScenarioConfig& c, const NodePose& tx, const NodePose& rx, std::span<const NodePose> others)
{
    LinkModel m;
    m.kind = LinkKind::A2A;
    m.desired = a2a_term(c, tx, rx);
    std::vector<std::pair<ChannelTerm, int>> cand;
    for (const auto& o : others)
        cand.emplace_back(a2a_term(c, o, rx), o.id);
    m.interference = make_interferers(c, std::move(cand));
    m.radio = c.radio(c.bandwidth_aa_hz, c.av_noise_figure_db);
    m.distance_m = distance_3d(tx, rx);
    return m;
}

LinkModel make_g2h_link(const ScenarioConfig& c, const NodePose& gs, const NodePose& hap)
{
    const double d = distance_3d(gs, hap);
    const double elev = elevation_angle_deg(gs, hap);
    LinkModel m;
    m.kind = LinkKind::G2H;
    m.desired.tx_power_w = dbm_to_watts(c.gs_tx_power_dbm);
    m.desired.path_loss_db = fspl_db(d, c.carrier_ghz) + clutter_loss_db(elev, c.env);
    m.desired.shadow_sigma_db = c.env.sf_sigma_los_db;
    m.desired.tx_gain = db_to_linear(c.gs_gain_dbi);
    m.desired.rx_gain = c.hap_reflector().max_gain; // feeder beam points at the ground station
    m.desired.k_factor_db = rice_k_db(LinkKind::G2H, elev, c.rice);
    m.interference.p_interf = 0.0;
    m.radio = c.radio(c.bandwidth_gh_hz, c.hap_noise_figure_db);
    m.distance_m = d;
    return m;
}

LinkModel make_h2a_link(const ScenarioConfig& c, const NodePose& hap, const NodePose& av, std::span<const NodePose> sites)
{
    const NodePose& serving = serving_bs(av, sites);
    LinkModel m;
    m.kind = LinkKind::H2A;
    m.desired = h2a_term(c, hap, beam_target(serving), av);
    std::vector<std::pair<ChannelTerm, int>> cand;
    for (const auto& s : sites)
        if (s.id != serving.id)
            cand.emplace_back(h2a_term(c, hap, beam_target(s), av), s.id);
    m.interference = make_interferers(c, std::move(cand));
    m.radio = c.radio(c.bandwidth_ha_hz, c.av_noise_figure_db);
    m.distance_m = distance_3d(hap, av);
    return m;
}

/// Samples drawn once for a link and re-evaluated at every packet duration.
class LinkSampler {
public:
    LinkSampler(const LinkModel& link, const ScenarioConfig& c, RngStream stream, ConditionalTableCache& cache)
        : link_(link)
        , config_(c)
        , cache_(cache)
    {
        samples_ = c.estimator == Estimator::Conditional ? kernels::sample_impairment(link, c.n_samples, stream)
                                                         : kernels::sample_sinr(link, c.n_samples, stream);
    }

    [[nodiscard]] LinkStats at(double d_t) const
    {
        const double bits = config_.packet_size_bits;
        const double bw = link_.radio.bandwidth_hz;
        if (config_.estimator == Estimator::Conditional) {
            const auto table = cache_.get(link_.desired.k_factor_db, bw, d_t, bits);
            return conditional_link_stats(samples_, *table, d_t, config_.arq_max_attempts);
        }
        const auto est = kernels::mean_fbl_error(samples_, {bw, d_t, bits});
        return make_link_stats(est.mean, est.complement, est.std_error, est.n, d_t, config_.arq_max_attempts);
    }

private:
    LinkModel link_;
    const ScenarioConfig& config_;
    ConditionalTableCache& cache_;
    std::vector<double> samples_;
};

struct Accumulator {
    double eps = 0.0, eps_sq = 0.0, d = 0.0, d_sq = 0.0, mc_var = 0.0;
    bool queue_ok = true;
    int n = 0;
    std::vector<BreakdownTerm> delays;

    void add(const PathOutcome& o)
    {
        ++n;
        eps += o.eps_e2e;
        eps_sq += o.eps_e2e * o.eps_e2e;
        d += o.d_e2e;
        d_sq += o.d_e2e * o.d_e2e;
        mc_var += o.eps_std_error * o.eps_std_error;
        queue_ok = queue_ok && o.queue_ok;
        for (const auto& t : o.delays) {
            auto it = std::find_if(delays.begin(), delays.end(), [&](const BreakdownTerm& x) { return x.name == t.name; });
            if (it == delays.end())
                delays.push_back(t);
            else
                it->value += t.value;
        }
    }

    CombinationStats finish(const Combination& combo, const QosTarget& qos) const
    {
        CombinationStats s;
        s.combo = combo;
        s.label = combo.label();
        s.eps_e2e = eps / n;
        s.d_e2e = d / n;
        // per-topology Monte Carlo error is kept undivided: links shared
        // across topologies do not average out
        const double mc_rms_sq = mc_var / n;
        if (n > 1) {
            const double ve = std::max(0.0, eps_sq / n - s.eps_e2e * s.eps_e2e) * n / (n - 1.0);
            s.eps_std_error = std::sqrt(ve / n + mc_rms_sq);
            if (std::isfinite(s.d_e2e)) {
                const double vd = std::max(0.0, d_sq / n - s.d_e2e * s.d_e2e) * n / (n - 1.0);
                s.d_std_error = std::sqrt(vd / n);
            }
        } else {
            s.eps_std_error = std::sqrt(mc_rms_sq);
        }
        s.feasible = queue_ok && meets(qos, s.eps_e2e, s.d_e2e);
        for (const auto& t : delays)
            s.delays.push_back({t.name, t.value / n});
        return s;
    }
};

std::vector<std::size_t> nearest_relays(const NodePose& dest, const std::vector<NodePose>& background, int count)
{
    std::vector<std::size_t> idx(background.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return distance_2d(background[a], dest) < distance_2d(background[b], dest);
    });
    idx.resize(std::min<std::size_t>(idx.size(), static_cast<std::size_t>(std::max(count, 0))));
    return idx;
}

} // namespace

LinkModel make_g2a_link(const ScenarioConfig& c, const NodePose& bs, const NodePose& av, std::span<const NodePose> sites)
{
    LinkModel m;
    m.kind = LinkKind::G2A;
    m.desired = g2a_term(c, bs, av);
    std::vector<std::pair<ChannelTerm, int>> cand;
    for (const auto& s : sites)
        if (s.id != bs.id)
            cand.emplace_back(g2a_term(c, s, av), s.id);
    m.interference = make_interferers(c, std::move(cand));
    m.radio = c.radio(c.bandwidth_ga_hz, c.av_noise_figure_db);
    m.distance_m = distance_3d(bs, av);
    return m;
}

Instance instantiate(const ScenarioConfig& c, std::uint64_t seed, double r_ga_m, int topology_index)
{
    if (!(r_ga_m >= 0.0))
        throw std::invalid_argument("instantiate: r_ga must be non-negative");
    if (topology_index < 0)
        throw std::invalid_argument("instantiate: topology index must be non-negative");

    Instance inst;
    Topology& t = inst.topology;
    t.bs = build_hex_grid(c.grid, c.bs_height_m);
    t.destination = NodePose{kDestinationId, NodeKind::AerialVehicle, r_ga_m, 0.0, c.av_altitude_m};
    Rng rng(stream_for(seed, kPlacement, static_cast<std::uint64_t>(topology_index), 0));
    if (c.av_count > 1)
        t.background = place_avs_uniform(c.av_count - 1, c.grid, c.av_altitude_m, rng, kDestinationId + 1);
    t.relays = nearest_relays(t.destination, t.background, c.max_relays);
    t.hap = NodePose{kHapId, NodeKind::Hap, 0.0, 0.0, c.hap_altitude_m};
    t.ground_station = NodePose{kGroundStationId, NodeKind::GroundStation, c.gs_offset_m, 0.0, 0.0};

    ScenarioLinks& l = inst.links;
    l.g2a = make_g2a_link(c, serving_bs(t.destination, t.bs), t.destination, t.bs);

    std::vector<NodePose> non_relays;
    for (std::size_t i = 0; i < t.background.size(); ++i)
        if (std::find(t.relays.begin(), t.relays.end(), i) == t.relays.end())
            non_relays.push_back(t.background[i]);
    for (std::size_t i : t.relays) {
        const NodePose& relay = t.background[i];
        l.relay_g2a.push_back(make_g2a_link(c, serving_bs(relay, t.bs), relay, t.bs));
        l.a2a.push_back(make_a2a_link(c, relay, t.destination, non_relays));
    }

    l.g2h = make_g2h_link(c, t.ground_station, t.hap);
    l.h2a = make_h2a_link(c, t.hap, t.destination, t.bs);
    l.d_gh_m = distance_3d(t.ground_station, t.hap);
    l.d_ha_m = distance_3d(t.hap, t.destination);
    return inst;
}

std::vector<std::vector<CombinationStats>> evaluate_distance(const ScenarioConfig& c, std::uint64_t seed,
                                                             double r_ga_m, std::span<const double> rates_bps,
                                                             std::span<const Combination> combos,
                                                             ConditionalTableCache& cache)
{
    if (rates_bps.empty())
        throw std::invalid_argument("no rates to evaluate");
    for (double r : rates_bps)
        if (!(r > 0.0))
            throw std::invalid_argument("rates must be positive");
    int relays_needed = 0;
    for (const auto& combo : combos)
        relays_needed = std::max(relays_needed, combo.relays);
    if (relays_needed > c.max_relays)
        throw std::invalid_argument("combination needs more relays than max_relays");

    const QosTarget qos = c.qos();
    PathSpec da2g_spec{c.backhaul(), {c.queue(c.arrival_bs), c.service_bs}, {}, 0.0, 0.0};
    PathSpec a2a_spec{c.backhaul(), {c.queue(c.arrival_bs), c.service_bs}, {c.queue(c.arrival_av), c.service_av}, 0.0, 0.0};

    // links that do not depend on the background AVs
    const Instance first = instantiate(c, seed, r_ga_m, 0);
    std::vector<LinkSampler> dest_branches;
    for (int k = 0; k < c.diversity_order; ++k)
        dest_branches.emplace_back(first.links.g2a, c, stream_for(seed, kDestG2a, static_cast<std::uint64_t>(k), 0), cache);
    const LinkSampler g2h(first.links.g2h, c, stream_for(seed, kG2h, 0, 0), cache);
    const LinkSampler h2a(first.links.h2a, c, stream_for(seed, kH2a, 0, 0), cache);
    PathSpec hap_spec{c.backhaul(), {c.queue(c.arrival_bs), c.service_bs}, {c.queue(c.arrival_hap), c.service_hap},
                      first.links.d_gh_m, first.links.d_ha_m};

    std::vector<PathOutcome> da2g(rates_bps.size()), hap(rates_bps.size());
    for (std::size_t j = 0; j < rates_bps.size(); ++j) {
        const double d_t = c.packet_size_bits / rates_bps[j];
        std::vector<LinkStats> branches;
        for (const auto& b : dest_branches)
            branches.push_back(b.at(d_t));
        da2g[j] = da2g_path(da2g_spec, branches, qos);
        hap[j] = hap_path(hap_spec, g2h.at(d_t), h2a.at(d_t), qos);
    }

    std::vector<std::vector<Accumulator>> acc(rates_bps.size(), std::vector<Accumulator>(combos.size()));
    for (int t = 0; t < c.topologies; ++t) {
        const Instance inst = t == 0 ? first : instantiate(c, seed, r_ga_m, t);
        std::vector<LinkSampler> ga, aa;
        for (int m = 0; m < relays_needed; ++m) {
            const auto tm = static_cast<std::uint64_t>(t);
            const auto mm = static_cast<std::uint64_t>(m);
            ga.emplace_back(inst.links.relay_g2a.at(static_cast<std::size_t>(m)), c, stream_for(seed, kRelayG2a, tm, mm), cache);
            aa.emplace_back(inst.links.a2a.at(static_cast<std::size_t>(m)), c, stream_for(seed, kA2a, tm, mm), cache);
        }
        for (std::size_t j = 0; j < rates_bps.size(); ++j) {
            const double d_t = c.packet_size_bits / rates_bps[j];
            CandidatePaths paths;
            paths.da2g = da2g[j];
            paths.hap = hap[j];
            for (int m = 0; m < relays_needed; ++m)
                paths.a2a.push_back(a2a_path(a2a_spec, ga[static_cast<std::size_t>(m)].at(d_t),
                                             aa[static_cast<std::size_t>(m)].at(d_t), qos));
            for (std::size_t k = 0; k < combos.size(); ++k)
                acc[j][k].add(evaluate_combination(paths, combos[k], qos));
        }
    }

    std::vector<std::vector<CombinationStats>> out(rates_bps.size());
    for (std::size_t j = 0; j < rates_bps.size(); ++j)
        for (std::size_t k = 0; k < combos.size(); ++k)
            out[j].push_back(acc[j][k].finish(combos[k], qos));
    return out;
}

RunMetadata make_metadata(const ScenarioConfig& c)
{
    RunMetadata m;
    m.seed = c.seed;
    m.config_hash = config_hash(c);
    m.n_samples = c.n_samples;
    m.topologies = c.topologies;
    m.estimator = to_string(c.estimator);
    m.interference_mode = to_string(c.interference_mode);
    return m;
}

SweepResult run_rate_sweep(const ScenarioConfig& c, std::span<const double> rates_bps, const ProgressFn& progress)
{
    c.validate();
    if (rates_bps.empty())
        throw std::invalid_argument("rate sweep needs at least one rate");
    for (std::size_t i = 1; i < rates_bps.size(); ++i)
        if (!(rates_bps[i] > rates_bps[i - 1]))
            throw std::invalid_argument("sweep rates must be strictly increasing");

    SweepResult res;
    res.meta = make_metadata(c);
    res.r_ga_m = c.sweep_r_ga_m;
    const auto combos = sweep_combinations(c.max_relays);
    ConditionalTableCache cache;
    if (progress)
        progress("sweep: r_ga = " + std::to_string(c.sweep_r_ga_m) + " m, " + std::to_string(rates_bps.size()) + " rates");
    auto grid = evaluate_distance(c, c.seed, c.sweep_r_ga_m, rates_bps, combos, cache);
    for (std::size_t j = 0; j < rates_bps.size(); ++j)
        res.points.push_back({rates_bps[j], c.packet_size_bits / rates_bps[j], std::move(grid[j])});
    return res;
}

const RegionCell& OperatingRegion::cell(std::size_t r_bin, std::size_t rate_bin) const
{
    if (r_bin >= r_bins() || rate_bin >= rate_bins())
        throw std::out_of_range("region cell index out of range");
    return cells[r_bin * rate_bins() + rate_bin];
}

OperatingRegion run_operating_region(const ScenarioConfig& c, std::span<const double> r_edges_m,
                                     std::span<const double> rate_edges_bps, const ProgressFn& progress)
{
    c.validate();
    auto check_edges = [](std::span<const double> e, const char* what) {
        if (e.size() < 2)
            throw std::invalid_argument(std::string(what) + ": at least two bin edges required");
        if (!(e.front() >= 0.0))
            throw std::invalid_argument(std::string(what) + ": edges must be non-negative");
        for (std::size_t i = 1; i < e.size(); ++i)
            if (!(e[i] > e[i - 1]))
                throw std::invalid_argument(std::string(what) + ": edges must be strictly increasing");
    };
    check_edges(r_edges_m, "distance bins");
    check_edges(rate_edges_bps, "rate bins");

    OperatingRegion reg;
    reg.meta = make_metadata(c);
    reg.r_edges_m.assign(r_edges_m.begin(), r_edges_m.end());
    reg.rate_edges_bps.assign(rate_edges_bps.begin(), rate_edges_bps.end());
    const std::vector<double> rates(rate_edges_bps.begin() + 1, rate_edges_bps.end());
    const auto combos = canonical_combinations(c.max_relays);
    ConditionalTableCache cache;

    for (std::size_t i = 0; i + 1 < r_edges_m.size(); ++i) {
        const double r = 0.5 * (r_edges_m[i] + r_edges_m[i + 1]);
        if (progress)
            progress("region: distance bin " + std::to_string(i + 1) + "/" + std::to_string(r_edges_m.size() - 1));
        auto grid = evaluate_distance(c, c.seed, r, rates, combos, cache);
        for (std::size_t j = 0; j < rates.size(); ++j) {
            RegionCell cell;
            cell.r_lo_m = r_edges_m[i];
            cell.r_hi_m = r_edges_m[i + 1];
            cell.r_eval_m = r;
            cell.rate_lo_bps = rate_edges_bps[j];
            cell.rate_hi_bps = rate_edges_bps[j + 1];
            cell.rate_eval_bps = rates[j];
            cell.label = "none";
            for (std::size_t k = 0; k < grid[j].size(); ++k) {
                if (grid[j][k].feasible) {
                    cell.label = grid[j][k].label;
                    cell.combo_index = static_cast<int>(k);
                    break;
                }
            }
            cell.combos = std::move(grid[j]);
            reg.cells.push_back(std::move(cell));
        }
    }
    return reg;
}

LinkKind parse_link_kind(const std::string& name)
{
    if (name == "g2a" || name == "da2g")
        return LinkKind::G2A;
    if (name == "a2a")
        return LinkKind::A2A;
    if (name == "g2h")
        return LinkKind::G2H;
    if (name == "h2a" || name == "hap")
        return LinkKind::H2A;
    throw std::invalid_argument("unknown link kind '" + name + "' (expected g2a, a2a, g2h or h2a)");
}

LinkBudget link_budget(const ScenarioConfig& c, LinkKind kind, double distance_m, double rate_bps, std::uint64_t seed)
{
    c.validate();
    if (!(distance_m >= 0.0))
        throw std::invalid_argument("link budget: distance must be non-negative");
    if (!(rate_bps > 0.0))
        throw std::invalid_argument("link budget: rate must be positive");

    const auto sites = build_hex_grid(c.grid, c.bs_height_m);
    const NodePose hap{kHapId, NodeKind::Hap, 0.0, 0.0, c.hap_altitude_m};
    LinkBudget b;
    b.kind = kind;
    LinkModel link;
    NodePose tx, rx;
    switch (kind) {
    case LinkKind::G2A:
        tx = sites.front();
        rx = NodePose{kDestinationId, NodeKind::AerialVehicle, distance_m, 0.0, c.av_altitude_m};
        link = make_g2a_link(c, tx, rx, sites);
        b.p_los = p_los(distance_m, tx.altitude, rx.altitude, c.env);
        break;
    case LinkKind::A2A:
        tx = NodePose{kDestinationId + 1, NodeKind::AerialVehicle, 0.0, 0.0, c.av_altitude_m};
        rx = NodePose{kDestinationId, NodeKind::AerialVehicle, distance_m, 0.0, c.av_altitude_m};
        link = make_a2a_link(c, tx, rx, {});
        break;
    case LinkKind::G2H:
        tx = NodePose{kGroundStationId, NodeKind::GroundStation, distance_m, 0.0, 0.0};
        rx = hap;
        link = make_g2h_link(c, tx, rx);
        break;
    case LinkKind::H2A:
        tx = hap;
        rx = NodePose{kDestinationId, NodeKind::AerialVehicle, distance_m, 0.0, c.av_altitude_m};
        link = make_h2a_link(c, tx, rx, sites);
        break;
    }

    b.distance_2d_m = distance_2d(tx, rx);
    b.distance_3d_m = distance_3d(tx, rx);
    b.elevation_deg = std::abs(elevation_angle_deg(tx, rx));
    b.path_loss_db = link.desired.path_loss_db;
    b.tx_gain_db = linear_to_db(link.desired.tx_gain);
    b.rx_gain_db = linear_to_db(link.desired.rx_gain);
    b.k_factor_db = link.desired.k_factor_db;
    b.shadow_sigma_db = link.desired.shadow_sigma_db;
    const double s = link.desired.mean_power_w();
    const double n = link.radio.noise_power_w();
    double i = 0.0;
    for (const auto& src : link.interference.sources)
        i += src.mean_power_w();
    i *= link.interference.p_interf;
    b.rx_power_dbm = linear_to_db(s) + 30.0;
    b.noise_dbm = linear_to_db(n) + 30.0;
    b.mean_snr_db = linear_to_db(s / n);
    b.mean_sinr_db = linear_to_db(s / (n + i));
    b.interferers = static_cast<int>(link.interference.sources.size());
    b.rate_bps = rate_bps;
    b.d_t_s = c.packet_size_bits / rate_bps;
    b.propagation_s = b.distance_3d_m / kSpeedOfLight;

    ConditionalTableCache cache;
    const LinkSampler sampler(link, c, stream_for(seed, kBudget, static_cast<std::uint64_t>(kind), 0), cache);
    b.stats = sampler.at(b.d_t_s);
    return b;
}

} // namespace c2link
