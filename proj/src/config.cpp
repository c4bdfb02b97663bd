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

#include "c2link/config.hpp"

#include "c2link/mathfun.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace c2link {

ConfigError::ConfigError(const std::string& message, std::string key)
    : std::invalid_argument(message)
    , key_(std::move(key))
{
}

const char* to_string(Estimator e)
{
    return e == Estimator::Plain ? "plain" : "conditional";
}

ScenarioConfig::ScenarioConfig()
{
    for (int i = 0; i <= 20; ++i)
        sweep_rates_kbps.push_back(std::round(10.0 * std::pow(100.0, i / 20.0) * 1000.0) / 1000.0);
    for (int r = 0; r <= 260; r += 20)
        region_r_edges_m.push_back(r);
    for (int k = 0; k <= 1000; k += 100)
        region_rate_edges_kbps.push_back(k);
}

QosTarget ScenarioConfig::qos() const
{
    return {delay_threshold_ms * 1e-3, packet_loss_target};
}

BackhaulSpec ScenarioConfig::backhaul() const
{
    return {backhaul_delay_ms * 1e-3, backhaul_failure_prob};
}

QueueSpec ScenarioConfig::queue(double arrival) const
{
    return {arrival, queue_delay_bound_ms * 1e-3, queue_violation_prob};
}

UlaAntenna ScenarioConfig::ula() const
{
    return {ula_elements, db_to_linear(ula_element_gain_dbi), ula_downtilt_deg};
}

ReflectorAntenna ScenarioConfig::hap_reflector() const
{
    return {db_to_linear(hap_gain_dbi), hap_aperture_wavelengths};
}

RadioParams ScenarioConfig::radio(double bandwidth_hz, double noise_figure_db) const
{
    return {bandwidth_hz, dbm_to_watts(noise_density_dbm_hz), noise_figure_db};
}

namespace {

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format_double(double v)
{
    // shortest form that reads back to the same double
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_number(const std::string& raw, const std::string& key)
{
    const std::string s = trim(raw);
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ConfigError("key '" + key + "': cannot parse '" + s + "' as a number", key);
    return v;
}

bool parse_bool(const std::string& raw, const std::string& key)
{
    const std::string s = trim(raw);
    if (s == "true" || s == "1" || s == "on" || s == "yes")
        return true;
    if (s == "false" || s == "0" || s == "off" || s == "no")
        return false;
    throw ConfigError("key '" + key + "': expected true/false, got '" + s + "'", key);
}

std::vector<double> parse_list(const std::string& raw, const std::string& key)
{
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number<double>(item, key));
    return out;
}

std::string format_list(std::span<const double> v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += format_double(v[i]);
    }
    return s;
}

struct Field {
    std::string key;
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <class T, class Access>
Field make_field(std::string key, Access access)
{
    Field f;
    f.key = key;
    f.set = [access, key](ScenarioConfig& c, const std::string& v) {
        T& ref = access(c);
        if constexpr (std::is_same_v<T, bool>)
            ref = parse_bool(v, key);
        else if constexpr (std::is_same_v<T, std::vector<double>>)
            ref = parse_list(v, key);
        else if constexpr (std::is_same_v<T, ClutterTable>) {
            const auto list = parse_list(v, key);
            if (list.size() != ref.size())
                throw ConfigError("key '" + key + "': expected 9 comma-separated values", key);
            std::copy(list.begin(), list.end(), ref.begin());
        } else
            ref = parse_number<T>(v, key);
    };
    f.get = [access](const ScenarioConfig& c) -> std::string {
        const T& ref = access(const_cast<ScenarioConfig&>(c));
        if constexpr (std::is_same_v<T, bool>)
            return ref ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::vector<double>> || std::is_same_v<T, ClutterTable>)
            return format_list(ref);
        else if constexpr (std::is_floating_point_v<T>)
            return format_double(ref);
        else
            return std::to_string(ref);
    };
    return f;
}

#define C2_FIELD(T, key, expr) make_field<T>(key, [](ScenarioConfig& c) -> T& { return expr; })

const std::vector<Field>& registry()
{
    static const std::vector<Field> fields = [] {
        std::vector<Field> f{
            C2_FIELD(std::uint64_t, "seed", c.seed),
            C2_FIELD(std::int64_t, "n_samples", c.n_samples),
            C2_FIELD(int, "topologies", c.topologies),
            C2_FIELD(double, "p_interf", c.p_interf),
            C2_FIELD(double, "packet_size_bits", c.packet_size_bits),
            C2_FIELD(double, "packet_loss_target", c.packet_loss_target),
            C2_FIELD(double, "delay_threshold_ms", c.delay_threshold_ms),
            C2_FIELD(double, "backhaul_failure_prob", c.backhaul_failure_prob),
            C2_FIELD(double, "backhaul_delay_ms", c.backhaul_delay_ms),
            C2_FIELD(double, "carrier_ghz", c.carrier_ghz),
            C2_FIELD(int, "av_count", c.av_count),
            C2_FIELD(int, "interferer_count", c.interferer_count),
            C2_FIELD(int, "max_relays", c.max_relays),
            C2_FIELD(int, "diversity_order", c.diversity_order),
            C2_FIELD(int, "arq_max_attempts", c.arq_max_attempts),
            C2_FIELD(bool, "g2a_shadow_fading", c.env.g2a_shadowing),

            C2_FIELD(int, "grid.tiers", c.grid.tiers),
            C2_FIELD(double, "grid.isd_m", c.grid.isd_m),
            C2_FIELD(double, "grid.bs_height_m", c.bs_height_m),
            C2_FIELD(double, "grid.av_altitude_m", c.av_altitude_m),
            C2_FIELD(double, "grid.hap_altitude_m", c.hap_altitude_m),
            C2_FIELD(double, "grid.gs_offset_m", c.gs_offset_m),

            C2_FIELD(double, "radio.bandwidth_ga_hz", c.bandwidth_ga_hz),
            C2_FIELD(double, "radio.bandwidth_aa_hz", c.bandwidth_aa_hz),
            C2_FIELD(double, "radio.bandwidth_ha_hz", c.bandwidth_ha_hz),
            C2_FIELD(double, "radio.bandwidth_gh_hz", c.bandwidth_gh_hz),
            C2_FIELD(double, "radio.noise_density_dbm_hz", c.noise_density_dbm_hz),
            C2_FIELD(double, "radio.av_noise_figure_db", c.av_noise_figure_db),
            C2_FIELD(double, "radio.hap_noise_figure_db", c.hap_noise_figure_db),
            C2_FIELD(double, "radio.av_tx_power_dbm", c.av_tx_power_dbm),
            C2_FIELD(double, "radio.bs_tx_power_dbm", c.bs_tx_power_dbm),
            C2_FIELD(double, "radio.hap_tx_power_dbm", c.hap_tx_power_dbm),
            C2_FIELD(double, "radio.gs_tx_power_dbm", c.gs_tx_power_dbm),

            C2_FIELD(int, "antenna.ula_elements", c.ula_elements),
            C2_FIELD(double, "antenna.ula_element_gain_dbi", c.ula_element_gain_dbi),
            C2_FIELD(double, "antenna.ula_downtilt_deg", c.ula_downtilt_deg),
            C2_FIELD(double, "antenna.hap_gain_dbi", c.hap_gain_dbi),
            C2_FIELD(double, "antenna.hap_aperture_wavelengths", c.hap_aperture_wavelengths),
            C2_FIELD(double, "antenna.av_gain_dbi", c.av_gain_dbi),
            C2_FIELD(double, "antenna.gs_gain_dbi", c.gs_gain_dbi),

            C2_FIELD(double, "environment.q1", c.env.q1),
            C2_FIELD(double, "environment.q2", c.env.q2),
            C2_FIELD(double, "environment.q3", c.env.q3),
            C2_FIELD(double, "environment.sf_sigma_los_db", c.env.sf_sigma_los_db),
            C2_FIELD(double, "environment.sf_sigma_nlos_db", c.env.sf_sigma_nlos_db),
            C2_FIELD(ClutterTable, "environment.clutter_loss_db", c.env.clutter_loss_db),

            C2_FIELD(double, "rice.g2a_min_db", c.rice.g2a.k_min_db),
            C2_FIELD(double, "rice.g2a_max_db", c.rice.g2a.k_max_db),
            C2_FIELD(double, "rice.a2a_min_db", c.rice.a2a.k_min_db),
            C2_FIELD(double, "rice.a2a_max_db", c.rice.a2a.k_max_db),
            C2_FIELD(double, "rice.g2h_min_db", c.rice.g2h.k_min_db),
            C2_FIELD(double, "rice.g2h_max_db", c.rice.g2h.k_max_db),
            C2_FIELD(double, "rice.h2a_min_db", c.rice.h2a.k_min_db),
            C2_FIELD(double, "rice.h2a_max_db", c.rice.h2a.k_max_db),

            C2_FIELD(double, "queue.delay_bound_ms", c.queue_delay_bound_ms),
            C2_FIELD(double, "queue.violation_prob", c.queue_violation_prob),
            C2_FIELD(double, "queue.arrival_bs", c.arrival_bs),
            C2_FIELD(double, "queue.arrival_av", c.arrival_av),
            C2_FIELD(double, "queue.arrival_hap", c.arrival_hap),
            C2_FIELD(double, "queue.service_bs", c.service_bs),
            C2_FIELD(double, "queue.service_av", c.service_av),
            C2_FIELD(double, "queue.service_hap", c.service_hap),

            C2_FIELD(double, "sweep.r_ga_m", c.sweep_r_ga_m),
            C2_FIELD(std::vector<double>, "sweep.rates_kbps", c.sweep_rates_kbps),

            C2_FIELD(std::vector<double>, "region.r_edges_m", c.region_r_edges_m),
            C2_FIELD(std::vector<double>, "region.rate_edges_kbps", c.region_rate_edges_kbps),
        };

        auto choice = [](std::string key, auto set, auto get) { return Field{std::move(key), set, get}; };
        f.insert(f.begin() + 4,
                 choice(
                     "interference_mode",
                     [](ScenarioConfig& c, const std::string& v) {
                         const auto s = trim(v);
                         if (s == "expected")
                             c.interference_mode = InterferenceMode::Expected;
                         else if (s == "bernoulli")
                             c.interference_mode = InterferenceMode::Bernoulli;
                         else
                             throw ConfigError("key 'interference_mode': expected expected|bernoulli", "interference_mode");
                     },
                     [](const ScenarioConfig& c) { return std::string(to_string(c.interference_mode)); }));
        f.insert(f.begin() + 5,
                 choice(
                     "estimator",
                     [](ScenarioConfig& c, const std::string& v) {
                         const auto s = trim(v);
                         if (s == "plain")
                             c.estimator = Estimator::Plain;
                         else if (s == "conditional")
                             c.estimator = Estimator::Conditional;
                         else
                             throw ConfigError("key 'estimator': expected plain|conditional", "estimator");
                     },
                     [](const ScenarioConfig& c) { return std::string(to_string(c.estimator)); }));
        f.push_back(choice(
            "pl_mixture",
            [](ScenarioConfig& c, const std::string& v) {
                const auto s = trim(v);
                if (s == "db")
                    c.env.mixture = PathLossMixture::Decibel;
                else if (s == "linear")
                    c.env.mixture = PathLossMixture::Linear;
                else
                    throw ConfigError("key 'pl_mixture': expected db|linear", "pl_mixture");
            },
            [](const ScenarioConfig& c) { return std::string(c.env.mixture == PathLossMixture::Linear ? "linear" : "db"); }));
        return f;
    }();
    return fields;
}

#undef C2_FIELD

const Field* find_field(const std::string& key)
{
    for (const auto& f : registry())
        if (f.key == key)
            return &f;
    return nullptr;
}

void set_field(ScenarioConfig& c, const std::string& key, const std::string& value)
{
    const Field* f = find_field(key);
    if (!f)
        throw ConfigError("unknown key '" + key + "'", key);
    f->set(c, value);
}

void require(bool ok, const char* key, const std::string& what)
{
    if (!ok)
        throw ConfigError("key '" + std::string(key) + "': " + what, key);
}

bool is_prob(double p) { return p >= 0.0 && p <= 1.0; }

bool strictly_increasing(std::span<const double> v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            return false;
    return true;
}

} // namespace

void ScenarioConfig::validate() const
{
    require(n_samples >= 1, "n_samples", "must be >= 1");
    require(topologies >= 1, "topologies", "must be >= 1");
    require(is_prob(p_interf), "p_interf", "must lie in [0, 1]");
    require(packet_size_bits > 0.0, "packet_size_bits", "must be positive");
    require(packet_loss_target > 0.0 && packet_loss_target <= 1.0, "packet_loss_target", "must lie in (0, 1]");
    require(delay_threshold_ms > 0.0, "delay_threshold_ms", "must be positive");
    require(backhaul_failure_prob >= 0.0 && backhaul_failure_prob < 1.0, "backhaul_failure_prob", "must lie in [0, 1)");
    require(backhaul_delay_ms >= 0.0, "backhaul_delay_ms", "must be non-negative");
    require(carrier_ghz > 0.0, "carrier_ghz", "must be positive");
    require(av_count >= 1, "av_count", "must be >= 1");
    require(max_relays >= 0 && max_relays <= 3, "max_relays", "must lie in [0, 3]");
    require(max_relays <= av_count - 1, "max_relays", "exceeds the number of background AVs");
    require(interferer_count >= 0, "interferer_count", "must be >= 0");
    require(diversity_order >= 1, "diversity_order", "must be >= 1");
    require(arq_max_attempts >= 0, "arq_max_attempts", "must be >= 0 (0 = unbounded)");

    require(grid.tiers >= 0, "grid.tiers", "must be >= 0");
    require(grid.isd_m > 0.0, "grid.isd_m", "must be positive");
    require(bs_height_m > 0.0, "grid.bs_height_m", "must be positive");
    require(av_altitude_m > 0.0 && av_altitude_m != bs_height_m, "grid.av_altitude_m", "must be positive and differ from the BS height");
    require(hap_altitude_m > av_altitude_m, "grid.hap_altitude_m", "must exceed the AV altitude");
    require(gs_offset_m >= 0.0, "grid.gs_offset_m", "must be non-negative");

    require(bandwidth_ga_hz > 0.0, "radio.bandwidth_ga_hz", "must be positive");
    require(bandwidth_aa_hz > 0.0, "radio.bandwidth_aa_hz", "must be positive");
    require(bandwidth_ha_hz > 0.0, "radio.bandwidth_ha_hz", "must be positive");
    require(bandwidth_gh_hz > 0.0, "radio.bandwidth_gh_hz", "must be positive");
    require(std::isfinite(noise_density_dbm_hz), "radio.noise_density_dbm_hz", "must be finite");
    require(av_noise_figure_db >= 0.0, "radio.av_noise_figure_db", "must be non-negative");
    require(hap_noise_figure_db >= 0.0, "radio.hap_noise_figure_db", "must be non-negative");

    require(ula_elements >= 1, "antenna.ula_elements", "must be >= 1");
    require(ula_downtilt_deg > 90.0 && ula_downtilt_deg < 180.0, "antenna.ula_downtilt_deg", "must lie in (90, 180)");
    require(hap_aperture_wavelengths > 0.0, "antenna.hap_aperture_wavelengths", "must be positive");

    require(env.q1 > 0.0, "environment.q1", "must be positive");
    require(env.q2 > 0.0, "environment.q2", "must be positive");
    require(env.q3 > 0.0, "environment.q3", "must be positive");
    require(env.sf_sigma_los_db >= 0.0, "environment.sf_sigma_los_db", "must be non-negative");
    require(env.sf_sigma_nlos_db >= 0.0, "environment.sf_sigma_nlos_db", "must be non-negative");
    for (double v : env.clutter_loss_db)
        require(v >= 0.0 && std::isfinite(v), "environment.clutter_loss_db", "clutter losses must be non-negative");

    const std::pair<const RiceRange*, const char*> rice_keys[] = {
        {&rice.g2a, "rice.g2a_max_db"}, {&rice.a2a, "rice.a2a_max_db"},
        {&rice.g2h, "rice.g2h_max_db"}, {&rice.h2a, "rice.h2a_max_db"}};
    for (const auto& [r, key] : rice_keys)
        require(std::isfinite(r->k_min_db) && std::isfinite(r->k_max_db) && r->k_max_db >= r->k_min_db, key,
                "must be finite and >= the matching minimum");

    require(queue_delay_bound_ms > 0.0, "queue.delay_bound_ms", "must be positive");
    require(queue_violation_prob > 0.0 && queue_violation_prob < 1.0, "queue.violation_prob", "must lie in (0, 1)");
    require(arrival_bs > 0.0, "queue.arrival_bs", "must be positive");
    require(arrival_av > 0.0, "queue.arrival_av", "must be positive");
    require(arrival_hap > 0.0, "queue.arrival_hap", "must be positive");
    require(service_bs >= 0.0, "queue.service_bs", "must be non-negative");
    require(service_av >= 0.0, "queue.service_av", "must be non-negative");
    require(service_hap >= 0.0, "queue.service_hap", "must be non-negative");

    require(sweep_r_ga_m >= 0.0, "sweep.r_ga_m", "must be non-negative");
    require(!sweep_rates_kbps.empty(), "sweep.rates_kbps", "must not be empty");
    require(sweep_rates_kbps.front() > 0.0 && strictly_increasing(sweep_rates_kbps), "sweep.rates_kbps",
            "must be positive and strictly increasing");
    require(region_r_edges_m.size() >= 2, "region.r_edges_m", "needs at least two edges");
    require(region_r_edges_m.front() >= 0.0 && strictly_increasing(region_r_edges_m), "region.r_edges_m",
            "must be non-negative and strictly increasing");
    require(region_rate_edges_kbps.size() >= 2, "region.rate_edges_kbps", "needs at least two edges");
    require(region_rate_edges_kbps.front() >= 0.0 && strictly_increasing(region_rate_edges_kbps),
            "region.rate_edges_kbps", "must be non-negative and strictly increasing");
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin)
{
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(origin + ":" + std::to_string(e.line()) + ": " + e.message());
    }

    ScenarioConfig c;
    for (const auto& [name, node] : tree) {
        if (node.empty()) {
            set_field(c, name, node.data());
            continue;
        }
        for (const auto& [key, leaf] : node) {
            if (!leaf.empty())
                throw ConfigError("nested value under '" + name + "." + key + "'", name + "." + key);
            set_field(c, name + "." + key, leaf.data());
        }
    }
    c.validate();
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

void apply_override(ScenarioConfig& config, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override '" + assignment + "' is not key=value");
    ScenarioConfig next = config;
    set_field(next, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
    next.validate();
    config = std::move(next);
}

std::string dump_config(const ScenarioConfig& config)
{
    std::string out;
    std::string section;
    for (const auto& f : registry()) {
        const auto dot = f.key.find('.');
        if (dot == std::string::npos)
            out += f.key + " = " + f.get(config) + "\n";
    }
    for (const auto& f : registry()) {
        const auto dot = f.key.find('.');
        if (dot == std::string::npos)
            continue;
        const std::string s = f.key.substr(0, dot);
        if (s != section) {
            out += "\n[" + s + "]\n";
            section = s;
        }
        out += f.key.substr(dot + 1) + " = " + f.get(config) + "\n";
    }
    return out;
}

std::string config_hash(const ScenarioConfig& config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : dump_config(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> config_keys()
{
    std::vector<std::string> keys;
    for (const auto& f : registry())
        keys.push_back(f.key);
    return keys;
}

} // namespace c2link
