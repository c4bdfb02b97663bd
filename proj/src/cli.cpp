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

#include "c2link/cli.hpp"

#include "c2link/channel.hpp"
#include "c2link/e2e.hpp"
#include "c2link/kernels.hpp"
#include "c2link/mathfun.hpp"
#include "c2link/queueing.hpp"
#include "c2link/report.hpp"
#include "c2link/scenario.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

namespace c2link::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_number_list(const std::string& text, const char* what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        const auto e = item.find_last_not_of(" \t");
        const std::string s = item.substr(b, e - b + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size())
            throw UsageError(std::string(what) + ": cannot parse '" + s + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError(std::string(what) + ": empty list");
    return out;
}

void log(const Options& o, std::ostream& err, const std::string& msg)
{
    if (!o.quiet)
        err << "[c2link] " << msg << '\n';
}

void apply_threads(const Options& o)
{
    if (o.threads < 0)
        throw UsageError("--threads must be >= 0");
    if (o.threads > 0)
        omp_set_num_threads(o.threads);
}

void emit(const Options& o, std::ostream& out, const std::string& content)
{
    if (o.out.empty())
        out << content;
    else
        write_file_atomic(o.out, content);
}

void check_format(const Options& o)
{
    if (o.format != "csv" && o.format != "json")
        throw UsageError("--format must be csv or json");
}

// Maps exceptions onto the exit-code contract.
int guarded(const Options& o, std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const IoError& e) {
        err << "c2link: I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const ConfigError& e) {
        err << "c2link: config error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "c2link: usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "c2link: invalid input: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "c2link: error: " << e.what() << '\n';
        (void)o;
        return kUsageError;
    }
}

} // namespace

ScenarioConfig resolve_config(const Options& o)
{
    const char* dir_env = std::getenv("C2LINK_CONFIG_DIR");
    const fs::path dir = dir_env ? fs::path(dir_env) : fs::path();

    ScenarioConfig config;
    if (o.config.empty()) {
        if (!dir.empty() && fs::exists(dir / "default.ini"))
            config = load_config(dir / "default.ini");
    } else {
        fs::path p(o.config);
        if (!fs::exists(p) && !dir.empty()) {
            if (fs::exists(dir / p))
                p = dir / p;
            else if (fs::exists(dir / (o.config + ".ini")))
                p = dir / (o.config + ".ini");
        }
        if (!fs::exists(p))
            throw ConfigError("config '" + o.config + "' not found");
        config = load_config(p);
    }
    for (const auto& kv : o.overrides)
        apply_override(config, kv);
    if (o.seed)
        config.seed = *o.seed;
    config.validate();
    return config;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    return guarded(o, err, [&] {
        check_format(o);
        apply_threads(o);
        ScenarioConfig c = resolve_config(o);
        if (o.rates_kbps)
            c.sweep_rates_kbps = parse_number_list(*o.rates_kbps, "--rates");
        c.validate();
        std::vector<double> rates;
        for (double k : c.sweep_rates_kbps)
            rates.push_back(k * 1e3);
        log(o, err, "config hash " + config_hash(c) + ", seed " + std::to_string(c.seed));
        const auto res = run_rate_sweep(c, rates, [&](const std::string& m) { log(o, err, m); });
        emit(o, out, o.format == "json" ? sweep_json(res) : sweep_csv(res));
        return static_cast<int>(kOk);
    });
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err)
{
    return guarded(o, err, [&] {
        check_format(o);
        apply_threads(o);
        ScenarioConfig c = resolve_config(o);
        if (o.r_edges_m)
            c.region_r_edges_m = parse_number_list(*o.r_edges_m, "--r-edges");
        if (o.rate_edges_kbps)
            c.region_rate_edges_kbps = parse_number_list(*o.rate_edges_kbps, "--rate-edges");
        c.validate();
        std::vector<double> rate_edges;
        for (double k : c.region_rate_edges_kbps)
            rate_edges.push_back(k * 1e3);
        log(o, err, "config hash " + config_hash(c) + ", seed " + std::to_string(c.seed));
        const auto reg = run_operating_region(c, c.region_r_edges_m, rate_edges, [&](const std::string& m) { log(o, err, m); });
        if (!o.quiet)
            err << region_table(reg);
        emit(o, out, o.format == "json" ? region_json(reg) : region_csv(reg));
        return static_cast<int>(kOk);
    });
}

int cmd_link_budget(const Options& o, std::ostream& out, std::ostream& err)
{
    return guarded(o, err, [&] {
        if (o.format != "csv" && o.format != "json" && o.format != "text")
            throw UsageError("--format must be text, csv or json");
        apply_threads(o);
        const ScenarioConfig c = resolve_config(o);
        LinkKind kind;
        try {
            kind = parse_link_kind(o.link);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto b = link_budget(c, kind, o.distance_m, o.rate_kbps * 1e3, c.seed);
        emit(o, out, o.format == "json" ? link_budget_json(b) : link_budget_text(b));
        return static_cast<int>(kOk);
    });
}

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run; // empty string: pass
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<Check> builtin_checks(const ScenarioConfig& c)
{
    std::vector<Check> checks;
    checks.push_back({"fbl_round_trip", [] {
        for (double g_db : {0.0, 5.0, 10.0, 20.0, 30.0})
            for (double d_t : {0.32e-3, 1e-3, 3.2e-3})
                for (double eps : {1e-5, 1e-3, 0.5}) {
                    const double g = db_to_linear(g_db);
                    const double bits = fbl_rate(g, 0.4e6, d_t, eps) * d_t;
                    if (bits <= 0.0)
                        continue;
                    const double back = fbl_error(g, 0.4e6, d_t, bits);
                    if (std::abs(back - eps) > 1e-9 * eps)
                        return "gamma " + fmt(g_db) + " dB, d_t " + fmt(d_t) + ": " + fmt(back) + " != " + fmt(eps);
                }
        return std::string();
    }});
    checks.push_back({"q_inverse_round_trip", [] {
        for (double x = -6.0; x <= 6.0; x += 0.25) {
            const double back = gaussian_q_inv(gaussian_q(x));
            // Q is flat near 1 for negative x; allow for that conditioning
            const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
            if (std::abs(back - x) > 1e-10 + 4e-16 / pdf)
                return "x = " + fmt(x) + " -> " + fmt(back);
        }
        return std::string();
    }});
    checks.push_back({"rician_power_normalization", [] {
        for (double k : {-10.0, 0.0, 5.0, 12.0, 15.0}) {
            LinkModel link;
            link.desired = ChannelTerm{1.0, 0.0, 1.0, 1.0, k, 0.0};
            link.radio = RadioParams{1.0, 1.0, 0.0};
            const auto s = kernels::sample_sinr(link, 200000, RngStream{2024, 77});
            double sum = 0.0;
            for (double v : s)
                sum += v;
            const double mean = sum / static_cast<double>(s.size());
            if (std::abs(mean - 1.0) > 0.01)
                return "K = " + fmt(k) + " dB: mean " + fmt(mean);
        }
        return std::string();
    }});
    checks.push_back({"product_laws", [] {
        const QosTarget qos;
        PathOutcome a, b;
        a.eps_e2e = b.eps_e2e = 1e-3;
        a.d_e2e = 4e-3;
        b.d_e2e = 9e-3;
        const std::vector<PathOutcome> both{a, b};
        const auto comb = combine_paths(both, qos);
        if (std::abs(comb.eps_e2e - 1e-6) > 1e-18 || comb.d_e2e != 4e-3)
            return "combine_paths: " + fmt(comb.eps_e2e) + ", " + fmt(comb.d_e2e);
        std::vector<LinkStats> br(3);
        br[0].eps_t_bar = 1e-2, br[0].d_t_bar = 1e-3;
        br[1].eps_t_bar = 1e-3, br[1].d_t_bar = 2e-3;
        br[2].eps_t_bar = 1e-4, br[2].d_t_bar = 3e-3;
        const auto fd = freq_diversity(br);
        if (std::abs(fd.eps - 1e-9) > 1e-21 || fd.delay_s != 1e-3)
            return "freq_diversity: " + fmt(fd.eps) + ", " + fmt(fd.delay_s);
        return std::string();
    }});
    checks.push_back({"antenna_limits", [] {
        const double af = ula_array_factor(102.0, 8, 102.0);
        if (std::abs(af - 8.0) > 1e-9)
            return "ULA boresight array factor " + fmt(af);
        if (hap_pattern(0.0) != 1.0)
            return std::string("HAP pattern at boresight != 1");
        const double null_deg = std::asin(3.8317059702075123 / (20.0 * M_PI)) * 180.0 / M_PI;
        if (hap_pattern(null_deg) > 1e-12)
            return "HAP pattern at first null " + fmt(hap_pattern(null_deg));
        return std::string();
    }});
    checks.push_back({"effective_bandwidth", [] {
        const double e = effective_bandwidth(QueueSpec{1000.0, 0.3e-3, 1e-7});
        if (std::abs(e - 13420.0) > 10.0)
            return "ground BS effective bandwidth " + fmt(e);
        return std::string();
    }});
    checks.push_back({"kernel_parity", [] {
        LinkModel link;
        link.desired = ChannelTerm{1.0, 90.0, 10.0, 1.0, 8.0, 0.0};
        link.interference.sources.push_back(ChannelTerm{1.0, 95.0, 10.0, 1.0, 5.0, 0.0});
        link.interference.p_interf = 0.3;
        link.interference.mode = InterferenceMode::Bernoulli;
        const RngStream s{99, 1};
        if (kernels::sample_sinr(link, 20000, s) != kernels::serial::sample_sinr(link, 20000, s))
            return std::string("parallel and serial SINR samples differ");
        return std::string();
    }});
    checks.push_back({"queue_capacity", [&c] {
        const std::pair<const char*, std::pair<double, double>> nodes[] = {
            {"gBS", {c.arrival_bs, c.service_bs}}, {"AV", {c.arrival_av, c.service_av}}, {"HAP", {c.arrival_hap, c.service_hap}}};
        for (const auto& [name, v] : nodes)
            if (!queue_feasible(v.second, c.queue(v.first)))
                return std::string(name) + " service rate " + fmt(v.second) + " below effective bandwidth "
                       + fmt(effective_bandwidth(c.queue(v.first)));
        return std::string();
    }});
    return checks;
}

} // namespace

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err)
{
    return guarded(o, err, [&] {
        apply_threads(o);
        int failed = 0;
        ScenarioConfig c;
        try {
            c = resolve_config(o);
            out << "PASS config\n";
        } catch (const ConfigError& e) {
            out << "FAIL config: " << e.what() << '\n';
            ++failed;
        }
        for (const auto& check : builtin_checks(c)) {
            std::string detail;
            try {
                detail = check.run();
            } catch (const std::exception& e) {
                detail = std::string("exception: ") + e.what();
            }
            if (detail.empty()) {
                out << "PASS " << check.name << '\n';
            } else {
                out << "FAIL " << check.name << ": " << detail << '\n';
                ++failed;
            }
        }
        out << (failed ? std::to_string(failed) + " check(s) failed\n" : std::string("all checks passed\n"));
        return failed ? static_cast<int>(kValidationFailed) : static_cast<int>(kOk);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"c2link: URLLC multi-connectivity link simulator for aerial vehicles"};
    app.require_subcommand(1);

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config, "config file or preset name (see C2LINK_CONFIG_DIR)");
        sub->add_option("--seed", o.seed, "master seed (overrides the config)");
        sub->add_option("--out", o.out, "output file; written atomically");
        sub->add_option("--format", o.format, "csv or json");
        sub->add_option("--threads", o.threads, "worker threads (0 = OpenMP default)");
        sub->add_option("--set", o.overrides, "config override key=value (repeatable)");
        sub->add_flag("--quiet", o.quiet, "no progress on standard error");
    };

    auto* sweep = app.add_subcommand("sweep", "end-to-end error and delay versus data rate");
    common(sweep);
    sweep->add_option("--rates", o.rates_kbps, "comma-separated rates in kbps");

    auto* region = app.add_subcommand("region", "minimal feasible path combination per (distance, rate) cell");
    common(region);
    region->add_option("--r-edges", o.r_edges_m, "comma-separated distance bin edges in m");
    region->add_option("--rate-edges", o.rate_edges_kbps, "comma-separated rate bin edges in kbps");

    auto* budget = app.add_subcommand("link-budget", "single-link budget and Monte Carlo error");
    common(budget);
    budget->add_option("--link", o.link, "g2a, a2a, g2h or h2a");
    budget->add_option("--distance", o.distance_m, "horizontal distance in m");
    budget->add_option("--rate", o.rate_kbps, "data rate in kbps");

    auto* validate = app.add_subcommand("validate", "run the built-in invariant checks");
    common(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "c2link: usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (sweep->parsed())
        return cmd_sweep(o, out, err);
    if (region->parsed())
        return cmd_region(o, out, err);
    if (budget->parsed()) {
        if (budget->get_option("--format")->count() == 0)
            o.format = "text";
        return cmd_link_budget(o, out, err);
    }
    return cmd_validate(o, out, err);
}

} // namespace c2link::cli
