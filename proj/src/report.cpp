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

#include "c2link/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace c2link {

namespace {

using nlohmann::ordered_json;

std::string num(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// JSON has no infinity; unbounded delays are written as null
ordered_json jnum(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string header_comment(const char* kind, const RunMetadata& m)
{
    return std::string("# c2link ") + kind + " schema=" + std::to_string(kSchemaVersion) + " config_hash=" + m.config_hash
           + " seed=" + std::to_string(m.seed) + " n_samples=" + std::to_string(m.n_samples)
           + " topologies=" + std::to_string(m.topologies) + " estimator=" + m.estimator
           + " interference=" + m.interference_mode + " relays=" + m.relay_selection + "\n";
}

ordered_json meta_json(const RunMetadata& m)
{
    return {{"schema", kSchemaVersion},
            {"config_hash", m.config_hash},
            {"seed", m.seed},
            {"n_samples", m.n_samples},
            {"topologies", m.topologies},
            {"estimator", m.estimator},
            {"interference_mode", m.interference_mode},
            {"relay_selection", m.relay_selection}};
}

ordered_json combo_json(const CombinationStats& s)
{
    ordered_json delays = ordered_json::object();
    for (const auto& t : s.delays)
        delays[t.name] = jnum(t.value);
    return {{"label", s.label},
            {"paths", s.combo.path_count()},
            {"eps_e2e", s.eps_e2e},
            {"eps_std_error", s.eps_std_error},
            {"d_e2e_s", jnum(s.d_e2e)},
            {"d_std_error_s", jnum(s.d_std_error)},
            {"feasible", s.feasible},
            {"delay_breakdown_s", delays}};
}

} // namespace

std::string sweep_csv(const SweepResult& r)
{
    std::string out = header_comment("sweep", r.meta);
    out += "rate_kbps,combination,paths,eps_e2e,eps_std_error,d_e2e_ms,d_std_error_ms,feasible\n";
    for (const auto& p : r.points)
        for (const auto& s : p.combos)
            out += num(p.rate_bps / 1e3) + "," + csv_field(s.label) + "," + std::to_string(s.combo.path_count()) + ","
                   + num(s.eps_e2e) + "," + num(s.eps_std_error) + "," + num(s.d_e2e * 1e3) + ","
                   + num(s.d_std_error * 1e3) + "," + (s.feasible ? "1" : "0") + "\n";
    return out;
}

std::string sweep_json(const SweepResult& r)
{
    ordered_json j;
    j["meta"] = meta_json(r.meta);
    j["r_ga_m"] = r.r_ga_m;
    j["points"] = ordered_json::array();
    for (const auto& p : r.points) {
        ordered_json pj{{"rate_bps", p.rate_bps}, {"d_t_s", p.d_t_s}, {"combinations", ordered_json::array()}};
        for (const auto& s : p.combos)
            pj["combinations"].push_back(combo_json(s));
        j["points"].push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
}

std::string region_csv(const OperatingRegion& reg)
{
    std::string out = header_comment("region", reg.meta);
    out += "r_bin,rate_bin,r_lo_m,r_hi_m,rate_lo_kbps,rate_hi_kbps,label\n";
    for (std::size_t i = 0; i < reg.r_bins(); ++i)
        for (std::size_t j = 0; j < reg.rate_bins(); ++j) {
            const auto& c = reg.cell(i, j);
            out += std::to_string(i) + "," + std::to_string(j) + "," + num(c.r_lo_m) + "," + num(c.r_hi_m) + ","
                   + num(c.rate_lo_bps / 1e3) + "," + num(c.rate_hi_bps / 1e3) + "," + csv_field(c.label) + "\n";
        }
    return out;
}

std::string region_json(const OperatingRegion& reg)
{
    ordered_json j;
    j["meta"] = meta_json(reg.meta);
    j["r_edges_m"] = reg.r_edges_m;
    j["rate_edges_bps"] = reg.rate_edges_bps;
    j["evaluation"] = {{"distance", "bin center"}, {"rate", "upper bin edge"}};
    j["cells"] = ordered_json::array();
    for (const auto& c : reg.cells) {
        ordered_json cj{{"r_lo_m", c.r_lo_m},
                        {"r_hi_m", c.r_hi_m},
                        {"rate_lo_bps", c.rate_lo_bps},
                        {"rate_hi_bps", c.rate_hi_bps},
                        {"label", c.label},
                        {"combinations", ordered_json::array()}};
        for (const auto& s : c.combos)
            cj["combinations"].push_back(combo_json(s));
        j["cells"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

std::string region_table(const OperatingRegion& reg)
{
    // short codes: D = DA2G, digits = relays, H = HAP
    auto code = [](const RegionCell& c) -> std::string {
        if (c.combo_index < 0)
            return "-";
        const auto& combo = c.combos.at(static_cast<std::size_t>(c.combo_index)).combo;
        std::string s = "D";
        if (combo.relays > 0)
            s += std::to_string(combo.relays);
        if (combo.hap)
            s += "H";
        return s;
    };
    std::ostringstream os;
    os << "rate_kbps \\ r_m";
    for (std::size_t i = 0; i < reg.r_bins(); ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%5.0f", reg.r_edges_m[i]);
        os << ' ' << buf;
    }
    os << '\n';
    for (std::size_t j = reg.rate_bins(); j-- > 0;) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%6.0f-%-7.0f", reg.rate_edges_bps[j] / 1e3, reg.rate_edges_bps[j + 1] / 1e3);
        os << buf << "  ";
        for (std::size_t i = 0; i < reg.r_bins(); ++i) {
            std::snprintf(buf, sizeof buf, "%5s", code(reg.cell(i, j)).c_str());
            os << ' ' << buf;
        }
        os << '\n';
    }
    os << "codes: D = DA2G, digit = number of A2A relays, H = HAP, - = none\n";
    return os.str();
}

std::string link_budget_text(const LinkBudget& b)
{
    std::ostringstream os;
    os << "link              " << to_string(b.kind) << '\n'
       << "distance_2d_m     " << num(b.distance_2d_m) << '\n'
       << "distance_3d_m     " << num(b.distance_3d_m) << '\n'
       << "elevation_deg     " << num(b.elevation_deg) << '\n';
    if (b.p_los)
        os << "p_los             " << num(*b.p_los) << '\n';
    os << "path_loss_db      " << num(b.path_loss_db) << '\n'
       << "tx_gain_db        " << num(b.tx_gain_db) << '\n'
       << "rx_gain_db        " << num(b.rx_gain_db) << '\n'
       << "rice_k_db         " << num(b.k_factor_db) << '\n'
       << "shadow_sigma_db   " << num(b.shadow_sigma_db) << '\n'
       << "rx_power_dbm      " << num(b.rx_power_dbm) << '\n'
       << "noise_dbm         " << num(b.noise_dbm) << '\n'
       << "mean_snr_db       " << num(b.mean_snr_db) << '\n'
       << "mean_sinr_db      " << num(b.mean_sinr_db) << '\n'
       << "interferers       " << b.interferers << '\n'
       << "rate_kbps         " << num(b.rate_bps / 1e3) << '\n'
       << "d_t_ms            " << num(b.d_t_s * 1e3) << '\n'
       << "eps_t_bar         " << num(b.stats.eps_t_bar) << '\n'
       << "eps_std_error     " << num(b.stats.std_error) << '\n'
       << "d_t_bar_ms        " << num(b.stats.d_t_bar * 1e3) << '\n'
       << "propagation_us    " << num(b.propagation_s * 1e6) << '\n';
    return os.str();
}

std::string link_budget_json(const LinkBudget& b)
{
    ordered_json j{{"link", to_string(b.kind)},
                   {"distance_2d_m", b.distance_2d_m},
                   {"distance_3d_m", b.distance_3d_m},
                   {"elevation_deg", b.elevation_deg},
                   {"p_los", b.p_los ? ordered_json(*b.p_los) : ordered_json(nullptr)},
                   {"path_loss_db", b.path_loss_db},
                   {"tx_gain_db", jnum(b.tx_gain_db)},
                   {"rx_gain_db", jnum(b.rx_gain_db)},
                   {"rice_k_db", b.k_factor_db},
                   {"shadow_sigma_db", b.shadow_sigma_db},
                   {"rx_power_dbm", jnum(b.rx_power_dbm)},
                   {"noise_dbm", b.noise_dbm},
                   {"mean_snr_db", jnum(b.mean_snr_db)},
                   {"mean_sinr_db", jnum(b.mean_sinr_db)},
                   {"interferers", b.interferers},
                   {"rate_bps", b.rate_bps},
                   {"d_t_s", b.d_t_s},
                   {"eps_t_bar", b.stats.eps_t_bar},
                   {"eps_std_error", b.stats.std_error},
                   {"d_t_bar_s", jnum(b.stats.d_t_bar)},
                   {"n_samples", b.stats.n_samples},
                   {"propagation_s", b.propagation_s}};
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::error_code ec;
    if (!fs::is_directory(parent, ec))
        throw IoError("output directory '" + parent.string() + "' does not exist");

    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

} // namespace c2link
