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

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "c2link");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = c2link::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// keeps the commands fast and independent of any preset directory
const std::vector<std::string> kSmall{"--set", "n_samples=2000", "--set", "topologies=1", "--quiet"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

fs::path scratch()
{
    const auto d = fs::temp_directory_path() / ("c2link_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string field(const std::string& text, const std::string& name)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(name + " ", 0) == 0) {
            const auto pos = line.find_first_not_of(' ', name.size());
            return line.substr(pos);
        }
    return {};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("usage errors exit with 2")
    {
        ::unsetenv("C2LINK_CONFIG_DIR");
        CHECK(run({"sweep", "--bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"nonsense"}).code == 2);
        CHECK(run(with({"region", "--rate-edges", ""}, kSmall)).code == 2);
        CHECK(run(with({"region", "--r-edges", "0,x,20"}, kSmall)).code == 2);
        CHECK(run(with({"sweep", "--set", "p_interf=1.5", "--rates", "50"}, kSmall)).code == 2);
        CHECK(run(with({"sweep", "--rates", "100,50"}, kSmall)).code == 2);
        CHECK(run({"link-budget", "--link", "x2y"}).code == 2);
        CHECK(run({"link-budget", "--link", "a2a", "--distance", "0"}).code == 2);
        CHECK(run({"sweep", "--config", "/no/such/file.ini"}).code == 2);
        CHECK(run({"sweep", "--format", "xml"}).code == 2);
        const auto help = run({"--help"});
        CHECK(help.code == 0);
        CHECK(help.out.find("sweep") != std::string::npos);
    }

    TEST_CASE("missing output directory exits with 3")
    {
        const auto r = run(with({"sweep", "--rates", "50", "--out", "/no/such/dir/out.csv"}, kSmall));
        CHECK(r.code == 3);
        CHECK_FALSE(r.err.empty());
    }

    TEST_CASE("validate")
    {
        const auto ok = run({"validate", "--threads", "1"});
        CHECK(ok.code == 0);
        CHECK(ok.out.find("PASS config") != std::string::npos);
        CHECK(ok.out.find("all checks passed") != std::string::npos);
        CHECK(ok.out.find("FAIL") == std::string::npos);
        // transcript does not depend on the thread count
        CHECK(run({"validate", "--threads", "8"}).out == ok.out);

        const auto dir = scratch();
        const auto bad = dir / "bad.ini";
        std::ofstream(bad) << "[environment]\nclutter_loss_db = 0,0,0,0,-3,0,0,0,0\n";
        const auto v = run({"validate", "--config", bad.string()});
        CHECK(v.code == 1);
        CHECK(v.out.find("FAIL config") != std::string::npos);
        CHECK(v.out.find("environment.clutter_loss_db") != std::string::npos);
        fs::remove_all(dir);
    }

    TEST_CASE("presets resolve through the config directory")
    {
        const auto dir = scratch();
        std::ofstream(dir / "tiny.ini") << "n_samples = 1500\ntopologies = 1\n";
        ::setenv("C2LINK_CONFIG_DIR", dir.string().c_str(), 1);
        const auto r = run({"sweep", "--config", "tiny", "--rates", "50", "--format", "json", "--quiet"});
        ::unsetenv("C2LINK_CONFIG_DIR");
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["meta"]["n_samples"] == 1500);
        fs::remove_all(dir);
    }

    TEST_CASE("link budgets")
    {
        const auto g = run({"link-budget", "--link", "g2a", "--distance", "150", "--set", "n_samples=2000"});
        REQUIRE(g.code == 0);
        CHECK(std::stod(field(g.out, "p_los")) > 0.99);
        CHECK(std::stod(field(g.out, "interferers")) == 6);

        const auto h = run({"link-budget", "--link", "h2a", "--distance", "0", "--set", "n_samples=2000"});
        REQUIRE(h.code == 0);
        CHECK(std::abs(std::stod(field(h.out, "propagation_us")) - 65.7) < 0.05);
        CHECK(field(h.out, "p_los").empty());

        const auto j = run({"link-budget", "--link", "g2h", "--distance", "5000", "--format", "json",
                            "--set", "n_samples=2000"});
        REQUIRE(j.code == 0);
        const auto parsed = nlohmann::json::parse(j.out);
        CHECK(parsed["link"] == "g2h");
        CHECK(parsed["p_los"].is_null());
    }

    TEST_CASE("runs are reproducible")
    {
        const auto args = with({"sweep", "--rates", "50,200", "--seed", "42"}, kSmall);
        const auto a = run(args);
        const auto b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("seed=42") != std::string::npos);
        const auto other = run(with({"sweep", "--rates", "50,200", "--seed", "43"}, kSmall));
        CHECK(other.out != a.out);

        const auto j = run(with({"sweep", "--rates", "50", "--format", "json"}, kSmall));
        REQUIRE(j.code == 0);
        const auto parsed = nlohmann::json::parse(j.out);
        CHECK(parsed["meta"]["config_hash"].get<std::string>().size() == 16);
        CHECK(parsed["points"][0]["combinations"][0].contains("eps_std_error"));
    }

    TEST_CASE("output files")
    {
        const auto dir = scratch();
        const auto target = dir / "region.csv";
        const auto r = run(with({"region", "--r-edges", "0,100", "--rate-edges", "0,200", "--out", target.string()},
                                kSmall));
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(target);
        std::string first;
        std::getline(in, first);
        CHECK(first.rfind("# c2link region", 0) == 0);
        fs::remove_all(dir);
    }
}
