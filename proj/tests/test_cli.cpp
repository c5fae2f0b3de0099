// Copyright 2026 The relbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "relbell/cli.hpp"

using relbell::run_cli;

namespace {

struct Run
{
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> const& args)
{
    std::ostringstream out, err;
    int const status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        result.push_back(line);
    return result;
}

}  // namespace

TEST_CASE("wigner")
{
    Run const r = run({"wigner", "--cosh-alpha", "2", "--cosh-delta", "2",
                       "--theta", "0", "--phi", "0", "--sign", "+"});
    CHECK(r.status == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "omega,cos_half,sin_half,axis_x,axis_y,axis_z");
    CHECK(l[1] == "0.643501108793,0.948683298051,0.316227766017,0,-1,0");

    Run const rest = run({"wigner", "--beta", "0", "--delta", "1"});
    CHECK(lines(rest.out)[1].rfind("0,1,0,", 0) == 0);
}

TEST_CASE("domain and usage errors")
{
    CHECK(run({"wigner", "--beta", "1.5"}).status == 2);
    CHECK(run({"wigner", "--beta", "1"}).status == 2);
    CHECK(run({"boost-bell", "--state", "22"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
    CHECK(run({"wigner", "--beta", "0.5", "--cosh-alpha", "2"}).status == 2);
    CHECK(run({"sweep", "--to", "1.0"}).status == 2);
    CHECK(run({"boost-bell", "--case", "A", "--phi", "1"}).status == 2);
    Run const r = run({"wigner", "--beta", "1.5"});
    CHECK(r.err.find("domain error") != std::string::npos);
}

TEST_CASE("boost-bell")
{
    Run const rest = run({"boost-bell", "--state", "00", "--beta", "0",
                          "--format", "json"});
    auto const j = nlohmann::json::parse(rest.out);
    CHECK(j["c00_re"] == 1.0);
    CHECK(j["c11_re"] == 0.0);

    Run const w = run({"boost-bell", "--state", "00", "--cosh-alpha", "2",
                       "--cosh-delta", "2", "--theta", "0", "--format",
                       "json"});
    auto const k = nlohmann::json::parse(w.out);
    CHECK(k["c00_re"].get<double>() == doctest::Approx(0.8));
    CHECK(k["c11_re"].get<double>() == doctest::Approx(-0.6));
    CHECK(k["max_deviation"].get<double>() <= 1e-10);
}

TEST_CASE("correlate and chsh")
{
    Run const c = run({"correlate", "--state", "00", "--cosh-alpha", "2",
                       "--cosh-delta", "2", "--a", "0,0,1", "--b", "0,0,1",
                       "--format", "json"});
    auto const j = nlohmann::json::parse(c.out);
    CHECK(j["expectation_matrix"].get<double>() == doctest::Approx(0.28));
    CHECK(j["expectation_closed"].get<double>() == doctest::Approx(0.28));
    CHECK(j["expectation_dense"].get<double>() == doctest::Approx(0.28));

    Run const s = run({"chsh", "--state", "00", "--canonical", "--beta", "0"});
    CHECK(lines(s.out)[1].rfind("2.82842712475,2.82842712475,", 0) == 0);

    Run const ten = run({"correlate", "--state", "10", "--format", "json"});
    CHECK(nlohmann::json::parse(ten.out)["expectation_closed"].is_null());
}

TEST_CASE("sweep")
{
    Run const r = run({"sweep", "--state", "00", "--param", "beta", "--steps",
                       "200"});
    CHECK(r.status == 0);
    auto const l = lines(r.out);
    REQUIRE(l.size() == 201);
    CHECK(l[0] == "beta,chsh_closed,chsh_matrix,universal_curve,q_minus,q_plus");
    // Zero particle rapidity: no Wigner rotation, all columns coincide.
    CHECK(l[200] == "0.999,2.08733510577,2.08733510577,2.08733510577,1,1");

    Run const again = run({"sweep", "--state", "00", "--param", "beta",
                           "--steps", "200"});
    CHECK(again.out == r.out);
}

TEST_CASE("maximize")
{
    Run const r = run({"maximize", "--state", "00", "--beta", "0", "--seed",
                       "3", "--format", "json"});
    CHECK(r.status == 0);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(2.82842712475));
}

TEST_CASE("verify")
{
    Run const r = run({"verify", "--suite", "oracle", "--samples", "50",
                       "--seed", "42", "--format", "json"});
    CHECK(r.status == 0);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["n_samples"] == 50);

    CHECK(run({"verify", "--samples", "0"}).status == 2);
}

TEST_CASE("help")
{
    Run const r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
