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

#include "relbell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

namespace relbell {

namespace {

//---------------------------------------------------------------------------//
// Output records
//---------------------------------------------------------------------------//

using Value = std::variant<std::monostate, double, long, bool, std::string>;

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
    return buf;
}

// Rows of named fields; a single-row table prints as one JSON object.
class Table
{
  public:
    explicit Table(std::vector<std::string> columns)
        : columns_(std::move(columns))
    {
    }

    void add(std::vector<Value> row)
    {
        if (row.size() != columns_.size())
            throw std::logic_error("row width does not match header");
        rows_.push_back(std::move(row));
    }

    void write(std::ostream& out, bool json, bool single) const
    {
        if (json)
            write_json(out, single);
        else
            write_csv(out);
    }

  private:
    void write_csv(std::ostream& out) const
    {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            out << (i ? "," : "") << columns_[i];
        out << '\n';
        for (auto const& row : rows_)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_cell(row[i]);
            out << '\n';
        }
    }

    void write_json(std::ostream& out, bool single) const
    {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (auto const& row : rows_)
        {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                obj[columns_[i]] = json_cell(row[i]);
            all.push_back(obj);
        }
        out << (single && all.size() == 1 ? all[0] : all).dump(2) << '\n';
    }

    static std::string csv_cell(Value const& v)
    {
        if (auto const* d = std::get_if<double>(&v))
            return format_number(*d);
        if (auto const* l = std::get_if<long>(&v))
            return std::to_string(*l);
        if (auto const* b = std::get_if<bool>(&v))
            return *b ? "true" : "false";
        if (auto const* s = std::get_if<std::string>(&v))
            return *s;
        return "";
    }

    static nlohmann::ordered_json json_cell(Value const& v)
    {
        if (auto const* d = std::get_if<double>(&v))
        {
            if (!std::isfinite(*d))
                return nullptr;
            return std::stod(format_number(*d));
        }
        if (auto const* l = std::get_if<long>(&v))
            return *l;
        if (auto const* b = std::get_if<bool>(&v))
            return *b;
        if (auto const* s = std::get_if<std::string>(&v))
            return *s;
        return nullptr;
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Value>> rows_;
};

Value optional_value(std::optional<double> v)
{
    return v ? Value{*v} : Value{};
}

//---------------------------------------------------------------------------//
// Flags
//---------------------------------------------------------------------------//

struct KinematicsFlags
{
    std::optional<double> beta;
    std::optional<double> cosh_alpha;
    std::optional<double> delta;
    std::optional<double> cosh_delta;
    double theta{0};
    double phi{0};
    double mass{1};

    void attach(CLI::App& app)
    {
        auto* b = app.add_option("--beta", beta, "observer speed in [0, 1)");
        app.add_option("--cosh-alpha", cosh_alpha, "observer cosh(alpha)")
            ->excludes(b);
        auto* d = app.add_option("--delta", delta, "particle rapidity");
        app.add_option("--cosh-delta", cosh_delta, "particle cosh(delta) = p0/m")
            ->excludes(d);
        app.add_option("--theta", theta, "polar angle of +p (radians)");
        app.add_option("--phi", phi, "azimuth of +p (radians)");
        app.add_option("--mass", mass, "particle mass");
    }

    BoostParameters boost() const
    {
        if (cosh_alpha)
            return BoostParameters::from_cosh(*cosh_alpha);
        return BoostParameters::from_beta(beta.value_or(0.0));
    }

    MomentumState momentum() const
    {
        if (cosh_delta)
            return MomentumState::from_cosh(mass, *cosh_delta, theta, phi);
        return MomentumState(mass, delta.value_or(0.0), theta, phi);
    }
};

struct OutputFlags
{
    std::string format{"csv"};

    void attach(CLI::App& app)
    {
        app.add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    bool json() const { return format == "json"; }
};

enum class Case { a, b };

struct CaseFlag
{
    std::string text{"B"};

    void attach(CLI::App& app)
    {
        app.add_option("--case", text,
                       "A: in-plane forms (phi = 0), B: general forms")
            ->check(CLI::IsMember({"A", "B", "a", "b"}));
    }

    Case value() const { return text == "A" || text == "a" ? Case::a : Case::b; }
};

Vec3 parse_vector(std::string const& text)
{
    std::stringstream ss(text);
    std::string item;
    std::vector<double> parts;
    while (std::getline(ss, item, ','))
    {
        std::size_t used = 0;
        double const v = std::stod(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad vector component '" + item + "'");
        parts.push_back(v);
    }
    if (parts.size() != 3)
        throw std::invalid_argument("vector must be 'x,y,z', got '" + text
                                    + "'");
    return {parts[0], parts[1], parts[2]};
}

MeasurementDirection parse_direction(std::string const& text)
{
    return MeasurementDirection::normalized(parse_vector(text));
}

std::optional<double> closed_chsh(BellLabel label, Case c,
                                  BoostParameters const& boost,
                                  MomentumState const& m)
{
    if (c == Case::a)
        return chsh_closed_form(label, boost, in_plane_angles(boost, m));
    return chsh_closed_form(label, boost, angle_decomposition(boost, m));
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//

int cmd_wigner(KinematicsFlags const& k, std::string const& sign_text,
               OutputFlags const& o, std::ostream& out)
{
    WignerRotation const w
        = wigner_rotation(k.boost(), k.momentum(), parse_sign(sign_text));
    Table t({"omega", "cos_half", "sin_half", "axis_x", "axis_y", "axis_z"});
    t.add({w.omega(), w.cos_half, w.sin_half, w.axis.x(), w.axis.y(),
           w.axis.z()});
    t.write(out, o.json(), true);
    return exit_ok;
}

int cmd_boost_bell(KinematicsFlags const& k, std::string const& state,
                   std::string const& path, Case c, OutputFlags const& o,
                   std::ostream& out)
{
    BellLabel const label = parse_bell_label(state);
    BoostParameters const boost = k.boost();
    MomentumState const m = k.momentum();

    BellDecomposition const closed
        = c == Case::a ? boost_bell_in_plane(label, in_plane_angles(boost, m))
                       : boost_bell_closed_form(label,
                                                angle_decomposition(boost, m));
    TwoParticleSpinState const boosted
        = boost_two_particle(bell_state(label), boost, m);
    BellDecomposition const matrix = bell_decompose(boosted);
    BellDecomposition const& shown = path == "matrix" ? matrix : closed;

    std::vector<std::string> cols;
    std::vector<Value> row;
    for (BellLabel l : all_bell_labels)
    {
        cols.push_back("c" + to_string(l) + "_re");
        cols.push_back("c" + to_string(l) + "_im");
        row.push_back(shown[l].real());
        row.push_back(shown[l].imag());
    }
    cols.push_back("prefactor");
    row.push_back(boosted.prefactor);
    if (path == "both")
    {
        cols.push_back("max_deviation");
        row.push_back((closed.coefficients - matrix.coefficients)
                          .cwiseAbs()
                          .maxCoeff());
    }
    Table t(cols);
    t.add(row);
    t.write(out, o.json(), true);
    return exit_ok;
}

int cmd_correlate(KinematicsFlags const& k, std::string const& state,
                  std::string const& a_text, std::string const& b_text, Case c,
                  OutputFlags const& o, std::ostream& out)
{
    BellLabel const label = parse_bell_label(state);
    BoostParameters const boost = k.boost();
    MomentumState const m = k.momentum();
    MeasurementDirection const a = parse_direction(a_text);
    MeasurementDirection const b = parse_direction(b_text);

    TwoParticleSpinState const boosted
        = boost_two_particle(bell_state(label), boost, m);
    std::optional<double> const closed
        = c == Case::a ? expectation_closed_form(
              label, in_plane_angles(boost, m), a, b, boost)
                       : expectation_closed_form(
                           label, angle_decomposition(boost, m), a, b, boost);
    double const dense = dense_expectation(
        boost_two_particle_direct(bell_state(label), boost, m),
        spin_observable(a, boost), spin_observable(b, boost));

    Table t({"expectation_matrix", "expectation_closed", "expectation_dense",
             "classical_limit"});
    t.add({joint_expectation(boosted, a, b, boost), optional_value(closed),
           dense, classical_limit_correlation(a, b)});
    t.write(out, o.json(), true);
    return exit_ok;
}

struct SettingsFlags
{
    std::string a, a_prime, b, b_prime;

    void attach(CLI::App& app)
    {
        app.add_option("--a", a, "custom setting a as x,y,z");
        app.add_option("--a-prime", a_prime, "custom setting a' as x,y,z");
        app.add_option("--b", b, "custom setting b as x,y,z");
        app.add_option("--b-prime", b_prime, "custom setting b' as x,y,z");
    }

    bool custom() const
    {
        return !a.empty() || !a_prime.empty() || !b.empty()
               || !b_prime.empty();
    }

    ChshSettings settings(BellLabel label) const
    {
        if (!custom())
            return canonical_settings(label);
        if (a.empty() || a_prime.empty() || b.empty() || b_prime.empty())
            throw std::invalid_argument(
                "custom settings need --a, --a-prime, --b and --b-prime");
        return {parse_direction(a), parse_direction(a_prime),
                parse_direction(b), parse_direction(b_prime)};
    }
};

int cmd_chsh(KinematicsFlags const& k, std::string const& state,
             SettingsFlags const& s, bool canonical, Case c,
             OutputFlags const& o, std::ostream& out)
{
    if (canonical && s.custom())
        throw std::invalid_argument(
            "--canonical cannot be combined with custom settings");
    BellLabel const label = parse_bell_label(state);
    BoostParameters const boost = k.boost();
    MomentumState const m = k.momentum();
    double const value = chsh_value(label, s.settings(label), boost, m);
    std::optional<double> closed;
    if (!s.custom())
        closed = closed_chsh(label, c, boost, m);

    Table t({"chsh_matrix", "chsh_closed", "universal_curve"});
    t.add({value, optional_value(closed), universal_curve(boost.beta())});
    t.write(out, o.json(), true);
    return exit_ok;
}

struct SweepFlags
{
    std::string param{"beta"};
    std::optional<double> from;
    std::optional<double> to;
    int steps{200};

    void attach(CLI::App& app)
    {
        app.add_option("--param", param, "swept parameter")
            ->check(CLI::IsMember({"beta", "delta", "theta", "phi"}));
        app.add_option("--from", from, "first grid value");
        app.add_option("--to", to, "last grid value");
        app.add_option("--steps", steps, "number of grid points (>= 2)");
    }
};

int cmd_sweep(KinematicsFlags k, std::string const& state,
              SweepFlags const& sw, Case c, OutputFlags const& o,
              std::ostream& out)
{
    BellLabel const label = parse_bell_label(state);
    double const pi = std::numbers::pi;
    double lo = 0, hi = 0.999;
    if (sw.param == "delta")
        hi = 10;
    else if (sw.param == "theta")
        hi = pi;
    else if (sw.param == "phi")
        hi = 2 * pi * (1 - 1.0 / sw.steps);
    lo = sw.from.value_or(lo);
    hi = sw.to.value_or(hi);
    if (sw.steps < 2)
        throw std::invalid_argument("--steps must be at least 2");
    if (!(lo <= hi))
        throw std::invalid_argument("--from must not exceed --to");
    if (sw.param == "beta" && !(lo >= 0 && hi <= 0.999))
        throw std::domain_error("swept beta must stay within [0, 0.999]");
    if (sw.param == "beta" && k.cosh_alpha)
        throw std::invalid_argument("--cosh-alpha conflicts with a beta sweep");
    if (sw.param == "delta" && k.cosh_delta)
        throw std::invalid_argument("--cosh-delta conflicts with a delta sweep");
    if (sw.param == "phi" && c == Case::a)
        throw std::invalid_argument("case A needs phi = 0; sweep with --case B");

    ChshSettings const settings = canonical_settings(label);
    Table t({sw.param, "chsh_closed", "chsh_matrix", "universal_curve",
             "q_minus", "q_plus"});
    for (int i = 0; i < sw.steps; ++i)
    {
        double const v
            = i == sw.steps - 1 ? hi : lo + (hi - lo) * i / (sw.steps - 1);
        if (sw.param == "beta")
            k.beta = v;
        else if (sw.param == "delta")
            k.delta = v;
        else if (sw.param == "theta")
            k.theta = v;
        else
            k.phi = v;
        BoostParameters const boost = k.boost();
        MomentumState const m = k.momentum();
        AngleDecomposition const angles = angle_decomposition(boost, m);
        t.add({v, optional_value(closed_chsh(label, c, boost, m)),
               chsh_value(label, settings, boost, m),
               universal_curve(boost.beta()), angles.q_minus(),
               angles.q_plus()});
    }
    t.write(out, o.json(), false);
    return exit_ok;
}

int cmd_maximize(KinematicsFlags const& k, std::string const& state,
                 MaximizeOptions const& options, OutputFlags const& o,
                 std::ostream& out)
{
    BellLabel const label = parse_bell_label(state);
    BoostParameters const boost = k.boost();
    MomentumState const m = k.momentum();
    MaximizeResult const r = maximize_chsh(label, boost, m, options);
    double const canonical
        = chsh_value(label, canonical_settings(label), boost, m);

    std::vector<std::string> cols{"value", "canonical_value", "converged",
                                  "evaluations"};
    std::vector<Value> row{r.value, canonical, r.converged, r.evaluations};
    auto add_vec = [&](std::string const& name, MeasurementDirection const& d) {
        for (int i = 0; i < 3; ++i)
        {
            cols.push_back(name + "_" + "xyz"[i]);
            row.push_back(d.vec()[i]);
        }
    };
    add_vec("a", r.settings.a);
    add_vec("a_prime", r.settings.a_prime);
    add_vec("b", r.settings.b);
    add_vec("b_prime", r.settings.b_prime);
    Table t(cols);
    t.add(row);
    t.write(out, o.json(), true);
    return exit_ok;
}

void describe_tuple(std::ostream& err, SampleTuple const& s)
{
    err << "  beta=" << format_number(s.beta)
        << " delta=" << format_number(s.delta)
        << " theta=" << format_number(s.theta)
        << " phi=" << format_number(s.phi) << " a=(" << format_number(s.a.x())
        << "," << format_number(s.a.y()) << "," << format_number(s.a.z())
        << ") b=(" << format_number(s.b.x()) << "," << format_number(s.b.y())
        << "," << format_number(s.b.z()) << ") t=" << format_number(s.t)
        << '\n';
}

int cmd_verify(std::string const& suite, int samples, std::uint64_t seed,
               OutputFlags const& o, std::ostream& out, std::ostream& err)
{
    if (samples < 1)
        throw std::invalid_argument("--samples must be at least 1");
    CrosscheckReport report;
    report.seed = seed;
    if (suite == "oracle" || suite == "all")
        report = crosscheck_suite(seed, samples);
    if (suite == "bounds" || suite == "all")
    {
        for (auto const& c : appendix_bounds_suite())
            report.comparisons.push_back(c);
        for (auto const& c : universal_curve_suite())
            report.comparisons.push_back(c);
    }

    if (o.json())
    {
        out << to_json(report).dump(2) << '\n';
    }
    else
    {
        Table t({"comparison", "max_deviation", "tolerance", "passed"});
        for (auto const& c : report.comparisons)
            t.add({c.name, c.max_deviation, c.tolerance, c.passed});
        t.write(out, false, false);
    }
    for (auto const& c : report.comparisons)
    {
        if (!c.passed)
        {
            err << "FAILED " << c.name << ": deviation "
                << format_number(c.max_deviation) << " > "
                << format_number(c.tolerance) << " at\n";
            describe_tuple(err, c.worst);
        }
    }
    return report.passed() ? exit_ok : exit_verification_failure;
}

}  // namespace

nlohmann::json to_json(CrosscheckReport const& report)
{
    auto number = [](double v) -> nlohmann::json {
        if (!std::isfinite(v))
            return nullptr;
        return v;
    };
    nlohmann::json j;
    j["seed"] = report.seed;
    j["n_samples"] = report.n_samples;
    j["passed"] = report.passed();
    j["comparisons"] = nlohmann::json::array();
    for (auto const& c : report.comparisons)
    {
        nlohmann::json const worst{
            {"beta", c.worst.beta},
            {"delta", c.worst.delta},
            {"theta", c.worst.theta},
            {"phi", c.worst.phi},
            {"a", {c.worst.a.x(), c.worst.a.y(), c.worst.a.z()}},
            {"b", {c.worst.b.x(), c.worst.b.y(), c.worst.b.z()}},
            {"t", c.worst.t}};
        j["comparisons"].push_back({{"name", c.name},
                                    {"max_deviation", number(c.max_deviation)},
                                    {"tolerance", c.tolerance},
                                    {"passed", c.passed},
                                    {"worst", worst}});
    }
    return j;
}

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Wigner rotations, boosted Bell states and CHSH values"};
    app.name("relbell");
    app.require_subcommand(1);

    KinematicsFlags kin;
    OutputFlags fmt;
    CaseFlag case_flag;
    std::string sign = "+";
    std::string state = "00";
    std::string path = "both";
    std::string a_text = "0,0,1", b_text = "0,0,1";
    SettingsFlags settings;
    bool canonical = false;
    SweepFlags sweep;
    std::string method = "simplex";
    MaximizeOptions max_opts;
    std::string suite = "all";
    int samples = 1000;
    std::uint64_t seed = 0;

    auto* wigner = app.add_subcommand("wigner", "Wigner rotation of one slot");
    kin.attach(*wigner);
    fmt.attach(*wigner);
    wigner->add_option("--sign", sign, "+ for the particle carrying +p, - for -p");

    auto* bell = app.add_subcommand("boost-bell",
                                    "Bell coefficients of a boosted Bell state");
    kin.attach(*bell);
    fmt.attach(*bell);
    case_flag.attach(*bell);
    bell->add_option("--state", state, "Bell label 00, 01, 10 or 11");
    bell->add_option("--path", path, "closed, matrix or both")
        ->check(CLI::IsMember({"closed", "matrix", "both"}));

    auto* corr = app.add_subcommand("correlate",
                                    "joint expectation of two spin observables");
    kin.attach(*corr);
    fmt.attach(*corr);
    case_flag.attach(*corr);
    corr->add_option("--state", state, "Bell label");
    corr->add_option("--a", a_text, "direction a as x,y,z");
    corr->add_option("--b", b_text, "direction b as x,y,z");

    auto* chsh = app.add_subcommand("chsh", "CHSH value of a boosted Bell state");
    kin.attach(*chsh);
    fmt.attach(*chsh);
    case_flag.attach(*chsh);
    chsh->add_option("--state", state, "Bell label");
    chsh->add_flag("--canonical", canonical, "use the canonical settings");
    settings.attach(*chsh);

    auto* sw = app.add_subcommand("sweep", "CHSH values along a parameter grid");
    kin.attach(*sw);
    fmt.attach(*sw);
    case_flag.attach(*sw);
    sw->add_option("--state", state, "Bell label");
    sweep.attach(*sw);

    auto* maxi = app.add_subcommand("maximize",
                                    "maximize CHSH over measurement settings");
    kin.attach(*maxi);
    fmt.attach(*maxi);
    maxi->add_option("--state", state, "Bell label");
    maxi->add_option("--method", method, "grid or simplex")
        ->check(CLI::IsMember({"grid", "simplex"}));
    maxi->add_option("--seed", max_opts.seed, "seed for the random starts");
    maxi->add_option("--starts", max_opts.starts, "random simplex starts");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    fmt.attach(*verify);
    verify->add_option("--suite", suite, "oracle, bounds or all")
        ->check(CLI::IsMember({"oracle", "bounds", "all"}));
    verify->add_option("--samples", samples, "random samples for the oracle");
    verify->add_option("--seed", seed, "sampling seed");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        CLI::App const* target = &app;
        for (auto const* sub : app.get_subcommands())
            target = sub;
        out << target->help();
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "relbell: " << e.what() << '\n';
        return exit_usage_error;
    }

    try
    {
        if (wigner->parsed())
            return cmd_wigner(kin, sign, fmt, out);
        if (bell->parsed())
            return cmd_boost_bell(kin, state, path, case_flag.value(), fmt, out);
        if (corr->parsed())
            return cmd_correlate(kin, state, a_text, b_text, case_flag.value(),
                                 fmt, out);
        if (chsh->parsed())
            return cmd_chsh(kin, state, settings, canonical, case_flag.value(),
                            fmt, out);
        if (sw->parsed())
            return cmd_sweep(kin, state, sweep, case_flag.value(), fmt, out);
        if (maxi->parsed())
        {
            max_opts.method = parse_maximize_method(method);
            return cmd_maximize(kin, state, max_opts, fmt, out);
        }
        return cmd_verify(suite, samples, seed, fmt, out, err);
    }
    catch (std::domain_error const& e)
    {
        err << "relbell: domain error: " << e.what() << '\n';
    }
    catch (std::invalid_argument const& e)
    {
        err << "relbell: " << e.what() << '\n';
    }
    return exit_usage_error;
}

}  // namespace relbell
