// fntwist: Fenchel-Nielsen twist flow on the once-marked annulus.
//
//   fntwist twist  --coords X1,X2,X3,X4 --t T [--method closed|p-form|oracle] [--format json|csv] [--out PATH]
//   fntwist dehn   --coords X1,X2,X3,X4 --m M [--format json|csv] [--out PATH]
//   fntwist flow   --coords X1,X2,X3,X4 --t TMAX --steps N [--format csv|json] [--out PATH]
//                  [--svg PATH] [--proj logX1,logX2]
//   fntwist verify --samples N --seed S --tol T
//
// Exit codes: 0 success, 1 validation or usage error, 2 verification failure.

#include "fntwist/trajectory.hpp"
#include "fntwist/twist.hpp"
#include "fntwist/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fntwist;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

AnnulusCoords parse_coords(const std::string& text)
{
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            throw UsageError("--coords: '" + std::string(first, last) + "' is not a number");
        values.push_back(v);
        pos = comma + 1;
    }
    if (values.size() != 4)
        throw UsageError("--coords: expected 4 comma-separated values, got " + std::to_string(values.size()));
    return AnnulusCoords{values[0], values[1], values[2], values[3]};
}

/// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw UsageError("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw UsageError("failed writing '" + path + "'");
}

std::string single_result(const std::string& format, const AnnulusCoords& input, const AnnulusCoords& output,
                          const std::string& param_name, double param, std::string_view method)
{
    const TrajectorySample sample = make_sample(param, output);
    if (format == "csv") {
        std::ostringstream oss;
        write_csv(oss, {sample});
        return oss.str();
    }
    nlohmann::ordered_json doc;
    doc["input"] = {{"coords", input.values()}, {param_name, param}};
    if (!method.empty())
        doc["input"]["method"] = std::string(method);
    doc["output"] = output.values();
    doc["L"] = sample.length;
    doc["trace"] = sample.trace;
    return doc.dump(2) + "\n";
}

struct Options {
    std::string coords;
    double t = 0.0;
    int m = 1;
    std::string method = "p-form";
    std::string format;
    std::string out;
    std::string svg;
    std::string proj = "logX1,logX2";
    std::size_t steps = 100;
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

int run_twist(const Options& o)
{
    const AnnulusCoords X = parse_coords(o.coords);
    const TwistMethod method = parse_twist_method(o.method);
    const AnnulusCoords Y = twist(X, TwistParameter(o.t), method);
    emit(o.out, single_result(o.format.empty() ? "json" : o.format, X, Y, "t", o.t, to_string(method)));
    return kExitOk;
}

int run_dehn(const Options& o)
{
    const AnnulusCoords X = parse_coords(o.coords);
    const AnnulusCoords Y = dehn_twist(X, o.m);
    emit(o.out, single_result(o.format.empty() ? "json" : o.format, X, Y, "m", o.m, {}));
    return kExitOk;
}

int run_flow(const Options& o)
{
    const AnnulusCoords X = parse_coords(o.coords);
    const TwistMethod method = parse_twist_method(o.method);
    const Projection projection = parse_projection(o.proj);
    const auto samples = sample_flow(X, o.t, o.steps, method);

    std::ostringstream oss;
    if (o.format.empty() || o.format == "csv")
        write_csv(oss, samples);
    else
        write_json(oss, X, o.t, o.steps, samples);
    emit(o.out, oss.str());

    if (!o.svg.empty())
        emit(o.svg, render_svg(samples, projection));
    return kExitOk;
}

int run_verify(const Options& o)
{
    const VerificationReport report = run_verification(o.samples, o.seed);
    for (const auto& suite : report.suites)
        std::cout << fmt::format("{:<20} max_rel_err={:.3e} cases={} {}\n", suite.name, suite.max_error, suite.cases,
                                 suite.max_error <= o.tol ? "PASS" : "FAIL");
    const bool ok = report.passed(o.tol);
    std::cout << (ok ? "all suites within " : "verification FAILED at tol ") << fmt::format("{:g}", o.tol) << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fenchel-Nielsen twist flow in cross-ratio coordinates of the once-marked annulus"};
    app.require_subcommand(1);

    Options o;
    auto add_coords = [&](CLI::App* cmd) { cmd->add_option("--coords", o.coords, "X1,X2,X3,X4 (positive)")->required(); };
    auto add_output = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("--format", o.format, std::string("csv or json (default ") + default_format + ")")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", o.out, "output path (default stdout)");
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", o.method, "closed, p-form or oracle")
            ->check(CLI::IsMember({"closed", "p-form", "oracle"}));
    };

    CLI::App* twist_cmd = app.add_subcommand("twist", "twist one point by t core lengths");
    add_coords(twist_cmd);
    twist_cmd->add_option("--t", o.t, "twist parameter");
    add_method(twist_cmd);
    add_output(twist_cmd, "json");

    CLI::App* dehn_cmd = app.add_subcommand("dehn", "m-fold Dehn twist (rational map)");
    add_coords(dehn_cmd);
    dehn_cmd->add_option("--m", o.m, "number of Dehn twists (negative for inverse)");
    add_output(dehn_cmd, "json");

    CLI::App* flow_cmd = app.add_subcommand("flow", "sample the twist flow on [0, t]");
    add_coords(flow_cmd);
    flow_cmd->add_option("--t", o.t, "largest twist parameter")->required();
    flow_cmd->add_option("--steps", o.steps, "number of intervals (>= 2)");
    add_method(flow_cmd);
    add_output(flow_cmd, "csv");
    flow_cmd->add_option("--svg", o.svg, "also render the trajectory as SVG");
    flow_cmd->add_option("--proj", o.proj, "SVG axes, Xi,Xj or logXi,logXj");
    flow_cmd->add_option("--seed", o.seed, "accepted for interface uniformity; the flow is deterministic");

    CLI::App* verify_cmd = app.add_subcommand("verify", "seeded self-consistency suites");
    verify_cmd->add_option("--samples", o.samples, "random inputs per suite");
    verify_cmd->add_option("--seed", o.seed, "generator seed");
    verify_cmd->add_option("--tol", o.tol, "maximum relative error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (twist_cmd->parsed())
            return run_twist(o);
        if (dehn_cmd->parsed())
            return run_dehn(o);
        if (flow_cmd->parsed())
            return run_flow(o);
        return run_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
