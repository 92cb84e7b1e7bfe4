#include "fntwist/trajectory.hpp"

#include <fmt/format.h>
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fntwist {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 70.0;
constexpr std::size_t kMaxTickLabels = 6;

std::string num(double v)
{
    return fmt::format("{:.17g}", v);
}

Projection::Axis parse_axis(std::string_view text)
{
    bool log = false;
    if (text.substr(0, 3) == "log") {
        log = true;
        text.remove_prefix(3);
    }
    if (text.size() != 2 || text[0] != 'X' || text[1] < '1' || text[1] > '4')
        throw std::invalid_argument("projection axis must be X1..X4 or logX1..logX4");
    return {static_cast<std::size_t>(text[1] - '1'), log};
}

double coordinate(const TrajectorySample& s, const Projection::Axis& axis)
{
    const double v = s.X[axis.index];
    return axis.log ? std::log(v) : v;
}

struct Range {
    double lo;
    double hi;
};

Range autoscale(const std::vector<double>& values)
{
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) {
        const double pad = std::max(0.5, 0.05 * std::fabs(hi));
        lo -= pad;
        hi += pad;
    }
    return {lo, hi};
}

}  // namespace

TrajectorySample make_sample(double t, const AnnulusCoords& X)
{
    const double tr = core_trace(X[0], X[1]);
    return TrajectorySample{t, X.values(), 2.0 * std::acosh(tr / 2.0), tr};
}

std::vector<TrajectorySample> sample_flow(const AnnulusCoords& start, double t_max, std::size_t steps,
                                          TwistMethod method)
{
    if (steps < 2)
        throw std::invalid_argument("flow needs at least 2 steps (got " + std::to_string(steps) + ")");
    if (!std::isfinite(t_max) || !(t_max > 0.0))
        throw std::invalid_argument("flow needs a positive finite t_max");

    std::vector<TrajectorySample> samples;
    samples.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = i == steps ? t_max : t_max * static_cast<double>(i) / static_cast<double>(steps);
        samples.push_back(make_sample(t, twist(start, TwistParameter(t), method)));
    }
    return samples;
}

void write_csv(std::ostream& os, const std::vector<TrajectorySample>& samples)
{
    os << "t,X1,X2,X3,X4,L,trace\n";
    for (const auto& s : samples)
        os << num(s.t) << ',' << num(s.X[0]) << ',' << num(s.X[1]) << ',' << num(s.X[2]) << ',' << num(s.X[3])
           << ',' << num(s.length) << ',' << num(s.trace) << '\n';
}

void write_json(std::ostream& os, const AnnulusCoords& start, double t_max, std::size_t steps,
                const std::vector<TrajectorySample>& samples)
{
    using json = nlohmann::ordered_json;
    const TrajectorySample origin = make_sample(0.0, start);

    json doc;
    doc["input"] = {{"coords", start.values()}, {"t_max", t_max}, {"steps", steps}};
    doc["invariants"] = {{"L", origin.length}, {"trace", origin.trace}};
    json rows = json::array();
    for (const auto& s : samples)
        rows.push_back({{"t", s.t},
                        {"X1", s.X[0]},
                        {"X2", s.X[1]},
                        {"X3", s.X[2]},
                        {"X4", s.X[3]},
                        {"L", s.length},
                        {"trace", s.trace}});
    doc["samples"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

Projection parse_projection(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("projection must be two comma-separated axes, e.g. logX1,logX2");
    Projection p;
    p.horizontal = parse_axis(text.substr(0, comma));
    p.vertical = parse_axis(text.substr(comma + 1));
    if (p.horizontal.index == p.vertical.index)
        throw std::invalid_argument("projection axes must use two different coordinates");
    return p;
}

std::string axis_name(const Projection::Axis& axis)
{
    return fmt::format("{}X{}", axis.log ? "log " : "", axis.index + 1);
}

std::string render_svg(const std::vector<TrajectorySample>& samples, const Projection& projection,
                       std::string_view stroke)
{
    if (samples.empty())
        throw std::invalid_argument("render_svg: no samples");

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& s : samples) {
        xs.push_back(coordinate(s, projection.horizontal));
        ys.push_back(coordinate(s, projection.vertical));
    }
    const Range xr = autoscale(xs);
    const Range yr = autoscale(ys);

    const double left = kMargin, right = kWidth - kMargin / 2.0;
    const double top = kMargin / 2.0, bottom = kHeight - kMargin;
    auto px = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left); };
    auto py = [&](double v) { return bottom - (v - yr.lo) / (yr.hi - yr.lo) * (bottom - top); };

    std::string out;
    auto emit = [&out](const std::string& line) {
        out += line;
        out += '\n';
    };

    emit(R"(<?xml version="1.0" encoding="UTF-8"?>)");
    emit(fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">)",
                     kWidth, kHeight));
    emit(R"(<rect x="0" y="0" width="800" height="600" fill="white"/>)");
    emit(fmt::format(R"(<g stroke="black" stroke-width="1"><line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/>)"
                     R"(<line x1="{0}" y1="{1}" x2="{0}" y2="{3}"/></g>)",
                     left, bottom, right, top));

    emit(R"(<g font-family="sans-serif" font-size="12" fill="black">)");
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">{:.4g}</text>)", left, bottom + 18, xr.lo));
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">{:.4g}</text>)", right, bottom + 18, xr.hi));
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="end">{:.4g}</text>)", left - 6, bottom, yr.lo));
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="end">{:.4g}</text>)", left - 6, top + 4, yr.hi));
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">{}</text>)", (left + right) / 2.0, bottom + 40,
                     axis_name(projection.horizontal)));
    emit(fmt::format(R"svg(<text x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">{}</text>)svg", 20.0,
                     (top + bottom) / 2.0, 20.0, (top + bottom) / 2.0, axis_name(projection.vertical)));
    emit("</g>");

    std::string points;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0)
            points += ' ';
        points += fmt::format("{:.3f},{:.3f}", px(xs[i]), py(ys[i]));
    }
    emit(fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>)", stroke, points));

    const std::size_t labels = std::min(kMaxTickLabels, samples.size());
    emit(R"(<g font-family="sans-serif" font-size="11" fill="black">)");
    for (std::size_t k = 0; k < labels; ++k) {
        const std::size_t i = labels == 1 ? 0 : k * (samples.size() - 1) / (labels - 1);
        emit(fmt::format(R"(<circle cx="{0:.3f}" cy="{1:.3f}" r="3" fill="{2}"/>)"
                         R"(<text x="{3:.3f}" y="{4:.3f}">t={5:.3g}</text>)",
                         px(xs[i]), py(ys[i]), stroke, px(xs[i]) + 5.0, py(ys[i]) - 5.0, samples[i].t));
    }
    emit("</g>");
    emit("</svg>");
    return out;
}

}  // namespace fntwist
