#pragma once

#include "fntwist/twist.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fntwist {

/// One point of a twist trajectory. `length` and `trace` are recomputed from
/// the twisted coordinates, so they show the invariance of the core length.
struct TrajectorySample {
    double t;
    std::array<double, 4> X;
    double length;
    double trace;
};

TrajectorySample make_sample(double t, const AnnulusCoords& X);

/// steps + 1 samples at t = t_max * i / steps (the last one exactly t_max).
/// Throws std::invalid_argument unless steps >= 2 and t_max > 0.
std::vector<TrajectorySample> sample_flow(const AnnulusCoords& start, double t_max, std::size_t steps,
                                          TwistMethod method = TwistMethod::PForm);

/// Header `t,X1,X2,X3,X4,L,trace`, 17 significant digits, '\n' after every
/// row.
void write_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);

/// {"input": {"coords", "t_max", "steps"}, "invariants": {"L", "trace"},
///  "samples": [{"t", "X1", "X2", "X3", "X4", "L", "trace"}, ...]}
void write_json(std::ostream& os, const AnnulusCoords& start, double t_max, std::size_t steps,
                const std::vector<TrajectorySample>& samples);

/// Two coordinate axes, each X_k or log X_k.
struct Projection {
    struct Axis {
        std::size_t index;  ///< 0-based coordinate index
        bool log;
    };
    Axis horizontal{0, true};
    Axis vertical{1, true};
};

/// Parses "Xi,Xj" or "logXi,logXj" (i, j in 1..4; each axis may carry its
/// own log prefix). Throws std::invalid_argument on anything else.
Projection parse_projection(std::string_view text);

std::string axis_name(const Projection::Axis& axis);

/// Standalone SVG (viewBox 0 0 800 600): framed axes with min/max labels,
/// the trajectory as a magenta polyline, and up to six labelled t marks.
std::string render_svg(const std::vector<TrajectorySample>& samples, const Projection& projection,
                       std::string_view stroke = "magenta");

}  // namespace fntwist
