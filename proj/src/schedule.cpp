#include "molgate/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "molgate/errors.hpp"

namespace molgate {

namespace {

void check_interval(double start, double duration, double total, const char* what) {
    if (!(duration > 0.0)) throw ConfigError(std::string(what) + ": duration must be positive");
    if (start < -1e-15 * total || start + duration > total * (1.0 + 1e-12) + 1e-18)
        throw ConfigError(std::string(what) + ": interval outside [0, total_time]");
}

}  // namespace

void Schedule::validate() const {
    if (!(total_time_s > 0.0)) throw ConfigError("schedule: total_time must be positive");
    for (const auto& p : pulses) {
        check_interval(p.t_start_s, p.duration_s, total_time_s, "pulse");
        if (p.from_label == p.to_label)
            throw ConfigError("pulse: transition labels must be distinct");
        if (!(p.rabi_rad_s >= 0.0)) throw ConfigError("pulse: rabi must be >= 0");
    }
    for (const auto& dc : dc_intervals) {
        check_interval(dc.t_start_s, dc.duration_s, total_time_s, "dc interval");
        if (dc.field_V_per_m < 0.0) throw ConfigError("dc interval: field must be >= 0");
    }
    for (const auto& r : rotations) {
        if (r.t_s < 0.0 || r.t_s > total_time_s)
            throw ConfigError("rotation impulse: time outside schedule");
        if (r.from_label == r.to_label)
            throw ConfigError("rotation impulse: transition labels must be distinct");
    }
    for (const auto& k : phase_kicks) {
        if (k.t_s < 0.0 || k.t_s > total_time_s)
            throw ConfigError("phase impulse: time outside schedule");
    }
}

std::vector<double> Schedule::boundaries() const {
    validate();
    std::vector<double> b{0.0, total_time_s};
    for (const auto& p : pulses) {
        b.push_back(p.t_start_s);
        b.push_back(std::min(p.t_end_s(), total_time_s));
    }
    for (const auto& dc : dc_intervals) {
        b.push_back(dc.t_start_s);
        b.push_back(std::min(dc.t_end_s(), total_time_s));
    }
    for (const auto& r : rotations) b.push_back(r.t_s);
    for (const auto& k : phase_kicks) b.push_back(k.t_s);
    std::sort(b.begin(), b.end());
    const double tol = 1e-12 * total_time_s;
    std::vector<double> out;
    for (double t : b) {
        if (out.empty() || t - out.back() > tol) out.push_back(t);
    }
    // keep the exact endpoint
    if (std::abs(out.back() - total_time_s) <= tol) out.back() = total_time_s;
    return out;
}

}  // namespace molgate
