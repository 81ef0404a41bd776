#include "tdho/time_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tdho {

TimeFunction::TimeFunction(Kind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {}

TimeFunction TimeFunction::constant(double value) {
    return TimeFunction(Kind::Constant, {value});
}

TimeFunction TimeFunction::step(double before, double after, double at) {
    TimeFunction f(Kind::Step, {before, after, at});
    f.breakpoints_ = {at};
    return f;
}

TimeFunction TimeFunction::ramp(double from, double to, double t_start, double t_end) {
    if (!(t_start < t_end))
        throw std::invalid_argument("ramp: t_start must be < t_end");
    TimeFunction f(Kind::Ramp, {from, to, t_start, t_end});
    f.breakpoints_ = {t_start, t_end};  // derivative jumps
    return f;
}

TimeFunction TimeFunction::sinusoid(double base, double amplitude, double omega,
                                    double phase) {
    return TimeFunction(Kind::Sinusoid, {base, amplitude, omega, phase});
}

TimeFunction TimeFunction::tanh_step(double before, double after, double center,
                                     double width) {
    if (!(width > 0.0))
        throw std::invalid_argument("tanh_step: width must be positive");
    return TimeFunction(Kind::Tanh, {before, after, center, width});
}

TimeFunction TimeFunction::tabulated(std::vector<double> times,
                                     std::vector<double> values) {
    const std::size_t n = times.size();
    if (n < 2 || values.size() != n)
        throw std::invalid_argument("tabulated: need >= 2 nodes and matching sizes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("tabulated: times must be strictly increasing");

    TimeFunction f(Kind::Tabulated, {});
    // Natural cubic spline: solve the tridiagonal system for y''.
    std::vector<double> m(n, 0.0), u(n, 0.0), z(n, 0.0), l(n, 1.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hi = times[i] - times[i - 1];
        const double hi1 = times[i + 1] - times[i];
        const double a = 6.0 * ((values[i + 1] - values[i]) / hi1 -
                                (values[i] - values[i - 1]) / hi);
        l[i] = 2.0 * (times[i + 1] - times[i - 1]) - hi * u[i - 1];
        u[i] = hi1 / l[i];
        z[i] = (a - hi * z[i - 1]) / l[i];
    }
    for (std::size_t i = n - 1; i-- > 1;)
        m[i] = z[i] - u[i] * m[i + 1];
    f.knots_ = std::move(times);
    f.knot_values_ = std::move(values);
    f.second_derivs_ = std::move(m);
    return f;
}

double TimeFunction::value(double t) const {
    switch (kind_) {
    case Kind::Constant:
        return params_[0];
    case Kind::Step:
        return t < params_[2] ? params_[0] : params_[1];
    case Kind::Ramp: {
        const double from = params_[0], to = params_[1];
        const double a = params_[2], b = params_[3];
        if (t <= a) return from;
        if (t >= b) return to;
        return from + (to - from) * (t - a) / (b - a);
    }
    case Kind::Sinusoid:
        return params_[0] + params_[1] * std::sin(params_[2] * t + params_[3]);
    case Kind::Tanh:
        return params_[0] + (params_[1] - params_[0]) *
                                0.5 * (1.0 + std::tanh((t - params_[2]) / params_[3]));
    case Kind::Tabulated: {
        const auto& x = knots_;
        if (t <= x.front()) return knot_values_.front();
        if (t >= x.back()) return knot_values_.back();
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
        const double h = x[i + 1] - x[i];
        const double A = (x[i + 1] - t) / h, B = (t - x[i]) / h;
        return A * knot_values_[i] + B * knot_values_[i + 1] +
               ((A * A * A - A) * second_derivs_[i] +
                (B * B * B - B) * second_derivs_[i + 1]) * h * h / 6.0;
    }
    }
    return 0.0;  // unreachable
}

double TimeFunction::derivative(double t) const {
    switch (kind_) {
    case Kind::Constant:
    case Kind::Step:
        return 0.0;
    case Kind::Ramp: {
        const double a = params_[2], b = params_[3];
        if (t <= a || t >= b) return 0.0;
        return (params_[1] - params_[0]) / (b - a);
    }
    case Kind::Sinusoid:
        return params_[1] * params_[2] * std::cos(params_[2] * t + params_[3]);
    case Kind::Tanh: {
        const double s = 1.0 / std::cosh((t - params_[2]) / params_[3]);
        return (params_[1] - params_[0]) * 0.5 * s * s / params_[3];
    }
    case Kind::Tabulated: {
        const auto& x = knots_;
        if (t <= x.front() || t >= x.back()) return 0.0;
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
        const double h = x[i + 1] - x[i];
        const double A = (x[i + 1] - t) / h, B = (t - x[i]) / h;
        return (knot_values_[i + 1] - knot_values_[i]) / h +
               (-(3.0 * A * A - 1.0) * second_derivs_[i] +
                (3.0 * B * B - 1.0) * second_derivs_[i + 1]) * h / 6.0;
    }
    }
    return 0.0;  // unreachable
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string TimeFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Constant:
        os << "constant " << fmt(params_[0]);
        break;
    case Kind::Step:
        os << "step before=" << fmt(params_[0]) << " after=" << fmt(params_[1])
           << " at=" << fmt(params_[2]);
        break;
    case Kind::Ramp:
        os << "ramp from=" << fmt(params_[0]) << " to=" << fmt(params_[1])
           << " start=" << fmt(params_[2]) << " end=" << fmt(params_[3]);
        break;
    case Kind::Sinusoid:
        os << "sinusoid base=" << fmt(params_[0]) << " amplitude=" << fmt(params_[1])
           << " omega=" << fmt(params_[2]) << " phase=" << fmt(params_[3]);
        break;
    case Kind::Tanh:
        os << "tanh before=" << fmt(params_[0]) << " after=" << fmt(params_[1])
           << " center=" << fmt(params_[2]) << " width=" << fmt(params_[3]);
        break;
    case Kind::Tabulated:
        os << "table";
        for (std::size_t i = 0; i < knots_.size(); ++i)
            os << " " << fmt(knots_[i]) << "," << fmt(knot_values_[i]);
        break;
    }
    return os.str();
}

TimeFunction TimeFunction::parse(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    if (kind.empty())
        throw std::invalid_argument("empty time-function spec");

    // Collect positional tokens and key=value pairs.
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> kv;
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            positional.push_back(tok);
        else
            kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    auto get = [&](const std::string& key, const char* fallback_pos,
                   double def = 0.0, bool required = true) -> double {
        for (const auto& [k, v] : kv)
            if (k == key) return std::stod(v);
        if (fallback_pos) {
            const std::size_t pos = static_cast<std::size_t>(fallback_pos[0] - '0');
            if (pos < positional.size()) return std::stod(positional[pos]);
        }
        if (required)
            throw std::invalid_argument("time-function spec '" + text +
                                        "' missing parameter '" + key + "'");
        return def;
    };

    if (kind == "constant")
        return constant(get("value", "0"));
    if (kind == "step")
        return step(get("before", "0"), get("after", "1"), get("at", "2"));
    if (kind == "ramp")
        return ramp(get("from", "0"), get("to", "1"), get("start", "2"), get("end", "3"));
    if (kind == "sinusoid")
        return sinusoid(get("base", "0"), get("amplitude", "1"), get("omega", "2"),
                        get("phase", "3", 0.0, false));
    if (kind == "tanh")
        return tanh_step(get("before", "0"), get("after", "1"), get("center", "2"),
                         get("width", "3"));
    if (kind == "table") {
        std::vector<double> ts, vs;
        for (const auto& p : positional) {
            const auto comma = p.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("table nodes must be t,value pairs: " + p);
            ts.push_back(std::stod(p.substr(0, comma)));
            vs.push_back(std::stod(p.substr(comma + 1)));
        }
        return tabulated(std::move(ts), std::move(vs));
    }
    throw std::invalid_argument("unknown time-function kind '" + kind + "'");
}

} // namespace tdho
