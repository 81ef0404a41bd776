#ifndef TDHO_TIME_FUNCTION_HPP
#define TDHO_TIME_FUNCTION_HPP

#include <string>
#include <vector>

namespace tdho {

/// A piecewise-continuous scalar function of time with an analytic first
/// derivative and an explicit list of breakpoints (times where the value or
/// a derivative jumps).  ODE integration restarts at breakpoints.
///
/// Built-in kinds: constant, step, linear ramp, sinusoid, tanh quench, and
/// tabulated samples with natural cubic-spline interpolation.
class TimeFunction {
public:
    static TimeFunction constant(double value);
    // Right-continuous jump: value = before for t < at, after for t >= at.
    static TimeFunction step(double before, double after, double at);
    // Linear between t_start and t_end, constant outside.
    static TimeFunction ramp(double from, double to, double t_start, double t_end);
    // base + amplitude * sin(omega * t + phase)
    static TimeFunction sinusoid(double base, double amplitude, double omega,
                                 double phase = 0.0);
    // before + (after - before) * (1 + tanh((t - center)/width)) / 2
    static TimeFunction tanh_step(double before, double after, double center,
                                  double width);
    // Natural cubic spline through (times[i], values[i]); clamped to the end
    // values outside the node range.  times must be strictly increasing.
    static TimeFunction tabulated(std::vector<double> times,
                                  std::vector<double> values);

    double value(double t) const;
    double derivative(double t) const;

    // Interior discontinuity times, sorted ascending (empty for smooth kinds).
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    bool is_constant() const { return kind_ == Kind::Constant; }

    // Canonical one-line form, e.g. "sinusoid base=1 amplitude=0.2 omega=1
    // phase=0"; parseable by parse() and stable for config hashing.
    std::string describe() const;
    static TimeFunction parse(const std::string& text);

private:
    enum class Kind { Constant, Step, Ramp, Sinusoid, Tanh, Tabulated };

    TimeFunction(Kind kind, std::vector<double> params);

    Kind kind_;
    std::vector<double> params_;
    std::vector<double> breakpoints_;
    // spline data (Tabulated only)
    std::vector<double> knots_, knot_values_, second_derivs_;
};

} // namespace tdho

#endif
