#ifndef TDHO_ODE_HPP
#define TDHO_ODE_HPP

#include <functional>
#include <vector>

namespace tdho {

// Right-hand side y' = f(t, y): writes dydt, same length as y.
using OdeRhs =
    std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

// Called after each accepted step with (t, y); returning false aborts the
// integration (the caller decides what that means).
using OdeMonitor = std::function<bool(double t, const std::vector<double>& y)>;

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.025;   // cap keeps the dense-output error negligible
    double initial_step = 0.0; // 0 -> automatic
    double fixed_step = 0.0;   // > 0 -> non-adaptive, for order studies
    long max_steps = 2000000;
};

/// Continuous extension of a Dormand-Prince 5(4) integration: piecewise
/// quartic interpolant, continuous at step joints, evaluable anywhere in
/// [t_begin, t_end].
class DenseSolution {
public:
    double t_begin() const { return t_begin_; }
    double t_end() const { return t_end_; }
    std::size_t dimension() const { return dim_; }

    void evaluate(double t, std::vector<double>& y) const;
    std::vector<double> evaluate(double t) const;
    double evaluate_component(double t, std::size_t i) const;

    // Accepted step endpoints (strictly increasing, includes both ends).
    const std::vector<double>& step_times() const { return node_times_; }

private:
    friend DenseSolution integrate_dopri5(const OdeRhs&, std::vector<double>, double,
                                          double, const OdeOptions&,
                                          const std::vector<double>&,
                                          const OdeMonitor&);
    std::size_t locate(double t) const;

    std::size_t dim_ = 0;
    double t_begin_ = 0.0, t_end_ = 0.0;
    std::vector<double> node_times_;      // size nsteps + 1
    std::vector<double> coeffs_;          // nsteps * 5 * dim interpolant coefficients
};

/// Integrates y' = f(t, y) from t0 to t1 (t1 > t0) with the Dormand-Prince
/// 5(4) embedded pair and stores the dense output.  The integration is cut at
/// every interior breakpoint and restarted from the left-limit state, so
/// finite jumps in the coefficients are handled exactly.
DenseSolution integrate_dopri5(const OdeRhs& rhs, std::vector<double> y0, double t0,
                               double t1, const OdeOptions& options = {},
                               const std::vector<double>& breakpoints = {},
                               const OdeMonitor& monitor = {});

} // namespace tdho

#endif
