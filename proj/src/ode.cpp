#include "tdho/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output coefficients (Hairer, Norsett & Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace

std::size_t DenseSolution::locate(double t) const {
    if (!(t >= t_begin_ && t <= t_end_)) {
        std::ostringstream os;
        os.precision(17);
        os << "dense evaluation at t = " << t << " outside [" << t_begin_ << ", "
           << t_end_ << "]";
        throw std::out_of_range(os.str());
    }
    const auto it = std::upper_bound(node_times_.begin(), node_times_.end(), t);
    std::size_t seg = static_cast<std::size_t>(it - node_times_.begin());
    seg = (seg == 0) ? 0 : seg - 1;
    return std::min(seg, node_times_.size() - 2);
}

void DenseSolution::evaluate(double t, std::vector<double>& y) const {
    y.resize(dim_);
    const std::size_t seg = locate(t);
    const double h = node_times_[seg + 1] - node_times_[seg];
    const double th = (t - node_times_[seg]) / h;
    const double th1 = 1.0 - th;
    const double* r = coeffs_.data() + seg * 5 * dim_;
    for (std::size_t i = 0; i < dim_; ++i) {
        y[i] = r[i] +
               th * (r[dim_ + i] +
                     th1 * (r[2 * dim_ + i] +
                            th * (r[3 * dim_ + i] + th1 * r[4 * dim_ + i])));
    }
}

std::vector<double> DenseSolution::evaluate(double t) const {
    std::vector<double> y;
    evaluate(t, y);
    return y;
}

double DenseSolution::evaluate_component(double t, std::size_t i) const {
    const std::size_t seg = locate(t);
    const double h = node_times_[seg + 1] - node_times_[seg];
    const double th = (t - node_times_[seg]) / h;
    const double th1 = 1.0 - th;
    const double* r = coeffs_.data() + seg * 5 * dim_;
    return r[i] + th * (r[dim_ + i] +
                        th1 * (r[2 * dim_ + i] +
                               th * (r[3 * dim_ + i] + th1 * r[4 * dim_ + i])));
}

DenseSolution integrate_dopri5(const OdeRhs& rhs, std::vector<double> y0, double t0,
                               double t1, const OdeOptions& options,
                               const std::vector<double>& breakpoints,
                               const OdeMonitor& monitor) {
    if (!(t1 > t0)) throw std::invalid_argument("integrate_dopri5: need t1 > t0");
    const std::size_t n = y0.size();

    DenseSolution sol;
    sol.dim_ = n;
    sol.t_begin_ = t0;
    sol.t_end_ = t1;
    sol.node_times_.push_back(t0);

    // Segment boundaries: interior breakpoints clipped to (t0, t1), plus t1.
    std::vector<double> cuts;
    for (double b : breakpoints)
        if (b > t0 && b < t1) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(t1);

    std::vector<double> y = std::move(y0);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n),
        ynew(n);
    long steps_taken = 0;
    double t = t0;

    for (double t_stop : cuts) {
        rhs(t, y, k1);  // first stage of the segment (FSAL restart)

        // Initial step size guess.
        double h;
        if (options.fixed_step > 0.0) {
            h = options.fixed_step;
        } else if (options.initial_step > 0.0) {
            h = options.initial_step;
        } else {
            // h0 ~ 0.01 ||y||_sc / ||y'||_sc (tolerance-scaled norms cancel).
            double d0 = 0.0, d1 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double s = options.abs_tol + options.rel_tol * std::abs(y[i]);
                d0 = std::max(d0, std::abs(y[i]) / s);
                d1 = std::max(d1, std::abs(k1[i]) / s);
            }
            h = (d0 > 0.0 && d1 > 0.0) ? 0.01 * d0 / d1 : 1e-3 * (t_stop - t);
        }
        h = std::min({h, options.max_step, t_stop - t});

        while (t < t_stop) {
            if (++steps_taken > options.max_steps)
                throw IntegrationError("step limit exceeded");
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                throw IntegrationError("step size underflow");
            const bool last = (t + h >= t_stop - 1e-14 * std::max(1.0, std::abs(t_stop)));
            if (last) h = t_stop - t;

            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + h * a21 * k1[i];
            rhs(t + c2 * h, ytmp, k2);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            rhs(t + c3 * h, ytmp, k3);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            rhs(t + c4 * h, ytmp, k4);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                      a54 * k4[i]);
            rhs(t + c5 * h, ytmp, k5);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                      a64 * k4[i] + a65 * k5[i]);
            rhs(t + h, ytmp, k6);
            for (std::size_t i = 0; i < n; ++i)
                ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                      b5 * k5[i] + b6 * k6[i]);
            rhs(t + h, ynew, k7);

            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                       e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sc = options.abs_tol +
                                  options.rel_tol * std::max(std::abs(y[i]),
                                                             std::abs(ynew[i]));
                err += (ei / sc) * (ei / sc);
            }
            err = std::sqrt(err / double(n));

            const bool accept = (options.fixed_step > 0.0) || (err <= 1.0);
            if (accept) {
                // Dense-output coefficients for this step.
                const std::size_t base = sol.coeffs_.size();
                sol.coeffs_.resize(base + 5 * n);
                double* r = sol.coeffs_.data() + base;
                for (std::size_t i = 0; i < n; ++i) {
                    const double ydiff = ynew[i] - y[i];
                    const double bspl = h * k1[i] - ydiff;
                    r[i] = y[i];
                    r[n + i] = ydiff;
                    r[2 * n + i] = bspl;
                    r[3 * n + i] = ydiff - h * k7[i] - bspl;
                    r[4 * n + i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                        d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
                }
                t = last ? t_stop : t + h;
                sol.node_times_.push_back(t);
                y.swap(ynew);
                k1.swap(k7);  // FSAL
                if (monitor && !monitor(t, y))
                    throw IntegrationError("integration aborted by monitor");
            }

            if (options.fixed_step <= 0.0) {
                const double fac =
                    std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2),
                               accept ? 0.2 : 0.1, accept ? 5.0 : 1.0);
                h = std::min({h * fac, options.max_step, t_stop - t});
                if (t < t_stop && h <= 0.0) h = options.max_step;
            } else {
                h = std::min(options.fixed_step, t_stop - t);
            }
        }
    }
    return sol;
}

} // namespace tdho
