#include "tdho/ermakov.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tdho/errors.hpp"

namespace tdho {

double SigmaSolution::sigma_ddot(double t) const {
    const double s = sigma(t);
    const double v = sigma_dot(t);
    const EffectiveParams ep = model_.at(t);
    const double mu_dot = model_.mu_dot(t);
    return -(mu_dot / ep.mu) * v - (ep.omega_sq / ep.mu) * s +
           kappa_ * kappa_ / (ep.mu * ep.mu * s * s * s);
}

SigmaInit equilibrium_init(const EffectiveModel& model, double t0, double kappa) {
    const EffectiveParams ep = model.at(t0);
    if (!(ep.omega_sq > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "equilibrium initial data undefined: omega^2(t0) = " << ep.omega_sq
           << " at t0 = " << t0 << "; supply explicit (sigma0, sigma_dot0)";
        throw std::domain_error(os.str());
    }
    return {std::pow(kappa * kappa / (ep.mu * ep.omega_sq), 0.25), 0.0};
}

SigmaSolution solve_sigma(const EffectiveModel& model, double kappa,
                          const SigmaInit& init, double t0, double t1, double tol,
                          const ErmakovOptions& options) {
    if (!(kappa > 0.0)) throw std::invalid_argument("solve_sigma: kappa must be > 0");
    if (!(init.sigma0 > 0.0))
        throw std::invalid_argument("solve_sigma: sigma0 must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_sigma: tol must be > 0");

    const double k2 = kappa * kappa;
    const double two_kappa = 2.0 * kappa;
    auto rhs = [&model, kappa, k2, two_kappa](double t, const std::vector<double>& y,
                                              std::vector<double>& dydt) {
        const double s = y[0], v = y[1];
        const EffectiveParams ep = model.at(t);
        const double mu_dot = model.mu_dot(t);
        const double s2 = s * s;
        const double barrier = k2 / (ep.mu * s2);
        dydt[0] = v;
        dydt[1] = -(mu_dot / ep.mu) * v - (ep.omega_sq / ep.mu) * s +
                  barrier / (ep.mu * s);
        dydt[2] = kappa / (ep.mu * s2);
        dydt[3] = ep.nu;
        dydt[4] = (ep.mu * v * v + barrier + ep.omega_sq * s2) / two_kappa;
        dydt[5] = (barrier - ep.omega_sq * s2 - ep.mu * v * v) / two_kappa;
    };

    const double floor = options.sigma_floor;
    auto monitor = [floor](double t, const std::vector<double>& y) {
        if (y[0] <= floor) {
            std::ostringstream os;
            os.precision(17);
            os << "sigma reached the floor " << floor << " at t = " << t;
            throw SingularityError(os.str(), t);
        }
        return true;
    };

    OdeOptions ode;
    ode.abs_tol = tol;
    ode.rel_tol = tol;
    ode.max_step = options.max_step;
    ode.fixed_step = options.fixed_step;

    DenseSolution dense = integrate_dopri5(
        rhs, {init.sigma0, init.sigma_dot0, 0.0, 0.0, 0.0, 0.0}, t0, t1, ode,
        model.profile().breakpoints(t0, t1), monitor);
    return SigmaSolution(model, kappa, std::move(dense));
}

InvariantCoeffs coeffs_from_sigma(const SigmaSolution& s, double t) {
    const double sig = s.sigma(t);
    const double v = s.sigma_dot(t);
    const double mu = s.model().mu(t);
    const double k = s.kappa();
    return {mu * mu * v * v + k * k / (sig * sig), sig * sig, -mu * sig * v, 0.0};
}

std::array<double, 3> coefficient_ode_residual(const SigmaSolution& s, double t,
                                               double fd_step) {
    const double h = fd_step;
    if (!(t - 2 * h >= s.t_begin() && t + 2 * h <= s.t_end()))
        throw std::out_of_range("coefficient_ode_residual: stencil leaves horizon");

    auto abc = [&s](double tt) { return coeffs_from_sigma(s, tt); };
    const InvariantCoeffs m2 = abc(t - 2 * h), m1 = abc(t - h), p1 = abc(t + h),
                          p2 = abc(t + 2 * h), c0 = abc(t);

    auto d4 = [h](double f_m2, double f_m1, double f_p1, double f_p2) {
        return (f_m2 - 8.0 * f_m1 + 8.0 * f_p1 - f_p2) / (12.0 * h);
    };
    const double alpha_dot = d4(m2.alpha, m1.alpha, p1.alpha, p2.alpha);
    const double beta_dot = d4(m2.beta, m1.beta, p1.beta, p2.beta);
    const double gamma_dot = d4(m2.gamma, m1.gamma, p1.gamma, p2.gamma);

    const EffectiveParams ep = s.model().at(t);
    return {alpha_dot - 2.0 * ep.omega_sq * c0.gamma,
            beta_dot + 2.0 * c0.gamma / ep.mu,
            gamma_dot + c0.alpha / ep.mu - ep.omega_sq * c0.beta};
}

} // namespace tdho
