#ifndef TDHO_ERMAKOV_HPP
#define TDHO_ERMAKOV_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "tdho/ode.hpp"
#include "tdho/profiles.hpp"

namespace tdho {

/// Invariant-coefficient triple (delta is the constant fourth coefficient;
/// 0 for the quadratic invariant, 1 with the others zero reproduces L).
struct InvariantCoeffs {
    double alpha;
    double beta;
    double gamma;
    double delta = 0.0;
};

struct SigmaInit {
    double sigma0;      // > 0
    double sigma_dot0;
};

struct ErmakovOptions {
    double sigma_floor = 1e-8;  // abort below this (signals tolerance failure)
    double max_step = 0.025;
    double fixed_step = 0.0;    // > 0 disables adaptivity (order studies)
};

/// Solution of the auxiliary equation
///   sigma'' + (mu'/mu) sigma' + (omega^2/mu) sigma = kappa^2 / (mu^2 sigma^3)
/// on [t0, t1], with the four phase quadratures accumulated as additional
/// ODE components:
///   integral_kappa = int kappa / (mu sigma^2) dt
///   integral_nu    = int nu dt
///   integral_h     = int (mu sigma'^2 + kappa^2/(mu sigma^2) + omega^2 sigma^2) / (2 kappa) dt
///   integral_g     = int (kappa^2/(mu sigma^2) - omega^2 sigma^2 - mu sigma'^2) / (2 kappa) dt
/// Immutable and shareable across threads.
class SigmaSolution {
public:
    double kappa() const { return kappa_; }
    double t_begin() const { return dense_.t_begin(); }
    double t_end() const { return dense_.t_end(); }

    double sigma(double t) const { return dense_.evaluate_component(t, 0); }
    double sigma_dot(double t) const { return dense_.evaluate_component(t, 1); }
    // From the auxiliary equation evaluated at (sigma, sigma_dot): exact given
    // the dense state.
    double sigma_ddot(double t) const;

    double integral_kappa(double t) const { return dense_.evaluate_component(t, 2); }
    double integral_nu(double t) const { return dense_.evaluate_component(t, 3); }
    double integral_h(double t) const { return dense_.evaluate_component(t, 4); }
    double integral_g(double t) const { return dense_.evaluate_component(t, 5); }

    const std::vector<double>& times() const { return dense_.step_times(); }
    const EffectiveModel& model() const { return model_; }

private:
    friend SigmaSolution solve_sigma(const EffectiveModel&, double, const SigmaInit&,
                                     double, double, double, const ErmakovOptions&);
    SigmaSolution(EffectiveModel model, double kappa, DenseSolution dense)
        : model_(std::move(model)), kappa_(kappa), dense_(std::move(dense)) {}

    EffectiveModel model_;
    double kappa_;
    DenseSolution dense_;
};

/// Equilibrium initial data sigma0 = (kappa^2 / (mu omega^2))^{1/4},
/// sigma_dot0 = 0; only exists when omega^2(t0) > 0 (in the pure Landau start
/// with omega(t0) = 0 explicit initial data is required).
SigmaInit equilibrium_init(const EffectiveModel& model, double t0, double kappa);

SigmaSolution solve_sigma(const EffectiveModel& model, double kappa,
                          const SigmaInit& init, double t0, double t1, double tol,
                          const ErmakovOptions& options = {});

/// beta = sigma^2, gamma = -mu sigma sigma', alpha = mu^2 sigma'^2 + kappa^2/sigma^2.
InvariantCoeffs coeffs_from_sigma(const SigmaSolution& s, double t);

/// Residuals of the three coefficient ODEs
///   r1 = alpha' - 2 omega^2 gamma
///   r2 = beta' + 2 gamma / mu
///   r3 = gamma' + alpha / mu - omega^2 beta
/// with the derivatives taken by 4th-order central differences of the
/// reconstructed coefficients (step fd_step; must fit inside the horizon).
std::array<double, 3> coefficient_ode_residual(const SigmaSolution& s, double t,
                                               double fd_step = 1e-2);

} // namespace tdho

#endif
