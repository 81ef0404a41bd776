#ifndef TDHO_PROFILES_HPP
#define TDHO_PROFILES_HPP

#include <memory>
#include <vector>

#include "tdho/time_function.hpp"

namespace tdho {

/// Reduced-Hamiltonian coefficients at a fixed time:
///   H = p.p/(2 mu) + omega_sq x.x / 2 - nu L
struct EffectiveParams {
    double mu;
    double omega_sq;
    double nu;
};

/// Physical inputs: mass M(t) > 0, frequency Omega(t) >= 0, magnetic field
/// B(t), charge e and the noncommutativity constant theta.  Units hbar = 1,
/// all quantities dimensionless.  eB only ever enters as the signed product.
class ParameterProfile {
public:
    ParameterProfile(TimeFunction M, TimeFunction Omega, TimeFunction B,
                     double charge, double theta);

    double mass(double t) const;       // validated: finite and > 0
    double frequency(double t) const;  // validated: finite
    double field(double t) const;      // validated: finite

    double mass_dot(double t) const { return M_.derivative(t); }
    double frequency_dot(double t) const { return Omega_.derivative(t); }
    double field_dot(double t) const { return B_.derivative(t); }

    double charge() const { return e_; }
    double theta() const { return theta_; }

    bool is_constant() const {
        return M_.is_constant() && Omega_.is_constant() && B_.is_constant();
    }

    const TimeFunction& mass_function() const { return M_; }
    const TimeFunction& frequency_function() const { return Omega_; }
    const TimeFunction& field_function() const { return B_; }

    // Union of the three functions' breakpoints restricted to (t0, t1),
    // sorted and deduplicated.
    std::vector<double> breakpoints(double t0, double t1) const;

private:
    TimeFunction M_, Omega_, B_;
    double e_;
    double theta_;
};

/// Commutative-plane reduction: mu = M, omega^2 = M Omega^2 + (eB)^2/(4M),
/// nu = eB/(2M).
EffectiveParams effective_commutative(const ParameterProfile& p, double t);

/// Noncommutative-plane reduction (Bopp shift applied):
///   1/mu    = (4 + eB theta)^2 / (16 M) + M Omega^2 theta^2 / 4
///   omega^2 = M Omega^2 + (eB)^2 / (4M)
///   nu      = (4 + eB theta) eB / (8M) + M Omega^2 theta / 2
/// At theta = 0 this reduces to effective_commutative.
EffectiveParams effective_noncommutative(const ParameterProfile& p, double t);

/// Expands the noncommutative Hamiltonian through the Bopp shift on a
/// truncated two-axis Fock representation of canonical (x, p) and returns the
/// max-entry difference from the reduced form built with
/// effective_noncommutative, relative to the max entry of the reduced form.
double bopp_shift_check(const ParameterProfile& p, double t, int levels_per_axis = 10);

/// Time-dependent view of the effective parameters.  Selects the commutative
/// map when theta == 0 and the noncommutative map otherwise; mu_dot is the
/// analytic chain-rule derivative.  Immutable and cheap to copy.
class EffectiveModel {
public:
    explicit EffectiveModel(ParameterProfile profile);

    EffectiveParams at(double t) const;
    double mu(double t) const { return at(t).mu; }
    double omega_sq(double t) const { return at(t).omega_sq; }
    double nu(double t) const { return at(t).nu; }
    double mu_dot(double t) const;

    const ParameterProfile& profile() const { return *profile_; }
    bool is_constant() const { return profile_->is_constant(); }

private:
    std::shared_ptr<const ParameterProfile> profile_;
    bool noncommutative_;
};

} // namespace tdho

#endif
