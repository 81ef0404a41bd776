#include "tdho/profiles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace tdho {

namespace {

[[noreturn]] void bad_value(const char* name, double value, double t) {
    std::ostringstream os;
    os.precision(17);
    os << "profile function " << name << " evaluated to " << value
       << " at t = " << t;
    throw std::domain_error(os.str());
}

double checked(const char* name, double value, double t, bool require_positive) {
    if (!std::isfinite(value) || (require_positive && !(value > 0.0)))
        bad_value(name, value, t);
    return value;
}

}  // namespace

ParameterProfile::ParameterProfile(TimeFunction M, TimeFunction Omega,
                                   TimeFunction B, double charge, double theta)
    : M_(std::move(M)), Omega_(std::move(Omega)), B_(std::move(B)),
      e_(charge), theta_(theta) {
    if (!std::isfinite(charge) || !std::isfinite(theta))
        throw std::invalid_argument("charge and theta must be finite");
}

double ParameterProfile::mass(double t) const {
    return checked("M", M_.value(t), t, /*require_positive=*/true);
}

double ParameterProfile::frequency(double t) const {
    return checked("Omega", Omega_.value(t), t, false);
}

double ParameterProfile::field(double t) const {
    return checked("B", B_.value(t), t, false);
}

std::vector<double> ParameterProfile::breakpoints(double t0, double t1) const {
    std::vector<double> bp;
    for (const TimeFunction* f : {&M_, &Omega_, &B_})
        for (double b : f->breakpoints())
            if (b > t0 && b < t1) bp.push_back(b);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

EffectiveParams effective_commutative(const ParameterProfile& p, double t) {
    const double M = p.mass(t);
    const double Om = p.frequency(t);
    const double eB = p.charge() * p.field(t);
    return {M, M * Om * Om + eB * eB / (4.0 * M), eB / (2.0 * M)};
}

EffectiveParams effective_noncommutative(const ParameterProfile& p, double t) {
    const double M = p.mass(t);
    const double Om = p.frequency(t);
    const double eB = p.charge() * p.field(t);
    const double th = p.theta();

    const double bracket = 4.0 + eB * th;
    const double inv_mu = bracket * bracket / (16.0 * M) +
                          M * Om * Om * th * th / 4.0;
    if (!(inv_mu > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "degenerate effective mass: (4+eB*theta)^2/(16M) + M*Omega^2*theta^2/4 = "
           << inv_mu << " at t = " << t;
        throw std::domain_error(os.str());
    }
    const double omega_sq = M * Om * Om + eB * eB / (4.0 * M);
    const double nu = bracket * eB / (8.0 * M) + M * Om * Om * th / 2.0;
    return {1.0 / inv_mu, omega_sq, nu};
}

EffectiveModel::EffectiveModel(ParameterProfile profile)
    : profile_(std::make_shared<const ParameterProfile>(std::move(profile))),
      noncommutative_(profile_->theta() != 0.0) {}

EffectiveParams EffectiveModel::at(double t) const {
    return noncommutative_ ? effective_noncommutative(*profile_, t)
                           : effective_commutative(*profile_, t);
}

double EffectiveModel::mu_dot(double t) const {
    const ParameterProfile& p = *profile_;
    const double Mdot = p.mass_dot(t);
    if (!noncommutative_) return Mdot;

    const double M = p.mass(t);
    const double Om = p.frequency(t);
    const double Omdot = p.frequency_dot(t);
    const double eB = p.charge() * p.field(t);
    const double eBdot = p.charge() * p.field_dot(t);
    const double th = p.theta();

    const double bracket = 4.0 + eB * th;
    const double g = bracket * bracket / (16.0 * M) + M * Om * Om * th * th / 4.0;
    const double gdot = 2.0 * bracket * eBdot * th / (16.0 * M) -
                        bracket * bracket * Mdot / (16.0 * M * M) +
                        (Mdot * Om * Om + 2.0 * M * Om * Omdot) * th * th / 4.0;
    return -gdot / (g * g);  // mu = 1/g
}

// -------------------------------------------------------------------------
// Bopp-shift consistency check on a truncated two-axis oscillator basis.
//
// Canonical single-axis matrices in the number basis (unit reference
// oscillator): x = (a + a^T)/sqrt(2), p = i (a^T - a)/sqrt(2).  Two axes are
// combined by Kronecker products, which commute exactly between axes, so the
// identity between the shifted Hamiltonian and the reduced form holds
// entry-for-entry at any truncation (only cross-axis commutators enter).
// -------------------------------------------------------------------------

double bopp_shift_check(const ParameterProfile& p, double t, int levels_per_axis) {
    using Mat = Eigen::MatrixXcd;
    const int n = levels_per_axis;
    if (n < 2) throw std::invalid_argument("bopp_shift_check: need >= 2 levels");

    Mat a = Mat::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
    const Mat adag = a.adjoint();
    const Mat x1d = (a + adag) / std::sqrt(2.0);
    const Mat p1d = std::complex<double>(0, 1) * (adag - a) / std::sqrt(2.0);
    const Mat id = Mat::Identity(n, n);

    auto kron = [](const Mat& A, const Mat& B) {
        Mat out(A.rows() * B.rows(), A.cols() * B.cols());
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j)
                out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        return out;
    };

    const Mat x1 = kron(x1d, id), x2 = kron(id, x1d);
    const Mat p1 = kron(p1d, id), p2 = kron(id, p1d);

    const double M = p.mass(t);
    const double Om = p.frequency(t);
    const double eB = p.charge() * p.field(t);
    const double th = p.theta();

    // Bopp shift: X1 = x1 - (theta/2) p2, X2 = x2 + (theta/2) p1, P = p.
    const Mat X1 = x1 - 0.5 * th * p2;
    const Mat X2 = x2 + 0.5 * th * p1;

    const Mat c1 = p1 + 0.5 * eB * X2;
    const Mat c2 = p2 - 0.5 * eB * X1;
    const Mat H_shifted = (c1 * c1 + c2 * c2) / (2.0 * M) +
                          0.5 * M * Om * Om * (X1 * X1 + X2 * X2);

    const EffectiveParams ep = effective_noncommutative(p, t);
    const Mat L = x1 * p2 - x2 * p1;
    const Mat H_reduced = (p1 * p1 + p2 * p2) / (2.0 * ep.mu) +
                          0.5 * ep.omega_sq * (x1 * x1 + x2 * x2) - ep.nu * L;

    const double scale = H_reduced.cwiseAbs().maxCoeff();
    return (H_shifted - H_reduced).cwiseAbs().maxCoeff() / scale;
}

} // namespace tdho
