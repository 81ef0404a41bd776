#include "tdho/fockspace.hpp"

#include <cmath>
#include <stdexcept>

namespace tdho {

using Mat = Eigen::MatrixXcd;
using std::complex;

FockIndex make_fock_index(int n, int m) {
    if (!FockIndex::valid(n, m))
        throw std::invalid_argument("invalid Fock index (n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) +
                                    "): need n >= |m| and n - m even");
    return {n, m};
}

FockBasis::FockBasis(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("FockBasis: n_max must be >= 1");
    for (int n = 0; n <= n_max; ++n)
        for (int m = -n; m <= n; m += 2)
            states_.push_back({n, m});
    // dense lookup: slot (n, (m + n)/2)
    lookup_.assign(static_cast<std::size_t>((n_max + 1) * (n_max + 1)), -1);
    for (int i = 0; i < size(); ++i) {
        const FockIndex& s = states_[static_cast<std::size_t>(i)];
        lookup_[static_cast<std::size_t>(s.n * (n_max + 1) + (s.m + s.n) / 2)] = i;
    }
}

int FockBasis::index_of(int n, int m) const {
    if (!FockIndex::valid(n, m) || n > n_max_) return -1;
    return lookup_[static_cast<std::size_t>(n * (n_max_ + 1) + (m + n) / 2)];
}

std::vector<int> FockBasis::interior(int margin) const {
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (states_[static_cast<std::size_t>(i)].n <= n_max_ - margin)
            keep.push_back(i);
    return keep;
}

LadderOperators build_ladder(const FockBasis& basis) {
    const int d = basis.size();
    LadderOperators ops{Mat::Zero(d, d), Mat::Zero(d, d), Mat::Zero(d, d),
                        Mat::Zero(d, d)};
    for (int j = 0; j < d; ++j) {
        const FockIndex s = basis.state(j);
        // A-^dag adds a left-circular quantum (raises m), A+^dag a right one.
        if (const int i = basis.index_of(s.n + 1, s.m + 1); i >= 0)
            ops.A_minus_dag(i, j) = std::sqrt(double(s.r_plus() + 1));
        if (const int i = basis.index_of(s.n + 1, s.m - 1); i >= 0)
            ops.A_plus_dag(i, j) = std::sqrt(double(s.r_minus() + 1));
    }
    ops.A_minus = ops.A_minus_dag.adjoint();
    ops.A_plus = ops.A_plus_dag.adjoint();
    return ops;
}

Mat invariant_matrix(const FockBasis& basis, const LadderOperators& ops,
                     double kappa) {
    const int d = basis.size();
    Mat I = 2.0 * kappa *
            (ops.A_plus_dag * ops.A_plus + ops.A_minus_dag * ops.A_minus +
             Mat::Identity(d, d));
    return I;
}

Mat angular_momentum_matrix(const FockBasis& basis, const LadderOperators& ops) {
    (void)basis;
    return ops.A_minus_dag * ops.A_minus - ops.A_plus_dag * ops.A_plus;
}

ScalarState scalar_state(const SigmaSolution& s, double t) {
    const EffectiveParams ep = s.model().at(t);
    return {s.sigma(t), s.sigma_dot(t), ep.mu, ep.omega_sq, ep.nu, s.kappa()};
}

PositionMomentum build_position_momentum(const LadderOperators& ops,
                                         const ScalarState& sc) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const complex<double> i1(0.0, 1.0);
    const Mat a1 = inv_sqrt2 * (ops.A_minus + ops.A_plus);
    const Mat a2 = i1 * inv_sqrt2 * (ops.A_minus - ops.A_plus);
    const Mat a1d = a1.adjoint();
    const Mat a2d = a2.adjoint();

    const double sq2k = std::sqrt(2.0 * sc.kappa);
    const complex<double> cx = -i1 * sc.sigma / sq2k;
    const complex<double> cp = -i1 * sc.sigma_dot * sc.mu / sq2k;
    const double cq = sq2k / (2.0 * sc.sigma);

    PositionMomentum pm;
    pm.x1 = cx * (a1 - a1d);
    pm.x2 = cx * (a2 - a2d);
    pm.p1 = cp * (a1 - a1d) - cq * (a1 + a1d);
    pm.p2 = cp * (a2 - a2d) - cq * (a2 + a2d);
    return pm;
}

Mat build_hamiltonian(const PositionMomentum& pm, const LadderOperators& ops,
                      const ScalarState& sc) {
    const Mat L = ops.A_minus_dag * ops.A_minus - ops.A_plus_dag * ops.A_plus;
    return (pm.p1 * pm.p1 + pm.p2 * pm.p2) / (2.0 * sc.mu) +
           0.5 * sc.omega_sq * (pm.x1 * pm.x1 + pm.x2 * pm.x2) - sc.nu * L;
}

Mat hamiltonian_ladder_form(const LadderOperators& ops, const ScalarState& sc) {
    const double k = sc.kappa;
    const double s2 = sc.sigma * sc.sigma;
    const double diag = (sc.mu * sc.sigma_dot * sc.sigma_dot +
                         k * k / (sc.mu * s2) + sc.omega_sq * s2) /
                        (2.0 * k);
    const complex<double> i1(0.0, 1.0);
    const complex<double> root = i1 * sc.sigma_dot * sc.mu / std::sqrt(2.0 * k) +
                                 std::sqrt(k) / (std::sqrt(2.0) * sc.sigma);
    const complex<double> offdiag =
        root * root / sc.mu - sc.omega_sq * s2 / (2.0 * k);

    const Mat Nm = ops.A_minus_dag * ops.A_minus;
    const Mat Np = ops.A_plus_dag * ops.A_plus;
    const Mat id = Mat::Identity(Nm.rows(), Nm.cols());
    return diag * (Nm + Np + id) - sc.nu * (Nm - Np) +
           offdiag * (ops.A_minus * ops.A_plus) +
           std::conj(offdiag) * (ops.A_plus_dag * ops.A_minus_dag);
}

double hamiltonian_diagonal(const FockIndex& idx, const ScalarState& sc) {
    const double k = sc.kappa;
    const double s2 = sc.sigma * sc.sigma;
    return (idx.n + 1) *
               (sc.mu * sc.sigma_dot * sc.sigma_dot + k * k / (sc.mu * s2) +
                sc.omega_sq * s2) /
               (2.0 * k) -
           idx.m * sc.nu;
}

FockOperatorSet build_operator_set(int n_max, const SigmaSolution& s, double t) {
    FockBasis basis(n_max);
    LadderOperators ladder = build_ladder(basis);
    ScalarState sc = scalar_state(s, t);
    PositionMomentum xp = build_position_momentum(ladder, sc);
    Mat I_op = invariant_matrix(basis, ladder, sc.kappa);
    Mat L_op = angular_momentum_matrix(basis, ladder);
    Mat H_op = build_hamiltonian(xp, ladder, sc);
    return {std::move(basis), std::move(ladder), std::move(xp),
            std::move(I_op), std::move(L_op), std::move(H_op), sc};
}

namespace {

// Position-representation invariant over fixed (x, p) matrices:
// I = sum_a (sigma_dot mu x_a - sigma p_a)^2 + (kappa^2/sigma^2) x_a^2.
Mat invariant_position_form(const PositionMomentum& pm, double sigma,
                            double sigma_dot, double mu, double kappa) {
    const Mat q1 = sigma_dot * mu * pm.x1 - sigma * pm.p1;
    const Mat q2 = sigma_dot * mu * pm.x2 - sigma * pm.p2;
    const double w = kappa * kappa / (sigma * sigma);
    return q1 * q1 + q2 * q2 + w * (pm.x1 * pm.x1 + pm.x2 * pm.x2);
}

}  // namespace

double interior_max_abs(const Mat& M, const std::vector<int>& keep) {
    double mx = 0.0;
    for (int i : keep)
        for (int j : keep)
            mx = std::max(mx, std::abs(M(i, j)));
    return mx;
}

double invariance_residual(const FockBasis& basis, const SigmaSolution& s, double t,
                           double dt, int margin) {
    const LadderOperators ops = build_ladder(basis);
    const ScalarState sc = scalar_state(s, t);
    const PositionMomentum pm = build_position_momentum(ops, sc);

    auto I_at = [&](double tt) {
        const EffectiveParams ep = s.model().at(tt);
        return invariant_position_form(pm, s.sigma(tt), s.sigma_dot(tt), ep.mu,
                                       s.kappa());
    };
    const Mat dI = (I_at(t + dt) - I_at(t - dt)) / (2.0 * dt);
    const Mat I0 = I_at(t);
    const Mat H0 = build_hamiltonian(pm, ops, sc);
    const complex<double> inv_i(0.0, -1.0);  // 1/i = -i
    const Mat residual = dI + inv_i * (I0 * H0 - H0 * I0);
    return interior_max_abs(residual, basis.interior(margin));
}

} // namespace tdho
