#include <doctest.h>

#include <cmath>
#include <complex>

#include "tdho/fockspace.hpp"

using namespace tdho;
using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

namespace {

SigmaSolution constant_solution(double kappa = 1.0, double M = 1.0, double Om = 1.0,
                                double B = 0.0) {
    const EffectiveModel model(ParameterProfile(TimeFunction::constant(M),
                                                TimeFunction::constant(Om),
                                                TimeFunction::constant(B), 1.0, 0.0));
    return solve_sigma(model, kappa, equilibrium_init(model, 0.0, kappa), 0.0, 10.0,
                       1e-10);
}

SigmaSolution sinusoidal_solution(double kappa = 1.0) {
    const EffectiveModel model(ParameterProfile(
        TimeFunction::sinusoid(1.0, 0.1, 0.7), TimeFunction::sinusoid(1.0, 0.2, 1.0),
        TimeFunction::constant(1.0), 1.0, 0.0));
    return solve_sigma(model, kappa, equilibrium_init(model, 0.0, kappa), 0.0, 10.0,
                       1e-10);
}

// off-equilibrium constant-parameter run so sigma_dot != 0
SigmaSolution swinging_solution(double kappa = 1.0) {
    const EffectiveModel model(ParameterProfile(TimeFunction::constant(1.0),
                                                TimeFunction::constant(1.0),
                                                TimeFunction::constant(0.0), 1.0, 0.0));
    return solve_sigma(model, kappa, {2.0, 0.0}, 0.0, 10.0, 1e-10);
}

Mat commutator(const Mat& A, const Mat& B) { return A * B - B * A; }

}  // namespace

TEST_CASE("Fock index validity and circular occupation numbers") {
    CHECK(FockIndex::valid(0, 0));
    CHECK(FockIndex::valid(3, -1));
    CHECK_FALSE(FockIndex::valid(2, 1));   // n - m odd
    CHECK_FALSE(FockIndex::valid(1, -3));  // |m| > n
    CHECK_FALSE(FockIndex::valid(-1, 1));
    const FockIndex idx = make_fock_index(5, 3);
    CHECK(idx.r_plus() == 4);
    CHECK(idx.r_minus() == 1);
    CHECK_THROWS_AS(make_fock_index(2, 1), std::invalid_argument);
}

TEST_CASE("basis enumeration: ordering, degeneracy n+1, lookup") {
    const FockBasis basis(6);
    CHECK(basis.size() == 7 * 8 / 2);
    // lexicographic (n, m ascending)
    CHECK(basis.state(0) == FockIndex{0, 0});
    CHECK(basis.state(1) == FockIndex{1, -1});
    CHECK(basis.state(2) == FockIndex{1, 1});
    CHECK(basis.state(3) == FockIndex{2, -2});
    for (int n = 0; n <= 6; ++n) {
        int count = 0;
        for (const auto& s : basis.states())
            if (s.n == n) ++count;
        CHECK(count == n + 1);
    }
    CHECK(basis.index_of(2, 0) == 4);
    CHECK(basis.index_of(7, 1) == -1);
    CHECK(basis.index_of(2, 1) == -1);
}

TEST_CASE("ladder actions on the joint eigenbasis") {
    const FockBasis basis(8);
    const auto ops = build_ladder(basis);
    const int i00 = basis.index_of(0, 0);
    const int i11 = basis.index_of(1, 1);
    const int i1m1 = basis.index_of(1, -1);

    // A-^dag ||0,0> = ||1,1> with amplitude 1 (raises m by one)
    CHECK(ops.A_minus_dag(i11, i00) == cplx(1.0, 0.0));
    CHECK(ops.A_minus_dag.col(i00).cwiseAbs().sum() == doctest::Approx(1.0));
    // A+^dag ||0,0> = ||1,-1>
    CHECK(ops.A_plus_dag(i1m1, i00) == cplx(1.0, 0.0));
    // the left annihilator takes ||1,1> back to ||0,0>; the right one kills it
    CHECK(ops.A_minus(i00, i11) == cplx(1.0, 0.0));
    CHECK(ops.A_plus.col(i11).cwiseAbs().sum() == doctest::Approx(0.0));

    // general amplitudes: A-^dag ||n,m> = sqrt((n+m)/2+1) ||n+1,m+1>
    const int i53 = basis.index_of(5, 3);
    const int i64 = basis.index_of(6, 4);
    CHECK(std::real(ops.A_minus_dag(i64, i53)) == doctest::Approx(std::sqrt(5.0)));
    const int i62 = basis.index_of(6, 2);
    CHECK(std::real(ops.A_plus_dag(i62, i53)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("canonical commutators of the circular ladder set") {
    const FockBasis basis(10);
    const auto ops = build_ladder(basis);
    const auto keep = basis.interior(1);
    const int d = basis.size();
    const Mat id = Mat::Identity(d, d);

    CHECK(interior_max_abs(commutator(ops.A_minus, ops.A_minus_dag) - id, keep) <=
          1e-13);
    CHECK(interior_max_abs(commutator(ops.A_plus, ops.A_plus_dag) - id, keep) <=
          1e-13);
    CHECK(interior_max_abs(commutator(ops.A_minus, ops.A_plus), keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(ops.A_minus, ops.A_plus_dag), keep) <= 1e-13);

    // the diagonal of [A-, A-^dag] is exactly 1 for every n < n_max
    const Mat c = commutator(ops.A_minus, ops.A_minus_dag);
    for (int i = 0; i < d; ++i)
        if (basis.state(i).n < basis.n_max())
            CHECK(std::abs(c(i, i) - cplx(1.0, 0.0)) <= 1e-14);

    // negative control: truncation artifacts do live in the edge shell
    const Mat full_dev = commutator(ops.A_minus, ops.A_minus_dag) - id;
    CHECK(full_dev.cwiseAbs().maxCoeff() > 0.5);
}

TEST_CASE("invariant and angular momentum: diagonal, exact spectra, commuting") {
    const double kappa = 1.7;
    const FockBasis basis(12);
    const auto ops = build_ladder(basis);
    const Mat I = invariant_matrix(basis, ops, kappa);
    const Mat L = angular_momentum_matrix(basis, ops);

    for (int i = 0; i < basis.size(); ++i) {
        const auto s = basis.state(i);
        CHECK(std::abs(I(i, i) - cplx(2.0 * kappa * (s.n + 1), 0.0)) <= 1e-13);
        CHECK(std::abs(L(i, i) - cplx(s.m, 0.0)) <= 1e-13);
        for (int j = 0; j < basis.size(); ++j) {
            if (i != j) {
                CHECK(std::abs(I(i, j)) <= 1e-14);
                CHECK(std::abs(L(i, j)) <= 1e-14);
            }
        }
    }
    CHECK(commutator(I, L).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("invariant/ladder and angular-momentum/ladder commutation relations") {
    const double kappa = 0.8;
    const FockBasis basis(10);
    const auto ops = build_ladder(basis);
    const Mat I = invariant_matrix(basis, ops, kappa);
    const Mat L = angular_momentum_matrix(basis, ops);
    const auto keep = basis.interior(1);

    CHECK(interior_max_abs(commutator(I, ops.A_minus_dag) -
                               2.0 * kappa * ops.A_minus_dag, keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(I, ops.A_plus_dag) -
                               2.0 * kappa * ops.A_plus_dag, keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(I, ops.A_minus) + 2.0 * kappa * ops.A_minus,
                           keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(I, ops.A_plus) + 2.0 * kappa * ops.A_plus,
                           keep) <= 1e-13);
    // [L, A+-] = +- A+- and [L, A+-^dag] = -+ A+-^dag
    CHECK(interior_max_abs(commutator(L, ops.A_plus) - ops.A_plus, keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(L, ops.A_minus) + ops.A_minus, keep) <= 1e-13);
    CHECK(interior_max_abs(commutator(L, ops.A_plus_dag) + ops.A_plus_dag, keep) <=
          1e-13);
    CHECK(interior_max_abs(commutator(L, ops.A_minus_dag) - ops.A_minus_dag, keep) <=
          1e-13);
}

TEST_CASE("basis construction N (A-^dag)^{r+} (A+^dag)^{r-} ||0,0> is orthonormal") {
    const FockBasis basis(8);
    const auto ops = build_ladder(basis);
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(basis.size());
    vac(basis.index_of(0, 0)) = 1.0;
    for (const auto& s : basis.states()) {
        if (s.n > 6) continue;  // keep clear of the truncation edge
        Eigen::VectorXcd v = vac;
        for (int k = 0; k < s.r_plus(); ++k) v = ops.A_minus_dag * v;
        for (int k = 0; k < s.r_minus(); ++k) v = ops.A_plus_dag * v;
        double norm_fact = 1.0;
        for (int k = 1; k <= s.r_plus(); ++k) norm_fact *= k;
        for (int k = 1; k <= s.r_minus(); ++k) norm_fact *= k;
        v /= std::sqrt(norm_fact);
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(v(basis.index_of(s.n, s.m)) - cplx(1.0, 0.0)) <= 1e-13);
    }
}

TEST_CASE("position/momentum matrices: hermiticity and canonical commutators") {
    const auto sol = swinging_solution();
    const double t = 1.3;  // sigma_dot != 0 here
    const FockBasis basis(14);
    const auto ops = build_ladder(basis);
    const auto sc = scalar_state(sol, t);
    CHECK(std::abs(sc.sigma_dot) > 0.1);
    const auto pm = build_position_momentum(ops, sc);

    CHECK((pm.x1 - pm.x1.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((pm.x2 - pm.x2.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((pm.p1 - pm.p1.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((pm.p2 - pm.p2.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);

    const auto keep = basis.interior(2);
    const int d = basis.size();
    const Mat id = Mat::Identity(d, d);
    const cplx i1(0.0, 1.0);
    CHECK(interior_max_abs(commutator(pm.x1, pm.p1) - i1 * id, keep) <= 1e-12);
    CHECK(interior_max_abs(commutator(pm.x2, pm.p2) - i1 * id, keep) <= 1e-12);
    CHECK(interior_max_abs(commutator(pm.x1, pm.x2), keep) <= 1e-12);
    CHECK(interior_max_abs(commutator(pm.p1, pm.p2), keep) <= 1e-12);
    CHECK(interior_max_abs(commutator(pm.x1, pm.p2), keep) <= 1e-12);

    // <0,0| x.x |0,0> = sigma^2/kappa
    const Mat xx = pm.x1 * pm.x1 + pm.x2 * pm.x2;
    const int i00 = basis.index_of(0, 0);
    CHECK(std::real(xx(i00, i00)) ==
          doctest::Approx(sc.sigma * sc.sigma / sc.kappa).epsilon(1e-12));
}

TEST_CASE("Hamiltonian: diagonal matches the closed form, off-diagonals confined "
          "to (n +/- 2, m)") {
    for (const auto& sol : {swinging_solution(0.7), sinusoidal_solution(1.0)}) {
        const double t = 2.1;
        const auto set = build_operator_set(12, sol, t);
        const auto& basis = set.basis;

        // hermitian
        CHECK((set.H_op - set.H_op.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);

        const auto keep = basis.interior(2);
        for (int i : keep) {
            const auto si = basis.state(i);
            CHECK(std::abs(set.H_op(i, i) -
                           cplx(hamiltonian_diagonal(si, set.scalars), 0.0)) <=
                  1e-12 * std::abs(set.H_op(i, i)) + 1e-13);
            for (int j : keep) {
                const auto sj = basis.state(j);
                const bool allowed = (si.m == sj.m) &&
                                     (si.n == sj.n || si.n == sj.n + 2 ||
                                      si.n + 2 == sj.n);
                if (!allowed)
                    CHECK(std::abs(set.H_op(i, j)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("equilibrium Hamiltonian diagonal is (n+1) omega/sqrt(mu) - m nu") {
    const EffectiveModel model(ParameterProfile(TimeFunction::constant(2.0),
                                                TimeFunction::constant(1.0),
                                                TimeFunction::constant(1.5), 1.0, 0.0));
    const double kappa = 1.3;
    const auto sol = solve_sigma(model, kappa, equilibrium_init(model, 0.0, kappa),
                                 0.0, 5.0, 1e-10);
    const auto set = build_operator_set(10, sol, 2.5);
    const EffectiveParams ep = model.at(0.0);
    const double omega = std::sqrt(ep.omega_sq);
    for (int i : set.basis.interior(2)) {
        const auto s = set.basis.state(i);
        const double expected = (s.n + 1) * omega / std::sqrt(ep.mu) - s.m * ep.nu;
        CHECK(std::real(set.H_op(i, i)) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("dual construction: position-momentum assembly equals the ladder form") {
    // validates the off-diagonal coefficient (sigma_dot, with the 1/mu factor)
    for (const auto& sol : {swinging_solution(1.0), sinusoidal_solution(0.5)}) {
        for (double t : {0.0, 1.7, 4.4}) {
            const auto set = build_operator_set(12, sol, t);
            const Mat ladder = hamiltonian_ladder_form(set.ladder, set.scalars);
            const double scale = set.H_op.cwiseAbs().maxCoeff();
            CHECK(interior_max_abs(set.H_op - ladder, set.basis.interior(2)) <=
                  1e-12 * scale);
        }
    }
}

TEST_CASE("time derivative of the creation operators matches the closed form") {
    const auto sol = sinusoidal_solution();
    const double t = 3.3, dt = 1e-4;
    const FockBasis basis(10);
    const auto ops = build_ladder(basis);
    const auto sc = scalar_state(sol, t);
    const auto pm = build_position_momentum(ops, sc);

    const cplx i1(0.0, 1.0);
    auto Adag_at = [&](double tt, bool left) {
        const double sg = sol.sigma(tt), sd = sol.sigma_dot(tt);
        const double mu = sol.model().mu(tt);
        const double k = sol.kappa();
        const cplx coef(sd * mu, -k / sg);
        const Mat xpm = left ? Mat(pm.x1 + i1 * pm.x2) : Mat(pm.x1 - i1 * pm.x2);
        const Mat ppm = left ? Mat(pm.p1 + i1 * pm.p2) : Mat(pm.p1 - i1 * pm.p2);
        return Mat((coef * xpm - sg * ppm) / (2.0 * std::sqrt(k)));
    };

    const double mu = sol.model().mu(t);
    const double mu_dot = sol.model().mu_dot(t);
    const double sg = sol.sigma(t), sd = sol.sigma_dot(t), sdd = sol.sigma_ddot(t);
    const double k = sol.kappa();
    const cplx base(sg * sdd + mu_dot * sg * sd / mu - sd * sd, 0.0);
    const cplx extra = base + cplx(0.0, 2.0 * k * sd / (mu * sg));
    const cplx pref = i1 * mu / (2.0 * k);

    const auto keep = basis.interior(1);
    {
        const Mat fd = (Adag_at(t + dt, true) - Adag_at(t - dt, true)) / (2.0 * dt);
        const Mat closed = pref * (base * ops.A_minus_dag - extra * ops.A_plus);
        CHECK(interior_max_abs(fd - closed, keep) <= 1e-6);
    }
    {
        const Mat fd = (Adag_at(t + dt, false) - Adag_at(t - dt, false)) / (2.0 * dt);
        const Mat closed = pref * (base * ops.A_plus_dag - extra * ops.A_minus);
        CHECK(interior_max_abs(fd - closed, keep) <= 1e-6);
    }
}

TEST_CASE("invariance residual: stationary exactly, small on smooth drives, O(dt^2)") {
    const FockBasis basis(10);
    {
        const auto sol = constant_solution();
        CHECK(invariance_residual(basis, sol, 5.0, 1e-4) <= 1e-10);
    }
    {
        const auto sol = sinusoidal_solution();
        const double r = invariance_residual(basis, sol, 5.0, 1e-4);
        CHECK(r <= 1e-6);
        // dt refinement: second-order until the dense-output floor
        const double r2 = invariance_residual(basis, sol, 5.0, 1e-2);
        const double r3 = invariance_residual(basis, sol, 5.0, 1e-3);
        CHECK(r2 / r3 >= 50.0);  // ~dt^2 would give 100
    }
}
