#ifndef TDHO_FOCKSPACE_HPP
#define TDHO_FOCKSPACE_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "tdho/ermakov.hpp"

namespace tdho {

/// Joint eigenbasis label: invariant quantum number n >= 0 and angular
/// momentum m with |m| <= n and n - m even.  Equivalently the circular
/// occupation numbers r_plus = (n+m)/2 and r_minus = (n-m)/2, where r_plus
/// counts left-circular (m-raising) quanta.
struct FockIndex {
    int n = 0;
    int m = 0;

    int r_plus() const { return (n + m) / 2; }
    int r_minus() const { return (n - m) / 2; }

    static bool valid(int n, int m) {
        return n >= 0 && m >= -n && m <= n && (n - m) % 2 == 0;
    }
    bool operator==(const FockIndex&) const = default;
};

FockIndex make_fock_index(int n, int m);  // throws std::invalid_argument

/// Ordered basis of all valid (n, m) with n <= n_max, lexicographic by
/// (n, m ascending); fixed so matrix dumps are reproducible.
class FockBasis {
public:
    explicit FockBasis(int n_max);

    int n_max() const { return n_max_; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<FockIndex>& states() const { return states_; }
    const FockIndex& state(int i) const { return states_[i]; }

    int index_of(int n, int m) const;  // -1 when absent

    // Indices of states with n <= n_max - margin: entries of operator
    // products are truncation-free there.
    std::vector<int> interior(int margin) const;

private:
    int n_max_;
    std::vector<FockIndex> states_;
    std::vector<int> lookup_;  // dense (n, m) -> column map
};

/// Circular ladder matrices over a FockBasis.  Conventions (the internally
/// consistent set):
///   A_minus_dag |n,m>  = sqrt((n+m)/2 + 1) |n+1, m+1>
///   A_plus_dag  |n,m>  = sqrt((n-m)/2 + 1) |n+1, m-1>
/// with A_minus, A_plus their adjoints, so that A_minus_dag^dag A_minus_dag
/// counts r_plus, L = N_minus - N_plus has eigenvalue m, and
/// [L, A_pm] = +/- A_pm.
struct LadderOperators {
    Eigen::MatrixXcd A_minus, A_plus, A_minus_dag, A_plus_dag;
};

LadderOperators build_ladder(const FockBasis& basis);

/// I = 2 kappa (A+^dag A+ + A-^dag A- + 1); diagonal entries 2 kappa (n+1).
Eigen::MatrixXcd invariant_matrix(const FockBasis& basis, const LadderOperators& ops,
                                  double kappa);
/// L = A-^dag A- - A+^dag A+; diagonal entries m.
Eigen::MatrixXcd angular_momentum_matrix(const FockBasis& basis,
                                         const LadderOperators& ops);

/// Scalar coefficients frozen at the evaluation time.
struct ScalarState {
    double sigma;
    double sigma_dot;
    double mu;
    double omega_sq;
    double nu;
    double kappa;
};

ScalarState scalar_state(const SigmaSolution& s, double t);

struct PositionMomentum {
    Eigen::MatrixXcd x1, x2, p1, p2;
};

/// x_a = (-i/sqrt(2 kappa)) sigma (a_a - a_a^dag),
/// p_a = (-i/sqrt(2 kappa)) sigma_dot mu (a_a - a_a^dag)
///       - (sqrt(2 kappa)/(2 sigma)) (a_a + a_a^dag).
PositionMomentum build_position_momentum(const LadderOperators& ops,
                                         const ScalarState& sc);

/// H = (p1^2 + p2^2)/(2 mu) + omega^2 (x1^2 + x2^2)/2 - nu L, assembled from
/// the position/momentum matrices.
Eigen::MatrixXcd build_hamiltonian(const PositionMomentum& pm, const LadderOperators& ops,
                                   const ScalarState& sc);

/// Closed ladder form of the same operator:
///   E_c (N- + N+ + 1) - nu (N- - N+) + C A- A+ + conj(C) A+^dag A-^dag
/// with E_c = (mu sigma_dot^2 + kappa^2/(mu sigma^2) + omega^2 sigma^2)/(2 kappa)
/// and C = (1/mu) (i sigma_dot mu / sqrt(2 kappa) + sqrt(kappa)/(sqrt(2) sigma))^2
///         - omega^2 sigma^2 / (2 kappa).
Eigen::MatrixXcd hamiltonian_ladder_form(const LadderOperators& ops,
                                         const ScalarState& sc);

/// <n,m|H|n,m> = (n+1)/(2 kappa) (mu sigma_dot^2 + kappa^2/(mu sigma^2)
///               + omega^2 sigma^2) - m nu.
double hamiltonian_diagonal(const FockIndex& idx, const ScalarState& sc);

/// Everything bundled for one evaluation time.
struct FockOperatorSet {
    FockBasis basis;
    LadderOperators ladder;
    PositionMomentum xp;
    Eigen::MatrixXcd I_op, L_op, H_op;
    ScalarState scalars;
};

FockOperatorSet build_operator_set(int n_max, const SigmaSolution& s, double t);

/// Max-entry norm, over the interior block, of dI/dt + (1/i)[I, H] where
/// dI/dt is a central difference of the position-representation invariant
/// rebuilt at t +/- dt over the FIXED (x, p) matrices of time t.
double invariance_residual(const FockBasis& basis, const SigmaSolution& s, double t,
                           double dt, int margin = 4);

/// Max-entry norm of the sub-block of M on rows/columns `keep`.
double interior_max_abs(const Eigen::MatrixXcd& M, const std::vector<int>& keep);

} // namespace tdho

#endif
