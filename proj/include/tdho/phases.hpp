#ifndef TDHO_PHASES_HPP
#define TDHO_PHASES_HPP

#include <vector>

#include "tdho/ermakov.hpp"
#include "tdho/fockspace.hpp"
#include "tdho/wavefield.hpp"

namespace tdho {

/// Phase history of one basis state; alpha_total = alpha_dynamical +
/// alpha_geometric at every sample, and alpha_total(t) = -(n+1) I_kappa(t)
/// + m I_nu(t).  All phases vanish at the start of the horizon.
struct PhaseRecord {
    FockIndex idx;
    std::vector<double> times;
    std::vector<double> alpha_total;
    std::vector<double> alpha_dynamical;
    std::vector<double> alpha_geometric;
};

/// -(n+1) int kappa/(mu sigma^2) dt' + m int nu dt'.
double phase_total(FockIndex idx, const SigmaSolution& s, double t);

/// -int <H> dt' with <H> = (n+1)(mu sigma'^2 + kappa^2/(mu sigma^2)
/// + omega^2 sigma^2)/(2 kappa) - m nu.
double phase_dynamical(FockIndex idx, const SigmaSolution& s, double t);

/// int i <d/dt> dt' = -(n+1)/(2 kappa) int (kappa^2/(mu sigma^2)
/// - omega^2 sigma^2 - mu sigma'^2) dt'.
double phase_geometric(FockIndex idx, const SigmaSolution& s, double t);

PhaseRecord phase_record(FockIndex idx, const SigmaSolution& s,
                         const std::vector<double>& times);

/// Relative Schrodinger residual of Psi(t) = e^{i alpha(t)} |n,m>(t):
///   R = || i (Psi(t+dt) - Psi(t-dt))/(2 dt) - H Psi(t) || / || H Psi(t) ||.
/// with_phase = false omits the phase factor (negative control; R = O(1)).
double schrodinger_residual(FockIndex idx, const SigmaSolution& s, const Grid2D& grid,
                            double t, double dt, bool with_phase = true);

} // namespace tdho

#endif
