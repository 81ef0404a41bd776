#include "tdho/phases.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "tdho/warnings.hpp"

namespace tdho {

double phase_total(FockIndex idx, const SigmaSolution& s, double t) {
    return -(idx.n + 1) * s.integral_kappa(t) + idx.m * s.integral_nu(t);
}

double phase_dynamical(FockIndex idx, const SigmaSolution& s, double t) {
    return -(idx.n + 1) * s.integral_h(t) + idx.m * s.integral_nu(t);
}

double phase_geometric(FockIndex idx, const SigmaSolution& s, double t) {
    return -(idx.n + 1) * s.integral_g(t);
}

PhaseRecord phase_record(FockIndex idx, const SigmaSolution& s,
                         const std::vector<double>& times) {
    PhaseRecord rec;
    rec.idx = idx;
    rec.times = times;
    rec.alpha_total.reserve(times.size());
    rec.alpha_dynamical.reserve(times.size());
    rec.alpha_geometric.reserve(times.size());
    for (double t : times) {
        rec.alpha_total.push_back(phase_total(idx, s, t));
        rec.alpha_dynamical.push_back(phase_dynamical(idx, s, t));
        rec.alpha_geometric.push_back(phase_geometric(idx, s, t));
    }
    return rec;
}

double schrodinger_residual(FockIndex idx, const SigmaSolution& s, const Grid2D& grid,
                            double t, double dt, bool with_phase) {
    if (!(t - dt >= s.t_begin() && t + dt <= s.t_end()))
        throw std::out_of_range("schrodinger_residual: t +/- dt leaves the horizon");
    if (dt < 1e-7)
        push_warning("schrodinger_residual: dt below 1e-7 risks cancellation");

    const std::complex<double> i1(0.0, 1.0);
    auto full_state = [&](double tt) {
        WaveField f = basis_state(grid, idx, s, tt);
        if (!with_phase) return f;
        return std::exp(i1 * phase_total(idx, s, tt)) * f;
    };

    const WaveField plus = full_state(t + dt);
    const WaveField minus = full_state(t - dt);
    const WaveField mid = full_state(t);
    const WaveField h_mid = apply_hamiltonian(mid, s.model(), t);

    const WaveField lhs = (i1 / (2.0 * dt)) * (plus - minus);
    const double denom = h_mid.norm();
    return (lhs - h_mid).norm() / denom;
}

} // namespace tdho
