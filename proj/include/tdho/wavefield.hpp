#ifndef TDHO_WAVEFIELD_HPP
#define TDHO_WAVEFIELD_HPP

#include <complex>
#include <memory>
#include <vector>

#include "tdho/ermakov.hpp"
#include "tdho/fockspace.hpp"

namespace tdho {

/// Uniform periodic N x N grid over [-X, X)^2 with quadrature weight
/// (2X/N)^2 per node and Fourier wavenumbers pi/X * {0, 1, ..., N/2-1, -N/2,
/// ..., -1}.  Spectral differentiation is clean only for fields decaying
/// below roundoff at the boundary; choose extent >= 8 * max sigma/sqrt(kappa).
class Grid2D {
public:
    Grid2D(int points_per_axis, double extent);

    int points() const { return n_; }
    double extent() const { return extent_; }
    double spacing() const { return 2.0 * extent_ / n_; }
    double weight() const { return spacing() * spacing(); }
    double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
    double wavenumber(int j) const { return waves_[static_cast<std::size_t>(j)]; }

    // (8 + 0.4 n_highest) * max over the run of sigma/sqrt(kappa).  The base
    // 8 widths put the ground-state tail below 1e-14 at the boundary; the
    // n-dependent margin does the same for the polynomial prefactor of the
    // highest requested basis state.
    static double auto_extent(const SigmaSolution& s, int n_highest = 0);

    bool operator==(const Grid2D& other) const {
        return n_ == other.n_ && extent_ == other.extent_;
    }

private:
    int n_;
    double extent_;
    std::vector<double> nodes_, waves_;
};

/// Complex amplitude per grid node, row-major with the x1 index slowest:
/// value(i1, i2) lives at x = (node(i1), node(i2)).  Immutable value type;
/// operator applications return new fields.
class WaveField {
public:
    WaveField(Grid2D grid, std::vector<std::complex<double>> values);

    const Grid2D& grid() const { return grid_; }
    const std::vector<std::complex<double>>& values() const { return values_; }
    std::complex<double> at(int i1, int i2) const {
        return values_[static_cast<std::size_t>(i1) *
                           static_cast<std::size_t>(grid_.points()) +
                       static_cast<std::size_t>(i2)];
    }

    double norm() const;

    // Provenance label (n, m, t); set by the state constructors.
    FockIndex label_index{0, 0};
    double label_time = 0.0;

private:
    Grid2D grid_;
    std::vector<std::complex<double>> values_;
};

std::complex<double> inner(const WaveField& bra, const WaveField& ket);
double boundary_magnitude(const WaveField& f);  // max |psi| on the edge ring

WaveField operator+(const WaveField& a, const WaveField& b);
WaveField operator-(const WaveField& a, const WaveField& b);
WaveField operator*(std::complex<double> c, const WaveField& f);

/// psi_0(x) = sqrt(kappa/pi)/sigma * exp[-(kappa/sigma^2
///            - i sigma_dot mu / sigma) x.x / 2]; unit L2 norm.
WaveField ground_state(const Grid2D& grid, const SigmaSolution& s, double t);

enum class Circular { left, right };  // left: A-^dag (raises m); right: A+^dag

/// Applies A-^dag or A+^dag = (a1^dag +/- i a2^dag)/sqrt(2) with
/// a_a^dag = (1/sqrt(2 kappa)) [(sigma_dot mu - i kappa/sigma) x_a
///           + i sigma d_a], derivative taken spectrally.
WaveField apply_creation(const WaveField& f, Circular which, const SigmaSolution& s,
                         double t);

/// Cartesian annihilation a_axis (axis 0 or 1); a_a psi_0 = 0.
WaveField apply_annihilation(const WaveField& f, int axis, const SigmaSolution& s,
                             double t);

/// N (A-^dag)^{(n+m)/2} (A+^dag)^{(n-m)/2} psi_0 by repeated apply_creation,
/// N = 1/sqrt(((n+m)/2)! ((n-m)/2)!).  Grid-accurate for n <= 16 on an
/// adequate grid.
WaveField basis_state(const Grid2D& grid, FockIndex idx, const SigmaSolution& s,
                      double t);

/// Independent closed-form route: Laguerre-Gauss evaluation
///   psi = pref * i^n (-1)^{r_>} sqrt(r_<!/r_>!) w^{|m|}
///         L_{r_<}^{(|m|)}(|zeta|^2) exp(-c x.x / 2)
/// with zeta = sqrt(kappa)(x1 + i x2)/sigma, w = zeta (m >= 0) or conj(zeta),
/// c = kappa/sigma^2 - i sigma_dot mu/sigma.  Used to cross-check the
/// operator path and for fast high-n evaluation.
WaveField basis_state_closed_form(const Grid2D& grid, FockIndex idx,
                                  const SigmaSolution& s, double t);

/// H psi = -(1/2 mu) Lap psi + (omega^2/2)(x.x) psi - nu L psi.
WaveField apply_hamiltonian(const WaveField& f, const EffectiveModel& model,
                            double t);

/// I psi = sum_a [(sigma_dot mu x_a - sigma p_a)^2 + (kappa^2/sigma^2) x_a^2] psi.
WaveField apply_invariant(const WaveField& f, const SigmaSolution& s, double t);

/// L psi = -i (x1 d2 - x2 d1) psi.
WaveField apply_angular_momentum(const WaveField& f);

/// <n,m| d/dt |n,m> by central differencing of basis_state at t +/- dt.
std::complex<double> dt_overlap(const Grid2D& grid, FockIndex idx,
                                const SigmaSolution& s, double t, double dt);

} // namespace tdho

#endif
