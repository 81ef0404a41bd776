#include "tdho/wavefield.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "tdho/errors.hpp"
#include "tdho/warnings.hpp"

namespace tdho {

using cplx = std::complex<double>;

namespace {

thread_local std::vector<std::string> t_warnings;

// Unaligned in-place plans so one cached plan serves any buffer of a size.
struct FftPlans {
    fftw_plan forward;
    fftw_plan backward;
};

std::mutex plan_mutex;

FftPlans& plans_for(int n) {
    static std::map<int, FftPlans> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<cplx> dummy(static_cast<std::size_t>(n) * n);
        auto* ptr = reinterpret_cast<fftw_complex*>(dummy.data());
        FftPlans p;
        p.forward = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
        it = cache.emplace(n, p).first;
    }
    return it->second;
}

void fft_forward(std::vector<cplx>& data, int n) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plans_for(n).forward, ptr, ptr);
}

void fft_backward(std::vector<cplx>& data, int n) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plans_for(n).backward, ptr, ptr);
    const double scale = 1.0 / (double(n) * double(n));
    for (cplx& v : data) v *= scale;
}

}  // namespace

void push_warning(std::string message) { t_warnings.push_back(std::move(message)); }

std::vector<std::string> drain_warnings() {
    std::vector<std::string> out;
    out.swap(t_warnings);
    return out;
}

Grid2D::Grid2D(int points_per_axis, double extent)
    : n_(points_per_axis), extent_(extent) {
    if (n_ < 4 || n_ % 2 != 0)
        throw GridError("grid points_per_axis must be even and >= 4");
    if (!(extent_ > 0.0)) throw GridError("grid extent must be positive");
    nodes_.resize(static_cast<std::size_t>(n_));
    waves_.resize(static_cast<std::size_t>(n_));
    const double h = 2.0 * extent_ / n_;
    const double dk = std::numbers::pi / extent_;
    for (int j = 0; j < n_; ++j) {
        nodes_[static_cast<std::size_t>(j)] = -extent_ + h * j;
        waves_[static_cast<std::size_t>(j)] = dk * (j < n_ / 2 ? j : j - n_);
    }
}

double Grid2D::auto_extent(const SigmaSolution& s, int n_highest) {
    double max_width = 0.0;
    for (double t : s.times())
        max_width = std::max(max_width, s.sigma(t) / std::sqrt(s.kappa()));
    return (8.0 + 0.4 * n_highest) * max_width;
}

WaveField::WaveField(Grid2D grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    const std::size_t expect = static_cast<std::size_t>(grid_.points()) *
                               static_cast<std::size_t>(grid_.points());
    if (values_.size() != expect)
        throw std::invalid_argument("WaveField: value count does not match grid");
}

double WaveField::norm() const { return std::sqrt(std::real(inner(*this, *this))); }

std::complex<double> inner(const WaveField& bra, const WaveField& ket) {
    if (!(bra.grid() == ket.grid()))
        throw std::invalid_argument("inner: mismatched grids");
    cplx acc(0.0, 0.0);
    const auto& a = bra.values();
    const auto& b = ket.values();
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc * bra.grid().weight();
}

double boundary_magnitude(const WaveField& f) {
    const int n = f.grid().points();
    double mx = 0.0;
    for (int j = 0; j < n; ++j) {
        mx = std::max({mx, std::abs(f.at(0, j)), std::abs(f.at(n - 1, j)),
                       std::abs(f.at(j, 0)), std::abs(f.at(j, n - 1))});
    }
    return mx;
}

WaveField operator+(const WaveField& a, const WaveField& b) {
    std::vector<cplx> v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
    return WaveField(a.grid(), std::move(v));
}

WaveField operator-(const WaveField& a, const WaveField& b) {
    std::vector<cplx> v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values()[i];
    return WaveField(a.grid(), std::move(v));
}

WaveField operator*(cplx c, const WaveField& f) {
    std::vector<cplx> v = f.values();
    for (cplx& x : v) x *= c;
    return WaveField(f.grid(), std::move(v));
}

namespace {

// d/dx_axis by Fourier multiplier i k.
std::vector<cplx> spectral_derivative(const Grid2D& g, const std::vector<cplx>& in,
                                      int axis) {
    const int n = g.points();
    std::vector<cplx> work = in;
    fft_forward(work, n);
    for (int i = 0; i < n; ++i) {
        const double ki = g.wavenumber(i);
        for (int j = 0; j < n; ++j) {
            const double k = (axis == 0) ? ki : g.wavenumber(j);
            work[static_cast<std::size_t>(i) * n + j] *= cplx(0.0, k);
        }
    }
    fft_backward(work, n);
    return work;
}

std::vector<cplx> spectral_laplacian(const Grid2D& g, const std::vector<cplx>& in) {
    const int n = g.points();
    std::vector<cplx> work = in;
    fft_forward(work, n);
    for (int i = 0; i < n; ++i) {
        const double ki = g.wavenumber(i);
        for (int j = 0; j < n; ++j) {
            const double kj = g.wavenumber(j);
            work[static_cast<std::size_t>(i) * n + j] *= -(ki * ki + kj * kj);
        }
    }
    fft_backward(work, n);
    return work;
}

// High-order exponential low-pass applied to synthesized states.  Adequately
// resolved states carry no content above 0.8 k_max (their Gaussian spectra
// are below roundoff there), so this only strips the amplified FFT roundoff
// noise that repeated position/derivative applications would otherwise
// compound into the k^2-weighted operators.
void filter_state(const Grid2D& g, std::vector<cplx>& v) {
    const int n = g.points();
    fft_forward(v, n);
    const double k_cut = 0.8 * std::abs(g.wavenumber(n / 2));
    for (int i = 0; i < n; ++i) {
        const double ki = g.wavenumber(i);
        for (int j = 0; j < n; ++j) {
            const double kj = g.wavenumber(j);
            const double x = std::sqrt(ki * ki + kj * kj) / k_cut;
            v[static_cast<std::size_t>(i) * n + j] *=
                std::exp(-36.0 * std::pow(x, 36));
        }
    }
    fft_backward(v, n);
}

std::vector<cplx> multiply_position(const Grid2D& g, const std::vector<cplx>& in,
                                    int axis) {
    const int n = g.points();
    std::vector<cplx> out = in;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = g.node(axis == 0 ? i : j);
            out[static_cast<std::size_t>(i) * n + j] *= x;
        }
    }
    return out;
}

void check_boundary(const WaveField& f, const char* where) {
    const double b = boundary_magnitude(f);
    if (b > 1e-12) {
        std::ostringstream os;
        os.precision(3);
        os << where << ": field magnitude " << b
           << " at the grid boundary exceeds 1e-12; spectral accuracy degraded";
        push_warning(os.str());
    }
}

}  // namespace

WaveField ground_state(const Grid2D& grid, const SigmaSolution& s, double t) {
    const double sigma = s.sigma(t);
    const double sigma_dot = s.sigma_dot(t);
    const double kappa = s.kappa();
    const double mu = s.model().mu(t);

    const double width = sigma / std::sqrt(kappa);
    if (grid.extent() < 6.0 * width) {
        std::ostringstream os;
        os.precision(6);
        os << "grid extent " << grid.extent() << " is below 6 Gaussian widths ("
           << 6.0 * width << ") at t = " << t;
        throw GridError(os.str());
    }

    const int n = grid.points();
    const double pref = std::sqrt(kappa / std::numbers::pi) / sigma;
    const cplx c(kappa / (sigma * sigma), -sigma_dot * mu / sigma);
    std::vector<cplx> v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double x1 = grid.node(i);
        for (int j = 0; j < n; ++j) {
            const double x2 = grid.node(j);
            v[static_cast<std::size_t>(i) * n + j] =
                pref * std::exp(-c * (0.5 * (x1 * x1 + x2 * x2)));
        }
    }
    filter_state(grid, v);
    WaveField f(grid, std::move(v));
    f.label_index = {0, 0};
    f.label_time = t;
    check_boundary(f, "ground_state");
    return f;
}

WaveField apply_creation(const WaveField& f, Circular which, const SigmaSolution& s,
                         double t) {
    check_boundary(f, "apply_creation");
    const Grid2D& g = f.grid();
    const double sigma = s.sigma(t);
    const double kappa = s.kappa();
    const double mu = s.model().mu(t);
    const cplx coef_x(s.sigma_dot(t) * mu, -kappa / sigma);  // sigma_dot mu - i kappa/sigma
    const cplx i1(0.0, 1.0);
    const double pref = 1.0 / std::sqrt(4.0 * kappa);  // (1/sqrt 2)(1/sqrt(2 kappa))
    const cplx sign = (which == Circular::left) ? i1 : -i1;  // x1 +/- i x2

    const auto x1f = multiply_position(g, f.values(), 0);
    const auto x2f = multiply_position(g, f.values(), 1);
    const auto d1f = spectral_derivative(g, f.values(), 0);
    const auto d2f = spectral_derivative(g, f.values(), 1);

    std::vector<cplx> v(f.values().size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = pref * (coef_x * (x1f[k] + sign * x2f[k]) +
                       i1 * sigma * (d1f[k] + sign * d2f[k]));
    }
    filter_state(g, v);
    return WaveField(g, std::move(v));
}

WaveField apply_annihilation(const WaveField& f, int axis, const SigmaSolution& s,
                             double t) {
    const Grid2D& g = f.grid();
    const double sigma = s.sigma(t);
    const double kappa = s.kappa();
    const double mu = s.model().mu(t);
    const cplx coef_x(s.sigma_dot(t) * mu, kappa / sigma);  // sigma_dot mu + i kappa/sigma
    const cplx i1(0.0, 1.0);
    const double pref = 1.0 / std::sqrt(2.0 * kappa);

    const auto xf = multiply_position(g, f.values(), axis);
    const auto df = spectral_derivative(g, f.values(), axis);
    std::vector<cplx> v(f.values().size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = pref * (coef_x * xf[k] + i1 * sigma * df[k]);
    return WaveField(g, std::move(v));
}

WaveField basis_state(const Grid2D& grid, FockIndex idx, const SigmaSolution& s,
                      double t) {
    if (!FockIndex::valid(idx.n, idx.m))
        throw std::invalid_argument("basis_state: invalid Fock index");
    WaveField f = ground_state(grid, s, t);
    double norm_factorials = 1.0;
    for (int k = 0; k < idx.r_plus(); ++k) {
        f = apply_creation(f, Circular::left, s, t);
        norm_factorials *= k + 1;
    }
    for (int k = 0; k < idx.r_minus(); ++k) {
        f = apply_creation(f, Circular::right, s, t);
        norm_factorials *= k + 1;
    }
    f = cplx(1.0 / std::sqrt(norm_factorials), 0.0) * f;
    f.label_index = idx;
    f.label_time = t;
    return f;
}

WaveField basis_state_closed_form(const Grid2D& grid, FockIndex idx,
                                  const SigmaSolution& s, double t) {
    if (!FockIndex::valid(idx.n, idx.m))
        throw std::invalid_argument("basis_state_closed_form: invalid Fock index");
    const double sigma = s.sigma(t);
    const double kappa = s.kappa();
    const double mu = s.model().mu(t);

    const int r_hi = std::max(idx.r_plus(), idx.r_minus());
    const int r_lo = std::min(idx.r_plus(), idx.r_minus());
    const unsigned alpha = static_cast<unsigned>(std::abs(idx.m));

    double ratio = 1.0;  // r_lo! / r_hi!
    for (int k = r_lo + 1; k <= r_hi; ++k) ratio /= k;

    static const cplx i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cplx phase = i_powers[idx.n % 4];
    if (r_hi % 2 != 0) phase = -phase;
    const cplx amp = phase * std::sqrt(ratio) *
                     (std::sqrt(kappa / std::numbers::pi) / sigma);
    const cplx c(kappa / (sigma * sigma), -s.sigma_dot(t) * mu / sigma);
    const double zeta_scale = std::sqrt(kappa) / sigma;

    const int n = grid.points();
    std::vector<cplx> v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double x1 = grid.node(i);
        for (int j = 0; j < n; ++j) {
            const double x2 = grid.node(j);
            cplx zeta = zeta_scale * cplx(x1, x2);
            if (idx.m < 0) zeta = std::conj(zeta);
            const double zz = std::norm(zeta);
            const double lag = std::assoc_laguerre(static_cast<unsigned>(r_lo),
                                                   alpha, zz);
            cplx w_pow(1.0, 0.0);  // zeta^alpha (pow would NaN at zeta = 0)
            for (unsigned k = 0; k < alpha; ++k) w_pow *= zeta;
            v[static_cast<std::size_t>(i) * n + j] =
                amp * w_pow * lag * std::exp(-c * (0.5 * (x1 * x1 + x2 * x2)));
        }
    }
    WaveField f(grid, std::move(v));
    f.label_index = idx;
    f.label_time = t;
    return f;
}

WaveField apply_hamiltonian(const WaveField& f, const EffectiveModel& model,
                            double t) {
    check_boundary(f, "apply_hamiltonian");
    const Grid2D& g = f.grid();
    const EffectiveParams ep = model.at(t);
    const auto lap = spectral_laplacian(g, f.values());
    const auto d1f = spectral_derivative(g, f.values(), 0);
    const auto d2f = spectral_derivative(g, f.values(), 1);

    const int n = g.points();
    const cplx i1(0.0, 1.0);
    std::vector<cplx> v(f.values().size());
    for (int i = 0; i < n; ++i) {
        const double x1 = g.node(i);
        for (int j = 0; j < n; ++j) {
            const double x2 = g.node(j);
            const std::size_t k = static_cast<std::size_t>(i) * n + j;
            const cplx Lpsi = -i1 * (x1 * d2f[k] - x2 * d1f[k]);
            v[k] = -lap[k] / (2.0 * ep.mu) +
                   0.5 * ep.omega_sq * (x1 * x1 + x2 * x2) * f.values()[k] -
                   ep.nu * Lpsi;
        }
    }
    return WaveField(g, std::move(v));
}

WaveField apply_invariant(const WaveField& f, const SigmaSolution& s, double t) {
    check_boundary(f, "apply_invariant");
    const Grid2D& g = f.grid();
    const double sigma = s.sigma(t);
    const double kappa = s.kappa();
    const double c = s.sigma_dot(t) * s.model().mu(t);  // sigma_dot mu
    const double w = kappa * kappa / (sigma * sigma);
    const cplx i1(0.0, 1.0);

    std::vector<cplx> out(f.values().size(), cplx(0.0, 0.0));
    for (int axis = 0; axis < 2; ++axis) {
        // (c x - sigma p)^2 + w x^2 with p = -i d
        const auto xf = multiply_position(g, f.values(), axis);
        const auto df = spectral_derivative(g, f.values(), axis);
        const auto xxf = multiply_position(g, xf, axis);
        const auto dxf = spectral_derivative(g, xf, axis);
        const auto xdf = multiply_position(g, df, axis);
        const auto ddf = spectral_derivative(g, df, axis);
        for (std::size_t k = 0; k < out.size(); ++k) {
            const cplx xp_px = -i1 * (xdf[k] + dxf[k]);  // (xp + px) psi
            out[k] += c * c * xxf[k] - c * sigma * xp_px - sigma * sigma * ddf[k] +
                      w * xxf[k];
        }
    }
    return WaveField(g, std::move(out));
}

WaveField apply_angular_momentum(const WaveField& f) {
    const Grid2D& g = f.grid();
    const auto d1f = spectral_derivative(g, f.values(), 0);
    const auto d2f = spectral_derivative(g, f.values(), 1);
    const int n = g.points();
    const cplx i1(0.0, 1.0);
    std::vector<cplx> v(f.values().size());
    for (int i = 0; i < n; ++i) {
        const double x1 = g.node(i);
        for (int j = 0; j < n; ++j) {
            const double x2 = g.node(j);
            const std::size_t k = static_cast<std::size_t>(i) * n + j;
            v[k] = -i1 * (x1 * d2f[k] - x2 * d1f[k]);
        }
    }
    return WaveField(g, std::move(v));
}

std::complex<double> dt_overlap(const Grid2D& grid, FockIndex idx,
                                const SigmaSolution& s, double t, double dt) {
    if (!(t - dt >= s.t_begin() && t + dt <= s.t_end()))
        throw std::out_of_range("dt_overlap: t +/- dt leaves the horizon");
    if (dt < 1e-7)
        push_warning("dt_overlap: dt below 1e-7 risks cancellation");
    const WaveField mid = basis_state(grid, idx, s, t);
    const WaveField plus = basis_state(grid, idx, s, t + dt);
    const WaveField minus = basis_state(grid, idx, s, t - dt);
    return inner(mid, plus - minus) / (2.0 * dt);
}

} // namespace tdho
