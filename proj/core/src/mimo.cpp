#include "eband/mimo.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

ArrayGeometry ArrayGeometry::linear(int n, double spacing_m, double element_gain_dbi) {
    if (n < 1) throw std::invalid_argument("ArrayGeometry: need at least one element");
    ArrayGeometry g;
    g.element_gain_dbi = element_gain_dbi;
    g.positions.reserve(n);
    for (int i = 0; i < n; ++i) g.positions.emplace_back((i - (n - 1) / 2.0) * spacing_m, 0.0);
    return g;
}

ArrayGeometry ArrayGeometry::dense_linear(double span_m, double wavelength_m, double element_gain_dbi) {
    const int n = static_cast<int>(std::floor(span_m / (wavelength_m / 2.0))) + 1;
    return linear(n, wavelength_m / 2.0, element_gain_dbi);
}

double rayleigh_spacing_product(double distance_m, double wavelength_m, int n_max) {
    if (!(distance_m > 0.0 && wavelength_m > 0.0)) throw std::domain_error("rayleigh_spacing: D and lambda must be > 0");
    if (n_max < 2) throw std::domain_error("rayleigh_spacing: n_max must be >= 2");
    return wavelength_m * distance_m / n_max;
}

double rayleigh_spacing(double distance_m, double wavelength_m, int n_max) {
    return std::sqrt(rayleigh_spacing_product(distance_m, wavelength_m, n_max));
}

LosChannel los_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double wavelength_m, double distance_m) {
    if (tx.positions.empty() || rx.positions.empty()) throw std::invalid_argument("los_channel: empty array");
    const double a_t = std::pow(10.0, tx.element_gain_dbi / 20.0);
    const double a_r = std::pow(10.0, rx.element_gain_dbi / 20.0);
    LosChannel ch;
    ch.wavelength_m = wavelength_m;
    ch.distance_m = distance_m;
    ch.h.resize(static_cast<Eigen::Index>(rx.positions.size()), static_cast<Eigen::Index>(tx.positions.size()));
    for (std::size_t m = 0; m < rx.positions.size(); ++m) {
        for (std::size_t k = 0; k < tx.positions.size(); ++k) {
            const Eigen::Vector2d lateral = rx.positions[m] - tx.positions[k];
            const double r = std::sqrt(distance_m * distance_m + lateral.squaredNorm());
            if (!(r > 0.0)) throw std::domain_error("los_channel: element collision (r = 0)");
            const double amp = a_t * a_r * wavelength_m / (4.0 * std::numbers::pi * r);
            ch.h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                std::polar(amp, -2.0 * std::numbers::pi * r / wavelength_m);
        }
    }
    return ch;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& h) {
    // Jacobi is the most accurate for the small matrices typical here;
    // divide-and-conquer keeps dense-aperture cases tractable.
    Eigen::VectorXd sv;
    if (h.rows() <= 64 && h.cols() <= 64) {
        sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(h).singularValues();
    } else {
        sv = Eigen::BDCSVD<Eigen::MatrixXcd>(h).singularValues();
    }
    return {sv.data(), sv.data() + sv.size()};
}

namespace {

Eigen::MatrixXcd dft_matrix(Eigen::Index n) {
    Eigen::MatrixXcd u(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index m = 0; m < n; ++m)
            u(k, m) = std::polar(scale, -2.0 * std::numbers::pi * static_cast<double>(k) * m / n);
    return u;
}

void require_uniform_half_wavelength(const ArrayGeometry& g, double wavelength_m, const char* side) {
    if (g.positions.size() < 2) return;
    const double d0 = (g.positions[1] - g.positions[0]).norm();
    if (std::abs(d0 - wavelength_m / 2.0) > 1e-9 * wavelength_m)
        throw std::invalid_argument(std::string("beamspace: ") + side + " array is not half-wavelength sampled");
    for (std::size_t i = 1; i < g.positions.size(); ++i) {
        const double d = (g.positions[i] - g.positions[i - 1]).norm();
        if (std::abs(d - d0) > 1e-9 * wavelength_m)
            throw std::invalid_argument(std::string("beamspace: ") + side + " array is not uniform");
    }
}

}  // namespace

BeamspaceResult beamspace(const Eigen::MatrixXcd& h, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) throw std::invalid_argument("beamspace: threshold must be in (0, 1]");
    BeamspaceResult r;
    r.h_b = dft_matrix(h.rows()).adjoint() * h * dft_matrix(h.cols());
    auto sv = singular_values(r.h_b);
    double total = 0.0;
    for (double s : sv) total += s * s;
    double acc = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        acc += sv[i] * sv[i];
        if (acc >= threshold * total) {
            r.effective_dimension = static_cast<int>(i + 1);
            break;
        }
    }
    return r;
}

BeamspaceResult beamspace(const LosChannel& ch, const ArrayGeometry& tx, const ArrayGeometry& rx, double threshold) {
    require_uniform_half_wavelength(tx, ch.wavelength_m, "tx");
    require_uniform_half_wavelength(rx, ch.wavelength_m, "rx");
    return beamspace(ch.h, threshold);
}

SystemKind system_kind_from_name(const std::string& name) {
    if (name == "dish" || name == "DISH") return SystemKind::dish;
    if (name == "conv_mimo" || name == "CONV_MIMO") return SystemKind::conv_mimo;
    if (name == "cap_mimo" || name == "CAP_MIMO") return SystemKind::cap_mimo;
    throw std::domain_error("unknown system kind: " + name);
}

double spectral_efficiency(const SystemPreset& preset, double rho_db) {
    const double rho = db_to_linear(rho_db);
    switch (preset.kind) {
        case SystemKind::dish: {
            const double g2 = db_to_linear(2.0 * preset.aperture_gain_dbi);
            return std::log2(1.0 + rho * g2);
        }
        case SystemKind::conv_mimo: {
            if (preset.n_elements < 1) throw std::invalid_argument("conv_mimo: n_elements must be >= 1");
            const double g2 = db_to_linear(2.0 * preset.element_gain_dbi);
            return preset.n_elements * std::log2(1.0 + rho * g2);
        }
        case SystemKind::cap_mimo: {
            if (preset.beams < 1) throw std::invalid_argument("cap_mimo: beams must be >= 1");
            const double g2 = db_to_linear(2.0 * preset.aperture_gain_dbi - preset.lens_loss_db);
            const int p = preset.beams;
            // p parallel full-aperture beams with the power split p ways;
            // equal stream gains, so waterfilling coincides with equal power
            return p * std::log2(1.0 + rho / p * g2);
        }
    }
    throw std::logic_error("spectral_efficiency: bad enum");
}

double capacity_equal_power(const std::vector<double>& sigma_sq, double rho_linear, int n_tx) {
    if (n_tx < 1) throw std::invalid_argument("capacity_equal_power: n_tx must be >= 1");
    double c = 0.0;
    for (double s : sigma_sq) c += std::log2(1.0 + rho_linear / n_tx * s);
    return c;
}

double capacity_waterfilling(const std::vector<double>& sigma_sq, double rho_linear) {
    std::vector<double> g;
    for (double s : sigma_sq)
        if (s > 0.0) g.push_back(s);
    if (g.empty()) return 0.0;
    std::sort(g.begin(), g.end(), std::greater<>());
    // water level over the strongest k streams: mu = (P + sum 1/g)/k
    std::size_t k = g.size();
    double mu = 0.0;
    for (; k >= 1; --k) {
        double inv_sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) inv_sum += 1.0 / g[i];
        mu = (rho_linear + inv_sum) / k;
        if (mu - 1.0 / g[k - 1] >= 0.0) break;
    }
    double c = 0.0;
    for (std::size_t i = 0; i < k; ++i) c += std::log2(mu * g[i]);
    return c;
}

long element_budget(double aperture_side_m, double wavelength_m) {
    if (!(aperture_side_m > 0.0)) throw std::domain_error("element_budget: side must be > 0");
    const long per_side = static_cast<long>(std::floor(aperture_side_m / (wavelength_m / 2.0)));
    return per_side * per_side;
}

}  // namespace eband
