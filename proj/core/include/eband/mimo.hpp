#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace eband {

struct ArrayGeometry {
    std::vector<Eigen::Vector2d> positions;  // lateral offsets in the aperture plane, m
    double element_gain_dbi = 0.0;

    static ArrayGeometry linear(int n, double spacing_m, double element_gain_dbi);
    /// Uniform lambda/2 line sampling of an aperture of the given span.
    static ArrayGeometry dense_linear(double span_m, double wavelength_m, double element_gain_dbi);
};

struct LosChannel {
    Eigen::MatrixXcd h;  // N_r x N_t, exact spherical-wave entries
    double wavelength_m = 0.0;
    double distance_m = 0.0;
};

/// Symmetric Rayleigh spacing d = sqrt(lambda*D/n_max).
double rayleigh_spacing(double distance_m, double wavelength_m, int n_max);
/// Asymmetric form: the required product d_t*d_r = lambda*D/n_max.
double rayleigh_spacing_product(double distance_m, double wavelength_m, int n_max);

/// Exact spherical-wave LOS channel between broadside-aligned arrays
/// separated by distance_m. Entry (m,n) has magnitude
/// a_t*a_r*lambda/(4*pi*r_mn) and phase -2*pi*r_mn/lambda.
LosChannel los_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double wavelength_m, double distance_m);

std::vector<double> singular_values(const Eigen::MatrixXcd& h);

struct BeamspaceResult {
    Eigen::MatrixXcd h_b;  // U_r^H * H * U_t with unitary DFT beam matrices
    int effective_dimension = 0;
};

/// Beamspace transform; arrays must be uniform half-wavelength sampled
/// (validated through the geometry overload). effective_dimension is the
/// smallest p capturing at least `threshold` of the total sigma^2.
BeamspaceResult beamspace(const Eigen::MatrixXcd& h, double threshold = 0.99);
BeamspaceResult beamspace(const LosChannel& ch, const ArrayGeometry& tx, const ArrayGeometry& rx,
                          double threshold = 0.99);

enum class SystemKind { dish, conv_mimo, cap_mimo };

SystemKind system_kind_from_name(const std::string& name);

/// Terminal description for the capacity comparison. rho excludes
/// antenna gains (they enter per preset); gains below are end-to-end
/// identical at both terminals.
struct SystemPreset {
    SystemKind kind = SystemKind::dish;
    double aperture_gain_dbi = 55.0;  // dish / cap_mimo
    double element_gain_dbi = 30.0;   // conv_mimo
    int n_elements = 4;               // conv_mimo
    int beams = 4;                    // cap_mimo
    bool waterfilling = false;
    double lens_loss_db = 0.0;  // cap_mimo
};

/// Spectral efficiency in b/s/Hz at normalized SNR rho (dB):
///   dish:      log2(1 + rho*G^2)
///   conv_mimo: n*log2(1 + rho*g^2)
///   cap_mimo:  p*log2(1 + (rho/p)*G^2*L)
double spectral_efficiency(const SystemPreset& preset, double rho_db);

/// Equal-power or waterfilling capacity from channel singular values;
/// gains are sigma_i^2 of the path-loss-normalized channel, power rho
/// split across n_tx streams for equal allocation.
double capacity_equal_power(const std::vector<double>& sigma_sq, double rho_linear, int n_tx);
double capacity_waterfilling(const std::vector<double>& sigma_sq, double rho_linear);

/// floor(side/(lambda/2))^2 half-wavelength planar element count.
long element_budget(double aperture_side_m, double wavelength_m);

}  // namespace eband
