#pragma once

#include <complex>
#include <string>
#include <vector>

namespace eband {

enum class Modulation { BPSK, QPSK, QAM16, QAM64, QAM256 };

int bits_per_symbol(Modulation m);
std::string modulation_name(Modulation m);
Modulation modulation_from_name(const std::string& name);

/// Analytic bit error rate over AWGN at the given per-symbol SNR (linear).
/// BPSK uses Q(sqrt(2*snr)); square M-QAM uses the exact Gray-coded
/// per-bit expression (Cho & Yoon form).
double awgn_ber(Modulation m, double snr_linear);

/// Per-symbol SNR (dB) at which awgn_ber equals target_ber, by bisection
/// to 1e-4 dB. Throws std::domain_error if target_ber is not in (0, 0.5)
/// or unreachable.
double required_snr_db(Modulation m, double target_ber);

/// Gray-mapped constellation with unit average symbol energy.
const std::vector<std::complex<double>>& constellation(Modulation m);

/// Nearest constellation point (used by decision-directed tracking and
/// the Monte Carlo BER oracle in the tests).
std::complex<double> nearest_symbol(Modulation m, std::complex<double> r);

/// Q(x) via the complementary error function.
double q_function(double x);

}  // namespace eband
