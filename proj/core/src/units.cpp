#include "eband/units.hpp"

#include <numbers>

namespace eband {

double aperture_gain_dbi(double width_m, double height_m, double freq_hz, double efficiency) {
    if (!(width_m > 0.0) || !(height_m > 0.0)) throw std::domain_error("aperture_gain_dbi: dimensions must be > 0");
    if (!(efficiency > 0.0 && efficiency <= 1.0)) throw std::domain_error("aperture_gain_dbi: efficiency must be in (0, 1]");
    const double lambda = wavelength_m(freq_hz);
    return linear_to_db(efficiency * 4.0 * std::numbers::pi * width_m * height_m / (lambda * lambda));
}

}  // namespace eband
