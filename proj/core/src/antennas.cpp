#include "coexsim/antennas.hpp"

#include <algorithm>
#include <cmath>

#include "coexsim/util.hpp"

namespace coexsim {

namespace {

// normalized field amplitude of the cosine aperture, |f(mu)| / f(0)
double cosine_aperture_amp(double mu) {
    const double h = kPi / 2.0;
    double d = h * h - mu * mu;
    double f;
    if (std::abs(d) < 1e-9) {
        f = 0.5;  // lim_{mu->pi/2} (pi/2) cos(mu) / ((pi/2)^2 - mu^2)
    } else {
        f = h * std::cos(mu) / d;
    }
    return std::abs(f) / (2.0 / kPi);
}

}  // namespace

RadarPattern::RadarPattern(double theta3dB_deg, double floor_dB)
    : theta3dB_(theta3dB_deg), floor_(floor_dB) {
    // mask = floor  =>  theta_f = (theta3dB / 2.33) e^{-floor/17.51}
    theta_f_ = theta3dB_ / 2.33 * std::exp(-floor_ / 17.51);

    // first pattern null: mu = 3 pi / 2
    null1_ = rad2deg(std::asin(std::min(1.0, 1.5 * theta3dB_ / 68.8)));

    // theta_m: where the descending main-lobe skirt meets the mask. The two
    // curves can also cross inside the main lobe where the mask is above the
    // pattern; the transition we want is the last angle before the first
    // null at which the pattern still exceeds the mask.
    const int n = 4096;
    double lo = theta3dB_ / 2.0, hi = null1_;
    double a = lo, b = hi;
    bool found = false;
    double prev = lo;
    for (int i = 0; i <= n; ++i) {
        double th = lo + (hi - lo) * i / n;
        if (theoretical_dB(th) >= mask_dB(th)) {
            prev = th;
            found = true;
        }
    }
    if (found) {
        a = prev;
        b = std::min(hi, prev + (hi - lo) / n);
        for (int it = 0; it < 200; ++it) {
            double m = 0.5 * (a + b);
            if (theoretical_dB(m) >= mask_dB(m))
                a = m;
            else
                b = m;
        }
        theta_m_ = 0.5 * (a + b);
    } else {
        theta_m_ = lo;  // degenerate geometry; mask everywhere past half power
    }
}

double RadarPattern::theoretical_dB(double theta_off_deg) const {
    double mu = 68.8 * kPi * std::sin(deg2rad(std::abs(theta_off_deg))) / theta3dB_;
    double amp = cosine_aperture_amp(mu);
    if (amp <= 0.0) return -400.0;
    return 20.0 * std::log10(amp);
}

double RadarPattern::mask_dB(double theta_off_deg) const {
    double t = std::abs(theta_off_deg);
    if (t <= 0.0) return 0.0;
    return -17.51 * std::log(2.33 * t / theta3dB_);
}

double RadarPattern::normalized_gain_dB(double theta_off_deg) const {
    double t = std::abs(theta_off_deg);
    double g;
    if (t <= theta_m_)
        g = theoretical_dB(t);
    else if (t <= theta_f_)
        g = mask_dB(t);
    else
        g = floor_;
    return std::max(g, floor_);
}

double RadarAntenna::tx_gain_dBi(double az_off_deg, double el_off_deg) const {
    double n = az.normalized_gain_dB(az_off_deg) + el.normalized_gain_dB(el_off_deg);
    return boresight_gain_dBi + std::max(n, az.floor_dB());
}

double sector_plane_gain_dB(double angle_deg, double tilt_deg,
                            double theta3dB_deg, double Am_dB) {
    double off = wrap_deg(angle_deg - tilt_deg);
    double a = 12.0 * (off / theta3dB_deg) * (off / theta3dB_deg);
    return -std::min(a, Am_dB);
}

double SectorAntenna::composite_attenuation_dB(double az_off_deg,
                                               double el_deg) const {
    double ga = azimuth_flat
                    ? 0.0
                    : sector_plane_gain_dB(az_off_deg, az_tilt_deg,
                                           theta3dB_az_deg, Am_dB);
    double ge = sector_plane_gain_dB(el_deg, -el_downtilt_deg,
                                     theta3dB_el_deg, Am_dB);
    return std::max(ga + ge, -Am_dB);
}

double SectorAntenna::gain_dBi(double az_off_deg, double el_deg) const {
    return max_gain_dBi + composite_attenuation_dB(az_off_deg, el_deg);
}

}  // namespace coexsim
