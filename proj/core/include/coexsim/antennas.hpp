#pragma once

namespace coexsim {

// Rotating radar antenna: cosine-aperture main lobe, logarithmic sidelobe
// mask, constant backlobe floor. All gains are normalized (0 dB boresight).
//
// Main lobe (field amplitude): f(mu) = (pi/2) cos(mu) / ((pi/2)^2 - mu^2),
// mu = 68.8 pi sin(theta) / theta3dB with theta3dB in degrees. The removable
// singularity at |mu| = pi/2 has limit 1/2. Power pattern normalized by
// f(0) = 2/pi.
//
// Sidelobe mask: -17.51 ln(2.33 |theta| / theta3dB) dB, active from the
// angle theta_m where the descending main-lobe skirt crosses the mask, out
// to theta_f where the mask reaches the -50 dB backlobe floor.
class RadarPattern {
public:
    explicit RadarPattern(double theta3dB_deg = 0.81,
                          double floor_dB = -50.0);

    // normalized gain in dB, <= 0, >= floor
    double normalized_gain_dB(double theta_off_deg) const;

    // main-lobe cosine pattern alone (no mask/floor), normalized dB
    double theoretical_dB(double theta_off_deg) const;
    // sidelobe mask alone, normalized dB
    double mask_dB(double theta_off_deg) const;

    double theta3dB_deg() const { return theta3dB_; }
    double theta_m_deg() const { return theta_m_; }   // skirt/mask crossing
    double theta_f_deg() const { return theta_f_; }   // mask/floor crossing
    double first_null_deg() const { return null1_; }
    double floor_dB() const { return floor_; }

private:
    double theta3dB_;
    double floor_;
    double theta_m_;
    double theta_f_;
    double null1_;
};

// Full radar transmit antenna: separable az/el normalized patterns on a
// boresight gain, jointly floored at boresight_gain + floor.
struct RadarAntenna {
    double boresight_gain_dBi = 45.0;
    RadarPattern az{0.81};
    RadarPattern el{0.81};

    double tx_gain_dBi(double az_off_deg, double el_off_deg) const;
};

// LTE sector antenna: parabolic per-plane pattern, composite capped at Am.
struct SectorAntenna {
    double max_gain_dBi = 17.0;
    double theta3dB_az_deg = 70.0;
    double theta3dB_el_deg = 10.0;
    double az_tilt_deg = 0.0;       // relative to boresight
    double el_downtilt_deg = 12.0;  // positive tilts the beam downward
    double Am_dB = 20.0;
    bool azimuth_flat = false;      // omnidirectional in azimuth (small cell)

    // attenuation relative to max gain, in [-Am, 0]
    double composite_attenuation_dB(double az_off_deg, double el_deg) const;
    // gain toward a direction given as (azimuth offset from boresight,
    // elevation angle of the ray, both deg)
    double gain_dBi(double az_off_deg, double el_deg) const;
};

// single-plane pattern: -min(12 ((angle - tilt)/theta3dB)^2, Am)
double sector_plane_gain_dB(double angle_deg, double tilt_deg,
                            double theta3dB_deg, double Am_dB);

}  // namespace coexsim
