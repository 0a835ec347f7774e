#pragma once

#include <string>
#include <vector>

#include "coexsim/rng.hpp"

namespace coexsim {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline double dist_m(const Vec2& a, const Vec2& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// bearing of b as seen from a, degrees in (-180, 180], 0 = +x axis
double bearing_deg(const Vec2& a, const Vec2& b);

struct Cell {
    int id = 0;
    int site = 0;
    Vec2 pos;                    // antenna ground position
    double boresight_deg = 0.0;  // azimuth of sector boresight
    double height_m = 25.0;
    double max_gain_dBi = 17.0;
};

struct Ue {
    int id = 0;
    Vec2 pos;
    double height_m = 1.5;
    bool indoor = false;
    int drop_cell = 0;     // cell whose area the UE was dropped in
    int serving_cell = -1; // set by attachment (argmin coupling loss)
};

struct LayoutParams {
    bool small_cell = false;
    double isd_m = 500.0;
    int macro_sites = 7;
    int sectors_per_site = 3;
    int small_cells_per_macro_area = 4;
    double macro_height_m = 25.0;
    double small_height_m = 10.0;
    double macro_gain_dBi = 17.0;
    double small_gain_dBi = 5.0;
    int ues_per_cell = 10;           // 10 macro / 30 small
    double indoor_fraction = 0.8;    // 0.8 macro / 0.2 small
    double min_ue_bs_dist_m = 25.0;  // 25 macro / 5 small
};

struct NetworkLayout {
    std::vector<Cell> cells;
    std::vector<Ue> ues;
    Vec2 centroid;  // mean of cell positions
    bool small_cell = false;
    double isd_m = 500.0;
};

// Hex grid of macro sites (center + 6 neighbors), 3 sectors each; for the
// small-cell flavor, 4 small cells dropped uniformly per macro sector area
// with minimum separations. UEs dropped uniformly per cell respecting the
// minimum UE-BS distance; indoor flags assigned to hit the indoor fraction
// exactly per cell.
NetworkLayout build_layout(const LayoutParams& p, RngStream& rng);

struct RadarView {
    double range_km = 0.0;              // horizontal distance radar -> BS
    double azimuth_from_radar_deg = 0;  // off the radar->centroid line
    double elevation_deg = 0.0;         // of the BS as seen from the radar
};

// Radar sits on the +x axis at distance_km from the layout centroid, antenna
// at radar_height_m. Azimuths are measured from the radar->centroid ray,
// positive counterclockwise.
std::vector<RadarView> radar_geometry(const NetworkLayout& layout,
                                      double distance_km,
                                      double radar_height_m = 50.0);

// chord swept by the beam footprint at range: distance * angle (small angle)
double illuminated_arc_width_km(double distance_km, double footprint_angle_rad);

// CSV: cell id, x, y, height, boresight, gain
std::string layout_csv(const NetworkLayout& layout);

}  // namespace coexsim
