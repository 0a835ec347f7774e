#include "coexsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "coexsim/util.hpp"

namespace coexsim {

double bearing_deg(const Vec2& a, const Vec2& b) {
    return rad2deg(std::atan2(b.y - a.y, b.x - a.x));
}

namespace {

// center of the hex area served by a sector: one third of the ISD out along
// the boresight, the standard tri-sector tessellation
Vec2 sector_area_center(const Vec2& site, double boresight_deg, double isd_m) {
    double r = isd_m / 3.0;
    return {site.x + r * std::cos(deg2rad(boresight_deg)),
            site.y + r * std::sin(deg2rad(boresight_deg))};
}

Vec2 uniform_in_annulus(const Vec2& c, double r_min, double r_max,
                        RngStream& rng) {
    double u = rng.uniform();
    double r = std::sqrt(u * (r_max * r_max - r_min * r_min) + r_min * r_min);
    double phi = rng.uniform(0.0, 2.0 * kPi);
    return {c.x + r * std::cos(phi), c.y + r * std::sin(phi)};
}

}  // namespace

NetworkLayout build_layout(const LayoutParams& p, RngStream& rng) {
    NetworkLayout out;
    out.small_cell = p.small_cell;
    out.isd_m = p.isd_m;

    // site ring: origin plus 6 neighbors at the intersite distance
    std::vector<Vec2> sites;
    sites.push_back({0.0, 0.0});
    for (int k = 0; k < 6; ++k) {
        double a = deg2rad(60.0 * k);
        sites.push_back({p.isd_m * std::cos(a), p.isd_m * std::sin(a)});
    }
    sites.resize(static_cast<size_t>(p.macro_sites));

    std::vector<Cell> macro;
    int cid = 0;
    for (int s = 0; s < p.macro_sites; ++s)
        for (int sec = 0; sec < p.sectors_per_site; ++sec) {
            Cell c;
            c.id = cid++;
            c.site = s;
            c.pos = sites[static_cast<size_t>(s)];
            c.boresight_deg = 120.0 * sec;
            c.height_m = p.macro_height_m;
            c.max_gain_dBi = p.macro_gain_dBi;
            macro.push_back(c);
        }

    if (!p.small_cell) {
        out.cells = macro;
    } else {
        // small cells dropped in each macro sector's area; separations keep
        // co-located drops apart and off the macro masts
        const double min_small_small_m = 40.0;
        const double min_small_site_m = 75.0;
        const double drop_r = p.isd_m / 3.0;
        int id = 0;
        for (const Cell& mc : macro) {
            Vec2 center = sector_area_center(mc.pos, mc.boresight_deg, p.isd_m);
            for (int k = 0; k < p.small_cells_per_macro_area; ++k) {
                for (int attempt = 0;; ++attempt) {
                    Vec2 pos = uniform_in_annulus(center, 0.0, drop_r, rng);
                    bool ok = true;
                    for (const Vec2& sp : sites)
                        if (dist_m(pos, sp) < min_small_site_m) ok = false;
                    for (const Cell& c : out.cells)
                        if (dist_m(pos, c.pos) < min_small_small_m) ok = false;
                    if (ok || attempt > 1000) {
                        Cell c;
                        c.id = id++;
                        c.site = mc.id;  // parent macro sector
                        c.pos = pos;
                        c.boresight_deg = 0.0;  // omni
                        c.height_m = p.small_height_m;
                        c.max_gain_dBi = p.small_gain_dBi;
                        out.cells.push_back(c);
                        break;
                    }
                }
            }
        }
    }

    // UE drop: uniform over each cell's service area
    int uid = 0;
    for (const Cell& c : out.cells) {
        int n = p.ues_per_cell;
        int n_indoor = static_cast<int>(std::lround(p.indoor_fraction * n));
        // deterministic indoor assignment: first n_indoor of a shuffled index set
        std::vector<int> idx(static_cast<size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(idx[static_cast<size_t>(i)],
                      idx[rng.uniform_int(static_cast<std::uint64_t>(i + 1))]);

        Vec2 area_center;
        double r_max;
        if (p.small_cell) {
            area_center = c.pos;
            r_max = 40.0;  // small-cell service radius
        } else {
            area_center = sector_area_center(c.pos, c.boresight_deg, p.isd_m);
            r_max = p.isd_m / std::sqrt(3.0);  // covers the sector hex
        }

        for (int k = 0; k < n; ++k) {
            Ue u;
            u.id = uid++;
            u.drop_cell = c.id;
            u.indoor = false;
            for (int j = 0; j < n_indoor; ++j)
                if (idx[static_cast<size_t>(j)] == k) u.indoor = true;
            do {
                u.pos = uniform_in_annulus(area_center, 0.0, r_max, rng);
            } while (dist_m(u.pos, c.pos) < p.min_ue_bs_dist_m);
            out.ues.push_back(u);
        }
    }

    Vec2 sum{0.0, 0.0};
    for (const Cell& c : out.cells) {
        sum.x += c.pos.x;
        sum.y += c.pos.y;
    }
    out.centroid = {sum.x / static_cast<double>(out.cells.size()),
                    sum.y / static_cast<double>(out.cells.size())};
    return out;
}

std::vector<RadarView> radar_geometry(const NetworkLayout& layout,
                                      double distance_km,
                                      double radar_height_m) {
    Vec2 radar{layout.centroid.x + distance_km * 1000.0, layout.centroid.y};
    double to_centroid = bearing_deg(radar, layout.centroid);
    std::vector<RadarView> out;
    out.reserve(layout.cells.size());
    for (const Cell& c : layout.cells) {
        RadarView v;
        double d_m = dist_m(radar, c.pos);
        v.range_km = d_m / 1000.0;
        v.azimuth_from_radar_deg = wrap_deg(bearing_deg(radar, c.pos) - to_centroid);
        v.elevation_deg = rad2deg(std::atan2(c.height_m - radar_height_m, d_m));
        out.push_back(v);
    }
    return out;
}

double illuminated_arc_width_km(double distance_km, double footprint_angle_rad) {
    return distance_km * footprint_angle_rad;
}

std::string layout_csv(const NetworkLayout& layout) {
    std::ostringstream os;
    os << "cell_id,x_m,y_m,height_m,boresight_deg,max_gain_dBi\n";
    for (const Cell& c : layout.cells)
        os << c.id << ',' << fmt_double(c.pos.x) << ',' << fmt_double(c.pos.y)
           << ',' << fmt_double(c.height_m) << ',' << fmt_double(c.boresight_deg)
           << ',' << fmt_double(c.max_gain_dBi) << '\n';
    return os.str();
}

}  // namespace coexsim
