#include "scalar/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace scalar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAngles = 1440;
constexpr double kPanel = 400.0;

std::string f2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

Vec dir(double th) {
    Vec u(2);
    u << std::cos(th), std::sin(th);
    return u;
}

struct Panel {
    double x0, y0, R;
    std::string id;

    std::string sx(const Vec& p) const { return f2(x0 + kPanel / 2 + p[0] * kPanel / (2 * R)); }
    std::string sy(const Vec& p) const { return f2(y0 + kPanel / 2 - p[1] * kPanel / (2 * R)); }
    std::string pt(const Vec& p) const { return sx(p) + "," + sy(p); }
};

void points_attr(std::ostringstream& os, const Panel& P, const std::vector<Vec>& pts) {
    os << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << P.pt(pts[i]);
    os << "\"";
}

// Filled sectors of the directions in C, drawn as fans out to 3R.
void draw_cone(std::ostringstream& os, const Panel& P, const PolyCone& C, const char* fill, const char* label) {
    os << "  <g id=\"" << P.id << "-" << label << "\" fill=\"" << fill << "\" stroke=\"none\">\n";
    if (C.is_zero()) {
        os << "  </g>\n";
        return;
    }
    std::vector<bool> in(kAngles);
    int first_out = -1;
    for (int k = 0; k < kAngles; ++k) {
        in[k] = C.min_slack(dir(2 * kPi * k / kAngles)) >= -1e-12;
        if (!in[k] && first_out < 0) first_out = k;
    }
    auto sector = [&](double a, double b) {
        std::vector<Vec> pts{Vec::Zero(2)};
        const int steps = std::max(2, static_cast<int>((b - a) / (2 * kPi) * 128));
        for (int s = 0; s <= steps; ++s) pts.push_back(3 * P.R * dir(a + (b - a) * s / steps));
        os << "    <polygon";
        points_attr(os, P, pts);
        os << "/>\n";
    };
    if (first_out < 0) {
        sector(0, kPi);
        sector(kPi, 2 * kPi);
    } else {
        // Walk once around the circle starting at a direction outside C.
        int start = -1;
        for (int s = 1; s <= kAngles; ++s) {
            const int k = (first_out + s) % kAngles;
            if (in[k] && start < 0) start = first_out + s;
            if (!in[k] && start >= 0) {
                const int end = first_out + s - 1;
                // A single in-cone sample is a ray.
                const double a = 2 * kPi * start / kAngles, b = 2 * kPi * end / kAngles;
                if (end == start) {
                    os << "    <polyline fill=\"none\" stroke=\"" << fill << "\" stroke-width=\"3\"";
                    points_attr(os, P, {Vec::Zero(2), 3 * P.R * dir(a)});
                    os << "/>\n";
                } else {
                    sector(a, b);
                }
                start = -1;
            }
        }
    }
    os << "  </g>\n";
}

void draw_polytope(std::ostringstream& os, const Panel& P, const Polytope& Q, const char* color, const char* label) {
    // Vertices in angular order around the centroid.
    std::vector<Vec> v = Q.vertices();
    Vec c = Vec::Zero(2);
    for (const auto& p : v) c += p;
    c /= static_cast<double>(v.size());
    std::sort(v.begin(), v.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });
    os << "  <g id=\"" << P.id << "-" << label << "\">\n";
    if (v.size() == 1) {
        os << "    <circle cx=\"" << P.sx(v[0]) << "\" cy=\"" << P.sy(v[0]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    } else {
        os << "    <polygon fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"";
        points_attr(os, P, v);
        os << "/>\n";
    }
    os << "  </g>\n";
}

void draw_axes(std::ostringstream& os, const Panel& P) {
    Vec a(2), b(2);
    a << -P.R, 0;
    b << P.R, 0;
    os << "  <polyline fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"";
    points_attr(os, P, {a, b});
    os << "/>\n";
    a << 0, -P.R;
    b << 0, P.R;
    os << "  <polyline fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"";
    points_attr(os, P, {a, b});
    os << "/>\n";
}

void draw_level(std::ostringstream& os, const Panel& P, const std::vector<double>& psi, double c, const char* color,
                const char* dash) {
    std::vector<std::vector<Vec>> runs(1);
    for (int k = 0; k <= kAngles; ++k) {
        const double v = psi[k % kAngles];
        const double rho = v * c > 1e-12 ? c / v : std::numeric_limits<double>::infinity();
        if (rho <= 6 * P.R) {
            runs.back().push_back(rho * dir(2 * kPi * k / kAngles));
        } else if (!runs.back().empty()) {
            runs.emplace_back();
        }
    }
    for (const auto& run : runs) {
        if (run.size() < 2) continue;
        os << "    <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash;
        points_attr(os, P, run);
        os << "/>\n";
    }
}

void draw_zero_level(std::ostringstream& os, const Panel& P, const std::function<double(const Vec&)>& f,
                     const std::vector<double>& psi) {
    auto ray = [&](double th) {
        os << "    <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
        points_attr(os, P, {Vec::Zero(2), 6 * P.R * dir(th)});
        os << "/>\n";
    };
    for (int k = 0; k < kAngles; ++k) {
        const double a = psi[k], b = psi[(k + 1) % kAngles];
        const double ta = 2 * kPi * k / kAngles;
        if (std::abs(a) <= 1e-12) {
            ray(ta);
        } else if (std::abs(b) > 1e-12 && (a < 0) != (b < 0)) {
            double lo = ta, hi = ta + 2 * kPi / kAngles;
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((f(dir(mid)) < 0) == (a < 0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            ray(0.5 * (lo + hi));
        }
    }
}

void frame(std::ostringstream& os, const Panel& P, const std::string& caption) {
    os << "  <clipPath id=\"" << P.id << "-clip\"><rect x=\"" << f2(P.x0) << "\" y=\"" << f2(P.y0) << "\" width=\""
       << f2(kPanel) << "\" height=\"" << f2(kPanel) << "\"/></clipPath>\n";
    os << "  <rect x=\"" << f2(P.x0) << "\" y=\"" << f2(P.y0) << "\" width=\"" << f2(kPanel) << "\" height=\""
       << f2(kPanel) << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << f2(P.x0 + 4) << "\" y=\"" << f2(P.y0 - 6) << "\" font-size=\"13\">" << escape(caption)
       << "</text>\n";
}

}  // namespace

std::string render_svg(const PlotScene& scene) {
    if (scene.K.dim() != 2) throw DimensionMismatch("plots need dim = 2");
    for (const auto* P : {&scene.G, &scene.H, &scene.B}) {
        if (*P && (*P)->dim() != 2) throw DimensionMismatch("plots need dim = 2");
    }

    double rd = 0.0;
    for (const auto* P : {&scene.G, &scene.H, &scene.B}) {
        if (*P) rd = std::max(rd, (*P)->max_vertex_norm());
    }
    if (scene.p_star) rd = std::max(rd, scene.p_star->norm());
    rd = rd > 0 ? 1.15 * rd : 1.0;

    // Primal radius from the median distance of the unit level sets.
    std::vector<double> psi(kAngles, 0.0), reach;
    if (scene.psi) {
        for (int k = 0; k < kAngles; ++k) {
            psi[k] = scene.psi(dir(2 * kPi * k / kAngles));
            if (std::abs(psi[k]) > 1e-12) reach.push_back(1.0 / std::abs(psi[k]));
        }
    }
    double rp = 1.0;
    if (!reach.empty()) {
        std::nth_element(reach.begin(), reach.begin() + reach.size() / 2, reach.end());
        rp = 1.8 * reach[reach.size() / 2];
    }

    const Panel dual{20, 50, rd, "dual"};
    const Panel primal{460, 50, rp, "primal"};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"880\" height=\"540\" "
          "viewBox=\"0 0 880 540\">\n";
    os << "  <title>" << escape(scene.title) << "</title>\n";
    os << "  <text x=\"20\" y=\"22\" font-size=\"15\">" << escape(scene.title) << "</text>\n";

    frame(os, dual, "dual space, radius " + f2(rd));
    os << "  <g clip-path=\"url(#dual-clip)\">\n";
    draw_cone(os, dual, dual_cone(scene.K), "#dddddd", "Kdual");
    draw_axes(os, dual);
    if (scene.G) draw_polytope(os, dual, *scene.G, "#1f5fbf", "G");
    if (scene.H) draw_polytope(os, dual, *scene.H, "#c0392b", "H");
    if (scene.B) draw_polytope(os, dual, *scene.B, "#1e8449", "B");
    if (scene.p_star) {
        const Vec& p = *scene.p_star;
        os << "  <circle cx=\"" << dual.sx(p) << "\" cy=\"" << dual.sy(p) << "\" r=\"3.5\" fill=\"black\"/>\n";
        os << "  <text x=\"" << dual.sx(p) << "\" y=\"" << dual.sy(p)
           << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">p*</text>\n";
    }
    os << "  </g>\n";

    frame(os, primal, "primal space, radius " + f2(rp));
    os << "  <g clip-path=\"url(#primal-clip)\">\n";
    draw_cone(os, primal, scene.K.negated(), "#dddddd", "minusK");
    draw_axes(os, primal);
    if (scene.psi) {
        os << "  <g id=\"primal-levels\">\n";
        draw_level(os, primal, psi, -1.0, "#7d3c98", " stroke-dasharray=\"5,3\"");
        draw_zero_level(os, primal, scene.psi, psi);
        draw_level(os, primal, psi, 1.0, "#d35400", "");
        os << "  </g>\n";
    }
    os << "  </g>\n";

    const char* legend[][2] = {{"#dddddd", "K* (left), -K (right)"}, {"#1f5fbf", "G"}, {"#c0392b", "H"},
                               {"#1e8449", "B"}, {"#7d3c98", "Psi = -1"}, {"black", "Psi = 0"},
                               {"#d35400", "Psi = 1"}};
    double x = 20;
    for (const auto& [color, text] : legend) {
        os << "  <rect x=\"" << f2(x) << "\" y=\"470\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        os << "  <text x=\"" << f2(x + 16) << "\" y=\"480\" font-size=\"12\">" << escape(text) << "</text>\n";
        x += 26 + 7.0 * std::string(text).size();
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace scalar
