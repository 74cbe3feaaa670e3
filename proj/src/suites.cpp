#include "scalar/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace scalar::suites {

namespace {

constexpr double kPi = std::numbers::pi;

double unif(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vec gaussian(int dim, Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = nd(rng);
    return v;
}

double max_dot(const std::vector<Vec>& pts, const Vec& y) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : pts) best = std::max(best, p.dot(y));
    return best;
}

// Psi = sigma_G - sigma_H by direct vertex maxima.
double qd_value(const Polytope& G, const Polytope& H, const Vec& y) {
    return max_dot(G.vertices(), y) - max_dot(H.vertices(), y);
}

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

struct GwInstance {
    PolyCone K;
    Vec r;
};

// The cone family shared by the translation and GW = DS criteria.
std::vector<GwInstance> gw_family(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<GwInstance> out;
    for (int i = 0; i < 20; ++i) {
        PolyCone K = random_cone(i < 10 ? 2 : 3, rng);
        Vec r = interior_ray(K, rng);
        out.push_back({std::move(K), std::move(r)});
    }
    return out;
}

Criterion make(int id, const char* name, double bound) {
    Criterion c;
    c.id = id;
    c.name = name;
    c.bound = bound;
    return c;
}

}  // namespace

Vec random_unit(int dim, Rng& rng) {
    for (;;) {
        Vec v = gaussian(dim, rng);
        const double n = v.norm();
        if (n > 1e-9) return v / n;
    }
}

PolyCone random_cone(int dim, Rng& rng) {
    for (;;) {
        const Vec c = random_unit(dim, rng);
        const int k = dim == 2 ? 2 : dim + pick(rng, 0, 2);
        std::vector<Vec> rays;
        while (static_cast<int>(rays.size()) < k) {
            Vec r = c + 0.9 * random_unit(dim, rng);
            if (r.norm() < 1e-6) continue;
            r.normalize();
            if (r.dot(c) >= 0.25) rays.push_back(r);
        }
        PolyCone K = PolyCone::from_rays(dim, rays);
        if (!K.solid() || !K.pointed() || K.min_slack(c) < 0.05) continue;
        return K;
    }
}

Vec interior_ray(const PolyCone& K, Rng& rng) {
    for (;;) {
        Vec r = Vec::Zero(K.dim());
        for (const auto& ray : K.rays()) r += unif(rng, 0.5, 1.5) * ray;
        r *= unif(rng, 0.5, 2.0) / r.norm();
        if (K.min_slack(r) >= 0.02 * r.norm()) return r;
    }
}

Polytope random_polytope(int dim, int n_points, const Vec& center, double radius, Rng& rng) {
    std::vector<Vec> pts;
    for (int i = 0; i < n_points; ++i) pts.push_back(center + radius * unif(rng, 0.3, 1.0) * random_unit(dim, rng));
    return hull(pts);
}

Polytope random_generator(const PolyCone& K, Rng& rng) {
    const PolyCone Kd = dual_cone(K);
    std::vector<Vec> pts;
    for (const auto& rho : Kd.rays()) pts.push_back(unif(rng, 0.5, 1.5) * rho);
    const int extra = pick(rng, 0, 3);
    for (int i = 0; i < extra; ++i) {
        Vec p = Vec::Zero(K.dim());
        for (const auto& rho : Kd.rays()) p += unif(rng, 0.0, 1.0) * rho;
        if (p.norm() < 1e-6) continue;
        pts.push_back(unif(rng, 0.5, 1.5) * p / p.norm());
    }
    return hull(pts);
}

PairInstance random_valid_pair(Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int kind = pick(rng, 0, 3);
        try {
            if (kind == 0) {
                const double a = unif(rng, 1.0, 3.0);
                const double b = a + unif(rng, 0.0, 1.0);
                const double d = unif(rng, 0.1, a - 0.1);
                const double c = d - (b - a) - unif(rng, 0.05, 1.0);
                auto [G, H] = build_nonconvex_pair_1d(a, b, c, d);
                return {G, H, PolyCone::orthant(1), "1d"};
            }
            if (kind == 3) {
                const PolyCone K = random_cone(2, rng);
                const Construction2d con = build_nonconvex_pair_2d(K, interior_ray(K, rng));
                return {con.G, con.H, K, "construct2d"};
            }
            const int dim = kind == 1 ? 2 : 3;
            const PolyCone K = random_cone(dim, rng);
            const Polytope D = random_generator(K, rng);
            const Polytope P = random_polytope(dim, pick(rng, 1, 4), 0.3 * random_unit(dim, rng),
                                               unif(rng, 0.05, 0.4), rng);
            const Polytope G = minkowski_sum(D, P);
            if (validate_pair(G, P, K).valid()) return {G, P, K, dim == 2 ? "ds2" : "ds3"};
        } catch (const ConstructionFailed&) {
        }
    }
    throw std::runtime_error("random_valid_pair: no valid pair in 1000 attempts");
}

Polytope g2_fixture() {
    std::vector<Vec> pts = arc_polygon(720).vertices();
    Vec mid(2), v(2);
    mid << std::sqrt(0.5), std::sqrt(0.5);
    v << 0.25, 0.25;
    pts.push_back(mid);
    pts.push_back(v);
    return hull(pts);
}

Polytope g2_fixture_bump() {
    std::vector<Vec> pts = arc_polygon(720).vertices();
    Vec mid(2), v(2);
    mid << std::sqrt(0.5), std::sqrt(0.5);
    v << 0.75, 0.75;
    pts.push_back(mid);
    pts.push_back(v);
    return hull(pts);
}

MpOracle::MpOracle(const Polytope& G, const Polytope& H) : g_(G.vertices()), h_(H.vertices()) {
    const int n = G.dim();
    if (n == 1) {
        for (double s : {-1e3, 1e3}) z_.push_back(Vec::Constant(1, s));
        for (int i = 0; i <= 20000; ++i) z_.push_back(Vec::Constant(1, -100.0 + 0.01 * i));
    } else if (n == 2) {
        const int sweep = 7200;
        for (int i = 0; i < sweep; ++i) {
            const double th = 2.0 * kPi * i / sweep;
            Vec z(2);
            z << std::cos(th), std::sin(th);
            z_.push_back(1e3 * z);
        }
        for (int i = 0; i <= 40; ++i) {
            for (int j = 0; j <= 40; ++j) {
                Vec z(2);
                z << -2.0 + 0.1 * i, -2.0 + 0.1 * j;
                z_.push_back(z);
            }
        }
    } else {
        throw DimensionMismatch("MpOracle supports dim 1 and 2");
    }
    for (const auto& c : fan_refinement(G, H).cells) z_.push_back(1e3 * c.representative);
    psi_z_.reserve(z_.size());
    for (const auto& z : z_) psi_z_.push_back(psi(z));
}

double MpOracle::psi(const Vec& y) const { return max_dot(g_, y) - max_dot(h_, y); }

double MpOracle::operator()(const Vec& v) const {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z_.size(); ++i) best = std::max(best, psi(z_[i] + v) - psi_z_[i]);
    return best;
}

Criterion translation_identity(const Options& opt) {
    Criterion c = make(1, "translation identity", 1e-7);
    Rng rng(opt.seed ^ 0x1001);
    const int n = opt.samples.value_or(1000);
    int evals = 0;
    for (const auto& [K, r] : gw_family(opt.seed)) {
        const GW f{K, r};
        for (int s = 0; s < n; ++s) {
            const Vec y = 3.0 * gaussian(K.dim(), rng);
            const double t = unif(rng, -10.0, 10.0);
            c.worst = std::max(c.worst, std::abs(eval(f, y + t * r) - eval(f, y) - t));
            ++evals;
        }
    }
    c.pass = c.worst <= c.bound;
    c.detail = std::to_string(evals) + " samples over 20 cones";
    return c;
}

Criterion gw_equals_ds(const Options& opt) {
    Criterion c = make(2, "GW equals DS over the slice", 1e-7);
    Rng rng(opt.seed ^ 0x1002);
    const int n = opt.samples.value_or(1000);
    for (const auto& [K, r] : gw_family(opt.seed)) {
        const GW f{K, r};
        const Polytope B = gw_subdiff0(K, r);
        for (int s = 0; s < n; ++s) {
            const Vec y = 3.0 * gaussian(K.dim(), rng);
            c.worst = std::max(c.worst, std::abs(eval(f, y) - max_dot(B.vertices(), y)));
        }
    }
    c.pass = c.worst <= c.bound;
    c.detail = std::to_string(20 * n) + " samples over 20 cones";
    return c;
}

Criterion hu_subdifferential(const Options& opt) {
    Criterion c = make(3, "HU subdifferential", 1e-6);
    Rng rng(opt.seed ^ 0x1003);
    const int n = opt.samples.value_or(1000);
    std::vector<PolyCone> cones{PolyCone::orthant(2), random_cone(3, rng), random_cone(3, rng)};
    for (const auto& K : cones) {
        const HU f{K, std::nullopt};
        for (int s = 0; s < n; ++s) {
            const Vec y = 2.0 * gaussian(K.dim(), rng);
            c.worst = std::max(c.worst, std::abs(eval(f, y) - hu_sigma(K, y)));
        }
    }
    const HU orth{PolyCone::orthant(2), std::nullopt};
    const double spot_bound = 1e-9;
    double spot = 0.0;
    const std::pair<Vec, double> spots[] = {{Vec::Ones(2), std::sqrt(2.0)},
                                            {-Vec::Ones(2), -1.0},
                                            {(Vec(2) << 1.0, -2.0).finished(), 1.0}};
    for (const auto& [y, want] : spots) spot = std::max(spot, std::abs(eval(orth, y) - want));
    c.pass = c.worst <= c.bound && spot <= spot_bound;
    c.detail = std::to_string(3 * n) + " samples on 3 cones; spot-value error " + fmt("%.3g", spot) +
               " (bound 1e-09)";
    return c;
}

Criterion norm_construction(const Options& opt) {
    Criterion c = make(4, "norm construction", 1e-7);
    Rng rng(opt.seed ^ 0x1004);
    const int n = opt.samples.value_or(1000);
    std::vector<GwInstance> inst{{PolyCone::orthant(2), Vec::Ones(2)}};
    for (int dim : {2, 3}) {
        PolyCone K = random_cone(dim, rng);
        Vec r = interior_ray(K, rng);
        inst.push_back({std::move(K), std::move(r)});
    }
    const bool box_ok = same_set(gw_norm_ball(inst[0].K, inst[0].r), Polytope::box(-Vec::Ones(2), Vec::Ones(2)));
    for (const auto& [K, r] : inst) {
        const GW gw{K, r};
        const HU hu{K, gw_norm_ball(K, r)};
        for (int s = 0; s < n; ++s) {
            const Vec y = 2.0 * gaussian(K.dim(), rng);
            c.worst = std::max(c.worst, std::abs(eval(hu, y) - eval(gw, y)));
        }
    }
    c.pass = box_ok && c.worst <= c.bound;
    c.detail = std::to_string(3 * n) + " samples on 3 cones; orthant ball is [-1,1]^2: " + (box_ok ? "yes" : "no");
    return c;
}

Criterion level_set_dual(const Options& opt) {
    Criterion c = make(5, "dual cone of sublinear level sets", 0.0);
    Rng rng(opt.seed ^ 0x1005);
    const int n = opt.samples.value_or(1000);
    const double margin = 1e-6;
    int disagreements = 0, skipped = 0, inside = 0, no_slater = 0;
    for (int i = 0; i < 50; ++i) {
        const int dim = i % 2 == 0 ? 2 : 3;
        const Vec center = unif(rng, 1.5, 3.0) * random_unit(dim, rng);
        const Polytope G = random_polytope(dim, pick(rng, 3, 6), center, unif(rng, 0.3, 1.2), rng);
        if (eval(DS{G}, -center) >= -tol().eps_strict) ++no_slater;

        // {sigma_G <= 0} = {y : <-g, y> >= 0 for every vertex g}, and its dual.
        std::vector<Vec> neg;
        for (const auto& g : G.vertices()) neg.push_back(-g);
        const PolyCone level = PolyCone::from_halfspaces(dim, neg);
        const PolyCone level_dual = dual_cone(level);

        for (int s = 0; s < n; ++s) {
            const Vec u = s % 2 == 0 ? random_unit(dim, rng)
                                     : Vec((-center.normalized() + 0.7 * random_unit(dim, rng)).normalized());
            const double slack = level_dual.min_slack(u);
            if (std::abs(slack) < margin) {
                ++skipped;
                continue;
            }
            const bool in_direct = slack > 0.0;
            const bool in_cone = (u - project_cone_nnls(u, neg)).norm() <= 0.5 * margin;
            inside += in_direct;
            if (in_direct != in_cone) ++disagreements;
        }
    }
    c.worst = disagreements + no_slater;
    c.pass = disagreements == 0 && no_slater == 0;
    c.detail = std::to_string(disagreements) + " disagreements, " + std::to_string(inside) + " inside, " +
               std::to_string(skipped) + " within margin, 50 functionals";
    return c;
}

Criterion bishop_phelps(const Options& opt) {
    Criterion c = make(6, "Bishop-Phelps dual cone", 0.0);
    Rng rng(opt.seed ^ 0x1006);
    const int n = opt.samples.value_or(500);
    const double margin = 1e-5;
    int disagreements = 0, members = 0;
    for (int dim : {2, 3}) {
        for (double len : {1.5, 2.0, 4.0}) {
            const Vec a_hat = random_unit(dim, rng);
            const BPCone bp{len * a_hat};
            // C(a) on the unit sphere is the cap of half-angle acos(1/|a|) around a_hat.
            const double cap = std::acos(1.0 / len);
            Mat basis = Mat::Identity(dim, dim);
            basis.col(0) = a_hat;
            Eigen::HouseholderQR<Mat> qr(basis);
            const Mat Q = qr.householderQ();
            auto on_cap = [&](double phi, double az) {
                Vec y = std::cos(phi) * a_hat;
                if (dim == 2) {
                    y += std::sin(phi) * (az < kPi ? 1.0 : -1.0) * Q.col(1);
                } else {
                    y += std::sin(phi) * (std::cos(az) * Q.col(1) + std::sin(az) * Q.col(2));
                }
                return y;
            };
            std::vector<Vec> samples;
            const int rim = dim == 2 ? 2 : 4000;
            for (int k = 0; k < rim; ++k) samples.push_back(on_cap(cap, 2.0 * kPi * (k + 0.5) / rim));
            for (int k = 0; k < 1000; ++k) {
                samples.push_back(on_cap(cap * std::sqrt(unif(rng, 0.0, 1.0)), unif(rng, 0.0, 2.0 * kPi)));
            }
            for (int s = 0; s < n; ++s) {
                const Vec ys = s % 2 == 0 ? random_unit(dim, rng)
                                          : Vec((a_hat + unif(rng, 0.0, 2.0) * random_unit(dim, rng)).normalized());
                double m = max_dot(samples, -ys);
                m = -m;
                if (bp.contains(-ys)) m = std::min(m, -1.0);
                const bool closed_form = bp_dual_member(bp, ys);
                members += closed_form;
                if ((closed_form && m < -margin) || (!closed_form && m > margin)) ++disagreements;
            }
        }
    }
    c.worst = disagreements;
    c.pass = disagreements == 0;
    c.detail = std::to_string(disagreements) + " disagreements over " + std::to_string(6 * n) + " directions, " +
               std::to_string(members) + " members";
    return c;
}

Criterion one_d_pair(const Options&) {
    Criterion c = make(7, "1-D nonconvex pair", 1e-9);
    const Polytope G = Polytope::interval(2.0, 2.5), H = Polytope::interval(0.0, 1.0);
    const PolyCone K = PolyCone::orthant(1);
    const bool valid = validate_pair(G, H, K).valid();
    const bool ds = is_ds(G, H).yes;
    const Vec one = Vec::Ones(1);
    const QD f{G, H};
    const double mid = eval(f, Vec::Zero(1)) - 0.5 * (eval(f, one) + eval(f, -one));
    c.worst = std::abs(mid - 0.25);

    const Polytope mp = mp_subdiff0(G, H).hull;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& v : mp.vertices()) {
        lo = std::min(lo, v[0]);
        hi = std::max(hi, v[0]);
    }
    const bool mp_exact = mp.size() == 2 && lo == 1.5 && hi == 2.0;
    const MpOracle oracle(G, H);
    const bool mp_oracle = std::abs(oracle(one) - 2.0) <= 1e-9 && std::abs(oracle(-one) + 1.5) <= 1e-9;
    const Sandwich sw = dual_sandwich_check(G, H, K);
    const bool sandwich = sw.dh_empty && sw.lower_holds && sw.upper_holds && sw.upper_equal;

    c.pass = valid && !ds && c.worst <= c.bound && mp_exact && mp_oracle && sandwich;
    c.detail = std::string("valid ") + (valid ? "yes" : "no") + ", DS " + (ds ? "yes" : "no") + ", MP [" +
               fmt("%.12g", lo) + ", " + fmt("%.12g", hi) + "], oracle " + (mp_oracle ? "agrees" : "differs") +
               ", sandwich " + (sandwich ? "holds" : "fails");
    return c;
}

Criterion two_d_constructor(const Options&) {
    Criterion c = make(8, "2-D nonconvex constructor", 1e-6);
    std::vector<GwInstance> inst{{PolyCone::orthant(2), Vec::Ones(2)}};
    {
        Vec a(2), b(2), r(2);
        a << 1.0, 0.0;
        b << 1.0, 2.0;
        r << 1.0, 0.5;
        inst.push_back({PolyCone::from_rays(2, {a, b}), r});
    }
    c.pass = true;
    c.worst = std::numeric_limits<double>::infinity();
    for (const auto& [K, r] : inst) {
        try {
            const Construction2d con = build_nonconvex_pair_2d(K, r);
            const bool valid = validate_pair(con.G, con.H, K).valid();
            const bool ds = is_ds(con.G, con.H).yes;
            const Vec& y1 = con.violation.y1;
            const Vec& y2 = con.violation.y2;
            const double m = qd_value(con.G, con.H, y1 + y2) - qd_value(con.G, con.H, y1) -
                             qd_value(con.G, con.H, y2);
            c.worst = std::min(c.worst, m);
            c.pass = c.pass && valid && !ds && m >= c.bound;
            if (!c.detail.empty()) c.detail += "; ";
            c.detail += "margin " + fmt("%.6g", m) + (valid ? "" : " invalid") + (ds ? " DS" : "");
        } catch (const ConstructionFailed& e) {
            c.pass = false;
            c.worst = 0.0;
            if (!c.detail.empty()) c.detail += "; ";
            c.detail += std::string("failed at ") + e.stage();
        }
    }
    return c;
}

Criterion qd_axioms(const Options& opt) {
    Criterion c = make(9, "QD axioms on valid pairs", 1e-9);
    Rng rng(opt.seed ^ 0x1009);
    const int n = opt.samples.value_or(5000);
    std::vector<PairInstance> pairs;
    for (int i = 0; i < 50; ++i) pairs.push_back(random_valid_pair(rng));
    pairs.push_back({Polytope::interval(2.0, 2.5), Polytope::interval(0.0, 1.0), PolyCone::orthant(1), "fixture"});
    {
        const Construction2d con = build_nonconvex_pair_2d(PolyCone::orthant(2), Vec::Ones(2));
        pairs.push_back({con.G, con.H, PolyCone::orthant(2), "fixture"});
    }
    int violations = 0, probes = 0, slater = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const AxiomReport rep = axiom_report(QD{p.G, p.H}, p.K, n, opt.seed + i, c.bound);
        for (const AxiomCheck* a : {&rep.k_monotone, &rep.strictly_monotone, &rep.level_set_eq,
                                    &rep.strict_level_set_eq}) {
            violations += a->violations;
            probes += a->probes;
            c.worst = std::max(c.worst, a->violations > 0 ? a->worst : 0.0);
        }
        slater += rep.slater.verdict == Verdict::Pass;
    }
    c.pass = violations == 0 && slater == static_cast<int>(pairs.size());
    c.detail = std::to_string(violations) + " violations in " + std::to_string(probes) + " probes over " +
               std::to_string(pairs.size()) + " pairs; Slater witness for " + std::to_string(slater);
    return c;
}

Criterion relation_equivalence(const Options& opt) {
    Criterion c = make(10, "set-relation equivalence", 0.0);
    Rng rng(opt.seed ^ 0x100a);
    int mismatches = 0, holds = 0, fails = 0, other = 0;
    for (int i = 0; i < 100; ++i) {
        const PolyCone K = random_cone(2, rng);
        Polytope G, H;
        if (i % 2 == 0) {
            G = random_polytope(2, pick(rng, 1, 6), random_unit(2, rng), unif(rng, 0.2, 1.0), rng);
            H = random_polytope(2, pick(rng, 1, 6), random_unit(2, rng), unif(rng, 0.2, 1.0), rng);
        } else {
            H = random_polytope(2, pick(rng, 1, 5), 0.3 * random_unit(2, rng), unif(rng, 0.05, 0.5), rng);
            G = minkowski_sum(random_generator(K, rng), H);
            if (i % 4 == 3) H = H.translated(0.2 * random_unit(2, rng));
        }
        const PolyCone D = dual_cone(K);
        const FaceVerdict lo = y_face_relation_all(G, H, D, {RelTag::Lower, Strictness::Weak}).verdict;
        const FaceVerdict up = y_face_relation_all(G, H, D, {RelTag::Upper, Strictness::Weak}).verdict;
        const FaceVerdict st = y_face_relation_all(G, H, D, {RelTag::Set, Strictness::Weak}).verdict;
        if (lo != up || up != st) ++mismatches;
        if (st == FaceVerdict::Holds) {
            ++holds;
        } else if (st == FaceVerdict::Fails) {
            ++fails;
        } else {
            ++other;
        }
    }
    c.worst = mismatches;
    c.pass = mismatches == 0;
    c.detail = std::to_string(mismatches) + " mismatches; set verdict holds " + std::to_string(holds) +
               ", fails " + std::to_string(fails) + ", other " + std::to_string(other);
    return c;
}

Criterion mp_identity(const Options& opt) {
    Criterion c = make(11, "Michel-Penot identity", 1e-5);
    Rng rng(opt.seed ^ 0x100b);
    const int n = opt.samples.value_or(100);
    int dh_nonempty = 0, dh_outside = 0;
    for (int i = 0; i < 50; ++i) {
        const int dim = i < 10 ? 1 : 2;
        const double rg = unif(rng, 0.5, 1.5);
        const double rh = i % 2 == 0 ? unif(rng, 0.1, 0.4) : unif(rng, 0.3, 1.5);
        const Polytope G = random_polytope(dim, pick(rng, 2, 6), unif(rng, 0.0, 2.0) * random_unit(dim, rng), rg, rng);
        const Polytope H = random_polytope(dim, pick(rng, 1, 6), unif(rng, 0.0, 2.0) * random_unit(dim, rng), rh, rng);
        const Polytope mp = mp_subdiff0(G, H).hull;
        const MpOracle oracle(G, H);
        for (int s = 0; s < n; ++s) {
            const Vec v = unif(rng, 0.2, 2.0) * random_unit(dim, rng);
            c.worst = std::max(c.worst, std::abs(max_dot(mp.vertices(), v) - oracle(v)));
        }
        if (const MaybePolytope dh = dh_subdiff(G, H)) {
            ++dh_nonempty;
            for (const auto& x : dh->vertices()) {
                if (!mp.contains(x)) {
                    ++dh_outside;
                    break;
                }
            }
        }
    }
    c.pass = c.worst <= c.bound && dh_outside == 0;
    c.detail = std::to_string(50 * n) + " directions over 50 pairs; DH nonempty for " + std::to_string(dh_nonempty) +
               ", not inside MP for " + std::to_string(dh_outside);
    return c;
}

Criterion arc_obstruction(const Options&) {
    Criterion c = make(12, "arc generator obstruction", 1e-9);
    const Polytope arc = arc_polygon(720);
    const GwClass cls = classify_gw(arc, PolyCone::orthant(2));
    const Obstruction on_g2 = hu_obstruction_scaling(g2_fixture());
    const Obstruction on_arc = hu_obstruction_scaling(arc);
    c.worst = on_g2.found ? std::abs(on_g2.lambda - 2.0 * std::sqrt(2.0)) : std::numeric_limits<double>::infinity();
    c.pass = !cls.yes && on_g2.found && c.worst <= c.bound && !on_arc.found;
    c.detail = "arc hull: " + (cls.yes ? std::string("accepted") : "rejected (" + cls.reason + ")") +
               "; G2 pair " + (on_g2.found ? "found, lambda " + fmt("%.12g", on_g2.lambda) : std::string("missing")) +
               "; arc pair " + (on_arc.found ? "found" : "none");
    return c;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"inclusions", "sandwich", "axioms", "constructions"};
    return names;
}

std::vector<Criterion> run_suite(const std::string& name, const Options& opt) {
    if (name == "inclusions") {
        return {translation_identity(opt), gw_equals_ds(opt), hu_subdifferential(opt), norm_construction(opt)};
    }
    if (name == "sandwich") return {level_set_dual(opt), bishop_phelps(opt), mp_identity(opt)};
    if (name == "axioms") return {qd_axioms(opt), relation_equivalence(opt)};
    if (name == "constructions") return {one_d_pair(opt), two_d_constructor(opt), arc_obstruction(opt)};
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<Criterion> run_all(const Options& opt) {
    std::vector<Criterion> out;
    for (const auto& name : suite_names()) {
        for (auto& c : run_suite(name, opt)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    return out;
}

}  // namespace scalar::suites
