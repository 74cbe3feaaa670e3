#include "scalar/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace scalar {

namespace {

constexpr double kTight = 1e-9;

double scale_of(const std::vector<Vec>& pts) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, p.lpNorm<Eigen::Infinity>());
    return std::max(1.0, s);
}

std::vector<Vec> dedupe(const std::vector<Vec>& pts) {
    std::vector<Vec> out;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : out) {
            if ((p - q).lpNorm<Eigen::Infinity>() <= 1e-12 * (1.0 + p.lpNorm<Eigen::Infinity>())) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

Halfspace make_halfspace(const Vec& normal, double offset) {
    const double nrm = normal.norm();
    return {normal / nrm, offset / nrm};
}

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain; returns indices in counter-clockwise order.
std::vector<int> hull2d(const std::vector<Eigen::Vector2d>& q) {
    const int k = static_cast<int>(q.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return q[a].x() < q[b].x() || (q[a].x() == q[b].x() && q[a].y() < q[b].y());
    });
    auto redundant = [&](int o, int a, int b) {
        const double len = (q[b] - q[o]).norm();
        return cross2(q[o], q[a], q[b]) <= tol().eps_feas * std::max(len, 1e-300);
    };
    std::vector<int> h(2 * k);
    int m = 0;
    for (int i = 0; i < k; ++i) {
        while (m >= 2 && redundant(h[m - 2], h[m - 1], idx[i])) --m;
        h[m++] = idx[i];
    }
    for (int i = k - 2, lo = m + 1; i >= 0; --i) {
        while (m >= lo && redundant(h[m - 2], h[m - 1], idx[i])) --m;
        h[m++] = idx[i];
    }
    h.resize(std::max(1, m - 1));
    return h;
}

// p_i is extreme iff some direction c separates it strictly from the other points.
bool is_extreme_lp(const std::vector<Vec>& q, int i) {
    const int d = static_cast<int>(q[0].size());
    LpProblem lp;
    lp.sense = Sense::Max;
    lp.objective = Vec::Zero(d + 1);
    lp.objective[d] = 1.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        Vec row(d + 1);
        row.head(d) = q[j] - q[i];
        row[d] = 1.0;
        lp.add_le(row, 0.0);
    }
    for (int c = 0; c < d; ++c) {
        Vec e = Vec::Zero(d + 1);
        e[c] = 1.0;
        lp.add_le(e, 1.0);
        lp.add_le(-e, 1.0);
    }
    Vec s = Vec::Zero(d + 1);
    s[d] = 1.0;
    lp.add_le(s, 1.0);
    LpResult r = solve_lp(lp);
    return r.optimal() && r.value > tol().eps_feas;
}

bool next_combination(std::vector<int>& sel, int m) {
    const int k = static_cast<int>(sel.size());
    int pos = k - 1;
    while (pos >= 0 && sel[pos] == m - k + pos) --pos;
    if (pos < 0) return false;
    ++sel[pos];
    for (int i = pos + 1; i < k; ++i) sel[i] = sel[i - 1] + 1;
    return true;
}

bool satisfies(const std::vector<Halfspace>& hs, const Vec& x) {
    for (const auto& h : hs) {
        if (h.normal.dot(x) > h.offset + tol().eps_feas * (1.0 + std::abs(h.offset) + x.norm())) return false;
    }
    return true;
}

}  // namespace

Polytope::Polytope(int dim, std::vector<Vec> vertices, std::vector<Halfspace> halfspaces, int aff_dim)
    : dim_(dim), vertices_(std::move(vertices)), halfspaces_(std::move(halfspaces)), aff_dim_(aff_dim) {}

Polytope Polytope::point(const Vec& p) { return hull({p}); }

Polytope Polytope::interval(double lo, double hi) {
    Vec a(1), b(1);
    a << lo;
    b << hi;
    return hull({a, b});
}

Polytope Polytope::box(const Vec& lo, const Vec& hi) {
    const int n = static_cast<int>(lo.size());
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        pts.push_back(p);
    }
    return hull(pts);
}

double Polytope::violation(const Vec& x) const {
    if (x.size() != dim_) throw DimensionMismatch("polytope membership");
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& h : halfspaces_) v = std::max(v, h.normal.dot(x) - h.offset);
    return v;
}

bool Polytope::contains(const Vec& x) const {
    return violation(x) <= tol().eps_feas * (1.0 + x.norm());
}

double Polytope::support_value(const Vec& y) const {
    if (y.size() != dim_) throw DimensionMismatch("support");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) best = std::max(best, v.dot(y));
    return best;
}

double Polytope::max_vertex_norm() const {
    double m = 0.0;
    for (const auto& v : vertices_) m = std::max(m, v.norm());
    return m;
}

double Polytope::min_vertex_norm() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) m = std::min(m, v.norm());
    return m;
}

Polytope Polytope::scaled(double s) const {
    std::vector<Vec> pts;
    for (const auto& v : vertices_) pts.push_back(s * v);
    return hull(pts);
}

Polytope Polytope::translated(const Vec& t) const {
    std::vector<Vec> pts;
    for (const auto& v : vertices_) pts.push_back(v + t);
    return hull(pts);
}

Polytope hull(const std::vector<Vec>& points) {
    if (points.empty()) throw EmptyInput("hull of no points");
    const int n = static_cast<int>(points[0].size());
    for (const auto& p : points) {
        if (p.size() != n) throw DimensionMismatch("hull");
    }
    const std::vector<Vec> pts = dedupe(points);
    const int k = static_cast<int>(pts.size());
    const Vec& p0 = pts[0];
    std::vector<Halfspace> hs;

    if (k == 1) {
        for (int i = 0; i < n; ++i) {
            hs.push_back({Vec::Unit(n, i), p0[i]});
            hs.push_back({-Vec::Unit(n, i), -p0[i]});
        }
        return Polytope(n, pts, hs, 0);
    }

    Mat D(n, k - 1);
    for (int j = 1; j < k; ++j) D.col(j - 1) = pts[j] - p0;
    Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double thr = tol().eps_feas * scale_of(pts);
    int d = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > thr) ++d;
    }
    const Mat U = svd.matrixU();
    const Mat Ud = U.leftCols(d);
    auto add_equalities = [&]() {
        for (int i = d; i < n; ++i) {
            const Vec w = U.col(i);
            hs.push_back({w, w.dot(p0)});
            hs.push_back({-w, -w.dot(p0)});
        }
    };
    if (d == 0) {
        add_equalities();
        return Polytope(n, {p0}, hs, 0);
    }

    std::vector<Vec> verts;
    if (d == 1) {
        const Vec u = Ud.col(0);
        int imin = 0, imax = 0;
        for (int j = 1; j < k; ++j) {
            if (u.dot(pts[j]) < u.dot(pts[imin])) imin = j;
            if (u.dot(pts[j]) > u.dot(pts[imax])) imax = j;
        }
        verts = {pts[imin], pts[imax]};
        hs.push_back({u, u.dot(pts[imax])});
        hs.push_back({-u, -u.dot(pts[imin])});
    } else if (d == 2) {
        std::vector<Eigen::Vector2d> q(k);
        for (int j = 0; j < k; ++j) q[j] = (Ud.transpose() * (pts[j] - p0));
        const std::vector<int> order = hull2d(q);
        const int m = static_cast<int>(order.size());
        for (int i = 0; i < m; ++i) verts.push_back(pts[order[i]]);
        for (int i = 0; i < m; ++i) {
            const Eigen::Vector2d e = q[order[(i + 1) % m]] - q[order[i]];
            const Eigen::Vector2d out(e.y(), -e.x());
            const Vec normal = Ud * out;
            hs.push_back(make_halfspace(normal, normal.dot(pts[order[i]])));
        }
    } else {
        std::vector<Vec> q(k);
        for (int j = 0; j < k; ++j) q[j] = Ud.transpose() * (pts[j] - p0);
        std::vector<Vec> qe;
        for (int j = 0; j < k; ++j) {
            if (is_extreme_lp(q, j)) {
                verts.push_back(pts[j]);
                qe.push_back(q[j]);
            }
        }
        std::vector<Vec> lifted;
        for (const auto& v : qe) {
            Vec l(d + 1);
            l.head(d) = v;
            l[d] = 1.0;
            lifted.push_back(l);
        }
        for (const auto& h : cone_facets(d + 1, lifted)) {
            const Vec hq = h.head(d);
            if (hq.norm() < 1e-12) continue;
            const Vec normal = Ud * (-hq);
            hs.push_back(make_halfspace(normal, h[d] + normal.dot(p0)));
        }
    }
    add_equalities();
    return Polytope(n, verts, hs, d);
}

MaybePolytope from_halfspaces(int dim, const std::vector<Halfspace>& raw) {
    std::vector<Halfspace> hs;
    for (const auto& h : raw) {
        if (h.normal.size() != dim) throw DimensionMismatch("halfspace dimension");
        const double nrm = h.normal.norm();
        if (nrm < 1e-14) {
            if (h.offset < -tol().eps_feas) return std::nullopt;
            continue;
        }
        hs.push_back({h.normal / nrm, h.offset / nrm});
    }
    LpProblem lp;
    lp.objective = Vec::Zero(dim);
    for (const auto& h : hs) lp.add_le(h.normal, h.offset);
    const LpResult feas = solve_lp(lp);
    if (feas.status == LpStatus::Infeasible) return std::nullopt;

    std::vector<Vec> pts;
    const int m = static_cast<int>(hs.size());
    if (dim == 1) {
        double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
        for (const auto& h : hs) {
            if (h.normal[0] > 0) hi = std::min(hi, h.offset / h.normal[0]);
            else lo = std::max(lo, h.offset / h.normal[0]);
        }
        if (!std::isfinite(lo) || !std::isfinite(hi)) throw Unbounded("halfspace system is unbounded");
        if (hi < lo) {
            const double mid = 0.5 * (lo + hi);
            lo = hi = mid;
        }
        Vec a(1), b(1);
        a << lo;
        b << hi;
        pts = {a, b};
    } else if (dim == 2) {
        // Clip each boundary line against the remaining halfspaces.
        for (int i = 0; i < m; ++i) {
            const Vec& a = hs[i].normal;
            const Vec x0 = a * hs[i].offset;
            Vec dir(2);
            dir << -a[1], a[0];
            double tlo = -std::numeric_limits<double>::infinity(), thi = std::numeric_limits<double>::infinity();
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                if (j == i) continue;
                const double ad = hs[j].normal.dot(dir);
                const double rest = hs[j].offset - hs[j].normal.dot(x0);
                if (std::abs(ad) < 1e-12) {
                    if (rest < -tol().eps_feas * (1.0 + std::abs(hs[j].offset))) ok = false;
                } else if (ad > 0) {
                    thi = std::min(thi, rest / ad);
                } else {
                    tlo = std::max(tlo, rest / ad);
                }
            }
            if (!ok) continue;
            if (tlo > thi + tol().eps_feas * (1.0 + std::abs(thi))) continue;
            if (!std::isfinite(tlo) || !std::isfinite(thi)) throw Unbounded("halfspace system is unbounded");
            if (tlo > thi) tlo = thi = 0.5 * (tlo + thi);
            pts.push_back(x0 + tlo * dir);
            pts.push_back(x0 + thi * dir);
        }
    } else {
        std::vector<int> sel(dim);
        for (int i = 0; i < dim; ++i) sel[i] = i;
        if (m >= dim) {
            do {
                Mat A(dim, dim);
                Vec b(dim);
                for (int i = 0; i < dim; ++i) {
                    A.row(i) = hs[sel[i]].normal.transpose();
                    b[i] = hs[sel[i]].offset;
                }
                Eigen::FullPivLU<Mat> lu(A);
                if (lu.rank() < dim) continue;
                const Vec x = lu.solve(b);
                if (satisfies(hs, x)) pts.push_back(x);
            } while (next_combination(sel, m));
        }
    }
    if (pts.empty()) {
        if (feas.optimal()) {
            // A feasible system without a basic solution has a recession direction.
            throw Unbounded("halfspace system has no vertex");
        }
        return std::nullopt;
    }
    return hull(pts);
}

std::vector<int> argmax_vertices(const Polytope& P, const Vec& y) {
    const double best = P.support_value(y);
    const double slack = tol().eps_cmp * std::max(1.0, y.norm());
    std::vector<int> idx;
    for (std::size_t i = 0; i < P.vertices().size(); ++i) {
        if (P.vertices()[i].dot(y) >= best - slack) idx.push_back(static_cast<int>(i));
    }
    return idx;
}

Support support(const Polytope& P, const Vec& y) {
    Support s;
    s.value = P.support_value(y);
    s.face_indices = argmax_vertices(P, y);
    std::vector<Vec> pts;
    for (int i : s.face_indices) pts.push_back(P.vertices()[i]);
    s.face = hull(pts);
    return s;
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.dim() != Q.dim()) throw DimensionMismatch("minkowski_sum");
    std::vector<Vec> pts;
    for (const auto& p : P.vertices()) {
        for (const auto& q : Q.vertices()) pts.push_back(p + q);
    }
    return hull(pts);
}

MaybePolytope pontryagin_diff(const Polytope& G, const Polytope& H) {
    if (G.dim() != H.dim()) throw DimensionMismatch("pontryagin_diff");
    std::vector<Halfspace> hs;
    for (const auto& h : G.halfspaces()) hs.push_back({h.normal, h.offset - H.support_value(h.normal)});
    return from_halfspaces(G.dim(), hs);
}

bool contains_polytope(const Polytope& outer, const Polytope& inner) {
    if (outer.dim() != inner.dim()) throw DimensionMismatch("contains_polytope");
    for (const auto& v : inner.vertices()) {
        if (!outer.contains(v)) return false;
    }
    return true;
}

bool same_set(const Polytope& P, const Polytope& Q) {
    return contains_polytope(P, Q) && contains_polytope(Q, P);
}

namespace {

int rank_of(const std::vector<Vec>& vs, int dim) {
    if (vs.empty()) return 0;
    Mat M(dim, static_cast<int>(vs.size()));
    for (int j = 0; j < M.cols(); ++j) M.col(j) = vs[j];
    Eigen::FullPivLU<Mat> lu(M);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

Fan sampled_fan(const Polytope& G, const Polytope& H, int n_sample, std::uint64_t seed) {
    const int n = G.dim();
    std::vector<Vec> reps;
    for (const Polytope* P : {&G, &H}) {
        const auto& V = P->vertices();
        for (std::size_t i = 0; i < V.size(); ++i) {
            for (std::size_t j = 0; j < V.size(); ++j) {
                if (i == j) continue;
                const Vec d = V[i] - V[j];
                if (d.norm() > 1e-12) reps.push_back(d.normalized());
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < n_sample; ++s) {
        Vec u(n);
        for (int i = 0; i < n; ++i) u[i] = gauss(rng);
        if (u.norm() > 1e-12) reps.push_back(u.normalized());
    }
    Fan fan;
    fan.sampled = true;
    for (const auto& r : reps) {
        FanCell c;
        c.representative = r;
        c.g_face = argmax_vertices(G, r);
        c.h_face = argmax_vertices(H, r);
        c.cell_dim = c.g_face.size() == 1 && c.h_face.size() == 1 ? n : n - 1;
        fan.cells.push_back(std::move(c));
    }
    return fan;
}

}  // namespace

Fan fan_refinement(const Polytope& G, const Polytope& H, int n_sample, std::uint64_t seed) {
    if (G.dim() != H.dim()) throw DimensionMismatch("fan_refinement");
    const int n = G.dim();
    if (n > 3) return sampled_fan(G, H, n_sample, seed);

    // Cells of the common refinement are the relative interiors of the normal cones of G+H.
    const Polytope P = minkowski_sum(G, H);
    const auto& V = P.vertices();
    const int nv = static_cast<int>(V.size());
    std::vector<Vec> facet_normals, implicit;
    std::vector<std::vector<int>> facet_sets;
    for (const auto& h : P.halfspaces()) {
        std::vector<int> tight;
        for (int i = 0; i < nv; ++i) {
            if (std::abs(h.normal.dot(V[i]) - h.offset) <= kTight * (1.0 + std::abs(h.offset))) tight.push_back(i);
        }
        if (static_cast<int>(tight.size()) == nv) {
            implicit.push_back(h.normal);
        } else {
            facet_normals.push_back(h.normal);
            facet_sets.push_back(tight);
        }
    }

    std::set<std::vector<int>> faces;
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    faces.insert(all);
    std::vector<std::vector<int>> frontier(facet_sets.begin(), facet_sets.end());
    for (const auto& f : facet_sets) faces.insert(f);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier) {
            for (const auto& g : facet_sets) {
                std::vector<int> meet;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
                if (!meet.empty() && faces.insert(meet).second) next.push_back(meet);
            }
        }
        frontier = std::move(next);
    }

    Fan fan;
    for (const auto& F : faces) {
        std::vector<Vec> gens;
        Vec rep = Vec::Zero(n);
        for (std::size_t f = 0; f < facet_sets.size(); ++f) {
            if (std::includes(facet_sets[f].begin(), facet_sets[f].end(), F.begin(), F.end())) {
                gens.push_back(facet_normals[f]);
                rep += facet_normals[f];
            }
        }
        for (const auto& w : implicit) gens.push_back(w);
        FanCell c;
        c.cell_dim = rank_of(gens, n);
        if (c.cell_dim == 0) continue;
        if (rep.norm() < 1e-12) rep = implicit.front();
        c.representative = rep.normalized();
        c.generators = gens;
        c.g_face = argmax_vertices(G, c.representative);
        c.h_face = argmax_vertices(H, c.representative);
        fan.cells.push_back(std::move(c));
    }
    std::stable_sort(fan.cells.begin(), fan.cells.end(), [](const FanCell& a, const FanCell& b) {
        if (a.cell_dim != b.cell_dim) return a.cell_dim > b.cell_dim;
        return std::lexicographical_compare(a.representative.data(), a.representative.data() + a.representative.size(),
                                            b.representative.data(), b.representative.data() + b.representative.size());
    });
    return fan;
}

std::vector<Halfspace> GenPolyhedron::halfspaces() const {
    const int n = base.dim();
    if (recession.dim() != n) throw DimensionMismatch("GenPolyhedron");
    std::vector<Vec> lifted;
    for (const auto& v : base.vertices()) {
        Vec l(n + 1);
        l.head(n) = v;
        l[n] = 1.0;
        lifted.push_back(l);
    }
    for (const auto& r : recession.rays()) {
        Vec l(n + 1);
        l.head(n) = r;
        l[n] = 0.0;
        lifted.push_back(l);
    }
    std::vector<Halfspace> hs;
    for (const auto& h : cone_facets(n + 1, lifted)) {
        const Vec hx = h.head(n);
        if (hx.norm() < 1e-12) continue;
        hs.push_back(make_halfspace(-hx, h[n]));
    }
    return hs;
}

bool GenPolyhedron::contains(const Vec& x) const { return satisfies(halfspaces(), x); }

}  // namespace scalar
