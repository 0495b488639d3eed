#include "irredpoly/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "irredpoly/lp.hpp"

namespace irredpoly {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// p in conv(pts)? Nonnegative weights summing to one hitting p exactly.
bool in_hull_of(const LatticePoint& p, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(pts.size());
    std::vector<lp::Constraint> cons;
    cons.reserve(n + 1);
    for (int k = 0; k < n; ++k) {
        lp::Constraint c;
        c.rel = lp::Rel::Eq;
        c.rhs = Rational(static_cast<long>(p[k]));
        c.coeffs.reserve(m);
        for (int i = 0; i < m; ++i) c.coeffs.push_back(Rational(static_cast<long>(pts[i][k])));
        cons.push_back(std::move(c));
    }
    lp::Constraint sum;
    sum.rel = lp::Rel::Eq;
    sum.rhs = 1;
    sum.coeffs.assign(m, Rational(1));
    cons.push_back(std::move(sum));
    return lp::find_feasible(m, cons, true).has_value();
}

std::vector<Rational> to_rational(const LatticePoint& p) {
    std::vector<Rational> r;
    r.reserve(p.size());
    for (long long v : p) r.emplace_back(static_cast<long>(v));
    return r;
}

}  // namespace

Hyperplane::Hyperplane(std::vector<long long> normal, long long offset)
    : normal_(std::move(normal)), offset_(offset) {
    long long g = 0;
    bool nonzero = false;
    for (long long v : normal_) {
        g = gcd_ll(g, v);
        nonzero |= v != 0;
    }
    if (!nonzero) throw std::invalid_argument("hyperplane with zero normal");
    g = gcd_ll(g, offset_);
    if (g > 1) {
        for (auto& v : normal_) v /= g;
        offset_ /= g;
    }
    for (long long v : normal_) {
        if (v == 0) continue;
        if (v < 0) {
            for (auto& w : normal_) w = -w;
            offset_ = -offset_;
        }
        break;
    }
}

long long Hyperplane::eval(const LatticePoint& x) const {
    if (x.size() != normal_.size()) throw std::invalid_argument("dimension mismatch");
    long long acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += normal_[i] * x[i];
    return acc - offset_;
}

IntegralPolytope IntegralPolytope::from_vertices(int dim, std::vector<LatticePoint> vertices) {
    IntegralPolytope p;
    p.dim_ = dim;
    p.vertices_ = std::move(vertices);
    std::sort(p.vertices_.begin(), p.vertices_.end());
    p.vertices_.erase(std::unique(p.vertices_.begin(), p.vertices_.end()), p.vertices_.end());
    return p;
}

bool IntegralPolytope::contains(const LatticePoint& p) const {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    return in_hull_of(p, vertices_);
}

IntegralPolytope convex_hull(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::invalid_argument("convex hull of an empty set");
    const int dim = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("mixed dimensions in hull input");

    std::vector<LatticePoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<LatticePoint> extreme;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticePoint> others;
        others.reserve(pts.size() - 1);
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_hull_of(pts[i], others)) extreme.push_back(pts[i]);
    }
    return IntegralPolytope::from_vertices(dim, std::move(extreme));
}

IntegralPolytope newton_polytope(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Newton polytope of the zero polynomial");
    std::vector<LatticePoint> pts;
    for (const auto& alpha : p.support()) pts.push_back(exponent_to_point(alpha));
    return convex_hull(pts);
}

IntegralPolytope minkowski_sum(const IntegralPolytope& a, const IntegralPolytope& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertex_count() * b.vertex_count());
    for (const auto& u : a.vertices()) {
        for (const auto& v : b.vertices()) {
            LatticePoint s(a.dim());
            for (int k = 0; k < a.dim(); ++k) s[k] = u[k] + v[k];
            sums.push_back(std::move(s));
        }
    }
    return convex_hull(sums);
}

bool is_supporting(const IntegralPolytope& pt, const Hyperplane& h) {
    if (pt.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
    bool any_on = false, above = false, below = false;
    for (const auto& v : pt.vertices()) {
        long long e = h.eval(v);
        if (e == 0) any_on = true;
        else if (e > 0) above = true;
        else below = true;
    }
    return any_on && !(above && below);
}

FaceWitness face(const IntegralPolytope& pt, const Hyperplane& h) {
    if (!is_supporting(pt, h)) throw std::invalid_argument("hyperplane does not support polytope");
    std::vector<LatticePoint> on;
    bool above = false;
    for (const auto& v : pt.vertices()) {
        long long e = h.eval(v);
        if (e == 0) on.push_back(v);
        else if (e > 0) above = true;
    }
    // Vertices of the parent on h are exactly the face's vertices.
    return {IntegralPolytope::from_vertices(pt.dim(), std::move(on)), h,
            above ? Side::Plus : Side::Minus};
}

std::optional<FaceWitness> is_face_of(const IntegralPolytope& sub,
                                      const IntegralPolytope& parent) {
    if (sub.dim() != parent.dim()) throw std::invalid_argument("dimension mismatch");
    const int n = parent.dim();
    std::vector<LatticePoint> rest;
    for (const auto& v : parent.vertices()) {
        if (!std::binary_search(sub.vertices().begin(), sub.vertices().end(), v))
            rest.push_back(v);
    }
    if (rest.size() + sub.vertex_count() != parent.vertex_count())
        throw std::invalid_argument("sub vertices are not vertices of parent");

    if (rest.empty()) {
        // The polytope is a face of itself iff it is not full-dimensional:
        // we need a genuine hyperplane containing every vertex.
        const auto& vs = parent.vertices();
        std::vector<std::vector<Rational>> dirs;
        for (size_t i = 1; i < vs.size(); ++i) {
            std::vector<Rational> d(n);
            for (int k = 0; k < n; ++k) d[k] = Rational(static_cast<long>(vs[i][k] - vs[0][k]));
            dirs.push_back(std::move(d));
        }
        auto basis = lp::nullspace(dirs, n);
        if (basis.empty()) return std::nullopt;
        Rational gamma = 0;
        for (int k = 0; k < n; ++k) gamma += basis[0][k] * Rational(static_cast<long>(vs[0][k]));
        auto [coords, off] = scale_to_integers(basis[0], gamma);
        Hyperplane h(std::move(coords), off);
        return FaceWitness{parent, h, Side::Minus};
    }

    // Find (alpha, gamma) with alpha.s = gamma on sub and alpha.r <= gamma - 1
    // elsewhere; any feasible solution scales to an exact strict separator.
    std::vector<lp::Constraint> cons;
    for (const auto& s : sub.vertices()) {
        lp::Constraint c;
        c.coeffs = to_rational(s);
        c.coeffs.push_back(-1);  // gamma column
        c.rel = lp::Rel::Eq;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    for (const auto& r : rest) {
        lp::Constraint c;
        c.coeffs = to_rational(r);
        c.coeffs.push_back(-1);
        c.rel = lp::Rel::Le;
        c.rhs = -1;
        cons.push_back(std::move(c));
    }
    auto sol = lp::find_feasible(n + 1, cons, false);
    if (!sol) return std::nullopt;

    std::vector<Rational> alpha(sol->begin(), sol->begin() + n);
    auto [coords, off] = scale_to_integers(alpha, (*sol)[n]);
    Hyperplane h(std::move(coords), off);

    // Orientation may have flipped during normalization; recompute the side.
    bool above = false;
    for (const auto& v : parent.vertices())
        if (h.eval(v) > 0) above = true;
    return FaceWitness{sub, h, above ? Side::Plus : Side::Minus};
}

std::vector<std::pair<LatticePoint, LatticePoint>> edges(const IntegralPolytope& pt) {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    const auto& vs = pt.vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        for (size_t j = i + 1; j < vs.size(); ++j) {
            auto seg = IntegralPolytope::from_vertices(pt.dim(), {vs[i], vs[j]});
            if (is_face_of(seg, pt)) out.emplace_back(vs[i], vs[j]);
        }
    }
    return out;
}

std::optional<std::vector<LatticePoint>> lattice_points(const IntegralPolytope& pt,
                                                        size_t max_count) {
    const int n = pt.dim();
    LatticePoint lo(n), hi(n);
    for (int k = 0; k < n; ++k) {
        lo[k] = hi[k] = pt.vertices()[0][k];
        for (const auto& v : pt.vertices()) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
    unsigned long long box = 1;
    for (int k = 0; k < n; ++k) {
        box *= static_cast<unsigned long long>(hi[k] - lo[k] + 1);
        if (box > 1u << 20) return std::nullopt;  // absurdly large scan
    }

    std::vector<LatticePoint> found;
    LatticePoint cur = lo;
    for (;;) {
        if (pt.contains(cur)) {
            found.push_back(cur);
            if (found.size() > max_count) return std::nullopt;
        }
        int k = n - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
    }
    std::sort(found.begin(), found.end());
    return found;
}

LatticePoint exponent_to_point(const ExponentVector& alpha) {
    LatticePoint p(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) p[i] = alpha[i];
    return p;
}

}  // namespace irredpoly
