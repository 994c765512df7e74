#include "cocone/geometry.hpp"

#include <algorithm>
#include <set>

#include "cocone/dd.hpp"
#include "cocone/errors.hpp"

namespace cocone {

Halfspace make_halfspace(IVec normal, Rational offset) {
    if (is_zero(normal)) throw Error("halfspace with zero normal");
    Int g = 0;
    for (const Int& v : normal) g = boost::multiprecision::gcd(g, v);
    if (g > 1) {
        for (Int& v : normal) v /= g;
        offset /= Rational(g);
    }
    return Halfspace{std::move(normal), std::move(offset)};
}

bool satisfies(const Halfspace& h, const Point& x) {
    return dot(h.normal, x) >= h.offset;
}

bool contains(const std::vector<Halfspace>& halfspaces, const Point& x) {
    for (const Halfspace& h : halfspaces) {
        if (h.normal.size() != x.size()) throw Error("dimension mismatch in contains");
        if (!satisfies(h, x)) return false;
    }
    return true;
}

namespace {

// Row (q*normal, -p) for offset p/q, primitive: the homogenization of
// <normal, x> >= offset over (x, t).
IVec lift_halfspace(const Halfspace& h) {
    IVec row(h.normal.size() + 1);
    Int den = denominator(h.offset);
    for (std::size_t i = 0; i < h.normal.size(); ++i) row[i] = h.normal[i] * den;
    row[h.normal.size()] = -numerator(h.offset);
    return primitive(std::move(row));
}

// Point p lifted to the primitive integer ray through (p, 1).
IVec lift_point(const Point& p) {
    Point lifted = p;
    lifted.push_back(Rational(1));
    return primitive(integer_direction(lifted));
}

std::vector<Halfspace> facets_from_dual_rays(const std::vector<IVec>& dual_rays, int n) {
    std::vector<Halfspace> out;
    for (const IVec& ray : dual_rays) {
        IVec normal(ray.begin(), ray.begin() + n);
        if (is_zero(normal)) continue; // the trivial t >= 0 facet
        out.push_back(make_halfspace(std::move(normal), Rational(-ray[n])));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Point> hrep_to_vrep(const std::vector<Halfspace>& halfspaces, int dimension) {
    std::vector<IVec> rows;
    rows.reserve(halfspaces.size() + 1);
    for (const Halfspace& h : halfspaces) {
        if (int(h.normal.size()) != dimension)
            throw Error("halfspace dimension mismatch");
        rows.push_back(lift_halfspace(h));
    }
    IVec t_row(dimension + 1, Int(0));
    t_row[dimension] = 1;
    rows.push_back(std::move(t_row));

    DDOutcome dd = extreme_rays(rows, dimension + 1);
    if (dd.lineality) {
        IVec dir(dd.lineality->begin(), dd.lineality->begin() + dimension);
        throw Unbounded("halfspace intersection contains a line through direction " +
                        primitive(dir)[0].str());
    }

    std::vector<Point> vertices;
    for (const IVec& ray : dd.result.rays) {
        const Int& t = ray[dimension];
        if (t == 0)
            throw Unbounded("halfspace intersection has a recession direction");
        Point v(dimension);
        for (int i = 0; i < dimension; ++i) v[i] = Rational(ray[i], t);
        vertices.push_back(std::move(v));
    }
    if (vertices.empty()) throw Empty("halfspace system is infeasible");
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

std::vector<Halfspace> vrep_to_hrep(const std::vector<Point>& points) {
    if (points.empty()) throw DegenerateHull("no points");
    const int n = int(points[0].size());
    std::vector<IVec> rows;
    rows.reserve(points.size());
    for (const Point& p : points) rows.push_back(lift_point(p));

    DDOutcome dd = extreme_rays(rows, n + 1);
    if (dd.lineality)
        throw DegenerateHull("points do not affinely span the ambient space");
    return facets_from_dual_rays(dd.result.rays, n);
}

std::vector<Halfspace> hull_with_rays(const std::vector<Point>& points,
                                      const std::vector<IVec>& rays) {
    if (points.empty()) throw Error("hull_with_rays: no points");
    const int n = int(points[0].size());
    std::vector<IVec> rows;
    rows.reserve(points.size() + rays.size());
    for (const Point& p : points) rows.push_back(lift_point(p));
    for (const IVec& r : rays) {
        IVec row = r;
        row.push_back(Int(0));
        rows.push_back(primitive(std::move(row)));
    }
    DDOutcome dd = extreme_rays(rows, n + 1);
    if (dd.lineality)
        throw DegenerateHull("hull_with_rays input is not full-dimensional");
    return facets_from_dual_rays(dd.result.rays, n);
}

Polytope Polytope::from_halfspaces(std::vector<Halfspace> halfspaces, int dimension) {
    Polytope p;
    p.dimension_ = dimension;
    p.vertices_ = hrep_to_vrep(halfspaces, dimension);
    // Keep the minimal description when the body is full-dimensional;
    // degenerate truncations keep the description they were built from.
    try {
        p.halfspaces_ = vrep_to_hrep(p.vertices_);
    } catch (const DegenerateHull&) {
        for (Halfspace& h : halfspaces) h = make_halfspace(std::move(h.normal), h.offset);
        std::sort(halfspaces.begin(), halfspaces.end());
        p.halfspaces_ = std::move(halfspaces);
    }
    for (const Point& v : p.vertices_)
        if (!contains(p.halfspaces_, v))
            throw Error("polytope descriptions disagree");
    return p;
}

Polytope Polytope::from_vertices(const std::vector<Point>& points) {
    Polytope p;
    if (points.empty()) throw DegenerateHull("no points");
    p.dimension_ = int(points[0].size());
    p.halfspaces_ = vrep_to_hrep(points);
    p.vertices_ = hrep_to_vrep(p.halfspaces_, p.dimension_);
    return p;
}

Rational simplex_volume(const std::vector<Point>& simplex) {
    const int n = int(simplex.size()) - 1;
    std::vector<Point> m(n);
    for (int i = 0; i < n; ++i) {
        m[i].resize(n);
        for (int j = 0; j < n; ++j) m[i][j] = simplex[i + 1][j] - simplex[0][j];
    }
    Rational d = determinant(std::move(m));
    if (d < 0) d = -d;
    Int f = factorial(n);
    return d / Rational(f);
}

namespace {

// Recursive fan triangulation of a full-dimensional polytope given by its
// extreme points. Returns (dim)-simplices as index tuples into `pts`.
std::vector<std::vector<int>> triangulate_rec(const std::vector<Point>& pts, int dim,
                                              int apex) {
    const int m = int(pts.size());
    if (m == dim + 1) {
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        return {all};
    }

    std::vector<Halfspace> facets = vrep_to_hrep(pts);
    std::vector<std::vector<int>> simplices;
    for (const Halfspace& f : facets) {
        Rational apex_val = dot(f.normal, pts[apex]);
        if (apex_val == f.offset) continue; // apex on this facet
        std::vector<int> facet_idx;
        for (int i = 0; i < m; ++i)
            if (dot(f.normal, pts[i]) == f.offset) facet_idx.push_back(i);

        // Project the facet into R^(dim-1) along a coordinate the facet
        // normal does not vanish on; this is a bijection on the facet.
        int drop = 0;
        while (f.normal[drop] == 0) ++drop;
        std::vector<Point> proj;
        proj.reserve(facet_idx.size());
        for (int i : facet_idx) {
            Point q;
            q.reserve(dim - 1);
            for (int j = 0; j < dim; ++j)
                if (j != drop) q.push_back(pts[i][j]);
            proj.push_back(std::move(q));
        }
        std::vector<std::vector<int>> sub =
            dim - 1 >= 1 ? triangulate_rec(proj, dim - 1, 0)
                         : std::vector<std::vector<int>>{{0}};
        for (const std::vector<int>& s : sub) {
            std::vector<int> simplex;
            simplex.reserve(dim + 1);
            simplex.push_back(apex);
            for (int i : s) simplex.push_back(facet_idx[i]);
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

} // namespace

std::vector<std::vector<int>> triangulate_fan(const std::vector<Point>& vertices,
                                              int dimension, int apex) {
    return triangulate_rec(vertices, dimension, apex);
}

Rational volume(const Polytope& p) {
    const int n = p.dimension();
    if (int(p.vertices().size()) < n + 1) return Rational(0);
    // degenerate bodies (not affinely spanning) have volume 0
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < p.vertices().size(); ++i) {
        Point d(n);
        for (int j = 0; j < n; ++j) d[j] = p.vertices()[i][j] - p.vertices()[0][j];
        diffs.push_back(integer_direction(d));
    }
    if (rank(diffs) < n) return Rational(0);

    Rational total = 0;
    for (const std::vector<int>& s : triangulate_fan(p.vertices(), n, 0)) {
        std::vector<Point> simplex;
        simplex.reserve(s.size());
        for (int i : s) simplex.push_back(p.vertices()[i]);
        total += simplex_volume(simplex);
    }
    return total;
}

std::vector<Point> minkowski_sum_points(const std::vector<Point>& a,
                                        const std::vector<Point>& b) {
    std::set<Point> sums;
    for (const Point& p : a) {
        for (const Point& q : b) {
            if (p.size() != q.size()) throw Error("dimension mismatch in minkowski sum");
            sums.insert(add(p, q));
        }
    }
    return {sums.begin(), sums.end()};
}

} // namespace cocone
