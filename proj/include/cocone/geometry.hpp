#ifndef COCONE_GEOMETRY_HPP
#define COCONE_GEOMETRY_HPP

#include <vector>

#include "cocone/linalg.hpp"

namespace cocone {

// {x : <normal, x> >= offset}; normal is primitive (coprime entries).
struct Halfspace {
    IVec normal;
    Rational offset;

    auto operator<=>(const Halfspace&) const = default;
};

// Canonicalizes scaling: divides the normal by the gcd of its entries.
Halfspace make_halfspace(IVec normal, Rational offset);

bool satisfies(const Halfspace& h, const Point& x);

// True iff x satisfies every inequality.
bool contains(const std::vector<Halfspace>& halfspaces, const Point& x);

// Extreme points of a bounded nonempty intersection of halfspaces.
// Throws Unbounded when a recession direction exists, Empty when infeasible.
std::vector<Point> hrep_to_vrep(const std::vector<Halfspace>& halfspaces, int dimension);

// Minimal halfspace description of the convex hull of the points.
// Throws DegenerateHull when the hull is not full-dimensional.
std::vector<Halfspace> vrep_to_hrep(const std::vector<Point>& points);

// Minimal halfspace description of conv(points) + cone(ray directions).
// Used for convex regions; rays may be empty (plain hull).
std::vector<Halfspace> hull_with_rays(const std::vector<Point>& points,
                                      const std::vector<IVec>& rays);

// Bounded convex body carried in both descriptions, cross-validated on
// construction. Lower-dimensional (even empty) bodies are allowed; they
// have volume 0.
class Polytope {
  public:
    static Polytope from_halfspaces(std::vector<Halfspace> halfspaces, int dimension);
    static Polytope from_vertices(const std::vector<Point>& points);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    int dimension() const { return dimension_; }

  private:
    Polytope() = default;
    std::vector<Point> vertices_;
    std::vector<Halfspace> halfspaces_;
    int dimension_ = 0;
};

// Exact Euclidean volume by fan triangulation. Degenerate bodies give 0.
Rational volume(const Polytope& p);

// |det(v1-v0, ..., vn-v0)| / n!
Rational simplex_volume(const std::vector<Point>& simplex);

// Triangulation of the full-dimensional polytope with the given vertex set,
// as index tuples into `vertices`, fanned from vertices[apex].
std::vector<std::vector<int>> triangulate_fan(const std::vector<Point>& vertices,
                                              int dimension, int apex);

// All pairwise sums p+q, duplicates removed.
std::vector<Point> minkowski_sum_points(const std::vector<Point>& a,
                                        const std::vector<Point>& b);

} // namespace cocone

#endif
