#ifndef COCONE_LINALG_HPP
#define COCONE_LINALG_HPP

#include <optional>
#include <vector>

#include "cocone/rational.hpp"

namespace cocone {

using Point = std::vector<Rational>;

Int dot(const IVec& a, const IVec& b);
Rational dot(const IVec& a, const Point& x);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const Int& c, const IVec& a);

Point add(const Point& a, const Point& b);
Point scale(const Rational& c, const Point& a);

bool is_zero(const IVec& a);

// Divides by the gcd of the entries (gcd taken positive; direction kept).
IVec primitive(IVec a);

// Clears denominators: smallest positive multiple of x with integer entries.
IVec integer_direction(const Point& x);

int rank(std::vector<IVec> rows);

// A nonzero integer vector orthogonal to every row, if the rows do not span.
std::optional<IVec> kernel_vector(const std::vector<IVec>& rows, int dim);

// Indices of a row subset forming a basis of the row space.
std::vector<int> basis_rows(const std::vector<IVec>& rows, int dim);

Rational determinant(std::vector<Point> m);
Int determinant(const std::vector<IVec>& m);

// adj(m) * m = det(m) * identity.
std::vector<IVec> adjugate(const std::vector<IVec>& m);

// Unique solution of m x = rhs for square nonsingular m.
std::optional<Point> solve(std::vector<Point> m, Point rhs);

} // namespace cocone

#endif
