#include "cocone/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cstddef>

namespace cocone {

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IVec& a, const Point& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    IVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IVec scale(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Point add(const Point& a, const Point& b) {
    Point c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Point scale(const Rational& c, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

IVec primitive(IVec a) {
    Int g = 0;
    for (const Int& v : a) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (Int& v : a) v /= g;
    return a;
}

IVec integer_direction(const Point& x) {
    Int l = 1;
    for (const Rational& q : x) l = boost::multiprecision::lcm(l, denominator(q));
    IVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = numerator(x[i]) * (l / denominator(x[i]));
    return out;
}

namespace {

// Fraction-free forward elimination; returns pivot column per eliminated row.
// `rows` is modified in place; `picked` lists the original indices of the
// rows used as pivots, in order.
void eliminate(std::vector<IVec> rows, int dim,
               std::vector<IVec>& reduced, std::vector<int>& picked,
               std::vector<int>& pivot_cols) {
    std::vector<int> order(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) order[i] = int(i);
    int col = 0;
    std::size_t next = 0;
    while (col < dim && next < rows.size()) {
        std::size_t p = next;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[next], rows[p]);
        std::swap(order[next], order[p]);
        for (std::size_t i = next + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Int a = rows[next][col], b = rows[i][col];
            for (int j = 0; j < dim; ++j) rows[i][j] = rows[i][j] * a - rows[next][j] * b;
            rows[i] = primitive(std::move(rows[i]));
        }
        reduced.push_back(rows[next]);
        picked.push_back(order[next]);
        pivot_cols.push_back(col);
        ++next;
        ++col;
    }
}

} // namespace

int rank(std::vector<IVec> rows) {
    if (rows.empty()) return 0;
    int dim = int(rows[0].size());
    std::vector<IVec> red;
    std::vector<int> picked, cols;
    eliminate(std::move(rows), dim, red, picked, cols);
    return int(red.size());
}

std::optional<IVec> kernel_vector(const std::vector<IVec>& rows, int dim) {
    std::vector<IVec> red;
    std::vector<int> picked, cols;
    eliminate(rows, dim, red, picked, cols);
    if (int(red.size()) == dim) return std::nullopt;
    // pick a free column and back-substitute
    std::vector<bool> is_pivot(dim, false);
    for (int c : cols) is_pivot[c] = true;
    int free_col = 0;
    while (free_col < dim && is_pivot[free_col]) ++free_col;
    std::vector<Rational> x(dim, Rational(0));
    x[free_col] = 1;
    for (int i = int(red.size()) - 1; i >= 0; --i) {
        Rational s = 0;
        for (int j = cols[i] + 1; j < dim; ++j) s += Rational(red[i][j]) * x[j];
        x[cols[i]] = -s / Rational(red[i][cols[i]]);
    }
    return primitive(integer_direction(x));
}

std::vector<int> basis_rows(const std::vector<IVec>& rows, int dim) {
    std::vector<IVec> red;
    std::vector<int> picked, cols;
    eliminate(rows, dim, red, picked, cols);
    return picked;
}

Rational determinant(std::vector<Point> m) {
    const int n = int(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[col][col];
            for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Int determinant(const std::vector<IVec>& m) {
    std::vector<Point> q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        q[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) q[i][j] = Rational(m[i][j]);
    }
    Rational d = determinant(std::move(q));
    return numerator(d) / denominator(d);
}

std::vector<IVec> adjugate(const std::vector<IVec>& m) {
    const int n = int(m.size());
    std::vector<IVec> adj(n, IVec(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<IVec> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == j) continue; // adj[i][j] = cofactor(j, i)
                IVec row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = (n == 1) ? Int(1) : determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[i][j] = cof;
        }
    }
    return adj;
}

std::optional<Point> solve(std::vector<Point> m, Point rhs) {
    const int n = int(m.size());
    for (int i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[col][col];
            for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    Point x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

} // namespace cocone
