#include "cocone/dd.hpp"

#include <algorithm>
#include <cstdint>

#include "cocone/errors.hpp"

namespace cocone {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits bits_and(const Bits& a, const Bits& b) {
    Bits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] & b[i];
    return c;
}

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

struct Ray {
    IVec dir;              // primitive
    std::vector<Int> val;  // <row_i, dir> for every input row
    Bits zero;             // bit i set iff val[i] == 0
};

Ray make_ray(IVec dir, const std::vector<IVec>& rows, std::size_t words) {
    Ray r;
    r.dir = primitive(std::move(dir));
    r.val.resize(rows.size());
    r.zero.assign(words, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        r.val[i] = dot(rows[i], r.dir);
        if (r.val[i] == 0) r.zero[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    return r;
}

} // namespace

DDOutcome extreme_rays(const std::vector<IVec>& rows_in, int dim) {
    DDOutcome out;

    std::vector<IVec> rows;
    rows.reserve(rows_in.size());
    for (const IVec& r : rows_in)
        if (!is_zero(r)) rows.push_back(primitive(r));

    if (auto line = kernel_vector(rows, dim)) {
        out.lineality = std::move(*line);
        return out;
    }

    // Reorder so that dim independent rows come first; the cone they cut out
    // is simplicial, which seeds the incremental phase with a pointed cone.
    std::vector<int> basis = basis_rows(rows, dim);
    std::vector<bool> in_basis(rows.size(), false);
    for (int i : basis) in_basis[i] = true;
    std::vector<IVec> ordered;
    ordered.reserve(rows.size());
    for (int i : basis) ordered.push_back(rows[i]);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!in_basis[i]) ordered.push_back(rows[i]);
    rows = std::move(ordered);

    const std::size_t m = rows.size();
    const std::size_t words = (m + 63) / 64;

    // Rays of the simplicial seed cone: signed adjugate columns of the basis.
    std::vector<IVec> b(dim);
    for (int i = 0; i < dim; ++i) b[i] = rows[i];
    Int det = determinant(b);
    std::vector<IVec> adj = adjugate(b);
    int sgn = det > 0 ? 1 : -1;

    std::vector<Ray> rays;
    for (int j = 0; j < dim; ++j) {
        IVec col(dim);
        for (int i = 0; i < dim; ++i) col[i] = sgn * adj[i][j];
        rays.push_back(make_ray(std::move(col), rows, words));
    }

    Bits processed(words, 0);
    for (int i = 0; i < dim; ++i) processed[i / 64] |= std::uint64_t(1) << (i % 64);

    for (std::size_t k = dim; k < m; ++k) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (rays[i].val[k] > 0) pos.push_back(i);
            else if (rays[i].val[k] < 0) neg.push_back(i);
        }
        processed[k / 64] |= std::uint64_t(1) << (k % 64);
        if (neg.empty()) continue;

        std::vector<Ray> created;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = bits_and(bits_and(rays[p].zero, rays[q].zero), processed);
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size(); ++t) {
                    if (t == p || t == q) continue;
                    if (bits_subset(common, rays[t].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                // positive combination vanishing on row k
                IVec w = sub(scale(rays[p].val[k], rays[q].dir),
                             scale(rays[q].val[k], rays[p].dir));
                created.push_back(make_ray(std::move(w), rows, words));
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i].val[k] >= 0) next.push_back(std::move(rays[i]));
        for (Ray& r : created) next.push_back(std::move(r));
        rays = std::move(next);
    }

    out.result.rays.reserve(rays.size());
    for (Ray& r : rays) out.result.rays.push_back(std::move(r.dir));
    std::sort(out.result.rays.begin(), out.result.rays.end());
    out.result.rays.erase(std::unique(out.result.rays.begin(), out.result.rays.end()),
                          out.result.rays.end());
    return out;
}

} // namespace cocone
