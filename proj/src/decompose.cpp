#include "zigzag/decompose.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace zigzag {

namespace {

// Shared AR quivers; construction is pure and the table is read-only after
// insertion.
const ARQuiver& ar_quiver_for(const QuiverAn& q) {
    static std::mutex guard;
    static std::map<std::pair<std::size_t, std::string>, ARQuiver> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_pair(q.n, q.orientation.to_string());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_ar_quiver(q)).first;
    return it->second;
}

}  // namespace

Barcode decompose(const Representation& m) {
    m.check_shapes();
    Barcode bc;
    if (m.is_zero()) return bc;
    const ARQuiver& g = ar_quiver_for(m.quiver);
    std::map<Interval, std::size_t> hom_cache;
    auto hom_to = [&](const Interval& iv) {
        auto it = hom_cache.find(iv);
        if (it != hom_cache.end()) return it->second;
        std::size_t d = hom_dim(m, Representation::interval(m.quiver, iv, m.p));
        hom_cache[iv] = d;
        return d;
    };
    for (const auto& x : g.vertices) {
        long long mult = (long long)hom_to(x);
        if (g.is_projective(x)) {
            std::size_t v = 0;
            for (std::size_t i = 1; i <= m.quiver.n; ++i)
                if (g.projectives[i - 1] == x) v = i;
            for (std::size_t pos = 1; pos < m.quiver.n; ++pos)
                if (m.quiver.source(pos) == v)
                    mult -= (long long)hom_to(g.projectives[m.quiver.target(pos) - 1]);
        } else {
            for (const auto& e : g.mesh_middle(x)) mult -= (long long)hom_to(e);
            mult += (long long)hom_to(g.tau.at(x));
        }
        if (mult < 0) throw std::logic_error("decompose: negative multiplicity");
        if (mult > 0) bc.add(x, int(mult));
    }
    if (bc.total_dim() != int(m.total_dim()))
        throw std::logic_error("decompose: total dimension mismatch");
    return bc;
}

std::size_t generalized_rank(const Representation& m, const Interval& window) {
    const auto& q = m.quiver;
    if (window.b < 1 || window.d > int(q.n)) throw std::invalid_argument("window out of range");
    std::vector<std::size_t> off(q.n + 1, 0);
    std::size_t total = 0;
    for (int x = window.b; x <= window.d; ++x) {
        off[x - 1] = total;
        total += m.dims[x - 1];
    }
    if (total == 0) return 0;

    // Limit: compatible families (v_x) with v_{t} = M_a v_{s} for every arrow
    // in the window.
    std::size_t crows = 0;
    for (int pos = window.b; pos < window.d; ++pos) crows += m.dims[q.target(pos) - 1];
    Matrix constraints(crows, total, m.p);
    std::size_t row = 0;
    for (int pos = window.b; pos < window.d; ++pos) {
        std::size_t s = q.source(pos), t = q.target(pos);
        const Matrix& a = m.maps[pos - 1];
        for (std::size_t i = 0; i < m.dims[t - 1]; ++i) {
            for (std::size_t j = 0; j < m.dims[s - 1]; ++j)
                constraints.at(row, off[s - 1] + j) = a.at(i, j);
            constraints.at(row, off[t - 1] + i) =
                fp_sub(constraints.at(row, off[t - 1] + i), 1, m.p);
            ++row;
        }
    }
    // The canonical map to the colimit factors through any single vertex;
    // compatibility makes all choices agree, so inject through window.b.
    Matrix lim(total, 0, m.p);
    {
        auto basis = nullspace_basis(constraints);
        std::vector<std::vector<std::uint32_t>> cols;
        for (const auto& v : basis) {
            std::vector<std::uint32_t> c(total, 0);
            for (std::size_t j = 0; j < m.dims[window.b - 1]; ++j)
                c[off[window.b - 1] + j] = v[off[window.b - 1] + j];
            cols.push_back(std::move(c));
        }
        lim = from_cols(total, m.p, cols);
    }

    // Colimit: (+) M_x modulo the boundary columns iota_t(M_a w) - iota_s(w).
    std::size_t bcols = 0;
    for (int pos = window.b; pos < window.d; ++pos) bcols += m.dims[q.source(pos) - 1];
    Matrix boundary(total, bcols, m.p);
    std::size_t colidx = 0;
    for (int pos = window.b; pos < window.d; ++pos) {
        std::size_t s = q.source(pos), t = q.target(pos);
        const Matrix& a = m.maps[pos - 1];
        for (std::size_t j = 0; j < m.dims[s - 1]; ++j) {
            for (std::size_t i = 0; i < m.dims[t - 1]; ++i)
                boundary.at(off[t - 1] + i, colidx) = a.at(i, j);
            boundary.at(off[s - 1] + j, colidx) =
                fp_sub(boundary.at(off[s - 1] + j, colidx), 1, m.p);
            ++colidx;
        }
    }
    // rank of lim -> colim equals rank[boundary | lim] - rank[boundary].
    return rank(hstack(boundary, lim)) - rank(boundary);
}

Barcode decompose_by_rank(const Representation& m) {
    m.check_shapes();
    const int n = int(m.quiver.n);
    auto r = [&](int b, int d) -> long long {
        if (b < 1 || d > n) return 0;
        return (long long)generalized_rank(m, Interval{b, d});
    };
    Barcode bc;
    for (int b = 1; b <= n; ++b)
        for (int d = b; d <= n; ++d) {
            long long mult = r(b, d) - r(b - 1, d) - r(b, d + 1) + r(b - 1, d + 1);
            if (mult < 0) throw std::logic_error("decompose_by_rank: negative multiplicity");
            if (mult > 0) bc.add(Interval{b, d}, int(mult));
        }
    if (bc.total_dim() != int(m.total_dim()))
        throw std::logic_error("decompose_by_rank: total dimension mismatch");
    return bc;
}

}  // namespace zigzag
