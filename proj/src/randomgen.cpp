#include "zigzag/randomgen.hpp"

#include <stdexcept>

namespace zigzag {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, Rng& rng) {
    Matrix m(rows, cols, p);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

Matrix random_invertible(std::size_t n, std::uint32_t p, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, p, rng);
        if (rank(m) == n) return m;
    }
}

Matrix mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: square matrix expected");
    Matrix aug = hstack(m, Matrix::identity(m.rows(), m.p()));
    std::vector<std::size_t> piv;
    Matrix r = row_echelon(aug, &piv);
    if (piv.size() != m.rows() || (m.rows() && piv.back() >= m.rows()))
        throw std::invalid_argument("mat_inverse: singular matrix");
    Matrix inv(m.rows(), m.cols(), m.p());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = r.at(i, m.cols() + j);
    return inv;
}

Barcode random_barcode(std::size_t n, std::size_t max_bars, Rng& rng) {
    std::uniform_int_distribution<std::size_t> count(0, max_bars);
    std::uniform_int_distribution<int> vertex(1, int(n));
    Barcode b;
    std::size_t bars = count(rng);
    for (std::size_t k = 0; k < bars; ++k) {
        int x = vertex(rng), y = vertex(rng);
        b.add(Interval{std::min(x, y), std::max(x, y)});
    }
    return b;
}

GradedBarcode random_graded_barcode(std::size_t n, int degree_lo, int degree_hi,
                                    std::size_t max_bars, Rng& rng) {
    std::uniform_int_distribution<int> deg(degree_lo, degree_hi);
    std::uniform_int_distribution<std::size_t> count(0, max_bars);
    std::uniform_int_distribution<int> vertex(1, int(n));
    GradedBarcode g;
    std::size_t bars = count(rng);
    for (std::size_t k = 0; k < bars; ++k) {
        int x = vertex(rng), y = vertex(rng);
        g.add(deg(rng), Interval{std::min(x, y), std::max(x, y)});
    }
    return g;
}

Representation scrambled_realization(const Barcode& bars, const QuiverAn& q, std::uint32_t p,
                                     Rng& rng) {
    Representation m = Representation::zero(q, p);
    for (const auto& [iv, mult] : bars.bars)
        for (int k = 0; k < mult; ++k) m = direct_sum(m, Representation::interval(q, iv, p));
    std::vector<Matrix> g, ginv;
    for (std::size_t x = 0; x < q.n; ++x) {
        g.push_back(random_invertible(m.dims[x], p, rng));
        ginv.push_back(mat_inverse(g.back()));
    }
    Representation out = m;
    for (std::size_t pos = 1; pos < q.n; ++pos) {
        std::size_t s = q.source(pos), t = q.target(pos);
        out.maps[pos - 1] = mat_mul(g[t - 1], mat_mul(m.maps[pos - 1], ginv[s - 1]));
    }
    return out;
}

Orientation random_orientation(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    Orientation o;
    for (std::size_t i = 0; i + 1 < n; ++i)
        o.arrows.push_back(coin(rng) ? ArrowDir::forward : ArrowDir::backward);
    return o;
}

Morphism random_hom_element(const Representation& m, const Representation& n, Rng& rng) {
    auto basis = hom_basis(m, n);
    std::uniform_int_distribution<std::uint32_t> dist(0, m.p - 1);
    Morphism f = zero_morphism(m, n);
    for (const auto& h : basis) {
        std::uint32_t c = dist(rng);
        if (c == 0) continue;
        for (std::size_t x = 0; x < f.comps.size(); ++x)
            f.comps[x] = mat_add(f.comps[x], mat_scale(h.comps[x], c));
    }
    return f;
}

Representation random_representation(const QuiverAn& q, std::uint32_t p, std::size_t max_bars,
                                     Rng& rng) {
    return scrambled_realization(random_barcode(q.n, max_bars, rng), q, p, rng);
}

}  // namespace zigzag
