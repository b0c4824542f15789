#include "zigzag/derived.hpp"

#include <stdexcept>

#include "zigzag/decompose.hpp"

namespace zigzag {

CochainComplex CochainComplex::stalk(const Representation& m, int degree) {
    CochainComplex x;
    x.quiver = m.quiver;
    x.p = m.p;
    if (!m.is_zero()) x.terms[degree] = m;
    return x;
}

Representation CochainComplex::term(int i) const {
    auto it = terms.find(i);
    return it != terms.end() ? it->second : Representation::zero(quiver, p);
}

Morphism CochainComplex::differential(int i) const {
    auto it = differentials.find(i);
    return it != differentials.end() ? it->second : zero_morphism(term(i), term(i + 1));
}

void CochainComplex::validate() const {
    for (const auto& [i, t] : terms) {
        t.check_shapes();
        if (!(t.quiver == quiver) || t.p != p)
            throw std::invalid_argument("complex: term quiver/field mismatch");
    }
    for (const auto& [i, d] : differentials) {
        if (!(d.source == term(i)) || !(d.target == term(i + 1)))
            throw std::invalid_argument("complex: differential endpoints mismatch");
        if (!validate_morphism(d)) throw std::invalid_argument("complex: differential not a morphism");
    }
    for (const auto& [i, d] : differentials) {
        auto next = differentials.find(i + 1);
        if (next == differentials.end()) continue;
        if (!compose(next->second, d).is_zero())
            throw std::invalid_argument("complex: d∘d is nonzero at degree " + std::to_string(i));
    }
}

CochainComplex complex_direct_sum(const CochainComplex& x, const CochainComplex& y) {
    if (!(x.quiver == y.quiver) || x.p != y.p)
        throw std::invalid_argument("complex_direct_sum: quiver or field mismatch");
    CochainComplex z;
    z.quiver = x.quiver;
    z.p = x.p;
    std::set<int> degs;
    for (const auto& [i, t] : x.terms) degs.insert(i);
    for (const auto& [i, t] : y.terms) degs.insert(i);
    for (int i : degs) z.terms[i] = direct_sum(x.term(i), y.term(i));
    for (int i : degs) {
        Morphism dx = x.differential(i), dy = y.differential(i);
        Morphism d = zero_morphism(z.term(i), z.term(i + 1));
        for (std::size_t v = 0; v < d.comps.size(); ++v) {
            d.comps[v].set_block(0, 0, dx.comps[v]);
            d.comps[v].set_block(dx.comps[v].rows(), dx.comps[v].cols(), dy.comps[v]);
        }
        if (!d.is_zero()) z.differentials[i] = d;
    }
    return z;
}

CochainComplex complex_shift(const CochainComplex& x, int delta) {
    CochainComplex z;
    z.quiver = x.quiver;
    z.p = x.p;
    for (const auto& [i, t] : x.terms) z.terms[i] = shift(t, delta);
    for (const auto& [i, d] : x.differentials) z.differentials[i] = shift(d, delta);
    return z;
}

namespace {

struct VertexCohBasis {
    Matrix img;   // basis of Im d^{i-1}_x
    Matrix rep;   // chosen complement columns inside Ker d^i_x
};

}  // namespace

Representation cohomology(const CochainComplex& x, int i) {
    x.validate();
    Representation ti = x.term(i);
    Morphism di = x.differential(i);
    Morphism dprev = x.differential(i - 1);
    const std::size_t n = ti.quiver.n;
    std::vector<VertexCohBasis> basis(n);
    Representation h;
    h.quiver = ti.quiver;
    h.p = ti.p;
    h.dims.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        Matrix ker = from_cols(ti.dims[v], ti.p, nullspace_basis(di.comps[v]));
        Matrix img = column_space_basis(dprev.comps[v]);
        // Complement of the image inside the kernel: kernel columns that stay
        // pivotal after the image columns.
        Matrix aug = hstack(img, ker);
        std::vector<std::size_t> piv;
        row_echelon(aug, &piv);
        std::vector<std::vector<std::uint32_t>> rep_cols;
        for (auto c : piv)
            if (c >= img.cols()) rep_cols.push_back(ker.col(c - img.cols()));
        basis[v].img = img;
        basis[v].rep = from_cols(ti.dims[v], ti.p, rep_cols);
        h.dims[v] = basis[v].rep.cols();
    }
    for (std::size_t pos = 1; pos < n; ++pos) {
        std::size_t s = ti.quiver.source(pos), t = ti.quiver.target(pos);
        Matrix img_rep = mat_mul(ti.maps[pos - 1], basis[s - 1].rep);
        Matrix full = hstack(basis[t - 1].img, basis[t - 1].rep);
        Matrix hmap(h.dims[t - 1], h.dims[s - 1], h.p);
        for (std::size_t j = 0; j < img_rep.cols(); ++j) {
            auto coords = coordinates_in(full, img_rep.col(j));
            if (!coords) throw std::logic_error("cohomology: structure map leaves the kernel");
            for (std::size_t k = 0; k < h.dims[t - 1]; ++k)
                hmap.at(k, j) = (*coords)[basis[t - 1].img.cols() + k];
        }
        h.maps.push_back(std::move(hmap));
    }
    return h;
}

void GradedBarcode::add(int degree, const Interval& iv, int mult) {
    degrees[degree].add(iv, mult);
}

GradedBarcode decompose_complex(const CochainComplex& x) {
    GradedBarcode g;
    if (x.terms.empty()) return g;
    int lo = x.terms.begin()->first, hi = x.terms.rbegin()->first;
    for (int i = lo; i <= hi; ++i) {
        Barcode b = decompose(cohomology(x, i));
        if (!b.empty()) g.degrees[i] = std::move(b);
    }
    return g;
}

ExtRat stalk_distance(const Representation& m, int i, const Representation& n, int j) {
    if (i == j) return interleaving_distance(m, n);
    Barcode empty;
    return max(bottleneck_distance(decompose(m), empty),
               bottleneck_distance(decompose(n), empty));
}

ExtRat derived_bottleneck(const GradedBarcode& x, const GradedBarcode& y) {
    std::set<int> degs;
    for (const auto& [i, b] : x.degrees) degs.insert(i);
    for (const auto& [i, b] : y.degrees) degs.insert(i);
    ExtRat d = ExtRat::integer(0);
    Barcode empty;
    for (int i : degs) {
        const Barcode& bx = x.degrees.count(i) ? x.degrees.at(i) : empty;
        const Barcode& by = y.degrees.count(i) ? y.degrees.at(i) : empty;
        d = max(d, bottleneck_distance(bx, by));
    }
    return d;
}

Representation realize_barcode(const Barcode& b, const QuiverAn& q, std::uint32_t p) {
    Representation m = Representation::zero(q, p);
    for (const auto& [iv, mult] : b.bars)
        for (int k = 0; k < mult; ++k) m = direct_sum(m, Representation::interval(q, iv, p));
    return m;
}

ExtRat derived_interleaving_distance(const GradedBarcode& x, const GradedBarcode& y,
                                     std::size_t n, std::uint32_t p) {
    QuiverAn q(n, Orientation::equioriented(n));
    std::set<int> degs;
    for (const auto& [i, b] : x.degrees) degs.insert(i);
    for (const auto& [i, b] : y.degrees) degs.insert(i);
    ExtRat d = ExtRat::integer(0);
    Barcode empty;
    for (int i : degs) {
        const Barcode& bx = x.degrees.count(i) ? x.degrees.at(i) : empty;
        const Barcode& by = y.degrees.count(i) ? y.degrees.at(i) : empty;
        d = max(d, interleaving_distance(realize_barcode(bx, q, p), realize_barcode(by, q, p)));
    }
    return d;
}

ExtRat derived_interleaving_distance(const CochainComplex& x, const CochainComplex& y) {
    if (!(x.quiver == y.quiver) || x.p != y.p)
        throw std::invalid_argument("derived_interleaving_distance: quiver or field mismatch");
    if (!x.quiver.orientation.is_equioriented())
        throw std::domain_error("derived_interleaving_distance: equioriented complexes expected");
    return derived_interleaving_distance(decompose_complex(x), decompose_complex(y), x.quiver.n,
                                         x.p);
}

}  // namespace zigzag
