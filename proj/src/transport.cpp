#include "zigzag/transport.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "zigzag/decompose.hpp"

namespace zigzag {

std::string to_string(TorsionSide side) { return side == TorsionSide::x_side ? "X" : "Y"; }

std::string to_string(ZigzagClass c) {
    switch (c) {
        case ZigzagClass::y_c: return "Y_c";
        case ZigzagClass::y_co: return "Y_co";
        case ZigzagClass::x_o: return "X_o";
        case ZigzagClass::x_oc: return "X_oc";
    }
    return "?";
}

namespace {

std::vector<std::uint32_t> vec_of(const Morphism& f) {
    std::vector<std::uint32_t> v;
    for (const auto& c : f.comps)
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) v.push_back(c.at(i, j));
    return v;
}

Matrix basis_matrix(const std::vector<Morphism>& basis, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& f : basis) cols.push_back(vec_of(f));
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    return from_cols(rows, p, cols);
}

Morphism combine_basis(const std::vector<Morphism>& basis,
                       const std::vector<std::uint32_t>& coeff, const Representation& src,
                       const Representation& dst) {
    Morphism f = zero_morphism(src, dst);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeff[k] == 0) continue;
        for (std::size_t x = 0; x < f.comps.size(); ++x)
            f.comps[x] = mat_add(f.comps[x], mat_scale(basis[k].comps[x], coeff[k]));
    }
    return f;
}

// Coordinates of `rhs` in the span of `images` (a list of morphisms with the
// same endpoints), when it lies there.
std::optional<std::vector<std::uint32_t>> coords_against(const std::vector<Morphism>& images,
                                                         const Morphism& rhs, std::uint32_t p) {
    Matrix bm = basis_matrix(images, p);
    auto target = vec_of(rhs);
    if (bm.rows() == 0) {
        for (auto v : target)
            if (v) return std::nullopt;
        return std::vector<std::uint32_t>(images.size(), 0);
    }
    return coordinates_in(bm, target);
}

// The unique-up-to-scalar nonzero morphism between interval modules.
Morphism canonical_hom(const Representation& src, const Representation& dst) {
    auto basis = hom_basis(src, dst);
    if (basis.size() != 1)
        throw std::logic_error("canonical_hom: expected a one-dimensional Hom space");
    return basis[0];
}

struct Resolution {
    Representation p0;
    Morphism cover;  // P0 ->> X
    Representation k;
    Morphism incl;   // K -> P0
};

Resolution resolve(const Representation& x) {
    Resolution r;
    r.cover = projective_cover(x);
    r.p0 = r.cover.source;
    SubQuotient ker = kernel(r.cover);
    r.k = ker.rep;
    r.incl = ker.embed_or_project;
    return r;
}

// Everything about the tilting module that does not depend on the argument of
// the functors: the summand modules, the irreducible maps along the section,
// projective resolutions of non-projective summands, and the kernel-level
// lifts of the irreducible maps.
struct TransportMachine {
    std::size_t n;
    Orientation a;
    std::uint32_t p;
    TiltingModule tilting;
    std::vector<Representation> xs;

    struct ArrowData {
        // The representation map at position pos runs src_vertex -> dst_vertex
        // of A_n(a); sigma is the module map X_{dst_vertex} -> X_{src_vertex}
        // inducing it by composition.
        std::size_t src_vertex, dst_vertex;
        Morphism sigma;
        std::optional<Morphism> s1;  // kernel lift, when both ends are non-projective
    };
    std::vector<ArrowData> arrows;
    std::vector<std::optional<Resolution>> res;  // per summand; nullopt for projectives
};

TransportMachine build_machine(const TiltingModule& t, const Orientation& a, std::uint32_t p) {
    if (!t.section) throw std::invalid_argument("transport: tilting module without section");
    TransportMachine mc;
    mc.n = t.summands.size();
    mc.a = a;
    mc.p = p;
    mc.tilting = t;
    QuiverAn equi(mc.n, Orientation::equioriented(mc.n));
    ARQuiver g = build_ar_quiver(equi);
    mc.res.resize(mc.n);
    for (std::size_t i = 0; i < mc.n; ++i) {
        mc.xs.push_back(Representation::interval(equi, t.summands[i], p));
        if (!g.is_projective(t.summands[i])) mc.res[i] = resolve(mc.xs.back());
    }
    for (std::size_t pos = 1; pos < mc.n; ++pos) {
        TransportMachine::ArrowData ad;
        bool sigma_fwd = t.section->sigma.arrows[pos - 1] == ArrowDir::forward;
        ad.src_vertex = sigma_fwd ? pos + 1 : pos;
        ad.dst_vertex = sigma_fwd ? pos : pos + 1;
        if (QuiverAn(mc.n, a).source(pos) != ad.src_vertex)
            throw std::logic_error("transport: section does not match the orientation");
        ad.sigma = sigma_fwd ? canonical_hom(mc.xs[pos - 1], mc.xs[pos])
                             : canonical_hom(mc.xs[pos], mc.xs[pos - 1]);
        const auto& rs = mc.res[ad.dst_vertex - 1];  // sigma source summand
        const auto& rd = mc.res[ad.src_vertex - 1];  // sigma target summand
        if (rs && rd) {
            // Lift sigma: s0 with cover_target ∘ s0 = sigma ∘ cover_source,
            // then restrict to the kernels.
            auto b0 = hom_basis(rs->p0, rd->p0);
            std::vector<Morphism> b0_img;
            for (const auto& m0 : b0) b0_img.push_back(compose(rd->cover, m0));
            auto c0 = coords_against(b0_img, compose(ad.sigma, rs->cover), p);
            if (!c0) throw std::logic_error("transport: no lift through the covers");
            Morphism s0 = combine_basis(b0, *c0, rs->p0, rd->p0);
            auto b1 = hom_basis(rs->k, rd->k);
            std::vector<Morphism> b1_img;
            for (const auto& m1 : b1) b1_img.push_back(compose(rd->incl, m1));
            auto c1 = coords_against(b1_img, compose(s0, rs->incl), p);
            if (!c1) throw std::logic_error("transport: no kernel restriction");
            ad.s1 = combine_basis(b1, *c1, rs->k, rd->k);
        }
        mc.arrows.push_back(std::move(ad));
    }
    return mc;
}

Representation hom_image(const TransportMachine& mc, const Representation& l) {
    QuiverAn qa(mc.n, mc.a);
    std::vector<std::vector<Morphism>> bases;
    for (const auto& x : mc.xs) bases.push_back(hom_basis(x, l));
    Representation out;
    out.quiver = qa;
    out.p = l.p;
    for (const auto& b : bases) out.dims.push_back(b.size());
    for (std::size_t pos = 1; pos < mc.n; ++pos) {
        const auto& ad = mc.arrows[pos - 1];
        Matrix action(out.dims[ad.dst_vertex - 1], out.dims[ad.src_vertex - 1], l.p);
        for (std::size_t j = 0; j < bases[ad.src_vertex - 1].size(); ++j) {
            Morphism composed = compose(bases[ad.src_vertex - 1][j], ad.sigma);
            auto coords = coords_against(bases[ad.dst_vertex - 1], composed, l.p);
            if (!coords) throw std::logic_error("transport: composition escaped the basis");
            action.set_col(j, *coords);
        }
        out.maps.push_back(std::move(action));
    }
    return out;
}

// Ext^1(X_i, L) presented on a complement of the restricted Hom(P0, L) inside
// Hom(K, L).
struct ExtSpace {
    std::vector<Morphism> k_basis;
    Matrix presentation;                 // [image basis | chosen unit columns]
    std::size_t image_cols = 0;
    std::vector<std::size_t> rep_index;  // k-basis indices presenting Ext

    std::size_t dim() const { return rep_index.size(); }

    std::vector<std::uint32_t> ext_coords(const std::vector<std::uint32_t>& kvec) const {
        auto coords = coordinates_in(presentation, kvec);
        if (!coords) throw std::logic_error("transport: vector outside the Ext presentation");
        return std::vector<std::uint32_t>(coords->begin() + image_cols, coords->end());
    }
};

ExtSpace ext_space(const Resolution& res, const Representation& l) {
    ExtSpace e;
    e.k_basis = hom_basis(res.k, l);
    std::vector<std::vector<std::uint32_t>> img_cols;
    for (const auto& phi : hom_basis(res.p0, l)) {
        auto coords = coords_against(e.k_basis, compose(phi, res.incl), l.p);
        if (!coords) throw std::logic_error("transport: restriction outside Hom(K, L)");
        img_cols.push_back(*coords);
    }
    Matrix img = column_space_basis(from_cols(e.k_basis.size(), l.p, img_cols));
    Matrix aug = hstack(img, Matrix::identity(e.k_basis.size(), l.p));
    std::vector<std::size_t> piv;
    row_echelon(aug, &piv);
    for (auto c : piv)
        if (c >= img.cols()) e.rep_index.push_back(c - img.cols());
    std::vector<std::vector<std::uint32_t>> unit_cols;
    for (auto idx : e.rep_index) {
        std::vector<std::uint32_t> u(e.k_basis.size(), 0);
        u[idx] = 1;
        unit_cols.push_back(std::move(u));
    }
    e.presentation = hstack(img, from_cols(e.k_basis.size(), l.p, unit_cols));
    e.image_cols = img.cols();
    return e;
}

Representation ext_image(const TransportMachine& mc, const Representation& l) {
    QuiverAn qa(mc.n, mc.a);
    std::vector<std::optional<ExtSpace>> ext(mc.n);
    for (std::size_t i = 0; i < mc.n; ++i)
        if (mc.res[i]) ext[i] = ext_space(*mc.res[i], l);
    Representation out;
    out.quiver = qa;
    out.p = l.p;
    for (std::size_t i = 0; i < mc.n; ++i) out.dims.push_back(ext[i] ? ext[i]->dim() : 0);
    for (std::size_t pos = 1; pos < mc.n; ++pos) {
        const auto& ad = mc.arrows[pos - 1];
        Matrix action(out.dims[ad.dst_vertex - 1], out.dims[ad.src_vertex - 1], l.p);
        if (ad.s1 && out.dims[ad.dst_vertex - 1] && out.dims[ad.src_vertex - 1]) {
            // Ext^1(sigma, L) pulls presentations back along the kernel lift.
            const ExtSpace& e_from = *ext[ad.src_vertex - 1];
            const ExtSpace& e_to = *ext[ad.dst_vertex - 1];
            for (std::size_t j = 0; j < e_from.dim(); ++j) {
                Morphism h = e_from.k_basis[e_from.rep_index[j]];
                Morphism pulled = compose(h, *ad.s1);
                auto kc = coords_against(e_to.k_basis, pulled, l.p);
                if (!kc) throw std::logic_error("transport: pullback escaped Hom(K, L)");
                action.set_col(j, e_to.ext_coords(*kc));
            }
        }
        out.maps.push_back(std::move(action));
    }
    return out;
}

const TransportMachine& machine_for(std::size_t n, const Orientation& a, std::uint32_t p) {
    static std::mutex guard;
    static std::map<std::tuple<std::size_t, std::string, std::uint32_t>, TransportMachine> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_tuple(n, a.to_string(), p);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_machine(tilting_for_orientation(n, a), a, p)).first;
    return it->second;
}

}  // namespace

Representation hom_functor_image(const TiltingModule& t, const Orientation& a,
                                 const Representation& l) {
    return hom_image(build_machine(t, a, l.p), l);
}

Representation ext_functor_image(const TiltingModule& t, const Orientation& a,
                                 const Representation& l) {
    return ext_image(build_machine(t, a, l.p), l);
}

const TransportEntry& TransportTable::entry(const Interval& source) const {
    auto it = by_source.find(source);
    if (it == by_source.end()) throw std::invalid_argument("transport table: unknown interval");
    return it->second;
}

namespace {

TransportTable build_transport_table(std::size_t n, const Orientation& a, std::uint32_t p) {
    const TransportMachine& mc = machine_for(n, a, p);
    TransportTable table;
    table.n = n;
    table.a = a;
    table.p = p;
    table.tilting = mc.tilting;
    QuiverAn equi(n, Orientation::equioriented(n));
    for (int b = 1; b <= int(n); ++b)
        for (int d = b; d <= int(n); ++d) {
            Interval target{b, d};
            Representation l = Representation::interval(equi, target, p);
            Representation h = hom_image(mc, l);
            int degree;
            Barcode bc;
            if (!h.is_zero()) {
                degree = 0;
                bc = decompose(h);
            } else {
                degree = 1;
                bc = decompose(ext_image(mc, l));
            }
            if (bc.size() != 1)
                throw std::logic_error("transport table: image of an interval is not an interval");
            Interval source = bc.bars.begin()->first;
            if (table.by_source.count(source))
                throw std::logic_error("transport table: not injective");
            table.by_source[source] = TransportEntry{source, target, degree};
            table.by_target[{target, degree}] = source;
        }
    if (table.by_source.size() != n * (n + 1) / 2)
        throw std::logic_error("transport table: not total");
    return table;
}

}  // namespace

const TransportTable& transport_table(std::size_t n, const Orientation& a, std::uint32_t p) {
    static std::mutex guard;
    static std::map<std::tuple<std::size_t, std::string, std::uint32_t>, TransportTable> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_tuple(n, a.to_string(), p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_transport_table(n, a, p)).first;
    return it->second;
}

TransportEntry purely_zigzag_target(const Interval& iv, std::size_t n) {
    const int s = iv.b, t = iv.d, nn = int(n);
    TransportEntry e;
    e.source = iv;
    if (s % 2 == 1 && t % 2 == 1) {  // closed
        int b = (s + 1) / 2, d = (t + 1) / 2;
        e.target = Interval{b, nn - d + 1};
        e.degree = 0;
    } else if (s % 2 == 1) {  // right-open
        int b = (s + 1) / 2, d = (t + 2) / 2;
        e.target = Interval{b, d - 1};
        e.degree = 0;
    } else if (t % 2 == 1) {  // left-open
        int b = s / 2, d = (t + 1) / 2;
        e.target = Interval{nn - d + 2, nn - b + 1};
        e.degree = 1;
    } else {  // open
        int b = s / 2, d = (t + 2) / 2;
        e.target = Interval{d, nn - b + 1};
        e.degree = 1;
    }
    return e;
}

ZigzagClass purely_zigzag_class(const Interval& iv) {
    bool s_odd = iv.b % 2 == 1, t_odd = iv.d % 2 == 1;
    if (s_odd && t_odd) return ZigzagClass::y_c;
    if (s_odd) return ZigzagClass::y_co;
    if (t_odd) return ZigzagClass::x_oc;
    return ZigzagClass::x_o;
}

TorsionClass torsion_class_of(const Interval& iv, std::size_t n, const Orientation& a,
                              std::uint32_t p) {
    const TransportTable& table = transport_table(n, a, p);
    TorsionClass c;
    c.side = table.entry(iv).degree == 0 ? TorsionSide::y_side : TorsionSide::x_side;
    if (a.is_z1()) c.refined = purely_zigzag_class(iv);
    return c;
}

GradedBarcode transport_barcode(const Barcode& b, std::size_t n, const Orientation& a,
                                std::uint32_t p) {
    const TransportTable& table = transport_table(n, a, p);
    GradedBarcode g;
    for (const auto& [iv, mult] : b.bars) {
        const TransportEntry& e = table.entry(iv);
        g.add(e.degree, e.target, mult);
    }
    return g;
}

GradedBarcode corresponding_complex(const Representation& m) {
    return transport_barcode(decompose(m), m.quiver.n, m.quiver.orientation, m.p);
}

ExtRat induced_distance(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver) || x.p != y.p)
        throw std::invalid_argument("induced_distance: quiver or field mismatch");
    return derived_interleaving_distance(corresponding_complex(x), corresponding_complex(y),
                                         x.quiver.n, x.p);
}

ExtRat induced_bottleneck(const Barcode& b1, const Barcode& b2, std::size_t n,
                          const Orientation& a, std::uint32_t p) {
    return derived_bottleneck(transport_barcode(b1, n, a, p), transport_barcode(b2, n, a, p));
}

}  // namespace zigzag
