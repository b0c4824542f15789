#include "zigzag/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

Orientation Orientation::equioriented(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Orientation: n must be >= 1");
    Orientation o;
    o.arrows.assign(n - 1, ArrowDir::forward);
    return o;
}

Orientation Orientation::zigzag_z1(std::size_t n) {
    Orientation o;
    o.arrows.resize(n - 1);
    for (std::size_t x = 1; x < n; ++x)
        o.arrows[x - 1] = (x % 2 == 1) ? ArrowDir::backward : ArrowDir::forward;
    return o;
}

Orientation Orientation::zigzag_z2(std::size_t n) {
    Orientation o;
    o.arrows.resize(n - 1);
    for (std::size_t x = 1; x < n; ++x)
        o.arrows[x - 1] = (x % 2 == 1) ? ArrowDir::forward : ArrowDir::backward;
    return o;
}

Orientation Orientation::parse(const std::string& s) {
    Orientation o;
    for (char c : s) {
        if (c == 'f')
            o.arrows.push_back(ArrowDir::forward);
        else if (c == 'b')
            o.arrows.push_back(ArrowDir::backward);
        else
            throw std::invalid_argument("Orientation: expected a string over {f, b}");
    }
    return o;
}

std::string Orientation::to_string() const {
    std::string s;
    for (auto d : arrows) s += (d == ArrowDir::forward ? 'f' : 'b');
    return s;
}

bool Orientation::is_equioriented() const {
    return std::all_of(arrows.begin(), arrows.end(),
                       [](ArrowDir d) { return d == ArrowDir::forward; });
}

bool Orientation::is_z1() const { return *this == zigzag_z1(arrows.size() + 1); }

QuiverAn::QuiverAn(std::size_t n_, Orientation o) : n(n_), orientation(std::move(o)) {
    if (n == 0) throw std::invalid_argument("QuiverAn: n must be >= 1");
    if (orientation.arrows.size() != n - 1)
        throw std::invalid_argument("QuiverAn: orientation length must be n-1");
}

std::string to_string(const Interval& iv) {
    return "I[" + std::to_string(iv.b) + "," + std::to_string(iv.d) + "]";
}

void Barcode::add(Interval iv, int mult) {
    if (mult <= 0) throw std::invalid_argument("Barcode: multiplicity must be positive");
    bars[iv] += mult;
}

int Barcode::total_dim() const {
    int t = 0;
    for (const auto& [iv, m] : bars) t += m * iv.length();
    return t;
}

std::size_t Barcode::size() const {
    std::size_t t = 0;
    for (const auto& [iv, m] : bars) t += std::size_t(m);
    return t;
}

std::vector<Interval> Barcode::expand() const {
    std::vector<Interval> v;
    for (const auto& [iv, m] : bars)
        for (int k = 0; k < m; ++k) v.push_back(iv);
    return v;
}

Barcode Barcode::translated(int delta, int n) const {
    Barcode out;
    for (const auto& [iv, m] : bars) {
        int b = std::max(1, iv.b - delta);
        int d = std::min(n, iv.d - delta);
        if (b <= d) out.add(Interval{b, d}, m);
    }
    return out;
}

Barcode barcode_union(const Barcode& a, const Barcode& b) {
    Barcode u = a;
    for (const auto& [iv, m] : b.bars) u.add(iv, m);
    return u;
}

Representation Representation::zero(const QuiverAn& q, std::uint32_t p) {
    Representation r;
    r.quiver = q;
    r.p = p;
    r.dims.assign(q.n, 0);
    for (std::size_t x = 1; x < q.n; ++x) r.maps.emplace_back(0, 0, p);
    return r;
}

Representation Representation::interval(const QuiverAn& q, const Interval& iv, std::uint32_t p) {
    if (iv.b < 1 || iv.d > int(q.n) || iv.b > iv.d)
        throw std::invalid_argument("interval out of range for the quiver");
    Representation r;
    r.quiver = q;
    r.p = p;
    r.dims.assign(q.n, 0);
    for (int x = iv.b; x <= iv.d; ++x) r.dims[x - 1] = 1;
    for (std::size_t x = 1; x < q.n; ++x) {
        std::size_t s = q.source(x), t = q.target(x);
        Matrix m(r.dims[t - 1], r.dims[s - 1], p);
        if (iv.b <= int(x) && int(x) + 1 <= iv.d) m.at(0, 0) = 1;
        r.maps.push_back(std::move(m));
    }
    return r;
}

std::size_t Representation::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
}

void Representation::check_shapes() const {
    if (!is_prime(p)) throw std::invalid_argument("Representation: p must be prime");
    if (dims.size() != quiver.n || maps.size() != quiver.n - 1)
        throw std::invalid_argument("Representation: wrong number of dims or maps");
    for (std::size_t x = 1; x < quiver.n; ++x) {
        const Matrix& m = maps[x - 1];
        if (m.rows() != dims[quiver.target(x) - 1] || m.cols() != dims[quiver.source(x) - 1] ||
            m.p() != p)
            throw std::invalid_argument("Representation: map shape mismatch at arrow " +
                                        std::to_string(x));
    }
}

bool Morphism::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
    Morphism f;
    f.source = m;
    f.target = n;
    for (std::size_t x = 1; x <= m.quiver.n; ++x)
        f.comps.emplace_back(n.dims[x - 1], m.dims[x - 1], m.p);
    return f;
}

Morphism identity_morphism(const Representation& m) {
    Morphism f = zero_morphism(m, m);
    for (std::size_t x = 1; x <= m.quiver.n; ++x)
        f.comps[x - 1] = Matrix::identity(m.dims[x - 1], m.p);
    return f;
}

bool validate_morphism(const Morphism& f) {
    const auto& q = f.source.quiver;
    if (!(q == f.target.quiver) || f.source.p != f.target.p)
        throw std::invalid_argument("validate_morphism: source/target quiver or field mismatch");
    if (f.comps.size() != q.n) throw std::invalid_argument("validate_morphism: component count");
    for (std::size_t x = 1; x <= q.n; ++x)
        if (f.comps[x - 1].rows() != f.target.dims[x - 1] ||
            f.comps[x - 1].cols() != f.source.dims[x - 1])
            throw std::invalid_argument("validate_morphism: component shape mismatch");
    for (std::size_t x = 1; x < q.n; ++x) {
        std::size_t s = q.source(x), t = q.target(x);
        Matrix lhs = mat_mul(f.comps[t - 1], f.source.maps[x - 1]);
        Matrix rhs = mat_mul(f.target.maps[x - 1], f.comps[s - 1]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h;
    h.source = f.source;
    h.target = g.target;
    for (std::size_t i = 0; i < f.comps.size(); ++i)
        h.comps.push_back(mat_mul(g.comps[i], f.comps[i]));
    return h;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (!(m.quiver == n.quiver) || m.p != n.p)
        throw std::invalid_argument("direct_sum: quiver or field mismatch");
    Representation r;
    r.quiver = m.quiver;
    r.p = m.p;
    for (std::size_t i = 0; i < m.dims.size(); ++i) r.dims.push_back(m.dims[i] + n.dims[i]);
    for (std::size_t x = 1; x < m.quiver.n; ++x) {
        std::size_t s = m.quiver.source(x), t = m.quiver.target(x);
        Matrix blk(r.dims[t - 1], r.dims[s - 1], r.p);
        blk.set_block(0, 0, m.maps[x - 1]);
        blk.set_block(m.dims[t - 1], m.dims[s - 1], n.maps[x - 1]);
        r.maps.push_back(std::move(blk));
    }
    return r;
}

static void require_equioriented(const QuiverAn& q, const char* op) {
    if (!q.orientation.is_equioriented())
        throw std::domain_error(std::string(op) + ": defined only in the equioriented setting");
}

Representation shift(const Representation& m, int delta) {
    require_equioriented(m.quiver, "shift");
    const int n = int(m.quiver.n);
    Representation r;
    r.quiver = m.quiver;
    r.p = m.p;
    r.dims.assign(n, 0);
    for (int x = 1; x <= n; ++x)
        if (1 <= x + delta && x + delta <= n) r.dims[x - 1] = m.dims[x + delta - 1];
    for (int x = 1; x < n; ++x) {
        if (1 <= x + delta && x + 1 + delta <= n)
            r.maps.push_back(m.maps[x + delta - 1]);
        else
            r.maps.emplace_back(r.dims[x], r.dims[x - 1], r.p);
    }
    return r;
}

Morphism shift(const Morphism& f, int delta) {
    Morphism g;
    g.source = shift(f.source, delta);
    g.target = shift(f.target, delta);
    const int n = int(f.source.quiver.n);
    for (int x = 1; x <= n; ++x) {
        if (1 <= x + delta && x + delta <= n)
            g.comps.push_back(f.comps[x + delta - 1]);
        else
            g.comps.emplace_back(g.target.dims[x - 1], g.source.dims[x - 1], f.source.p);
    }
    return g;
}

Matrix phi(const Representation& m, std::size_t s, std::size_t t) {
    require_equioriented(m.quiver, "phi");
    if (s > t || t > m.quiver.n) throw std::invalid_argument("phi: need 1 <= s <= t <= n");
    Matrix r = Matrix::identity(m.dims[s - 1], m.p);
    for (std::size_t pos = s; pos < t; ++pos) r = mat_mul(m.maps[pos - 1], r);
    return r;
}

Morphism transition(const Representation& m, int delta) {
    require_equioriented(m.quiver, "transition");
    if (delta < 0) throw std::invalid_argument("transition: delta must be >= 0");
    const int n = int(m.quiver.n);
    Morphism f;
    f.source = m;
    f.target = shift(m, delta);
    for (int x = 1; x <= n; ++x) {
        if (x + delta <= n)
            f.comps.push_back(phi(m, x, x + delta));
        else
            f.comps.emplace_back(0, m.dims[x - 1], m.p);
    }
    return f;
}

bool is_delta_trivial(const Representation& m, int delta) {
    return transition(m, delta).is_zero();
}

Representation embed_at(const Representation& m, std::size_t l, std::size_t offset) {
    require_equioriented(m.quiver, "embed_at");
    if (offset + m.quiver.n > l) throw std::invalid_argument("embed_at: window too small");
    const std::size_t n = m.quiver.n;
    Representation r = Representation::zero(QuiverAn(l, Orientation::equioriented(l)), m.p);
    for (std::size_t x = 1; x <= n; ++x) r.dims[offset + x - 1] = m.dims[x - 1];
    for (std::size_t x = 1; x < l; ++x) {
        if (x > offset && x + 1 <= offset + n)
            r.maps[x - 1] = m.maps[x - offset - 1];
        else
            r.maps[x - 1] = Matrix(r.dims[x], r.dims[x - 1], m.p);
    }
    return r;
}

Morphism embed_at(const Morphism& f, std::size_t l, std::size_t offset) {
    Morphism g;
    g.source = embed_at(f.source, l, offset);
    g.target = embed_at(f.target, l, offset);
    for (std::size_t x = 1; x <= l; ++x) {
        if (x > offset && x <= offset + f.source.quiver.n)
            g.comps.push_back(f.comps[x - offset - 1]);
        else
            g.comps.emplace_back(0, 0, f.source.p);
    }
    return g;
}

Representation extend(const Representation& m, std::size_t l) {
    if (l < m.quiver.n) throw std::invalid_argument("extend: l must be >= n");
    return embed_at(m, l, 0);
}

namespace {

// Unknowns of the morphism system: entries of f_x laid out row-major, per
// vertex, in vertex order.
struct HomLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    HomLayout(const Representation& m, const Representation& n) {
        offset.resize(m.quiver.n);
        for (std::size_t x = 0; x < m.quiver.n; ++x) {
            offset[x] = total;
            total += n.dims[x] * m.dims[x];
        }
    }
};

Matrix hom_constraint_matrix(const Representation& m, const Representation& n,
                             const HomLayout& layout) {
    const auto& q = m.quiver;
    std::size_t rows = 0;
    for (std::size_t x = 1; x < q.n; ++x)
        rows += n.dims[q.target(x) - 1] * m.dims[q.source(x) - 1];
    Matrix sys(rows, layout.total, m.p);
    std::size_t row = 0;
    for (std::size_t x = 1; x < q.n; ++x) {
        std::size_t s = q.source(x), t = q.target(x);
        const Matrix& ma = m.maps[x - 1];
        const Matrix& na = n.maps[x - 1];
        for (std::size_t i = 0; i < n.dims[t - 1]; ++i)
            for (std::size_t j = 0; j < m.dims[s - 1]; ++j) {
                // (f_t M_a)[i,j] - (N_a f_s)[i,j] = 0
                for (std::size_t k = 0; k < m.dims[t - 1]; ++k) {
                    std::size_t idx = layout.offset[t - 1] + i * m.dims[t - 1] + k;
                    sys.at(row, idx) = fp_add(sys.at(row, idx), ma.at(k, j), m.p);
                }
                for (std::size_t k = 0; k < n.dims[s - 1]; ++k) {
                    std::size_t idx = layout.offset[s - 1] + k * m.dims[s - 1] + j;
                    sys.at(row, idx) = fp_sub(sys.at(row, idx), na.at(i, k), m.p);
                }
                ++row;
            }
    }
    return sys;
}

}  // namespace

std::size_t hom_dim(const Representation& m, const Representation& n) {
    if (!(m.quiver == n.quiver) || m.p != n.p)
        throw std::invalid_argument("hom_dim: quiver or field mismatch");
    HomLayout layout(m, n);
    if (layout.total == 0) return 0;
    Matrix sys = hom_constraint_matrix(m, n, layout);
    return layout.total - rank(sys);
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
    if (!(m.quiver == n.quiver) || m.p != n.p)
        throw std::invalid_argument("hom_basis: quiver or field mismatch");
    HomLayout layout(m, n);
    std::vector<Morphism> basis;
    if (layout.total == 0) return basis;
    Matrix sys = hom_constraint_matrix(m, n, layout);
    for (const auto& v : nullspace_basis(sys)) {
        Morphism f = zero_morphism(m, n);
        for (std::size_t x = 0; x < m.quiver.n; ++x)
            for (std::size_t i = 0; i < n.dims[x]; ++i)
                for (std::size_t j = 0; j < m.dims[x]; ++j)
                    f.comps[x].at(i, j) = v[layout.offset[x] + i * m.dims[x] + j];
        basis.push_back(std::move(f));
    }
    return basis;
}

Representation subrepresentation(const Representation& n, const std::vector<Matrix>& bases) {
    Representation r;
    r.quiver = n.quiver;
    r.p = n.p;
    for (const auto& b : bases) r.dims.push_back(b.cols());
    for (std::size_t x = 1; x < n.quiver.n; ++x) {
        std::size_t s = n.quiver.source(x), t = n.quiver.target(x);
        Matrix img = mat_mul(n.maps[x - 1], bases[s - 1]);
        Matrix c(bases[t - 1].cols(), bases[s - 1].cols(), n.p);
        for (std::size_t j = 0; j < img.cols(); ++j) {
            auto coords = coordinates_in(bases[t - 1], img.col(j));
            if (!coords) throw std::logic_error("subrepresentation: family not map-closed");
            c.set_col(j, *coords);
        }
        r.maps.push_back(std::move(c));
    }
    return r;
}

SubQuotient image(const Morphism& f) {
    std::vector<Matrix> bases;
    for (const auto& c : f.comps) bases.push_back(column_space_basis(c));
    SubQuotient sq;
    sq.rep = subrepresentation(f.target, bases);
    sq.embed_or_project.source = sq.rep;
    sq.embed_or_project.target = f.target;
    sq.embed_or_project.comps = bases;
    return sq;
}

SubQuotient kernel(const Morphism& f) {
    std::vector<Matrix> bases;
    for (std::size_t x = 0; x < f.comps.size(); ++x)
        bases.push_back(from_cols(f.source.dims[x], f.source.p, nullspace_basis(f.comps[x])));
    SubQuotient sq;
    sq.rep = subrepresentation(f.source, bases);
    sq.embed_or_project.source = sq.rep;
    sq.embed_or_project.target = f.source;
    sq.embed_or_project.comps = bases;
    return sq;
}

SubQuotient cokernel(const Morphism& f) {
    const Representation& n = f.target;
    std::vector<Matrix> img, comp, proj;
    for (std::size_t x = 0; x < f.comps.size(); ++x) {
        Matrix b = column_space_basis(f.comps[x]);
        // Complement of the image: identity columns that are pivots in [b | I].
        Matrix aug = hstack(b, Matrix::identity(n.dims[x], n.p));
        std::vector<std::size_t> piv;
        row_echelon(aug, &piv);
        Matrix c(n.dims[x], 0, n.p);
        std::vector<std::vector<std::uint32_t>> ccols;
        for (auto pc : piv)
            if (pc >= b.cols()) {
                std::vector<std::uint32_t> e(n.dims[x], 0);
                e[pc - b.cols()] = 1;
                ccols.push_back(std::move(e));
            }
        img.push_back(b);
        comp.push_back(from_cols(n.dims[x], n.p, ccols));
    }
    // Quotient structure maps and the projection, in the complement basis.
    Representation q;
    q.quiver = n.quiver;
    q.p = n.p;
    for (const auto& c : comp) q.dims.push_back(c.cols());
    auto express = [&](std::size_t x, const std::vector<std::uint32_t>& v) {
        Matrix full = hstack(img[x], comp[x]);
        auto coords = coordinates_in(full, v);
        if (!coords) throw std::logic_error("cokernel: expression failed");
        std::vector<std::uint32_t> out(coords->begin() + img[x].cols(), coords->end());
        return out;
    };
    for (std::size_t x = 1; x < n.quiver.n; ++x) {
        std::size_t s = n.quiver.source(x), t = n.quiver.target(x);
        Matrix c(q.dims[t - 1], q.dims[s - 1], n.p);
        for (std::size_t j = 0; j < comp[s - 1].cols(); ++j)
            c.set_col(j, express(t - 1, mat_mul(n.maps[x - 1], comp[s - 1]).col(j)));
        q.maps.push_back(std::move(c));
    }
    SubQuotient sq;
    sq.rep = q;
    sq.embed_or_project.source = n;
    sq.embed_or_project.target = q;
    for (std::size_t x = 0; x < n.dims.size(); ++x) {
        Matrix prj(q.dims[x], n.dims[x], n.p);
        for (std::size_t j = 0; j < n.dims[x]; ++j) {
            std::vector<std::uint32_t> e(n.dims[x], 0);
            e[j] = 1;
            prj.set_col(j, express(x, e));
        }
        sq.embed_or_project.comps.push_back(std::move(prj));
    }
    return sq;
}

namespace {

Interval reachable_interval(const QuiverAn& q, std::size_t v) {
    int l = int(v), r = int(v);
    while (r < int(q.n) && q.orientation.arrows[r - 1] == ArrowDir::forward) ++r;
    while (l > 1 && q.orientation.arrows[l - 2] == ArrowDir::backward) --l;
    return Interval{l, r};
}

// Value at w of the canonical morphism P_v -> M determined by u at v.
std::vector<std::uint32_t> path_apply(const Representation& m, std::size_t from, std::size_t to,
                                      std::vector<std::uint32_t> u) {
    auto apply = [&](std::size_t pos) {
        Matrix col = from_cols(m.maps[pos - 1].cols(), m.p, {u});
        u = mat_mul(m.maps[pos - 1], col).col(0);
    };
    if (to >= from)
        for (std::size_t pos = from; pos < to; ++pos) apply(pos);
    else
        for (std::size_t pos = from - 1; pos >= to; --pos) apply(pos);
    return u;
}

}  // namespace

Morphism projective_cover(const Representation& m) {
    const auto& q = m.quiver;
    // Top of M: complement of the radical (sum of incoming images) per vertex.
    std::vector<std::vector<std::vector<std::uint32_t>>> tops(q.n);
    for (std::size_t x = 1; x <= q.n; ++x) {
        Matrix incoming(m.dims[x - 1], 0, m.p);
        for (std::size_t pos = 1; pos < q.n; ++pos)
            if (q.target(pos) == x) incoming = hstack(incoming, m.maps[pos - 1]);
        Matrix aug = hstack(column_space_basis(incoming), Matrix::identity(m.dims[x - 1], m.p));
        std::vector<std::size_t> piv;
        row_echelon(aug, &piv);
        std::size_t rad_cols = aug.cols() - m.dims[x - 1];
        for (auto pc : piv)
            if (pc >= rad_cols) {
                std::vector<std::uint32_t> e(m.dims[x - 1], 0);
                e[pc - rad_cols] = 1;
                tops[x - 1].push_back(std::move(e));
            }
    }
    Representation p0 = Representation::zero(q, m.p);
    std::vector<std::vector<std::vector<std::uint32_t>>> cover_cols(q.n);
    Morphism f;
    for (std::size_t v = 1; v <= q.n; ++v) {
        Interval reach = reachable_interval(q, v);
        for (const auto& u : tops[v - 1]) {
            p0 = direct_sum(p0, Representation::interval(q, reach, m.p));
            for (std::size_t w = 1; w <= q.n; ++w)
                if (int(w) >= reach.b && int(w) <= reach.d)
                    cover_cols[w - 1].push_back(path_apply(m, v, w, u));
        }
    }
    f.source = p0;
    f.target = m;
    for (std::size_t w = 1; w <= q.n; ++w)
        f.comps.push_back(from_cols(m.dims[w - 1], m.p, cover_cols[w - 1]));
    return f;
}

long long euler_form(const Representation& m, const Representation& n) {
    long long e = 0;
    for (std::size_t x = 0; x < m.dims.size(); ++x)
        e += (long long)m.dims[x] * (long long)n.dims[x];
    for (std::size_t pos = 1; pos < m.quiver.n; ++pos)
        e -= (long long)m.dims[m.quiver.source(pos) - 1] *
             (long long)n.dims[m.quiver.target(pos) - 1];
    return e;
}

}  // namespace zigzag
