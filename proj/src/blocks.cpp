#include "zigzag/blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "zigzag/decompose.hpp"
#include "zigzag/distances.hpp"

namespace zigzag {

std::string to_string(ZZKind k) {
    switch (k) {
        case ZZKind::closed: return "closed";
        case ZZKind::right_open: return "right_open";
        case ZZKind::left_open: return "left_open";
        case ZZKind::open: return "open";
    }
    return "?";
}

ZZKind zz_kind_from_string(const std::string& s) {
    if (s == "closed") return ZZKind::closed;
    if (s == "right_open") return ZZKind::right_open;
    if (s == "left_open") return ZZKind::left_open;
    if (s == "open") return ZZKind::open;
    throw std::invalid_argument("unknown zigzag interval kind: " + s);
}

ZZInterval make_zz(long long b, long long d, ZZKind kind) {
    if (kind == ZZKind::closed ? b > d : b >= d)
        throw std::invalid_argument("zigzag interval endpoints out of order");
    return ZZInterval{b, d, kind};
}

std::string to_string(const ZZInterval& z) {
    bool lo = z.kind == ZZKind::closed || z.kind == ZZKind::right_open;
    bool hi = z.kind == ZZKind::closed || z.kind == ZZKind::left_open;
    return std::string(lo ? "[" : "(") + std::to_string(z.b) + "," + std::to_string(z.d) +
           (hi ? "]" : ")");
}

std::string to_string(BlockType t) {
    switch (t) {
        case BlockType::bb_minus: return "bb-";
        case BlockType::db_plus: return "db+";
        case BlockType::hb: return "hb";
        case BlockType::vb: return "vb";
    }
    return "?";
}

BlockType block_type_of(ZZKind k) {
    switch (k) {
        case ZZKind::closed: return BlockType::bb_minus;
        case ZZKind::open: return BlockType::db_plus;
        case ZZKind::right_open: return BlockType::hb;
        case ZZKind::left_open: return BlockType::vb;
    }
    throw std::logic_error("block_type_of: bad kind");
}

ZZInterval mu1(const Interval& iv) {
    const int s = iv.b, t = iv.d;
    if (s % 2 == 1 && t % 2 == 1) return make_zz((s + 1) / 2, (t + 1) / 2, ZZKind::closed);
    if (s % 2 == 1) return make_zz((s + 1) / 2, (t + 2) / 2, ZZKind::right_open);
    if (t % 2 == 1) return make_zz(s / 2, (t + 1) / 2, ZZKind::left_open);
    return make_zz(s / 2, (t + 2) / 2, ZZKind::open);
}

ZZInterval mu2(const Interval& iv) {
    const int s = iv.b, t = iv.d;
    if (s % 2 == 0 && t % 2 == 0) return make_zz(s / 2, t / 2, ZZKind::closed);
    if (s % 2 == 0) return make_zz(s / 2, (t + 1) / 2, ZZKind::right_open);
    if (t % 2 == 0) return make_zz((s - 1) / 2, t / 2, ZZKind::left_open);
    return make_zz((s - 1) / 2, (t + 1) / 2, ZZKind::open);
}

ZigzagEmbedding zigzag_embedding(std::size_t n, const Orientation& a) {
    if (a.arrows.size() != n - 1) throw std::invalid_argument("orientation length mismatch");
    ZigzagEmbedding e;
    e.n = n;
    e.a = a;
    // Backward arrows occupy odd slots, forward ones even slots; fill the gaps
    // with duplicated vertices.
    std::vector<std::size_t> slot(n - 1);
    std::size_t prev = 0;
    for (std::size_t j = 0; j < n - 1; ++j) {
        bool wants_odd = a.arrows[j] == ArrowDir::backward;
        std::size_t q = prev + 1;
        if ((q % 2 == 1) != wants_odd) ++q;
        slot[j] = q;
        prev = q;
    }
    e.m = prev + 1;
    e.vertex_of_position.assign(e.m, 1);
    for (std::size_t q = 1; q <= e.m; ++q) {
        std::size_t v = 1;
        for (std::size_t j = 0; j < n - 1; ++j)
            if (slot[j] < q) ++v;
        e.vertex_of_position[q - 1] = v;
    }
    return e;
}

Interval ZigzagEmbedding::embed(const Interval& iv) const {
    int lo = 0, hi = 0;
    for (std::size_t q = 1; q <= m; ++q) {
        std::size_t v = vertex_of_position[q - 1];
        if (int(v) >= iv.b && int(v) <= iv.d) {
            if (lo == 0) lo = int(q);
            hi = int(q);
        }
    }
    return Interval{lo, hi};
}

Representation ZigzagEmbedding::embed(const Representation& rep) const {
    if (rep.quiver.n != n || !(rep.quiver.orientation == a))
        throw std::invalid_argument("zigzag embedding: module/orientation mismatch");
    QuiverAn target(m, Orientation::zigzag_z1(m));
    Representation out;
    out.quiver = target;
    out.p = rep.p;
    for (std::size_t q = 1; q <= m; ++q) out.dims.push_back(rep.dims[vertex_of_position[q - 1] - 1]);
    for (std::size_t q = 1; q < m; ++q) {
        std::size_t vl = vertex_of_position[q - 1], vr = vertex_of_position[q];
        if (vl == vr) {
            out.maps.push_back(Matrix::identity(rep.dims[vl - 1], rep.p));
        } else {
            // Original arrow between vl and vr = vl + 1; direction matches the
            // alternation by construction.
            out.maps.push_back(rep.maps[vl - 1]);
        }
    }
    out.check_shapes();
    return out;
}

ExtRat block_deletion_cost(const ZZInterval& z) {
    switch (z.kind) {
        case ZZKind::closed: return ExtRat::infinity();
        case ZZKind::right_open:
        case ZZKind::left_open: return ExtRat(z.d - z.b, 2);
        case ZZKind::open: return ExtRat(z.d - z.b, 4);
    }
    throw std::logic_error("block_deletion_cost: bad kind");
}

ExtRat block_pair_cost(const ZZInterval& x, const ZZInterval& y) {
    ExtRat apart = max(block_deletion_cost(x), block_deletion_cost(y));
    if (x.kind != y.kind) return apart;
    ExtRat translate = ExtRat::integer(std::max(std::llabs(x.b - y.b), std::llabs(x.d - y.d)));
    return min(translate, apart);
}

ExtRat block_distance(const std::vector<ZZInterval>& x, const std::vector<ZZInterval>& y) {
    BottleneckInstance inst;
    inst.pair_cost.assign(x.size(), std::vector<ExtRat>(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) inst.pair_cost[i][j] = block_pair_cost(x[i], y[j]);
    for (const auto& z : x) inst.left_delete.push_back(block_deletion_cost(z));
    for (const auto& z : y) inst.right_delete.push_back(block_deletion_cost(z));
    return bottleneck_solve(inst).value;
}

std::vector<ZZInterval> zz_multiset(const Representation& purely_zigzag) {
    if (!purely_zigzag.quiver.orientation.is_z1())
        throw std::invalid_argument("zz_multiset: expected the sink-first alternating orientation");
    std::vector<ZZInterval> out;
    for (const auto& iv : decompose(purely_zigzag).expand()) out.push_back(mu1(iv));
    std::sort(out.begin(), out.end());
    return out;
}

ExtRat block_distance_a(const Representation& m, const Representation& n) {
    if (!(m.quiver == n.quiver) || m.p != n.p)
        throw std::invalid_argument("block_distance_a: quiver or field mismatch");
    ZigzagEmbedding e = zigzag_embedding(m.quiver.n, m.quiver.orientation);
    auto lift = [&](const Representation& rep) {
        std::vector<ZZInterval> zz;
        for (const auto& iv : decompose(rep).expand()) zz.push_back(mu1(e.embed(iv)));
        std::sort(zz.begin(), zz.end());
        return zz;
    };
    return block_distance(lift(m), lift(n));
}

void SheafObject::normalize() { std::sort(bars.begin(), bars.end()); }

bool SheafObject::has_open_bar() const {
    return std::any_of(bars.begin(), bars.end(),
                       [](const SheafBar& b) { return !b.lo_closed && !b.hi_closed; });
}

SheafBar theta_bar(const ZZInterval& z) {
    SheafBar b;
    b.lo = z.b;
    b.hi = z.d;
    b.lo_closed = z.kind == ZZKind::closed || z.kind == ZZKind::right_open;
    b.hi_closed = z.kind == ZZKind::closed || z.kind == ZZKind::left_open;
    b.degree = 0;
    return b;
}

ZZInterval theta_bar_inverse(const SheafBar& b) {
    ZZKind kind;
    if (b.lo_closed && b.hi_closed)
        kind = ZZKind::closed;
    else if (b.lo_closed)
        kind = ZZKind::right_open;
    else if (b.hi_closed)
        kind = ZZKind::left_open;
    else
        kind = ZZKind::open;
    return make_zz(b.lo, b.hi, kind);
}

SheafObject theta(const std::vector<ZZInterval>& zz) {
    SheafObject f;
    for (const auto& z : zz) f.bars.push_back(theta_bar(z));
    f.normalize();
    return f;
}

std::vector<ZZInterval> theta_inverse(const SheafObject& f) {
    std::vector<ZZInterval> zz;
    for (const auto& b : f.bars) {
        if (b.degree != 0)
            throw std::invalid_argument("theta_inverse: expected an ungraded sheaf object");
        zz.push_back(theta_bar_inverse(b));
    }
    std::sort(zz.begin(), zz.end());
    return zz;
}

ConvolutionValue convolution_nd(const SheafObject& f, const SheafObject& g) {
    ConvolutionValue v;
    v.value = block_distance(theta_inverse(f), theta_inverse(g));
    v.open_summand_present = f.has_open_bar() || g.has_open_bar();
    return v;
}

SheafObject theta_upper(const GradedBarcode& g) {
    SheafObject f;
    for (const auto& [deg, bc] : g.degrees)
        for (const auto& [iv, mult] : bc.bars)
            for (int k = 0; k < mult; ++k) {
                SheafBar b;
                b.lo = iv.b;
                b.hi = iv.d + 1;
                b.lo_closed = true;
                b.hi_closed = false;
                b.degree = deg;
                f.bars.push_back(b);
            }
    f.normalize();
    return f;
}

GradedBarcode theta_upper_inverse(const SheafObject& f, std::size_t m) {
    GradedBarcode g;
    for (const auto& b : f.bars) {
        if (!b.lo_closed || b.hi_closed)
            throw std::invalid_argument("upper fragment violation: bar " + std::to_string(b.lo) +
                                        ".." + std::to_string(b.hi) +
                                        " is not closed-open");
        if (b.lo < 1 || b.hi > (long long)m + 1 || b.lo >= b.hi)
            throw std::invalid_argument("upper fragment violation: bar [" + std::to_string(b.lo) +
                                        "," + std::to_string(b.hi) + ") outside [1," +
                                        std::to_string(m + 1) + "]");
        g.add(b.degree, Interval{int(b.lo), int(b.hi) - 1});
    }
    return g;
}

ExtRat convolution_upper(const SheafObject& f, const SheafObject& g, std::size_t m) {
    return derived_interleaving_distance(theta_upper_inverse(f, m), theta_upper_inverse(g, m), m);
}

namespace {

std::string object_name(const std::optional<Interval>& iv) {
    return iv ? to_string(*iv) : "0";
}

std::string relation_of(const ExtRat& induced, const ExtRat& block) {
    if (induced == block) return "=";
    return block < induced ? "<" : ">";  // relation of d_block to d_induced
}

}  // namespace

ComparisonReport comparison_report(std::size_t n) {
    if (n % 2 == 0) throw std::invalid_argument("comparison_report: n must be odd");
    const Orientation a = Orientation::zigzag_z1(n);
    const QuiverAn q(n, a);
    ComparisonReport rep;
    rep.n = n;

    std::vector<std::optional<Interval>> objects;
    for (int b = 1; b <= int(n); ++b)
        for (int d = b; d <= int(n); ++d) objects.push_back(Interval{b, d});
    objects.push_back(std::nullopt);

    auto rep_of = [&](const std::optional<Interval>& iv) {
        return iv ? Representation::interval(q, *iv, 2) : Representation::zero(q, 2);
    };
    auto zz_of = [&](const std::optional<Interval>& iv) {
        std::vector<ZZInterval> z;
        if (iv) z.push_back(mu1(*iv));
        return z;
    };
    auto class_of = [&](const std::optional<Interval>& iv) {
        return iv ? to_string(purely_zigzag_class(*iv)) : std::string("0");
    };
    auto in_x = [](ZigzagClass c) { return c == ZigzagClass::x_o || c == ZigzagClass::x_oc; };

    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = i; j < objects.size(); ++j) {
            if (!objects[i] && !objects[j]) continue;
            ComparisonRow row;
            row.lhs = objects[i];
            row.rhs = objects[j];
            row.class_lhs = class_of(objects[i]);
            row.class_rhs = class_of(objects[j]);
            row.d_induced = induced_distance(rep_of(objects[i]), rep_of(objects[j]));
            row.d_block = block_distance(zz_of(objects[i]), zz_of(objects[j]));
            row.relation = relation_of(row.d_induced, row.d_block);
            rep.rows.push_back(row);

            auto note = [&](const std::string& family) {
                rep.violations.push_back(family + " fails at " + object_name(row.lhs) + " vs " +
                                         object_name(row.rhs));
            };
            if (objects[i] && objects[j]) {
                ZigzagClass ci = purely_zigzag_class(*objects[i]);
                ZigzagClass cj = purely_zigzag_class(*objects[j]);
                bool same_nonclosed = ci == cj && ci != ZigzagClass::y_c;
                bool co_vs_x = (ci == ZigzagClass::y_co && in_x(cj)) ||
                               (cj == ZigzagClass::y_co && in_x(ci));
                if ((same_nonclosed || co_vs_x) && !(row.d_block <= row.d_induced))
                    note("pairwise upper bound");
                if ((ci == ZigzagClass::y_c || cj == ZigzagClass::y_c) &&
                    !(row.d_induced <= row.d_block))
                    note("closed-class lower bound");
                bool mixed_cell = (ci == ZigzagClass::x_oc && cj == ZigzagClass::x_o) ||
                                  (ci == ZigzagClass::x_o && cj == ZigzagClass::x_oc);
                if (mixed_cell) {
                    if (row.d_block > row.d_induced && !rep.mixed_cell_greater)
                        rep.mixed_cell_greater = row;
                    if (row.d_block < row.d_induced && !rep.mixed_cell_less)
                        rep.mixed_cell_less = row;
                }
            } else {
                const auto& iv = objects[i] ? objects[i] : objects[j];
                ZigzagClass c = purely_zigzag_class(*iv);
                if (c == ZigzagClass::y_c) {
                    if (!(row.d_induced < row.d_block) || !row.d_block.is_infinite())
                        note("closed-bar deletion");
                } else {
                    if (!(row.d_block <= row.d_induced)) note("deletion upper bound");
                }
            }
        }
    return rep;
}

std::size_t smallest_incomparable_n(std::size_t limit) {
    for (std::size_t n = 3; n <= limit; n += 2) {
        ComparisonReport rep = comparison_report(n);
        if (rep.mixed_cell_greater && rep.mixed_cell_less) return n;
    }
    throw std::logic_error("no incomparable cell found below the limit");
}

}  // namespace zigzag
