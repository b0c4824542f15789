#include "zigzag/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "zigzag/decompose.hpp"

namespace zigzag {

namespace {

// Kuhn augmenting paths on the doubled graph: unmatched items pair with their
// private deletion slot, and slots pair with each other freely. A perfect
// matching of the doubled graph is exactly a feasible partial matching.
struct Doubled {
    std::size_t nl, nr;
    const BottleneckInstance& inst;
    ExtRat delta;

    std::size_t left_size() const { return nl + nr; }
    std::size_t right_size() const { return nr + nl; }

    bool edge(std::size_t u, std::size_t v) const {
        bool u_real = u < nl, v_real = v < nr;
        if (u_real && v_real) return inst.pair_cost[u][v] <= delta;
        if (u_real && !v_real) return v - nr == u && inst.left_delete[u] <= delta;
        if (!u_real && v_real) return u - nl == v && inst.right_delete[v] <= delta;
        return true;  // deletion slots pair freely
    }
};

bool try_augment(const Doubled& g, std::size_t u, std::vector<int>& match_r,
                 std::vector<bool>& visited) {
    for (std::size_t v = 0; v < g.right_size(); ++v) {
        if (visited[v] || !g.edge(u, v)) continue;
        visited[v] = true;
        if (match_r[v] < 0 || try_augment(g, std::size_t(match_r[v]), match_r, visited)) {
            match_r[v] = int(u);
            return true;
        }
    }
    return false;
}

}  // namespace

bool bottleneck_feasible(const BottleneckInstance& inst, const ExtRat& delta,
                         std::vector<std::pair<std::size_t, std::size_t>>* witness) {
    Doubled g{inst.left_delete.size(), inst.right_delete.size(), inst, delta};
    std::vector<int> match_r(g.right_size(), -1);
    std::size_t matched = 0;
    for (std::size_t u = 0; u < g.left_size(); ++u) {
        std::vector<bool> visited(g.right_size(), false);
        if (try_augment(g, u, match_r, visited)) ++matched;
    }
    if (matched != g.left_size()) return false;
    if (witness) {
        witness->clear();
        for (std::size_t v = 0; v < g.nr; ++v)
            if (match_r[v] >= 0 && std::size_t(match_r[v]) < g.nl)
                witness->push_back({std::size_t(match_r[v]), v});
    }
    return true;
}

BottleneckOutcome bottleneck_solve(const BottleneckInstance& inst) {
    std::set<ExtRat, std::less<ExtRat>> cand;
    cand.insert(ExtRat::integer(0));
    for (const auto& row : inst.pair_cost)
        for (const auto& c : row)
            if (!c.is_infinite()) cand.insert(c);
    for (const auto& c : inst.left_delete)
        if (!c.is_infinite()) cand.insert(c);
    for (const auto& c : inst.right_delete)
        if (!c.is_infinite()) cand.insert(c);
    BottleneckOutcome out;
    for (const auto& c : cand)
        if (bottleneck_feasible(inst, c, &out.pairs)) {
            out.value = c;
            return out;
        }
    out.value = ExtRat::infinity();
    bottleneck_feasible(inst, ExtRat::infinity(), &out.pairs);
    return out;
}

namespace {

int deletion_threshold(const Interval& iv) { return (iv.d - iv.b + 2) / 2; }  // = ceil(len/2)

BottleneckInstance barcode_instance(const std::vector<Interval>& l,
                                    const std::vector<Interval>& r) {
    BottleneckInstance inst;
    inst.pair_cost.assign(l.size(), std::vector<ExtRat>(r.size()));
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            inst.pair_cost[i][j] = ExtRat::integer(
                std::max(std::abs(l[i].b - r[j].b), std::abs(l[i].d - r[j].d)));
    for (const auto& iv : l) inst.left_delete.push_back(ExtRat::integer(deletion_threshold(iv)));
    for (const auto& iv : r) inst.right_delete.push_back(ExtRat::integer(deletion_threshold(iv)));
    return inst;
}

}  // namespace

bool validate_delta_matching(const Barcode& b1, const Barcode& b2, const DeltaMatching& m) {
    const int delta = m.delta;
    if (delta < 0) return false;
    std::map<Interval, int> used1, used2;
    for (const auto& [x, y] : m.pairs) {
        if (!(y.b - delta <= x.b && x.b <= x.d && x.d <= y.d + delta)) return false;
        if (!(x.b - delta <= y.b && y.b <= y.d && y.d <= x.d + delta)) return false;
        used1[x]++;
        used2[y]++;
    }
    for (const auto& [iv, c] : used1) {
        auto it = b1.bars.find(iv);
        if (it == b1.bars.end() || c > it->second) return false;
    }
    for (const auto& [iv, c] : used2) {
        auto it = b2.bars.find(iv);
        if (it == b2.bars.end() || c > it->second) return false;
    }
    // Coverage of B_{2 delta} on both sides.
    for (const auto& [iv, c] : b1.bars)
        if (iv.d - iv.b >= 2 * delta && used1[iv] != c) return false;
    for (const auto& [iv, c] : b2.bars)
        if (iv.d - iv.b >= 2 * delta && used2[iv] != c) return false;
    return true;
}

std::optional<DeltaMatching> delta_matching_exists(const Barcode& b1, const Barcode& b2,
                                                   int delta) {
    if (delta < 0) return std::nullopt;
    auto l = b1.expand(), r = b2.expand();
    BottleneckInstance inst = barcode_instance(l, r);
    std::vector<std::pair<std::size_t, std::size_t>> witness;
    if (!bottleneck_feasible(inst, ExtRat::integer(delta), &witness)) return std::nullopt;
    DeltaMatching m;
    m.delta = delta;
    for (const auto& [i, j] : witness) m.pairs.push_back({l[i], r[j]});
    return m;
}

ExtRat bottleneck_distance(const Barcode& b1, const Barcode& b2) {
    BottleneckInstance inst = barcode_instance(b1.expand(), b2.expand());
    return bottleneck_solve(inst).value;
}

ExtRat interval_interleaving_distance(const std::optional<Interval>& i1,
                                      const std::optional<Interval>& i2) {
    auto half_life = [](const Interval& iv) { return ExtRat::integer((iv.length() + 1) / 2); };
    if (!i1 && !i2) return ExtRat::integer(0);
    if (!i1) return half_life(*i2);
    if (!i2) return half_life(*i1);
    ExtRat translate = ExtRat::integer(
        std::max(std::abs(i1->b - i2->b), std::abs(i1->d - i2->d)));
    return min(translate, max(half_life(*i1), half_life(*i2)));
}

std::uint64_t default_oracle_cap() {
    if (const char* env = std::getenv("ZZM_ORACLE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 20;
}

namespace {

Morphism combine(const std::vector<Morphism>& basis, std::uint64_t bits, const Representation& m,
                 const Representation& n) {
    Morphism f = zero_morphism(m, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (bits >> k & 1)
            for (std::size_t x = 0; x < f.comps.size(); ++x)
                f.comps[x] = mat_add(f.comps[x], basis[k].comps[x]);
    return f;
}

bool comps_equal(const Morphism& a, const Morphism& b) {
    for (std::size_t x = 0; x < a.comps.size(); ++x)
        if (!(a.comps[x] == b.comps[x])) return false;
    return true;
}

}  // namespace

bool brute_force_interleaved(const Representation& m, const Representation& n, int delta,
                             std::uint64_t max_pairs) {
    if (m.p != 2 || n.p != 2)
        throw std::invalid_argument("brute_force_interleaved: GF(2) only");
    if (!(m.quiver == n.quiver))
        throw std::invalid_argument("brute_force_interleaved: quiver mismatch");
    if (delta < 0) throw std::invalid_argument("brute_force_interleaved: delta must be >= 0");
    Representation nd = shift(n, delta), md = shift(m, delta);
    auto fb = hom_basis(m, nd);
    auto gb = hom_basis(n, md);
    if (fb.size() + gb.size() >= 63 ||
        (1ull << (fb.size() + gb.size())) > max_pairs)
        throw BudgetExceeded("interleaving oracle: enumeration budget exceeded");
    Morphism phi_m = transition(m, 2 * delta);
    Morphism phi_n = transition(n, 2 * delta);
    for (std::uint64_t cf = 0; cf < (1ull << fb.size()); ++cf) {
        Morphism f = combine(fb, cf, m, nd);
        Morphism fd = shift(f, delta);
        for (std::uint64_t cg = 0; cg < (1ull << gb.size()); ++cg) {
            Morphism g = combine(gb, cg, n, md);
            if (comps_equal(compose(shift(g, delta), f), phi_m) &&
                comps_equal(compose(fd, g), phi_n))
                return true;
        }
    }
    return false;
}

int min_interleaving_delta_oracle(const Representation& m, const Representation& n,
                                  std::uint64_t max_pairs) {
    const int bound = int(m.quiver.n + 1) / 2;
    for (int delta = 0; delta <= bound; ++delta)
        if (brute_force_interleaved(m, n, delta, max_pairs)) return delta;
    throw std::logic_error("min_interleaving_delta_oracle: no delta found within bound");
}

ExtRat interleaving_distance(const Representation& m, const Representation& n) {
    if (!m.quiver.orientation.is_equioriented())
        throw std::domain_error("interleaving_distance: equioriented modules expected");
    return bottleneck_distance(decompose(m), decompose(n));
}

namespace {

// Canonical matching between two bar families carrying a fixed endpoint,
// ordered by reverse inclusion (longer first). Returns index pairs.
std::vector<std::pair<std::size_t, std::size_t>> canonical_pairs(
    std::vector<std::size_t> a, std::vector<std::size_t> b,
    const std::vector<Interval>& bars_a, const std::vector<Interval>& bars_b, bool by_birth) {
    auto cmp_a = [&](std::size_t i, std::size_t j) {
        const Interval &x = bars_a[i], &y = bars_a[j];
        if (by_birth) return x.d != y.d ? x.d > y.d : i < j;  // fixed birth: longest death first
        return x.b != y.b ? x.b < y.b : i < j;                // fixed death: earliest birth first
    };
    auto cmp_b = [&](std::size_t i, std::size_t j) {
        const Interval &x = bars_b[i], &y = bars_b[j];
        if (by_birth) return x.d != y.d ? x.d > y.d : i < j;
        return x.b != y.b ? x.b < y.b : i < j;
    };
    std::sort(a.begin(), a.end(), cmp_a);
    std::sort(b.begin(), b.end(), cmp_b);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) out.push_back({a[k], b[k]});
    return out;
}

}  // namespace

BarMatching induced_matching(const Morphism& f) {
    if (!validate_morphism(f)) throw std::invalid_argument("induced_matching: not a morphism");
    if (!f.source.quiver.orientation.is_equioriented())
        throw std::domain_error("induced_matching: equioriented modules expected");
    SubQuotient im = image(f);
    Barcode bm = decompose(f.source), bi = decompose(im.rep), bn = decompose(f.target);
    auto mv = bm.expand(), iv = bi.expand(), nv = bn.expand();

    // Surjective part M ->> Im f: canonical matchings within each birth family.
    std::vector<int> m_to_i(mv.size(), -1);
    {
        std::map<int, std::vector<std::size_t>> fam_m, fam_i;
        for (std::size_t k = 0; k < mv.size(); ++k) fam_m[mv[k].b].push_back(k);
        for (std::size_t k = 0; k < iv.size(); ++k) fam_i[iv[k].b].push_back(k);
        for (const auto& [b, fm] : fam_m) {
            auto fi = fam_i.count(b) ? fam_i[b] : std::vector<std::size_t>{};
            for (const auto& [x, y] : canonical_pairs(fm, fi, mv, iv, true)) m_to_i[x] = int(y);
        }
    }
    // Injective part Im f -> N: canonical matchings within each death family.
    std::vector<int> i_to_n(iv.size(), -1);
    {
        std::map<int, std::vector<std::size_t>> fam_i, fam_n;
        for (std::size_t k = 0; k < iv.size(); ++k) fam_i[iv[k].d].push_back(k);
        for (std::size_t k = 0; k < nv.size(); ++k) fam_n[nv[k].d].push_back(k);
        for (const auto& [d, fi] : fam_i) {
            auto fn = fam_n.count(d) ? fam_n[d] : std::vector<std::size_t>{};
            for (const auto& [x, y] : canonical_pairs(fi, fn, iv, nv, false)) i_to_n[x] = int(y);
        }
    }
    BarMatching out;
    out.source = bm;
    out.target = bn;
    for (std::size_t k = 0; k < mv.size(); ++k)
        if (m_to_i[k] >= 0 && i_to_n[m_to_i[k]] >= 0)
            out.pairs.push_back({mv[k], nv[i_to_n[m_to_i[k]]]});
    return out;
}

ImtOutcome verify_imt(const Morphism& f, int delta) {
    if (!validate_morphism(f)) throw std::invalid_argument("verify_imt: not a morphism");
    Representation ker = kernel(f).rep, cok = cokernel(f).rep;
    if (!is_delta_trivial(ker, 2 * delta) || !is_delta_trivial(cok, 2 * delta))
        return ImtOutcome::precondition_violated;
    const std::size_t n = f.source.quiver.n;
    const std::size_t l = n + 2 * std::size_t(delta);
    Morphism fe = embed_at(f, l, std::size_t(delta));
    BarMatching bf = induced_matching(fe);
    Barcode b_mdelta = decompose(shift(fe.source, delta));
    // r^delta is bijective with this placement; compose B(f) with it.
    DeltaMatching dm;
    dm.delta = delta;
    for (const auto& [x, y] : bf.pairs)
        dm.pairs.push_back({Interval{x.b - delta, x.d - delta}, y});
    return validate_delta_matching(b_mdelta, bf.target, dm) ? ImtOutcome::holds
                                                            : ImtOutcome::fails;
}

}  // namespace zigzag
