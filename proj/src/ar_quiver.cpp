#include "zigzag/ar_quiver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace zigzag {

Interval projective_interval(const QuiverAn& q, std::size_t v) {
    int l = int(v), r = int(v);
    while (r < int(q.n) && q.orientation.arrows[r - 1] == ArrowDir::forward) ++r;
    while (l > 1 && q.orientation.arrows[l - 2] == ArrowDir::backward) --l;
    return Interval{l, r};
}

Interval injective_interval(const QuiverAn& q, std::size_t v) {
    int l = int(v), r = int(v);
    while (r < int(q.n) && q.orientation.arrows[r - 1] == ArrowDir::backward) ++r;
    while (l > 1 && q.orientation.arrows[l - 2] == ArrowDir::forward) --l;
    return Interval{l, r};
}

bool ARQuiver::is_projective(const Interval& iv) const {
    return std::find(projectives.begin(), projectives.end(), iv) != projectives.end();
}

bool ARQuiver::is_injective(const Interval& iv) const {
    return std::find(injectives.begin(), injectives.end(), iv) != injectives.end();
}

std::vector<Interval> ARQuiver::mesh_middle(const Interval& x) const {
    std::vector<Interval> pred;
    for (const auto& [a, b] : arrows)
        if (b == x) pred.push_back(a);
    return pred;
}

std::vector<Interval> ARQuiver::successors(const Interval& x) const {
    std::vector<Interval> succ;
    for (const auto& [a, b] : arrows)
        if (a == x) succ.push_back(b);
    return succ;
}

namespace {

std::vector<int> dim_vector(const Interval& iv, std::size_t n) {
    std::vector<int> d(n, 0);
    for (int x = iv.b; x <= iv.d; ++x) d[x - 1] = 1;
    return d;
}

Interval interval_of_dim_vector(const std::vector<int>& d) {
    int b = 0, e = 0;
    for (std::size_t x = 0; x < d.size(); ++x) {
        if (d[x] == 1) {
            if (b == 0) b = int(x) + 1;
            e = int(x) + 1;
        } else if (d[x] != 0) {
            throw std::logic_error("knitting produced a non-interval dimension vector");
        }
    }
    if (b == 0) throw std::logic_error("knitting produced the zero dimension vector");
    for (int x = b; x <= e; ++x)
        if (d[x - 1] != 1) throw std::logic_error("knitting produced a non-interval dimension vector");
    return Interval{b, e};
}

}  // namespace

// Knitting: start from the projectives with the radical arrows, then repeatedly
// fire tau^{-1} at a vertex once all its outgoing arrows are known. Dimension
// vectors are additive over each mesh, which pins down tau^{-1} for interval
// modules.
ARQuiver build_ar_quiver(const QuiverAn& q) {
    ARQuiver g;
    g.quiver = q;
    const std::size_t n = q.n;
    g.projectives.resize(n);
    g.injectives.resize(n);
    for (std::size_t v = 1; v <= n; ++v) {
        g.projectives[v - 1] = projective_interval(q, v);
        g.injectives[v - 1] = injective_interval(q, v);
    }

    std::set<Interval> present(g.projectives.begin(), g.projectives.end());
    if (present.size() != n) throw std::logic_error("projectives are not pairwise distinct");

    // Radical arrows: rad P_v = (+) P_w over arrows v -> w.
    for (std::size_t pos = 1; pos < n; ++pos) {
        std::size_t s = q.source(pos), t = q.target(pos);
        g.arrows.insert({g.projectives[t - 1], g.projectives[s - 1]});
    }

    std::map<Interval, std::vector<Interval>> out_arrows;  // known so far
    std::map<Interval, int> pending;  // non-injective in-sources not yet fired
    std::set<Interval> fired;
    auto injective = [&](const Interval& iv) { return g.is_injective(iv); };

    for (const auto& [a, b] : g.arrows) out_arrows[a].push_back(b);
    for (const auto& p : g.projectives) {
        int cnt = 0;
        for (const auto& [a, b] : g.arrows)
            if (b == p && !injective(a)) ++cnt;
        pending[p] = cnt;
    }

    std::deque<Interval> queue;
    for (const auto& p : g.projectives)
        if (!injective(p) && pending[p] == 0) queue.push_back(p);

    while (!queue.empty()) {
        Interval x = queue.front();
        queue.pop_front();
        if (fired.count(x)) continue;
        fired.insert(x);
        // Mesh 0 -> x -> E -> tau^{-1}(x) -> 0 with E the targets of x's arrows.
        std::vector<int> d(n, 0);
        for (const auto& t : out_arrows[x]) {
            auto dt = dim_vector(t, n);
            for (std::size_t i = 0; i < n; ++i) d[i] += dt[i];
        }
        auto dx = dim_vector(x, n);
        for (std::size_t i = 0; i < n; ++i) d[i] -= dx[i];
        Interval y = interval_of_dim_vector(d);
        if (present.count(y)) throw std::logic_error("knitting revisited a vertex");
        present.insert(y);
        g.tau[y] = x;
        g.tau_inv[x] = y;
        pending[y] = 0;
        std::vector<Interval> targets = out_arrows[x];
        for (const auto& t : targets) {
            g.arrows.insert({t, y});
            out_arrows[t].push_back(y);
            if (!injective(t) && !fired.count(t)) ++pending[y];
        }
        if (pending[y] == 0 && !injective(y)) queue.push_back(y);
        // x fired: release its successors that were waiting on it.
        for (const auto& b : targets)
            if (--pending[b] == 0 && !injective(b) && !fired.count(b)) queue.push_back(b);
    }

    if (present.size() != n * (n + 1) / 2)
        throw std::logic_error("knitting did not reach all intervals");
    g.vertices.assign(present.begin(), present.end());
    return g;
}

bool check_mesh_additivity(const ARQuiver& g) {
    const std::size_t n = g.quiver.n;
    for (const auto& [y, x] : g.tau) {
        auto d = dim_vector(x, n);
        auto dy = dim_vector(y, n);
        for (std::size_t i = 0; i < n; ++i) d[i] += dy[i];
        std::vector<int> mid(n, 0);
        for (const auto& e : g.mesh_middle(y)) {
            auto de = dim_vector(e, n);
            for (std::size_t i = 0; i < n; ++i) mid[i] += de[i];
        }
        if (d != mid) return false;
    }
    return true;
}

std::vector<std::vector<Interval>> tau_orbits(const ARQuiver& g) {
    std::vector<std::vector<Interval>> orbits;
    for (const auto& p : g.projectives) {
        std::vector<Interval> orbit{p};
        Interval cur = p;
        while (g.tau_inv.count(cur)) {
            cur = g.tau_inv.at(cur);
            orbit.push_back(cur);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<Section> enumerate_sections(const ARQuiver& g) {
    if (!g.quiver.orientation.is_equioriented())
        throw std::domain_error("enumerate_sections: equioriented quiver expected");
    auto orbits = tau_orbits(g);
    const std::size_t n = g.quiver.n;
    std::vector<Section> out;
    Section cur;
    cur.members.resize(n);
    cur.sigma.arrows.resize(n ? n - 1 : 0);
    // X_1 = P_1 is the unique member of its orbit; each subsequent orbit
    // representative must be joined to the previous one by a single arrow.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (const auto& cand : orbits[i]) {
            bool fwd = g.has_arrow(cur.members[i - 1], cand);
            bool bwd = g.has_arrow(cand, cur.members[i - 1]);
            if (!fwd && !bwd) continue;
            cur.members[i] = cand;
            cur.sigma.arrows[i - 1] = fwd ? ArrowDir::forward : ArrowDir::backward;
            self(self, i + 1);
        }
    };
    if (orbits[0].size() != 1) throw std::logic_error("orbit of P_1 is not a singleton");
    cur.members[0] = orbits[0][0];
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

TiltingModule tilting_for_orientation(std::size_t n, const Orientation& a) {
    QuiverAn equi(n, Orientation::equioriented(n));
    ARQuiver g = build_ar_quiver(equi);
    std::vector<Section> matches;
    for (const auto& s : enumerate_sections(g)) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (flip(s.sigma.arrows[i]) != a.arrows[i]) {
                ok = false;
                break;
            }
        if (ok) matches.push_back(s);
    }
    if (matches.empty()) throw std::logic_error("no section matches the orientation");
    // Expected unique; a deterministic tie-break keeps the result well-defined.
    std::sort(matches.begin(), matches.end());
    TiltingModule t;
    t.section = matches.front();
    t.summands = matches.front().members;
    return t;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
    long long h = (long long)hom_dim(m, n);
    long long e = h - euler_form(m, n);
    if (e < 0) throw std::logic_error("ext1_dim: negative value");
    return std::size_t(e);
}

bool verify_classical_tilting(const TiltingModule& t, std::size_t n, std::uint32_t p) {
    // (3) exactly n pairwise non-isomorphic indecomposable summands.
    if (t.summands.size() != n) return false;
    std::set<Interval> distinct(t.summands.begin(), t.summands.end());
    if (distinct.size() != n) return false;
    // (1) projective dimension <= 1 holds for every module here.
    // (2) Ext^1(T, T) = 0, additively over the summands.
    QuiverAn equi(n, Orientation::equioriented(n));
    for (const auto& x : t.summands)
        for (const auto& y : t.summands) {
            auto rx = Representation::interval(equi, x, p);
            auto ry = Representation::interval(equi, y, p);
            if (ext1_dim(rx, ry) != 0) return false;
        }
    return true;
}

}  // namespace zigzag
