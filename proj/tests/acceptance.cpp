// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "zigzag/blocks.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/derived.hpp"
#include "zigzag/distances.hpp"
#include "zigzag/randomgen.hpp"
#include "zigzag/transport.hpp"

using namespace zigzag;

namespace {

struct Check {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond && notes.size() < 10) notes.push_back(what);
        ok = ok && cond;
    }
};

std::vector<Orientation> all_orientations(std::size_t n) {
    std::vector<Orientation> out;
    for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
        Orientation a;
        for (std::size_t i = 0; i + 1 < n; ++i)
            a.arrows.push_back(bits >> i & 1 ? ArrowDir::backward : ArrowDir::forward);
        out.push_back(a);
    }
    return out;
}

std::vector<std::optional<Interval>> intervals_and_zero(std::size_t n) {
    std::vector<std::optional<Interval>> out;
    for (int b = 1; b <= int(n); ++b)
        for (int d = b; d <= int(n); ++d) out.push_back(Interval{b, d});
    out.push_back(std::nullopt);
    return out;
}

void criterion_reference_values(Check& c) {
    const std::size_t n = 7;
    QuiverAn q(n, Orientation::zigzag_z1(n));
    Representation i27 = Representation::interval(q, {2, 7}, 2);
    Representation i26 = Representation::interval(q, {2, 6}, 2);
    Representation i22 = Representation::interval(q, {2, 2}, 2);

    c.require(mu1({2, 7}) == make_zz(1, 4, ZZKind::left_open), "mu1 of I[2,7]");
    c.require(mu1({2, 6}) == make_zz(1, 4, ZZKind::open), "mu1 of I[2,6]");
    c.require(mu1({2, 2}) == make_zz(1, 2, ZZKind::open), "mu1 of I[2,2]");

    c.require(block_distance({mu1({2, 7})}, {mu1({2, 6})}) == ExtRat(3, 2),
              "d_BL((1,4],(1,4)) = 3/2");
    c.require(induced_distance(i27, i26) == ExtRat::integer(1), "d^z1(I[2,7],I[2,6]) = 1");
    c.require(block_distance({mu1({2, 7})}, {mu1({2, 2})}) == ExtRat(3, 2),
              "d_BL((1,4],(1,2)) = 3/2");
    c.require(induced_distance(i27, i22) == ExtRat::integer(3), "d^z1(I[2,7],I[2,2]) = 3");
}

void criterion_embedding_values(Check& c) {
    // vertex 1 a source
    for (const char* s : {"ffb", "fbf", "ff"}) {
        QuiverAn q(std::string(s).size() + 1, Orientation::parse(s));
        c.require(block_distance_a(Representation::interval(q, {1, 1}, 2),
                                   Representation::zero(q, 2)) == ExtRat(1, 2),
                  "half-open deletion cost over " + std::string(s));
    }
    // 1 <- 2 <- 3 ...
    QuiverAn back(3, Orientation::parse("bb"));
    c.require(block_distance_a(Representation::interval(back, {2, 2}, 2),
                               Representation::zero(back, 2)) == ExtRat(1, 2),
              "left-open deletion cost over bb");
    // A closed-type bar survives deletion in one metric but not the other.
    QuiverAn q(4, Orientation::parse("ffb"));
    Representation closed_bar = Representation::interval(q, {1, 3}, 2);
    Representation zero = Representation::zero(q, 2);
    c.require(zigzag_embedding(4, q.orientation).embed(Interval{1, 3}) == Interval{1, 5},
              "embedded support");
    c.require(block_distance_a(closed_bar, zero).is_infinite(), "closed bar never deleted");
    c.require(!induced_distance(closed_bar, zero).is_infinite(), "induced distance stays finite");
}

void criterion_isometry_oracle(Check& c) {
    for (std::size_t n = 1; n <= 6; ++n) {
        QuiverAn q(n, Orientation::equioriented(n));
        auto objs = intervals_and_zero(n);
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = i; j < objs.size(); ++j) {
                Representation mi = objs[i] ? Representation::interval(q, *objs[i], 2)
                                            : Representation::zero(q, 2);
                Representation mj = objs[j] ? Representation::interval(q, *objs[j], 2)
                                            : Representation::zero(q, 2);
                int oracle = min_interleaving_delta_oracle(mi, mj);
                c.require(bottleneck_distance(decompose(mi), decompose(mj)) ==
                              ExtRat::integer(oracle),
                          "bottleneck vs oracle at n=" + std::to_string(n));
            }
    }
}

void criterion_derived_isometry(Check& c) {
    Rng rng(0);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, 8);
        std::size_t n = pick_n(rng);
        GradedBarcode x = random_graded_barcode(n, -2, 2, 4, rng);
        GradedBarcode y = random_graded_barcode(n, -2, 2, 4, rng);
        ExtRat viaMatching = derived_bottleneck(x, y);
        ExtRat viaInterleaving = derived_interleaving_distance(x, y, n);
        c.require(viaMatching <= viaInterleaving, "stability direction");
        c.require(viaMatching == viaInterleaving, "derived isometry");
    }
}

void criterion_zigzag_isometry(Check& c) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& a : all_orientations(n)) {
            QuiverAn q(n, a);
            auto objs = intervals_and_zero(n);
            for (std::size_t i = 0; i < objs.size(); ++i)
                for (std::size_t j = i; j < objs.size(); ++j) {
                    Barcode bi, bj;
                    if (objs[i]) bi.add(*objs[i]);
                    if (objs[j]) bj.add(*objs[j]);
                    Representation mi = objs[i] ? Representation::interval(q, *objs[i], 2)
                                                : Representation::zero(q, 2);
                    Representation mj = objs[j] ? Representation::interval(q, *objs[j], 2)
                                                : Representation::zero(q, 2);
                    c.require(induced_bottleneck(bi, bj, n, a) == induced_distance(mi, mj),
                              "interval pair at n=" + std::to_string(n) + " a=" + a.to_string());
                }
        }
    Rng rng(0);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, 7);
        std::size_t n = pick_n(rng);
        Orientation a = random_orientation(n, rng);
        QuiverAn q(n, a);
        Barcode b1 = random_barcode(n, 3, rng), b2 = random_barcode(n, 3, rng);
        Representation m1 = scrambled_realization(b1, q, 2, rng);
        Representation m2 = scrambled_realization(b2, q, 2, rng);
        c.require(induced_bottleneck(b1, b2, n, a) == induced_distance(m1, m2),
                  "random barcode pair");
    }
}

void criterion_decomposition(Check& c) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::uint32_t p : {2u, 3u, 5u}) {
            Rng rng(1000 * n + p);
            for (int t = 0; t < 200; ++t) {
                Orientation a = random_orientation(n, rng);
                QuiverAn q(n, a);
                Barcode planted = random_barcode(n, 3, rng);
                Representation m = scrambled_realization(planted, q, p, rng);
                Barcode mesh = decompose(m);
                c.require(mesh == planted, "round trip n=" + std::to_string(n));
                c.require(mesh == decompose_by_rank(m), "mesh vs generalized rank");
            }
        }
}

void criterion_transport(Check& c) {
    for (std::size_t n = 3; n <= 9; n += 2) {
        const TransportTable& table = transport_table(n, Orientation::zigzag_z1(n));
        for (const auto& [src, e] : table.by_source) {
            TransportEntry cf = purely_zigzag_target(src, n);
            c.require(e.target == cf.target && e.degree == cf.degree,
                      "closed form at n=" + std::to_string(n) + " " + to_string(src));
            // division of the AR quiver: hom side iff the poset image keeps
            // its left end closed
            ZZKind kind = mu1(src).kind;
            c.require((e.degree == 0) == (kind == ZZKind::closed || kind == ZZKind::right_open),
                      "torsion division at n=" + std::to_string(n) + " " + to_string(src));
        }
    }
    for (std::size_t n = 1; n <= 9; ++n)
        for (const auto& a : all_orientations(n)) {
            const TransportTable& table = transport_table(n, a);
            c.require(table.by_source.size() == n * (n + 1) / 2,
                      "bijection at n=" + std::to_string(n) + " a=" + a.to_string());
        }
}

void criterion_comparison(Check& c) {
    for (std::size_t n : {std::size_t(5), std::size_t(7), std::size_t(9)}) {
        ComparisonReport rep = comparison_report(n);
        c.require(rep.violations.empty(),
                  "inequality families violated at n=" + std::to_string(n));
    }
    std::size_t threshold = smallest_incomparable_n();
    c.require(threshold == 7, "incomparability first appears at n=7");
    ComparisonReport rep = comparison_report(threshold);
    c.require(rep.mixed_cell_greater.has_value() && rep.mixed_cell_less.has_value(),
              "both strict directions witnessed");
}

void criterion_induced_matching(Check& c) {
    Rng rng(0);
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<std::size_t> pick_n(2, 6);
        std::size_t n = pick_n(rng);
        QuiverAn q(n, Orientation::equioriented(n));
        Representation m = random_representation(q, 2, 3, rng);
        Representation l = random_representation(q, 2, 3, rng);
        Morphism f = random_hom_element(m, l, rng);
        int delta = 0;
        Representation ker = kernel(f).rep, cok = cokernel(f).rep;
        while (!is_delta_trivial(ker, 2 * delta) || !is_delta_trivial(cok, 2 * delta)) ++delta;
        c.require(verify_imt(f, delta) == ImtOutcome::holds,
                  "certificate at trial " + std::to_string(done));
        ++done;
    }
}

void criterion_ar_structure(Check& c) {
    for (std::size_t n = 1; n <= 10; ++n) {
        // sections of the equioriented quiver, indexed by the orientation they
        // present
        ARQuiver equi = build_ar_quiver(QuiverAn(n, Orientation::equioriented(n)));
        auto sections = enumerate_sections(equi);
        c.require(sections.size() == (1ull << (n - 1)),
                  "section count at n=" + std::to_string(n));
        for (const auto& a : all_orientations(n)) {
            std::size_t matches = 0;
            for (const auto& s : sections) {
                bool match = true;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    if (flip(s.sigma.arrows[i]) != a.arrows[i]) match = false;
                if (match) ++matches;
            }
            c.require(matches == 1, "unique section for a=" + a.to_string());
            ARQuiver g = build_ar_quiver(QuiverAn(n, a));
            c.require(g.vertices.size() == n * (n + 1) / 2, "vertex count");
            c.require(tau_orbits(g).size() == n, "orbit count");
            c.require(check_mesh_additivity(g), "mesh additivity");
        }
        for (const auto& s : sections) {
            TiltingModule t;
            t.summands = s.members;
            t.section = s;
            c.require(verify_classical_tilting(t, n), "tilting conditions at n=" + std::to_string(n));
        }
    }
}

void criterion_convolution(Check& c) {
    for (long long b = 0; b <= 3; ++b)
        for (long long d = b; d <= b + 5; ++d)
            for (ZZKind kind :
                 {ZZKind::closed, ZZKind::right_open, ZZKind::left_open, ZZKind::open}) {
                if (kind != ZZKind::closed && b == d) continue;
                ZZInterval z = make_zz(b, d, kind);
                c.require(theta_bar_inverse(theta_bar(z)) == z, "round trip " + to_string(z));
            }
    Rng rng(0);
    std::uniform_int_distribution<int> endpoint(0, 4), kind(0, 3), count(0, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<ZZInterval> x, y;
        for (int k = count(rng); k > 0; --k) {
            int b = endpoint(rng);
            x.push_back(make_zz(b, b + 1 + endpoint(rng), ZZKind(kind(rng))));
        }
        for (int k = count(rng); k > 0; --k) {
            int b = endpoint(rng);
            y.push_back(make_zz(b, b + 1 + endpoint(rng), ZZKind(kind(rng))));
        }
        ConvolutionValue v = convolution_nd(theta(x), theta(y));
        c.require(v.value == block_distance(x, y), "non-derived value");
        bool any_open = false;
        for (const auto& z : x) any_open = any_open || z.kind == ZZKind::open;
        for (const auto& z : y) any_open = any_open || z.kind == ZZKind::open;
        c.require(v.open_summand_present == any_open, "open-summand flag");
    }
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, 7);
        std::size_t m = pick_n(rng);
        GradedBarcode x = random_graded_barcode(m, -2, 2, 4, rng);
        GradedBarcode y = random_graded_barcode(m, -2, 2, 4, rng);
        c.require(convolution_upper(theta_upper(x), theta_upper(y), m) ==
                      derived_interleaving_distance(x, y, m),
                  "modified convolution");
    }
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "reference distance values on seven vertices", 1.0, criterion_reference_values},
        {2, "re-zigzagging deletion costs", 1.0, criterion_embedding_values},
        {3, "bottleneck equals the interleaving oracle (n <= 6, exhaustive)", 300.0,
         criterion_isometry_oracle},
        {4, "derived bottleneck equals derived interleaving (500 random pairs)", 60.0,
         criterion_derived_isometry},
        {5, "induced bottleneck equals induced interleaving (all orientations, n <= 7)", 300.0,
         criterion_zigzag_isometry},
        {6, "decomposition round trip and rank cross-check (n <= 8, p in {2,3,5})", 120.0,
         criterion_decomposition},
        {7, "transport table: closed forms and bijectivity (n <= 9)", 120.0, criterion_transport},
        {8, "induced-vs-block inequality families (n in {5,7,9})", 60.0, criterion_comparison},
        {9, "induced matchings are delta-matchings (200 morphisms)", 60.0,
         criterion_induced_matching},
        {10, "AR quiver structure and tilting modules (n <= 10)", 60.0, criterion_ar_structure},
        {11, "convolution bridges", 60.0, criterion_convolution},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.notes.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < cr.budget_seconds;
        bool pass = check.ok && in_budget;
        std::printf("[%2d] %s  %7.2fs  %s (%ld checks)\n", cr.id, pass ? "PASS" : "FAIL", elapsed,
                    cr.label, check.checks);
        if (!in_budget)
            std::printf("     budget exceeded: %.2fs > %.2fs\n", elapsed, cr.budget_seconds);
        for (const auto& note : check.notes) std::printf("     %s\n", note.c_str());
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
