#include <doctest.h>

#include <set>

#include "zigzag/blocks.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/randomgen.hpp"

using namespace zigzag;

TEST_CASE("poset embeddings") {
    CHECK(mu1({2, 7}) == make_zz(1, 4, ZZKind::left_open));
    CHECK(mu1({2, 6}) == make_zz(1, 4, ZZKind::open));
    CHECK(mu1({2, 2}) == make_zz(1, 2, ZZKind::open));
    CHECK(mu1({1, 1}) == make_zz(1, 1, ZZKind::closed));
    CHECK(mu1({1, 2}) == make_zz(1, 2, ZZKind::right_open));

    CHECK(mu2({2, 2}) == make_zz(1, 1, ZZKind::closed));
    CHECK(mu2({1, 2}) == make_zz(0, 1, ZZKind::left_open));
    CHECK(mu2({1, 1}) == make_zz(0, 1, ZZKind::open));

    for (auto embed : {mu1, mu2}) {
        std::set<ZZInterval> seen;
        for (int b = 1; b <= 9; ++b)
            for (int d = b; d <= 9; ++d) seen.insert(embed({b, d}));
        CHECK(seen.size() == 45);
    }
}

TEST_CASE("block types") {
    CHECK(block_type_of(ZZKind::closed) == BlockType::bb_minus);
    CHECK(block_type_of(ZZKind::open) == BlockType::db_plus);
    CHECK(block_type_of(ZZKind::right_open) == BlockType::hb);
    CHECK(block_type_of(ZZKind::left_open) == BlockType::vb);
}

TEST_CASE("re-zigzagging an arbitrary orientation") {
    // 1 -> 2 -> 3 <- 4 doubles the first two vertices.
    ZigzagEmbedding e = zigzag_embedding(4, Orientation::parse("ffb"));
    CHECK(e.m == 6);
    CHECK(e.vertex_of_position == std::vector<std::size_t>{1, 1, 2, 2, 3, 4});
    CHECK(e.embed(Interval{1, 1}) == Interval{1, 2});
    CHECK(e.embed(Interval{3, 4}) == Interval{5, 6});

    ZigzagEmbedding id = zigzag_embedding(5, Orientation::zigzag_z1(5));
    CHECK(id.m == 5);
    for (std::size_t q = 1; q <= 5; ++q) CHECK(id.vertex_of_position[q - 1] == q);

    Rng rng(79);
    for (int t = 0; t < 25; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, 5);
        std::size_t n = pick_n(rng);
        Orientation a = random_orientation(n, rng);
        QuiverAn q(n, a);
        ZigzagEmbedding emb = zigzag_embedding(n, a);
        Representation m = random_representation(q, 2, 3, rng);
        Barcode direct;
        for (const auto& [iv, mult] : decompose(m).bars) direct.add(emb.embed(iv), mult);
        CHECK(decompose(emb.embed(m)) == direct);
        CHECK(decompose(emb.embed(m)).size() == decompose(m).size());
    }
}

TEST_CASE("block costs") {
    CHECK(block_deletion_cost(make_zz(1, 4, ZZKind::closed)).is_infinite());
    CHECK(block_deletion_cost(make_zz(1, 4, ZZKind::left_open)) == ExtRat(3, 2));
    CHECK(block_deletion_cost(make_zz(1, 4, ZZKind::open)) == ExtRat(3, 4));
    CHECK(block_pair_cost(make_zz(1, 4, ZZKind::left_open), make_zz(1, 4, ZZKind::open)) ==
          ExtRat(3, 2));
    CHECK(block_pair_cost(make_zz(1, 4, ZZKind::left_open), make_zz(1, 2, ZZKind::open)) ==
          ExtRat(3, 2));
    CHECK(block_pair_cost(make_zz(1, 4, ZZKind::closed), make_zz(2, 5, ZZKind::closed)) ==
          ExtRat::integer(1));
}

TEST_CASE("block distance on multisets") {
    std::vector<ZZInterval> s{make_zz(1, 4, ZZKind::left_open), make_zz(2, 3, ZZKind::closed)};
    CHECK(block_distance(s, s) == ExtRat::integer(0));
    CHECK(block_distance({make_zz(1, 3, ZZKind::closed)}, {}).is_infinite());
    CHECK(block_distance({make_zz(1, 4, ZZKind::left_open)}, {make_zz(1, 4, ZZKind::open)}) ==
          ExtRat(3, 2));
    CHECK(block_distance({make_zz(1, 4, ZZKind::left_open)}, {make_zz(1, 2, ZZKind::open)}) ==
          ExtRat(3, 2));
}

TEST_CASE("block distance is a pseudometric on finite parts") {
    Rng rng(83);
    std::uniform_int_distribution<int> endpoint(0, 5), kind(0, 3), count(0, 3);
    auto random_multiset = [&]() {
        std::vector<ZZInterval> s;
        int c = count(rng);
        for (int k = 0; k < c; ++k) {
            int b = endpoint(rng), d = b + 1 + endpoint(rng);
            s.push_back(make_zz(b, d, ZZKind(kind(rng))));
        }
        return s;
    };
    int finite_triples = 0;
    for (int t = 0; t < 200; ++t) {
        auto x = random_multiset(), y = random_multiset(), z = random_multiset();
        ExtRat dxy = block_distance(x, y);
        CHECK(dxy == block_distance(y, x));
        CHECK(block_distance(x, x) == ExtRat::integer(0));
        ExtRat dyz = block_distance(y, z), dxz = block_distance(x, z);
        if (!dxy.is_infinite() && !dyz.is_infinite()) {
            CHECK(dxz <= dxy + dyz);
            ++finite_triples;
        }
    }
    CHECK(finite_triples > 20);
}

TEST_CASE("block distance through the embedding") {
    // Vertex 1 a source.
    QuiverAn q(4, Orientation::parse("ffb"));
    Representation i11 = Representation::interval(q, {1, 1}, 2);
    Representation zero = Representation::zero(q, 2);
    CHECK(block_distance_a(i11, i11) == ExtRat::integer(0));
    CHECK(block_distance_a(i11, zero) == ExtRat(1, 2));

    QuiverAn back(3, Orientation::parse("bb"));
    CHECK(block_distance_a(Representation::interval(back, {2, 2}, 2),
                           Representation::zero(back, 2)) == ExtRat(1, 2));
}

TEST_CASE("sheaf translation round trip") {
    for (long long b = 0; b <= 2; ++b)
        for (long long d = b; d <= b + 5; ++d)
            for (ZZKind kind :
                 {ZZKind::closed, ZZKind::right_open, ZZKind::left_open, ZZKind::open}) {
                if (kind != ZZKind::closed && b == d) continue;
                ZZInterval z = make_zz(b, d, kind);
                CHECK(theta_bar_inverse(theta_bar(z)) == z);
                // support boundary matches the block type table
                SheafBar bar = theta_bar(z);
                switch (block_type_of(z)) {
                    case BlockType::bb_minus: CHECK((bar.lo_closed && bar.hi_closed)); break;
                    case BlockType::db_plus: CHECK((!bar.lo_closed && !bar.hi_closed)); break;
                    case BlockType::hb: CHECK((bar.lo_closed && !bar.hi_closed)); break;
                    case BlockType::vb: CHECK((!bar.lo_closed && bar.hi_closed)); break;
                }
            }
    CHECK(theta({}).bars.empty());
}

TEST_CASE("non-derived convolution distance") {
    std::vector<ZZInterval> x{make_zz(1, 4, ZZKind::left_open)};
    std::vector<ZZInterval> y{make_zz(1, 4, ZZKind::open)};
    ConvolutionValue v = convolution_nd(theta(x), theta(y));
    CHECK(v.value == ExtRat(3, 2));
    CHECK(v.open_summand_present);

    ConvolutionValue same = convolution_nd(theta(x), theta(x));
    CHECK(same.value == ExtRat::integer(0));
    CHECK_FALSE(same.open_summand_present);

    ConvolutionValue inf = convolution_nd(theta({make_zz(0, 2, ZZKind::closed)}), theta({}));
    CHECK(inf.value.is_infinite());
    CHECK_FALSE(inf.open_summand_present);
}

TEST_CASE("upper-fragment convolution distance") {
    GradedBarcode g;
    g.add(0, {1, 5});
    SheafObject f = theta_upper(g);
    REQUIRE(f.bars.size() == 1);
    CHECK(f.bars[0].lo == 1);
    CHECK(f.bars[0].hi == 6);
    CHECK(f.bars[0].lo_closed);
    CHECK_FALSE(f.bars[0].hi_closed);
    CHECK(convolution_upper(f, f, 6) == ExtRat::integer(0));
    CHECK(convolution_upper(f, SheafObject{}, 6) == ExtRat::integer(3));

    SheafObject bad;
    bad.bars.push_back(SheafBar{1, 3, true, true, 0});
    CHECK_THROWS_WITH_AS(theta_upper_inverse(bad, 6), doctest::Contains("1..3"),
                         std::invalid_argument);

    Rng rng(89);
    for (int t = 0; t < 30; ++t) {
        GradedBarcode x = random_graded_barcode(5, -1, 1, 3, rng);
        GradedBarcode y = random_graded_barcode(5, -1, 1, 3, rng);
        CHECK(convolution_upper(theta_upper(x), theta_upper(y), 5) ==
              derived_interleaving_distance(x, y, 5));
    }
}

TEST_CASE("comparison report") {
    ComparisonReport r5 = comparison_report(5);
    CHECK(r5.violations.empty());

    ComparisonReport r7 = comparison_report(7);
    CHECK(r7.violations.empty());
    REQUIRE(r7.mixed_cell_greater.has_value());
    REQUIRE(r7.mixed_cell_less.has_value());

    bool found_greater = false, found_less = false;
    for (const auto& row : r7.rows) {
        if (!row.lhs || !row.rhs) continue;
        auto pair = std::minmax(*row.lhs, *row.rhs);
        if (pair == std::minmax(Interval{2, 7}, Interval{2, 6})) {
            CHECK(row.d_block == ExtRat(3, 2));
            CHECK(row.d_induced == ExtRat::integer(1));
            found_greater = true;
        }
        if (pair == std::minmax(Interval{2, 7}, Interval{2, 2})) {
            CHECK(row.d_block == ExtRat(3, 2));
            CHECK(row.d_induced == ExtRat::integer(3));
            found_less = true;
        }
    }
    CHECK(found_greater);
    CHECK(found_less);
}

TEST_CASE("the incomparability threshold") { CHECK(smallest_incomparable_n() == 7); }
