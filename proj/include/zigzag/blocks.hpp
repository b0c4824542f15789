#pragma once

#include <map>
#include <string>
#include <vector>

#include "zigzag/derived.hpp"
#include "zigzag/quiver.hpp"
#include "zigzag/rational.hpp"
#include "zigzag/transport.hpp"

namespace zigzag {

enum class ZZKind { closed, right_open, left_open, open };

std::string to_string(ZZKind k);
ZZKind zz_kind_from_string(const std::string& s);

// An interval of the infinite zigzag poset, written <b,d> with one of the four
// boundary kinds. Non-closed kinds require b < d.
struct ZZInterval {
    long long b = 0;
    long long d = 0;
    ZZKind kind = ZZKind::closed;

    friend bool operator==(const ZZInterval& x, const ZZInterval& y) {
        return x.b == y.b && x.d == y.d && x.kind == y.kind;
    }
    friend bool operator<(const ZZInterval& x, const ZZInterval& y) {
        if (x.b != y.b) return x.b < y.b;
        if (x.d != y.d) return x.d < y.d;
        return int(x.kind) < int(y.kind);
    }
};

ZZInterval make_zz(long long b, long long d, ZZKind kind);  // validates
std::string to_string(const ZZInterval& z);

enum class BlockType { bb_minus, db_plus, hb, vb };

std::string to_string(BlockType t);
BlockType block_type_of(ZZKind k);
inline BlockType block_type_of(const ZZInterval& z) { return block_type_of(z.kind); }

// Poset embeddings of the purely zigzag quivers: odd vertices of the
// sink-first orientation sit on the diagonal, even ones in the valleys.
ZZInterval mu1(const Interval& iv);
ZZInterval mu2(const Interval& iv);

// Minimal re-zigzagging of an arbitrary orientation: duplicates a vertex with
// an identity map wherever the next arrow breaks the sink-first alternation.
struct ZigzagEmbedding {
    std::size_t n = 1;            // source size
    Orientation a;                // source orientation
    std::size_t m = 1;            // target A_m with sink-first alternation
    std::vector<std::size_t> vertex_of_position;  // size m, original vertex per slot

    Interval embed(const Interval& iv) const;
    Representation embed(const Representation& rep) const;
};

ZigzagEmbedding zigzag_embedding(std::size_t n, const Orientation& a);

// Deletion / pairwise costs of block modules.
ExtRat block_deletion_cost(const ZZInterval& z);
ExtRat block_pair_cost(const ZZInterval& x, const ZZInterval& y);

// Block distance between finite multisets of zigzag-poset intervals, as a
// bottleneck over the block costs.
ExtRat block_distance(const std::vector<ZZInterval>& x, const std::vector<ZZInterval>& y);

std::vector<ZZInterval> zz_multiset(const Representation& purely_zigzag);  // decompose + mu1

// Block distance of arbitrary-orientation modules through the minimal
// re-zigzagging.
ExtRat block_distance_a(const Representation& m, const Representation& n);

// A constructible-sheaf summand: the constant sheaf on a real interval with
// integer endpoints; `degree` places it in a complex.
struct SheafBar {
    long long lo = 0;
    long long hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;
    int degree = 0;

    friend bool operator==(const SheafBar& a, const SheafBar& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
               a.hi_closed == b.hi_closed && a.degree == b.degree;
    }
    friend bool operator<(const SheafBar& a, const SheafBar& b) {
        auto ka = std::tie(a.degree, a.lo, a.hi, a.lo_closed, a.hi_closed);
        auto kb = std::tie(b.degree, b.lo, b.hi, b.lo_closed, b.hi_closed);
        return ka < kb;
    }
};

struct SheafObject {
    std::vector<SheafBar> bars;  // kept sorted

    void normalize();
    bool has_open_bar() const;
};

SheafBar theta_bar(const ZZInterval& z);
ZZInterval theta_bar_inverse(const SheafBar& b);

SheafObject theta(const std::vector<ZZInterval>& zz);
std::vector<ZZInterval> theta_inverse(const SheafObject& f);

struct ConvolutionValue {
    ExtRat value;
    bool open_summand_present = false;  // where the non-derived value may differ
};

// Non-derived convolution distance; equals the block distance of the
// preimages.
ConvolutionValue convolution_nd(const SheafObject& f, const SheafObject& g);

// Bars of the upper fragment: [a, b) with 1 <= a < b <= m+1, graded.
SheafObject theta_upper(const GradedBarcode& g);
GradedBarcode theta_upper_inverse(const SheafObject& f, std::size_t m);

// Modified convolution distance on the upper fragment; equals the derived
// interleaving distance of the preimages over A_m.
ExtRat convolution_upper(const SheafObject& f, const SheafObject& g, std::size_t m);

// Exhaustive comparison of the induced and block distances over the
// sink-first alternating orientation, with the four inequality families.
struct ComparisonRow {
    // nullopt encodes the zero module.
    std::optional<Interval> lhs, rhs;
    std::string class_lhs, class_rhs;
    ExtRat d_induced;
    ExtRat d_block;
    std::string relation;  // "<", ">", "="
};

struct ComparisonReport {
    std::size_t n;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> violations;  // inequality-family violations, empty when clean
    // Witnesses in the left-open/open cell where each strict direction occurs.
    std::optional<ComparisonRow> mixed_cell_greater;  // d_block > d_induced
    std::optional<ComparisonRow> mixed_cell_less;     // d_block < d_induced
};

ComparisonReport comparison_report(std::size_t n);

// Smallest odd n whose left-open/open cell shows both strict directions.
std::size_t smallest_incomparable_n(std::size_t limit = 15);

}  // namespace zigzag
