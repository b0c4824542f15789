#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zigzag/field.hpp"

namespace zigzag {

enum class ArrowDir : std::uint8_t { forward, backward };

inline ArrowDir flip(ArrowDir d) {
    return d == ArrowDir::forward ? ArrowDir::backward : ArrowDir::forward;
}

// Orientation of the A_n-type quiver: one direction per arrow position
// x = 1..n-1, forward meaning x -> x+1. Serialized as a string over {f, b}.
struct Orientation {
    std::vector<ArrowDir> arrows;

    static Orientation equioriented(std::size_t n);
    static Orientation zigzag_z1(std::size_t n);  // vertex 1 a sink: 1 <- 2 -> 3 <- ...
    static Orientation zigzag_z2(std::size_t n);  // vertex 1 a source
    static Orientation parse(const std::string& s);

    std::string to_string() const;
    bool is_equioriented() const;
    bool is_z1() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.arrows == b.arrows;
    }
};

struct QuiverAn {
    std::size_t n = 1;
    Orientation orientation;

    QuiverAn() : orientation{Orientation::equioriented(1)} {}
    QuiverAn(std::size_t n_, Orientation o);

    // Arrow at position x (1-based, between vertices x and x+1).
    std::size_t source(std::size_t x) const {
        return orientation.arrows[x - 1] == ArrowDir::forward ? x : x + 1;
    }
    std::size_t target(std::size_t x) const {
        return orientation.arrows[x - 1] == ArrowDir::forward ? x + 1 : x;
    }

    friend bool operator==(const QuiverAn& a, const QuiverAn& b) {
        return a.n == b.n && a.orientation == b.orientation;
    }
};

// The interval [b, d] of vertices, 1 <= b <= d <= n.
struct Interval {
    int b = 1;
    int d = 1;

    int length() const { return d - b + 1; }

    friend bool operator==(const Interval& x, const Interval& y) {
        return x.b == y.b && x.d == y.d;
    }
    friend bool operator<(const Interval& x, const Interval& y) {
        return x.b != y.b ? x.b < y.b : x.d < y.d;
    }
};

std::string to_string(const Interval& iv);

// Multiset of intervals with positive multiplicities.
struct Barcode {
    std::map<Interval, int> bars;

    void add(Interval iv, int mult = 1);
    int total_dim() const;
    bool empty() const { return bars.empty(); }
    std::size_t size() const;                 // bar count with multiplicity
    std::vector<Interval> expand() const;     // sorted, repeated per multiplicity
    Barcode translated(int delta, int n) const;  // shift by -delta, clip to [1, n]

    friend bool operator==(const Barcode& a, const Barcode& b) { return a.bars == b.bars; }
};

Barcode barcode_union(const Barcode& a, const Barcode& b);

struct Representation {
    QuiverAn quiver;
    std::uint32_t p = 2;
    std::vector<std::size_t> dims;  // dims[x-1] = dim at vertex x
    std::vector<Matrix> maps;       // maps[x-1]: dims[target(x)] x dims[source(x)]

    static Representation zero(const QuiverAn& q, std::uint32_t p);
    static Representation interval(const QuiverAn& q, const Interval& iv, std::uint32_t p);

    std::size_t dim(std::size_t x) const { return dims[x - 1]; }
    const Matrix& map(std::size_t x) const { return maps[x - 1]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    void check_shapes() const;  // throws on inconsistent shapes

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.quiver == b.quiver && a.p == b.p && a.dims == b.dims && a.maps == b.maps;
    }
};

struct Morphism {
    Representation source;
    Representation target;
    std::vector<Matrix> comps;  // comps[x-1]: target.dims[x] x source.dims[x]

    bool is_zero() const;
};

Morphism zero_morphism(const Representation& m, const Representation& n);
Morphism identity_morphism(const Representation& m);
bool validate_morphism(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

Representation direct_sum(const Representation& m, const Representation& n);

// Equioriented only: (M(delta))_x = M_{x+delta}, zero outside 1..n.
Representation shift(const Representation& m, int delta);
Morphism shift(const Morphism& f, int delta);

// phi_M(s, t): composite of the structure maps from vertex s to t (s <= t).
Matrix phi(const Representation& m, std::size_t s, std::size_t t);

// Transition morphism phi^delta: M -> M(delta), delta >= 0, equioriented only.
Morphism transition(const Representation& m, int delta);

bool is_delta_trivial(const Representation& m, int delta);

// Zero-pads on vertices n+1..l (equioriented).
Representation extend(const Representation& m, std::size_t l);

// Embeds into A_l placing vertex x at x + offset; zero elsewhere.
Representation embed_at(const Representation& m, std::size_t l, std::size_t offset);
Morphism embed_at(const Morphism& f, std::size_t l, std::size_t offset);

std::size_t hom_dim(const Representation& m, const Representation& n);
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);

// Sub/quotient machinery. `bases[x]` has full column rank and the family is
// assumed closed under the structure maps.
Representation subrepresentation(const Representation& n, const std::vector<Matrix>& bases);

struct SubQuotient {
    Representation rep;
    Morphism embed_or_project;  // inclusion for image/kernel, projection for cokernel
};

SubQuotient image(const Morphism& f);     // sub of target
SubQuotient kernel(const Morphism& f);    // sub of source
SubQuotient cokernel(const Morphism& f);  // quotient of target

// Projective cover P0 ->> M together with the covering morphism.
Morphism projective_cover(const Representation& m);

// Euler form <dim M, dim N> = sum_x m_x n_x - sum_{a: s->t} m_s n_t.
long long euler_form(const Representation& m, const Representation& n);

}  // namespace zigzag
