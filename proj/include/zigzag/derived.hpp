#pragma once

#include <map>

#include "zigzag/distances.hpp"
#include "zigzag/quiver.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

// Bounded cochain complex of representations; terms absent from the map are
// zero. differentials[i] is d^i : terms[i] -> terms[i+1].
struct CochainComplex {
    QuiverAn quiver;
    std::uint32_t p = 2;
    std::map<int, Representation> terms;
    std::map<int, Morphism> differentials;

    static CochainComplex stalk(const Representation& m, int degree);

    Representation term(int i) const;
    Morphism differential(int i) const;
    void validate() const;  // shapes, morphism property, d∘d = 0
};

CochainComplex complex_direct_sum(const CochainComplex& x, const CochainComplex& y);

// Degreewise shift of every term (equioriented only).
CochainComplex complex_shift(const CochainComplex& x, int delta);

// H^i = Ker d^i / Im d^{i-1} with the induced structure maps, computed in a
// deterministic complement basis.
Representation cohomology(const CochainComplex& x, int i);

struct GradedBarcode {
    std::map<int, Barcode> degrees;  // only nonzero degrees kept

    void add(int degree, const Interval& iv, int mult = 1);
    bool empty() const { return degrees.empty(); }

    friend bool operator==(const GradedBarcode& a, const GradedBarcode& b) {
        return a.degrees == b.degrees;
    }
};

GradedBarcode decompose_complex(const CochainComplex& x);

// Distance between stalk complexes M[-i], N[-j]: the interleaving distance
// when the degrees agree, otherwise both must die into zero.
ExtRat stalk_distance(const Representation& m, int i, const Representation& n, int j);

ExtRat derived_bottleneck(const GradedBarcode& x, const GradedBarcode& y);

// Per-degree interleaving distances of realizations, maximized over degrees.
ExtRat derived_interleaving_distance(const GradedBarcode& x, const GradedBarcode& y,
                                     std::size_t n, std::uint32_t p = 2);
ExtRat derived_interleaving_distance(const CochainComplex& x, const CochainComplex& y);

// Direct sum of interval modules realizing a barcode.
Representation realize_barcode(const Barcode& b, const QuiverAn& q, std::uint32_t p);

}  // namespace zigzag
