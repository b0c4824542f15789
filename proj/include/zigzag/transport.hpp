#pragma once

#include <map>
#include <optional>

#include "zigzag/ar_quiver.hpp"
#include "zigzag/derived.hpp"
#include "zigzag/quiver.hpp"

namespace zigzag {

enum class TorsionSide { x_side, y_side };

// Refinement for the purely zigzag orientation with vertex 1 a sink, by the
// interval kind of the zigzag-poset image.
enum class ZigzagClass { y_c, y_co, x_o, x_oc };

struct TorsionClass {
    TorsionSide side;
    std::optional<ZigzagClass> refined;
};

std::string to_string(TorsionSide side);
std::string to_string(ZigzagClass c);

struct TransportEntry {
    Interval source;  // interval of A_n(a)
    Interval target;  // interval of the equioriented A_n
    int degree;       // 0: hom side (Y), 1: ext side (X)
};

// vertex i of A_n(a) carries Hom(X_i, -) / Ext^1(X_i, -); arrows act by
// composition with the section's irreducible maps.
Representation hom_functor_image(const TiltingModule& t, const Orientation& a,
                                 const Representation& l);
Representation ext_functor_image(const TiltingModule& t, const Orientation& a,
                                 const Representation& l);

struct TransportTable {
    std::size_t n = 1;
    Orientation a;
    std::uint32_t p = 2;
    TiltingModule tilting;
    std::map<Interval, TransportEntry> by_source;
    std::map<std::pair<Interval, int>, Interval> by_target;

    const TransportEntry& entry(const Interval& source) const;
};

// Built once per (n, a, p) and cached; lookups are read-only afterwards.
const TransportTable& transport_table(std::size_t n, const Orientation& a, std::uint32_t p = 2);

// Closed-form endpoint map for the purely zigzag orientation (vertex 1 a
// sink): target interval of the equioriented quiver plus stalk degree.
TransportEntry purely_zigzag_target(const Interval& iv, std::size_t n);

ZigzagClass purely_zigzag_class(const Interval& iv);

TorsionClass torsion_class_of(const Interval& iv, std::size_t n, const Orientation& a,
                              std::uint32_t p = 2);

// Graded barcode of the complex corresponding to a module of A_n(a) under the
// tilting equivalence (hom side in degree 0, ext side in degree 1).
GradedBarcode corresponding_complex(const Representation& m);
GradedBarcode transport_barcode(const Barcode& b, std::size_t n, const Orientation& a,
                                std::uint32_t p = 2);

// Distance on A_n(a)-modules induced by the tilting equivalence.
ExtRat induced_distance(const Representation& x, const Representation& y);
ExtRat induced_bottleneck(const Barcode& b1, const Barcode& b2, std::size_t n,
                          const Orientation& a, std::uint32_t p = 2);

}  // namespace zigzag
