#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zigzag/quiver.hpp"

namespace zigzag {

Interval projective_interval(const QuiverAn& q, std::size_t v);  // vertices reachable from v
Interval injective_interval(const QuiverAn& q, std::size_t v);   // vertices reaching v

// The AR quiver of A_n(a): vertices are the n(n+1)/2 intervals, arrows are the
// irreducible maps, tau the translation (defined on non-projectives).
struct ARQuiver {
    QuiverAn quiver;
    std::vector<Interval> vertices;  // sorted
    std::set<std::pair<Interval, Interval>> arrows;
    std::map<Interval, Interval> tau;      // X -> tau(X)
    std::map<Interval, Interval> tau_inv;  // X -> tau^{-1}(X)
    std::vector<Interval> projectives;     // projectives[i-1] = P_i
    std::vector<Interval> injectives;      // injectives[i-1] = I_i

    bool is_projective(const Interval& iv) const;
    bool is_injective(const Interval& iv) const;
    std::vector<Interval> mesh_middle(const Interval& x) const;  // direct predecessors of x
    std::vector<Interval> successors(const Interval& x) const;
    bool has_arrow(const Interval& x, const Interval& y) const {
        return arrows.count({x, y}) > 0;
    }
};

ARQuiver build_ar_quiver(const QuiverAn& q);

// Additivity of dimension vectors over every mesh; a structural self-check.
bool check_mesh_additivity(const ARQuiver& g);

// Orbits of tau, one per indecomposable projective, listed as
// P_i, tau^{-1} P_i, ... in order of the projective's vertex i.
std::vector<std::vector<Interval>> tau_orbits(const ARQuiver& g);

// One vertex per tau-orbit forming a connected full subquiver. For the
// equioriented quiver the orbit representatives X_1..X_n form a path and
// sigma[i-1] records the arrow direction between X_i and X_{i+1}
// (forward = X_i -> X_{i+1}).
struct Section {
    std::vector<Interval> members;  // members[i-1] = X_i in the orbit of P_i
    Orientation sigma;

    friend bool operator==(const Section& a, const Section& b) { return a.members == b.members; }
    friend bool operator<(const Section& a, const Section& b) { return a.members < b.members; }
};

std::vector<Section> enumerate_sections(const ARQuiver& g);  // equioriented only

struct TiltingModule {
    std::vector<Interval> summands;  // X_1..X_n over the equioriented quiver
    std::optional<Section> section;
};

// The classical tilting module T(Sigma) whose endomorphism quiver is A_n(a):
// the unique section whose arrows, read along the orbit indexing and
// reversed, give exactly the orientation a.
TiltingModule tilting_for_orientation(std::size_t n, const Orientation& a);

std::size_t ext1_dim(const Representation& m, const Representation& n);

bool verify_classical_tilting(const TiltingModule& t, std::size_t n, std::uint32_t p = 2);

}  // namespace zigzag
