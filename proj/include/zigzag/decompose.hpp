#pragma once

#include "zigzag/ar_quiver.hpp"
#include "zigzag/quiver.hpp"

namespace zigzag {

// Interval decomposition via the AR-mesh multiplicity count:
// m_X(M) = hom(M,X) - hom(M,E) + hom(M,tau X) for non-projective X with mesh
// 0 -> tau X -> E -> X -> 0, and m_P(M) = hom(M,P) - hom(M,rad P) for
// projective P.
Barcode decompose(const Representation& m);

// Independent route: r(b,d) = rank of the canonical map from the limit to the
// colimit of M restricted to [b,d]; multiplicities by inclusion-exclusion
// m(b,d) = r(b,d) - r(b-1,d) - r(b,d+1) + r(b-1,d+1).
Barcode decompose_by_rank(const Representation& m);

std::size_t generalized_rank(const Representation& m, const Interval& window);

}  // namespace zigzag
