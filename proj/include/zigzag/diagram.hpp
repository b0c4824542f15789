#pragma once

#include <string>

#include "zigzag/ar_quiver.hpp"

namespace zigzag {

// Deterministic DOT / SVG renderings of the AR quiver; mesh arrows solid,
// translation edges dashed. The derived variant shows the translation window
// of stalk degrees 0..window, vertices labeled I[b,d][-i].
std::string ar_quiver_dot(const ARQuiver& g);
std::string ar_quiver_svg(const ARQuiver& g);
std::string derived_ar_quiver_dot(const ARQuiver& g, int window);
std::string derived_ar_quiver_svg(const ARQuiver& g, int window);

std::string barcode_svg(const Barcode& b, std::size_t n);

}  // namespace zigzag
