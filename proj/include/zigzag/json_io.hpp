#pragma once

#include <json.hpp>

#include "zigzag/blocks.hpp"
#include "zigzag/derived.hpp"
#include "zigzag/quiver.hpp"

namespace zigzag {

using nlohmann::json;

json to_json(const Barcode& b);
Barcode barcode_from_json(const json& j);

json to_json(const Representation& r);
Representation representation_from_json(const json& j);

json to_json(const GradedBarcode& g);
GradedBarcode graded_barcode_from_json(const json& j);

CochainComplex complex_from_json(const json& j);

json to_json(const SheafObject& f);
SheafObject sheaf_from_json(const json& j);

std::vector<ZZInterval> zz_multiset_from_json(const json& j);

}  // namespace zigzag
