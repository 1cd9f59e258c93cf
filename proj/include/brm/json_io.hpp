#pragma once

#include <json.hpp>

#include "brm/charvar.hpp"
#include "brm/laurent.hpp"
#include "brm/tap.hpp"
#include "brm/words.hpp"

namespace brm {

using json = nlohmann::json;

// Complex numbers encode as [re, im]; Mat2C as a row-major array of four of
// them; a Laurent polynomial as a list of {"exp":[k1,k2,k3], "coef":[re,im]}.
json to_json(const cx& z);
json to_json(const Mat2C& m);
json to_json(const LaurentPoly3& p);
json to_json(const CharacterTuple& c);
json to_json(const Representation& rho);
json to_json(const TapResult& t);
json to_json(const Presentation& p);
json to_json(const std::vector<ClassifiedLabel>& labels);
json to_json(const VerificationReport& r, double tol);

cx complex_from_json(const json& j);
Mat2C mat2_from_json(const json& j);
LaurentPoly3 laurent_from_json(const json& j);
CharacterTuple character_from_json(const json& j);
Representation representation_from_json(const json& j);
Presentation presentation_from_json(const json& j);
TapResult tap_result_from_json(const json& j);

// Serialize with every number printed to 17 significant digits, so doubles
// survive a round trip byte-for-byte.
std::string dump_json(const json& j, bool pretty = false);

// "2", "1.5-0.5i", "i", "-i", "3i", "2+3i"
cx parse_complex(const std::string& text);

}  // namespace brm
