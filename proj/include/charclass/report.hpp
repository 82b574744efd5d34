#pragma once

#include <json.hpp>

#include <string>

#include "charclass/classes.hpp"
#include "charclass/verify.hpp"

namespace charclass {

using Json = nlohmann::ordered_json;

// Class vectors as arrays of integer strings indexed by codimension, with a
// separate block per exceptional divisor.
Json class_to_json(const ChowClass& c);

Json singularities_to_json(const SingularityData& sing);

// {ambient, divisor, fulton, mu_class, csm, euler, chi_complement, ...}
Json hypersurface_report(const HypersurfaceSpec& spec);

Json milnor_to_json(const MilnorResult& r);

Json verification_to_json(const VerificationReport& r);

// Human-readable rendering derived from the JSON report object.
std::string render_text(const Json& j);

}  // namespace charclass
