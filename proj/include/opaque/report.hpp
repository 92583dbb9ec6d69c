#pragma once

#include <string>

#include <json.hpp>

#include "opaque/bands.hpp"
#include "opaque/certificates.hpp"
#include "opaque/coverage.hpp"
#include "opaque/square_theorem.hpp"

namespace opaque {

// "value ± error" with enough digits to make the error visible.
std::string format_with_error(double value, double error);
std::string format_number(double value);

nlohmann::json to_json(const CertifiedIntegral& v);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const WasteCertificate& c);
nlohmann::json to_json(const FarOutsideCertificate& c);
nlohmann::json to_json(const GroupViolation& v);
nlohmann::json to_json(const ConstantChainReport& r);

}  // namespace opaque
