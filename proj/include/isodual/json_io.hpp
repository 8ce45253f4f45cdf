#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isodual/codes.hpp"

namespace isodual {

// The CLI's code descriptor. Polynomial coefficients are ascending element
// indices in [0, q) (residues for prime q), no trailing zeros.
struct CodeDescriptor {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> P;
    std::vector<std::int64_t> check_poly;
    std::vector<std::int64_t> gen_poly;
    std::vector<std::int64_t> dual_check_poly;
    bool has_certificate = false;
    std::int64_t cert_s = 0;
    std::int64_t cert_t = 0;
    std::string pin; // --pin-theta expression used, "" when none
};

CodeDescriptor make_descriptor(const CyclicCode& C,
                               const std::optional<IsoSelfDualCertificate>& cert,
                               const std::string& pin);

nlohmann::ordered_json descriptor_to_json(const CodeDescriptor& d);

// ParseError on missing or ill-typed fields.
CodeDescriptor descriptor_from_json(const nlohmann::json& j);

} // namespace isodual
