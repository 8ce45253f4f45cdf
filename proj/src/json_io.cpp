#include "isodual/json_io.hpp"

namespace isodual {

CodeDescriptor make_descriptor(const CyclicCode& C,
                               const std::optional<IsoSelfDualCertificate>& cert,
                               const std::string& pin) {
    CodeDescriptor d;
    d.q = C.q;
    d.n = C.n;
    d.P = C.P;
    d.check_poly = C.check_poly.to_indices();
    d.gen_poly = C.gen_poly.to_indices();
    if (cert) {
        d.has_certificate = true;
        d.cert_s = cert->s;
        d.cert_t = cert->t;
        d.dual_check_poly = cert->dual_check_poly.to_indices();
    } else {
        d.dual_check_poly = dual_code(C).check_poly.to_indices();
    }
    d.pin = pin;
    return d;
}

nlohmann::ordered_json descriptor_to_json(const CodeDescriptor& d) {
    nlohmann::ordered_json j;
    j["q"] = d.q;
    j["n"] = d.n;
    j["P"] = d.P;
    j["check_poly"] = d.check_poly;
    j["gen_poly"] = d.gen_poly;
    j["dual_check_poly"] = d.dual_check_poly;
    if (d.has_certificate) {
        j["certificate"] = nlohmann::ordered_json{{"s", d.cert_s}, {"t", d.cert_t}};
    } else {
        j["certificate"] = nullptr;
    }
    if (!d.pin.empty()) j["pin"] = d.pin;
    return j;
}

namespace {

std::vector<std::int64_t> int_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw Error(Errc::parse_error, std::string("descriptor field missing or not an array: ") + key);
    std::vector<std::int64_t> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw Error(Errc::parse_error, std::string("non-integer entry in ") + key);
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

std::int64_t int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(Errc::parse_error, std::string("descriptor field missing or not an integer: ") + key);
    return j[key].get<std::int64_t>();
}

} // namespace

CodeDescriptor descriptor_from_json(const nlohmann::json& j) {
    CodeDescriptor d;
    d.q = int_field(j, "q");
    d.n = int_field(j, "n");
    d.P = int_array(j, "P");
    d.check_poly = int_array(j, "check_poly");
    d.gen_poly = int_array(j, "gen_poly");
    if (j.contains("dual_check_poly")) d.dual_check_poly = int_array(j, "dual_check_poly");
    if (j.contains("certificate") && !j["certificate"].is_null()) {
        d.has_certificate = true;
        d.cert_s = int_field(j["certificate"], "s");
        d.cert_t = int_field(j["certificate"], "t");
    }
    if (j.contains("pin")) {
        if (!j["pin"].is_string())
            throw Error(Errc::parse_error, "descriptor pin must be a string");
        d.pin = j["pin"].get<std::string>();
    }
    return d;
}

} // namespace isodual
