#pragma once

#include <string>

#include <json.hpp>

#include "induction.hpp"
#include "oracle.hpp"

namespace arthur {

struct Document {
    ArthurParam psi;
    std::vector<CuspidalLabel> cuspidals;
    std::string group_type; // symplectic | orthogonal_odd | orthogonal_even
    int hasse = 1;
};

// Strict parser: version must be 1, unknown fields are rejected, half-integers
// never appear as floats.
Document parse_document(const std::string& json_text);

nlohmann::json half_json(HalfInt h);
HalfInt half_from_json(const nlohmann::json& j);
HalfInt parse_half(const std::string& text);

// One '+'/'-' per good-parity class in canonical order.
EpsChar parse_eps(const ArthurParam& psi, const std::string& spec);

nlohmann::json cmd_convert(const Document& doc);
nlohmann::json cmd_packet(const Document& doc, const std::string& eps_spec);
nlohmann::json cmd_induce(const Document& doc, const std::string& eps_spec, int constituent,
                          const std::string& rho_name, int a, int b, int copies, int margin);
nlohmann::json cmd_jac(const Document& doc, const std::string& eps_spec, int constituent,
                       const std::string& rho_name, const std::string& cells_spec);
// Throws on unknown suite; the report carries pass/fail per item.
nlohmann::json cmd_check(const std::string& suite, int max_gap, int max_size);

nlohmann::json error_json(ErrorKind kind, const std::string& message);

} // namespace arthur
