#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hyhlab/attacks.hpp"
#include "hyhlab/hyh.hpp"
#include "hyhlab/paramcheck.hpp"
#include "hyhlab/scenarios.hpp"

/// File formats. Every integer is a lowercase hex string without prefix.
///   params:      {"q","a","b","Gx","Gy","n","h"}
///   private key: {"d"}
///   public key:  {"Ux","Uy"}
///   signcrypted: {"Rx","Ry","C","s"} with Rx = Ry = "inf" for O
/// Parsers throw ParseError on missing or malformed fields.
namespace hyhlab::io {

using Json = nlohmann::ordered_json;

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data);
Json read_json(const std::filesystem::path& path);

/// The CurveParams invariants (ranges of a, b, G) surface as ParseError too.
ec::CurveParams params_from_json(const Json& j);
Json params_to_json(const ec::CurveParams& params);

BigUint private_key_from_json(const Json& j);
Json private_key_to_json(const BigUint& d);
ec::Point public_key_from_json(const Json& j);
Json public_key_to_json(const ec::Point& U);

hyh::SigncryptedText sct_from_json(const Json& j);
Json sct_to_json(const hyh::SigncryptedText& sct);

Json param_report_to_json(const paramcheck::ParamReport& report);
std::string param_report_text(const paramcheck::ParamReport& report);

/// wall_time is left out unless include_timing, so equal runs give equal bytes.
Json attack_report_to_json(const attacks::AttackReport& report, bool include_timing = false);
std::string attack_report_text(const attacks::AttackReport& report);

Json demo_summary_to_json(const scenarios::DemoSummary& summary, bool include_timing = false);
std::string demo_summary_text(const scenarios::DemoSummary& summary);

}  // namespace hyhlab::io
