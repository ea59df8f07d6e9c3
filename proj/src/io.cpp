#include "hyhlab/io.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include "hyhlab/error.hpp"

namespace hyhlab::io {
namespace {

std::string field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    throw Error(Errc::ParseError, std::string("field '") + key + "' must be a hex string");
  }
  return it->get<std::string>();
}

BigUint hex_field(const Json& j, const char* key) {
  try {
    return biguint_from_hex(field(j, key));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Bytes bytes_field(const Json& j, const char* key) {
  try {
    return bytes_from_hex(field(j, key));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

Json read_json(const std::filesystem::path& path) {
  const Bytes raw = read_file(path);
  try {
    return Json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
}

ec::CurveParams params_from_json(const Json& j) {
  BigUint q = hex_field(j, "q"), a = hex_field(j, "a"), b = hex_field(j, "b");
  BigUint gx = hex_field(j, "Gx"), gy = hex_field(j, "Gy");
  BigUint n = hex_field(j, "n"), h = hex_field(j, "h");
  try {
    return ec::CurveParams::make(std::move(q), std::move(a), std::move(b),
                                 ec::Point(std::move(gx), std::move(gy)), std::move(n),
                                 std::move(h));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json params_to_json(const ec::CurveParams& params) {
  if (params.G.is_infinity()) {
    throw Error(Errc::InvalidArgument, "the params format has no encoding for G = O");
  }
  return Json{{"q", to_hex(params.q)},       {"a", to_hex(params.a)},   {"b", to_hex(params.b)},
              {"Gx", to_hex(params.G.x())}, {"Gy", to_hex(params.G.y())},
              {"n", to_hex(params.n)},       {"h", to_hex(params.h)}};
}

BigUint private_key_from_json(const Json& j) { return hex_field(j, "d"); }

Json private_key_to_json(const BigUint& d) { return Json{{"d", to_hex(d)}}; }

ec::Point public_key_from_json(const Json& j) {
  return ec::Point(hex_field(j, "Ux"), hex_field(j, "Uy"));
}

Json public_key_to_json(const ec::Point& U) {
  if (U.is_infinity()) throw Error(Errc::InvalidArgument, "public key is the point at infinity");
  return Json{{"Ux", to_hex(U.x())}, {"Uy", to_hex(U.y())}};
}

hyh::SigncryptedText sct_from_json(const Json& j) {
  hyh::SigncryptedText sct;
  const std::string rx = field(j, "Rx"), ry = field(j, "Ry");
  if (rx == "inf" || ry == "inf") {
    if (rx != ry) throw Error(Errc::ParseError, "Rx and Ry must both be \"inf\" for O");
    sct.R = ec::Point::infinity();
  } else {
    sct.R = ec::Point(hex_field(j, "Rx"), hex_field(j, "Ry"));
  }
  sct.C = bytes_field(j, "C");
  sct.s = hex_field(j, "s");
  return sct;
}

Json sct_to_json(const hyh::SigncryptedText& sct) {
  const bool inf = sct.R.is_infinity();
  return Json{{"Rx", inf ? std::string("inf") : to_hex(sct.R.x())},
              {"Ry", inf ? std::string("inf") : to_hex(sct.R.y())},
              {"C", bytes_to_hex(sct.C)},
              {"s", to_hex(sct.s)}};
}

Json param_report_to_json(const paramcheck::ParamReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        Json{{"check", paramcheck::check_name(c.check)}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"overall", report.overall()}, {"checks", std::move(checks)}};
}

std::string param_report_text(const paramcheck::ParamReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << std::left << std::setw(16) << paramcheck::check_name(c.check)
        << (c.pass ? "pass  " : "FAIL  ") << c.detail << '\n';
  }
  out << "overall: " << (report.overall() ? "pass" : "FAIL") << '\n';
  return out.str();
}

Json attack_report_to_json(const attacks::AttackReport& report, bool include_timing) {
  Json transcript = Json::array();
  for (const auto& e : report.transcript) {
    transcript.push_back(Json{{"actor", e.actor}, {"event", e.event}, {"detail", e.detail}});
  }
  Json j{{"attack", report.attack_name},
         {"mode", report.mode},
         {"success", report.success},
         {"recovered_secrets", report.recovered_secrets},
         {"oracle_queries", report.oracle_queries},
         {"counters", report.counters},
         {"findings", report.findings},
         {"transcript", std::move(transcript)}};
  if (include_timing) {
    j["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(report.wall_time).count();
  }
  return j;
}

std::string attack_report_text(const attacks::AttackReport& report) {
  std::ostringstream out;
  out << "attack: " << report.attack_name << " (" << report.mode << " victim)\n"
      << "result: " << (report.success ? "success" : "failed") << '\n';
  for (const auto& [name, value] : report.recovered_secrets) {
    out << "  " << name << " = " << value << '\n';
  }
  if (report.oracle_queries) out << "  oracle queries: " << report.oracle_queries << '\n';
  for (const auto& [name, value] : report.counters) out << "  " << name << ": " << value << '\n';
  for (const auto& [name, value] : report.findings) out << "  " << name << ": " << value << '\n';
  out << "transcript:\n";
  for (const auto& e : report.transcript) {
    out << "  [" << e.actor << "] " << e.event;
    if (!e.detail.empty()) out << ": " << e.detail;
    out << '\n';
  }
  return out.str();
}

Json demo_summary_to_json(const scenarios::DemoSummary& summary, bool include_timing) {
  Json rows = Json::array();
  for (const auto& row : summary.rows) {
    Json r{{"attack", scenarios::attack_name(row.name)}};
    if (row.paper) r["paper"] = attack_report_to_json(*row.paper, include_timing);
    if (row.strict) r["strict"] = attack_report_to_json(*row.strict, include_timing);
    rows.push_back(std::move(r));
  }
  return Json{{"paper_successes", summary.paper_successes},
              {"paper_runs", summary.paper_runs},
              {"strict_successes", summary.strict_successes},
              {"strict_runs", summary.strict_runs},
              {"ok", summary.ok()},
              {"attacks", std::move(rows)}};
}

std::string demo_summary_text(const scenarios::DemoSummary& summary) {
  auto cell = [](const std::optional<attacks::AttackReport>& r) -> std::string {
    if (!r) return "-";
    return r->success ? "success" : "blocked";
  };
  std::ostringstream out;
  out << std::left << std::setw(18) << "attack" << std::setw(10) << "paper" << "strict\n";
  for (const auto& row : summary.rows) {
    out << std::left << std::setw(18) << scenarios::attack_name(row.name) << std::setw(10)
        << cell(row.paper) << cell(row.strict) << '\n';
  }
  out << "paper successes: " << summary.paper_successes << "/" << summary.paper_runs
      << ", strict successes: " << summary.strict_successes << "/" << summary.strict_runs << '\n';
  return out.str();
}

}  // namespace hyhlab::io
