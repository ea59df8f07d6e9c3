#include "cli.hpp"

#include <CLI11.hpp>
#include <optional>

#include "hyhlab/error.hpp"
#include "hyhlab/io.hpp"
#include "hyhlab/paramcheck.hpp"
#include "hyhlab/presets.hpp"
#include "hyhlab/scenarios.hpp"

namespace hyhlab::cli {
namespace {

struct Globals {
  std::string params_path;
  std::string mode = "paper";
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  std::string hash = "SHA-256";
};

struct SchemeFiles {
  std::string sender_key;
  std::string sender_pub;
  std::string recipient_key;
  std::string recipient_pub;
  std::string in;
  std::string in2;
  std::string message;
  std::string pub_out;
  std::string force_r;
  std::string r;
};

struct AttackFlags {
  std::string name;
  bool self_stage = false;
  bool timing = false;
  std::uint64_t max_order = 4096;
  std::uint64_t oracle_budget = 64;
};

class Runner {
 public:
  Runner(Globals globals, std::ostream& out, std::ostream& err)
      : g_(std::move(globals)), out_(out), err_(err) {}

  int params_validate() {
    const auto report = paramcheck::validate_domain_params(params());
    emit(g_.format == "text" ? io::param_report_text(report)
                             : io::param_report_to_json(report).dump(2) + "\n");
    return report.overall() ? kExitOk : kExitFailed;
  }

  int keygen(const SchemeFiles& f) {
    const auto keys = hyh::gen(config(), g_.seed);
    if (g_.out_path.empty() && f.pub_out.empty()) {
      io::Json both = io::private_key_to_json(keys.d);
      const io::Json pub = io::public_key_to_json(keys.U);
      both["Ux"] = pub.at("Ux");
      both["Uy"] = pub.at("Uy");
      out_ << both.dump(2) << '\n';
      return kExitOk;
    }
    if (!g_.out_path.empty()) write_json(g_.out_path, io::private_key_to_json(keys.d));
    if (!f.pub_out.empty()) write_json(f.pub_out, io::public_key_to_json(keys.U));
    return kExitOk;
  }

  int signcrypt(const SchemeFiles& f) {
    const auto cfg = config();
    const BigUint d_A = io::private_key_from_json(io::read_json(need(f.sender_key, "--sender-key")));
    const ec::Point U_B = io::public_key_from_json(io::read_json(need(f.recipient_pub, "--recipient-pub")));
    const Bytes message = io::read_file(need(f.in, "--in"));
    hyh::SigncryptedText sct;
    if (!f.force_r.empty()) {
      sct = hyh::signcrypt_with_nonce(cfg, d_A, U_B, message, biguint_from_hex(f.force_r));
    } else {
      Rng rng(g_.seed);
      sct = hyh::signcrypt(cfg, d_A, U_B, message, rng);
    }
    emit(io::sct_to_json(sct).dump(2) + "\n");
    return kExitOk;
  }

  int unsigncrypt(const SchemeFiles& f) {
    const auto cfg = config();
    const BigUint d_B = io::private_key_from_json(io::read_json(need(f.recipient_key, "--recipient-key")));
    const ec::Point U_A = io::public_key_from_json(io::read_json(need(f.sender_pub, "--sender-pub")));
    const auto sct = io::sct_from_json(io::read_json(need(f.in, "--in")));
    const auto message = hyh::unsigncrypt(cfg, d_B, U_A, sct);
    if (!message) {
      err_ << "rejected\n";
      return kExitFailed;
    }
    if (g_.out_path.empty()) {
      out_.write(reinterpret_cast<const char*>(message->data()),
                 static_cast<std::streamsize>(message->size()));
    } else {
      io::write_file(g_.out_path, *message);
    }
    return kExitOk;
  }

  int verify(const SchemeFiles& f) {
    const auto cfg = config();
    const ec::Point U_A = io::public_key_from_json(io::read_json(need(f.sender_pub, "--sender-pub")));
    const auto sct = io::sct_from_json(io::read_json(need(f.in, "--in")));
    const Bytes message = io::read_file(need(f.message, "--message"));
    const bool valid = hyh::public_verify(cfg, U_A, message, sct.R, sct.s);
    emit(g_.format == "text" ? std::string(valid ? "valid\n" : "invalid\n")
                             : io::Json{{"valid", valid}}.dump(2) + "\n");
    return valid ? kExitOk : kExitFailed;
  }

  int attack(const AttackFlags& a, const SchemeFiles& f) {
    const auto name = scenarios::parse_attack_name(a.name);
    const auto cfg = config();
    attacks::AttackReport report;
    const bool file_driven = !a.self_stage && (name == scenarios::AttackName::Ephemeral ||
                                               name == scenarios::AttackName::NonceReuse ||
                                               name == scenarios::AttackName::ForwardSecrecy);
    if (file_driven) {
      report = attack_from_files(name, cfg, f);
    } else {
      report = scenarios::run_scenario(name, cfg, g_.seed, scenario_options(a));
    }
    emit(g_.format == "text" ? io::attack_report_text(report)
                             : io::attack_report_to_json(report, a.timing).dump(2) + "\n");
    return report.success ? kExitOk : kExitFailed;
  }

  int demo_all(const AttackFlags& a, bool mode_given) {
    const auto mode = hyh::parse_mode(g_.mode);
    const bool paper = !mode_given || mode == hyh::Mode::Paper;
    const bool strict = !mode_given || mode == hyh::Mode::Strict;
    const auto summary =
        scenarios::demo_all(params(), g_.hash, g_.seed, paper, strict, scenario_options(a));
    emit(g_.format == "text" ? io::demo_summary_text(summary)
                             : io::demo_summary_to_json(summary, a.timing).dump(2) + "\n");
    return summary.ok() ? kExitOk : kExitFailed;
  }

 private:
  ec::CurveParams params() const {
    if (g_.params_path.empty()) return presets::toy20();
    return io::params_from_json(io::read_json(g_.params_path));
  }

  hyh::SchemeConfig config() const {
    return hyh::SchemeConfig(params(), hyh::parse_mode(g_.mode), g_.hash);
  }

  scenarios::ScenarioOptions scenario_options(const AttackFlags& a) const {
    scenarios::ScenarioOptions options;
    options.search.max_order = a.max_order;
    options.oracle_budget = a.oracle_budget;
    return options;
  }

  static const std::string& need(const std::string& value, const char* flag) {
    if (value.empty()) throw Error(Errc::InvalidArgument, std::string(flag) + " is required");
    return value;
  }

  attacks::AttackReport attack_from_files(scenarios::AttackName name,
                                          const hyh::SchemeConfig& cfg, const SchemeFiles& f) {
    const auto sct = io::sct_from_json(io::read_json(need(f.in, "--in")));
    const char* label = scenarios::attack_name(name).data();
    try {
      switch (name) {
        case scenarios::AttackName::Ephemeral: {
          const auto U_A = io::public_key_from_json(io::read_json(need(f.sender_pub, "--sender-pub")));
          const auto U_B =
              io::public_key_from_json(io::read_json(need(f.recipient_pub, "--recipient-pub")));
          return attacks::recover_sender_key(cfg, U_A, U_B, sct, biguint_from_hex(need(f.r, "--r")));
        }
        case scenarios::AttackName::NonceReuse: {
          const auto sct2 = io::sct_from_json(io::read_json(need(f.in2, "--in2")));
          const Bytes m1 = io::read_file(need(f.message, "--message"));
          attacks::AttackReport report;
          report.attack_name = label;
          report.mode = hyh::mode_name(cfg.mode());
          if (sct.R != sct2.R) {
            report.note("mallory", "no-shared-R", "the two signcrypted texts use different R");
            report.findings["outcome"] = "distinct-nonces";
            return report;
          }
          const auto recovery = attacks::nonce_reuse_recover(sct.C, sct2.C, m1);
          report.recovered_secrets["M"] = bytes_to_hex(recovery.message);
          report.findings["tag_xor"] = bytes_to_hex(recovery.tag_xor);
          report.findings["length_mismatch"] = recovery.length_mismatch ? "yes" : "no";
          report.note("mallory", "recovered", "M2 = C1 XOR C2 XOR M1");
          report.success = true;
          return report;
        }
        case scenarios::AttackName::ForwardSecrecy: {
          const BigUint d_A =
              io::private_key_from_json(io::read_json(need(f.sender_key, "--sender-key")));
          const auto U_B =
              io::public_key_from_json(io::read_json(need(f.recipient_pub, "--recipient-pub")));
          const Bytes message = io::read_file(need(f.message, "--message"));
          return attacks::break_forward_secrecy(cfg, d_A, U_B, sct, message);
        }
        default:
          break;
      }
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::EphemeralMismatch:
        case Errc::ConsistencyFailure:
        case Errc::NotInvertible: {
          attacks::AttackReport report;
          report.attack_name = label;
          report.mode = hyh::mode_name(cfg.mode());
          report.findings["error"] = e.what();
          return report;
        }
        default:
          throw;
      }
    }
    throw Error(Errc::InvalidArgument, "attack has no file-driven form");
  }

  void write_json(const std::string& path, const io::Json& j) {
    const std::string text = j.dump(2) + "\n";
    io::write_file(path, as_bytes(text));
  }

  void emit(const std::string& text) {
    if (g_.out_path.empty()) {
      out_ << text;
    } else {
      io::write_file(g_.out_path, as_bytes(text));
    }
  }

  Globals g_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"HYH signcryption lab: scheme operations, parameter checks and attacks",
               "hyhlab"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--params", g.params_path, "Domain parameters JSON (default: built-in toy curve)");
  auto* mode_opt =
      app.add_option("--mode", g.mode, "Victim mode")->check(CLI::IsMember({"paper", "strict"}));
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--out", g.out_path, "Write the primary output here instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--hash", g.hash, "Hash algorithm");

  SchemeFiles f;
  AttackFlags a;

  auto* params_cmd = app.add_subcommand("params", "Domain parameters");
  params_cmd->require_subcommand(1);
  auto* validate_cmd = params_cmd->add_subcommand("validate", "Run the nine parameter checks");

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--pub-out", f.pub_out, "Public key output file");

  auto* sc_cmd = app.add_subcommand("signcrypt", "Signcrypt a message file");
  sc_cmd->add_option("--sender-key", f.sender_key, "Sender private key JSON")->required();
  sc_cmd->add_option("--recipient-pub", f.recipient_pub, "Recipient public key JSON")->required();
  sc_cmd->add_option("--in", f.in, "Message file")->required();
  sc_cmd->add_option("--force-r", f.force_r, "Use this nonce (hex); paper mode only");

  auto* usc_cmd = app.add_subcommand("unsigncrypt", "Unsigncrypt a signcrypted text");
  usc_cmd->add_option("--recipient-key", f.recipient_key, "Recipient private key JSON")->required();
  usc_cmd->add_option("--sender-pub", f.sender_pub, "Sender public key JSON")->required();
  usc_cmd->add_option("--in", f.in, "Signcrypted text JSON")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check sR = H(M)G + x_R U_A");
  verify_cmd->add_option("--sender-pub", f.sender_pub, "Sender public key JSON")->required();
  verify_cmd->add_option("--in", f.in, "Signcrypted text JSON")->required();
  verify_cmd->add_option("--message", f.message, "Claimed plaintext file")->required();

  auto* attack_cmd = app.add_subcommand("attack", "Run one attack");
  attack_cmd->add_option("name", a.name, "Attack")
      ->required()
      ->check(CLI::IsMember({"ephemeral", "nonce-reuse", "invalid-curve", "uks",
                             "forward-secrecy", "degenerate-key"}));
  attack_cmd->add_flag("--self-stage", a.self_stage, "Generate victims and traffic from --seed");
  attack_cmd->add_flag("--timing", a.timing, "Include wall time in the JSON report");
  attack_cmd->add_option("--max-order", a.max_order, "Largest subgroup order for invalid curves");
  attack_cmd->add_option("--oracle-budget", a.oracle_budget, "Confirmation oracle query budget");
  attack_cmd->add_option("--sender-pub", f.sender_pub, "U_A (ephemeral)");
  attack_cmd->add_option("--recipient-pub", f.recipient_pub, "U_B (ephemeral, forward-secrecy)");
  attack_cmd->add_option("--sender-key", f.sender_key, "Leaked d_A (forward-secrecy)");
  attack_cmd->add_option("--in", f.in, "Signcrypted text JSON");
  attack_cmd->add_option("--in2", f.in2, "Second signcrypted text JSON (nonce-reuse)");
  attack_cmd->add_option("--message", f.message, "Known plaintext file");
  attack_cmd->add_option("--r", f.r, "Leaked ephemeral r (hex)");

  auto* demo_cmd = app.add_subcommand("demo", "Scripted demonstrations");
  demo_cmd->require_subcommand(1);
  auto* demo_all_cmd = demo_cmd->add_subcommand("all", "Every attack in both modes");
  demo_all_cmd->add_flag("--timing", a.timing, "Include wall time in the JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Runner runner(g, out, err);
  try {
    if (validate_cmd->parsed()) return runner.params_validate();
    if (keygen_cmd->parsed()) return runner.keygen(f);
    if (sc_cmd->parsed()) return runner.signcrypt(f);
    if (usc_cmd->parsed()) return runner.unsigncrypt(f);
    if (verify_cmd->parsed()) return runner.verify(f);
    if (attack_cmd->parsed()) return runner.attack(a, f);
    if (demo_all_cmd->parsed()) return runner.demo_all(a, mode_opt->count() > 0);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

}  // namespace hyhlab::cli
