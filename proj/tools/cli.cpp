#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "padiclat/attack.hpp"
#include "padiclat/bench.hpp"
#include "padiclat/io.hpp"

namespace padiclat {

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
      return 3;
    case ErrorKind::ReductionFailed:
    case ErrorKind::NotUniformizer:
    case ErrorKind::DecryptionAmbiguous:
    case ErrorKind::OracleInconclusive:
      return 1;
    default:
      return 2;
  }
}

std::vector<std::uint8_t> seed_bytes(const std::string& label, std::uint64_t seed) {
  std::vector<std::uint8_t> s(label.begin(), label.end());
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<std::uint8_t>(seed >> (8 * i)));
  return s;
}

struct Message {
  std::string text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--message", text, "Message text");
    auto* b = cmd->add_option("--message-file", file, "Read the message from a file");
    a->excludes(b);
  }
  std::string get() const { return file.empty() ? text : read_file(file); }
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic lattice workbench: schemes, attack, oracles and benchmarks", "padiclat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::int64_t precision = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  app.add_option("--precision", precision, "Relative p-adic precision (default: from the key file, or 128)")
      ->check(CLI::Range(std::int64_t{1}, kMaxPrecision));
  app.add_option("--seed", seed, "Seed for every random choice");
  app.add_option("--budget", budget, "Enumeration budget for oracles");

  std::string out_path;
  auto emit = [&](const std::string& text) {
    if (out_path.empty())
      out << text;
    else
      write_file(out_path, text);
  };
  auto prec = [&]() -> std::optional<std::int64_t> {
    return precision ? std::optional<std::int64_t>(precision) : std::nullopt;
  };
  auto load_key = [&](const std::string& path) { return parse_key_file(read_file(path), prec()); };

  std::function<int()> action;

  // keygen
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a random key pair");
  unsigned long kp_p = 0;
  int kp_n = 0, kp_m = 0;
  std::string kp_delta, kp_pub_out;
  keygen_cmd->add_option("--p", kp_p, "Prime")->required()->check(CLI::Range(2UL, 1UL << 20));
  keygen_cmd->add_option("--n", kp_n, "Degree")->required()->check(CLI::Range(2, 512));
  keygen_cmd->add_option("--m", kp_m, "Lattice rank")->required()->check(CLI::PositiveNumber);
  keygen_cmd->add_option("--delta", kp_delta, "Noise bound num/den (encryption keys)");
  keygen_cmd->add_option("--out", out_path, "Key pair file");
  keygen_cmd->add_option("--public-out", kp_pub_out, "Also write the public key here");
  keygen_cmd->callback([&] {
    action = [&] {
      std::optional<mpq_class> delta;
      if (!kp_delta.empty()) {
        const auto q = parse_rationals(kp_delta);
        if (q.size() != 1) fail(ErrorKind::ParseError, "delta must be one rational");
        delta = q[0];
      }
      Shake256Stream rng(seed_bytes("keygen", seed));
      const KeyPair kp = random_keypair(kp_p, kp_n, kp_m, delta, rng, precision ? precision : kDefaultPrecision);
      emit(emit_key_pair(kp));
      if (!kp_pub_out.empty()) write_file(kp_pub_out, emit_public_key(kp.pub));
      return 0;
    };
  });

  // sign / verify
  auto* sign_cmd = app.add_subcommand("sign", "Sign a message with a key pair");
  std::string key_path, pub_path, sig_path, ct_path;
  Message msg;
  sign_cmd->add_option("--key", key_path, "Key pair file")->required();
  msg.attach(sign_cmd);
  sign_cmd->add_option("--out", out_path, "Signature file");
  sign_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(key_path);
      if (!key.pair) fail(ErrorKind::InvalidArgument, "key file has no private section");
      Shake256Stream salts(seed_bytes("salt", seed));
      emit(emit_signature(sign(*key.pair, msg.get(), salts)));
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--pub", pub_path, "Public key file")->required();
  verify_cmd->add_option("--sig", sig_path, "Signature file")->required();
  msg.attach(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      bool ok = false;
      try {
        ok = verify(key.pub, msg.get(), parse_signature(key.pub, read_file(sig_path)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParseError) throw;
        err << e.what() << "\n";
      }
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    };
  });

  // encrypt / decrypt
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt digits in [0, p)");
  std::vector<unsigned long> plaintext;
  encrypt_cmd->add_option("--pub", pub_path, "Public key file")->required();
  encrypt_cmd->add_option("--plaintext", plaintext, "m digits")->required()->delimiter(',');
  encrypt_cmd->add_option("--out", out_path, "Ciphertext file");
  encrypt_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      Shake256Stream rng(seed_bytes("noise", seed));
      emit(emit_ciphertext(encrypt(key.pub, plaintext, rng)));
      return 0;
    };
  });

  auto print_digits = [&](const std::vector<unsigned long>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i];
    out << "\n";
  };

  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt with the private key");
  decrypt_cmd->add_option("--key", key_path, "Key pair file")->required();
  decrypt_cmd->add_option("--ct", ct_path, "Ciphertext file")->required();
  decrypt_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(key_path);
      if (!key.pair) fail(ErrorKind::InvalidArgument, "key file has no private section");
      print_digits(decrypt(*key.pair, parse_ciphertext(key, read_file(ct_path))));
      return 0;
    };
  });

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Break a key from public data only");
  attack_cmd->require_subcommand(1);
  bool shortcut = false;
  auto* unif_cmd = attack_cmd->add_subcommand("uniformizer", "Recover a uniformizer from F");
  unif_cmd->add_option("--pub", pub_path, "Public key file")->required();
  unif_cmd->add_flag("--shortcut", shortcut, "Shift zeta by F_(n-1)/n mod p instead (needs gcd(n, p) = 1)");
  unif_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      const auto& ctx = key.pub.ctx;
      if (shortcut) {
        const auto gamma = uniformizer_shortcut(ctx);
        out << "method=shortcut\n";
        out << "exponent=" << abs_value(ctx, gamma).exponent_string() << "\n";
        out << "gamma= " << format_coefficients(gamma.coeffs()) << "\n";
        return 0;
      }
      const auto u = recover_uniformizer(ctx);
      out << "method=algorithm1\n";
      out << "lambda2=" << u.lambda2.exponent_string() << "\n";
      out << "exponent=" << abs_value(ctx, u.gamma).exponent_string() << "\n";
      out << "gamma= " << format_coefficients(u.gamma.coeffs()) << "\n";
      out << "abs_values=" << u.abs_value_count << "\n";
      return 0;
    };
  });

  auto* forge_cmd = attack_cmd->add_subcommand("forge", "Forge a signature");
  forge_cmd->add_option("--pub", pub_path, "Public key file")->required();
  msg.attach(forge_cmd);
  forge_cmd->add_option("--out", out_path, "Signature file");
  forge_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      Shake256Stream salts(seed_bytes("forge", seed));
      const std::string m = msg.get();
      const auto sig = forge_signature(key.pub, m, salts);
      emit(emit_signature(sig));
      if (!verify(key.pub, m, sig)) {
        err << "forged signature does not verify\n";
        return 1;
      }
      return 0;
    };
  });

  auto* adec_cmd = attack_cmd->add_subcommand("decrypt", "Decrypt without the private key");
  adec_cmd->add_option("--pub", pub_path, "Public key file")->required();
  adec_cmd->add_option("--ct", ct_path, "Ciphertext file")->required();
  adec_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      const auto r = attack_decrypt(key.pub, parse_ciphertext(key, read_file(ct_path)));
      print_digits(r.plaintext);
      return 0;
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  int depth = 2;
  auto* lvp_cmd = oracle_cmd->add_subcommand("lvp", "lambda_1 and lambda_2 of the public lattice by enumeration");
  lvp_cmd->add_option("--pub", pub_path, "Public key file")->required();
  lvp_cmd->add_option("--depth", depth, "Digits per coordinate")->check(CLI::Range(1, 16));
  lvp_cmd->callback([&] {
    action = [&] {
      const auto key = load_key(pub_path);
      const auto r = lvp_oracle(key.pub.ctx, key.pub.beta, depth, budget);
      out << "lambda1=" << r.lambda1.exponent_string() << "\n";
      out << "lambda2=" << r.lambda2.exponent_string() << "\n";
      out << "witness= " << format_coefficients(r.witness.coeffs()) << "\n";
      out << "enumerated=" << r.enumerated << "\n";
      return 0;
    };
  });

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time uniformizer recovery; CSV output");
  std::vector<int> bench_n = {50, 100, 200};
  std::vector<unsigned long> bench_p = {5, 7};
  int reps = 1;
  bench_cmd->add_option("--n", bench_n, "Degrees")->delimiter(',')->check(CLI::Range(2, 4096));
  bench_cmd->add_option("--p", bench_p, "Primes")->delimiter(',')->check(CLI::Range(2UL, 1UL << 20));
  bench_cmd->add_option("--reps", reps, "Repetitions per cell")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--out", out_path, "CSV file");
  bench_cmd->callback([&] {
    action = [&] {
      emit(bench_csv(bench_uniformizer(bench_n, bench_p, reps, seed, precision ? precision : kDefaultPrecision)));
      return 0;
    };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) return 2;
  try {
    return action();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace padiclat
