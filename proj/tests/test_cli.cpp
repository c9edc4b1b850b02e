#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "padiclat/io.hpp"

using namespace padiclat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(PADICLAT_FIXTURES) + "/" + name; }

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("padiclat_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string tmp(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("toy attack commands") {
  auto u = run({"attack", "uniformizer", "--pub", fixture("toy.pub")});
  CHECK(u.code == 0);
  CHECK(u.out.find("lambda2=1/20\n") != std::string::npos);
  CHECK(u.out.find("exponent=1/20\n") != std::string::npos);
  CHECK(u.out.find("gamma= -1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n") != std::string::npos);

  auto d = run({"attack", "decrypt", "--pub", fixture("toy.pub"), "--ct", fixture("toy.ct")});
  CHECK(d.code == 0);
  CHECK(d.out == "1 1 0 1\n");

  auto s = run({"attack", "uniformizer", "--shortcut", "--pub", fixture("toy.pub")});
  CHECK(s.code == 2);
  CHECK(s.err.find("NotCoprime") != std::string::npos);

  auto o = run({"oracle", "lvp", "--pub", fixture("toy.pub")});
  CHECK(o.code == 0);
  CHECK(o.out.find("lambda2=1/20\n") != std::string::npos);
}

TEST_CASE("scheme commands") {
  CHECK(run({"--seed", "5", "keygen", "--p", "3", "--n", "4", "--m", "2", "--delta", "1/2", "--out", tmp("k.key"),
             "--public-out", tmp("k.pub")})
            .code == 0);
  // deterministic in the seed
  auto again = run({"keygen", "--p", "3", "--n", "4", "--m", "2", "--delta", "1/2", "--seed", "5"});
  CHECK(again.out == read_file(tmp("k.key")));

  CHECK(run({"sign", "--key", tmp("k.key"), "--message", "hello", "--out", tmp("s.sig")}).code == 0);
  auto ok = run({"verify", "--pub", tmp("k.pub"), "--message", "hello", "--sig", tmp("s.sig")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  // |t - v| < 1 only pins one residue digit, so a wrong message passes with
  // probability 1/(p-1); some of eight must fail.
  int rejected = 0;
  for (int i = 0; i < 8; ++i)
    rejected += run({"verify", "--pub", tmp("k.pub"), "--message", "other" + std::to_string(i), "--sig", tmp("s.sig")})
                    .code == 1;
  CHECK(rejected > 0);

  // v moved off the lattice
  auto sig = read_file(tmp("s.sig"));
  const auto v = sig.find("v= ") + 3;
  sig.replace(v, sig.find(' ', v) - v, "1/3");
  write_file(tmp("t.sig"), sig);
  CHECK(run({"verify", "--pub", tmp("k.pub"), "--message", "hello", "--sig", tmp("t.sig")}).code == 1);
  write_file(tmp("bad.sig"), "r=zz\n");
  CHECK(run({"verify", "--pub", tmp("k.pub"), "--message", "hello", "--sig", tmp("bad.sig")}).code == 1);

  CHECK(run({"encrypt", "--pub", tmp("k.pub"), "--plaintext", "2,1", "--out", tmp("c.ct")}).code == 0);
  CHECK(run({"decrypt", "--key", tmp("k.key"), "--ct", tmp("c.ct")}).out == "2 1\n");
  CHECK(run({"attack", "decrypt", "--pub", tmp("k.pub"), "--ct", tmp("c.ct")}).out == "2 1\n");

  CHECK(run({"attack", "forge", "--pub", tmp("k.pub"), "--message", "forged", "--out", tmp("f.sig")}).code == 0);
  CHECK(run({"verify", "--pub", tmp("k.pub"), "--message", "forged", "--sig", tmp("f.sig")}).code == 0);

  write_file(tmp("msg.bin"), std::string("with\0nul", 8));
  CHECK(run({"sign", "--key", tmp("k.key"), "--message-file", tmp("msg.bin"), "--out", tmp("m.sig")}).code == 0);
  CHECK(run({"verify", "--pub", tmp("k.pub"), "--message-file", tmp("msg.bin"), "--sig", tmp("m.sig")}).code == 0);
  auto direct = run({"verify", "--pub", tmp("k.pub"), "--message", "with", "--sig", tmp("m.sig")});
  CHECK((direct.code == 0 || direct.code == 1));
}

TEST_CASE("input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"keygen", "--p", "4", "--n", "2", "--m", "1"}).code == 2);
  CHECK(run({"attack", "decrypt", "--pub", fixture("missing.pub"), "--ct", fixture("toy.ct")}).code == 2);
  write_file(tmp("broken.pub"), "p=2\nn=2\n");
  CHECK(run({"attack", "uniformizer", "--pub", tmp("broken.pub")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench") {
  auto b = run({"bench", "--n", "20,10", "--p", "3"});
  CHECK(b.code == 0);
  std::istringstream in(b.out);
  std::string header, first, second, extra;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "n,p,repetition,millis,abs_value_count,bound,exponent");
  CHECK(first.rfind("10,3,0,", 0) == 0);
  CHECK(second.rfind("20,3,0,", 0) == 0);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(run({"bench", "--reps", "0"}).out == "n,p,repetition,millis,abs_value_count,bound,exponent\n");
}
