// End-to-end acceptance run: one pass/fail line per criterion.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "asr/verify.hpp"

namespace {

bool all_ok(const std::vector<asr::CheckResult>& results, std::string* why) {
  for (const asr::CheckResult& r : results) {
    if (!r.pass) {
      *why = r.name + (r.detail.empty() ? "" : ": " + r.detail);
      return false;
    }
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(ASR_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

int report(int number, const std::string& name, bool pass, const std::string& why) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!pass && !why.empty()) std::cout << " [" << why << "]";
  std::cout << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  std::string why;

  why.clear();
  failures += report(1, "Catalan counts for D <= 10",
                     all_ok(asr::verify_counts(10), &why), why);

  {
    bool pass = true;
    why.clear();
    for (int D : {2, 4, 6}) {
      const std::string golden =
          read_file(std::string(ASR_GOLDEN_DIR) + "/table_d" + std::to_string(D) + ".txt");
      const std::string actual = run_cli("table --d " + std::to_string(D));
      if (golden.empty() || golden != actual) {
        pass = false;
        why = "table --d " + std::to_string(D) + " differs from golden file";
        break;
      }
    }
    failures += report(2, "golden tables for D = 2, 4, 6", pass, why);
  }

  why.clear();
  failures += report(3, "round trips compose to identity for D <= 10",
                     all_ok(asr::verify_roundtrip(10), &why), why);

  why.clear();
  failures += report(4, "enumeration equals power-set oracle for D <= 8",
                     all_ok(asr::verify_oracle(8), &why), why);

  why.clear();
  failures += report(5, "marking-vector suite for D <= 10",
                     all_ok(asr::verify_epsilon(10), &why), why);

  why.clear();
  failures += report(6, "subspace-lattice suite for D <= 8",
                     all_ok(asr::verify_lattice(8), &why), why);

  why.clear();
  failures += report(7, "seven worked shift examples",
                     all_ok(asr::verify_shift_examples(), &why), why);

  why.clear();
  failures += report(8, "exceptional family records",
                     all_ok(asr::verify_exceptional(), &why), why);

  return failures == 0 ? 0 : 1;
}
