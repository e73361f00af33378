#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "hodge/verify.hpp"

using namespace hodge;

namespace {

struct Budget {
  SweepResult (*run)(const VerifyConfig&);
  double seconds;
};

SweepResult lifting(const VerifyConfig& c) { return sweep_lifting(c); }

std::string capture(const std::string& command, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) out.append(buffer.data(), n);
  status = pclose(pipe.release());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const VerifyConfig config;
  const std::array<Budget, 8> budgets{{{sweep_dominance, 10},
                                       {sweep_hodge_identity, 5},
                                       {sweep_hdg_pr, 300},
                                       {sweep_e3_bijection, 600},
                                       {sweep_hdg_filt, 30},
                                       {lifting, 60},
                                       {sweep_isotropic, 60},
                                       {sweep_degeneration, 300}}};
  int failed = 0;
  for (const auto& b : budgets) {
    const SweepResult r = b.run(config);
    const bool ok = r.ok() && r.seconds < b.seconds;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << r.criterion << ": " << r.name << " (cases=" << r.cases
              << ", failures=" << r.failures << (r.detail.empty() ? "" : ", " + r.detail) << ", " << r.seconds
              << " s, budget " << b.seconds << " s)\n";
    for (const auto& s : r.samples) std::cout << "    " << s << '\n';
  }

  // Determinism: the CLI report twice, byte for byte.
  bool same = false;
  std::string how;
  if (argc > 1) {
    const std::string command = std::string("\"") + argv[1] + "\" verify all --max-dim 5 --seed 7";
    int s1 = 0;
    int s2 = 0;
    const std::string a = capture(command, s1);
    const std::string b = capture(command, s2);
    same = !a.empty() && a == b && s1 == 0 && s2 == 0;
    how = "CLI run twice, " + std::to_string(a.size()) + " bytes";
  } else {
    VerifyConfig c;
    c.seed = 7;
    same = format_report(c, run_all(c)) == format_report(c, run_all(c));
    how = "in-process report twice";
  }
  if (!same) ++failed;
  std::cout << (same ? "PASS" : "FAIL") << " criterion 9: verify all --max-dim 5 --seed 7 is byte-identical (" << how
            << ")\n";
  return failed == 0 ? 0 : 1;
}
