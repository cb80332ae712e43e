// Acceptance gate: runs every criterion at its pinned bounds and prints one
// line per criterion; the whole suite is executed twice with the same seed
// and the reports compared byte for byte.

#include <cstring>
#include <iostream>

#include "nnml/selftest.hpp"

int main(int argc, char** argv) {
  nnml::SelftestOptions opt;
  for (int i = 1; i < argc; i++) {
    std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << a << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--seed")
      opt.seed = std::strtoull(next().c_str(), nullptr, 10);
    else if (a == "--only")
      opt.only = next();
    else if (a == "--jobs")
      opt.jobs = std::atoi(next().c_str());
    else if (a == "--json")
      opt.json = true;
    else if (a == "--no-repeat")
      opt.repeat = false;
    else {
      std::cerr << "usage: acceptance [--seed N] [--only PREFIX] [--jobs N] "
                   "[--json] [--no-repeat]\n";
      return 2;
    }
  }
  nnml::SelftestResult res = nnml::runSelftest(opt);
  std::cout << res.report;
  return res.failures == 0 ? 0 : 1;
}
