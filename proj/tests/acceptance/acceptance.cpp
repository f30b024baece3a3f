// Acceptance suite: runs every verification criterion at its pinned
// parameters and prints one pass/fail line per criterion.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "homspec/verify.hpp"

int main(int argc, char** argv) {
  using namespace homspec::verify;
  Options opt;
  opt.threads = 2;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&](const char* flag) -> const char* {
      if (i + 1 >= argc) {
        std::cerr << flag << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      only.push_back(next("--criterion"));
    } else if (arg == "--threads") {
      opt.threads = std::atoi(next("--threads"));
    } else if (arg == "--seed") {
      opt.seed = std::strtoull(next("--seed"), nullptr, 10);
    } else if (arg == "--pairs") {
      opt.pairs = std::atoi(next("--pairs"));
    } else {
      std::cerr << "usage: acceptance [--criterion ID]... [--threads N] [--seed S] [--pairs P]\n";
      return 2;
    }
  }

  struct Item {
    const char* id;
    CriterionResult (*fn)(const Options&);
  };
  const std::vector<Item> items = {
      {"C1", diii_lambda1_exactness}, {"C2", diii_lambda2_regimes},
      {"C3", symmetric_anchors},      {"C4", nu_instability},
      {"C5", aii_lambda1_exactness},  {"C6", cross_oracle},
      {"C7.1", diii_uniqueness},      {"C7.2", aii_uniqueness},
      {"C8", property_suites},
  };

  bool all_pass = true;
  bool ran_any = false;
  for (const auto& item : items) {
    if (!only.empty()) {
      bool wanted = false;
      for (const auto& o : only) wanted = wanted || o == item.id;
      if (!wanted) continue;
    }
    ran_any = true;
    auto r = item.fn(opt);
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds
              << "s)\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    all_pass = all_pass && r.pass;
  }
  if (!ran_any) {
    std::cerr << "no criterion matched\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
