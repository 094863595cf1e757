// One line per acceptance criterion; exits nonzero if any hard check fails.
#include <cstdio>
#include <cstring>

#include "griess/reproduce.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  auto r = griess::reproduce_all();
  for (auto& [k, title] : griess::criterion_titles()) {
    std::vector<const griess::Check*> failed;
    int soft_failed = 0;
    for (auto& c : r.checks) {
      if (c.criterion != k || c.pass) continue;
      if (c.hard)
        failed.push_back(&c);
      else
        ++soft_failed;
    }
    std::printf("criterion %d %s: %s (%.1fs)", k, failed.empty() ? "PASS" : "FAIL", title.c_str(), r.seconds[k]);
    if (soft_failed) std::printf(" [%d unverified soft checks]", soft_failed);
    std::printf("\n");
    if (!verbose)
      for (auto* c : failed) std::printf("    failed %s: %s\n", c->id.c_str(), c->detail.c_str());
    if (verbose)
      for (auto& c : r.checks)
        if (c.criterion == k) std::printf("    %s %s%s: %s\n", c.pass ? "ok  " : "FAIL", c.id.c_str(), c.hard ? "" : " (soft)", c.detail.c_str());
  }
  return r.all_passed() ? 0 : 1;
}
