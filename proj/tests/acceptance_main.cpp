#include <cstdio>

#include "stdeg/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= stdeg::criterion_count(); ++id) {
    const stdeg::CriterionResult r = stdeg::run_criterion(id);
    std::printf("%s\n", stdeg::result_line(r).c_str());
    std::fflush(stdout);
    if (!r.ok()) ++failed;
  }
  std::printf("%d of %d criteria passed\n", stdeg::criterion_count() - failed, stdeg::criterion_count());
  return failed ? 1 : 0;
}
