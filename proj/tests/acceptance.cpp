// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "plh/suites.hpp"

using namespace plh;

namespace {

struct Check {
  int id;
  std::string title;
  std::function<std::vector<Row>()> run;
};

std::vector<Row> concat(std::vector<Row> a, const std::vector<Row>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main() {
  const std::uint64_t seed = 2024;
  const std::vector<Check> criteria{
      {1, "F relators on the classic pair, both presentations", [] { return f_relator_suite(); }},
      {2, "step-2 certificate for the default pair", [] { return step2_suite(); }},
      {3, "square root of F with the squeezed P realization",
       [] {
         SquareRootBundle b = squeezed_P_bundle();
         return concat(dyn_suite(b), mainsub_suite(b));
       }},
      {4, "equation suite, 100 trials", [&] { return equation_suite(seed, 100); }},
      {5, "kernel test for w", [] { return kernel_suite(); }},
      {6, "root suite, 50 trials", [&] { return root_suite(seed, 50); }},
      {7, "skew roots of the translation, n = 1..3", [&] { return skew_root_suite(seed); }},
      {8, "lamplighter roots", [&] { return lamplighter_suite(seed); }},
      {9, "Hall-Neumann suite, window 8", [&] { return hn_suite(8, seed); }},
      {10, "uncountable pipeline, 10 trials", [&] { return uncountable_suite(seed, 10); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Row> rows;
    std::string error;
    try {
      rows = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t passed = 0;
    for (const auto& r : rows) passed += r.pass ? 1 : 0;
    bool ok = error.empty() && !rows.empty() && passed == rows.size();
    all = all && ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << passed << "/"
              << rows.size() << " rows, " << secs << " s)\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& r : rows)
      if (!r.pass) std::cout << "    failed: " << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
  }
  return all ? 0 : 1;
}
