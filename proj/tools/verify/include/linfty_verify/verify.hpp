#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace linfty::verify {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome(std::uint64_t seed)> run;
};

struct Result {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

const std::vector<Criterion>& criteria();

// Runs the selected criteria (all when empty); exceptions count as failures.
std::vector<Result> run_criteria(std::uint64_t seed, const std::vector<int>& only = {});

}  // namespace linfty::verify
