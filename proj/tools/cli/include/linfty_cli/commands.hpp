#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "linfty_cli/document.hpp"

namespace linfty::cli {

enum Exit : int { kVerified = 0, kRefuted = 1, kInputError = 2 };

struct Report {
  int exit = kVerified;
  nlohmann::json json = nlohmann::json::object();
  std::vector<std::string> lines;
  // Written to the --output file, if any.
  std::optional<AlgebraDocument> document;
};

struct Settings {
  int cutoff = 6;
  std::uint64_t seed = 1;
};

Report check_mc_command(const AlgebraDocument& doc, const Settings& s);
Report check_cyclic_command(const AlgebraDocument& doc, const Settings& s);
Report divergence_command(const AlgebraDocument& doc, const Settings& s);
Report double_command(const AlgebraDocument& doc, const Settings& s, bool odd);
Report unimodular_lift_command(const AlgebraDocument& doc, const Settings& s);
Report quantum_lift_command(const AlgebraDocument& doc, const Settings& s, bool odd_double, int genus,
                            std::optional<int> weight);
// Uses the document's cdga block when no name is given.
Report tensor_command(const AlgebraDocument& doc, const Settings& s, const std::optional<std::string>& frobenius);
Report ce_cohomology_command(const AlgebraDocument& doc, const Settings& s);
Report gauge_apply_command(const AlgebraDocument& doc, const Settings& s);
Report sdr_check_command(const AlgebraDocument& doc, const Settings& s, bool repair);
Report verify_paper_command(const Settings& s, const std::vector<int>& only);

// Exit 2 report for a failed parse or a library precondition.
Report error_report(const std::string& code, const std::string& path, const std::string& message);

// Text lines or the canonical JSON report, ending in a newline.
std::string render(const Report& r, const std::string& command, bool json);

}  // namespace linfty::cli
