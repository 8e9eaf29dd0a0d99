#include "linfty_cli/app.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "linfty/errors.hpp"
#include "linfty/tensor.hpp"
#include "linfty_cli/commands.hpp"

namespace linfty::cli {

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with L-infinity algebras, unimodular and quantum structures", "linfty"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::string format = "text";
  std::string output;
  app.add_option("--cutoff", settings.cutoff, "weight cutoff for truncated power series")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", settings.seed, "seed for sampling commands")->capture_default_str();
  app.add_option("--output", output, "write the resulting document to this file");

  std::string file;
  // Each command parses the document lazily so that input errors map to exit 2.
  std::function<Report(const AlgebraDocument&)> action;
  std::function<Report()> standalone;

  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "algebra document (JSON)")->required();
    return sub;
  };

  auto* check_mc = with_file("check-mc", "check the Maurer-Cartan equation of the structure");
  check_mc->callback([&] { action = [&](const AlgebraDocument& d) { return check_mc_command(d, settings); }; });

  auto* check_cyclic = with_file("check-cyclic", "check cyclicity with respect to the pairing block");
  check_cyclic->callback([&] { action = [&](const AlgebraDocument& d) { return check_cyclic_command(d, settings); }; });

  auto* div = with_file("divergence", "divergence of the structure; exit 0 when it vanishes");
  div->callback([&] { action = [&](const AlgebraDocument& d) { return divergence_command(d, settings); }; });

  bool even = false, odd = false;
  auto* dbl = with_file("double", "even or odd double with its cyclic pairing");
  auto* even_flag = dbl->add_flag("--even", even, "even double on V + V*");
  auto* odd_flag = dbl->add_flag("--odd", odd, "odd double on V + PiV*");
  even_flag->excludes(odd_flag);
  dbl->callback([&] {
    if (!even && !odd) throw CLI::ValidationError("double", "one of --even or --odd is required");
    action = [&](const AlgebraDocument& d) { return double_command(d, settings, odd); };
  });

  auto* uni = with_file("unimodular-lift", "solve for a unimodular lift or certify the obstruction");
  uni->callback([&] { action = [&](const AlgebraDocument& d) { return unimodular_lift_command(d, settings); }; });

  bool odd_double = false;
  int genus = 1;
  std::optional<int> weight;
  auto* q = with_file("quantum-lift", "lift to a solution of the quantum master equation");
  q->add_flag("--odd-double", odd_double, "lift the odd double of the structure");
  q->add_option("--genus", genus, "highest genus")->check(CLI::Range(0, 16))->capture_default_str();
  q->add_option("--weight", weight, "weight cutoff (defaults to --cutoff)")->check(CLI::Range(2, 64));
  q->callback([&] {
    action = [&](const AlgebraDocument& d) { return quantum_lift_command(d, settings, odd_double, genus, weight); };
  });

  std::optional<std::string> frobenius;
  auto* tensor = with_file("tensor", "tensor with a Frobenius algebra or the document's cdga block");
  std::string catalog;
  for (const auto& n : frobenius::names()) catalog += (catalog.empty() ? "" : ", ") + n;
  tensor->add_option("--frobenius", frobenius, "catalog algebra: " + catalog);
  tensor->callback([&] { action = [&](const AlgebraDocument& d) { return tensor_command(d, settings, frobenius); }; });

  auto* ce = with_file("ce-cohomology", "Chevalley-Eilenberg cohomology of the truncated complex");
  ce->callback([&] { action = [&](const AlgebraDocument& d) { return ce_cohomology_command(d, settings); }; });

  auto* gauge = with_file("gauge-apply", "act on the structure by a random gauge parameter");
  gauge->callback([&] { action = [&](const AlgebraDocument& d) { return gauge_apply_command(d, settings); }; });

  bool repair = false;
  auto* sdr = with_file("sdr-check", "check the retraction block and optionally repair it");
  sdr->add_flag("--repair", repair, "enforce the side conditions");
  sdr->callback([&] { action = [&](const AlgebraDocument& d) { return sdr_check_command(d, settings, repair); }; });

  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("--only", only, "run only these criteria");
  verify->callback([&] { standalone = [&] { return verify_paper_command(settings, only); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error E_USAGE: " << e.what() << "\n";
    return kInputError;
  }

  const bool json = format == "json";
  const std::string command = app.get_subcommands().front()->get_name();
  Report report;
  try {
    report = standalone ? standalone() : action(read_document(file));
    if (report.document && !output.empty()) {
      std::ofstream f(output, std::ios::binary);
      if (!f) throw DocumentError("E_IO", "", "cannot write " + output);
      f << serialize(*report.document);
    }
  } catch (const DocumentError& e) {
    report = error_report(e.code(), e.path(), e.message());
  } catch (const Error& e) {
    report = error_report(error_code_name(e.code()), "", e.what());
  }
  (report.exit == kInputError && !json ? err : out) << render(report, command, json);
  return report.exit;
}

}  // namespace linfty::cli
