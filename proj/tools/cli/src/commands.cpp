#include "linfty_cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "linfty/errors.hpp"
#include "linfty/gauge.hpp"
#include "linfty/quantum.hpp"
#include "linfty/random.hpp"
#include "linfty/sdr.hpp"
#include "linfty/tensor.hpp"
#include "linfty/unimodular.hpp"
#include "linfty_cli/model.hpp"
#include "linfty_verify/verify.hpp"

namespace linfty::cli {

namespace {

using json = nlohmann::json;

json poly_json(const TruncatedPolynomial& f) {
  json arr = json::array();
  for (const auto& [m, c] : f.terms()) {
    json names = json::array();
    for (auto i : m) names.push_back(f.space()->name(i));
    arr.push_back({{"coefficient", c.str()}, {"monomial", names}});
  }
  return arr;
}

json derivation_json(const Derivation& xi) {
  json obj = json::object();
  for (std::size_t i = 0; i < xi.values().size(); ++i)
    if (!xi.value(i).is_zero()) obj[xi.space()->name(i)] = poly_json(xi.value(i));
  return obj;
}

void derivation_lines(std::vector<std::string>& out, const Derivation& xi, const std::string& indent) {
  for (std::size_t i = 0; i < xi.values().size(); ++i)
    if (!xi.value(i).is_zero()) out.push_back(indent + xi.space()->name(i) + " -> " + xi.value(i).str());
}

std::string names_of(const GradedSpace& v, const std::vector<std::uint32_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ", ") + v.name(i);
  return s;
}

std::string verdict(bool ok) { return ok ? "yes" : "no"; }

Report finish(Report r, bool ok) {
  r.exit = ok ? kVerified : kRefuted;
  r.json["ok"] = ok;
  return r;
}

std::string label(const AlgebraDocument& doc) {
  return doc.name ? *doc.name : std::to_string(doc.generators.size()) + " generators";
}

// The odd or even double as an L-infinity structure with its cyclic form.
std::pair<LInftyStructure, CyclicData> double_of(const LInftyStructure& s, DoubleKind kind) {
  auto dbl = make_double(s.space(), kind);
  auto ham = [&](const Derivation& xi) {
    return kind == DoubleKind::Odd ? double_odd(dbl, xi) : double_even(dbl, xi);
  };
  Derivation x = hamiltonian_field(dbl.poisson, ham(s.m()));
  Derivation d = s.d().is_zero() ? Derivation(dbl.space(), Parity::Odd, x.cutoff())
                                 : truncate(hamiltonian_field(dbl.poisson, ham(s.d())), x.cutoff());
  return {LInftyStructure(dbl.space(), d, x), cyclic_from_poisson(dbl.poisson)};
}

}  // namespace

Report error_report(const std::string& code, const std::string& path, const std::string& message) {
  Report r;
  r.exit = kInputError;
  r.json["error"] = {{"code", code}, {"message", message}};
  if (!path.empty()) r.json["error"]["path"] = path;
  r.lines.push_back("error " + code + (path.empty() ? "" : " at " + path) + ": " + message);
  return r;
}

Report check_mc_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  auto mc = check_mc(model.structure);
  if (model.v.dim() == 0) mc.cutoff = s.cutoff;
  Report r;
  r.json["cutoff"] = mc.cutoff;
  json residual = json::object();
  r.lines.push_back("Maurer-Cartan equation for " + label(doc) + " through weight " + std::to_string(mc.cutoff) + ": " +
                    (mc.ok ? "holds" : "fails"));
  for (const auto& [w, c] : mc.residual) {
    residual[std::to_string(w)] = derivation_json(c);
    r.lines.push_back("  residual in weight " + std::to_string(w) + ":");
    derivation_lines(r.lines, c, "    ");
  }
  r.json["residual"] = residual;
  return finish(std::move(r), mc.ok);
}

Report check_cyclic_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  if (!model.cyclic) return error_report("E_SCHEMA", "/pairing", "check-cyclic needs a pairing block");
  auto c = check_cyclic(model.structure, *model.cyclic);
  Report r;
  r.json["cutoff"] = s.cutoff;
  r.lines.push_back("cyclic with respect to the pairing: " + verdict(c.ok));
  if (!c.ok) {
    const auto& gens = *model.structure.space();
    r.json["failing_arity"] = c.failing_arity;
    json w = json::array();
    for (auto i : c.witness) w.push_back(gens.name(i));
    r.json["witness"] = w;
    r.lines.push_back("  symmetry fails in arity " + std::to_string(c.failing_arity) + " at " +
                      names_of(gens, c.witness));
  }
  return finish(std::move(r), c.ok);
}

Report divergence_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  auto div = divergence(model.structure.total());
  Report r;
  r.json["cutoff"] = s.cutoff;
  r.json["divergence"] = poly_json(div);
  r.lines.push_back("divergence: " + div.str());
  r.lines.push_back("strictly unimodular: " + verdict(div.is_zero()));
  return finish(std::move(r), div.is_zero());
}

Report double_command(const AlgebraDocument& doc, const Settings& s, bool odd) {
  auto model = build_model(doc, s.cutoff);
  auto [dbl, cyclic] = double_of(model.structure, odd ? DoubleKind::Odd : DoubleKind::Even);
  bool mc = check_mc(dbl).ok;
  bool cyc = check_cyclic(dbl, cyclic).ok;
  Report r;
  std::string kind = odd ? "odd" : "even";
  r.json["kind"] = kind;
  r.json["maurer_cartan"] = mc;
  r.json["cyclic"] = cyc;
  r.document = structure_document(dbl, cyclic, doc.name ? std::optional(*doc.name + " (" + kind + " double)")
                                                        : std::nullopt);
  r.json["document"] = to_json(*r.document);
  r.lines.push_back(kind + " double on " + dbl.space()->dim_label() + " generators");
  r.lines.push_back("  Maurer-Cartan: " + verdict(mc));
  r.lines.push_back("  cyclic: " + verdict(cyc));
  return finish(std::move(r), mc && cyc);
}

Report unimodular_lift_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  auto o = obstruction_class(model.structure);
  Report r;
  r.json["cutoff"] = s.cutoff;
  r.json["reliable_weight"] = o.reliable_weight;
  r.json["cocycle"] = poly_json(o.cocycle);
  r.json["vanishes"] = o.vanishes;
  r.lines.push_back("divergence cocycle: " + o.cocycle.str());
  r.lines.push_back("reliable through weight " + std::to_string(o.reliable_weight));
  if (o.vanishes) {
    r.json["lift"] = poly_json(*o.lift);
    r.json["lift_dimension"] = o.lift_dimension;
    r.lines.push_back("class vanishes; lift f = " + o.lift->str());
    r.lines.push_back("  lifts form an affine space of dimension " + std::to_string(o.lift_dimension));
  } else {
    r.lines.push_back("obstruction class [" + o.cocycle.str() + "] is nonzero");
    r.json["obstructed_at"] = o.obstructed_at;
    if (o.certificate) {
      r.json["certificate"] = poly_json(*o.certificate);
      r.lines.push_back("  certificate: " + o.certificate->str());
    }
  }
  return finish(std::move(r), o.vanishes);
}

Report quantum_lift_command(const AlgebraDocument& doc, const Settings& s, bool odd_double, int genus,
                            std::optional<int> weight) {
  const int w = weight.value_or(s.cutoff);
  auto model = build_model(doc, std::max(s.cutoff, w + 1));
  std::optional<DoubleSpace> dbl;
  if (odd_double) dbl = make_double(model.structure.space(), DoubleKind::Odd);
  else if (!model.cyclic)
    throw DocumentError("E_SCHEMA", "/pairing", "quantum-lift needs an odd pairing or --odd-double");
  const PoissonStructure poisson = dbl ? dbl->poisson : model.cyclic->poisson(model.structure.space());
  const auto& st = model.structure;
  TruncatedPolynomial s0 = dbl ? double_odd(*dbl, st.m()) : hamiltonian_of_structure(st.m(), *model.cyclic);
  Derivation d = !dbl ? st.d()
                 : st.d().is_zero() ? Derivation(poisson.space(), Parity::Odd, st.cutoff())
                                    : hamiltonian_field(poisson, double_odd(*dbl, st.d()));
  auto lift = quantum_lift(poisson, d, s0, genus, w);
  Report r;
  r.json["genus"] = genus;
  r.json["weight"] = w;
  r.json["reliable_weight"] = lift.reliable_weight;
  json parts = json::array();
  r.lines.push_back("quantum lift of " + label(doc) + (odd_double ? " (odd double)" : "") + " to genus " +
                    std::to_string(genus) + ", weight " + std::to_string(w));
  if (lift.structure)
    for (int g = 0; g <= lift.structure->genus_cutoff(); ++g) {
      parts.push_back(poly_json(lift.structure->at(g)));
      r.lines.push_back("  S" + std::to_string(g) + " = " + lift.structure->at(g).str());
    }
  r.json["components"] = parts;
  json dims = json::array();
  for (auto k : lift.solution_dims) dims.push_back(k);
  r.json["solution_dimensions"] = dims;
  if (lift.ok) {
    bool qme = check_qme(*lift.structure).ok;
    r.json["qme"] = qme;
    r.lines.push_back("quantum master equation: " + verdict(qme));
    return finish(std::move(r), qme);
  }
  r.json["obstructed_genus"] = lift.obstructed_genus;
  r.json["obstructed_at"] = lift.obstructed_at;
  r.lines.push_back("obstructed at genus " + std::to_string(lift.obstructed_genus));
  if (lift.obstruction) {
    r.json["obstruction"] = poly_json(*lift.obstruction);
    r.lines.push_back("  class: " + lift.obstruction->str());
  }
  if (lift.certificate) {
    r.json["certificate"] = poly_json(*lift.certificate);
    r.lines.push_back("  certificate: " + lift.certificate->str());
  }
  return finish(std::move(r), false);
}

Report tensor_command(const AlgebraDocument& doc, const Settings& s, const std::optional<std::string>& frobenius) {
  if (!frobenius && !doc.cdga) throw DocumentError("E_SCHEMA", "/cdga", "tensor needs --frobenius or a cdga block");
  Cdga a = frobenius ? frobenius::by_name(*frobenius) : build_cdga(*doc.cdga);
  auto model = build_model(doc, s.cutoff);
  auto t = tensor_linfty(a, model.structure);
  bool unimodular_algebra = cdga_unimodular(a);
  bool strict = divergence(t.total()).is_zero();
  auto o = obstruction_class(t);
  std::optional<CyclicData> cyclic;
  if (model.cyclic && a.pairing()) cyclic = tensor_pairing(a, *model.cyclic);
  Report r;
  r.json["algebra"] = frobenius ? *frobenius : std::string("cdga");
  r.json["cutoff"] = s.cutoff;
  r.json["dimension"] = t.space()->dim();
  r.json["euler_characteristic"] = a.euler_characteristic().str();
  r.json["unimodular_algebra"] = unimodular_algebra;
  r.json["strictly_unimodular"] = strict;
  r.json["lift_exists"] = o.vanishes;
  r.lines.push_back("tensor product on " + t.space()->dim_label() + " generators");
  r.lines.push_back("  algebra unimodular (Euler characteristic " + a.euler_characteristic().str() +
                    "): " + verdict(unimodular_algebra));
  r.lines.push_back("  strictly unimodular: " + verdict(strict));
  r.lines.push_back("  unimodular lift exists: " + verdict(o.vanishes));
  if (!o.vanishes) {
    r.json["obstruction"] = poly_json(o.cocycle);
    r.lines.push_back("  obstruction: " + o.cocycle.str());
  }
  r.document = structure_document(t, cyclic, doc.name);
  return finish(std::move(r), o.vanishes);
}

Report ce_cohomology_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  auto ce = ce_assemble(model.structure);
  auto h = ce_cohomology(ce);
  Report r;
  r.json["cutoff"] = s.cutoff;
  r.json["reliable_weight"] = ce.reliable_weight;
  r.json["basis_size"] = ce.basis.size();
  r.json["even"] = h.even;
  r.json["odd"] = h.odd;
  r.lines.push_back("Chevalley-Eilenberg complex: " + std::to_string(ce.basis.size()) + " monomials, reliable through weight " +
                    std::to_string(ce.reliable_weight));
  r.lines.push_back("  cohomology of the truncation: " + std::to_string(h.even) + " even, " + std::to_string(h.odd) +
                    " odd");
  json by_weight = json::object();
  for (const auto& [w, eo] : h.by_weight) {
    by_weight[std::to_string(w)] = {{"even", eo.first}, {"odd", eo.second}};
    r.lines.push_back("  weight " + std::to_string(w) + ": " + std::to_string(eo.first) + " even, " +
                      std::to_string(eo.second) + " odd");
  }
  r.json["by_weight"] = by_weight;
  return finish(std::move(r), true);
}

Report gauge_apply_command(const AlgebraDocument& doc, const Settings& s) {
  auto model = build_model(doc, s.cutoff);
  const auto& st = model.structure;
  Report r;
  r.json["cutoff"] = s.cutoff;
  r.json["seed"] = s.seed;
  if (!check_mc(st).ok) {
    r.lines.push_back("the structure is not Maurer-Cartan; nothing to act on");
    return finish(std::move(r), false);
  }
  DerivationDgla g(st.space(), st.d());
  Sampler rng(s.seed);
  auto y = rng.derivation(st.space(), Parity::Even, 2, std::min(3, s.cutoff), s.cutoff);
  auto m = gauge_apply(g, y, st.m());
  LInftyStructure out(st.space(), st.d(), m);
  bool mc = check_mc(out).ok;
  bool back = elements_equal(g, gauge_apply(g, g.scale(Rational(-1), y), m), st.m());
  r.json["parameter"] = derivation_json(y);
  r.json["maurer_cartan"] = mc;
  r.json["inverse_recovers"] = back;
  r.document = structure_document(out, std::nullopt, doc.name);
  r.json["document"] = to_json(*r.document);
  r.lines.push_back("gauge parameter y (seed " + std::to_string(s.seed) + "):");
  derivation_lines(r.lines, y, "  ");
  r.lines.push_back("e^y . m is Maurer-Cartan: " + verdict(mc));
  r.lines.push_back("e^-y undoes it: " + verdict(back));
  return finish(std::move(r), mc && back);
}

Report sdr_check_command(const AlgebraDocument& doc, const Settings&, bool repair) {
  auto sdr = build_sdr(doc);
  Report r;
  auto describe = [&](const SdrReport& rep, const std::string& key) {
    json conds = json::object();
    for (int k = 1; k <= 8; ++k) {
      const auto& c = rep.conditions[k - 1];
      conds[std::to_string(k)] = c ? json(*c) : json(nullptr);
      r.lines.push_back("  (" + std::to_string(k) + ") " + SdrReport::describe(k) + ": " +
                        (c ? verdict(*c) : std::string("not applicable")));
    }
    r.json[key] = conds;
  };
  auto rep = sdr_check(sdr);
  r.lines.push_back("retraction as given:");
  describe(rep, "conditions");
  if (!repair || rep.ok()) return finish(std::move(r), rep.ok());
  SdrData fixed = sdr;
  try {
    fixed = sdr_repair(sdr);
  } catch (const Error& e) {
    r.json["repair_error"] = e.what();
    r.lines.push_back("cannot repair: " + std::string(e.what()));
    return finish(std::move(r), false);
  }
  auto after = sdr_check(fixed);
  r.lines.push_back("after repair:");
  describe(after, "repaired");
  r.document = with_homotopy(doc, fixed.s);
  r.json["document"] = to_json(*r.document);
  return finish(std::move(r), after.ok());
}

Report verify_paper_command(const Settings& s, const std::vector<int>& only) {
  auto results = verify::run_criteria(s.seed, only);
  Report r;
  json arr = json::array();
  bool all = !results.empty();
  for (const auto& c : results) {
    all = all && c.passed;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << c.seconds;
    arr.push_back({{"id", c.id},
                   {"title", c.title},
                   {"status", c.passed ? "pass" : "fail"},
                   {"detail", c.detail},
                   {"seconds", std::stod(t.str())}});
    r.lines.push_back(std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.title + " (" +
                      t.str() + " s)" + (c.detail.empty() ? "" : ": " + c.detail));
  }
  r.json["criteria"] = arr;
  r.json["seed"] = s.seed;
  return finish(std::move(r), all);
}

std::string render(const Report& r, const std::string& command, bool as_json) {
  if (as_json) {
    json j = r.json;
    j["command"] = command;
    j["exit"] = r.exit;
    return dump_canonical(j);
  }
  std::string out;
  for (const auto& l : r.lines) out += l + "\n";
  return out;
}

}  // namespace linfty::cli
