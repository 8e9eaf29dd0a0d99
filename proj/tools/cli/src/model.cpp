#include "linfty_cli/model.hpp"

#include <map>

#include "linfty/errors.hpp"

namespace linfty::cli {

namespace {

std::size_t index(const GradedSpace& v, const std::string& name) { return *v.find(name); }

std::string at(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

LinearMap linear_map(const std::vector<Term>& terms, const GradedSpace& source, const GradedSpace& target,
                     Parity parity) {
  LinearMap::Entries e;
  for (const auto& t : terms) e[{index(target, t.output), index(source, t.inputs[0])}] += t.coefficient;
  std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
  return LinearMap(source, target, parity, std::move(e));
}

std::optional<BilinearForm> form(const std::optional<PairingBlock>& b, const GradedSpace& v) {
  if (!b) return std::nullopt;
  BilinearForm::Entries e;
  for (const auto& x : b->entries) e[{index(v, x.left), index(v, x.right)}] += x.coefficient;
  std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
  return BilinearForm(v, b->parity, e);
}

std::string strip_prime(const std::string& name) {
  return name.size() > 1 && name.back() == '\'' ? name.substr(0, name.size() - 1) : name;
}

}  // namespace

Model build_model(const AlgebraDocument& doc, int cutoff) {
  require(cutoff >= 2, ErrorCode::Truncation, "cutoff must be at least 2");
  GradedSpace v(doc.generators);
  SpacePtr gens = shifted_dual(v);

  std::optional<LinearMap> d;
  if (!doc.differential.empty()) d = linear_map(doc.differential, v, v, Parity::Odd);
  SymMultiMap m1(gens, 1, Parity::Odd);
  for (const auto& [ij, c] : d ? d->entries() : LinearMap::Entries{}) {
    auto out = m1.value({static_cast<std::uint32_t>(ij.second)});
    out[ij.first] += c;
    m1.set({static_cast<std::uint32_t>(ij.second)}, out);
  }

  std::optional<LieAlgebra> lie;
  std::vector<SymMultiMap> brackets{m1};
  if (doc.kind == StructureKind::Lie) {
    LieAlgebra::Brackets b;
    for (const auto& t : doc.brackets)
      b[{index(v, t.inputs[0]), index(v, t.inputs[1])}][index(v, t.output)] += t.coefficient;
    lie = LieAlgebra(v, b);
    auto s = from_lie(*lie, cutoff);
    brackets.push_back(to_multilinear(s.m(), 2));
  } else {
    std::map<int, SymMultiMap> by_arity;
    for (std::size_t k = 0; k < doc.brackets.size(); ++k) {
      const auto& t = doc.brackets[k];
      std::vector<std::uint32_t> word;
      for (const auto& x : t.inputs) word.push_back(static_cast<std::uint32_t>(index(v, x)));
      auto sorted = normalize(*gens, word);
      if (sorted.sign == 0)
        throw DocumentError("E_PARITY", at("/structure/brackets", k) + "/inputs",
                            "repeated input vanishes by graded symmetry");
      const int n = static_cast<int>(word.size());
      auto& m = by_arity.try_emplace(n, gens, n, Parity::Odd).first->second;
      auto out = m.value(sorted.monomial);
      out[index(v, t.output)] += sorted.sign * t.coefficient;
      m.set(sorted.monomial, out);
    }
    for (auto& [n, m] : by_arity) brackets.push_back(std::move(m));
  }

  for (auto& m : brackets) {
    SymMultiMap clean(gens, m.arity(), Parity::Odd);
    for (const auto& [in, out] : m.entries()) {
      SparseVector o;
      for (const auto& [k, c] : out)
        if (!c.is_zero()) o.emplace(k, c);
      if (!o.empty()) clean.set(in, o);
    }
    m = std::move(clean);
  }

  std::optional<CyclicData> cyclic;
  if (auto f = form(doc.pairing, v)) cyclic = CyclicData(*f);
  return {v, from_brackets(gens, brackets, cutoff), std::move(lie), std::move(d), std::move(cyclic)};
}

Cdga build_cdga(const CdgaBlock& block) {
  GradedSpace a(block.generators);
  Cdga::Products products;
  for (const auto& t : block.products)
    products[{index(a, t.inputs[0]), index(a, t.inputs[1])}][index(a, t.output)] += t.coefficient;
  std::optional<LinearMap> d;
  if (!block.differential.empty()) d = linear_map(block.differential, a, a, Parity::Odd);
  std::optional<std::size_t> unit;
  if (block.unit) unit = index(a, *block.unit);
  return Cdga(a, products, d, unit, form(block.pairing, a));
}

SdrData build_sdr(const AlgebraDocument& doc) {
  if (!doc.retraction) throw DocumentError("E_SCHEMA", "/retraction", "the document has no retraction block");
  const auto& r = *doc.retraction;
  GradedSpace v(doc.generators), w(r.generators);
  Complex big(v, linear_map(doc.differential, v, v, Parity::Odd));
  Complex small(w, linear_map(r.differential, w, w, Parity::Odd));
  return {big,
          small,
          linear_map(r.i, w, v, Parity::Even),
          linear_map(r.p, v, w, Parity::Even),
          linear_map(r.s, v, v, Parity::Odd),
          form(doc.pairing, v),
          form(r.pairing, w)};
}

AlgebraDocument structure_document(const LInftyStructure& s, const std::optional<CyclicData>& cyclic,
                                   std::optional<std::string> name) {
  const auto& gens = *s.space();
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.kind = StructureKind::LInfinity;
  std::vector<std::string> names;
  for (const auto& g : gens.basis()) {
    names.push_back(strip_prime(g.name));
    doc.generators.push_back({names.back(), flip(g.parity)});
  }
  const Derivation q = s.total();
  for (int n = 1; n <= q.cutoff(); ++n) {
    auto m = to_multilinear(q, n);
    for (const auto& [in, out] : m.entries())
      for (const auto& [k, c] : out) {
        Term t{{}, names[k], c};
        for (auto i : in) t.inputs.push_back(names[i]);
        (n == 1 ? doc.differential : doc.brackets).push_back(std::move(t));
      }
  }
  if (cyclic) {
    PairingBlock b{cyclic->parity(), {}};
    for (const auto& [ij, c] : cyclic->form().entries()) b.entries.push_back({names[ij.first], names[ij.second], c});
    doc.pairing = std::move(b);
  }
  return doc;
}

AlgebraDocument with_homotopy(AlgebraDocument doc, const LinearMap& s) {
  auto& r = doc.retraction.value();
  r.s.clear();
  for (const auto& [ij, c] : s.entries())
    r.s.push_back({{s.source().name(ij.second)}, s.target().name(ij.first), c});
  return doc;
}

}  // namespace linfty::cli
