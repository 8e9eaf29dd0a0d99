#include "linfty_cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "linfty/errors.hpp"

namespace linfty::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail_at(const char* code, const std::string& path, const std::string& what) {
  throw DocumentError(code, path, what);
}

void allow_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail_at("E_SCHEMA", path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      fail_at("E_UNKNOWN_FIELD", path + "/" + it.key(), "unknown field");
}

const json& need(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail_at("E_SCHEMA", path + "/" + key, "missing field");
  return *it;
}

const json* maybe(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& need_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail_at("E_SCHEMA", path, "expected an array");
  return j;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail_at("E_SCHEMA", path, "expected a string");
  return j.get<std::string>();
}

Parity get_parity(const json& j, const std::string& path) {
  auto s = get_string(j, path);
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  fail_at("E_SCHEMA", path, "parity must be \"even\" or \"odd\"");
}

Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_string()) fail_at("E_RATIONAL", path, "coefficients are strings \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail_at("E_RATIONAL", path, e.what());
  }
}

std::vector<Generator> parse_generators(const json& j, const std::string& path) {
  std::vector<Generator> out;
  std::set<std::string> seen;
  const auto& arr = need_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string p = path + "/" + std::to_string(k);
    allow_keys(arr[k], p, {"name", "parity"});
    Generator g{get_string(need(arr[k], p, "name"), p + "/name"), get_parity(need(arr[k], p, "parity"), p + "/parity")};
    if (g.name.empty()) fail_at("E_SCHEMA", p + "/name", "empty generator name");
    if (!seen.insert(g.name).second) fail_at("E_SCHEMA", p + "/name", "duplicate generator " + g.name);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Term> parse_terms(const json& j, const std::string& path) {
  std::vector<Term> out;
  const auto& arr = need_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string p = path + "/" + std::to_string(k);
    allow_keys(arr[k], p, {"coefficient", "inputs", "output"});
    Term t;
    const auto& ins = need_array(need(arr[k], p, "inputs"), p + "/inputs");
    for (std::size_t q = 0; q < ins.size(); ++q) t.inputs.push_back(get_string(ins[q], p + "/inputs/" + std::to_string(q)));
    t.output = get_string(need(arr[k], p, "output"), p + "/output");
    t.coefficient = get_rational(need(arr[k], p, "coefficient"), p + "/coefficient");
    out.push_back(std::move(t));
  }
  return out;
}

PairingBlock parse_pairing(const json& j, const std::string& path) {
  allow_keys(j, path, {"entries", "parity"});
  PairingBlock b;
  b.parity = get_parity(need(j, path, "parity"), path + "/parity");
  const auto& arr = need_array(need(j, path, "entries"), path + "/entries");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string p = path + "/entries/" + std::to_string(k);
    allow_keys(arr[k], p, {"coefficient", "left", "right"});
    b.entries.push_back({get_string(need(arr[k], p, "left"), p + "/left"), get_string(need(arr[k], p, "right"), p + "/right"),
                         get_rational(need(arr[k], p, "coefficient"), p + "/coefficient")});
  }
  return b;
}

// Name -> parity lookup for one generator list.
class Scope {
 public:
  explicit Scope(const std::vector<Generator>& gens) {
    for (const auto& g : gens) parity_[g.name] = g.parity;
  }
  Parity at(const std::string& name, const std::string& path) const {
    auto it = parity_.find(name);
    if (it == parity_.end()) fail_at("E_UNDECLARED", path, "undeclared generator " + name);
    return it->second;
  }

 private:
  std::map<std::string, Parity> parity_;
};

// Checks names and the parity rule |out| = sum |in| + shift for every term.
void check_terms(const std::vector<Term>& terms, const std::string& path, const Scope& in, const Scope& out,
                 int shift_per_input, int shift, std::size_t min_arity, std::size_t max_arity) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string p = path + "/" + std::to_string(k);
    const auto& t = terms[k];
    if (t.inputs.size() < min_arity || t.inputs.size() > max_arity)
      fail_at("E_SCHEMA", p + "/inputs", "wrong number of inputs (" + std::to_string(t.inputs.size()) + ")");
    int total = shift;
    for (std::size_t q = 0; q < t.inputs.size(); ++q)
      total += bit(in.at(t.inputs[q], p + "/inputs/" + std::to_string(q))) + shift_per_input;
    if (out.at(t.output, p + "/output") != parity_of(total))
      fail_at("E_PARITY", p, "term has the wrong parity for its output " + t.output);
  }
}

void check_pairing(const PairingBlock& b, const std::string& path, const Scope& s) {
  for (std::size_t k = 0; k < b.entries.size(); ++k) {
    std::string p = path + "/entries/" + std::to_string(k);
    const auto& e = b.entries[k];
    Parity total = s.at(e.left, p + "/left") + s.at(e.right, p + "/right");
    if (total != b.parity) fail_at("E_PARITY", p, "pairing entry has the wrong parity");
  }
}

constexpr std::size_t kAny = 1u << 20;

json terms_json(const std::vector<Term>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back({{"coefficient", t.coefficient.str()}, {"inputs", t.inputs}, {"output", t.output}});
  return arr;
}

json generators_json(const std::vector<Generator>& gens) {
  json arr = json::array();
  for (const auto& g : gens) arr.push_back({{"name", g.name}, {"parity", g.parity == Parity::Even ? "even" : "odd"}});
  return arr;
}

json pairing_json(const PairingBlock& b) {
  json arr = json::array();
  for (const auto& e : b.entries)
    arr.push_back({{"coefficient", e.coefficient.str()}, {"left", e.left}, {"right", e.right}});
  return {{"entries", arr}, {"parity", b.parity == Parity::Even ? "even" : "odd"}};
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("E_JSON", "byte " + std::to_string(e.byte), e.what());
  }
  allow_keys(j, "", {"cdga", "differential", "name", "pairing", "retraction", "schema", "space", "structure"});
  AlgebraDocument doc;
  const auto& version = need(j, "", "schema");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    fail_at("E_SCHEMA", "/schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  if (const auto* n = maybe(j, "name")) doc.name = get_string(*n, "/name");

  const auto& space = need(j, "", "space");
  allow_keys(space, "/space", {"generators"});
  doc.generators = parse_generators(need(space, "/space", "generators"), "/space/generators");
  Scope v(doc.generators);

  if (const auto* st = maybe(j, "structure")) {
    allow_keys(*st, "/structure", {"brackets", "kind"});
    auto kind = get_string(need(*st, "/structure", "kind"), "/structure/kind");
    if (kind == "lie") doc.kind = StructureKind::Lie;
    else if (kind == "linfty") doc.kind = StructureKind::LInfinity;
    else fail_at("E_SCHEMA", "/structure/kind", "kind must be \"lie\" or \"linfty\"");
    if (const auto* b = maybe(*st, "brackets")) doc.brackets = parse_terms(*b, "/structure/brackets");
    if (doc.kind == StructureKind::Lie)
      check_terms(doc.brackets, "/structure/brackets", v, v, 0, 0, 2, 2);
    else  // m~_n is odd on PiV: |out| + 1 = sum (|in| + 1) + 1
      check_terms(doc.brackets, "/structure/brackets", v, v, 1, 0, 2, kAny);
  }
  if (const auto* d = maybe(j, "differential")) {
    doc.differential = parse_terms(*d, "/differential");
    check_terms(doc.differential, "/differential", v, v, 0, 1, 1, 1);
  }
  if (const auto* p = maybe(j, "pairing")) {
    doc.pairing = parse_pairing(*p, "/pairing");
    check_pairing(*doc.pairing, "/pairing", v);
  }
  if (const auto* c = maybe(j, "cdga")) {
    allow_keys(*c, "/cdga", {"differential", "generators", "pairing", "products", "unit"});
    CdgaBlock b;
    b.generators = parse_generators(need(*c, "/cdga", "generators"), "/cdga/generators");
    Scope a(b.generators);
    if (const auto* x = maybe(*c, "products")) b.products = parse_terms(*x, "/cdga/products");
    check_terms(b.products, "/cdga/products", a, a, 0, 0, 2, 2);
    if (const auto* x = maybe(*c, "differential")) b.differential = parse_terms(*x, "/cdga/differential");
    check_terms(b.differential, "/cdga/differential", a, a, 0, 1, 1, 1);
    if (const auto* u = maybe(*c, "unit")) {
      b.unit = get_string(*u, "/cdga/unit");
      if (a.at(*b.unit, "/cdga/unit") != Parity::Even) fail_at("E_PARITY", "/cdga/unit", "the unit must be even");
    }
    if (const auto* x = maybe(*c, "pairing")) {
      b.pairing = parse_pairing(*x, "/cdga/pairing");
      check_pairing(*b.pairing, "/cdga/pairing", a);
    }
    doc.cdga = std::move(b);
  }
  if (const auto* r = maybe(j, "retraction")) {
    allow_keys(*r, "/retraction", {"differential", "generators", "i", "p", "pairing", "s"});
    RetractionBlock b;
    b.generators = parse_generators(need(*r, "/retraction", "generators"), "/retraction/generators");
    Scope small(b.generators);
    if (const auto* x = maybe(*r, "differential")) b.differential = parse_terms(*x, "/retraction/differential");
    check_terms(b.differential, "/retraction/differential", small, small, 0, 1, 1, 1);
    if (const auto* x = maybe(*r, "i")) b.i = parse_terms(*x, "/retraction/i");
    check_terms(b.i, "/retraction/i", small, v, 0, 0, 1, 1);
    if (const auto* x = maybe(*r, "p")) b.p = parse_terms(*x, "/retraction/p");
    check_terms(b.p, "/retraction/p", v, small, 0, 0, 1, 1);
    if (const auto* x = maybe(*r, "s")) b.s = parse_terms(*x, "/retraction/s");
    check_terms(b.s, "/retraction/s", v, v, 0, 1, 1, 1);
    if (const auto* x = maybe(*r, "pairing")) {
      b.pairing = parse_pairing(*x, "/retraction/pairing");
      check_pairing(*b.pairing, "/retraction/pairing", small);
    }
    doc.retraction = std::move(b);
  }
  return doc;
}

AlgebraDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("E_IO", "", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

nlohmann::json to_json(const AlgebraDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  if (doc.name) j["name"] = *doc.name;
  j["space"] = {{"generators", generators_json(doc.generators)}};
  json st = {{"kind", doc.kind == StructureKind::Lie ? "lie" : "linfty"}};
  if (!doc.brackets.empty()) st["brackets"] = terms_json(doc.brackets);
  j["structure"] = st;
  if (!doc.differential.empty()) j["differential"] = terms_json(doc.differential);
  if (doc.pairing) j["pairing"] = pairing_json(*doc.pairing);
  if (doc.cdga) {
    const auto& c = *doc.cdga;
    json cj = {{"generators", generators_json(c.generators)}};
    if (!c.products.empty()) cj["products"] = terms_json(c.products);
    if (!c.differential.empty()) cj["differential"] = terms_json(c.differential);
    if (c.unit) cj["unit"] = *c.unit;
    if (c.pairing) cj["pairing"] = pairing_json(*c.pairing);
    j["cdga"] = cj;
  }
  if (doc.retraction) {
    const auto& r = *doc.retraction;
    json rj = {{"generators", generators_json(r.generators)}};
    for (auto [key, terms] : {std::pair{"differential", &r.differential}, std::pair{"i", &r.i},
                              std::pair{"p", &r.p}, std::pair{"s", &r.s}})
      if (!terms->empty()) rj[key] = terms_json(*terms);
    if (r.pairing) rj["pairing"] = pairing_json(*r.pairing);
    j["retraction"] = rj;
  }
  return j;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string serialize(const AlgebraDocument& doc) { return dump_canonical(to_json(doc)); }

}  // namespace linfty::cli
