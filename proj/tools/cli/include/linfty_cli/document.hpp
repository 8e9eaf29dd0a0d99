#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "linfty/graded_space.hpp"
#include "linfty/rational.hpp"

namespace linfty::cli {

inline constexpr int kSchemaVersion = 1;

// One structure constant: inputs -> coefficient * output.
struct Term {
  std::vector<std::string> inputs;
  std::string output;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

struct PairingEntry {
  std::string left, right;
  Rational coefficient;
  friend bool operator==(const PairingEntry&, const PairingEntry&) = default;
};

struct PairingBlock {
  Parity parity = Parity::Even;
  std::vector<PairingEntry> entries;
  friend bool operator==(const PairingBlock&, const PairingBlock&) = default;
};

struct CdgaBlock {
  std::vector<Generator> generators;
  std::vector<Term> products;
  std::vector<Term> differential;
  std::optional<std::string> unit;
  std::optional<PairingBlock> pairing;
  friend bool operator==(const CdgaBlock&, const CdgaBlock&) = default;
};

// Retraction of the document's complex (generators, differential) onto a
// smaller complex.
struct RetractionBlock {
  std::vector<Generator> generators;
  std::vector<Term> differential, i, p, s;
  std::optional<PairingBlock> pairing;
  friend bool operator==(const RetractionBlock&, const RetractionBlock&) = default;
};

enum class StructureKind { Lie, LInfinity };

struct AlgebraDocument {
  int schema = kSchemaVersion;
  std::optional<std::string> name;
  std::vector<Generator> generators;
  StructureKind kind = StructureKind::LInfinity;
  std::vector<Term> brackets;
  std::vector<Term> differential;
  std::optional<PairingBlock> pairing;
  std::optional<CdgaBlock> cdga;
  std::optional<RetractionBlock> retraction;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

// Codes: E_JSON, E_SCHEMA, E_UNKNOWN_FIELD, E_RATIONAL, E_UNDECLARED, E_PARITY.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string code, std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what),
        code_(std::move(code)),
        path_(std::move(path)),
        message_(what) {}
  const std::string& code() const { return code_; }
  const std::string& path() const { return path_; }  // JSON pointer, or "byte N" for syntax errors
  const std::string& message() const { return message_; }

 private:
  std::string code_, path_, message_;
};

AlgebraDocument parse_document(std::string_view text);
AlgebraDocument read_document(const std::string& path);

nlohmann::json to_json(const AlgebraDocument& doc);
// Sorted keys, two-space indent, trailing newline.
std::string serialize(const AlgebraDocument& doc);
std::string dump_canonical(const nlohmann::json& j);

}  // namespace linfty::cli
