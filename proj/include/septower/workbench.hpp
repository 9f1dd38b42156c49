#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "septower/expr.hpp"
#include "septower/separability.hpp"

namespace septower {

/// Tower file error with a 1-based line and column.
class SpecError : public InputError {
 public:
  SpecError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SpecEntry {
  std::string name;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // where text starts
};

/// The declarations of a tower file, before any algebra happens.
struct TowerSpec {
  std::uint32_t p = 0;
  bool function_field = false;
  std::vector<SpecEntry> gens;
  std::vector<SpecEntry> elems;
};

/// Grammar, one declaration per line, `#` starts a comment:
///   base Fp <p> | base FpT <p>
///   gen <name> : <poly in x>
///   elem <name> = <expression>
[[nodiscard]] TowerSpec parse_tower_spec(std::string_view text);

struct Tower {
  Field field;
  Symbols symbols;  // generators and named elements, lifted to field
  std::vector<std::string> element_names;
};

/// Builds the tower, certifying every defining polynomial irreducible.
[[nodiscard]] Tower build_tower(const TowerSpec& spec, const FactorOptions& opts = {});
[[nodiscard]] Tower load_tower(std::string_view text, const FactorOptions& opts = {});

/// Canonical tower file text; loading it gives back the same tower.
[[nodiscard]] std::string format_tower(const Tower& tower);

/// Comma-separated expressions evaluated against the tower's symbols.
[[nodiscard]] std::vector<Elem> parse_element_list(const Tower& tower, std::string_view text);

/// "K" or "K(g1, g2)".
[[nodiscard]] std::string subfield_name(const Subfield& L);

using Json = nlohmann::ordered_json;

/// The fixed report schema shared by `check` on extensions and elements.
[[nodiscard]] Json report_json(const SeparabilityReport& r, std::optional<std::size_t> closure_degree,
                               std::optional<std::string> primitive);

struct CorpusEntry {
  std::string name;
  std::string text;
};

/// Tower files exercised by verify-paper.
[[nodiscard]] const std::vector<CorpusEntry>& builtin_corpus();
[[nodiscard]] Tower corpus_tower(const std::string& name, const FactorOptions& opts = {});

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

/// Runs the verification suite on the builtin corpus.
[[nodiscard]] std::vector<CriterionResult> verify_paper(const FactorOptions& opts = {});
[[nodiscard]] Json verification_json(const std::vector<CriterionResult>& results);

}  // namespace septower
