#include <algorithm>
#include <cctype>

#include "septower/workbench.hpp"

namespace septower {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineCursor {
 public:
  LineCursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  [[nodiscard]] std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, column()); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const { throw SpecError(msg, line_, col); }

  std::string word() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ':' &&
           s_[pos_] != '=') {
      ++pos_;
    }
    if (start == pos_) fail("expected a word");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip();
    const auto start = pos_;
    if (pos_ == s_.size() || !is_ident_start(s_[pos_])) fail("expected a name");
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ == s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // The remainder of the line, trimmed, with the column where it starts.
  std::pair<std::string, std::size_t> rest() {
    skip();
    auto text = std::string(s_.substr(pos_));
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    if (text.empty()) fail("expected an expression");
    const auto col = column();
    pos_ = s_.size();
    return {text, col};
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::uint32_t parse_prime(LineCursor& c) {
  c.skip();
  const auto col = c.column();
  const auto w = c.word();
  if (!std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      w.size() > 9) {
    c.fail("expected a prime, got '" + w + "'");
  }
  const auto p = static_cast<std::uint32_t>(std::stoul(w));
  bool prime = p >= 2;
  for (std::uint32_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) c.fail_at(w + " is not prime", col);
  return p;
}

// Rethrows a failure inside an expression with the file position of its text.
template <class F>
auto at(const SpecEntry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError& err) {
    throw SpecError(err.message(), e.line, e.column + err.column() - 1);
  } catch (const SpecError&) {
    throw;
  } catch (const InputError& err) {
    throw SpecError(err.what(), e.line, e.column);
  }
}

}  // namespace

TowerSpec parse_tower_spec(std::string_view text) {
  TowerSpec spec;
  bool have_base = false;
  std::vector<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor c(line, line_no);
    if (c.done()) continue;
    const auto keyword_col = c.column();
    const auto keyword = c.word();
    if (keyword == "base") {
      if (have_base) c.fail("base declared twice");
      const auto kind = c.word();
      if (kind == "Fp") {
        spec.function_field = false;
      } else if (kind == "FpT") {
        spec.function_field = true;
      } else {
        c.fail("unknown base '" + kind + "', expected Fp or FpT");
      }
      spec.p = parse_prime(c);
      if (!c.done()) c.fail("unexpected text after the base declaration");
      have_base = true;
    } else if (keyword == "gen" || keyword == "elem") {
      if (!have_base) c.fail_at("declarations must follow the base line", keyword_col);
      c.skip();
      const auto name_col = c.column();
      SpecEntry e;
      e.name = c.identifier();
      if (e.name == "x" || e.name == "t") c.fail("'" + e.name + "' is reserved");
      if (std::find(names.begin(), names.end(), e.name) != names.end()) {
        c.fail_at("'" + e.name + "' is already declared", name_col);
      }
      c.expect(keyword == "gen" ? ':' : '=');
      std::tie(e.text, e.column) = c.rest();
      e.line = line_no;
      names.push_back(e.name);
      (keyword == "gen" ? spec.gens : spec.elems).push_back(std::move(e));
    } else {
      c.fail_at("unknown declaration '" + keyword + "'", keyword_col);
    }
  }
  if (!have_base) throw SpecError("missing base declaration", line_no, 1);
  return spec;
}

Tower build_tower(const TowerSpec& spec, const FactorOptions& opts) {
  Field F = spec.function_field ? Field::rational_function(spec.p) : Field::prime(spec.p);
  for (const auto& g : spec.gens) {
    const auto f = at(g, [&] { return parse_poly(F, g.text); });
    F = at(g, [&] { return make_extension(F, f, g.name, opts); });
  }
  Tower tower{F, generator_symbols(F), {}};
  for (const auto& e : spec.elems) {
    auto value = at(e, [&] { return parse_elem(F, e.text, tower.symbols); });
    tower.symbols.insert_or_assign(e.name, std::move(value));
    tower.element_names.push_back(e.name);
  }
  return tower;
}

Tower load_tower(std::string_view text, const FactorOptions& opts) { return build_tower(parse_tower_spec(text), opts); }

std::string format_tower(const Tower& tower) {
  const auto& F = tower.field;
  std::string out = std::string("base ") + (F.is_finite() ? "Fp " : "FpT ") + std::to_string(F.characteristic()) + "\n";
  const auto stages = F.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) {
    out += "gen " + stages[i].generator_name() + " : " + Poly(stages[i].parent(), stages[i].minpoly()).to_string("x") +
           "\n";
  }
  for (const auto& name : tower.element_names) out += "elem " + name + " = " + tower.symbols.at(name).to_string() + "\n";
  return out;
}

std::vector<Elem> parse_element_list(const Tower& tower, std::string_view text) {
  std::vector<Elem> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        out.push_back(parse_elem(tower.field, piece, tower.symbols));
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string("in '") + std::string(piece) + "': " + e.message(), start + e.column());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string subfield_name(const Subfield& L) {
  if (L.dimension() == 1) return "K";
  std::string out = "K(";
  for (std::size_t i = 0; i < L.generators().size(); ++i) out += (i ? ", " : "") + L.generators()[i].to_string();
  return out + ")";
}

}  // namespace septower
