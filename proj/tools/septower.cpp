#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "septower/workbench.hpp"

using namespace septower;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct Options {
  bool json = false;
  int height_bound = 6;
  std::uint64_t seed = 0;
  std::string file;
  std::string element;
  std::string over;
  std::string left;
  std::string right;
  std::string corpus = "builtin";

  [[nodiscard]] FactorOptions factor_options() const { return {height_bound, seed}; }
};

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string verdict_text(const std::optional<bool>& v) {
  if (!v) return "n/a";
  return yes_no(*v);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  SeparabilityReport r;
  std::optional<std::size_t> closure;
  std::optional<std::string> primitive;
  if (!o.element.empty()) {
    const auto elems = parse_element_list(tower, o.element);
    if (elems.size() != 1) throw InputError("--element takes exactly one expression");
    r = check_element(elems.front(), ctx, o.factor_options());
  } else {
    r = check_extension(F, ctx, o.factor_options());
    closure = separable_closure(F).closure_degree;
    if (r.separable()) primitive = primitive_element(F, ctx).element.to_string();
  }
  const auto j = report_json(r, closure, primitive);
  if (o.json) {
    print_json(j);
    return kOk;
  }
  std::cout << "subject: " << r.subject << "\n";
  std::cout << "degree: " << r.degree << "\n";
  std::cout << "hom_count: " << r.hom_count << "\n";
  std::cout << "separable: " << yes_no(r.separable()) << "\n";
  std::cout << "criteria: derivative " << verdict_text(r.by_derivative) << ", hom_count "
            << verdict_text(r.by_hom_count) << ", witness " << verdict_text(r.by_witness) << "\n";
  const auto& w = j["witness"];
  if (w["kind"] == "pair") {
    std::cout << "witness: pair over " << w["over"].get<std::string>() << " separating "
              << w["element"].get<std::string>() << "\n  phi: " << w["phi"].get<std::string>()
              << "\n  psi: " << w["psi"].get<std::string>() << "\n";
  } else if (w["kind"] == "canonical_subfield") {
    std::cout << "witness: canonical subfield " << w["subfield"].get<std::string>() << " excluding "
              << w["element"].get<std::string>() << " (exponent " << r.exponent << ")\n";
  } else {
    std::cout << "witness: none\n";
  }
  if (closure) std::cout << "closure_degree: " << *closure << "\n";
  if (primitive) std::cout << "primitive: " << *primitive << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  return kOk;
}

int cmd_hom_count(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  const auto L = Subfield::generated_by(F, parse_element_list(tower, o.over));
  const auto c = count_hom(F, L, ctx);
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["over"] = subfield_name(L);
    j["degree"] = c.degree;
    j["hom_e_over_k"] = c.e_over_k;
    j["hom_e_over_l"] = c.over_L;
    j["hom_l_over_k"] = c.l_over_k;
    j["tower_formula"] = c.tower_formula;
    j["degree_bound"] = c.degree_bound;
    print_json(j);
  } else {
    std::cout << "|Hom_K(E, N)| = " << c.e_over_k << "\n";
    std::cout << "|Hom_L(E, N)| = " << c.over_L << "  (L = " << subfield_name(L) << ")\n";
    std::cout << "|Hom_K(L, N)| = " << c.l_over_k << "\n";
    std::cout << "[E:K] = " << c.degree << "\n";
    std::cout << "tower formula: " << yes_no(c.tower_formula) << "\n";
  }
  return c.tower_formula && c.degree_bound ? kOk : kViolated;
}

int cmd_embeddings(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  const auto L = Subfield::generated_by(F, parse_element_list(tower, o.over));
  const auto homs = hom_set(F, L, ctx);
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["context"] = ctx.field().description();
    j["over"] = subfield_name(L);
    j["count"] = homs.size();
    Json list = Json::array();
    for (const auto& h : homs) list.push_back(h.to_string());
    j["embeddings"] = std::move(list);
    print_json(j);
  } else {
    std::cout << homs.size() << " embeddings of " << F.description() << " over " << subfield_name(L) << " into "
              << ctx.field().description() << "\n";
    for (const auto& h : homs) std::cout << "  " << h.to_string() << "\n";
  }
  return kOk;
}

int cmd_primitive(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  const auto pe = primitive_element(F, ctx);
  const auto m = minimal_polynomial(pe.element);
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["primitive"] = pe.element.to_string();
    j["minimal_polynomial"] = m.to_string();
    j["degree"] = m.degree();
    j["candidates_tried"] = pe.candidates_tried;
    print_json(j);
  } else {
    std::cout << "primitive: " << pe.element.to_string() << "\n";
    std::cout << "minimal polynomial: " << m.to_string() << "\n";
    std::cout << "candidates tried: " << pe.candidates_tried << "\n";
  }
  return kOk;
}

int cmd_closure(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto sc = separable_closure(tower.field);
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["closure"] = subfield_name(sc.closure);
    j["closure_degree"] = sc.closure_degree;
    j["inseparable_degree"] = sc.inseparable_degree;
    print_json(j);
  } else {
    std::cout << "separable closure: " << subfield_name(sc.closure) << "\n";
    std::cout << "[closure:K] = " << sc.closure_degree << "\n";
    std::cout << "[E:closure] = " << sc.inseparable_degree << "\n";
  }
  return kOk;
}

int cmd_subfields(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  const auto lattice = subfield_lattice(F, ctx);
  const bool complete = lattice.completeness == Completeness::complete;
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["complete"] = complete;
    Json nodes = Json::array();
    for (const auto& n : lattice.nodes) nodes.push_back({{"degree", n.dimension()}, {"subfield", subfield_name(n)}});
    j["subfields"] = std::move(nodes);
    print_json(j);
  } else {
    std::cout << lattice.nodes.size() << " subfields" << (complete ? "" : " (sound, completeness not certified)")
              << "\n";
    for (const auto& n : lattice.nodes) std::cout << "  degree " << n.dimension() << ": " << subfield_name(n) << "\n";
  }
  return kOk;
}

int cmd_l1l2(const Options& o) {
  const auto tower = load_tower(read_input(o.file), o.factor_options());
  const auto& F = tower.field;
  const auto ctx = splitting_context(F, o.factor_options());
  const auto L1 = Subfield::generated_by(F, parse_element_list(tower, o.left));
  const auto L2 = Subfield::generated_by(F, parse_element_list(tower, o.right));
  const auto r = l1l2_check(L1, L2, ctx);
  const bool separable = *hom_count_criterion(F, ctx).by_hom_count;
  const bool equivalent = r.containment == r.implication;
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["left"] = subfield_name(L1);
    j["right"] = subfield_name(L2);
    j["containment"] = r.containment;
    j["implication"] = r.implication;
    j["separable"] = separable;
    j["equivalent"] = equivalent;
    print_json(j);
  } else {
    std::cout << "L1 = " << subfield_name(L1) << ", L2 = " << subfield_name(L2) << "\n";
    std::cout << "containment: " << yes_no(r.containment) << "\n";
    std::cout << "implication: " << yes_no(r.implication) << "\n";
    std::cout << "extension separable: " << yes_no(separable) << "\n";
  }
  return separable && !equivalent ? kViolated : kOk;
}

int cmd_verify(const Options& o) {
  if (o.corpus != "builtin") throw InputError("unknown corpus '" + o.corpus + "'");
  const auto results = verify_paper(o.factor_options());
  bool all = true;
  for (const auto& c : results) all = all && c.pass;
  if (o.json) {
    print_json(verification_json(results));
  } else {
    for (const auto& c : results) {
      std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << "\n";
      for (const auto& d : c.details) std::cout << "    " << d << "\n";
    }
  }
  return all ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability workbench for towers over F_p and F_p(t)"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print a JSON report");
  app.add_option("--height-bound", o.height_bound, "Coefficient height bound for searches over F_p(t)")
      ->check(CLI::Range(1, 64));
  app.add_option("--seed", o.seed, "Seed for randomized splitting and sampling");

  auto tower_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("tower", o.file, "Tower file, or - for standard input")->required();
  };
  auto* check = app.add_subcommand("check", "Separability report for the extension or one element");
  tower_arg(check);
  check->add_option("--element", o.element, "Element name or expression");
  auto* hom = app.add_subcommand("hom-count", "Embedding counts and the tower formula");
  tower_arg(hom);
  hom->add_option("--over", o.over, "Comma-separated generators of the intermediate field");
  auto* emb = app.add_subcommand("embeddings", "List the embeddings into the splitting context");
  tower_arg(emb);
  emb->add_option("--over", o.over, "Comma-separated generators of a subfield to fix");
  auto* prim = app.add_subcommand("primitive", "Find a primitive element");
  tower_arg(prim);
  auto* clo = app.add_subcommand("closure", "Separable closure of the base in the extension");
  tower_arg(clo);
  auto* sub = app.add_subcommand("subfields", "Intermediate fields");
  tower_arg(sub);
  auto* l1l2 = app.add_subcommand("l1l2", "Compare containment with agreement of embeddings");
  tower_arg(l1l2);
  l1l2->add_option("--left", o.left, "Generators of L1")->required();
  l1l2->add_option("--right", o.right, "Generators of L2")->required();
  auto* verify = app.add_subcommand("verify-paper", "Run the verification suite");
  verify->fallthrough();
  verify->add_option("--corpus", o.corpus, "Corpus to run")->check(CLI::IsMember({"builtin"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (hom->parsed()) return cmd_hom_count(o);
    if (emb->parsed()) return cmd_embeddings(o);
    if (prim->parsed()) return cmd_primitive(o);
    if (clo->parsed()) return cmd_closure(o);
    if (sub->parsed()) return cmd_subfields(o);
    if (l1l2->parsed()) return cmd_l1l2(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolated;
  }
  return kInputError;
}
