// orthokit: load orthosets, maps, Hermitian spaces and category instances
// from JSON and run the library's checks on them.
//
// Exit status: 0 when every check passed, 1 when one failed (a witness is
// printed), 2 on usage or input errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "orthokit/core/dacey.hpp"
#include "orthokit/core/rank.hpp"
#include "orthokit/dagger/harness.hpp"
#include "orthokit/hermitian/lines.hpp"
#include "orthokit/io/json_io.hpp"
#include "orthokit/lattice/ortho_lattice.hpp"
#include "orthokit/maps/ortho_map.hpp"
#include "orthokit/suite/acceptance.hpp"

using namespace orthokit;
using io::json;

namespace {

struct Outcome {
  Report report;
  json result = json::object();
  std::string text;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string edges_text(const FiniteOrthoset& X) {
  std::vector<std::string> es;
  for (auto [i, j] : X.edges()) es.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return es.empty() ? "none" : join(es, " ");
}

FiniteOrthoset load_orthoset(const std::string& path) {
  return io::orthoset_from_json(io::read_file(path), io::Loc(path));
}

OrthoMap load_map(const std::string& path) { return io::map_from_json(io::read_file(path), io::Loc(path)); }

// ---- orthoset verbs ----

Outcome inspect(const std::string& path, const Limits& lim) {
  const auto X = load_orthoset(path);
  const auto rk = rank(X, lim);
  Outcome o;
  const bool zero = X.size() == 1;
  o.result = {{"n", X.size()},
              {"rank", rk.value},
              {"rank_method", to_string(rk.method)},
              {"zero", zero},
              {"unital", is_unital(X)},
              {"singleton", rk.value == 1},
              {"irredundant", is_irredundant(X)},
              {"atomistic", is_atomistic(X)}};
  std::ostringstream os;
  os << "n=" << X.size() << " rank=" << rk.value;
  if (zero) {
    os << " zero-orthoset";
  } else {
    os << " (" << to_string(rk.method) << ") unital=" << yes_no(is_unital(X)) << " singleton=" << yes_no(rk.value == 1)
       << " irredundant=" << yes_no(is_irredundant(X)) << " atomistic=" << yes_no(is_atomistic(X));
  }
  o.text = os.str();
  return o;
}

Outcome lattice(const std::string& path, const Limits& lim) {
  const auto X = load_orthoset(path);
  const auto L = build_lattice(X, lim);
  Outcome o;
  json elements = json::array(), covers = json::array(), comp = json::array();
  std::vector<std::string> el, cv, cp;
  for (std::size_t i = 0; i < L.size(); ++i) {
    elements.push_back(io::to_json(L.element(i)));
    comp.push_back(L.comp(i));
    el.push_back(std::to_string(i) + "=" + L.element(i).to_string());
    cp.push_back(std::to_string(i) + "'=" + std::to_string(L.comp(i)));
    for (auto c : L.upper_covers(i)) {
      covers.push_back({i, c});
      cv.push_back(std::to_string(i) + "<" + std::to_string(c));
    }
  }
  const json flags = {{"orthomodular", is_orthomodular(L)},
                      {"atomistic", is_atomistic_lattice(L)},
                      {"covering", has_covering_property(L)},
                      {"irreducible", is_irreducible_lattice(L)}};
  o.result = {{"size", L.size()},    {"length", length(L)},     {"elements", elements},
              {"hasse", covers},     {"complement", comp},      {"flags", flags}};
  std::ostringstream os;
  os << "C(X): " << L.size() << " elements, length " << length(L) << "\n"
     << "  elements: " << join(el, " ") << "\n"
     << "  covers: " << (cv.empty() ? "none" : join(cv, " ")) << "\n"
     << "  complement: " << join(cp, " ") << "\n"
     << "  orthomodular=" << yes_no(flags["orthomodular"]) << " atomistic=" << yes_no(flags["atomistic"])
     << " covering=" << yes_no(flags["covering"]) << " irreducible=" << yes_no(flags["irreducible"]);
  o.text = os.str();
  return o;
}

Outcome dacey(const std::string& path, const std::string& criterion, const Limits& lim) {
  const auto X = load_orthoset(path);
  std::vector<DaceyCriterion> which;
  if (criterion != "all") which.push_back(static_cast<DaceyCriterion>(criterion[0] - 'a'));
  const auto d = dacey_check(X, which, lim);
  Outcome o;
  std::vector<std::string> letters, values, witnesses;
  json crit = json::object();
  for (auto c : all_dacey_criteria) {
    if (!d.evaluated(c)) continue;
    const std::string l(1, criterion_letter(c));
    const auto& res = d.at(c);
    letters.push_back(l);
    values.push_back(l + "=" + yes_no(res.holds));
    if (!res.witness.empty()) witnesses.push_back("  (" + l + ") " + res.witness);
    crit[l] = {{"holds", res.holds}, {"witness", res.witness}};
    o.report.add("dacey." + l, res.holds ? Status::pass : Status::fail, "", res.witness);
  }
  o.result = {{"criteria", crit}, {"consistent", d.consistent()}, {"dacey", d.value()}};
  if (!d.consistent()) {
    o.report.add("dacey.consistent", Status::fail, "criteria disagree", join(values, ", "));
    o.text = "dacey: criteria disagree (" + join(values, ", ") + ")";
  } else {
    o.text = std::string("dacey: ") + yes_no(d.value()) + " (" + join(letters, ",") +
             (letters.size() > 1 ? " agree)" : ")");
  }
  for (const auto& w : witnesses) o.text += "\n" + w;
  return o;
}

Outcome quotient(const std::string& path) {
  const auto X = load_orthoset(path);
  const auto q = irredundant_quotient(X);
  Outcome o;
  json classes = json::array();
  std::vector<std::string> cs;
  for (auto c : q.classes()) {
    classes.push_back(io::to_json(c));
    cs.push_back(c.to_string());
  }
  o.result = {{"orthoset", io::to_json(q.orthoset)}, {"class_of", q.class_of}, {"classes", classes}};
  o.text = "quotient: n=" + std::to_string(q.orthoset.size()) + " edges " + edges_text(q.orthoset) + "\n  classes: " +
           join(cs, " ");
  return o;
}

std::string not_adjointable_text(const NotAdjointable& w) {
  return "not adjointable; witness y=" + std::to_string(w.y) + ", S=" + w.S.to_string() + " unrealized";
}

Outcome adjoint(const std::string& path) {
  const auto f = load_map(path);
  const auto r = synthesize_adjoint(f);
  Outcome o;
  if (const auto* w = std::get_if<NotAdjointable>(&r)) {
    o.result = {{"adjointable", false}, {"y", w->y}, {"S", io::to_json(w->S)}};
    o.report.add("adjointable", Status::fail, "S_y has no realizer",
                 "y=" + std::to_string(w->y) + ", S=" + w->S.to_string());
    o.text = not_adjointable_text(*w);
    return o;
  }
  const auto& p = std::get<AdjointPair>(r);
  o.result = {{"adjointable", true}, {"adjoint", p.g.table()}};
  o.report.add("adjointable", Status::pass);
  o.text = "adjoint: " + dagger::OrthosetTheory::describe(p.g.table());
  return o;
}

Outcome classify_map(const std::string& path) {
  const auto f = load_map(path);
  const auto r = synthesize_adjoint(f);
  Outcome o;
  if (const auto* w = std::get_if<NotAdjointable>(&r)) {
    o.result = {{"adjointable", false}, {"labels", json::array()}};
    o.report.add("adjointable", Status::fail, "labels need an adjoint",
                 "y=" + std::to_string(w->y) + ", S=" + w->S.to_string());
    o.text = not_adjointable_text(*w);
    return o;
  }
  const auto labels = classify(std::get<AdjointPair>(r));
  o.result = {{"adjointable", true}, {"adjoint", std::get<AdjointPair>(r).g.table()}, {"labels", labels.names()}};
  o.report.add("adjointable", Status::pass);
  o.text = "labels: " + join(labels.names(), ", ");
  return o;
}

// ---- Hermitian verbs ----

template <class S>
Outcome hermitian_verb(const std::string& verb, const json& doc, const io::Loc& at, const Limits& lim) {
  Outcome o;
  o.result["field"] = scalar_traits<S>::name;
  if (verb == "adjoint" || verb == "classify") {
    const auto phi = io::linear_map_from_json<S>(doc, at);
    const auto adj = linear_adjoint(phi);
    if (verb == "adjoint") {
      o.result["adjoint"] = io::to_json(adj.matrix());
      o.text = "adjoint: " + to_string(adj.matrix());
    } else {
      const auto l = classify_linear(phi);
      o.result["labels"] = l.names();
      if (l.projection_onto) o.result["projection_onto"] = io::to_json(*l.projection_onto);
      o.text = "labels: " + join(l.names(), ", ");
    }
    return o;
  }
  const auto H = io::space_from_json<S>(io::field(doc, "space", at), at["space"]);
  if (verb == "complement") {
    const auto vs = io::vectors_from_json<S>(io::field(doc, "subspace", at), H.dim(), at["subspace"]);
    const auto s = Subspace<S>::span(H.dim(), vs);
    const auto c = orthocomplement_sub(H, s);
    const bool splits = is_splitting(H, s);
    o.result["subspace"] = io::to_json(s);
    o.result["complement"] = io::to_json(c);
    o.result["splitting"] = splits;
    o.report.add("splitting", splits ? Status::pass : Status::fail, "S + S⊥ = H and S ∩ S⊥ = 0");
    o.text = "complement: span" + to_string(c.basis()) + " (dim " + std::to_string(c.dim()) + " of " +
             std::to_string(H.dim()) + "); splitting=" + yes_no(splits);
    return o;
  }
  // sample
  const auto vs = io::vectors_from_json<S>(io::field(doc, "lines", at), H.dim(), at["lines"]);
  const auto smp = located(at["lines"], [&] { return orthoset_sample(H, vs, lim); });
  const auto d = dacey_check(smp.orthoset, {}, lim);
  const auto rk = rank(smp.orthoset, lim);
  json lines = json::array();
  for (const auto& l : smp.lines) lines.push_back(io::to_json(l));
  o.result["orthoset"] = io::to_json(smp.orthoset);
  o.result["lines"] = lines;
  o.result["closure_faithful"] = smp.closure_faithful;
  o.result["dacey"] = d.value();
  o.result["rank"] = rk.value;
  o.result["atomistic"] = is_atomistic(smp.orthoset);
  o.text = "sample: n=" + std::to_string(smp.orthoset.size()) + " edges " + edges_text(smp.orthoset) +
           "\n  closure-faithful=" + yes_no(smp.closure_faithful) + " dacey=" + yes_no(d.value()) +
           " rank=" + std::to_string(rk.value) + " dim=" + std::to_string(H.dim()) +
           " atomistic=" + yes_no(is_atomistic(smp.orthoset));
  if (!smp.witness.empty()) o.text += "\n  " + smp.witness;
  return o;
}

Outcome hermitian(const std::string& verb, const std::string& path, const Limits& lim) {
  const auto doc = io::read_file(path);
  const io::Loc at(path);
  if (io::field_of(doc, at) == io::Field::rational) return hermitian_verb<Rational>(verb, doc, at, lim);
  return hermitian_verb<GaussianRational>(verb, doc, at, lim);
}

// ---- reports ----

std::string report_text(const Report& r) {
  std::ostringstream os;
  std::size_t failing = 0;
  for (const auto& c : r.checks) {
    os << to_string(c.status) << " " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    if (!c.witness.empty()) os << "    witness: " << c.witness << "\n";
    failing += is_failure(c.status);
  }
  os << r.checks.size() << " checks, " << failing << " failing";
  return os.str();
}

Outcome category_check(const std::string& path, bool hyps, bool lemmas, const io::InstanceOptions& opt) {
  const auto inst = io::instance_from_json(io::read_file(path), io::Loc(path), opt);
  Outcome o;
  std::visit(
      [&](const auto& C) {
        o.report = dagger::check_instance(C, hyps, lemmas);
        using T = typename std::decay_t<decltype(C)>::theory;
        json objects = json::array();
        for (std::size_t a = 0; a < C.size(); ++a) objects.push_back(C.name(a));
        std::size_t morphisms = 0;
        for (std::size_t a = 0; a < C.size(); ++a)
          for (std::size_t b = 0; b < C.size(); ++b) morphisms += C.hom(a, b).size();
        o.result = {{"theory", T::name}, {"objects", objects}, {"listed_morphisms", morphisms}};
      },
      inst);
  o.text = report_text(o.report);
  return o;
}

Outcome suite(const std::vector<std::size_t>& which) {
  Outcome o;
  o.report = acceptance::run(which);
  std::ostringstream os;
  for (const auto& c : o.report.checks) {
    os << (is_failure(c.status) ? "FAIL " : "PASS ") << c.name << ": " << c.detail << "\n";
    if (is_failure(c.status) && !c.witness.empty()) os << "     witness: " << c.witness << "\n";
  }
  os << (o.report.passed() ? "suite passed" : "suite failed");
  o.text = os.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthokit: finite orthosets, Hermitian spaces and dagger-category checks"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  Limits lim;
  std::size_t bruteforce_max = 4;
  app.add_flag("--json", as_json, "Print a machine-readable JSON report");
  app.add_option("--max-n", lim.max_n, "Largest orthoset enumerated (ORTHOKIT_MAX_N overrides)")->capture_default_str();
  app.add_option("--max-lattice", lim.max_lattice, "Largest C(X) enumerated")->capture_default_str();
  app.add_option("--bruteforce-max", bruteforce_max, "Most proper elements of a domain whose maps are all enumerated")
      ->capture_default_str();

  std::string file, criterion = "all", hverb;
  bool hyps = false, lemmas = false;
  std::vector<std::size_t> only;

  const auto with_file = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", file, what)->required()->check(CLI::ExistingFile);
    return sub;
  };
  auto* inspect_cmd = with_file(app.add_subcommand("inspect", "Size, rank and flags of an orthoset"), "orthoset file");
  auto* lattice_cmd = with_file(app.add_subcommand("lattice", "The ortholattice C(X)"), "orthoset file");
  auto* dacey_cmd = with_file(app.add_subcommand("dacey", "Dacey criteria"), "orthoset file");
  dacey_cmd->add_option("--criterion", criterion, "a..e or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "all"}))
      ->capture_default_str();
  auto* quotient_cmd = with_file(app.add_subcommand("quotient", "Irredundant quotient"), "orthoset file");
  auto* adjoint_cmd = with_file(app.add_subcommand("adjoint", "Synthesize the adjoint of a map"), "map file");
  auto* classify_cmd = with_file(app.add_subcommand("classify", "Label an adjointable map"), "map file");
  auto* herm_cmd = app.add_subcommand("hermitian", "Hermitian spaces over Q or Q(i)");
  herm_cmd->add_option("verb", hverb, "adjoint | classify | complement | sample")
      ->required()
      ->check(CLI::IsMember({"adjoint", "classify", "complement", "sample"}));
  with_file(herm_cmd, "space or map file");
  auto* cat_cmd = app.add_subcommand("category", "Dagger-category instances");
  auto* check_cmd = with_file(cat_cmd->add_subcommand("check", "Verify an instance"), "instance file");
  cat_cmd->require_subcommand(1);
  check_cmd->add_flag("--hypotheses", hyps, "Also check H1-H5");
  check_cmd->add_flag("--lemmas", lemmas, "Also check the derived lemmas");
  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance suite");
  suite_cmd->add_option("--criterion", only, "Only these criteria (1-10)")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("ORTHOKIT_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0) {
      std::cerr << "error: ORTHOKIT_MAX_N must be a positive integer, got \"" << env << "\"\n";
      return 2;
    }
    lim.max_n = v;
  }

  std::string verb;
  try {
    Outcome o;
    if (*inspect_cmd) o = inspect(file, lim), verb = "inspect";
    else if (*lattice_cmd) o = lattice(file, lim), verb = "lattice";
    else if (*dacey_cmd) o = dacey(file, criterion, lim), verb = "dacey";
    else if (*quotient_cmd) o = quotient(file), verb = "quotient";
    else if (*adjoint_cmd) o = adjoint(file), verb = "adjoint";
    else if (*classify_cmd) o = classify_map(file), verb = "classify";
    else if (*herm_cmd) o = hermitian(hverb, file, lim), verb = "hermitian " + hverb;
    else if (*check_cmd) o = category_check(file, hyps, lemmas, {bruteforce_max}), verb = "category check";
    else if (*suite_cmd) o = suite(only), verb = "suite";
    if (as_json) std::cout << io::report_json(verb, o.report, o.result).dump(2) << "\n";
    else std::cout << o.text << "\n";
    return o.report.passed() ? 0 : 1;
  } catch (const bound_exceeded& e) {
    std::cerr << "error: " << e.what() << "; raise --" << e.bound() << "\n";
    return 2;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_failed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
