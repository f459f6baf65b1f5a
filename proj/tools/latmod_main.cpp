#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latmod/suite.hpp"

namespace {

using namespace latmod;

struct GlobalOpts {
  std::string out_path;
  std::string format = "text";
  std::string exec = "openmp";
  std::string field_tag = "Q";
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t cap = 0;
  int threads = 0;

  Exec mode() const { return exec == "serial" ? Exec::serial : Exec::openmp; }
  std::optional<std::size_t> cap_override() const {
    return cap ? std::optional<std::size_t>(cap) : std::nullopt;
  }
  bool record() const { return format == "record"; }
};

int emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "input error: cannot write " << g.out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

Vector parse_vector(const std::string& text, std::size_t n, Field field) {
  std::vector<Scalar> entries;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    Scalar s = Scalar::parse(item);
    if (field == Field::rationals && !s.is_real())
      throw DocError("non-real coordinate in a Q document: " + item);
    entries.push_back(s);
  }
  if (entries.size() != n)
    throw DocError("expected " + std::to_string(n) + " comma-separated coordinates, got " +
                   std::to_string(entries.size()));
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = entries[i];
  return v;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int exit_code(const CheckReport& rep) { return rep.pass && rep.consistent ? 0 : 1; }

int report_out(const GlobalOpts& g, const CheckReport& rep) {
  int rc = emit(g, g.record() ? render_report(rep) : format_report_text(rep));
  return rc ? rc : exit_code(rep);
}

ModuleInstance make_instance(const Workspace& ws, const ModuleSpec& spec, const GlobalOpts& g) {
  const OrderHom* hom = ws.find_hom(spec.hom);
  if (!hom) throw DocError("module " + spec.name + " references unknown hom " + spec.hom);
  OperatorSpace a = alg(ws.lattice, g.mode());
  ModuleInstance inst = spec.side == Side::right
                            ? module_from_hom_right(ws.lattice, a, *hom, g.mode())
                            : module_from_hom_left(ws.lattice, a, *hom, g.mode());
  inst.audit = audit_reflexive(ws.lattice, g.trials ? g.trials : 200,
                               g.seed ? g.seed : ws.seed, g.mode());
  return inst;
}

int cmd_validate(const GlobalOpts& g, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  std::ostringstream out;
  out << "document valid: field=" << (ws.field == Field::rationals ? "Q" : "Qi")
      << " dimension=" << ws.dimension << " elements=" << ws.lattice.size()
      << " homs=" << ws.homs.size() << " modules=" << ws.modules.size() << "\n";
  return emit(g, out.str());
}

int cmd_closure(const GlobalOpts& g, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  if (g.record()) return emit(g, serialize_workspace(ws));
  std::ostringstream out;
  const auto labels = ws.element_labels();
  out << "carrier (" << ws.lattice.size() << " elements"
      << (ws.closed_from_generators ? ", closed from generators" : "") << "):\n";
  for (std::size_t i = 0; i < ws.lattice.size(); ++i)
    out << "  " << labels[i] << " dim=" << ws.lattice.elements()[i].dim() << " "
        << ws.lattice.elements()[i].str() << "\n";
  return emit(g, out.str());
}

int cmd_alg(const GlobalOpts& g, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  OperatorSpace a = alg(ws.lattice, g.mode());
  CheckReport rep;
  rep.check_id = "alg";
  rep.inputs_digest = hex64(fnv1a64(serialize_workspace(ws) + "|alg"));
  rep.pass = true;
  auto& t = rep.tables.emplace_back();
  t.name = "alg";
  t.add("dimension", std::to_string(a.dim()));
  t.add("unital", a.unital() ? "true" : "false");
  t.add("product-closed", a.product_closed() ? "true" : "false");
  for (std::size_t i = 0; i < a.dim(); ++i)
    t.add("basis[" + std::to_string(i) + "]", a.basis()[i].str());
  return report_out(g, rep);
}

int cmd_maps(const GlobalOpts& g, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  SuiteOptions opt{g.seed, g.trials, g.mode()};
  return report_out(g, run_check(ws, "maps-oracle", opt));
}

int cmd_module(const GlobalOpts& g, const std::string& doc, const std::string& name) {
  Workspace ws = load_workspace(doc, g.cap_override());
  std::vector<ModuleSpec> specs;
  if (!name.empty()) {
    const ModuleSpec* spec = ws.find_module(name);
    if (!spec) throw DocError("no module named " + name);
    specs.push_back(*spec);
  } else {
    if (ws.modules.empty()) throw DocError("document declares no modules");
    specs = ws.modules;
  }
  CheckReport rep;
  rep.check_id = "module";
  rep.inputs_digest = hex64(fnv1a64(serialize_workspace(ws) + "|module|" + name));
  rep.pass = true;
  const auto labels = ws.element_labels();
  for (const auto& spec : specs) {
    ModuleInstance inst = make_instance(ws, spec, g);
    rep.audit = inst.audit;
    auto& t = rep.tables.emplace_back();
    t.name = "module " + spec.name;
    t.add("side", side_name(spec.side));
    t.add("hom", spec.hom);
    t.add("dimension", std::to_string(inst.space.dim()));
    t.add("ideal", is_ideal(inst, g.mode()) ? "true" : "false");
    t.add("reflexive-as-module",
          is_reflexive_module(inst.space, ws.lattice, inst.algebra, inst.side, g.mode())
              ? "true"
              : "false");
    OrderHom tau = tau_of(inst.space, ws.lattice, spec.side);
    for (std::size_t i = 0; i < ws.lattice.size(); ++i) {
      auto idx = ws.lattice.index_of(tau.value(i));
      t.add("tau(" + labels[i] + ")", idx ? labels[*idx] : tau.value(i).str());
    }
  }
  return report_out(g, rep);
}

int cmd_rankone(const GlobalOpts& g, const std::string& doc, const std::string& hom_name,
                const std::string& xs, const std::string& ys, const std::string& side) {
  Workspace ws = load_workspace(doc, g.cap_override());
  const OrderHom* hom = ws.find_hom(hom_name);
  if (!hom) throw DocError("no hom named " + hom_name);
  CheckReport rep;
  rep.check_id = "rankone";
  rep.inputs_digest =
      hex64(fnv1a64(serialize_workspace(ws) + "|rankone|" + hom_name + "|" + xs + "|" + ys));
  if (xs.empty() != ys.empty()) throw DocError("give both --x and --y or neither");
  if (!xs.empty()) {
    Vector x = parse_vector(xs, ws.dimension, ws.field);
    Vector y = parse_vector(ys, ws.dimension, ws.field);
    bool member = side == "left" ? rankone_in_left_module(x, y, ws.lattice, *hom, g.mode())
                                 : rankone_in_right_module(x, y, ws.lattice, *hom, g.mode());
    auto& t = rep.tables.emplace_back();
    t.name = "membership";
    t.add("side", side);
    t.add("x (x) y", materialize(RankOne{x, y}).str());
    t.add("member", member ? "true" : "false");
    rep.pass = true;
    return report_out(g, rep);
  }
  OperatorSpace r = rankone_submodule(ws.lattice, *hom, g.mode());
  auto& t = rep.tables.emplace_back();
  t.name = "rank-one submodule";
  t.add("dimension", std::to_string(r.dim()));
  for (std::size_t i = 0; i < r.dim(); ++i)
    t.add("basis[" + std::to_string(i) + "]", r.basis()[i].str());
  const auto labels = ws.element_labels();
  auto& lt = rep.tables.emplace_back();
  lt.name = "carrier invariance";
  for (std::size_t i = 0; i < ws.lattice.size(); ++i)
    lt.add(labels[i],
           lat_rankone_membership(ws.lattice.elements()[i], ws.lattice, *hom, g.mode())
               ? "invariant"
               : "not-invariant");
  rep.pass = true;
  return report_out(g, rep);
}

int cmd_audit(const GlobalOpts& g, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  SuiteOptions opt{g.seed, g.trials, g.mode()};
  return report_out(g, run_check(ws, "audit", opt));
}

int cmd_check(const GlobalOpts& g, const std::string& id, const std::string& doc) {
  Workspace ws = load_workspace(doc, g.cap_override());
  SuiteOptions opt{g.seed, g.trials, g.mode()};
  return report_out(g, run_check(ws, id, opt));
}

int cmd_random(const GlobalOpts& g, std::size_t dim, std::size_t size, const std::string& style) {
  Workspace ws = random_instance(dim, size, style, g.seed ? g.seed : 1);
  if (g.field_tag == "Qi") ws.field = Field::gaussian_rationals;
  return emit(g, serialize_workspace(ws));
}

int cmd_suite(const GlobalOpts& g, const std::string& doc, const std::string& checks) {
  Workspace ws = load_workspace(doc, g.cap_override());
  SuiteOptions opt{g.seed, g.trials, g.mode()};
  std::vector<CheckReport> reps = run_suite(ws, split_ids(checks), opt);
  int rc = 0;
  if (g.record()) {
    rc = emit(g, render_reports(reps));
  } else {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& rep : reps) {
      out << format_report_text(rep);
      passed += rep.pass && rep.consistent ? 1 : 0;
    }
    out << "suite: " << passed << "/" << reps.size() << " checks passed\n";
    rc = emit(g, out.str());
  }
  if (rc) return rc;
  for (const auto& rep : reps)
    if (!rep.pass || !rep.consistent) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operator-algebra workbench over finite subspace lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--out", g.out_path, "write the primary output to this file");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "record"}));
  app.add_option("--seed", g.seed, "seed override (0: document default)");
  app.add_option("--trials", g.trials, "trial/sample count override (0: per-check default)");
  app.add_option("--cap", g.cap, "lattice closure cap override");
  app.add_option("--field", g.field_tag, "scalar field tag for generated documents")
      ->check(CLI::IsMember({"Q", "Qi"}));
  app.add_option("--exec", g.exec, "kernel execution mode")
      ->check(CLI::IsMember({"serial", "openmp"}));
  app.add_option("--threads", g.threads, "thread count for openmp mode (0: runtime default)");

  std::string doc, name, hom, xs, ys, side = "right", check_id, checks, style = "nest-lattice";
  std::size_t dim = 3, size = 4;

  auto* v = app.add_subcommand("validate", "parse and validate a document");
  v->add_option("doc", doc)->required();
  auto* cl = app.add_subcommand("closure", "print the carrier (record: explicit document)");
  cl->add_option("doc", doc)->required();
  auto* al = app.add_subcommand("alg", "operators leaving every carrier element invariant");
  al->add_option("doc", doc)->required();
  auto* mp = app.add_subcommand("maps", "derived order maps, cross-checked against the oracle");
  mp->add_option("doc", doc)->required();
  auto* mo = app.add_subcommand("module", "solve the declared hom-determined modules");
  mo->add_option("doc", doc)->required();
  mo->add_option("--name", name, "only this module");
  auto* ro = app.add_subcommand("rankone", "rank-one submodule or single membership query");
  ro->add_option("doc", doc)->required();
  ro->add_option("--hom", hom, "hom name")->required();
  ro->add_option("--x", xs, "left factor, comma-separated coordinates");
  ro->add_option("--y", ys, "right factor, comma-separated coordinates");
  ro->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  auto* au = app.add_subcommand("audit", "sampled reflexivity audit of the carrier");
  au->add_option("doc", doc)->required();
  auto* ck = app.add_subcommand("check", "run one named check");
  ck->add_option("id", check_id)->required();
  ck->add_option("doc", doc)->required();
  auto* ra = app.add_subcommand("random", "emit a reproducible random document");
  ra->add_option("--dim", dim, "ambient dimension");
  ra->add_option("--size", size, "carrier size target");
  ra->add_option("--style", style, "<carrier>-<hom>: nest|boolean|lines - lattice|projection|identity");
  auto* su = app.add_subcommand("suite", "run checks in declaration order");
  su->add_option("doc", doc)->required();
  su->add_option("--checks", checks, "comma-separated check ids (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (g.threads > 0) latmod::par::set_thread_count(g.threads);
  latmod::par::set_default_mode(g.mode());

  try {
    if (v->parsed()) return cmd_validate(g, doc);
    if (cl->parsed()) return cmd_closure(g, doc);
    if (al->parsed()) return cmd_alg(g, doc);
    if (mp->parsed()) return cmd_maps(g, doc);
    if (mo->parsed()) return cmd_module(g, doc, name);
    if (ro->parsed()) return cmd_rankone(g, doc, hom, xs, ys, side);
    if (au->parsed()) return cmd_audit(g, doc);
    if (ck->parsed()) return cmd_check(g, check_id, doc);
    if (ra->parsed()) return cmd_random(g, dim, size, style);
    if (su->parsed()) return cmd_suite(g, doc, checks);
    std::cerr << "input error: no subcommand\n";
    return 2;
  } catch (const latmod::DocError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const latmod::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const latmod::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const latmod::ConsistencyViolation& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
