#include "gpd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "gpd/catgroup.hpp"
#include "gpd/covering.hpp"
#include "gpd/document.hpp"
#include "gpd/error.hpp"
#include "gpd/homotopy.hpp"

namespace gpd::cli {

namespace {

// Thrown by a command to report a failed property with exit status 1.
struct PropertyFails {
  std::string report;
};

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string names(const Groupoid& g, const std::vector<MorphismId>& ms) {
  std::vector<std::string> parts;
  for (auto a : ms) parts.push_back(g.name(a));
  return "{" + join(parts) + "}";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) throw Error(Errc::IoError, "cannot write '" + path + "'", {path});
}

void emit(const Document& doc, const std::string& path, std::ostream& out) {
  const std::string text = print_document(doc);
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
    out << "wrote " << kind_of(doc) << " to " << path << "\n";
  }
}

CoveringMorphism load_covering(const std::string& path) { return check_covering(load_functor(path)); }

std::string nat_iso_lines(const NaturalIsomorphism& s, const std::string& label) {
  const Groupoid& c = *s.source.domain();
  const Groupoid& d = *s.source.codomain();
  std::string out;
  for (auto x : c.objects()) out += "  " + label + "(" + c.name(x) + ") = " + d.name(s(x)) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

void cmd_validate(const std::string& file, std::ostream& out) {
  const Document doc = load_document(file);
  if (auto* g = std::get_if<GroupoidPtr>(&doc)) {
    out << "groupoid: " << plural((*g)->object_count(), "object") << ", "
        << plural((*g)->morphism_count(), "morphism") << ", "
        << (is_connected(**g) ? "connected" : "not connected") << "\n";
    return;
  }
  if (auto* f = std::get_if<GroupoidMorphism>(&doc)) {
    if (auto v = validate_functor(*f)) throw PropertyFails{"functor: not a functor: " + describe(*f, *v) + "\n"};
    out << "functor: " << plural(f->domain()->morphism_count(), "morphism") << " into "
        << plural(f->codomain()->morphism_count(), "morphism") << ", functor laws hold\n";
    return;
  }
  if (auto* n = std::get_if<NaturalIsomorphism>(&doc)) {
    require_functor(n->source, "source");
    require_functor(n->target, "target");
    if (auto v = validate_nat_iso(*n)) {
      throw PropertyFails{"natiso: not natural: " + describe(*n, *v) + "\n"};
    }
    out << "natiso: " << plural(n->components.size(), "component") << ", natural\n";
    return;
  }
  const auto& s = std::get<CatGroupStructure>(doc);
  if (auto v = validate_functor(s.tensor())) {
    throw PropertyFails{"catgroup: product is not a functor: " + describe(s.tensor(), *v) + "\n"};
  }
  if (auto v = validate_functor(s.inv())) {
    throw PropertyFails{"catgroup: inverse is not a functor: " + describe(s.inv(), *v) + "\n"};
  }
  out << "catgroup: carrier with " << plural(s.carrier()->object_count(), "object") << ", unit "
      << s.carrier()->name(s.unit()) << ", product and inverse are functors\n";
}

void cmd_analyze(const std::string& file, std::ostream& out) {
  const auto g = load_groupoid(file);
  const auto comps = connected_components(*g);
  const std::size_t ncomp = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
  out << "objects: " << g->object_count() << "\n";
  out << "morphisms: " << g->morphism_count() << "\n";
  out << "components: " << ncomp << "\n";
  out << "connected: " << (is_connected(*g) ? "yes" : "no") << "\n";
  out << "simply connected: " << (is_simply_connected(*g) ? "yes" : "no") << "\n";
  out << "object groups:\n";
  for (auto x : g->objects()) {
    const auto h = object_group(*g, x);
    out << "  " << g->name(x) << ": order " << h.order() << " " << names(*g, h.elements) << "\n";
  }
}

void cmd_covering_check(const std::string& file, std::ostream& out) {
  const auto p = load_covering(file);
  out << "covering: " << plural(p.domain()->object_count(), "object") << " over "
      << plural(p.codomain()->object_count(), "object") << ", every star maps bijectively\n";
  out << "universal: " << (is_universal_covering(p) ? "yes" : "no") << "\n";
}

void cmd_chargroup(const std::string& file, const std::string& obj, std::ostream& out) {
  const auto p = load_covering(file);
  const ObjectId xt = p.domain()->object(obj);
  const auto c = characteristic_group(p, xt);
  const Groupoid& g = *p.codomain();
  out << "characteristic group at " << obj << " over " << g.name(p(xt)) << ": order " << c.order() << " of "
      << object_group(g, p(xt)).order() << "\n";
  out << "  elements: " << names(g, c.elements) << "\n";
}

void cmd_lift(const std::string& pfile, const std::string& qfile, const std::string& z, const std::string& xt,
              const std::string& o, std::ostream& out) {
  const auto p = load_covering(pfile);
  const auto q = load_functor(qfile);
  const auto lifted = lift_morphism(p, q, q.domain()->object(z), p.domain()->object(xt));
  emit(lifted, o, out);
}

void cmd_factor(const std::string& pfile, const std::string& xt, const std::string& qfile, const std::string& zt,
                const std::string& o, std::ostream& out) {
  const auto p = load_covering(pfile);
  const auto q = load_covering(qfile);
  const auto f = factor_covering(p, p.domain()->object(xt), q, q.domain()->object(zt));
  out << "factorization: r is " << (f.is_isomorphism ? "an isomorphism" : "a covering, not an isomorphism") << "\n";
  emit(f.r.functor(), o, out);
}

void cmd_universal(const std::string& file, const std::string& x, const std::string& o, std::ostream& out) {
  const auto g = load_groupoid(file);
  const auto p = universal_cover(g, g->object(x));
  emit(p.functor(), o, out);
}

void cmd_homotopic(const std::string& ffile, const std::string& gfile, std::ostream& out) {
  const auto f = load_functor(ffile);
  const auto g = load_functor(gfile);
  require_functor(f, "first functor");
  require_functor(g, "second functor");
  const auto sigma = are_homotopic(f, g);
  if (!sigma) throw PropertyFails{"homotopic: no natural isomorphism exists\n"};
  out << "homotopic: yes\n" << nat_iso_lines(*sigma, "sigma");
}

void cmd_natiso_to_homotopy(const std::string& file, const std::string& o, std::ostream& out) {
  const auto sigma = load_natiso(file);
  require_functor(sigma.source, "source");
  require_functor(sigma.target, "target");
  emit(nat_iso_to_homotopy(sigma).functor, o, out);
}

void cmd_homotopy_to_natiso(const std::string& file, const std::string& o, std::ostream& out) {
  const auto h = make_homotopy(load_functor(file));
  emit(homotopy_to_nat_iso(h), o, out);
}

void cmd_lift_homotopy(const std::string& pfile, const std::string& hfile, const std::string& z,
                       const std::string& xt, const std::string& o, std::ostream& out) {
  const auto p = load_covering(pfile);
  const auto h = make_homotopy(load_functor(hfile));
  const auto& c = h.functor.domain()->factors()->left;
  const auto lifted = lift_homotopy(p, h, c->object(z), p.domain()->object(xt));
  emit(lifted.homotopy.functor, o, out);
}

void cmd_check_strict(const std::string& file, std::ostream& out) {
  const auto s = load_catgroup(file);
  if (auto v = validate_group_groupoid(s)) {
    throw PropertyFails{"group-groupoid: " + std::string(to_string(v->axiom)) + " fails: " + v->detail + "\n"};
  }
  out << "group-groupoid: product and inverse are functors and the group laws hold exactly\n";
}

void cmd_check(const std::string& file, std::ostream& out) {
  const auto s = load_catgroup(file);
  const auto w = validate_categorical_group(s);
  out << "categorical group: the group laws hold up to homotopy\n";
  auto only_identities = [](const NaturalIsomorphism& n) {
    const Groupoid& d = *n.source.codomain();
    return std::all_of(n.components.begin(), n.components.end(),
                       [&](MorphismId a) { return d.identity(d.src(a)) == a; });
  };
  const std::pair<const char*, const NaturalIsomorphism*> rows[] = {
      {"associativity", &w.associator},  {"right unit", &w.right_unitor}, {"left unit", &w.left_unitor},
      {"right inverse", &w.right_inverse}, {"left inverse", &w.left_inverse},
  };
  for (const auto& [label, n] : rows) {
    out << label << ": " << (only_identities(*n) ? "identity components" : "nontrivial components") << "\n";
    if (!only_identities(*n)) out << nat_iso_lines(*n, "w");
  }
}

void cmd_catgroup_lift(const std::string& pfile, const std::string& sfile, const std::string& et,
                       const std::string& o, std::ostream& out) {
  const auto p = load_covering(pfile);
  const auto s = load_catgroup(sfile);
  emit(lift_categorical_group(p, s, p.domain()->object(et)), o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoids, coverings, homotopies and categorical groups."};
  app.name("gpd");
  app.require_subcommand(1);

  std::function<void()> action;
  std::string a1, a2, a3, a4, o;
  auto file_arg = [](CLI::App* cmd, const char* name, std::string& into, const char* help) {
    cmd->add_option(name, into, help)->required();
  };
  auto output_opt = [&o](CLI::App* cmd) { cmd->add_option("-o,--output", o, "write the result to this file"); };

  auto* validate = app.add_subcommand("validate", "parse a document and check its laws");
  file_arg(validate, "file", a1, "groupoid, functor, natiso or catgroup document");
  validate->callback([&] { action = [&] { cmd_validate(a1, out); }; });

  auto* analyze = app.add_subcommand("analyze", "connectivity and object groups of a groupoid");
  file_arg(analyze, "groupoid", a1, "groupoid document");
  analyze->callback([&] { action = [&] { cmd_analyze(a1, out); }; });

  auto* covering = app.add_subcommand("covering", "covering morphisms");
  covering->require_subcommand(1);
  auto* check = covering->add_subcommand("check", "decide whether a functor is a covering");
  file_arg(check, "p", a1, "functor document");
  check->callback([&] { action = [&] { cmd_covering_check(a1, out); }; });

  auto* chargroup = covering->add_subcommand("chargroup", "characteristic group at an object");
  file_arg(chargroup, "p", a1, "covering functor");
  file_arg(chargroup, "object", a2, "object of the covering groupoid");
  chargroup->callback([&] { action = [&] { cmd_chargroup(a1, a2, out); }; });

  auto* lift = covering->add_subcommand("lift", "lift q : K -> G through p : G~ -> G");
  file_arg(lift, "p", a1, "covering functor");
  file_arg(lift, "q", a2, "functor into the base");
  file_arg(lift, "z", a3, "base object of K");
  file_arg(lift, "xt", a4, "object of G~ over q(z)");
  output_opt(lift);
  lift->callback([&] { action = [&] { cmd_lift(a1, a2, a3, a4, o, out); }; });

  auto* factor = covering->add_subcommand("factor", "factor p through q");
  file_arg(factor, "p", a1, "covering functor");
  file_arg(factor, "xt", a2, "base object of p");
  file_arg(factor, "q", a3, "covering functor");
  file_arg(factor, "zt", a4, "base object of q");
  output_opt(factor);
  factor->callback([&] { action = [&] { cmd_factor(a1, a2, a3, a4, o, out); }; });

  auto* universal = covering->add_subcommand("universal", "universal cover of a connected groupoid");
  file_arg(universal, "groupoid", a1, "groupoid document");
  file_arg(universal, "object", a2, "base object");
  output_opt(universal);
  universal->callback([&] { action = [&] { cmd_universal(a1, a2, o, out); }; });

  auto* homotopic = app.add_subcommand("homotopic", "find a natural isomorphism f -> g");
  file_arg(homotopic, "f", a1, "functor document");
  file_arg(homotopic, "g", a2, "functor document");
  homotopic->callback([&] { action = [&] { cmd_homotopic(a1, a2, out); }; });

  auto* to_homotopy = app.add_subcommand("natiso-to-homotopy", "homotopy C x J -> D from a natural isomorphism");
  file_arg(to_homotopy, "natiso", a1, "natiso document");
  output_opt(to_homotopy);
  to_homotopy->callback([&] { action = [&] { cmd_natiso_to_homotopy(a1, o, out); }; });

  auto* to_natiso = app.add_subcommand("homotopy-to-natiso", "natural isomorphism from a homotopy");
  file_arg(to_natiso, "homotopy", a1, "functor document with domain C x J");
  output_opt(to_natiso);
  to_natiso->callback([&] { action = [&] { cmd_homotopy_to_natiso(a1, o, out); }; });

  auto* lift_h = app.add_subcommand("lift-homotopy", "lift a homotopy through a covering");
  file_arg(lift_h, "p", a1, "covering functor");
  file_arg(lift_h, "homotopy", a2, "functor document with domain C x J");
  file_arg(lift_h, "z", a3, "object of C");
  file_arg(lift_h, "xt", a4, "object over F(z, 0)");
  output_opt(lift_h);
  lift_h->callback([&] { action = [&] { cmd_lift_homotopy(a1, a2, a3, a4, o, out); }; });

  auto* catgroup = app.add_subcommand("catgroup", "group-groupoids and categorical groups");
  catgroup->require_subcommand(1);
  auto* strict = catgroup->add_subcommand("check-strict", "group laws as exact equalities");
  file_arg(strict, "structure", a1, "catgroup document");
  strict->callback([&] { action = [&] { cmd_check_strict(a1, out); }; });

  auto* weak = catgroup->add_subcommand("check", "group laws up to homotopy");
  file_arg(weak, "structure", a1, "catgroup document");
  weak->callback([&] { action = [&] { cmd_check(a1, out); }; });

  auto* cg_lift = catgroup->add_subcommand("lift", "lift the structure along a covering");
  file_arg(cg_lift, "p", a1, "covering functor onto the carrier");
  file_arg(cg_lift, "structure", a2, "catgroup document");
  file_arg(cg_lift, "et", a3, "object over the unit");
  output_opt(cg_lift);
  cg_lift->callback([&] { action = [&] { cmd_catgroup_lift(a1, a2, a3, o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const PropertyFails& f) {
    out << f.report;
    return 1;
  } catch (const Error& e) {
    if (is_property_failure(e.code())) {
      out << e.what() << "\n";
      return 1;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gpd::cli
