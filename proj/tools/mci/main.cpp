#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mci/corpus.hpp"
#include "mci/errors.hpp"
#include "mci/io.hpp"
#include "mci/structure.hpp"
#include "mci/validation.hpp"

namespace fs = std::filesystem;
using namespace mci;

namespace {

struct Options {
  bool json_out = false;
  bool oracle = false;
  std::uint32_t p = 3;
  std::string convention = "right";
  std::string output;
  LeibnizConvention conv() const { return parse_leibniz_convention(convention); }
};

enum Exit { kPass = 0, kFail = 1, kInvalid = 2 };

void render(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  std::cout << r.command() << ": " << to_string(r.verdict()) << "\n";
  for (const auto& e : r.entries()) {
    std::cout << "  [" << to_string(e.status) << "] " << e.name;
    if (!e.witness.is_null()) std::cout << "  " << e.witness.dump();
    std::cout << "\n";
  }
  if (!r.details().empty()) std::cout << "  details: " << r.details().dump() << "\n";
}

int exit_for(const Report& r) {
  switch (r.verdict()) {
    case Status::pass:
    case Status::holds_by_construction:
      return kPass;
    case Status::fail:
      return kFail;
    case Status::not_checked:
      return kInvalid;
  }
  return kInvalid;
}

int emit_report(Report r, const Options& o, std::chrono::steady_clock::time_point start) {
  r.set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  render(r, o.json_out);
  return exit_for(r);
}

int emit_document(const json& doc, const Options& o) {
  if (o.output.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json_file(o.output, doc);
  return kPass;
}

ObjectPtr load_object(const std::string& path) { return object_from_json(JsonSource::load(path)); }

json subobject_details(const Subobject& s) {
  json j = s.to_json();
  j["extent"] = s.extent();
  j["members"] = subobject_to_json(s);
  return j;
}

// Recomputes `linear_result` on the element table of the F_p base change.
void oracle_subobject(Report& r, const ObjectPtr& obj, const Options& o, const Subobject& linear_result,
                      const std::function<Subobject(const ObjectPtr&)>& compute) {
  if (obj->is_table()) {
    r.details()["oracle"] = "table object: already computed by enumeration";
    return;
  }
  ObjectPtr fp = obj->field()->is_rational() ? base_change(*obj, o.p) : obj;
  TableRealization tr = realize_table(fp);
  Subobject table_result = compute(tr.table);
  Subobject mapped = linear_result;
  if (obj->field()->is_rational()) {
    std::vector<Element> reduced;
    for (const auto& e : linear_result.spanning_elements()) {
      Vector v;
      for (const auto& s : as_vector(e)) v.push_back(Scalar::from_rational(*fp->field(), s.rational()));
      reduced.push_back(v);
    }
    mapped = Subobject::from_elements(fp, reduced);
  }
  Subobject expected = realize_subobject(mapped, tr);
  r.add_check("oracle.F" + std::to_string(fp->field()->characteristic()),
              expected == table_result ? json(nullptr)
                                       : json{{"linear", expected.to_json()}, {"table", table_result.to_json()}});
}

bool is_xmod_doc(const JsonSource& s) { return s.has("c1"); }

using Handler = std::function<int()>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mci: modified categories of interest"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> files;
  std::string mode = "both";
  std::string order = "reversed";
  bool precat_only = false;
  bool search = false;
  std::string dir = "corpus";
  Handler handler;
  auto start = std::chrono::steady_clock::now();

  auto add = [&](const std::string& name, const std::string& help, std::size_t min_files, std::size_t max_files,
                 Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (max_files > 0) {
      auto* opt = sub->add_option("files", files, "input files");
      opt->expected(static_cast<int>(min_files), static_cast<int>(max_files));
      if (min_files > 0) opt->required();
    }
    sub->add_flag("--json", o.json_out, "print the report as JSON");
    sub->add_flag("--oracle", o.oracle, "cross-check against the F_p element tables");
    sub->add_option("--p", o.p, "prime for --oracle and base-change")->check(CLI::Range(2u, 97u));
    sub->add_option("--leibniz-convention", o.convention, "left or right")->check(CLI::IsMember({"left", "right"}));
    sub->add_option("-o,--output", o.output, "output file");
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };

  add("validate", "variety membership of an object", 1, 1, [&] {
    ObjectPtr obj = load_object(files[0]);
    Report r = check_variety(*obj, o.conv());
    r.set_command("validate");
    if (o.oracle && obj->is_linear() && obj->field()->is_rational()) {
      auto [fp, rep] = base_change_checked(*obj, o.p, o.conv());
      r.merge(rep, "oracle.F" + std::to_string(o.p) + ".");
    }
    return emit_report(r, o, start);
  });

  add("semidirect", "A x| B for an action of B on A", 3, 3, [&] {
    ObjectPtr a = load_object(files[0]), b = load_object(files[1]);
    ActionData act = action_from_json(JsonSource::load(files[2]), b, a);
    Report v = validate_action(act);
    if (v.failed()) return emit_report(v, o, start);
    return emit_document(object_to_json(*build_semidirect(act).object), o);
  });

  add("action-check", "derived-action criteria", 3, 3, [&] {
    ObjectPtr a = load_object(files[0]), b = load_object(files[1]);
    ActionData act = action_from_json(JsonSource::load(files[2]), b, a);
    Report r("action-check");
    r.details()["mode"] = mode;
    if (mode == "theorem" || mode == "both") r.merge(is_derived_action(act, Ambient::variety, o.conv()), "theorem.");
    if (mode == "conditions" || mode == "both") {
      ActionData target = act;
      if (a->is_linear() && a->field()->is_rational() && o.oracle) {
        ObjectPtr ap = base_change(*a, o.p), bp = base_change(*b, o.p);
        target = base_change(act, bp, ap);
        r.details()["conditions_field"] = ap->field()->name();
      }
      Report c = check_action_conditions(target);
      r.merge(c, "conditions.");
      if (mode == "both") {
        Report t = is_derived_action(target, Ambient::groups_with_operations, o.conv());
        r.add_check("agreement", t.passed() == c.passed()
                                     ? json(nullptr)
                                     : json{{"theorem", to_string(t.verdict())}, {"conditions", to_string(c.verdict())}});
      }
    }
    return emit_report(r, o, start);
  })->add_option("--mode", mode, "theorem, conditions or both")->check(CLI::IsMember({"theorem", "conditions", "both"}));

  add("xmod-check", "(pre)crossed module axioms", 1, 1, [&] {
    PreCrossedModule x = xmod_from_json(JsonSource::load(files[0]));
    Report r = precat_only ? check_precrossed(x, o.conv()) : check_crossed(x, o.conv());
    return emit_report(r, o, start);
  })->add_flag("--precrossed", precat_only, "check only the precrossed axioms");

  add("cat1-check", "(pre)cat1 conditions", 1, 1, [&] {
    Cat1Object t = cat1_from_json(JsonSource::load(files[0]));
    return emit_report(check_cat1(t, !precat_only, o.conv()), o, start);
  })->add_flag("--precat1", precat_only, "check only the precat1 identities");

  add("to-cat1", "cat1 object of a crossed module", 1, 1, [&] {
    return emit_document(cat1_to_json(functor_C(xmod_from_json(JsonSource::load(files[0])))), o);
  });

  add("to-xmod", "crossed module of a cat1 object", 1, 1, [&] {
    return emit_document(xmod_to_json(functor_X(cat1_from_json(JsonSource::load(files[0])))), o);
  });

  add("roundtrip", "equivalence comparison maps", 1, 1, [&] {
    JsonSource s = JsonSource::load(files[0]);
    if (is_xmod_doc(s)) return emit_report(roundtrip_check(xmod_from_json(s)), o, start);
    Cat1Object t = cat1_from_json(s);
    return emit_report(search ? roundtrip_search_cat1(t) : roundtrip_check_cat1(t), o, start);
  })->add_flag("--search", search, "isomorphism search (tables of at most 24 elements)");

  add("center", "center of an object", 1, 1, [&] {
    ObjectPtr a = load_object(files[0]);
    Ideal z = center(a);
    Report r("center");
    r.merge(validate_ideal(z.sub()), "ideal.");
    r.details()["center"] = subobject_details(z.sub());
    if (o.oracle) oracle_subobject(r, a, o, z.sub(), [](const ObjectPtr& t) { return center(t).sub(); });
    return emit_report(r, o, start);
  });

  add("centralizer", "centralizer of an ideal", 2, 2, [&] {
    ObjectPtr a = load_object(files[0]);
    Ideal i = Ideal::make(subobject_from_json(JsonSource::load(files[1]), a));
    Ideal z = centralizer(a, i);
    Report r("centralizer");
    r.merge(validate_ideal(z.sub()), "ideal.");
    r.details()["centralizer"] = subobject_details(z.sub());
    return emit_report(r, o, start);
  });

  add("ideal-gen", "ideal generated by elements", 2, 2, [&] {
    ObjectPtr a = load_object(files[0]);
    JsonSource gs = JsonSource::load(files[1]);
    std::vector<Element> gens = elements_from_json(gs, a);
    Ideal i = ideal_generated(a, gens);
    Report r("ideal-gen");
    r.merge(validate_ideal(i.sub()), "ideal.");
    r.details()["ideal"] = subobject_details(i.sub());
    if (o.oracle) {
      auto compute = [&](const ObjectPtr& table) {
        const Field f = *a->field();
        const std::uint32_t p = f.is_rational() ? o.p : f.characteristic();
        std::vector<Element> ids;
        for (const auto& g : gens) {
          std::uint32_t id = 0, w = 1;
          for (const auto& s : as_vector(g)) {
            id += (f.is_rational() ? Scalar::from_rational(Field::prime(p), s.rational()) : s).residue() * w;
            w *= p;
          }
          ids.push_back(id);
        }
        return ideal_generated(table, ids).sub();
      };
      oracle_subobject(r, a, o, i.sub(), compute);
    }
    return emit_report(r, o, start);
  });

  add("commutator", "[A,A]", 1, 1, [&] {
    ObjectPtr a = load_object(files[0]);
    Ideal k = commutator(a);
    Report r("commutator");
    r.merge(validate_ideal(k.sub()), "ideal.");
    r.details()["commutator"] = subobject_details(k.sub());
    if (o.oracle) oracle_subobject(r, a, o, k.sub(), [](const ObjectPtr& t) { return commutator(t).sub(); });
    return emit_report(r, o, start);
  });

  add("singularize", "A/[A,A] with its unit", 1, 1, [&] {
    Singularization s = singularization(load_object(files[0]));
    return emit_document(json{{"object", object_to_json(*s.object)}, {"unit", morphism_to_json(s.unit)}}, o);
  });

  add("is-singular", "center = A and [A,A] = 0", 1, 1, [&] {
    Report r = singular_report(load_object(files[0]));
    r.set_command("is-singular");
    return emit_report(r, o, start);
  });

  add("ext-check", "short exact sequence checks", 1, 1, [&] {
    return emit_report(validate_extension(extension_from_json(JsonSource::load(files[0]))), o, start);
  });

  add("ext-central", "central extension tests", 1, 1, [&] {
    Extension e = extension_from_json(JsonSource::load(files[0]));
    Report v = validate_extension(e);
    if (v.failed()) return emit_report(v, o, start);
    if (mode == "def") return emit_report(central_report(e), o, start);
    if (mode == "jk") return emit_report(jk_central_report(e), o, start);
    Report d = central_report(e), j = jk_central_report(e);
    Report r("ext-central");
    r.details()["mode"] = "both";
    r.merge(d, "def.");
    r.merge(j, "jk.");
    r.details()["def"] = to_string(d.verdict());
    r.details()["jk"] = to_string(j.verdict());
    r.add_check("agreement", d.passed() == j.passed() ? json(nullptr)
                                                      : json{{"def", to_string(d.verdict())}, {"jk", to_string(j.verdict())}});
    return emit_report(r, o, start);
  })->add_option("--mode", mode, "def, jk or both")->check(CLI::IsMember({"def", "jk", "both"}));

  add("xmod-center", "center of a (pre)crossed module", 1, 1, [&] {
    PreCrossedModule x = xmod_from_json(JsonSource::load(files[0]));
    XmodCenter z = xmod_center(x, order == "literal" ? ActionOrder::literal : ActionOrder::reversed);
    if (o.oracle && x.c1->is_linear()) {
      PreCrossedModule xp = x.c1->field()->is_rational() ? base_change(x, o.p) : x;
      XmodRealization rz = realize_xmod(xp);
      XmodCenter zt = xmod_center(rz.table);
      XmodCenter zl = x.c1->field()->is_rational() ? xmod_center(xp) : z;
      z.report.add_check("oracle.z1", realize_subobject(zl.z1, rz.r1) == zt.z1 ? json(nullptr) : json{{"table", zt.z1.to_json()}});
      z.report.add_check("oracle.z0", realize_subobject(zl.z0, rz.r0) == zt.z0 ? json(nullptr) : json{{"table", zt.z0.to_json()}});
    }
    return emit_report(z.report, o, start);
  })->add_option("--action-order", order, "reversed or literal")->check(CLI::IsMember({"reversed", "literal"}));

  add("xmod-commutator", "commutator subcrossed module", 1, 1, [&] {
    PreCrossedModule x = xmod_from_json(JsonSource::load(files[0]));
    XmodCommutator k = xmod_commutator(x);
    if (o.oracle && x.c1->is_linear()) {
      PreCrossedModule xp = x.c1->field()->is_rational() ? base_change(x, o.p) : x;
      XmodRealization rz = realize_xmod(xp);
      XmodCommutator kt = xmod_commutator(rz.table);
      XmodCommutator kl = x.c1->field()->is_rational() ? xmod_commutator(xp) : k;
      k.report.add_check("oracle.k1", realize_subobject(kl.k1, rz.r1) == kt.k1 ? json(nullptr) : json{{"table", kt.k1.to_json()}});
      k.report.add_check("oracle.k0", realize_subobject(kl.k0, rz.r0) == kt.k0 ? json(nullptr) : json{{"table", kt.k0.to_json()}});
    }
    return emit_report(k.report, o, start);
  });

  add("xmod-singular", "crossed module equal to its center", 1, 1, [&] {
    return emit_report(singular_xmod_report(xmod_from_json(JsonSource::load(files[0]))), o, start);
  });

  add("huq-check", "centrality and maximality of the center", 1, 3, [&] {
    PreCrossedModule x = xmod_from_json(JsonSource::load(files[0]));
    std::vector<HuqCandidate> cands;
    if (files.size() == 2) throw Error(ErrorKind::invalid_input, "huq-check needs both H.json and mu.json");
    if (files.size() == 3)
      cands.push_back(huq_candidate_from_json(xmod_from_json(JsonSource::load(files[1])), JsonSource::load(files[2]), x));
    return emit_report(huq_center_check(x, cands), o, start);
  });

  add("xmod-ext-central", "central extension of crossed modules", 1, 1, [&] {
    return emit_report(xmod_central_extension_check(xmod_extension_from_json(JsonSource::load(files[0]))), o, start);
  });

  add("base-change", "reduce a rational object mod p", 1, 1, [&] {
    ObjectPtr obj = load_object(files[0]);
    auto [fp, rep] = base_change_checked(*obj, o.p, o.conv());
    if (!rep.passed()) return emit_report(rep, o, start);
    return emit_document(object_to_json(*fp), o);
  });

  add("corpus-export", "write the bundled corpus", 0, 0, [&] {
    fs::create_directories(dir);
    for (const auto& [name, doc] : corpus::documents()) write_json_file(fs::path(dir) / name, doc);
    return kPass;
  })->add_option("dir", dir, "target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  try {
    return handler();
  } catch (const Error& e) {
    if (o.json_out)
      std::cout << json{{"verdict", "error"}, {"error", to_string(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "mci: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "mci: " << e.what() << "\n";
    return kInvalid;
  }
}
