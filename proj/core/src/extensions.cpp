#include "mci/extensions.hpp"

#include "mci/errors.hpp"
#include "mci/validation.hpp"

namespace mci {

Report validate_extension(const Extension& ext) {
  if (ext.iota.source() != ext.a || ext.iota.target() != ext.b || ext.pi.source() != ext.b ||
      ext.pi.target() != ext.c)
    fail(ErrorKind::invalid_input, "extension maps do not match A -> B -> C");
  Report r("ext-check");
  r.merge(validate_morphism(ext.iota), "iota.");
  r.merge(validate_morphism(ext.pi), "pi.");
  if (r.failed()) return r;
  r.add_check("iota.injective", is_injective(ext.iota) ? json(nullptr) : json{{"problem", "iota is not injective"}});
  r.add_check("pi.surjective", is_surjective(ext.pi) ? json(nullptr) : json{{"problem", "pi is not surjective"}});
  Subobject im = image(ext.iota);
  Subobject ker = kernel(ext.pi).sub();
  r.add_check("exact", im == ker ? json(nullptr) : json{{"image", im.to_json()}, {"kernel", ker.to_json()}});
  return r;
}

Extension extension_from_ideal(const Ideal& I, const std::string& name) {
  const ObjectPtr& B = I.parent();
  const std::string nm = name.empty() ? B->name() : name;
  Materialized m = materialize(I.sub(), nm + "_ideal");
  Quotient q = quotient(B, I, nm + "_quotient");
  return {m.object, B, q.object, m.inclusion, q.projection};
}

Report central_report(const Extension& ext) {
  Report r("ext-central");
  r.details()["mode"] = "def";
  if (!is_singular(ext.a)) {
    r.details()["error"] = "precondition-violation";
    r.add_fail("precondition.kernel-singular", json{{"problem", "the kernel object is not singular"}});
    return r;
  }
  r.add_pass("precondition.kernel-singular");
  Ideal z = center(ext.b);
  Subobject im = image(ext.iota);
  json w;
  for (const auto& e : im.spanning_elements())
    if (!z.contains(e)) {
      w = json{{"element", ext.b->describe(e)}, {"center", z.sub().to_json()}};
      break;
    }
  r.add_check("image-in-center", w);
  return r;
}

bool is_central(const Extension& ext) { return central_report(ext).passed(); }

Morphism sing_on_morphism(const Morphism& f, const Singularization& sb, const Singularization& sc) {
  if (sb.unit.source() != f.source() || sc.unit.source() != f.target())
    fail(ErrorKind::invalid_input, "singularizations do not match the morphism");
  Lift lift(sb.unit);
  Morphism g = tabulate(sb.object, sc.object, [&](const Element& s) { return sc.unit(f(lift(s))); });
  if (!same_map(compose(g, sb.unit), compose(sc.unit, f)))
    fail(ErrorKind::internal, "induced map on singularizations does not commute with the units");
  return g;
}

Morphism sing_on_morphism(const Morphism& f) {
  return sing_on_morphism(f, singularization(f.source()), singularization(f.target()));
}

Report trivial_extension_report(const Morphism& f) {
  Report r("trivial-extension");
  if (!is_surjective(f)) fail(ErrorKind::precondition_violation, "trivial-extension test needs a surjective morphism");
  Singularization sa = singularization(f.source());
  Singularization sb = singularization(f.target());
  Morphism sf = sing_on_morphism(f, sa, sb);
  // carrier {(b, s) | eta_B(b) = Sing(f)(s)}
  Pullback pb = pullback(sf, sb.unit);
  Morphism u = pullback_factor(pb, sf, sb.unit, f, sa.unit);
  r.details()["source_extent"] = f.source()->extent();
  r.details()["pullback_extent"] = pb.object->extent();
  r.add_check("comparison-isomorphism",
              is_isomorphism(u) ? json(nullptr)
                                : json{{"injective", is_injective(u)}, {"surjective", is_surjective(u)}});
  return r;
}

bool is_trivial_extension(const Morphism& f) { return trivial_extension_report(f).passed(); }

Report jk_central_report(const Extension& ext) {
  Report r("ext-central");
  r.details()["mode"] = "jk";
  Pullback pb = pullback(ext.pi, ext.pi);
  Report t = trivial_extension_report(pb.pi1);
  r.details()["pullback_extent"] = pb.object->extent();
  r.merge(t, "pi1.");
  return r;
}

bool is_jk_central(const Extension& ext) { return jk_central_report(ext).passed(); }

}  // namespace mci
