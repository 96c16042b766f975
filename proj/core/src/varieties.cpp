#include "mci/varieties.hpp"

#include "mci/constructions.hpp"
#include "mci/errors.hpp"
#include "mci/validation.hpp"

namespace mci {

std::string ops::partner_of(const std::string& op) { return op + "^op"; }

LeibnizConvention parse_leibniz_convention(const std::string& text) {
  if (text == "right") return LeibnizConvention::right;
  if (text == "left") return LeibnizConvention::left;
  fail(ErrorKind::invalid_input, "leibniz convention must be 'left' or 'right', got '" + text + "'");
}

VarietyTag VarietyTag::parse(const std::string& tag) {
  VarietyTag v;
  auto colon = tag.find(':');
  if (colon == std::string::npos) {
    v.base = tag;
  } else {
    std::string level = tag.substr(0, colon);
    v.base = tag.substr(colon + 1);
    if (level == "precat1")
      v.level = Level::precat1;
    else if (level == "cat1")
      v.level = Level::cat1;
    else
      fail(ErrorKind::invalid_input, "unknown variety prefix '" + level + "'");
  }
  if (!is_builtin_base(v.base)) fail(ErrorKind::invalid_input, "unknown variety '" + v.base + "'");
  return v;
}

std::string VarietyTag::to_string() const {
  switch (level) {
    case Level::plain: return base;
    case Level::precat1: return "precat1:" + base;
    case Level::cat1: return "cat1:" + base;
  }
  return base;
}

bool is_builtin_base(const std::string& base) {
  return base == "lie" || base == "leibniz" || base == "assoc" || base == "comm_assoc" ||
         base == "dialgebra" || base == "group";
}

Signature base_signature(const std::string& base) {
  if (base == "lie" || base == "leibniz") return Signature::closed({{ops::bracket, ops::partner_of(ops::bracket)}}, {});
  if (base == "assoc") return Signature::closed({{ops::mul, ops::partner_of(ops::mul)}}, {});
  if (base == "comm_assoc") return Signature({{ops::mul, ops::mul}}, {});
  if (base == "dialgebra")
    return Signature::closed({{ops::dashv, ops::partner_of(ops::dashv)}, {ops::vdash, ops::partner_of(ops::vdash)}},
                             {});
  if (base == "group") return Signature({}, {});
  fail(ErrorKind::invalid_input, "unknown variety '" + base + "'");
}

namespace {

Term v(const char* n) { return Term::var(n); }
Term b(const std::string& op, Term x, Term y) { return Term::binary(op, std::move(x), std::move(y)); }

std::vector<Identity> base_identities(const std::string& base, LeibnizConvention conv) {
  std::vector<Identity> ids;
  const Term x = v("x"), y = v("y"), z = v("z");
  if (base == "lie" || base == "leibniz") {
    const auto& br = ops::bracket;
    if (base == "lie") {
      ids.push_back(make_identity("alternating", b(br, x, x), Term::zero(), {"x"}));
      ids.push_back(make_identity(
          "jacobi",
          Term::add(Term::add(b(br, x, b(br, y, z)), b(br, y, b(br, z, x))), b(br, z, b(br, x, y))),
          Term::zero(), {"x", "y", "z"}));
    } else if (conv == LeibnizConvention::right) {
      ids.push_back(make_identity("leibniz-right", b(br, x, b(br, y, z)),
                                  Term::sub(b(br, b(br, x, y), z), b(br, b(br, x, z), y)), {"x", "y", "z"}));
    } else {
      ids.push_back(make_identity("leibniz-left", b(br, x, b(br, y, z)),
                                  Term::add(b(br, b(br, x, y), z), b(br, y, b(br, x, z))), {"x", "y", "z"}));
    }
  } else if (base == "assoc" || base == "comm_assoc") {
    const auto& m = ops::mul;
    ids.push_back(make_identity("associative", b(m, b(m, x, y), z), b(m, x, b(m, y, z)), {"x", "y", "z"}));
    if (base == "comm_assoc") ids.push_back(make_identity("commutative", b(m, x, y), b(m, y, x), {"x", "y"}));
  } else if (base == "dialgebra") {
    const auto& L = ops::dashv;
    const auto& R = ops::vdash;
    const std::vector<std::string> xyz{"x", "y", "z"};
    ids.push_back(make_identity("diassociative-1", b(L, b(L, x, y), z), b(L, x, b(R, y, z)), xyz));
    ids.push_back(make_identity("diassociative-2", b(L, b(L, x, y), z), b(L, x, b(L, y, z)), xyz));
    ids.push_back(make_identity("diassociative-3", b(L, b(R, x, y), z), b(R, x, b(L, y, z)), xyz));
    ids.push_back(make_identity("diassociative-4", b(R, b(L, x, y), z), b(R, x, b(R, y, z)), xyz));
    ids.push_back(make_identity("diassociative-5", b(R, b(R, x, y), z), b(R, x, b(R, y, z)), xyz));
  }
  return ids;
}

std::vector<Identity> omega_identities(const Signature& base_sig) {
  std::vector<Identity> ids;
  const Term x = v("x"), y = v("y");
  auto w = [](const std::string& o, Term t) { return Term::unary(o, std::move(t)); };
  ids.push_back(make_identity("omega0-omega1", w(ops::omega0, w(ops::omega1, x)), w(ops::omega1, x), {"x"}));
  ids.push_back(make_identity("omega1-omega0", w(ops::omega1, w(ops::omega0, x)), w(ops::omega0, x), {"x"}));
  for (const auto* o : {&ops::omega0, &ops::omega1}) {
    ids.push_back(make_identity(*o + "-additive", w(*o, Term::add(x, y)), Term::add(w(*o, x), w(*o, y)), {"x", "y"}));
    for (const auto& op : base_sig.binary())
      ids.push_back(make_identity(*o + "-multiplicative-" + op.name, w(*o, b(op.name, x, y)),
                                  b(op.name, w(*o, x), w(*o, y)), {"x", "y"}));
  }
  return ids;
}

}  // namespace

VarietyDef variety_def(const std::string& tag, LeibnizConvention conv) {
  VarietyTag t = VarietyTag::parse(tag);
  VarietyDef def;
  def.name = t.to_string();
  Signature base = base_signature(t.base);
  def.identities = base_identities(t.base, conv);
  if (t.has_omegas()) {
    def.signature = base.with_unary({ops::omega0, ops::omega1});
    auto extra = omega_identities(base);
    def.identities.insert(def.identities.end(), extra.begin(), extra.end());
  } else {
    def.signature = base;
  }
  return def;
}

Report check_variety_as(const MciObject& obj, const std::string& tag, LeibnizConvention conv) {
  VarietyDef def = variety_def(tag, conv);
  if (!(obj.signature() == def.signature))
    fail(ErrorKind::signature_mismatch, "object signature does not match variety '" + def.name + "'");
  Report r("validate");
  r.details()["variety"] = def.name;
  Report s = validate_structure(obj);
  r.merge(s, "structure.");
  if (s.failed()) return r;
  for (const auto& id : def.identities) {
    IdentityResult res = check_identity(obj, id);
    r.add("identity." + id.name, res.status, res.witness);
  }
  if (VarietyTag::parse(tag).level == VarietyTag::Level::cat1) r.merge(cat1_kernel_check(obj), "cat1.");
  return r;
}

Report check_variety(const MciObject& obj, LeibnizConvention conv) {
  return check_variety_as(obj, obj.variety(), conv);
}

Report cat1_kernel_check(const MciObject& obj) {
  Report r("cat1-kernel");
  const Signature& sig = obj.signature();
  const std::size_t w0 = sig.require_unary(ops::omega0);
  const std::size_t w1 = sig.require_unary(ops::omega1);
  if (obj.is_table()) {
    const TableObject& t = obj.table();
    std::vector<std::uint32_t> k0, k1;
    for (std::uint32_t x = 0; x < t.size; ++x) {
      if (t.apply(w0, x) == t.zero) k0.push_back(x);
      if (t.apply(w1, x) == t.zero) k1.push_back(x);
    }
    const std::uint64_t pairs = std::uint64_t{k0.size()} * k1.size();
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      std::string name = "kernel-star." + sig.binary()[op].name;
      if (!within_cap(r, name, pairs)) continue;
      json wit;
      for (auto x : k0) {
        for (auto y : k1)
          if (t.star(op, x, y) != t.zero) {
            wit = mismatch_json(obj, {{"x", x}, {"y", y}}, t.star(op, x, y), t.zero);
            break;
          }
        if (!wit.is_null()) break;
      }
      r.add_check(name, wit);
    }
    if (within_cap(r, "kernel-commute", pairs)) {
      json wit;
      for (auto x : k0) {
        for (auto y : k1)
          if (t.commutator(x, y) != t.zero) {
            wit = mismatch_json(obj, {{"x", x}, {"y", y}}, t.commutator(x, y), t.zero);
            break;
          }
        if (!wit.is_null()) break;
      }
      r.add_check("kernel-commute", wit);
    }
    return r;
  }
  const LinearObject& l = obj.linear();
  Matrix k0 = left_kernel(l.unary[w0]);
  Matrix k1 = left_kernel(l.unary[w1]);
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    json wit;
    for (std::size_t i = 0; i < k0.rows() && wit.is_null(); ++i)
      for (std::size_t j = 0; j < k1.rows(); ++j) {
        Vector x = k0.row(i), y = k1.row(j);
        Vector p = l.multiply(op, x, y);
        if (!mci::is_zero(p)) {
          wit = mismatch_json(obj, {{"x", x}, {"y", y}}, p, l.zero_vector());
          break;
        }
      }
    r.add_check("kernel-star." + sig.binary()[op].name, wit);
  }
  r.add_by_construction("kernel-commute");
  return r;
}

std::pair<ObjectPtr, Report> base_change_checked(const MciObject& obj, std::uint32_t p, LeibnizConvention conv) {
  ObjectPtr out = base_change(obj, p);
  Report r = check_variety(*out, conv);
  r.set_command("base-change");
  return {out, r};
}

}  // namespace mci
