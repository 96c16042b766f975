#include "mci/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mci/errors.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  fail(ErrorKind::invalid_input, where + ": " + msg);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, "missing member '" + key + "'");
  return j.at(key);
}

std::size_t as_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected an integer or a string \"a/b\"");
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Vector vector_from_json(const Field& f, std::size_t n, const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where, "expected a list of " + std::to_string(n) + " scalars");
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(f, j[i], where + "/" + std::to_string(i)));
  return v;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols, const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(f, cols, j[r], where + "/" + std::to_string(r)));
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Field field_from_json(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp")) {
    std::size_t p = as_size(j.at("Fp"), where + "/Fp");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      fail(e.kind(), where + ": " + e.what());
    }
  }
  bad(where, "expected \"Q\" or {\"Fp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Signature signature_for(const json& doc, const std::string& variety, const std::string& where) {
  if (!doc.contains("signature")) {
    VarietyTag t = VarietyTag::parse(variety);
    if (!is_builtin_base(t.base)) bad(where, "variety '" + variety + "' needs an explicit signature");
    Signature s = base_signature(t.base);
    return t.has_omegas() ? s.with_unary({ops::omega0, ops::omega1}) : s;
  }
  const json& sj = doc.at("signature");
  std::vector<BinaryOp> bin;
  std::vector<std::string> un;
  if (sj.contains("binary")) {
    for (const auto& b : sj.at("binary")) {
      if (b.is_string()) {
        bin.push_back({b.get<std::string>(), ops::partner_of(b.get<std::string>())});
      } else {
        std::string name = member(b, "name", where + "/signature").get<std::string>();
        std::string partner = b.value("partner", ops::partner_of(name));
        bin.push_back({name, partner});
      }
    }
  }
  if (sj.contains("unary"))
    for (const auto& u : sj.at("unary")) un.push_back(u.get<std::string>());
  try {
    return Signature::closed(std::move(bin), std::move(un));
  } catch (const Error& e) {
    bad(where + "/signature", e.what());
  }
}

json signature_to_json(const Signature& s) {
  json bin = json::array();
  for (const auto& b : s.binary())
    if (!b.derived) bin.push_back(json{{"name", b.name}, {"partner", b.partner}});
  return json{{"binary", bin}, {"unary", s.unary()}};
}

std::vector<Id> id_table(const json& j, std::size_t rows, std::size_t cols, std::size_t range, const std::string& where) {
  std::vector<Id> out(rows * cols);
  if (!j.is_array() || j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string w = where + "/" + std::to_string(r);
    if (cols == 1 && !row.is_array()) {
      out[r] = static_cast<Id>(as_size(row, w));
      if (out[r] >= range) bad(w, "id out of range");
      continue;
    }
    if (!row.is_array() || row.size() != cols) bad(w, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      out[r * cols + c] = static_cast<Id>(as_size(row[c], w + "/" + std::to_string(c)));
      if (out[r * cols + c] >= range) bad(w + "/" + std::to_string(c), "id out of range");
    }
  }
  return out;
}

json id_table_to_json(const std::vector<Id>& t, std::size_t rows, std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(t[r * cols + c]);
    out.push_back(row);
  }
  return out;
}

std::string error_position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::invalid_input, path.string() + ":" + error_position(text, e.byte == 0 ? 0 : e.byte - 1) +
                                       ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::invalid_input, path.string() + ": cannot write file");
  out << j.dump(2) << "\n";
}

JsonSource JsonSource::load(const std::filesystem::path& path) {
  return {read_json_file(path), path.parent_path(), path.string()};
}

JsonSource JsonSource::child(const std::string& key) const {
  const json& j = member(doc, key, where);
  if (j.is_string()) return load(base_dir / j.get<std::string>());
  return {j, base_dir, where + "/" + key};
}

ObjectPtr object_from_json(const JsonSource& src) {
  const json& d = src.doc;
  const std::string& w = src.where;
  if (!d.is_object()) bad(w, "expected an object document");
  const std::string backend = member(d, "backend", w).get<std::string>();
  const std::string variety = member(d, "variety", w).get<std::string>();
  const std::string name = d.value("name", std::string{});
  const Signature sig = signature_for(d, variety, w);
  const std::size_t n = as_size(member(d, "dim", w), w + "/dim");
  const json ops = d.value("ops", json::object());
  const json unary = d.value("unary", json::object());
  for (const auto& [k, v] : ops.items())
    if (!sig.binary_index(k)) bad(w + "/ops/" + k, "operation not in the signature");
  for (const auto& [k, v] : unary.items())
    if (!sig.unary_index(k)) bad(w + "/unary/" + k, "operation not in the signature");

  if (backend == "table") {
    if (n == 0) bad(w + "/dim", "a table object has at least one element");
    if (n > kMaxTableCarrier) bad(w + "/dim", "carrier exceeds " + std::to_string(kMaxTableCarrier));
    TableObject t;
    t.signature = sig;
    t.size = static_cast<Id>(n);
    t.zero = static_cast<Id>(as_size(d.value("zero", json(0)), w + "/zero"));
    if (t.zero >= n) bad(w + "/zero", "id out of range");
    t.add_table = id_table(member(d, "add", w), n, n, n, w + "/add");
    if (d.contains("labels")) t.labels = d.at("labels").get<std::vector<std::string>>();
    t.complete_negation();
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      const auto& b = sig.binary()[op];
      if (ops.contains(b.name))
        t.binary.push_back(id_table(ops.at(b.name), n, n, n, w + "/ops/" + b.name));
      else if (b.derived)
        t.binary.emplace_back(n * n, t.zero);
      else
        bad(w + "/ops", "missing table for '" + b.name + "'");
    }
    for (const auto& u : sig.unary()) {
      if (!unary.contains(u)) bad(w + "/unary", "missing table for '" + u + "'");
      t.unary.push_back(id_table(unary.at(u), n, 1, n, w + "/unary/" + u));
    }
    t.complete_partners();
    return make_object(std::move(t), variety, name);
  }
  if (backend != "linear") bad(w + "/backend", "expected \"linear\" or \"table\"");
  const Field f = field_from_json(member(d, "field", w), w + "/field");
  LinearObject l = LinearObject::zeros(sig, f, n);
  if (d.contains("basis")) {
    l.basis_labels = d.at("basis").get<std::vector<std::string>>();
    if (l.basis_labels.size() != n) bad(w + "/basis", "expected " + std::to_string(n) + " labels");
  }
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    const auto& b = sig.binary()[op];
    if (!ops.contains(b.name)) {
      if (!b.derived) bad(w + "/ops", "missing tensor for '" + b.name + "'");
      continue;
    }
    const json& t = ops.at(b.name);
    const std::string wt = w + "/ops/" + b.name;
    if (!t.is_array() || t.size() != n) bad(wt, "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (!t[i].is_array() || t[i].size() != n) bad(wt + "/" + std::to_string(i), "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        l.products[op][i * n + j] =
            vector_from_json(f, n, t[i][j], wt + "/" + std::to_string(i) + "/" + std::to_string(j));
    }
  }
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    const std::string& un = sig.unary()[u];
    if (!unary.contains(un)) bad(w + "/unary", "missing matrix for '" + un + "'");
    l.unary[u] = matrix_from_json(f, n, n, unary.at(un), w + "/unary/" + un);
  }
  l.complete_partners();
  return make_object(std::move(l), variety, name);
}

json object_to_json(const MciObject& obj) {
  json j;
  j["backend"] = obj.is_table() ? "table" : "linear";
  if (!obj.name().empty()) j["name"] = obj.name();
  j["variety"] = obj.variety();
  j["signature"] = signature_to_json(obj.signature());
  j["dim"] = obj.extent();
  json ops = json::object(), unary = json::object();
  const Signature& sig = obj.signature();
  if (obj.is_table()) {
    const TableObject& t = obj.table();
    j["zero"] = t.zero;
    if (!t.labels.empty()) j["labels"] = t.labels;
    j["add"] = id_table_to_json(t.add_table, t.size, t.size);
    for (std::size_t op = 0; op < sig.binary().size(); ++op)
      if (!sig.binary()[op].derived) ops[sig.binary()[op].name] = id_table_to_json(t.binary[op], t.size, t.size);
    for (std::size_t u = 0; u < sig.unary().size(); ++u) unary[sig.unary()[u]] = t.unary[u];
  } else {
    const LinearObject& l = obj.linear();
    j["field"] = field_to_json(l.field);
    if (!l.basis_labels.empty()) j["basis"] = l.basis_labels;
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      if (sig.binary()[op].derived) continue;
      json t = json::array();
      for (std::size_t i = 0; i < l.dim; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < l.dim; ++k) row.push_back(vector_to_json(l.product(op, i, k)));
        t.push_back(row);
      }
      ops[sig.binary()[op].name] = t;
    }
    for (std::size_t u = 0; u < sig.unary().size(); ++u) unary[sig.unary()[u]] = matrix_to_json(l.unary[u]);
  }
  j["ops"] = ops;
  j["unary"] = unary;
  return j;
}

Element element_from_json(const MciObject& obj, const json& j, const std::string& where) {
  if (obj.is_table()) {
    if (j.is_string()) {
      const auto& labels = obj.table().labels;
      for (Id i = 0; i < labels.size(); ++i)
        if (labels[i] == j.get<std::string>()) return i;
      bad(where, "unknown element label '" + j.get<std::string>() + "'");
    }
    std::size_t id = as_size(j, where);
    if (id >= obj.extent()) bad(where, "element id out of range");
    return static_cast<Id>(id);
  }
  return vector_from_json(*obj.field(), obj.extent(), j, where);
}

json element_to_json(const MciObject& obj, const Element& e) {
  if (obj.is_table()) return as_id(e);
  return vector_to_json(as_vector(e));
}

Morphism morphism_from_json(const JsonSource& src, ObjectPtr source, ObjectPtr target) {
  const json& d = src.doc;
  const std::string& w = src.where;
  if (source->is_table() != target->is_table()) bad(w, "source and target use different backends");
  if (source->is_table()) {
    const json& m = member(d, "map", w);
    if (!m.is_array() || m.size() != source->extent())
      bad(w + "/map", "expected " + std::to_string(source->extent()) + " images");
    std::vector<Id> map;
    for (std::size_t i = 0; i < m.size(); ++i)
      map.push_back(as_id(element_from_json(*target, m[i], w + "/map/" + std::to_string(i))));
    return Morphism(std::move(source), std::move(target), std::move(map));
  }
  if (!(source->field() == target->field())) bad(w, "source and target fields differ");
  Matrix m = matrix_from_json(*source->field(), source->extent(), target->extent(), member(d, "matrix", w), w + "/matrix");
  return Morphism(std::move(source), std::move(target), std::move(m));
}

json morphism_to_json(const Morphism& f) {
  if (f.is_table()) return json{{"map", f.map()}};
  return json{{"matrix", matrix_to_json(f.matrix())}};
}

ActionData action_from_json(const JsonSource& src, ObjectPtr acting, ObjectPtr acted) {
  const json& d = src.doc;
  const std::string& w = src.where;
  if (!d.is_object()) bad(w, "expected an action document");
  ActionData act = ActionData::trivial(acting, acted);
  const Signature& sig = acted->signature();
  const std::size_t na = acted->extent(), nb = acting->extent();
  const json left = d.value("left", json::object()), right = d.value("right", json::object());
  for (const auto& [k, v] : left.items())
    if (!sig.binary_index(k)) bad(w + "/left/" + k, "operation not in the signature");
  for (const auto& [k, v] : right.items())
    if (!sig.binary_index(k)) bad(w + "/right/" + k, "operation not in the signature");
  if (act.is_table()) {
    if (d.contains("dot")) act.dot = id_table(d.at("dot"), nb, na, na, w + "/dot");
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      const std::string& nm = sig.binary()[op].name;
      if (left.contains(nm)) act.left[op] = id_table(left.at(nm), nb, na, na, w + "/left/" + nm);
      if (right.contains(nm)) act.right[op] = id_table(right.at(nm), na, nb, na, w + "/right/" + nm);
    }
  } else {
    if (d.contains("dot")) bad(w + "/dot", "linear actions have the trivial dot action");
    const Field f = *acted->field();
    auto read = [&](const json& t, std::size_t rows, std::size_t cols, std::vector<Vector>& out, const std::string& wt) {
      if (!t.is_array() || t.size() != rows) bad(wt, "expected " + std::to_string(rows) + " rows");
      for (std::size_t i = 0; i < rows; ++i) {
        if (!t[i].is_array() || t[i].size() != cols)
          bad(wt + "/" + std::to_string(i), "expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j)
          out[i * cols + j] = vector_from_json(f, na, t[i][j], wt + "/" + std::to_string(i) + "/" + std::to_string(j));
      }
    };
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      const std::string& nm = sig.binary()[op].name;
      if (left.contains(nm)) read(left.at(nm), nb, na, act.left_lin[op], w + "/left/" + nm);
      if (right.contains(nm)) read(right.at(nm), na, nb, act.right_lin[op], w + "/right/" + nm);
    }
  }
  act.complete_partners();
  return act;
}

json action_to_json(const ActionData& act) {
  const Signature& sig = act.acted->signature();
  const std::size_t na = act.acted->extent(), nb = act.acting->extent();
  json left = json::object(), right = json::object(), j;
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    if (sig.binary()[op].derived) continue;
    const std::string& nm = sig.binary()[op].name;
    if (act.is_table()) {
      left[nm] = id_table_to_json(act.left[op], nb, na);
      right[nm] = id_table_to_json(act.right[op], na, nb);
    } else {
      json l = json::array(), r = json::array();
      for (std::size_t i = 0; i < nb; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < na; ++k) row.push_back(vector_to_json(act.left_lin[op][i * na + k]));
        l.push_back(row);
      }
      for (std::size_t i = 0; i < na; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < nb; ++k) row.push_back(vector_to_json(act.right_lin[op][i * nb + k]));
        r.push_back(row);
      }
      left[nm] = l;
      right[nm] = r;
    }
  }
  if (act.is_table()) j["dot"] = id_table_to_json(act.dot, nb, na);
  j["left"] = left;
  j["right"] = right;
  return j;
}

PreCrossedModule xmod_from_json(const JsonSource& src) {
  ObjectPtr c1 = object_from_json(src.child("c1"));
  ObjectPtr c0 = object_from_json(src.child("c0"));
  Morphism d = morphism_from_json(src.child("boundary"), c1, c0);
  ActionData act = src.has("action") ? action_from_json(src.child("action"), c0, c1) : ActionData::trivial(c0, c1);
  return {c1, c0, std::move(d), std::move(act)};
}

json xmod_to_json(const PreCrossedModule& x) {
  return json{{"c1", object_to_json(*x.c1)},
              {"c0", object_to_json(*x.c0)},
              {"boundary", morphism_to_json(x.boundary)},
              {"action", action_to_json(x.action)}};
}

Cat1Object cat1_from_json(const JsonSource& src) {
  if (!src.has("object")) return Cat1Object::from_tagged(object_from_json(src));
  ObjectPtr c = object_from_json(src.child("object"));
  Morphism w0 = morphism_from_json(src.child("omega0"), c, c);
  Morphism w1 = morphism_from_json(src.child("omega1"), c, c);
  return {c, std::move(w0), std::move(w1)};
}

json cat1_to_json(const Cat1Object& t) {
  return json{{"object", object_to_json(*t.object)},
              {"omega0", morphism_to_json(t.omega0)},
              {"omega1", morphism_to_json(t.omega1)}};
}

std::vector<Element> elements_from_json(const JsonSource& src, const ObjectPtr& parent) {
  const json& d = src.doc;
  const std::string& w = src.where;
  const std::string key = d.is_object() && d.contains("basis") ? "basis" : "elements";
  const json& list = member(d, key, w);
  if (!list.is_array()) bad(w + "/" + key, "expected a list");
  std::vector<Element> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(element_from_json(*parent, list[i], w + "/" + key + "/" + std::to_string(i)));
  return out;
}

Subobject subobject_from_json(const JsonSource& src, const ObjectPtr& parent) {
  return Subobject::from_elements(parent, elements_from_json(src, parent));
}

json subobject_to_json(const Subobject& s) {
  json list = json::array();
  for (const auto& e : s.spanning_elements()) list.push_back(element_to_json(*s.parent(), e));
  return json{{s.is_table() ? "elements" : "basis", list}};
}

Extension extension_from_json(const JsonSource& src) {
  ObjectPtr a = object_from_json(src.child("a"));
  ObjectPtr b = object_from_json(src.child("b"));
  ObjectPtr c = object_from_json(src.child("c"));
  Morphism iota = morphism_from_json(src.child("iota"), a, b);
  Morphism pi = morphism_from_json(src.child("pi"), b, c);
  return {a, b, c, std::move(iota), std::move(pi)};
}

json extension_to_json(const Extension& e) {
  return json{{"a", object_to_json(*e.a)},
              {"b", object_to_json(*e.b)},
              {"c", object_to_json(*e.c)},
              {"iota", morphism_to_json(e.iota)},
              {"pi", morphism_to_json(e.pi)}};
}

XmodExtension xmod_extension_from_json(const JsonSource& src) {
  PreCrossedModule a = xmod_from_json(src.child("a"));
  PreCrossedModule b = xmod_from_json(src.child("b"));
  PreCrossedModule c = xmod_from_json(src.child("c"));
  Morphism i1 = morphism_from_json(src.child("iota1"), a.c1, b.c1);
  Morphism i0 = morphism_from_json(src.child("iota0"), a.c0, b.c0);
  Morphism p1 = morphism_from_json(src.child("pi1"), b.c1, c.c1);
  Morphism p0 = morphism_from_json(src.child("pi0"), b.c0, c.c0);
  return {std::move(a), std::move(b), std::move(c), std::move(i1), std::move(i0), std::move(p1), std::move(p0)};
}

json xmod_extension_to_json(const XmodExtension& e) {
  return json{{"a", xmod_to_json(e.a)},
              {"b", xmod_to_json(e.b)},
              {"c", xmod_to_json(e.c)},
              {"iota1", morphism_to_json(e.iota1)},
              {"iota0", morphism_to_json(e.iota0)},
              {"pi1", morphism_to_json(e.pi1)},
              {"pi0", morphism_to_json(e.pi0)}};
}

HuqCandidate huq_candidate_from_json(const PreCrossedModule& h, const JsonSource& mu, const PreCrossedModule& x) {
  Morphism m1 = morphism_from_json(mu.child("mu1"), h.c1, x.c1);
  Morphism m0 = morphism_from_json(mu.child("mu0"), h.c0, x.c0);
  return {h, std::move(m1), std::move(m0)};
}

}  // namespace mci
