#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mci/actions.hpp"
#include "mci/extensions.hpp"
#include "mci/xmodcat1.hpp"
#include "mci/xmodinv.hpp"

namespace mci {

/// Reads and parses a JSON file. Parse errors and missing files raise
/// invalid-input with the file name and line/column.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// Where sub-documents given as strings are looked up: a string in place of
/// an object (or morphism, ...) is a path relative to `base_dir`.
struct JsonSource {
  json doc;
  std::filesystem::path base_dir;
  std::string where;  // file name, for error messages

  static JsonSource load(const std::filesystem::path& path);
  /// Member `key`, following a string reference to another file.
  JsonSource child(const std::string& key) const;
  bool has(const std::string& key) const { return doc.is_object() && doc.contains(key); }
};

// Object files:
//   {"backend": "linear", "variety": "lie", "field": "Q" | {"Fp": p}, "dim": n,
//    "basis": [...], "signature": {"binary": [{"name", "partner"}], "unary": [...]},
//    "ops": {op: n x n x n}, "unary": {op: n x n}}
//   {"backend": "table", "variety": "group", "dim": n, "zero": 0, "labels": [...],
//    "add": n x n, "ops": {op: n x n}, "unary": {op: [n]}}
// ops[op][i][j] is the coordinate list of e_i op e_j; unary matrices hold the
// image of e_i in row i. Derived swap partners may be omitted. Scalars are
// strings "a/b" or integers.
ObjectPtr object_from_json(const JsonSource& src);
json object_to_json(const MciObject& obj);

/// Table elements are ids or labels; linear elements are coordinate lists.
Element element_from_json(const MciObject& obj, const json& j, const std::string& where);
json element_to_json(const MciObject& obj, const Element& e);

/// {"map": [...]} or {"matrix": [[...]]} (row i = image of e_i).
Morphism morphism_from_json(const JsonSource& src, ObjectPtr source, ObjectPtr target);
json morphism_to_json(const Morphism& f);

/// {"dot": |B| x |A|, "left": {op: |B| x |A|}, "right": {op: |A| x |B|}} for
/// tables; {"left": {op: dimB x dimA x dimA}, "right": {op: dimA x dimB x dimA}}
/// for linear objects. Absent ops are zero; absent dot is trivial.
ActionData action_from_json(const JsonSource& src, ObjectPtr acting, ObjectPtr acted);
json action_to_json(const ActionData& act);

/// {"c1", "c0", "boundary", "action"}.
PreCrossedModule xmod_from_json(const JsonSource& src);
json xmod_to_json(const PreCrossedModule& x);

/// {"object", "omega0", "omega1"}; a precat1/cat1-tagged object alone is also
/// accepted.
Cat1Object cat1_from_json(const JsonSource& src);
json cat1_to_json(const Cat1Object& t);

/// {"basis": [[...]]} or {"elements": [...]}.
std::vector<Element> elements_from_json(const JsonSource& src, const ObjectPtr& parent);
Subobject subobject_from_json(const JsonSource& src, const ObjectPtr& parent);
json subobject_to_json(const Subobject& s);

/// {"a", "b", "c", "iota", "pi"}.
Extension extension_from_json(const JsonSource& src);
json extension_to_json(const Extension& e);

/// {"a", "b", "c", "iota1", "iota0", "pi1", "pi0"} with crossed-module members.
XmodExtension xmod_extension_from_json(const JsonSource& src);
json xmod_extension_to_json(const XmodExtension& e);

/// {"mu1", "mu0"} into x from h.
HuqCandidate huq_candidate_from_json(const PreCrossedModule& h, const JsonSource& mu, const PreCrossedModule& x);

}  // namespace mci
