#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mci/object.hpp"
#include "mci/report.hpp"
#include "mci/term.hpp"

namespace mci {

enum class LeibnizConvention { right, left };

LeibnizConvention parse_leibniz_convention(const std::string& text);

/// Operation names of the built-in varieties.
namespace ops {
inline const std::string bracket = "bracket";
inline const std::string mul = "mul";
inline const std::string dashv = "dashv";  // x -| y
inline const std::string vdash = "vdash";  // x |- y
inline const std::string omega0 = "omega0";
inline const std::string omega1 = "omega1";
std::string partner_of(const std::string& op);  // "<op>^op"
}  // namespace ops

/// "cat1:lie" -> {base "lie", level cat1}.
struct VarietyTag {
  enum class Level { plain, precat1, cat1 };
  std::string base;
  Level level = Level::plain;

  static VarietyTag parse(const std::string& tag);
  std::string to_string() const;
  bool has_omegas() const { return level != Level::plain; }
};

struct VarietyDef {
  std::string name;
  Signature signature;
  std::vector<Identity> identities;
};

/// Built-in bases: lie, leibniz, assoc, comm_assoc, dialgebra, group. Any
/// base can be wrapped as precat1:<base> or cat1:<base>.
bool is_builtin_base(const std::string& base);
Signature base_signature(const std::string& base);
VarietyDef variety_def(const std::string& tag, LeibnizConvention conv = LeibnizConvention::right);

/// Structural validation, then every identity of the tagged variety, then
/// (cat1 tags) the kernel condition. Raises signature-mismatch when the
/// object's signature differs from the variety's, unsupported-check for a
/// non-multilinear identity over Q.
Report check_variety(const MciObject& obj, LeibnizConvention conv = LeibnizConvention::right);

/// Same as check_variety but against an explicit tag (used to test an
/// object for membership in a variety other than its own).
Report check_variety_as(const MciObject& obj, const std::string& tag,
                        LeibnizConvention conv = LeibnizConvention::right);

/// x*y = 0 for every binary op and x+y-x-y = 0 for x in ker omega0 and
/// y in ker omega1.
Report cat1_kernel_check(const MciObject& obj);

/// Base change to F_p followed by a membership check of the result.
std::pair<ObjectPtr, Report> base_change_checked(const MciObject& obj, std::uint32_t p,
                                                 LeibnizConvention conv = LeibnizConvention::right);

}  // namespace mci
