#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mci/actions.hpp"
#include "mci/corpus.hpp"
#include "mci/extensions.hpp"
#include "mci/xmodcat1.hpp"
#include "oracle.hpp"

namespace support {

using mci::ObjectPtr;

/// Structure constants of a linear object over F_p, all binary ops in
/// signature order.
oracle::FpConstants constants_of(const mci::LinearObject& l);
/// Raw tables: copied for table objects, realized by the oracle for linear
/// objects over F_p.
oracle::Alg alg_of(const mci::MciObject& obj);
oracle::Xm xm_of(const mci::PreCrossedModule& x);
/// Membership vector in the oracle's id space.
oracle::Set set_of(const mci::Subobject& s);

/// Linear object over F_p from oracle constants (op 0 is the bracket).
ObjectPtr object_from_spec(const oracle::FpConstants& s, const std::string& variety, const std::string& name);

/// Sparse random bracket over F_p, kept only if it satisfies the identities
/// of `variety` ("lie" or "leibniz").
struct RandomObject {
  oracle::FpConstants consts;
  ObjectPtr object;
  int attempts = 0;
};
RandomObject random_member(std::mt19937& rng, int p, int dim, const std::string& variety);

/// Enumerable action instances: table objects of at most 64 elements and
/// F_3 linear objects of dimension at most 4.
struct ActionInstance {
  std::string name;
  mci::ActionData act;
};
std::vector<ActionInstance> action_instances();

/// One primary constant (table cell or structure-constant coordinate) of
/// the action changed to a different value; partner data follows, and a
/// self-partnered op changes on both sides.
mci::ActionData perturb_action(const mci::ActionData& act, std::mt19937& rng);

/// One primary structure constant (linear) or op-table cell (table) of an
/// object changed to a different value.
ObjectPtr perturb_object(const ObjectPtr& obj, std::mt19937& rng);

/// Linear objects of the corpus over F_3 (base-changed when over Q).
std::vector<std::pair<std::string, ObjectPtr>> f3_objects();
/// Linear crossed modules of the corpus over F_3.
std::vector<std::pair<std::string, mci::PreCrossedModule>> f3_xmods();

}  // namespace support
