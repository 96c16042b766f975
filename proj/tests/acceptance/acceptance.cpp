// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "mci/corpus.hpp"
#include "mci/errors.hpp"
#include "support.hpp"

using namespace mci;

namespace {

constexpr double kRoundtripBudget = 5.0;   // seconds, criterion 1
constexpr double kActionBudget = 60.0;     // seconds, criterion 2
constexpr double kCentralityBudget = 10.0; // seconds, criterion 5
constexpr int kPerturbationsPerInstance = 100;
constexpr int kRandomObjects = 500;
constexpr int kMaxRandomDim = 4;
constexpr std::size_t kMaxTableIdeals = 24;
constexpr std::size_t kMaxLinearIdealDim = 3;
constexpr std::size_t kMinExtensions = 10;
constexpr std::size_t kMinXmods = 6;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void expect(bool cond, const std::string& what) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    failure = what;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void run(int n, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.failure = std::string("exception: ") + e.what();
  }
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  %s%s%s\n", n, o.ok ? "PASS" : "FAIL", o.detail.c_str(),
              o.failure.empty() ? "" : "  first failure: ", o.failure.c_str());
  std::fflush(stdout);
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

std::vector<std::pair<std::string, ObjectPtr>> all_objects() {
  auto out = corpus::objects();
  for (auto& [n, o] : support::f3_objects()) out.emplace_back(n, o);
  return out;
}

std::vector<std::pair<std::string, PreCrossedModule>> all_xmods() {
  auto out = corpus::xmods();
  for (auto& [n, x] : support::f3_xmods()) out.emplace_back(n, x);
  return out;
}

Element element_of(const MciObject& obj, oracle::Id id) {
  if (obj.is_table()) return id;
  const auto consts = support::constants_of(obj.linear());
  Vector v;
  for (int c : oracle::decode(consts, id)) v.push_back(Scalar::from_int(*obj.field(), c));
  return v;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto xs = corpus::xmods();
  const auto ts = corpus::cat1s();
  o.expect(xs.size() >= kMinXmods, "fewer than 6 corpus crossed modules");
  for (const auto& [name, x] : xs) o.expect(roundtrip_check(x).passed(), "roundtrip " + name);
  for (const auto& [name, t] : ts) o.expect(roundtrip_check_cat1(t).passed(), "cat1 roundtrip " + name);
  const double s = seconds_since(t0);
  o.expect(s < kRoundtripBudget, "runtime " + fmt(s) + " s");
  o.detail = std::to_string(xs.size()) + " xmods, " + std::to_string(ts.size()) + " cat1 objects, " + fmt(s) +
             " s (limit " + fmt(kRoundtripBudget) + " s)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937 rng(20240601);
  std::size_t instances = 0, checked = 0, derived = 0, variety_mismatch = 0;
  for (const auto& inst : support::action_instances()) {
    ++instances;
    auto compare = [&](const ActionData& act, const std::string& label) {
      const bool conditions = check_action_conditions(act).passed();
      const bool semidirect = is_derived_action(act, Ambient::groups_with_operations).passed();
      ++checked;
      if (semidirect) ++derived;
      o.expect(conditions == semidirect, label + (conditions ? " conditions pass, semidirect fails" : " conditions fail, semidirect passes"));
      if (is_derived_action(act).passed() != semidirect) ++variety_mismatch;
    };
    compare(inst.act, inst.name);
    for (int i = 0; i < kPerturbationsPerInstance; ++i)
      compare(support::perturb_action(inst.act, rng), inst.name + " perturbation " + std::to_string(i));
  }
  const double s = seconds_since(t0);
  o.expect(s < kActionBudget, "runtime " + fmt(s) + " s");
  o.detail = std::to_string(instances) + " instances, " + std::to_string(checked) + " actions (" +
             std::to_string(derived) + " derived), " + fmt(s) + " s (limit " + fmt(kActionBudget) +
             " s); variety-ambient verdict differs on " + std::to_string(variety_mismatch);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t objects = 0, singular = 0;
  for (const auto& [name, A] : all_objects()) {
    ++objects;
    const bool z = center(A).is_whole(), k = commutator(A).is_zero();
    if (z) ++singular;
    o.expect(z == k, name);
  }
  std::mt19937 rng(31337);
  int attempts = 0;
  for (int i = 0; i < kRandomObjects; ++i) {
    const char* variety = i % 2 == 0 ? "lie" : "leibniz";
    const int dim = 1 + i % kMaxRandomDim;
    auto r = support::random_member(rng, 3, dim, variety);
    attempts += r.attempts;
    ++objects;
    const bool z = center(r.object).is_whole(), k = commutator(r.object).is_zero();
    if (z) ++singular;
    o.expect(z == k, std::string("random ") + variety + " #" + std::to_string(i));
  }
  o.detail = std::to_string(objects) + " objects (" + std::to_string(kRandomObjects) + " random, " +
             std::to_string(attempts) + " samples drawn), " + std::to_string(singular) + " singular";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t objects = 0, ideals = 0, singular_quotients = 0;
  for (const auto& [name, A] : all_objects()) {
    if (A->is_table() ? A->extent() > kMaxTableIdeals
                      : (!A->field() || A->field()->characteristic() != 3 || A->extent() > kMaxLinearIdealDim))
      continue;
    ++objects;
    const Ideal c = commutator(A);
    o.expect(is_singular(quotient(A, c).object), name + ": A/[A,A] not singular");
    for (const auto& I : enumerate_ideals(A)) {
      ++ideals;
      if (!is_singular(quotient(A, I).object)) continue;
      ++singular_quotients;
      o.expect(I.sub().contains(c.sub()), name + ": singular quotient by an ideal missing [A,A]");
    }
  }
  o.detail = std::to_string(objects) + " objects, " + std::to_string(ideals) + " ideals, " +
             std::to_string(singular_quotients) + " with singular quotient";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto exts = corpus::extensions();
  std::size_t central = 0;
  bool heis = false, sol = false;
  o.expect(exts.size() >= kMinExtensions, "fewer than 10 extensions");
  for (const auto& [name, e] : exts) {
    const bool c = is_central(e), jk = is_jk_central(e);
    if (c) ++central;
    if (name == "ext-heis3-center") heis = c;
    if (name == "ext-sol2-e2") sol = !c;
    o.expect(c == jk, name);
  }
  o.expect(heis, "heis3 center extension not central");
  o.expect(sol, "sol2 extension central");
  const double s = seconds_since(t0);
  o.expect(s < kCentralityBudget, "runtime " + fmt(s) + " s");
  o.detail = std::to_string(exts.size()) + " extensions (" + std::to_string(central) + " central), " + fmt(s) +
             " s (limit " + fmt(kCentralityBudget) + " s)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(6);
  std::size_t objects = 0, xmods = 0, comparisons = 0;
  for (const auto& [name, A] : support::f3_objects()) {
    ++objects;
    const oracle::Alg a = support::alg_of(*A);
    o.expect(support::set_of(center(A).sub()) == oracle::center(a), name + " center");
    o.expect(support::set_of(commutator(A).sub()) == oracle::commutator(a), name + " commutator");
    comparisons += 2;
    for (oracle::Id g = 0; g < a.n; g += 1 + a.n / 16) {
      o.expect(support::set_of(ideal_generated(A, {element_of(*A, g)}).sub()) == oracle::ideal_closure(a, {g}),
               name + " ideal_generated");
      ++comparisons;
    }
    for (int t = 0; t < 4; ++t) {
      const oracle::Id g = static_cast<oracle::Id>(rng() % a.n), h = static_cast<oracle::Id>(rng() % a.n);
      o.expect(support::set_of(ideal_generated(A, {element_of(*A, g), element_of(*A, h)}).sub()) ==
                   oracle::ideal_closure(a, {g, h}),
               name + " ideal_generated pair");
      ++comparisons;
    }
  }
  for (const auto& [name, x] : support::f3_xmods()) {
    ++xmods;
    const oracle::Xm ox = support::xm_of(x);
    const bool crossed = check_crossed(x).passed();
    const oracle::Pair z = oracle::xcenter_lists(ox, crossed), k = oracle::xcommutator(ox);
    XmodCenter c = xmod_center(x);
    XmodCommutator kc = xmod_commutator(x);
    o.expect(support::set_of(c.z1) == z.s1 && support::set_of(c.z0) == z.s0, name + " xmod_center");
    o.expect(support::set_of(kc.k1) == k.s1 && support::set_of(kc.k0) == k.s0, name + " xmod_commutator");
    comparisons += 2;
  }
  o.detail = std::to_string(objects) + " F3 objects, " + std::to_string(xmods) + " F3 xmods, " +
             std::to_string(comparisons) + " set comparisons";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto span = [](const ObjectPtr& h, std::initializer_list<std::size_t> b) {
    std::vector<Element> v;
    for (auto i : b) v.push_back(h->linear().basis_vector(i - 1));
    return Subobject::from_elements(h, v);
  };
  const ObjectPtr h = corpus::heis3(), s = corpus::sol2();
  o.expect(center(h).sub() == span(h, {3}) && center(h).extent() == 1, "center(heis3)");
  o.expect(commutator(h).sub() == span(h, {3}) && commutator(h).extent() == 1, "[heis3,heis3]");
  Singularization sg = singularization(h);
  bool zero = true;
  for (const auto& op : sg.object->linear().products)
    for (const auto& v : op) zero = zero && is_zero(v);
  o.expect(sg.object->extent() == 2 && zero, "singularization(heis3)");
  o.expect(center(s).is_zero(), "center(sol2)");
  o.expect(commutator(s).sub() == span(s, {2}), "[sol2,sol2]");
  const ObjectPtr t = corpus::s3_cat1().with_omegas();
  const auto& labels = t->table().labels;
  const Ideal z = center(t), k = commutator(t);
  o.expect(z.extent() == 1 && labels[z.sub().ids()[0]] == "e", "center(S3,id,id)");
  bool a3 = k.extent() == 3;
  for (auto id : k.sub().ids()) a3 = a3 && (labels[id] == "e" || labels[id] == "(123)" || labels[id] == "(132)");
  o.expect(a3, "[(S3,id,id),(S3,id,id)]");
  // the same values from the brute-force oracle
  const auto h3 = corpus::heis3(Field::prime(3)), s3 = corpus::sol2(Field::prime(3));
  o.expect(oracle::count(oracle::center(support::alg_of(*h3))) == 3, "oracle center(heis3)");
  o.expect(oracle::count(oracle::commutator(support::alg_of(*h3))) == 3, "oracle [heis3,heis3]");
  o.expect(oracle::count(oracle::center(support::alg_of(*s3))) == 1, "oracle center(sol2)");
  o.expect(oracle::count(oracle::center(support::alg_of(*t))) == 1, "oracle center(S3,id,id)");
  o.expect(oracle::count(oracle::commutator(support::alg_of(*t))) == 3, "oracle commutator(S3,id,id)");
  o.detail = "heis3, sol2, (S3,id,id) desk values";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t xmods = 0, literal_mismatch = 0;
  for (const auto& [name, x] : all_xmods()) {
    ++xmods;
    const bool crossed = check_crossed(x).passed();
    XmodCenter tr = xmod_center_transport(x);
    XmodCenter rev = xmod_center_predicate(x, crossed, ActionOrder::reversed);
    XmodCenter prt = xmod_center_predicate(x, crossed, ActionOrder::literal);
    o.expect(rev.z1 == tr.z1 && rev.z0 == tr.z0, name + " reversed reading vs transport");
    o.expect(prt.z1 == tr.z1 && prt.z0 == tr.z0, name + " literal reading vs transport");
    o.expect(rev.z1 == prt.z1 && rev.z0 == prt.z0, name + " readings differ");
    XmodCenter full = xmod_center(x);
    o.expect(full.report.passed(), name + " xmod_center report");
    if (!semidirect_center_literal(x).passed()) ++literal_mismatch;
  }
  o.detail = std::to_string(xmods) + " xmods, both action-order readings equal the transport; literal semidirect "
             "predicate (informational) differs on " + std::to_string(literal_mismatch);
  return o;
}

}  // namespace

int main() {
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  return failures == 0 ? 0 : 1;
}
