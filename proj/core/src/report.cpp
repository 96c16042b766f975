#include "mci/report.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>

namespace mci {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_checked: return "not-checked";
    case Status::holds_by_construction: return "holds-by-construction";
  }
  return "unknown";
}

void Report::add(std::string name, Status status, json witness) {
  entries_.push_back({std::move(name), status, std::move(witness)});
}

void Report::add_check(std::string name, json witness) {
  if (witness.is_null())
    add_pass(std::move(name));
  else
    add_fail(std::move(name), std::move(witness));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) entries_.push_back({prefix + e.name, e.status, e.witness});
}

Status Report::verdict() const {
  bool unchecked = false;
  for (const auto& e : entries_) {
    if (e.status == Status::fail) return Status::fail;
    if (e.status == Status::not_checked) unchecked = true;
  }
  return unchecked ? Status::not_checked : Status::pass;
}

const CheckEntry* Report::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CheckEntry* Report::first_failure() const {
  for (const auto& e : entries_)
    if (e.status == Status::fail) return &e;
  return nullptr;
}

json Report::to_json(bool include_timing) const {
  json j;
  j["command"] = command_;
  j["verdict"] = to_string(verdict());
  json checks = json::array();
  for (const auto& e : entries_) {
    json c{{"name", e.name}, {"status", to_string(e.status)}};
    if (!e.witness.is_null()) c["witness"] = e.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!details_.empty()) j["details"] = details_;
  if (include_timing) j["timing_ms"] = timing_ms_;
  return j;
}

namespace {

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("MCI_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::uint64_t enumeration_cap() { return cap_storage().load(); }

ScopedEnumerationCap::ScopedEnumerationCap(std::uint64_t cap) : previous_(cap_storage().exchange(cap)) {}
ScopedEnumerationCap::~ScopedEnumerationCap() { cap_storage().store(previous_); }

std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > std::numeric_limits<std::uint64_t>::max() / a)
      return std::numeric_limits<std::uint64_t>::max();
    r *= a;
  }
  return r;
}

}  // namespace mci
