#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace locmouf {

/// A violating tuple, as (variable name, serialized element) pairs.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Check {
  std::string name;
  bool pass = true;
  /// Non-required checks are informational and never make a report fail.
  bool required = true;
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  Witness witness;  // first failing tuple in canonical enumeration order
  std::string note;
};

class VerifyReport {
 public:
  Check& add(Check c);
  Check& add(std::string name, bool pass, std::string note = {});
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const VerifyReport& other, const std::string& prefix = {});

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  /// True when the named check exists and passed.
  bool passed(const std::string& name) const;
  /// Name of the first failing required check, or empty.
  std::string first_failure() const;

 private:
  std::vector<Check> checks_;
};

/// Accumulates one identity over a sweep: counts evaluations and failures,
/// and keeps the first failing tuple.
class Sweep {
 public:
  explicit Sweep(std::string name) { check_.name = std::move(name); }

  /// Records one evaluation; `witness` is only invoked on the first failure.
  bool test(bool ok, const std::function<Witness()>& witness) {
    ++check_.evaluated;
    if (!ok) {
      if (check_.failures == 0) check_.witness = witness();
      ++check_.failures;
      check_.pass = false;
    }
    return ok;
  }
  /// Records an evaluation that could not be carried out (e.g. an
  /// intermediate value left its domain) as a failure.
  void fail(const std::string& why, Witness witness) {
    ++check_.evaluated;
    if (check_.failures == 0) {
      check_.witness = std::move(witness);
      check_.note = why;
    }
    ++check_.failures;
    check_.pass = false;
  }
  void note(std::string n) { check_.note = std::move(n); }
  Check& check() { return check_; }
  Check finish() { return std::move(check_); }

 private:
  Check check_;
};

}  // namespace locmouf
