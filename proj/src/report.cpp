#include "locmouf/report.hpp"

#include <algorithm>

namespace locmouf {

Check& VerifyReport::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& VerifyReport::add(std::string name, bool pass, std::string note) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.evaluated = 1;
  c.failures = pass ? 0 : 1;
  c.note = std::move(note);
  return add(std::move(c));
}

void VerifyReport::merge(const VerifyReport& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.pass || !c.required; });
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerifyReport::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->pass;
}

std::string VerifyReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass && c.required) return c.name;
  return {};
}

}  // namespace locmouf
