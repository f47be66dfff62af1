#include "locmouf/abelian_group.hpp"

#include "locmouf/error.hpp"

namespace locmouf {

AbelianGroup::AbelianGroup(std::vector<std::string> labels, std::vector<Elem> add_table, Elem zero)
    : labels_(std::move(labels)), add_(std::move(add_table)), zero_(zero) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error("abelian group must be non-empty");
  if (add_.size() != n * n) throw Error("addition table has the wrong size");
  if (zero_ >= n) throw Error("zero index out of range");
  for (Elem v : add_)
    if (v >= n) throw Error("addition table entry out of range");
  neg_.assign(n, zero_);
  for (Elem a = 0; a < n; ++a) {
    if (add(zero_, a) != a || add(a, zero_) != a)
      throw Error("zero is not an identity for element " + labels_[a]);
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error("element " + labels_[a] + " has no additive inverse");
  }
}

AbelianGroup AbelianGroup::additive_group(const Ring& ring) {
  const std::size_t n = ring.size();
  std::vector<std::string> labels(n);
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = ring.to_string(a);
    for (Elem b = 0; b < n; ++b) table[a * n + b] = ring.add(a, b);
  }
  return AbelianGroup(std::move(labels), std::move(table), ring.zero());
}

Elem AbelianGroup::times(Elem a, long long n) const {
  Elem base = n < 0 ? neg(a) : a;
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  Elem acc = zero_;
  while (m > 0) {
    if (m & 1u) acc = add(acc, base);
    base = add(base, base);
    m >>= 1u;
  }
  return acc;
}

std::optional<Elem> AbelianGroup::find(std::string_view label) const {
  for (Elem a = 0; a < size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::vector<Elem> AbelianGroup::divisors(Elem g, long long n) const {
  std::vector<Elem> out;
  for (Elem h = 0; h < size(); ++h)
    if (times(h, n) == g) out.push_back(h);
  return out;
}

bool AbelianGroup::uniquely_divisible(long long n) const {
  std::vector<bool> hit(size(), false);
  for (Elem h = 0; h < size(); ++h) {
    Elem g = times(h, n);
    if (hit[g]) return false;
    hit[g] = true;
  }
  return true;
}

Elem AbelianGroup::divide(Elem g, long long n) const {
  auto d = divisors(g, n);
  if (d.empty()) throw NoSolution("no h with " + std::to_string(n) + "h = " + label(g));
  if (d.size() > 1) throw NotUnique(std::to_string(n) + "h = " + label(g) + " has several solutions");
  return d.front();
}

VerifyReport AbelianGroup::check_group_law() const {
  VerifyReport report;
  Sweep comm("commutative");
  Sweep assoc("associative");
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      comm.test(add(a, b) == add(b, a), [&] { return Witness{{"a", label(a)}, {"b", label(b)}}; });
      for (Elem c = 0; c < size(); ++c)
        assoc.test(add(add(a, b), c) == add(a, add(b, c)),
                   [&] { return Witness{{"a", label(a)}, {"b", label(b)}, {"c", label(c)}}; });
    }
  }
  report.add(comm.finish());
  report.add(assoc.finish());
  return report;
}

}  // namespace locmouf
