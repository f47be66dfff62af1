#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locmouf/report.hpp"
#include "locmouf/ring.hpp"

namespace locmouf {

/// A finite abelian group given by its addition table. Elements are indices
/// 0..size()-1; each carries a label used in reports.
class AbelianGroup {
 public:
  /// `add_table[a * n + b]` is a + b. Validates closure, the identity and
  /// inverses; the group law itself is checked by check_group_law().
  AbelianGroup(std::vector<std::string> labels, std::vector<Elem> add_table, Elem zero);

  static AbelianGroup additive_group(const Ring& ring);

  std::size_t size() const { return labels_.size(); }
  Elem zero() const { return zero_; }
  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * size() + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// n * a for any integer n.
  Elem times(Elem a, long long n) const;

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  /// Every h with n * h = g.
  std::vector<Elem> divisors(Elem g, long long n) const;
  /// True when multiplication by n is a bijection.
  bool uniquely_divisible(long long n) const;
  /// The unique h with n * h = g; throws NoSolution / NotUnique.
  Elem divide(Elem g, long long n) const;

  /// Exhaustive associativity and commutativity.
  VerifyReport check_group_law() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  Elem zero_;
};

}  // namespace locmouf
