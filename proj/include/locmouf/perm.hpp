#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace locmouf {

using Index = std::uint32_t;

/// A permutation of {0..n-1} stored as a dense image table, acting on the
/// right: x * (a * b) = (x * a) * b.
class Perm {
 public:
  Perm() = default;
  static Perm identity(std::size_t n);
  /// Throws Error when `table` is not a bijection of {0..n-1}.
  static Perm from_table(std::vector<Index> table);
  static bool is_bijection(const std::vector<Index>& table);

  std::size_t size() const { return table_.size(); }
  Index operator()(Index x) const { return table_[x]; }
  const std::vector<Index>& table() const { return table_; }

  /// First *this, then b.
  Perm operator*(const Perm& b) const;
  Perm inverse() const;
  /// h^-1 * this * h.
  Perm conjugate(const Perm& h) const;
  Perm pow(long long n) const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.table_ < b.table_; }

 private:
  explicit Perm(std::vector<Index> t) : table_(std::move(t)) {}
  std::vector<Index> table_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Sorted copy, for comparing permutation groups as sets.
std::vector<Perm> sorted_set(std::vector<Perm> perms);

}  // namespace locmouf
