#include "locmouf/perm.hpp"

#include <algorithm>

#include "locmouf/error.hpp"

namespace locmouf {

Perm Perm::identity(std::size_t n) {
  std::vector<Index> t(n);
  for (Index i = 0; i < n; ++i) t[i] = i;
  return Perm(std::move(t));
}

bool Perm::is_bijection(const std::vector<Index>& table) {
  std::vector<bool> hit(table.size(), false);
  for (Index v : table) {
    if (v >= table.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Perm Perm::from_table(std::vector<Index> table) {
  if (!is_bijection(table)) throw Error("permutation table is not a bijection");
  return Perm(std::move(table));
}

Perm Perm::operator*(const Perm& b) const {
  std::vector<Index> t(size());
  for (std::size_t i = 0; i < size(); ++i) t[i] = b.table_[table_[i]];
  return Perm(std::move(t));
}

Perm Perm::inverse() const {
  std::vector<Index> t(size());
  for (Index i = 0; i < size(); ++i) t[table_[i]] = i;
  return Perm(std::move(t));
}

Perm Perm::conjugate(const Perm& h) const {
  // x -> x h^-1 g h, i.e. (x h) -> (x g) h.
  std::vector<Index> t(size());
  for (Index i = 0; i < size(); ++i) t[h.table_[i]] = h.table_[table_[i]];
  return Perm(std::move(t));
}

Perm Perm::pow(long long n) const {
  Perm base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Perm result = identity(size());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (Index i = 0; i < size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Index v : p.table()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Perm> sorted_set(std::vector<Perm> perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}

}  // namespace locmouf
