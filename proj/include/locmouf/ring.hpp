#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace locmouf {

/// Index of an element in the deterministic enumeration of a finite structure.
using Elem = std::uint32_t;

enum class RingKind { zmod, poly };

/// Z/p^k (zmod) or F_p[t]/(t^k) (poly).
struct RingSpec {
  RingKind kind = RingKind::zmod;
  unsigned p = 2;
  unsigned k = 1;

  /// Parses `zmod:p:k` or `poly:p:k`. For zmod a prime power base is
  /// accepted and folded into the exponent (zmod:4:1 is zmod:2:2); any other
  /// composite p is left for the Ring constructor to reject.
  static RingSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

bool is_prime(unsigned n);

/// The desk-scale catalog used throughout the tests and the CLI.
std::vector<RingSpec> catalog_specs();

/// A finite commutative local ring. Elements are canonical indices in
/// [0, p^k): the residue itself for zmod, and sum c_i p^i over the
/// coefficients c_i of t^i for poly. Index 0 is zero, index 1 is one.
class Ring {
 public:
  static constexpr std::size_t kDefaultCap = 3125;

  explicit Ring(RingSpec spec, std::size_t cap = kDefaultCap);

  const RingSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  unsigned characteristic_prime() const { return spec_.p; }

  Elem zero() const { return 0; }
  Elem one() const { return size_ == 1 ? 0 : 1; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  bool is_unit(Elem a) const;
  /// Throws NonUnit when `a` is not invertible.
  Elem invert(Elem a) const;

  /// Reduces an integer into the ring (through the prime field for poly).
  Elem from_int(long long v) const;

  /// All elements in canonical order, zero first.
  std::vector<Elem> elements() const;

  std::string to_string(Elem a) const;
  /// Inverse of to_string; also accepts plain integers. Throws RingError.
  Elem parse_elem(std::string_view text) const;

 private:
  unsigned digit(Elem a, unsigned i) const { return digits_[a * spec_.k + i]; }
  Elem from_digits(const std::vector<unsigned>& d) const;

  RingSpec spec_;
  std::size_t size_;
  std::uint64_t unit_order_;
  std::vector<unsigned> pow_p_;
  std::vector<std::uint16_t> digits_;  // poly only: base-p coefficients
};

}  // namespace locmouf
