#include "locmouf/ring.hpp"

#include <charconv>
#include <limits>

#include "locmouf/error.hpp"

namespace locmouf {

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw RingError("ring spec: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw RingError("ring spec must look like zmod:p:k or poly:p:k, got '" + std::string(text) + "'");
  RingSpec spec;
  auto kind = text.substr(0, c1);
  if (kind == "zmod")
    spec.kind = RingKind::zmod;
  else if (kind == "poly")
    spec.kind = RingKind::poly;
  else
    throw RingError("ring spec: unknown kind '" + std::string(kind) + "'");
  spec.p = parse_unsigned(text.substr(c1 + 1, c2 - c1 - 1), "p");
  spec.k = parse_unsigned(text.substr(c2 + 1), "k");
  // zmod:n:k with n = q^j a prime power names Z/q^(jk), e.g. zmod:4:1 is Z/4.
  if (spec.kind == RingKind::zmod && spec.p > 1 && !is_prime(spec.p)) {
    unsigned q = 2;
    while (spec.p % q != 0) ++q;
    unsigned n = spec.p, j = 0;
    while (n % q == 0) {
      n /= q;
      ++j;
    }
    if (n == 1) {
      spec.p = q;
      spec.k *= j;
    }
  }
  return spec;
}

std::string RingSpec::str() const {
  return std::string(kind == RingKind::zmod ? "zmod" : "poly") + ":" + std::to_string(p) + ":" +
         std::to_string(k);
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<RingSpec> catalog_specs() {
  return {{RingKind::zmod, 5, 1}, {RingKind::zmod, 7, 1}, {RingKind::zmod, 2, 2},
          {RingKind::zmod, 5, 2}, {RingKind::poly, 5, 2}};
}

Ring::Ring(RingSpec spec, std::size_t cap) : spec_(spec) {
  if (!is_prime(spec.p))
    throw RingError("p=" + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) throw RingError("exponent k must be at least 1");
  std::uint64_t n = 1;
  for (unsigned i = 0; i < spec.k; ++i) {
    pow_p_.push_back(static_cast<unsigned>(n));
    n *= spec.p;
    if (n > cap)
      throw RingError("ring " + spec.str() + " exceeds the size cap of " + std::to_string(cap));
  }
  size_ = static_cast<std::size_t>(n);
  unit_order_ = n - n / spec.p;
  if (spec.kind == RingKind::poly) {
    digits_.resize(size_ * spec.k);
    for (std::size_t a = 0; a < size_; ++a) {
      std::size_t r = a;
      for (unsigned i = 0; i < spec.k; ++i) {
        digits_[a * spec.k + i] = static_cast<std::uint16_t>(r % spec.p);
        r /= spec.p;
      }
    }
  }
}

Elem Ring::from_digits(const std::vector<unsigned>& d) const {
  Elem a = 0;
  for (unsigned i = 0; i < spec_.k; ++i) a += d[i] * pow_p_[i];
  return a;
}

Elem Ring::add(Elem a, Elem b) const {
  if (spec_.kind == RingKind::zmod) return static_cast<Elem>((a + b) % size_);
  Elem r = 0;
  for (unsigned i = 0; i < spec_.k; ++i) r += ((digit(a, i) + digit(b, i)) % spec_.p) * pow_p_[i];
  return r;
}

Elem Ring::neg(Elem a) const {
  if (spec_.kind == RingKind::zmod) return static_cast<Elem>((size_ - a) % size_);
  Elem r = 0;
  for (unsigned i = 0; i < spec_.k; ++i) r += ((spec_.p - digit(a, i)) % spec_.p) * pow_p_[i];
  return r;
}

Elem Ring::mul(Elem a, Elem b) const {
  if (spec_.kind == RingKind::zmod)
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % size_);
  std::vector<unsigned> c(spec_.k, 0);
  for (unsigned i = 0; i < spec_.k; ++i) {
    unsigned ai = digit(a, i);
    if (ai == 0) continue;
    for (unsigned j = 0; i + j < spec_.k; ++j) c[i + j] = (c[i + j] + ai * digit(b, j)) % spec_.p;
  }
  return from_digits(c);
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

bool Ring::is_unit(Elem a) const {
  if (spec_.kind == RingKind::zmod) return a % spec_.p != 0;
  return digit(a, 0) != 0;
}

Elem Ring::invert(Elem a) const {
  if (!is_unit(a)) throw NonUnit(to_string(a) + " is not a unit of " + spec_.str());
  // The unit group has order p^(k-1)(p-1).
  Elem b = pow(a, unit_order_ - 1);
  require(mul(a, b) == one(), "ring inverse self-check failed");
  return b;
}

Elem Ring::from_int(long long v) const {
  long long m = spec_.kind == RingKind::zmod ? static_cast<long long>(size_) : spec_.p;
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::string Ring::to_string(Elem a) const {
  if (spec_.kind == RingKind::zmod) return std::to_string(a);
  std::string out;
  for (unsigned i = 0; i < spec_.k; ++i) {
    unsigned c = digit(a, i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 't';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Elem Ring::parse_elem(std::string_view text) const {
  std::string s = trim(text);
  if (s.empty()) throw RingError("empty ring element");
  if (spec_.kind == RingKind::zmod || s.find('t') == std::string::npos) {
    bool negative = s[0] == '-';
    unsigned v = parse_unsigned(std::string_view(s).substr(negative ? 1 : 0), "element");
    if (spec_.kind == RingKind::poly && v >= spec_.p)
      throw RingError("constant " + s + " out of range for " + spec_.str());
    if (spec_.kind == RingKind::zmod && v >= size_)
      throw RingError("residue " + s + " out of range for " + spec_.str());
    return negative ? neg(v) : v;
  }
  std::vector<unsigned> d(spec_.k, 0);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto plus = s.find('+', pos);
    std::string term = trim(std::string_view(s).substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    auto tpos = term.find('t');
    unsigned coeff = 1;
    unsigned degree = 0;
    if (tpos == std::string::npos) {
      coeff = parse_unsigned(term, "coefficient");
    } else {
      if (tpos > 0) coeff = parse_unsigned(std::string_view(term).substr(0, tpos), "coefficient");
      degree = 1;
      if (tpos + 1 < term.size()) {
        if (term[tpos + 1] != '^') throw RingError("bad term '" + term + "'");
        degree = parse_unsigned(std::string_view(term).substr(tpos + 2), "degree");
      }
    }
    if (coeff >= spec_.p || degree >= spec_.k)
      throw RingError("term '" + term + "' out of range for " + spec_.str());
    d[degree] = (d[degree] + coeff) % spec_.p;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return from_digits(d);
}

}  // namespace locmouf
