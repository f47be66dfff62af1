#include "locmouf/ring_verify.hpp"

#include <string>
#include <vector>

namespace locmouf {

VerifyReport verify_ring(const Ring& r) {
  VerifyReport rep;
  const std::size_t n = r.size();
  const auto all = r.elements();
  std::vector<Elem> thirds = all;
  if (n > kExhaustiveLimit) {
    // index p is the element p (zmod) or t (poly)
    const Elem gen = r.spec().k > 1 ? static_cast<Elem>(r.characteristic_prime()) : r.one();
    thirds = {r.one(), gen};
  }
  auto lbl = [&](Elem a) { return r.to_string(a); };

  Sweep ident("0 and 1 are identities");
  Sweep comm("addition and multiplication commute");
  for (Elem a : all) {
    ident.test(r.add(a, r.zero()) == a && r.mul(a, r.one()) == a && r.add(a, r.neg(a)) == r.zero(),
               [&] { return Witness{{"a", lbl(a)}}; });
    for (Elem b : all)
      comm.test(r.add(a, b) == r.add(b, a) && r.mul(a, b) == r.mul(b, a),
                [&] { return Witness{{"a", lbl(a)}, {"b", lbl(b)}}; });
  }
  Sweep assoc("addition and multiplication are associative");
  Sweep dist("a(b + c) = ab + ac");
  for (Elem a : all)
    for (Elem b : all)
      for (Elem c : thirds) {
        auto w = [&] { return Witness{{"a", lbl(a)}, {"b", lbl(b)}, {"c", lbl(c)}}; };
        assoc.test(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)) && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)), w);
        dist.test(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)), w);
      }
  if (n > kExhaustiveLimit) {
    assoc.note("third variable restricted to generators");
    dist.note("third variable restricted to generators");
  }
  for (Sweep* s : {&ident, &comm, &assoc, &dist}) rep.add(s->finish());

  std::vector<Elem> nonunits;
  for (Elem a : all)
    if (!r.is_unit(a)) nonunits.push_back(a);
  Sweep ideal("non-units form an ideal");
  for (Elem a : nonunits) {
    for (Elem b : nonunits)
      ideal.test(!r.is_unit(r.add(a, b)), [&] { return Witness{{"a", lbl(a)}, {"b", lbl(b)}}; });
    for (Elem b : all)
      ideal.test(!r.is_unit(r.mul(a, b)), [&] { return Witness{{"a", lbl(a)}, {"b", lbl(b)}}; });
  }
  rep.add(ideal.finish());
  rep.add("non-units have index p", nonunits.size() * r.characteristic_prime() == n,
          std::to_string(nonunits.size()) + " non-units");

  Sweep inv("a a^-1 = 1 and (a^-1)^-1 = a");
  for (Elem a : all)
    if (r.is_unit(a)) {
      const Elem b = r.invert(a);
      inv.test(r.mul(a, b) == r.one() && r.invert(b) == a, [&] { return Witness{{"a", lbl(a)}}; });
    }
  rep.add(inv.finish());
  return rep;
}

}  // namespace locmouf
