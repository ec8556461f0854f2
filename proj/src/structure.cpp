#include "coverforge/structure.hpp"

#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"

namespace coverforge {

StructureReport structure_report(const Group& g, const Limits& limits) {
  StructureReport r;
  r.order = g.order();
  r.derived_series_orders = derived_series_orders(g);
  r.is_perfect = (r.order > 1) ? (r.derived_series_orders.size() == 1 &&
                                  derived_subgroup(g).order() == r.order)
                               : true;
  r.is_soluble = r.derived_series_orders.back() == 1;
  r.is_nilpotent = is_nilpotent(g);

  if (r.order <= limits.element_limit) {
    const auto& elems = g.elements(limits.element_limit);
    std::map<unsigned long long, std::size_t> spec;
    for (const Perm& e : elems) ++spec[e.order()];
    r.order_spectrum = std::move(spec);

    unsigned long long central = 0;
    for (const Perm& e : elems) {
      bool commutes = true;
      for (const Perm& s : g.generators())
        if (!(e * s == s * e)) {
          commutes = false;
          break;
        }
      if (commutes) ++central;
    }
    r.center_order = central;
  }

  // abelianization invariants via the derived quotient
  {
    Group der = derived_subgroup(g);
    unsigned long long ab_order = r.order / der.order();
    if (ab_order == 1) {
      // trivial abelianization, no invariants
    } else if (ab_order <= limits.element_limit && r.order / der.order() <= kMaxDegree) {
      Group ab = quotient(g, der);
      auto t = DenseTable::of(ab, limits.element_limit);
      r.abelian_invariants = t->abelian_invariants();
    }
  }

  if (p_group_prime(r.order)) {
    r.frattini_order = frattini_subgroup(g, limits).order();
  } else if (r.order <= limits.lattice_limit) {
    r.frattini_order = frattini_subgroup(g, limits).order();
  }
  return r;
}

}  // namespace coverforge
