// Acceptance suite: every shipped desk-scale claim, one pass/fail line per
// criterion, with the stated wall-clock budgets enforced.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "coverforge/abelian.hpp"
#include "coverforge/catalog.hpp"
#include "coverforge/constructors.hpp"
#include "coverforge/covers.hpp"
#include "coverforge/dense.hpp"
#include "coverforge/embed.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"
#include "coverforge/presentation.hpp"
#include "coverforge/structure.hpp"

using namespace coverforge;

namespace {

struct Harness {
  int failures = 0;
  std::string data_dir = default_data_dir();
  std::optional<Catalog> cat;

  const Catalog& catalog() {
    if (!cat) cat = load_catalog(data_dir + "/smallgroups.txt");
    return *cat;
  }

  void run(const std::string& id, double budget_seconds,
           const std::function<bool(std::ostream&)>& body) {
    std::ostringstream note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = body(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs <= budget_seconds;
    bool pass = ok && error.empty() && in_budget;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << "  (" << secs << "s of "
              << budget_seconds << "s)";
    if (!note.str().empty()) std::cout << "  " << note.str();
    if (!error.empty()) std::cout << "  error: " << error;
    if (!in_budget) std::cout << "  over budget";
    std::cout << "\n" << std::flush;
    if (!pass) ++failures;
  }
};

std::vector<Group> order8_family() {
  return {cyclic(8), direct_product(cyclic(4), cyclic(2)), elementary_abelian(2, 3),
          dihedral(8), quaternion(8)};
}

std::vector<Group> order27_family() {
  return {cyclic(27), direct_product(cyclic(9), cyclic(3)), elementary_abelian(3, 3),
          heisenberg(3), modular_gp(3)};
}

bool same_refs(const std::vector<CatalogRef>& got,
               const std::vector<CatalogRef>& want) {
  return got == want;
}

}  // namespace

int main() {
  Harness h;

  // 1. Fermat case r = 3: the three minimal {Z2, Z3}-covers up to order 48,
  //    and every group of order divisible by 6 embeds one of them.
  h.run("criterion 1: fermat r=3", 120, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();
    FamilySpec f = FamilySpec::of({cyclic(2), cyclic(3)});
    auto refs = find_minimal_covers(f, cat, 48);
    if (refs.size() != 3) return false;
    std::vector<Group> three;
    for (const auto& r : refs) three.push_back(cat.find(r.order, r.index)->realize());
    bool shapes = is_isomorphic(three[0], cyclic(6)) &&
                  (is_isomorphic(three[1], sym(3)) || is_isomorphic(three[0], sym(3))) &&
                  is_isomorphic(three[2], alt(4));
    if (!shapes) {
      // order-independent identification
      std::set<std::string> kinds;
      for (const Group& g : three) {
        if (is_isomorphic(g, cyclic(6))) kinds.insert("C6");
        if (is_isomorphic(g, sym(3))) kinds.insert("S3");
        if (is_isomorphic(g, alt(4))) kinds.insert("A4");
      }
      if (kinds.size() != 3) return false;
    }
    for (const CatalogEntry* e : cat.query_divisible(6, 48)) {
      Group g = e->realize();
      bool embeds_one = false;
      for (const Group& t : three)
        if (embeds(t, g)) {
          embeds_one = true;
          break;
        }
      if (!embeds_one) return false;
    }
    note << "covers {C6, S3, A4}, all " << cat.query_divisible(6, 48).size()
         << " groups contain one";
    return true;
  });

  // 2. Fermat case r = 5: Z10, D10 and Z2^4 : Z5; the affine model realizes
  //    the third.
  h.run("criterion 2: fermat r=5", 300, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();
    FamilySpec f = FamilySpec::of({cyclic(2), cyclic(5)});
    auto refs = find_minimal_covers(f, cat, 80);
    if (refs.size() != 3) return false;
    std::vector<Group> three;
    for (const auto& r : refs) three.push_back(cat.find(r.order, r.index)->realize());
    std::set<std::string> kinds;
    Group af = affine_frobenius(2, 5);
    for (const Group& g : three) {
      if (is_isomorphic(g, cyclic(10))) kinds.insert("C10");
      if (is_isomorphic(g, dihedral(10))) kinds.insert("D10");
      if (g.order() == 80 && is_isomorphic(g, af)) kinds.insert("V:Z5");
    }
    note << "covers {C10, D10, Z2^4:Z5}";
    return kinds.size() == 3;
  });

  // 3. Minimal p^2-covers: {Z4 x Z2, D8} and {Z9 x Z3, G_3}.
  h.run("criterion 3: p^2-covers", 300, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();
    FamilySpec f4 = FamilySpec::of({cyclic(4), elementary_abelian(2, 2)});
    auto refs4 = find_minimal_covers(f4, cat, 32);
    if (refs4.size() != 2) return false;
    std::set<std::string> k4;
    for (const auto& r : refs4) {
      Group g = cat.find(r.order, r.index)->realize();
      if (g.order() != 8) return false;
      if (is_isomorphic(g, direct_product(cyclic(4), cyclic(2)))) k4.insert("C4xC2");
      if (is_isomorphic(g, dihedral(8))) k4.insert("D8");
    }
    if (k4.size() != 2) return false;

    FamilySpec f9 = FamilySpec::of({cyclic(9), elementary_abelian(3, 2)});
    auto refs9 = find_minimal_covers(f9, cat, 81);
    if (refs9.size() != 2) return false;
    std::set<std::string> k9;
    for (const auto& r : refs9) {
      Group g = cat.find(r.order, r.index)->realize();
      if (g.order() != 27) return false;
      if (is_isomorphic(g, direct_product(cyclic(9), cyclic(3)))) k9.insert("C9xC3");
      if (is_isomorphic(g, modular_gp(3))) k9.insert("G3");
    }
    note << "4-covers {C4xC2, D8}; 9-covers {C9xC3, G3}";
    return k9.size() == 2;
  });

  // 4. The 8-cover census rows for orders 32 and 64.
  h.run("criterion 4: 8-cover census", 1800, [&](std::ostream& note) {
    FamilySpec fam = FamilySpec::of(order8_family());
    CensusRow r32 = census_row(32, fam, h.catalog());
    CensusRow r64 = census_row(64, fam, h.catalog());
    note << "32 -> (" << r32.groups << "," << r32.covers << "," << r32.minimal << ","
         << r32.strongly_minimal << "); 64 -> (" << r64.groups << "," << r64.covers
         << "," << r64.minimal << "," << r64.strongly_minimal << ")";
    return r32.groups == 51 && r32.covers == 2 && r32.minimal == 2 &&
           r32.strongly_minimal == 2 && r64.groups == 267 && r64.covers == 45 &&
           r64.minimal == 18 && r64.strongly_minimal == 14;
  });

  // 5. No 8-cover of order 16; exactly two of order 32, both minimum.
  h.run("criterion 5: minimum 8-covers", 300, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();
    FamilySpec fam = FamilySpec::of(order8_family());
    for (const CatalogEntry* e : cat.query(16))
      if (is_cover(e->realize(), fam)) return false;
    std::vector<const CatalogEntry*> covers32;
    for (const CatalogEntry* e : cat.query(32))
      if (is_cover(e->realize(), fam)) covers32.push_back(e);
    if (covers32.size() != 2) return false;
    for (const CatalogEntry* e : covers32)
      if (!is_minimum_cover(e->realize(), fam, cat)) return false;
    note << "order-32 covers: cat:32." << covers32[0]->index << ", cat:32."
         << covers32[1]->index;
    return true;
  });

  // 6. SD(2^n) x C2 is a minimal and co-minimal 8-cover for n = 4, 5, 6.
  h.run("criterion 6: semidihedral towers", 120, [&](std::ostream& note) {
    FamilySpec fam = FamilySpec::of(order8_family());
    for (unsigned order : {16u, 32u, 64u}) {
      Group g = direct_product(semidihedral(order), cyclic(2));
      if (!is_cover(g, fam)) return false;
      if (!is_minimal_cover(g, fam)) return false;
      if (!is_co_minimal_cover(g, fam)) return false;
    }
    note << "n = 4, 5, 6";
    return true;
  });

  // 7. The Sylow tower of S_8 is an 8-cover of order 2^7.
  h.run("criterion 7: wreath upper bound", 60, [&](std::ostream& note) {
    Group w = sylow_wreath_tower(2, 3);
    if (w.order() != 128) return false;
    note << "|W| = 128";
    return is_cover(w, FamilySpec::of(order8_family()));
  });

  // 8. Order-243 extension: |H| = 243, H x Z3 covers all five groups of
  //    order 27, and no group of order 81 is a 27-cover. The order-243
  //    negative scan runs when the extended catalog is present.
  h.run("criterion 8: 27-covers", 600, [&](std::ostream& note) {
    Group hext = from_presentation(heisenberg_extension_presentation(3));
    if (hext.order() != 243) return false;
    Group g = direct_product(hext, cyclic(3));
    FamilySpec fam = FamilySpec::of(order27_family());
    if (!is_cover(g, fam)) return false;
    for (const CatalogEntry* e : h.catalog().query(81))
      if (is_cover(e->realize(), fam)) return false;
    note << "|H| = 243, H x C3 covers all of order 27, none of order 81 does";
    std::string extra = h.data_dir + "/smallgroups_243.txt";
    if (std::filesystem::exists(extra)) {
      Catalog cat243 = load_catalog(extra);
      std::size_t covers = 0;
      for (const CatalogEntry* e : cat243.query(243))
        if (is_cover(e->realize(), fam)) ++covers;
      note << "; order-243 scan: " << covers << " cover(s) among "
           << cat243.query(243).size();
      if (covers != 0) return false;
    }
    return true;
  });

  // 9. Minimum-cover examples: {Z2, Z3} has exactly two minimum covers;
  //    {A4, D10} has the unique minimum cover A5; seven of the thirteen
  //    order-60 groups cover the Sylow family.
  h.run("criterion 9: minimum covers", 300, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();
    auto mins23 = find_minimum_covers(FamilySpec::of({cyclic(2), cyclic(3)}), cat, 48);
    if (mins23.size() != 2) return false;
    for (const auto& r : mins23)
      if (r.order != 6) return false;

    FamilySpec a4d10 = FamilySpec::of({alt(4), dihedral(10)});
    auto mins = find_minimum_covers(a4d10, cat, 60);
    if (mins.size() != 1 || mins[0].order != 60) return false;
    Group m = cat.find(mins[0].order, mins[0].index)->realize();
    if (!is_isomorphic(m, alt(5))) return false;
    if (!is_minimum_cover(alt(5), a4d10, cat)) return false;

    FamilySpec sylows = FamilySpec::of({cyclic(3), elementary_abelian(2, 2), cyclic(5)});
    std::size_t covers = 0;
    for (const CatalogEntry* e : cat.query(60))
      if (is_cover(e->realize(), sylows)) ++covers;
    note << "two at order 6; A5 unique for {A4, D10}; " << covers << "/13 cover sylows";
    return covers == 7;
  });

  // 10. Witnesses: A5 for 20, PSL2(8) for 12, and the n = 10 scan.
  h.run("criterion 10: witnesses", 600, [&](std::ostream& note) {
    if (!is_n_witness(alt(5), 20)) return false;
    if (!is_n_witness(psl2(8), 12)) return false;
    auto refs = find_witnesses(10, h.catalog(), 80);
    if (refs.size() != 3) return false;
    std::set<std::string> kinds;
    for (const auto& r : refs) {
      Group g = h.catalog().find(r.order, r.index)->realize();
      if (is_isomorphic(g, cyclic(10))) kinds.insert("C10");
      if (is_isomorphic(g, dihedral(10))) kinds.insert("D10");
      if (g.order() == 80 && is_isomorphic(g, affine_frobenius(2, 5)))
        kinds.insert("V:Z5");
    }
    note << "A5 is a 20-witness, PSL2(8) a 12-witness, n=10 scan matches";
    return kinds.size() == 3;
  });

  // 11. PSL2(13) covers {Z3, Z7} and no proper subgroup has order
  //     divisible by 21 (full lattice of the 1092-element group).
  h.run("criterion 11: psl2(13) minimal cover", 900, [&](std::ostream& note) {
    Group g = psl2(13);
    if (!is_cover(g, FamilySpec::of({cyclic(3), cyclic(7)}))) return false;
    SubgroupLattice lat = subgroup_lattice(g);
    std::size_t checked = 0;
    for (const auto& e : lat.entries) {
      if (e.order == g.order()) continue;
      ++checked;
      if (e.order % 21 == 0) return false;
    }
    note << checked << " proper subgroups, none of order divisible by 21";
    return true;
  });

  // 12. Shipped certificates and the simple-product arithmetic.
  h.run("criterion 12: large-group certificates", 300, [&](std::ostream& note) {
    std::string dir = h.data_dir + "/certificates/";
    Group a7 = alt(7), a12 = alt(12);
    if (!verify_certificate(alt(6), a7, load_certificate(dir + "a6_in_a7.txt")))
      return false;
    if (!verify_certificate(psl2(7), a7, load_certificate(dir + "psl2_7_in_a7.txt")))
      return false;
    if (!verify_certificate(a7, a12, load_certificate(dir + "a7_in_a12.txt")))
      return false;
    Group m = m12(h.data_dir + "/m12.txt");
    if (!verify_certificate(m, a12, load_certificate(dir + "m12_in_a12.txt")))
      return false;
    if (a7.order() * m.order() != a12.order()) return false;
    if (a12.order() != 239500800ull) return false;
    if (embeds(psl2(8), a7)) return false;
    Limits wide;
    wide.element_limit = 25000;
    if (embeds(psl2(8), alt(8), wide)) return false;
    note << "|A7| * |M12| = " << a12.order() << "; PSL2(8) avoids A7 and A8";
    return true;
  });

  // 13. Abelian calculus.
  h.run("criterion 13: abelian calculus", 300, [&](std::ostream& note) {
    std::vector<unsigned long long> first{1, 3, 5, 8, 10, 14, 16, 20, 23, 27};
    for (unsigned n = 1; n <= 10; ++n)
      if (dirichlet_f(n) != first[n - 1]) return false;

    for (unsigned n = 1; n <= 12; ++n) {
      std::vector<AbelianPGroup> family;
      for (const auto& p : partitions_of(n)) family.push_back({2, p});
      if (!(min_abelian_p_cover(family).partition == cover_partition_all(n)))
        return false;
      if (cover_partition_all(n).weight() != dirichlet_f(n)) return false;
    }

    // componentwise embedding agrees with the permutation-level decision
    std::vector<Partition> parts;
    for (unsigned n = 1; n <= 6; ++n)
      for (const auto& p : partitions_of(n)) parts.push_back(p);
    for (unsigned p : {2u, 3u}) {
      for (const auto& pb : parts)
        for (const auto& pa : parts) {
          AbelianPGroup b{p, pb}, a{p, pa};
          bool expect = abelian_embeds(b, a);
          bool got = embeds(realize_abelian_p_group(b), realize_abelian_p_group(a));
          if (expect != got) return false;
        }
    }

    for (unsigned long long n = 1; n <= 1000; ++n) {
      bool squarefree = true;
      for (unsigned long long d = 2; d * d <= n && squarefree; ++d)
        if (n % (d * d) == 0) squarefree = false;
      if (squarefree && min_abelian_cover_order(n) != n) return false;
    }
    note << "f(1..10), brute-force partitions to 12, embeds agreement to weight 6, "
            "A(squarefree) to 1000";
    return true;
  });

  // 14. Property suites: inheritance, implication lattice, the self-cover
  //     theorem up to order 64, and the brute-force minimality oracles.
  h.run("criterion 14: property suites", 1800, [&](std::ostream& note) {
    const Catalog& cat = h.catalog();

    // verdict implication lattice with an authority present
    FamilySpec f23 = FamilySpec::of({cyclic(2), cyclic(3)});
    for (unsigned long long o : {6ull, 12ull, 18ull, 24ull}) {
      for (const CatalogEntry* e : cat.query(o)) {
        CoverVerdict v = cover_verdict(e->realize(), f23, &cat);
        if (v.is_strongly_minimal != (v.is_minimal && v.is_co_minimal)) return false;
        if ((v.is_minimal || v.is_co_minimal) && !v.is_cover) return false;
        if (v.is_minimum && *v.is_minimum && !v.is_strongly_minimal) return false;
        for (const auto& [idx, cert] : v.witnesses)
          if (!verify_certificate(f23.members[idx], e->realize(), cert)) return false;
        if (v.is_cover && e->order % f23.lcm_order != 0) return false;
      }
    }

    // Sylow cover property on the minimal 6-cover scan (hrd40 instances)
    for (const auto& r : find_minimal_covers(f23, cat, 48))
      if (!sylow_cover_check(cat.find(r.order, r.index)->realize(), 6, cat))
        return false;

    // perfect-family inheritance: minimal {A5}-covers up to order 100
    {
      auto refs = find_minimal_covers(FamilySpec::of({alt(5)}), cat, 100);
      if (refs.size() != 1 || refs[0].order != 60) return false;
      if (!is_perfect(cat.find(refs[0].order, refs[0].index)->realize())) return false;
    }

    // self-cover theorem instances over every catalog group of order <= 64
    for (unsigned long long o = 1; o <= 64; ++o)
      for (const CatalogEntry* e : cat.query(o)) {
        if (!self_cover_check(e->realize()).theorem_consistent) return false;
      }

    // brute-force oracle agreement for minimality and co-minimality
    auto oracle_check = [&](const Group& g, const FamilySpec& fam) {
      bool cover = is_cover(g, fam);
      bool min_fast = is_minimal_cover(g, fam);
      bool comin_fast = is_co_minimal_cover(g, fam);
      // direct scan over all proper subgroups
      bool min_brute = cover;
      if (cover) {
        SubgroupLattice lat = subgroup_lattice(g);
        for (std::size_t i = 0; i < lat.size() && min_brute; ++i) {
          if (lat.entries[i].order == g.order()) continue;
          if (is_cover(lat.to_group(i), fam)) min_brute = false;
        }
      }
      // direct scan over all proper quotients
      bool comin_brute = cover;
      if (cover) {
        for (const Group& n : normal_subgroups(g)) {
          if (n.order() == 1 || n.order() == g.order()) continue;
          if (is_cover(quotient(g, n), fam)) {
            comin_brute = false;
            break;
          }
        }
      }
      return min_fast == min_brute && comin_fast == comin_brute;
    };
    FamilySpec f25 = FamilySpec::of({cyclic(2), cyclic(5)});
    FamilySpec f4 = FamilySpec::of({cyclic(4), elementary_abelian(2, 2)});
    std::size_t checked = 0;
    for (unsigned long long o = 6; o <= 100; o += 6)
      for (const CatalogEntry* e : cat.query(o)) {
        if (!oracle_check(e->realize(), f23)) return false;
        ++checked;
      }
    for (unsigned long long o = 10; o <= 100; o += 10)
      for (const CatalogEntry* e : cat.query(o)) {
        if (!oracle_check(e->realize(), f25)) return false;
        ++checked;
      }
    for (unsigned long long o : {4ull, 8ull, 16ull, 32ull})
      for (const CatalogEntry* e : cat.query(o)) {
        if (!oracle_check(e->realize(), f4)) return false;
        ++checked;
      }
    note << "implications, inheritance, self-cover to 64, oracle agreement on "
         << checked << " groups";
    return true;
  });

  std::cout << (h.failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(h.failures) +
                                      " criterion(s) failed\n");
  return h.failures == 0 ? 0 : 1;
}
