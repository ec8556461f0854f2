#include "coverforge/embed.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"

namespace coverforge {

namespace {

Perm pair_perm(const Perm& a, const Perm& b) {
  unsigned da = a.degree(), db = b.degree();
  std::vector<Point> img(da + db);
  for (Point x = 0; x < da; ++x) img[x] = a[x];
  for (Point x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + b[x]);
  return Perm(std::move(img));
}

// Greedy small generating sequence: first the element of largest order,
// then whichever element enlarges the generated subgroup most.
std::vector<Perm> greedy_generators(const Group& h, const Limits& limits) {
  const auto& elems = h.elements(limits.element_limit);
  std::vector<Perm> chosen;
  unsigned long long cur_order = 1;

  // first pick by element order alone
  {
    const Perm* best = nullptr;
    unsigned long long best_order = 0;
    for (const Perm& e : elems)
      if (e.order() > best_order) {
        best_order = e.order();
        best = &e;
      }
    if (!best || best_order == 1) return {Perm::identity(h.degree())};
    chosen.push_back(*best);
    cur_order = best_order;
  }

  while (cur_order < h.order()) {
    Group cur(chosen);
    const Perm* best = nullptr;
    unsigned long long best_order = cur_order;
    for (const Perm& e : elems) {
      if (cur.contains(e)) continue;
      auto trial = chosen;
      trial.push_back(e);
      unsigned long long o = Group(std::move(trial)).order();
      if (o > best_order) {
        best_order = o;
        best = &e;
        if (o == h.order()) break;  // cannot do better
      }
    }
    chosen.push_back(*best);
    cur_order = best_order;
  }
  return chosen;
}

}  // namespace

IsoInvariants iso_invariants(const Group& g, const Limits& limits) {
  IsoInvariants inv;
  inv.order = g.order();
  const auto& elems = g.elements(limits.element_limit);
  for (const Perm& e : elems) ++inv.order_spectrum[e.order()];
  inv.center_order = 0;
  for (const Perm& e : elems) {
    bool central = true;
    for (const Perm& s : g.generators())
      if (!(e * s == s * e)) {
        central = false;
        break;
      }
    if (central) ++inv.center_order;
  }
  inv.derived_series_orders = derived_series_orders(g);
  Group der = derived_subgroup(g);
  if (g.order() / der.order() <= limits.element_limit) {
    Group ab = der.order() == g.order() ? Group::trivial() : quotient(g, der);
    if (ab.order() > 1)
      inv.abelianization = DenseTable::of(ab, limits.element_limit)->abelian_invariants();
  }
  return inv;
}

bool verify_certificate(const Group& h, const Group& g,
                        const EmbeddingCertificate& cert) {
  if (cert.source_generators.size() != cert.images.size() ||
      cert.source_generators.empty())
    throw InvalidParameter("certificate tuple lengths differ or are empty");
  for (const Perm& s : cert.source_generators)
    if (s.degree() != h.degree())
      throw DegreeMismatch("certificate source degree mismatch");
  for (const Perm& s : cert.images)
    if (s.degree() != g.degree())
      throw DegreeMismatch("certificate image degree mismatch");

  Group span(cert.source_generators);
  if (span.order() != h.order())
    throw NotGenerating("certificate source tuple does not generate the group");
  for (const Perm& s : cert.source_generators)
    if (!h.contains(s))
      throw NotGenerating("certificate source tuple leaves the group");

  std::vector<Perm> pairs;
  for (std::size_t i = 0; i < cert.source_generators.size(); ++i)
    pairs.push_back(pair_perm(cert.source_generators[i], cert.images[i]));
  if (Group(pairs).order() != h.order()) return false;

  for (const Perm& img : cert.images)
    if (!g.contains(img)) return false;
  Group image(cert.images);
  return image.order() == h.order();
}

std::optional<EmbeddingCertificate> find_embedding(const Group& h, const Group& g,
                                                   unsigned long long budget,
                                                   const Limits& limits) {
  if (g.order() % h.order() != 0) return std::nullopt;
  if (h.order() == 1)
    return EmbeddingCertificate{{Perm::identity(h.degree())}, {Perm::identity(g.degree())}};

  std::vector<Perm> src = greedy_generators(h, limits);
  std::vector<unsigned long long> prefix_order(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<Perm> pre(src.begin(), src.begin() + i + 1);
    prefix_order[i] = Group(std::move(pre)).order();
  }

  const auto& targets = g.elements(limits.element_limit);
  std::vector<std::vector<const Perm*>> pools(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    unsigned long long want = src[i].order();
    for (const Perm& t : targets)
      if (t.order() == want) pools[i].push_back(&t);
    if (pools[i].empty()) return std::nullopt;
  }

  std::vector<const Perm*> chosen(src.size(), nullptr);
  unsigned long long nodes = 0;
  bool truncated = false;

  std::optional<EmbeddingCertificate> found;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == src.size()) {
      std::vector<Perm> images;
      for (const Perm* p : chosen) images.push_back(*p);
      if (Group(images).order() == h.order()) {
        EmbeddingCertificate cert;
        cert.source_generators = src;
        cert.images = std::move(images);
        found = std::move(cert);
        return true;
      }
      return false;
    }
    for (const Perm* cand : pools[depth]) {
      if (++nodes > budget) {
        truncated = true;
        return false;
      }
      chosen[depth] = cand;
      std::vector<Perm> pairs;
      for (std::size_t i = 0; i <= depth; ++i)
        pairs.push_back(pair_perm(src[i], *chosen[i]));
      if (Group(std::move(pairs)).order() != prefix_order[depth]) continue;
      if (self(self, depth + 1)) return true;
      if (truncated) return false;
    }
    return false;
  };
  rec(rec, 0);
  if (found) return found;
  if (truncated) throw BudgetExceeded("embedding search budget exhausted");
  return std::nullopt;
}

namespace {

// Strategy-selected embedding used by embeds() and the cover predicates.
std::optional<EmbeddingCertificate> embedding_via_lattice(const Group& h,
                                                          const Group& g,
                                                          const Limits& limits) {
  auto ht = DenseTable::of(h, limits.lattice_limit);
  SubgroupLattice lat = subgroup_lattice(g, h.order(), limits);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.entries[i].order != h.order()) continue;
    auto subt = lat.table->subgroup_table(lat.entries[i].elements);
    auto images = dense_iso(*ht, subt);
    if (!images) continue;
    EmbeddingCertificate cert;
    for (EltIndex si : ht->greedy_generators())
      cert.source_generators.push_back(ht->perms()[si]);
    for (EltIndex ii : *images) cert.images.push_back(subt.perms()[ii]);
    return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EmbeddingCertificate> find_embedding_auto(const Group& h, const Group& g,
                                                        const Limits& limits) {
  if (h.order() > g.order() || g.order() % h.order() != 0) return std::nullopt;
  if (h.order() == 1)
    return EmbeddingCertificate{{Perm::identity(h.degree())}, {Perm::identity(g.degree())}};
  if (g.order() <= limits.lattice_limit) return embedding_via_lattice(h, g, limits);
  if (g.order() <= limits.element_limit) return find_embedding(h, g, 50'000'000, limits);
  throw NeedsCertificate("target exceeds search limits; supply a certificate");
}

bool is_isomorphic(const Group& a, const Group& b, const Limits& limits) {
  if (a.order() != b.order()) return false;
  if (a.order() > limits.element_limit)
    throw OrderExceedsLimit("isomorphism test exceeds the element limit");
  if (a.order() == 1) return true;
  if (a.order() <= limits.lattice_limit) {
    auto ta = DenseTable::of(a, limits.lattice_limit);
    auto tb = DenseTable::of(b, limits.lattice_limit);
    return dense_isomorphic(*ta, *tb);
  }
  if (!(iso_invariants(a, limits) == iso_invariants(b, limits))) return false;
  return find_embedding(a, b, 50'000'000, limits).has_value();
}

bool embeds(const Group& h, const Group& g, const Limits& limits) {
  if (h.order() == 1) return true;
  if (h.order() > g.order() || g.order() % h.order() != 0) return false;
  if (h.order() == g.order()) {
    if (g.order() <= limits.element_limit) return is_isomorphic(h, g, limits);
  }
  return find_embedding_auto(h, g, limits).has_value();
}

std::string serialize_certificate(const EmbeddingCertificate& cert) {
  std::ostringstream out;
  auto dump = [&](const char* tag, const std::vector<Perm>& seq) {
    out << tag << " degree " << (seq.empty() ? 0 : seq.front().degree()) << " gens ";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out << "|";
      auto img = seq[i].images();
      for (std::size_t x = 0; x < img.size(); ++x) {
        if (x) out << ",";
        out << img[x];
      }
    }
    out << "\n";
  };
  dump("source", cert.source_generators);
  dump("images", cert.images);
  return out.str();
}

namespace {

std::vector<Perm> parse_perm_list(const std::string& line, int line_no,
                                  const char* expect_tag) {
  std::istringstream ls(line);
  std::string tag, kw;
  unsigned degree = 0;
  if (!(ls >> tag >> kw >> degree) || tag != expect_tag || kw != "degree")
    throw ParseError(std::string("expected '") + expect_tag + " degree <d> gens <...>'",
                     line_no);
  std::string kw2, payload;
  if (!(ls >> kw2 >> payload) || kw2 != "gens")
    throw ParseError("missing generator payload", line_no);
  std::vector<Perm> out;
  std::size_t pos = 0;
  while (pos <= payload.size()) {
    std::size_t bar = payload.find('|', pos);
    if (bar == std::string::npos) bar = payload.size();
    std::vector<Point> img;
    std::size_t p = pos;
    while (p < bar) {
      std::size_t comma = payload.find(',', p);
      if (comma == std::string::npos || comma > bar) comma = bar;
      try {
        img.push_back(static_cast<Point>(std::stoul(payload.substr(p, comma - p))));
      } catch (...) {
        throw ParseError("malformed image array", line_no);
      }
      p = comma + 1;
    }
    if (img.size() != degree) throw ParseError("image array degree mismatch", line_no);
    out.emplace_back(std::move(img));
    pos = bar + 1;
    if (bar == payload.size()) break;
  }
  return out;
}

}  // namespace

EmbeddingCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  EmbeddingCertificate cert;
  int line_no = 0;
  bool have_src = false, have_img = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!have_src) {
      cert.source_generators = parse_perm_list(line, line_no, "source");
      have_src = true;
    } else if (!have_img) {
      cert.images = parse_perm_list(line, line_no, "images");
      have_img = true;
    } else {
      throw ParseError("unexpected trailing content", line_no);
    }
  }
  if (!have_src || !have_img) throw ParseError("incomplete certificate", line_no);
  if (cert.source_generators.size() != cert.images.size())
    throw ParseError("source and image tuple lengths differ", line_no);
  return cert;
}

EmbeddingCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

}  // namespace coverforge
