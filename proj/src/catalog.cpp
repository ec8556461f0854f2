#include "coverforge/catalog.hpp"

#include <fstream>
#include <sstream>

#include "coverforge/dense.hpp"
#include "coverforge/errors.hpp"

namespace coverforge {

Group CatalogEntry::realize() const {
  if (realized_) return *realized_;
  std::vector<Perm> gens;
  for (const auto& img : generators) gens.emplace_back(img);
  if (gens.empty()) gens.push_back(Perm::identity(degree == 0 ? 1 : degree));
  realized_ = std::make_shared<Group>(std::move(gens));
  return *realized_;
}

void Catalog::add(CatalogEntry entry) {
  auto key = std::make_pair(entry.order, entry.index);
  if (entries_.count(key))
    throw ParseError("duplicate catalog entry " + std::to_string(entry.order) + "." +
                         std::to_string(entry.index),
                     0);
  entries_.emplace(key, std::move(entry));
}

void Catalog::mark_complete(unsigned long long order) { coverage_.insert(order); }

const CatalogEntry* Catalog::find(unsigned long long order, unsigned index) const {
  auto it = entries_.find({order, index});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const CatalogEntry*> Catalog::query(unsigned long long order) const {
  if (!covers(order))
    throw AuthorityGap("catalog does not cover order " + std::to_string(order));
  std::vector<const CatalogEntry*> out;
  for (auto it = entries_.lower_bound({order, 0});
       it != entries_.end() && it->first.first == order; ++it)
    out.push_back(&it->second);
  return out;
}

std::vector<const CatalogEntry*> Catalog::query_divisible(
    unsigned long long n, unsigned long long max_order) const {
  std::vector<const CatalogEntry*> out;
  for (unsigned long long m = n; m <= max_order; m += n) {
    auto part = query(m);  // throws AuthorityGap on missing coverage
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::vector<Point> parse_image_array(const std::string& s, int line_no) {
  std::vector<Point> img;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    try {
      unsigned long v = std::stoul(s.substr(pos, end - pos));
      if (v >= kMaxDegree) throw ParseError("image point out of range", line_no);
      img.push_back(static_cast<Point>(v));
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("malformed image array", line_no);
    }
    pos = end + 1;
  }
  if (img.empty()) throw ParseError("empty image array", line_no);
  return img;
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "coverage") {
      std::string range;
      if (!(ls >> range)) throw ParseError("coverage needs a range", line_no);
      std::size_t dash = range.find('-');
      try {
        if (dash == std::string::npos) {
          cat.mark_complete(std::stoull(range));
        } else {
          unsigned long long a = std::stoull(range.substr(0, dash));
          unsigned long long b = std::stoull(range.substr(dash + 1));
          for (unsigned long long o = a; o <= b; ++o) cat.mark_complete(o);
        }
      } catch (...) {
        throw ParseError("malformed coverage range", line_no);
      }
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected field '" + extra + "'", line_no);
      continue;
    }
    if (word != "order") throw ParseError("expected 'order' or 'coverage'", line_no);

    CatalogEntry e;
    std::string field;
    try {
      ls >> e.order;
      ls >> field;
      if (field != "index") throw ParseError("expected 'index'", line_no);
      ls >> e.index;
      ls >> field;
      if (field != "degree") throw ParseError("expected 'degree'", line_no);
      ls >> e.degree;
      ls >> field;
      if (field != "gens") throw ParseError("expected 'gens'", line_no);
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("malformed entry header", line_no);
    }
    std::string genstr;
    if (!(ls >> genstr)) throw ParseError("missing generators", line_no);
    std::size_t pos = 0;
    while (pos <= genstr.size()) {
      std::size_t bar = genstr.find('|', pos);
      if (bar == std::string::npos) bar = genstr.size();
      e.generators.push_back(parse_image_array(genstr.substr(pos, bar - pos), line_no));
      pos = bar + 1;
      if (bar == genstr.size()) break;
    }
    std::string next;
    if (ls >> next) {
      if (next != "label") throw ParseError("unexpected field '" + next + "'", line_no);
      std::getline(ls, e.label);
      while (!e.label.empty() && e.label.front() == ' ') e.label.erase(e.label.begin());
      if (e.label.empty()) throw ParseError("empty label", line_no);
    }
    if (e.index == 0) throw ParseError("index must be positive", line_no);
    for (const auto& img : e.generators)
      if (img.size() != e.degree)
        throw ParseError("generator degree does not match entry degree", line_no);

    Group g = e.realize();
    if (g.order() != e.order)
      throw OrderMismatch("entry " + std::to_string(e.order) + "." +
                          std::to_string(e.index) + " realizes order " +
                          std::to_string(g.order()));
    try {
      cat.add(std::move(e));
    } catch (const ParseError& dup) {
      throw ParseError(dup.what(), line_no);
    }
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string serialize_catalog(const Catalog& c) {
  std::ostringstream out;
  // coverage as merged ranges
  const auto& cov = c.coverage();
  for (auto it = cov.begin(); it != cov.end();) {
    unsigned long long a = *it, b = a;
    auto jt = std::next(it);
    while (jt != cov.end() && *jt == b + 1) {
      b = *jt;
      ++jt;
    }
    if (a == b)
      out << "coverage " << a << "\n";
    else
      out << "coverage " << a << "-" << b << "\n";
    it = jt;
  }
  for (const auto& [key, e] : c.entries()) {
    out << "order " << e.order << " index " << e.index << " degree " << e.degree
        << " gens ";
    for (std::size_t gi = 0; gi < e.generators.size(); ++gi) {
      if (gi) out << "|";
      const auto& img = e.generators[gi];
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (i) out << ",";
        out << img[i];
      }
    }
    if (!e.label.empty()) out << " label " << e.label;
    out << "\n";
  }
  return out.str();
}

void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write catalog file " + path);
  out << serialize_catalog(c);
}

std::map<unsigned long long, std::size_t> load_expected_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open counts file " + path, 0);
  std::map<unsigned long long, std::size_t> counts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string w1, w2;
    unsigned long long order;
    std::size_t count;
    if (!(ls >> w1 >> order >> w2 >> count) || w1 != "order" || w2 != "count")
      throw ParseError("expected 'order <o> count <n>'", line_no);
    counts[order] = count;
  }
  return counts;
}

bool CatalogVerifyReport::all_ok() const {
  for (const auto& oc : orders)
    if (!oc.count_ok || !oc.pairwise_noniso) return false;
  return true;
}

CatalogVerifyReport verify_catalog(
    const Catalog& c, const std::map<unsigned long long, std::size_t>& expected_counts,
    unsigned long long noniso_max_order, const Limits& limits) {
  CatalogVerifyReport report;
  for (const auto& [order, expected] : expected_counts) {
    CatalogOrderCheck oc;
    oc.order = order;
    oc.expected = expected;
    auto entries = c.covers(order) ? c.query(order) : std::vector<const CatalogEntry*>{};
    oc.actual = entries.size();
    oc.count_ok = (oc.actual == expected);
    if (order <= noniso_max_order && entries.size() > 1) {
      oc.noniso_checked = true;
      std::vector<std::shared_ptr<const DenseTable>> tables;
      for (const auto* e : entries)
        tables.push_back(DenseTable::of(e->realize(), limits.element_limit));
      for (std::size_t i = 0; i < tables.size() && oc.pairwise_noniso; ++i)
        for (std::size_t j = i + 1; j < tables.size(); ++j)
          if (dense_isomorphic(*tables[i], *tables[j])) {
            oc.pairwise_noniso = false;
            break;
          }
    }
    report.orders.push_back(oc);
  }
  return report;
}

}  // namespace coverforge
