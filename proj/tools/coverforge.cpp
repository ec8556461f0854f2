// coverforge: build finite groups, decide cover predicates, run catalog
// scans and reproduce the shipped report tables.
//
// Exit codes: 0 = predicate true / report matches, 1 = predicate false /
// mismatch, 2 = usage or data errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coverforge/abelian.hpp"
#include "coverforge/catalog.hpp"
#include "coverforge/constructors.hpp"
#include "coverforge/covers.hpp"
#include "coverforge/embed.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/lattice.hpp"
#include "coverforge/presentation.hpp"
#include "coverforge/structure.hpp"

using namespace coverforge;
using nlohmann::json;

namespace {

struct Context {
  std::string data_dir = default_data_dir();
  std::string authority_path;  // defaults to <data_dir>/smallgroups.txt
  std::optional<Catalog> authority;

  const Catalog& catalog() {
    if (!authority) {
      std::string path =
          authority_path.empty() ? data_dir + "/smallgroups.txt" : authority_path;
      authority = load_catalog(path);
    }
    return *authority;
  }
};

// ---- GroupExpr grammar ----

std::vector<std::string> split_product(const std::string& expr) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0 && i + 1 < expr.size() &&
        (std::isupper(expr[i + 1]) || std::isdigit(expr[i + 1]))) {
      terms.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  terms.push_back(cur);
  return terms;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

unsigned parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return static_cast<unsigned>(v);
  } catch (...) {
    throw InvalidParameter("cannot parse " + what + " '" + s + "'");
  }
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file " + path, 0);
  Presentation pres;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "generators") {
      if (!(ls >> pres.generator_count))
        throw ParseError("generators line needs a count", line_no);
    } else if (word == "relator") {
      std::vector<int> rel;
      int v;
      while (ls >> v) rel.push_back(v);
      if (rel.empty()) throw ParseError("empty relator", line_no);
      pres.relators.push_back(std::move(rel));
    } else {
      throw ParseError("expected 'generators' or 'relator'", line_no);
    }
  }
  return pres;
}

Group parse_term(const std::string& term, Context& ctx) {
  if (term.rfind("cat:", 0) == 0) {
    std::string ref = term.substr(4);
    std::size_t dot = ref.find('.');
    if (dot == std::string::npos)
      throw InvalidParameter("catalog reference needs the form cat:<order>.<index>");
    unsigned long long order = parse_number(ref.substr(0, dot), "catalog order");
    unsigned index = parse_number(ref.substr(dot + 1), "catalog index");
    const CatalogEntry* e = ctx.catalog().find(order, index);
    if (!e)
      throw AuthorityGap("catalog has no entry " + std::to_string(order) + "." +
                         std::to_string(index));
    return e->realize();
  }
  if (term.rfind("pres:", 0) == 0)
    return from_presentation(load_presentation(term.substr(5)));

  auto args_of = [&](const std::string& t, std::size_t open) {
    if (t.back() != ')') throw InvalidParameter("unbalanced parentheses in '" + t + "'");
    auto inner = t.substr(open + 1, t.size() - open - 2);
    return split_commas(inner);
  };

  std::size_t open = term.find('(');
  if (open != std::string::npos) {
    std::string name = term.substr(0, open);
    auto args = args_of(term, open);
    if (name == "EA" && args.size() == 2)
      return elementary_abelian(parse_number(args[0], "prime"),
                                parse_number(args[1], "rank"));
    if (name == "AF" && args.size() == 2)
      return affine_frobenius(parse_number(args[0], "prime"),
                              parse_number(args[1], "prime"));
    if (name == "PSL2" && args.size() == 1)
      return psl2(parse_number(args[0], "field size"));
    if (name == "W" && args.size() == 2)
      return sylow_wreath_tower(parse_number(args[0], "prime"),
                                parse_number(args[1], "height"));
    throw InvalidParameter("unknown constructor '" + name + "'");
  }

  if (term == "M12") return m12(ctx.data_dir + "/m12.txt");
  auto starts = [&](const char* prefix) { return term.rfind(prefix, 0) == 0; };
  if (starts("Heis")) return heisenberg(parse_number(term.substr(4), "prime"));
  if (starts("Gp")) return modular_gp(parse_number(term.substr(2), "prime"));
  if (starts("SD")) return semidihedral(parse_number(term.substr(2), "order"));
  if (starts("C")) return cyclic(parse_number(term.substr(1), "order"));
  if (starts("D")) return dihedral(parse_number(term.substr(1), "order"));
  if (starts("Q")) return quaternion(parse_number(term.substr(1), "order"));
  if (starts("A")) return alt(parse_number(term.substr(1), "degree"));
  if (starts("S")) return sym(parse_number(term.substr(1), "degree"));
  throw InvalidParameter("unknown group expression '" + term + "'");
}

Group parse_group_expr(const std::string& expr, Context& ctx) {
  auto terms = split_product(expr);
  Group g = parse_term(terms[0], ctx);
  for (std::size_t i = 1; i < terms.size(); ++i)
    g = direct_product(g, parse_term(terms[i], ctx));
  return g;
}

// family from --members / --family order sugar
struct ParsedFamily {
  FamilySpec spec{{Group::trivial()}, 1, 1};
  std::vector<std::string> labels;
};

ParsedFamily parse_family(const std::string& members, unsigned family_order,
                          Context& ctx) {
  ParsedFamily out;
  std::vector<Group> groups;
  if (!members.empty() && family_order != 0)
    throw InvalidParameter("--members and --family are mutually exclusive");
  if (!members.empty()) {
    for (const std::string& t : split_commas(members)) {
      groups.push_back(parse_group_expr(t, ctx));
      out.labels.push_back(t);
    }
  } else if (family_order != 0) {
    for (const CatalogEntry* e : ctx.catalog().query(family_order)) {
      groups.push_back(e->realize());
      out.labels.push_back("cat:" + std::to_string(e->order) + "." +
                           std::to_string(e->index));
    }
  } else {
    throw InvalidParameter("a family is required (--members or --family)");
  }
  out.spec = FamilySpec::of(std::move(groups));
  return out;
}

json perm_to_json(const Perm& p) {
  json arr = json::array();
  for (Point x : p.images()) arr.push_back(x);
  return arr;
}

json cert_to_json(const EmbeddingCertificate& cert) {
  json src = json::array(), img = json::array();
  for (const Perm& p : cert.source_generators) src.push_back(perm_to_json(p));
  for (const Perm& p : cert.images) img.push_back(perm_to_json(p));
  return json{{"source", src}, {"images", img}};
}

json verdict_to_json(const CoverVerdict& v) {
  json j{{"is_cover", v.is_cover},
         {"is_minimal", v.is_minimal},
         {"is_co_minimal", v.is_co_minimal},
         {"is_strongly_minimal", v.is_strongly_minimal}};
  j["is_minimum"] = v.is_minimum ? json(*v.is_minimum) : json(nullptr);
  json w = json::array();
  for (const auto& [idx, cert] : v.witnesses) {
    json e = cert_to_json(cert);
    e["member"] = idx;
    w.push_back(e);
  }
  j["witnesses"] = w;
  return j;
}

// ---- subcommand drivers ----

int run_cover(Context& ctx, const std::string& expr, const std::string& members,
              unsigned family_order, bool want_minimal, bool want_co_minimal,
              bool want_minimum, bool as_json) {
  Group g = parse_group_expr(expr, ctx);
  ParsedFamily fam = parse_family(members, family_order, ctx);

  const Catalog* authority = want_minimum ? &ctx.catalog() : nullptr;
  CoverVerdict v = cover_verdict(g, fam.spec, authority);

  bool verdict = v.is_cover;
  if (want_minimal) verdict = verdict && v.is_minimal;
  if (want_co_minimal) verdict = verdict && v.is_co_minimal;
  if (want_minimum) verdict = verdict && v.is_minimum.value_or(false);

  if (as_json) {
    json j{{"query", "cover"},
           {"group", json{{"expr", expr}, {"order", g.order()}}},
           {"verdict", verdict_to_json(v)}};
    json members_json = json::array();
    for (std::size_t i = 0; i < fam.spec.members.size(); ++i)
      members_json.push_back(json{{"expr", fam.labels[i]},
                                  {"order", fam.spec.members[i].order()}});
    j["family"] = members_json;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "group " << expr << " of order " << g.order() << "\n";
    std::cout << "family of " << fam.spec.members.size() << " group(s), lcm "
              << fam.spec.lcm_order << ", product " << fam.spec.product_order << "\n";
    std::cout << "is_cover: " << (v.is_cover ? "true" : "false") << "\n";
    std::cout << "is_minimal: " << (v.is_minimal ? "true" : "false") << "\n";
    std::cout << "is_co_minimal: " << (v.is_co_minimal ? "true" : "false") << "\n";
    std::cout << "is_strongly_minimal: " << (v.is_strongly_minimal ? "true" : "false")
              << "\n";
    if (v.is_minimum)
      std::cout << "is_minimum: " << (*v.is_minimum ? "true" : "false") << "\n";
  }
  return verdict ? 0 : 1;
}

int run_scan(Context& ctx, const std::string& mode, const std::string& members,
             unsigned family_order, unsigned witness_n, unsigned long long max_order,
             unsigned long long census_order, bool as_json) {
  const Catalog& cat = ctx.catalog();
  if (mode == "minimal") {
    ParsedFamily fam = parse_family(members, family_order, ctx);
    auto refs = find_minimal_covers(fam.spec, cat, max_order);
    json arr = json::array();
    for (const auto& r : refs) {
      arr.push_back(json::array({r.order, r.index}));
      if (!as_json) {
        const CatalogEntry* e = cat.find(r.order, r.index);
        std::cout << "minimal cover: cat:" << r.order << "." << r.index;
        if (e && !e->label.empty()) std::cout << " (" << e->label << ")";
        std::cout << "\n";
      }
    }
    if (as_json)
      std::cout << json{{"query", "scan-minimal"}, {"max_order", max_order},
                        {"covers", arr}}
                       .dump()
                << "\n";
    else
      std::cout << "total: " << refs.size() << "\n";
    return 0;
  }
  if (mode == "witness") {
    if (witness_n == 0) throw InvalidParameter("--witness <n> is required");
    auto refs = find_witnesses(witness_n, cat, max_order);
    json arr = json::array();
    for (const auto& r : refs) {
      arr.push_back(json::array({r.order, r.index}));
      if (!as_json) std::cout << "witness: cat:" << r.order << "." << r.index << "\n";
    }
    if (as_json)
      std::cout << json{{"query", "scan-witness"}, {"n", witness_n},
                        {"max_order", max_order}, {"witnesses", arr}}
                       .dump()
                << "\n";
    else
      std::cout << "total: " << refs.size() << "\n";
    return 0;
  }
  if (mode == "census") {
    if (family_order == 0 || census_order == 0)
      throw InvalidParameter("census mode needs --family and --order");
    ParsedFamily fam = parse_family("", family_order, ctx);
    CensusRow row = census_row(census_order, fam.spec, cat);
    if (as_json) {
      std::cout << json{{"query", "census"},
                        {"family", family_order},
                        {"order", row.order},
                        {"groups", row.groups},
                        {"covers", row.covers},
                        {"minimal", row.minimal},
                        {"strongly_minimal", row.strongly_minimal}}
                       .dump()
                << "\n";
    } else {
      std::cout << "order " << row.order << ": " << row.groups << " groups, "
                << row.covers << " covers, " << row.minimal << " minimal, "
                << row.strongly_minimal << " strongly minimal\n";
    }
    return 0;
  }
  throw InvalidParameter("unknown scan mode '" + mode + "'");
}

int run_abelian(const std::string& sub, const std::string& arg, unsigned p,
                const std::string& partitions, bool as_json) {
  if (sub == "f") {
    unsigned long long n = parse_number(arg, "n");
    unsigned long long v = dirichlet_f(n);
    if (as_json)
      std::cout << json{{"query", "abelian-f"}, {"n", n}, {"value", v}}.dump() << "\n";
    else
      std::cout << v << "\n";
    return 0;
  }
  if (sub == "A") {
    unsigned long long n = parse_number(arg, "n");
    unsigned long long v = min_abelian_cover_order(n);
    if (as_json)
      std::cout << json{{"query", "abelian-A"}, {"n", n}, {"value", v}}.dump() << "\n";
    else
      std::cout << v << "\n";
    return 0;
  }
  if (sub == "cover") {
    if (partitions.empty()) throw InvalidParameter("--partitions is required");
    std::vector<AbelianPGroup> family;
    std::istringstream ps(partitions);
    std::string one;
    while (std::getline(ps, one, ';')) {
      std::vector<unsigned> parts;
      std::istringstream cs(one);
      std::string num;
      while (std::getline(cs, num, ',')) parts.push_back(parse_number(num, "part"));
      family.push_back({p, Partition::of(std::move(parts))});
    }
    AbelianPGroup cover = min_abelian_p_cover(family);
    if (as_json) {
      json parts = json::array();
      for (unsigned v : cover.partition.parts) parts.push_back(v);
      std::cout << json{{"query", "abelian-cover"}, {"p", p}, {"partition", parts},
                        {"order", cover.order()}}
                       .dump()
                << "\n";
    } else {
      for (std::size_t i = 0; i < cover.partition.parts.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << cover.partition.parts[i];
      }
      std::cout << "\n";
    }
    return 0;
  }
  throw InvalidParameter("unknown abelian subcommand '" + sub + "'");
}

// ---- named reports (plain text with a trailing JSON line) ----

json report_census_8covers(Context& ctx, std::ostream& out) {
  ParsedFamily fam = parse_family("", 8, ctx);
  json rows = json::array();
  out << "8-cover census\n";
  for (unsigned long long order : {32ull, 64ull}) {
    CensusRow row = census_row(order, fam.spec, ctx.catalog());
    out << "order " << row.order << ": " << row.groups << " groups, " << row.covers
        << " covers, " << row.minimal << " minimal, " << row.strongly_minimal
        << " strongly minimal\n";
    rows.push_back(json{{"order", row.order},
                        {"groups", row.groups},
                        {"covers", row.covers},
                        {"minimal", row.minimal},
                        {"strongly_minimal", row.strongly_minimal}});
  }
  return json{{"report", "census-8covers"}, {"rows", rows}};
}

json report_fermat(Context& ctx, unsigned r, std::ostream& out) {
  if (r != 3 && r != 5) throw InvalidParameter("fermat report supports r = 3 or 5");
  FamilySpec fam = FamilySpec::of({cyclic(2), cyclic(r)});
  unsigned long long max_order = (r == 3) ? 48 : 80;
  auto refs = find_minimal_covers(fam, ctx.catalog(), max_order);
  out << "minimal {Z2, Z" << r << "}-covers up to order " << max_order << "\n";
  json arr = json::array();
  for (const auto& ref : refs) {
    out << "  cat:" << ref.order << "." << ref.index << "\n";
    arr.push_back(json::array({ref.order, ref.index}));
  }
  return json{{"report", "fermat"}, {"r", r}, {"max_order", max_order},
              {"minimal_covers", arr}};
}

json report_order60(Context& ctx, std::ostream& out) {
  const Catalog& cat = ctx.catalog();
  FamilySpec sylows = FamilySpec::of({cyclic(3), elementary_abelian(2, 2), cyclic(5)});
  json covers = json::array();
  std::size_t count = 0;
  for (const CatalogEntry* e : cat.query(60)) {
    if (is_cover(e->realize(), sylows)) {
      covers.push_back(e->index);
      ++count;
    }
  }
  out << count << " of the " << cat.query(60).size()
      << " groups of order 60 cover {Z3, Z2^2, Z5}\n";

  FamilySpec a4d10 = FamilySpec::of({alt(4), dihedral(10)});
  auto mins = find_minimum_covers(a4d10, cat, 60);
  json minrefs = json::array();
  for (const auto& ref : mins) minrefs.push_back(json::array({ref.order, ref.index}));
  out << mins.size() << " minimum cover(s) of {A4, D10} at order 60\n";
  return json{{"report", "order60"},
              {"sylow_family_covers", covers},
              {"minimum_covers_a4_d10", minrefs}};
}

int run_report(Context& ctx, const std::string& id, unsigned r,
               const std::string& out_path, const std::string& expect_path) {
  std::ostringstream text;
  json j;
  if (id == "census-8covers")
    j = report_census_8covers(ctx, text);
  else if (id == "fermat")
    j = report_fermat(ctx, r, text);
  else if (id == "order60")
    j = report_order60(ctx, text);
  else
    throw InvalidParameter("unknown report '" + id + "'");

  std::string payload = text.str() + j.dump() + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write report to " + out_path);
    f << payload;
  }
  std::cout << payload;

  std::string expect = expect_path;
  if (expect.empty()) {
    std::string candidate = ctx.data_dir + "/expected/" + id +
                            (id == "fermat" ? "-" + std::to_string(r) : "") + ".json";
    if (std::filesystem::exists(candidate)) expect = candidate;
  }
  if (!expect.empty()) {
    std::ifstream f(expect);
    if (!f) throw Error("cannot read expectations file " + expect);
    json want = json::parse(f);
    if (want != j) {
      std::cerr << "report does not match " << expect << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover calculus for finite groups"};
  app.require_subcommand(1);

  Context ctx;
  unsigned jobs = 1;
  app.add_option("--data", ctx.data_dir, "fixture directory (default $COVERFORGE_DATA)");
  app.add_option("--jobs", jobs, "worker count (affects wall time only)");

  // cover
  std::string cover_expr, cover_members;
  unsigned cover_family = 0;
  bool cover_minimal = false, cover_co_minimal = false, cover_minimum = false;
  bool cover_json = false;
  auto* cover_cmd = app.add_subcommand("cover", "decide cover predicates");
  cover_cmd->add_option("expr", cover_expr, "group expression")->required();
  cover_cmd->add_option("--members", cover_members, "comma-separated member expressions");
  cover_cmd->add_option("--family", cover_family, "all catalog groups of this order");
  cover_cmd->add_flag("--minimal", cover_minimal, "require minimality");
  cover_cmd->add_flag("--co-minimal", cover_co_minimal, "require co-minimality");
  cover_cmd->add_flag("--minimum", cover_minimum, "require minimum order (needs authority)");
  cover_cmd->add_flag("--json", cover_json, "JSON output");
  cover_cmd->add_option("--authority", ctx.authority_path, "catalog file");

  // scan
  std::string scan_mode = "minimal", scan_members;
  unsigned scan_family = 0, scan_witness = 0;
  unsigned long long scan_max = 0, scan_order = 0;
  bool scan_json = false;
  auto* scan_cmd = app.add_subcommand("scan", "catalog scans");
  scan_cmd->add_option("--mode", scan_mode, "minimal | witness | census");
  scan_cmd->add_option("--members", scan_members, "family member expressions");
  scan_cmd->add_option("--family", scan_family, "family = all groups of this order");
  scan_cmd->add_option("--witness", scan_witness, "witness parameter n");
  scan_cmd->add_option("--max-order", scan_max, "scan bound");
  scan_cmd->add_option("--order", scan_order, "census row order");
  scan_cmd->add_flag("--json", scan_json, "JSON output");
  scan_cmd->add_option("--authority", ctx.authority_path, "catalog file");

  // abelian
  std::string ab_sub, ab_arg, ab_partitions;
  unsigned ab_p = 2;
  bool ab_json = false;
  auto* ab_cmd = app.add_subcommand("abelian", "partition calculus");
  ab_cmd->add_option("sub", ab_sub, "f | A | cover")->required();
  ab_cmd->add_option("arg", ab_arg, "numeric argument for f and A");
  ab_cmd->add_option("--p", ab_p, "prime for cover");
  ab_cmd->add_option("--partitions", ab_partitions,
                     "semicolon-separated partitions, comma-separated parts");
  ab_cmd->add_flag("--json", ab_json, "JSON output");

  // report
  std::string report_id, report_out, report_expect;
  unsigned report_r = 3;
  auto* rep_cmd = app.add_subcommand("report", "reproduce a shipped result table");
  rep_cmd->add_option("id", report_id, "census-8covers | fermat | order60")->required();
  rep_cmd->add_option("--r", report_r, "prime for the fermat report");
  rep_cmd->add_option("--out", report_out, "write the report to this file");
  rep_cmd->add_option("--expect", report_expect, "expectations file (JSON)");
  rep_cmd->add_option("--authority", ctx.authority_path, "catalog file");

  CLI11_PARSE(app, argc, argv);
  (void)jobs;

  try {
    if (cover_cmd->parsed())
      return run_cover(ctx, cover_expr, cover_members, cover_family, cover_minimal,
                       cover_co_minimal, cover_minimum, cover_json);
    if (scan_cmd->parsed())
      return run_scan(ctx, scan_mode, scan_members, scan_family, scan_witness, scan_max,
                      scan_order, scan_json);
    if (ab_cmd->parsed())
      return run_abelian(ab_sub, ab_arg, ab_p, ab_partitions, ab_json);
    if (rep_cmd->parsed())
      return run_report(ctx, report_id, report_r, report_out, report_expect);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
