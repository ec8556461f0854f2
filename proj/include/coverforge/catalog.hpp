#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

// One small-group record: generators as 0-based image arrays.
struct CatalogEntry {
  unsigned long long order = 0;
  unsigned index = 0;  // 1-based within the order
  unsigned degree = 0;
  std::vector<std::vector<Point>> generators;
  std::string label;

  Group realize() const;

 private:
  mutable std::shared_ptr<Group> realized_;
};

class Catalog {
 public:
  void add(CatalogEntry entry);          // ParseError on duplicate (order, index)
  void mark_complete(unsigned long long order);

  bool covers(unsigned long long order) const { return coverage_.count(order) > 0; }
  const std::set<unsigned long long>& coverage() const { return coverage_; }

  const CatalogEntry* find(unsigned long long order, unsigned index) const;

  // Entries of one order in (order, index) sequence; AuthorityGap when the
  // order is not asserted complete.
  std::vector<const CatalogEntry*> query(unsigned long long order) const;

  // Entries of every order divisible by n up to max_order, in deterministic
  // (order, index) sequence; AuthorityGap if any such order is uncovered.
  std::vector<const CatalogEntry*> query_divisible(unsigned long long n,
                                                   unsigned long long max_order) const;

  const std::map<std::pair<unsigned long long, unsigned>, CatalogEntry>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<unsigned long long, unsigned>, CatalogEntry> entries_;
  std::set<unsigned long long> coverage_;
};

// Strict parse; unknown fields are rejected. Every entry is realized and
// order-checked on load.
Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& text);

std::string serialize_catalog(const Catalog& c);
void save_catalog(const Catalog& c, const std::string& path);

// Expected group counts per order ("order <o> count <n>" lines).
std::map<unsigned long long, std::size_t> load_expected_counts(const std::string& path);

struct CatalogOrderCheck {
  unsigned long long order = 0;
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool count_ok = false;
  bool noniso_checked = false;
  bool pairwise_noniso = true;
};

struct CatalogVerifyReport {
  std::vector<CatalogOrderCheck> orders;
  bool all_ok() const;
};

// Count verification plus pairwise non-isomorphism for orders up to
// noniso_max_order (invariant screen, then backtracking).
CatalogVerifyReport verify_catalog(
    const Catalog& c, const std::map<unsigned long long, std::size_t>& expected_counts,
    unsigned long long noniso_max_order = 64, const Limits& limits = {});

}  // namespace coverforge
