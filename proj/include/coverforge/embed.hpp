#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/group.hpp"
#include "coverforge/limits.hpp"

namespace coverforge {

// Generator tuple of a source group paired with images in a target group;
// verifiable without search.
struct EmbeddingCertificate {
  std::vector<Perm> source_generators;
  std::vector<Perm> images;
};

// Cheap necessary conditions for isomorphism, used as a search screen.
struct IsoInvariants {
  unsigned long long order = 1;
  std::map<unsigned long long, std::size_t> order_spectrum;
  std::map<unsigned, std::vector<unsigned>> abelianization;
  unsigned long long center_order = 1;
  std::vector<unsigned long long> derived_series_orders;

  bool operator==(const IsoInvariants&) const = default;
};

IsoInvariants iso_invariants(const Group& g, const Limits& limits = {});

// True iff the subgroup of H x G generated by the paired tuples has order
// |H| (a well-defined homomorphism) and the images generate a subgroup of
// order |H| (injectivity). Throws NotGenerating when the source tuple does
// not generate H.
bool verify_certificate(const Group& h, const Group& g,
                        const EmbeddingCertificate& cert);

// Deterministic generator-image backtracking. A nullopt return is
// authoritative (no embedding exists); exceeding the node budget raises
// BudgetExceeded instead.
std::optional<EmbeddingCertificate> find_embedding(
    const Group& h, const Group& g, unsigned long long budget = 50'000'000,
    const Limits& limits = {});

bool is_isomorphic(const Group& a, const Group& b, const Limits& limits = {});

// Strategy: (i) subgroup scan through an order-capped lattice when |G| is
// within the lattice limit, (ii) full generator-image search when |G| is
// within the element limit, (iii) NeedsCertificate otherwise.
bool embeds(const Group& h, const Group& g, const Limits& limits = {});

// Same strategy selection as embeds(), returning the witness certificate.
std::optional<EmbeddingCertificate> find_embedding_auto(const Group& h, const Group& g,
                                                        const Limits& limits = {});

// Certificate (de)serialization in the catalog text conventions.
std::string serialize_certificate(const EmbeddingCertificate& cert);
EmbeddingCertificate parse_certificate(const std::string& text);
EmbeddingCertificate load_certificate(const std::string& path);

}  // namespace coverforge
