#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symquot/ffield.hpp"
#include "symquot/permgroup.hpp"

namespace symquot {

// z -> (a sigma^e(z) + b) / (c sigma^e(z) + d) on PG(1,q), stored with its first
// nonzero coefficient scaled to 1.
class MoebiusTransformation {
 public:
  // Throws DomainError when ad - bc = 0.
  MoebiusTransformation(const FiniteField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                        std::uint32_t e = 0);
  ProjPoint apply(const ProjPoint& z) const;
  // Permutation of the canonical labels (0 = infinity, 1 + x = x).
  Permutation as_permutation() const;
  std::array<std::uint32_t, 4> coefficients() const { return {a_, b_, c_, d_}; }
  std::uint32_t frobenius_exponent() const { return e_; }

 private:
  FiniteField f_;
  std::uint32_t a_, b_, c_, d_, e_;
};

inline ProjPoint moebius_apply(const MoebiusTransformation& t, const ProjPoint& z) { return t.apply(z); }

enum class GroupFamily {
  Sym, Alt, PGL2, PSL2, PGammaLSub, MGroup, AGL, Z24A7,
  M11on12, M11on11, M12, M22, AutM22, M23, M24,
};

struct GroupTag {
  GroupFamily family = GroupFamily::Sym;
  std::uint32_t n = 0;  // degree for Sym/Alt
  std::uint32_t q = 0;  // field order for the projective families
  std::uint32_t s = 0;  // Frobenius parameter for PGammaLSub and MGroup
  std::uint32_t d = 0;  // dimension for AGL

  // Canonical tag text, e.g. "s5", "pgl2:q=9:s=1", "mgrp:q=9:s=1", "agl:d=3", "m22".
  std::string to_string() const;
  std::uint32_t degree() const;
  bool operator==(const GroupTag&) const = default;
};

struct CatalogGroup {
  GroupTag tag;
  PermutationGroup group;
};

PermutationGroup pgl2(std::uint32_t q);
PermutationGroup psl2(std::uint32_t q);
// PGL(2,q) extended by sigma^s; s must divide n.
PermutationGroup pgammal_subgroup(std::uint32_t q, std::uint32_t s);
// <PSL(2,q), z -> a z^(p^s)> for p odd, n even, s | n/2.
PermutationGroup m_group(std::uint32_t s, std::uint32_t q);
PermutationGroup agl(std::uint32_t d);
PermutationGroup z24_a7();
PermutationGroup mathieu(GroupFamily which);
PermutationGroup sym_alt(std::uint32_t n, bool alternating);

// Every 3-transitive subgroup of PGammaL(2,q).
std::vector<CatalogGroup> three_transitive_pgammal_list(std::uint32_t q);

// Build (and cache) a group from its tag. Throws DomainError on invalid parameters.
const PermutationGroup& catalog_group(const GroupTag& tag);

// Declared (order, transitivity degree) for a tag.
std::pair<std::uint64_t, int> declared_invariants(const GroupTag& tag);

// Deterministic search for two matrices generating A7 inside GL(4,2).
// Matrices are encoded column-wise: bits 4j..4j+3 hold column j.
std::pair<std::uint16_t, std::uint16_t> find_a7_in_gl42();
// The pair embedded in the catalog (also stored in data/z24_a7.json).
std::pair<std::uint16_t, std::uint16_t> embedded_a7_generators();
Permutation gl42_action(std::uint16_t matrix);

}  // namespace symquot
