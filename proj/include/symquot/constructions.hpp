#pragma once

#include <optional>
#include <string>

#include "symquot/designs.hpp"
#include "symquot/graphs.hpp"
#include "symquot/groups_catalog.hpp"
#include "symquot/partition.hpp"
#include "symquot/permgroup.hpp"

namespace symquot {

struct Provenance {
  std::string tag;            // normalized construction tag
  std::string declared_case;  // theorem case the construction is expected to land in, may be empty
};

struct Triple {
  Graph graph;
  PermutationGroup group;
  Partition partition;
  Provenance provenance;
};

enum class PairRule { SameSecond, AllDistinct, AffinePlane, AffineNonPlane, DesignIn, DesignOut };
enum class FlagRule { SameBlock, DisjointBlocks, CommonTwoPoints, OppositeNonComplement, M22Disjoint, M22MeetTwo };

std::string to_string(PairRule r);
std::string to_string(FlagRule r);

// Designs addressable from tags.
struct DesignSpec {
  enum class Kind { AGHyperplanes, AGPlanes, Steiner22, Hadamard12 };
  Kind kind = Kind::Steiner22;
  std::uint32_t d = 0;  // dimension for the affine designs

  std::string to_string() const;  // "ag:d=3", "ag2:d=4", "s22", "h12"
  IncidenceStructure build() const;
  bool operator==(const DesignSpec&) const = default;
};

// CR(q; d, s): orbital graph of (inf 0, 1 d) under PGL(2,q).<sigma^s> acting on ordered pairs.
Triple cross_ratio_graph(std::uint32_t q, std::uint32_t d_index, std::uint32_t s);
// TCR(q; d, s): the same orbital under M(s/2, q). Throws NotSelfPairedError when d-1 is a non-square.
Triple twisted_cross_ratio_graph(std::uint32_t q, std::uint32_t d_index, std::uint32_t s);

// Vertices are ordered pairs of distinct labels; B_i holds the pairs with first label i.
// `design` is required for DesignIn / DesignOut and must live on the group's points.
Triple pair_graph(const PermutationGroup& g, PairRule rule, const IncidenceStructure* design = nullptr,
                  Provenance prov = {});
Triple pair_graph(const GroupTag& g, PairRule rule, std::optional<DesignSpec> design = std::nullopt);

// Vertices are flags (P, beta), grouped by point.
Triple flag_graph(const IncidenceStructure& d, const PermutationGroup& g, FlagRule rule, Provenance prov = {});
Triple flag_graph(const DesignSpec& d, const GroupTag& g, FlagRule rule);

// Complements adjacency inside every rectangle X_ji x X_ij. Throws DomainError when k < 2 or
// the non-edges of one rectangle are not a single orbit of the two-block stabilizer.
Triple star_transform(const Triple& t);

// ij adjacent to ji only. Throws DomainError unless g is 3-transitive.
Triple matching_graph(const PermutationGroup& g, Provenance prov = {});
Triple matching_graph(const GroupTag& g);

// Rule graphs alone, on canonical vertex orders (pairs by pair_index, flags by flags()).
Graph pair_rule_graph(std::size_t m, PairRule rule, const IncidenceStructure* design = nullptr);
Graph flag_rule_graph(const IncidenceStructure& d, FlagRule rule);

// Coordinate-wise actions.
PermutationGroup pair_action(const PermutationGroup& g);
PermutationGroup flag_action(const PermutationGroup& g, const IncidenceStructure& d, const std::vector<Flag>& fl);

}  // namespace symquot
