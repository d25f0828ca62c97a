#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "symquot/constructions.hpp"

namespace symquot {

// Syntax error in a construction tag; `position` is the 0-based character offset.
class TagParseError : public std::invalid_argument {
 public:
  TagParseError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ConstructionRequest {
  enum class Kind { CrossRatio, TwistedCrossRatio, Pair, Flag, Matching, Star };
  Kind kind = Kind::CrossRatio;
  std::uint32_t q = 0, d = 0, s = 0;  // cr / tcr
  GroupTag group;                     // pair / flag / match
  std::optional<DesignSpec> design;   // pair (optional), flag (required)
  PairRule pair_rule = PairRule::SameSecond;
  FlagRule flag_rule = FlagRule::SameBlock;
  std::shared_ptr<const ConstructionRequest> inner;  // star

  // Normalized tag; parse_tag(r.to_string()).to_string() == r.to_string().
  std::string to_string() const;
};

// Grammar:
//   cr:q=<int>:d=<elem-index>:s=<int>      tcr:q=<int>:d=<elem-index>:s=<int>
//   pair:group=<group>[:design=<design>]:rule=<pair-rule>
//   flag:design=<design>:group=<group>:rule=<flag-rule>
//   match:group=<group>                    star:<tag>
// Groups: s<n>, a<n>, pgl2:q=<q>[:s=<s>], psl2:q=<q>, mgrp:q=<q>:s=<s>, agl:d=<d>, z24a7,
//         m11, m11on11, m12, m22, autm22, m23, m24.
// Designs: ag:d=<d> (hyperplanes), ag2:d=<d> (planes), s22, h12.
ConstructionRequest parse_tag(const std::string& tag);

// Throws DomainError for parameters the constructors reject.
Triple build(const ConstructionRequest& r);

}  // namespace symquot
