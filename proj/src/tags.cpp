#include "symquot/tags.hpp"

#include <charconv>
#include <vector>

#include "symquot/errors.hpp"

namespace symquot {

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> split(const std::string& s, std::size_t base) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ':') {
      out.push_back({s.substr(start, i - start), base + start});
      start = i + 1;
    }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t end) : toks_(std::move(toks)), end_(end) {}

  bool done() const { return i_ == toks_.size(); }
  std::size_t pos() const { return done() ? end_ : toks_[i_].pos; }
  const Token& peek() const { return toks_[i_]; }

  // Consume "key=value" and return value.
  std::string field(const std::string& key) {
    if (done()) throw TagParseError("missing field '" + key + "'", end_);
    const auto& t = toks_[i_];
    if (t.text.rfind(key + "=", 0) != 0) throw TagParseError("expected '" + key + "=', found '" + t.text + "'", t.pos);
    ++i_;
    return t.text.substr(key.size() + 1);
  }
  bool next_is(const std::string& key) const { return !done() && toks_[i_].text.rfind(key + "=", 0) == 0; }
  std::uint32_t number(const std::string& key) {
    const std::size_t p = pos();
    const auto v = field(key);
    return to_uint(v, p + key.size() + 1);
  }
  static std::uint32_t to_uint(const std::string& v, std::size_t p) {
    std::uint32_t x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) throw TagParseError("expected an integer", p);
    return x;
  }
  void finish() const {
    if (!done()) throw TagParseError("unexpected trailing field '" + toks_[i_].text + "'", toks_[i_].pos);
  }

  GroupTag group() {
    const std::size_t p = pos();
    const auto name = field("group");
    const std::size_t vp = p + 6;
    GroupTag g;
    auto degree_suffix = [&](GroupFamily fam) {
      g.family = fam;
      g.n = to_uint(name.substr(1), vp + 1);
    };
    if (name == "pgl2") {
      g.family = GroupFamily::PGL2;
      g.q = number("q");
      if (next_is("s")) {
        g.family = GroupFamily::PGammaLSub;
        g.s = number("s");
        // sigma^n is the identity, so s = n is plain PGL(2,q).
        if (const auto pp = prime_power(g.q); pp && g.s == pp->second) {
          g.family = GroupFamily::PGL2;
          g.s = 0;
        }
      }
    } else if (name == "psl2") {
      g.family = GroupFamily::PSL2;
      g.q = number("q");
    } else if (name == "mgrp") {
      g.family = GroupFamily::MGroup;
      g.q = number("q");
      g.s = number("s");
    } else if (name == "agl") {
      g.family = GroupFamily::AGL;
      g.d = number("d");
    } else if (name == "z24a7") {
      g.family = GroupFamily::Z24A7;
    } else if (name == "m11") {
      g.family = GroupFamily::M11on12;
    } else if (name == "m11on11") {
      g.family = GroupFamily::M11on11;
    } else if (name == "m12") {
      g.family = GroupFamily::M12;
    } else if (name == "m22") {
      g.family = GroupFamily::M22;
    } else if (name == "autm22") {
      g.family = GroupFamily::AutM22;
    } else if (name == "m23") {
      g.family = GroupFamily::M23;
    } else if (name == "m24") {
      g.family = GroupFamily::M24;
    } else if (name.size() > 1 && name[0] == 's') {
      degree_suffix(GroupFamily::Sym);
    } else if (name.size() > 1 && name[0] == 'a') {
      degree_suffix(GroupFamily::Alt);
    } else {
      throw TagParseError("unknown group '" + name + "'", vp);
    }
    return g;
  }

  DesignSpec design() {
    const std::size_t p = pos();
    const auto name = field("design");
    DesignSpec d;
    if (name == "ag") {
      d.kind = DesignSpec::Kind::AGHyperplanes;
      d.d = number("d");
    } else if (name == "ag2") {
      d.kind = DesignSpec::Kind::AGPlanes;
      d.d = number("d");
    } else if (name == "s22") {
      d.kind = DesignSpec::Kind::Steiner22;
    } else if (name == "h12") {
      d.kind = DesignSpec::Kind::Hadamard12;
    } else {
      throw TagParseError("unknown design '" + name + "'", p + 7);
    }
    return d;
  }

  template <class Rule>
  Rule rule(std::initializer_list<Rule> all) {
    const std::size_t p = pos();
    const auto name = field("rule");
    for (Rule r : all)
      if (symquot::to_string(r) == name) return r;
    throw TagParseError("unknown rule '" + name + "'", p + 5);
  }

 private:
  std::vector<Token> toks_;
  std::size_t end_;
  std::size_t i_ = 0;
};

ConstructionRequest parse_at(const std::string& tag, std::size_t base) {
  const auto colon = tag.find(':');
  const std::string kind = tag.substr(0, colon);
  ConstructionRequest r;
  if (kind == "star") {
    if (colon == std::string::npos) throw TagParseError("star needs an inner tag", base + tag.size());
    r.kind = ConstructionRequest::Kind::Star;
    r.inner = std::make_shared<const ConstructionRequest>(parse_at(tag.substr(colon + 1), base + colon + 1));
    return r;
  }
  const std::string rest = colon == std::string::npos ? "" : tag.substr(colon + 1);
  Parser p(rest.empty() ? std::vector<Token>{} : split(rest, base + colon + 1), base + tag.size());
  if (kind == "cr" || kind == "tcr") {
    r.kind = kind == "cr" ? ConstructionRequest::Kind::CrossRatio : ConstructionRequest::Kind::TwistedCrossRatio;
    r.q = p.number("q");
    r.d = p.number("d");
    r.s = p.number("s");
  } else if (kind == "pair") {
    r.kind = ConstructionRequest::Kind::Pair;
    r.group = p.group();
    if (p.next_is("design")) r.design = p.design();
    r.pair_rule = p.rule({PairRule::SameSecond, PairRule::AllDistinct, PairRule::AffinePlane,
                          PairRule::AffineNonPlane, PairRule::DesignIn, PairRule::DesignOut});
  } else if (kind == "flag") {
    r.kind = ConstructionRequest::Kind::Flag;
    r.design = p.design();
    r.group = p.group();
    r.flag_rule = p.rule({FlagRule::SameBlock, FlagRule::DisjointBlocks, FlagRule::CommonTwoPoints,
                          FlagRule::OppositeNonComplement, FlagRule::M22Disjoint, FlagRule::M22MeetTwo});
  } else if (kind == "match") {
    r.kind = ConstructionRequest::Kind::Matching;
    r.group = p.group();
  } else {
    throw TagParseError("unknown construction '" + kind + "'", base);
  }
  p.finish();
  return r;
}

}  // namespace

ConstructionRequest parse_tag(const std::string& tag) { return parse_at(tag, 0); }

std::string ConstructionRequest::to_string() const {
  auto S = [](std::uint32_t x) { return std::to_string(x); };
  switch (kind) {
    case Kind::CrossRatio: return "cr:q=" + S(q) + ":d=" + S(d) + ":s=" + S(s);
    case Kind::TwistedCrossRatio: return "tcr:q=" + S(q) + ":d=" + S(d) + ":s=" + S(s);
    case Kind::Pair:
      return "pair:group=" + group.to_string() + (design ? ":design=" + design->to_string() : "") +
             ":rule=" + symquot::to_string(pair_rule);
    case Kind::Flag:
      return "flag:design=" + design->to_string() + ":group=" + group.to_string() +
             ":rule=" + symquot::to_string(flag_rule);
    case Kind::Matching: return "match:group=" + group.to_string();
    case Kind::Star: return "star:" + inner->to_string();
  }
  return "?";
}

Triple build(const ConstructionRequest& r) {
  switch (r.kind) {
    case ConstructionRequest::Kind::CrossRatio: return cross_ratio_graph(r.q, r.d, r.s);
    case ConstructionRequest::Kind::TwistedCrossRatio: return twisted_cross_ratio_graph(r.q, r.d, r.s);
    case ConstructionRequest::Kind::Pair: return pair_graph(r.group, r.pair_rule, r.design);
    case ConstructionRequest::Kind::Flag: return flag_graph(*r.design, r.group, r.flag_rule);
    case ConstructionRequest::Kind::Matching: return matching_graph(r.group);
    case ConstructionRequest::Kind::Star: return star_transform(build(*r.inner));
  }
  throw DomainError("unknown construction");
}

}  // namespace symquot
