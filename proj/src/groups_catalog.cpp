#include "symquot/groups_catalog.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "catalog_data.hpp"
#include "symquot/designs.hpp"
#include "symquot/errors.hpp"

namespace symquot {

MoebiusTransformation::MoebiusTransformation(const FiniteField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                             std::uint32_t d, std::uint32_t e)
    : f_(f), a_(a), b_(b), c_(c), d_(d), e_(e % f.degree()) {
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) throw DomainError("singular Moebius transformation");
  for (auto x : {a_, b_, c_, d_})
    if (x) {
      const auto inv = f.inv(x);
      a_ = f.mul(a_, inv);
      b_ = f.mul(b_, inv);
      c_ = f.mul(c_, inv);
      d_ = f.mul(d_, inv);
      break;
    }
}

ProjPoint MoebiusTransformation::apply(const ProjPoint& z) const {
  if (z.is_infinity()) return c_ == 0 ? ProjPoint::infinity() : ProjPoint::finite(f_.mul(a_, f_.inv(c_)));
  const auto w = f_.frob(z.value(), e_);
  const auto den = f_.add(f_.mul(c_, w), d_);
  if (den == 0) return ProjPoint::infinity();
  return ProjPoint::finite(f_.mul(f_.add(f_.mul(a_, w), b_), f_.inv(den)));
}

Permutation MoebiusTransformation::as_permutation() const {
  std::vector<Point> im(f_.order() + 1);
  for (Point l = 0; l < im.size(); ++l) im[l] = apply(ProjPoint::from_label(l)).label();
  return Permutation(std::move(im));
}

namespace {

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / i) throw DomainError("group order exceeds 64 bits");
    r *= i;
  }
  return r;
}

FiniteField field_for(std::uint32_t q) {
  if (q < 3) throw DomainError("projective groups need q >= 3");
  return FiniteField::of_order(q);
}

// Transitivity degree of a group of the given order on m points when it is 3-transitive
// and not a full symmetric or alternating group.
int projective_transitivity(std::uint64_t order, std::uint32_t m, int otherwise) {
  if (m > 20) return otherwise;
  if (order == factorial(m)) return static_cast<int>(m);
  if (order * 2 == factorial(m)) return static_cast<int>(m) - 2;
  return otherwise;
}

void validate(const PermutationGroup& g, const GroupTag& tag) {
  const auto [order, trans] = declared_invariants(tag);
  if (g.order() != order)
    throw ValidationError(tag.to_string() + ": order " + std::to_string(g.order()) + " differs from declared " +
                          std::to_string(order));
  const int got = transitivity_degree(g);
  if (got != trans)
    throw ValidationError(tag.to_string() + ": transitivity degree " + std::to_string(got) + " differs from declared " +
                          std::to_string(trans));
}

std::vector<Permutation> pgl_generators(const FiniteField& f) {
  const auto a = f.primitive_element().index();
  return {MoebiusTransformation(f, 1, 1, 0, 1).as_permutation(), MoebiusTransformation(f, a, 0, 0, 1).as_permutation(),
          MoebiusTransformation(f, 0, 1, 1, 0).as_permutation()};
}

std::vector<Permutation> psl_generators(const FiniteField& f) {
  const auto a = f.primitive_element().index();
  return {MoebiusTransformation(f, 1, 1, 0, 1).as_permutation(),
          MoebiusTransformation(f, f.mul(a, a), 0, 0, 1).as_permutation(),
          MoebiusTransformation(f, 0, f.neg(1), 1, 0).as_permutation()};
}

PermutationGroup make_checked(std::size_t degree, std::vector<Permutation> gens, const GroupTag& tag) {
  PermutationGroup g(degree, std::move(gens));
  validate(g, tag);
  return g;
}

GroupTag projective_tag(GroupFamily fam, std::uint32_t q, std::uint32_t s = 0) {
  GroupTag t;
  t.family = fam;
  t.q = q;
  t.s = s;
  return t;
}

}  // namespace

std::string GroupTag::to_string() const {
  auto S = [](std::uint32_t x) { return std::to_string(x); };
  switch (family) {
    case GroupFamily::Sym: return "s" + S(n);
    case GroupFamily::Alt: return "a" + S(n);
    case GroupFamily::PGL2: return "pgl2:q=" + S(q);
    case GroupFamily::PSL2: return "psl2:q=" + S(q);
    case GroupFamily::PGammaLSub: return "pgl2:q=" + S(q) + ":s=" + S(s);
    case GroupFamily::MGroup: return "mgrp:q=" + S(q) + ":s=" + S(s);
    case GroupFamily::AGL: return "agl:d=" + S(d);
    case GroupFamily::Z24A7: return "z24a7";
    case GroupFamily::M11on12: return "m11";
    case GroupFamily::M11on11: return "m11on11";
    case GroupFamily::M12: return "m12";
    case GroupFamily::M22: return "m22";
    case GroupFamily::AutM22: return "autm22";
    case GroupFamily::M23: return "m23";
    case GroupFamily::M24: return "m24";
  }
  return "?";
}

std::uint32_t GroupTag::degree() const {
  switch (family) {
    case GroupFamily::Sym:
    case GroupFamily::Alt: return n;
    case GroupFamily::PGL2:
    case GroupFamily::PSL2:
    case GroupFamily::PGammaLSub:
    case GroupFamily::MGroup: return q + 1;
    case GroupFamily::AGL: return 1u << d;
    case GroupFamily::Z24A7: return 16;
    case GroupFamily::M11on12: return 12;
    case GroupFamily::M11on11: return 11;
    case GroupFamily::M12: return 12;
    case GroupFamily::M22:
    case GroupFamily::AutM22: return 22;
    case GroupFamily::M23: return 23;
    case GroupFamily::M24: return 24;
  }
  return 0;
}

std::pair<std::uint64_t, int> declared_invariants(const GroupTag& t) {
  switch (t.family) {
    case GroupFamily::Sym: return {factorial(t.n), static_cast<int>(t.n)};
    case GroupFamily::Alt:
      if (t.n < 3) return {1, t.n == 2 ? 0 : 1};
      return {factorial(t.n) / 2, static_cast<int>(t.n) - 2};
    case GroupFamily::PGL2: {
      const std::uint64_t o = std::uint64_t(t.q + 1) * t.q * (t.q - 1);
      return {o, projective_transitivity(o, t.q + 1, 3)};
    }
    case GroupFamily::PSL2: {
      const std::uint64_t o = std::uint64_t(t.q + 1) * t.q * (t.q - 1) / (t.q % 2 ? 2 : 1);
      return {o, t.q % 2 ? 2 : projective_transitivity(o, t.q + 1, 3)};
    }
    case GroupFamily::PGammaLSub: {
      const auto n = prime_power(t.q)->second;
      const std::uint64_t o = std::uint64_t(t.q + 1) * t.q * (t.q - 1) * (n / t.s);
      return {o, projective_transitivity(o, t.q + 1, 3)};
    }
    case GroupFamily::MGroup: {
      const auto n = prime_power(t.q)->second;
      return {std::uint64_t(t.q + 1) * t.q * (t.q - 1) * n / (2 * t.s), 3};
    }
    case GroupFamily::AGL: {
      std::uint64_t o = 1ull << t.d;
      for (std::uint32_t i = 0; i < t.d; ++i) o *= (1ull << t.d) - (1ull << i);
      return {o, t.d == 2 ? 4 : 3};
    }
    case GroupFamily::Z24A7: return {40320, 3};
    case GroupFamily::M11on12: return {7920, 3};
    case GroupFamily::M11on11: return {7920, 4};
    case GroupFamily::M12: return {95040, 5};
    case GroupFamily::M22: return {443520, 3};
    case GroupFamily::AutM22: return {887040, 3};
    case GroupFamily::M23: return {10200960, 4};
    case GroupFamily::M24: return {244823040, 5};
  }
  return {0, 0};
}

PermutationGroup pgl2(std::uint32_t q) {
  const auto f = field_for(q);
  auto g = make_checked(q + 1, pgl_generators(f), projective_tag(GroupFamily::PGL2, q));
  if (stabilizer(g, {0, 1, 2}).order() != 1) throw ValidationError("PGL(2,q) is not sharply 3-transitive");
  return g;
}

PermutationGroup psl2(std::uint32_t q) {
  const auto f = field_for(q);
  if (q % 2 == 0) return pgl2(q);
  return make_checked(q + 1, psl_generators(f), projective_tag(GroupFamily::PSL2, q));
}

PermutationGroup pgammal_subgroup(std::uint32_t q, std::uint32_t s) {
  const auto f = field_for(q);
  const auto n = f.degree();
  if (s == 0 || n % s) throw DomainError("s must divide n");
  auto gens = pgl_generators(f);
  if (s < n) gens.push_back(MoebiusTransformation(f, 1, 0, 0, 1, s).as_permutation());
  return make_checked(q + 1, std::move(gens), projective_tag(GroupFamily::PGammaLSub, q, s));
}

PermutationGroup m_group(std::uint32_t s, std::uint32_t q) {
  const auto f = field_for(q);
  const auto n = f.degree();
  if (f.characteristic() == 2 || n % 2 || s == 0 || (n / 2) % s)
    throw DomainError("M(s,q) needs odd p, even n and s dividing n/2");
  auto gens = psl_generators(f);
  gens.push_back(MoebiusTransformation(f, f.primitive_element().index(), 0, 0, 1, s).as_permutation());
  auto g = make_checked(q + 1, std::move(gens), projective_tag(GroupFamily::MGroup, q, s));
  if (g.contains(MoebiusTransformation(f, 1, 0, 0, 1, s).as_permutation()))
    throw ValidationError("M(s,q) contains sigma^s");
  return g;
}

PermutationGroup agl(std::uint32_t d) {
  if (d < 2 || d > 6) throw DomainError("AGL(d,2) needs 2 <= d <= 6");
  const std::size_t n = std::size_t(1) << d;
  std::vector<Permutation> gens;
  std::vector<Point> im(n);
  for (Point x = 0; x < n; ++x) im[x] = x ^ 1u;
  gens.emplace_back(im);
  // Elementary transvections x_i += x_j for adjacent coordinates generate GL(d,2).
  for (std::uint32_t i = 0; i + 1 < d; ++i)
    for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
      for (Point x = 0; x < n; ++x) im[x] = x ^ (((x >> b) & 1u) << a);
      gens.emplace_back(im);
    }
  GroupTag t;
  t.family = GroupFamily::AGL;
  t.d = d;
  return make_checked(n, std::move(gens), t);
}

Permutation gl42_action(std::uint16_t m) {
  std::vector<Point> im(16);
  for (Point x = 0; x < 16; ++x) {
    Point y = 0;
    for (int j = 0; j < 4; ++j)
      if ((x >> j) & 1) y ^= (m >> (4 * j)) & 15u;
    im[x] = y;
  }
  return Permutation(std::move(im));
}

std::pair<std::uint16_t, std::uint16_t> find_a7_in_gl42() {
  std::vector<std::uint16_t> gl;
  for (std::uint32_t m = 0; m < 65536; ++m) {
    std::uint32_t seen = 0;
    for (Point x = 0; x < 16; ++x) {
      Point y = 0;
      for (int j = 0; j < 4; ++j)
        if ((x >> j) & 1) y ^= (m >> (4 * j)) & 15u;
      seen |= 1u << y;
    }
    if (seen == 0xFFFF) gl.push_back(static_cast<std::uint16_t>(m));
  }
  if (gl.size() != 20160) throw ValidationError("GL(4,2) enumeration is wrong");
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const auto a = gl42_action(gl[i]);
    if (a.is_identity()) continue;
    for (std::size_t j = i + 1; j < gl.size(); ++j) {
      PermutationGroup h(16, {a, gl42_action(gl[j])});
      if (h.order() == 2520) return {gl[i], gl[j]};
    }
  }
  throw ValidationError("no A7 found in GL(4,2)");
}

// Output of find_a7_in_gl42(), mirrored in data/z24_a7.json.
std::pair<std::uint16_t, std::uint16_t> embedded_a7_generators() { return {0x1248, 0x136c}; }

PermutationGroup z24_a7() {
  const auto [a, b] = embedded_a7_generators();
  std::vector<Point> t(16);
  for (Point x = 0; x < 16; ++x) t[x] = x ^ 1u;
  GroupTag tag;
  tag.family = GroupFamily::Z24A7;
  auto g = make_checked(16, {Permutation(t), gl42_action(a), gl42_action(b)}, tag);
  const auto& full = catalog_group(GroupTag{GroupFamily::AGL, 0, 0, 0, 4});
  for (const auto& s : g.generators())
    if (!full.contains(s)) throw ValidationError("2^4.A7 is not inside AGL(4,2)");
  return g;
}

PermutationGroup mathieu(GroupFamily which) {
  const std::vector<std::vector<Point>>* data = nullptr;
  switch (which) {
    case GroupFamily::M11on12: data = &data::kM11on12; break;
    case GroupFamily::M11on11: data = &data::kM11on11; break;
    case GroupFamily::M12: data = &data::kM12; break;
    case GroupFamily::M22: data = &data::kM22; break;
    case GroupFamily::AutM22: data = &data::kAutM22; break;
    case GroupFamily::M23: data = &data::kM23; break;
    case GroupFamily::M24: data = &data::kM24; break;
    default: throw DomainError("not a Mathieu group tag");
  }
  std::vector<Permutation> gens;
  for (const auto& im : *data) gens.emplace_back(im);
  GroupTag tag;
  tag.family = which;
  auto g = make_checked(tag.degree(), std::move(gens), tag);
  if (which == GroupFamily::M22 || which == GroupFamily::AutM22) {
    if (!preserves_design(steiner_3_22_6(), g)) throw ValidationError("M22 data does not preserve the Witt design");
  }
  if (which == GroupFamily::M11on12) {
    const auto d = design_3_12_6_2();
    if (!preserves_design(d, g)) throw ValidationError("M11 data does not preserve the 3-(12,6,2) design");
    std::vector<Permutation> on_blocks;
    for (const auto& s : g.generators()) on_blocks.push_back(block_permutation(d, s));
    if (orbit(PermutationGroup(d.block_count(), on_blocks), 0).size() != 22)
      throw ValidationError("M11 block orbit is not the whole design");
  }
  return g;
}

PermutationGroup sym_alt(std::uint32_t n, bool alternating) {
  if (n < 1) throw DomainError("degree must be positive");
  std::vector<Permutation> gens;
  if (!alternating) {
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      std::vector<Point> c(n);
      for (Point i = 0; i < n; ++i) c[i] = i;
      gens.push_back(Permutation::from_cycles(n, {c}));
    }
  } else if (n >= 3) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    std::vector<Point> c;
    for (Point i = (n % 2 ? 0 : 1); i < n; ++i) c.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  GroupTag tag;
  tag.family = alternating ? GroupFamily::Alt : GroupFamily::Sym;
  tag.n = n;
  return make_checked(n, std::move(gens), tag);
}

std::vector<CatalogGroup> three_transitive_pgammal_list(std::uint32_t q) {
  const auto f = field_for(q);
  const auto n = f.degree();
  std::vector<CatalogGroup> r;
  for (auto s : divisors(n)) {
    auto tag = s == n ? projective_tag(GroupFamily::PGL2, q) : projective_tag(GroupFamily::PGammaLSub, q, s);
    r.push_back({tag, catalog_group(tag)});
  }
  if (f.characteristic() != 2 && n % 2 == 0)
    for (auto s : divisors(n / 2)) {
      auto tag = projective_tag(GroupFamily::MGroup, q, s);
      r.push_back({tag, catalog_group(tag)});
    }
  return r;
}

const PermutationGroup& catalog_group(const GroupTag& tag) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<PermutationGroup>> cache;
  const auto key = tag.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  PermutationGroup g;
  switch (tag.family) {
    case GroupFamily::Sym: g = sym_alt(tag.n, false); break;
    case GroupFamily::Alt: g = sym_alt(tag.n, true); break;
    case GroupFamily::PGL2: g = pgl2(tag.q); break;
    case GroupFamily::PSL2: g = psl2(tag.q); break;
    case GroupFamily::PGammaLSub: g = pgammal_subgroup(tag.q, tag.s); break;
    case GroupFamily::MGroup: g = m_group(tag.s, tag.q); break;
    case GroupFamily::AGL: g = agl(tag.d); break;
    case GroupFamily::Z24A7: g = z24_a7(); break;
    default: g = mathieu(tag.family); break;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<PermutationGroup>(std::move(g));
  return *slot;
}

}  // namespace symquot
