#include "symquot/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "symquot/errors.hpp"

namespace symquot {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::size_t n, std::vector<std::vector<Point>> blocks) : blocks_(std::move(blocks)) {
  block_of_.assign(n, UINT32_MAX);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw DomainError("partition has an empty block");
    for (Point x : blocks_[i]) {
      if (x >= n) throw DomainError("partition block contains an out-of-range point");
      if (block_of_[x] != UINT32_MAX) throw DomainError("partition blocks overlap");
      block_of_[x] = static_cast<std::uint32_t>(i);
    }
  }
  for (auto b : block_of_)
    if (b == UINT32_MAX) throw DomainError("partition does not cover every point");
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<Point>> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = {static_cast<Point>(i)};
  return Partition(n, std::move(b));
}

Partition Partition::consecutive(std::size_t n, std::size_t size) {
  if (size == 0 || n % size) throw DomainError("block size does not divide point count");
  std::vector<std::vector<Point>> b(n / size);
  for (std::size_t x = 0; x < n; ++x) b[x / size].push_back(static_cast<Point>(x));
  return Partition(n, std::move(b));
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& block_of) {
  std::uint32_t k = 0;
  for (auto b : block_of) k = std::max(k, b + 1);
  std::vector<std::vector<Point>> b(k);
  for (std::size_t x = 0; x < block_of.size(); ++x) b[block_of[x]].push_back(static_cast<Point>(x));
  return Partition(block_of.size(), std::move(b));
}

std::size_t Partition::uniform_size() const {
  if (blocks_.empty()) return 0;
  for (const auto& b : blocks_)
    if (b.size() != blocks_[0].size()) return 0;
  return blocks_[0].size();
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw DomainError("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw DomainError("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) im[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Point Permutation::least_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<Point>(x);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      if (y != x) os << ' ';
      os << y;
      seen[y] = 1;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degree mismatch");
  std::vector<Point> im(a.degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = b.images_[a.images_[x]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

// --------------------------------------------------------- PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators, Options opts)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ > kMaxDegree) throw DomainError("group degree exceeds 10^4");
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw DomainError("generator degree mismatch");
  std::vector<char> seen(degree_, 0);
  for (Point b : opts.base_prefix) {
    if (b >= degree_ || seen[b]) throw DomainError("invalid base prefix");
    seen[b] = 1;
  }
  schreier_sims(opts.base_prefix, opts.known_order);
}

std::uint64_t PermutationGroup::chain_order() const {
  unsigned __int128 r = 1;
  for (const auto& l : levels_) {
    r *= l.orbit.size();
    if (r > UINT64_MAX) throw DomainError("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

void PermutationGroup::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.label.assign(degree_, -1);
  L.orbit.clear();
  L.label[L.beta] = -2;
  L.orbit.push_back(L.beta);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    const Point x = L.orbit[head];
    for (auto s : L.gens) {
      const Point y = strong_[s].images_[x];
      if (L.label[y] == -1) {
        L.label[y] = static_cast<std::int32_t>(s);
        L.orbit.push_back(y);
      }
    }
  }
}

void PermutationGroup::coset_rep(std::size_t level, Point gamma, std::vector<Point>& out) const {
  const Level& L = levels_[level];
  thread_local std::vector<std::uint32_t> path;
  path.clear();
  while (gamma != L.beta) {
    const auto s = static_cast<std::uint32_t>(L.label[gamma]);
    path.push_back(s);
    gamma = strong_inv_[s].images_[gamma];
  }
  out.resize(degree_);
  std::iota(out.begin(), out.end(), 0u);
  for (std::size_t k = path.size(); k-- > 0;) {
    const auto& im = strong_[path[k]].images_;
    for (auto& v : out) v = im[v];
  }
}

std::size_t PermutationGroup::sift(std::vector<Point>& g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    Point delta = g[L.beta];
    if (L.label[delta] == -1) return l;
    while (delta != L.beta) {
      const auto& inv = strong_inv_[static_cast<std::size_t>(L.label[delta])].images_;
      for (auto& v : g) v = inv[v];
      delta = inv[delta];
    }
  }
  return levels_.size();
}

void PermutationGroup::add_strong(const Permutation& g) {
  strong_.push_back(g);
  strong_inv_.push_back(g.inverse());
}

void PermutationGroup::schreier_sims(const std::vector<Point>& prefix, std::optional<std::uint64_t> known) {
  levels_.clear();
  strong_.clear();
  strong_inv_.clear();
  for (Point b : prefix) {
    Level L;
    L.beta = b;
    levels_.push_back(std::move(L));
  }
  std::set<std::vector<Point>> dedupe;
  for (const auto& g : gens_) {
    if (g.is_identity() || !dedupe.insert(g.images_).second) continue;
    std::size_t j = 0;
    while (j < levels_.size() && g.images_[levels_[j].beta] == levels_[j].beta) ++j;
    if (j == levels_.size()) {
      Level L;
      L.beta = g.least_moved();
      levels_.push_back(std::move(L));
    }
    const auto idx = static_cast<std::uint32_t>(strong_.size());
    add_strong(g);
    for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(idx);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);

  auto finish = [&] {
    order_ = chain_order();
    base_.clear();
    for (const auto& l : levels_) base_.push_back(l.beta);
  };
  if (known && chain_order() == *known) return finish();

  std::vector<std::pair<std::size_t, std::size_t>> cursor(levels_.size(), {0, 0});
  std::vector<Point> u, h;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool grew = false;
    auto& cur = cursor[i];
    for (; cur.first < levels_[i].orbit.size() && !grew; ++cur.first, cur.second = 0) {
      const Point gamma = levels_[i].orbit[cur.first];
      coset_rep(i, gamma, u);
      for (; cur.second < levels_[i].gens.size(); ++cur.second) {
        const auto sidx = levels_[i].gens[cur.second];
        const auto& s = strong_[sidx].images_;
        const Point delta = s[gamma];
        if (levels_[i].label[delta] == static_cast<std::int32_t>(sidx) && strong_inv_[sidx].images_[delta] == gamma)
          continue;  // tree edge, Schreier generator is trivial
        h.resize(degree_);
        for (std::size_t x = 0; x < degree_; ++x) h[x] = s[u[x]];
        const std::size_t j = sift(h, static_cast<std::size_t>(i));
        bool ident = true;
        for (std::size_t x = 0; x < degree_ && ident; ++x) ident = h[x] == x;
        if (j == levels_.size() && ident) continue;

        Permutation hp(h, Permutation::Unchecked{});
        if (j == levels_.size()) {
          Level L;
          L.beta = hp.least_moved();
          levels_.push_back(std::move(L));
          cursor.push_back({0, 0});
        }
        const auto idx = static_cast<std::uint32_t>(strong_.size());
        add_strong(hp);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(idx);
          rebuild_orbit(l);
          cursor[l] = {0, 0};
        }
        if (known && chain_order() == *known) return finish();
        i = static_cast<std::ptrdiff_t>(j);
        grew = true;
        break;
      }
      if (grew) break;
    }
    if (!grew) --i;
  }
  finish();
  if (known && order_ != *known) throw ValidationError("group order differs from the declared order");
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  std::vector<Point> h = g.images_;
  if (sift(h, 0) != levels_.size()) return false;
  for (std::size_t x = 0; x < degree_; ++x)
    if (h[x] != x) return false;
  return true;
}

PermutationGroup PermutationGroup::with_base_prefix(const std::vector<Point>& prefix) const {
  return PermutationGroup(degree_, gens_, Options{prefix, order_});
}

PermutationGroup PermutationGroup::level_subgroup(std::size_t level) const {
  PermutationGroup r;
  r.degree_ = degree_;
  r.strong_ = strong_;
  r.strong_inv_ = strong_inv_;
  r.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(level), levels_.end());
  if (level < levels_.size())
    for (auto s : levels_[level].gens) r.gens_.push_back(strong_[s]);
  for (const auto& l : r.levels_) r.base_.push_back(l.beta);
  r.order_ = r.chain_order();
  return r;
}

// ----------------------------------------------------------- free functions

PermutationGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermutationGroup(degree, std::move(gens));
}

std::vector<Point> orbit(const PermutationGroup& g, Point x) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<Point> orb{x};
  seen[x] = 1;
  for (std::size_t h = 0; h < orb.size(); ++h)
    for (const auto& s : g.generators()) {
      const Point y = s[orb[h]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> orbits_on(const PermutationGroup& g, const std::vector<Point>& pts) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<std::vector<Point>> r;
  for (Point x : pts) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (Point y : o) seen[y] = 1;
    r.push_back(std::move(o));
  }
  return r;
}

std::vector<std::vector<Point>> orbits(const PermutationGroup& g) {
  std::vector<Point> all(g.degree());
  std::iota(all.begin(), all.end(), 0u);
  return orbits_on(g, all);
}

PermutationGroup stabilizer(const PermutationGroup& g, const std::vector<Point>& points) {
  return g.with_base_prefix(points).level_subgroup(points.size());
}

bool is_transitive(const PermutationGroup& g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

int transitivity_degree(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  if (n == 0 || !is_transitive(g)) return 0;
  unsigned __int128 fact = 1;
  for (std::size_t i = 2; i <= n && fact <= UINT64_MAX; ++i) fact *= i;
  if (fact == g.order()) return static_cast<int>(n);
  if (n >= 3 && fact == 2 * (unsigned __int128)g.order()) return static_cast<int>(n - 2);
  auto count = [&](std::size_t len) {
    std::vector<Point> prefix(len);
    std::iota(prefix.begin(), prefix.end(), 0u);
    auto c = g.with_base_prefix(prefix);
    std::size_t k = 0;
    while (k < len && c.basic_orbit(k).size() == n - k) ++k;
    return k;
  };
  const std::size_t len = std::min<std::size_t>(n, 8);
  std::size_t k = count(len);
  if (k == len && len < n) k = count(n);
  return static_cast<int>(k);
}

bool is_block_system(const PermutationGroup& g, const Partition& p) {
  if (p.points() != g.degree()) throw DomainError("partition size differs from group degree");
  for (const auto& s : g.generators())
    for (const auto& b : p.blocks()) {
      const auto target = p.block_of(s[b[0]]);
      if (p.block(target).size() != b.size()) return false;
      for (Point x : b)
        if (p.block_of(s[x]) != target) return false;
    }
  return true;
}

Permutation induced_permutation(const Permutation& g, const Partition& p) {
  std::vector<Point> im(p.block_count());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p.block_of(g[p.block(i)[0]]);
  return Permutation(std::move(im));
}

InducedAction induced_action(const PermutationGroup& g, const Partition& p) {
  if (!is_block_system(g, p)) throw DomainError("partition is not a block system for the group");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(induced_permutation(s, p));
  InducedAction r{PermutationGroup(p.block_count(), std::move(gens)), false};
  r.faithful = r.image.order() == g.order();
  return r;
}

PermutationGroup block_augmented(const PermutationGroup& g, const Partition& p) {
  if (!is_block_system(g, p)) throw DomainError("partition is not a block system for the group");
  const std::size_t n = g.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> im(n + p.block_count());
    for (std::size_t x = 0; x < n; ++x) im[x] = s[static_cast<Point>(x)];
    for (std::size_t i = 0; i < p.block_count(); ++i)
      im[n + i] = static_cast<Point>(n + p.block_of(s[p.block(i)[0]]));
    gens.emplace_back(std::move(im));
  }
  return PermutationGroup(n + p.block_count(), std::move(gens), {{}, g.order()});
}

std::vector<std::vector<Point>> suborbits(const PermutationGroup& g, Point x) {
  if (!is_transitive(g)) throw DomainError("suborbits require a transitive group");
  auto h = stabilizer(g, {x});
  std::vector<Point> pts{x};
  for (Point y = 0; y < g.degree(); ++y)
    if (y != x) pts.push_back(y);
  return orbits_on(h, pts);
}

PairOrbit pair_orbit(const PermutationGroup& g, Point x, Point y) {
  PairOrbit r;
  r.n = g.degree();
  const std::uint64_t states = std::uint64_t(r.n) * r.n;
  r.bits.assign((states + 63) / 64, 0);
  auto mark = [&](Point a, Point b) {
    const std::uint64_t k = std::uint64_t(a) * r.n + b;
    auto& w = r.bits[k >> 6];
    const std::uint64_t m = std::uint64_t(1) << (k & 63);
    if (w & m) return false;
    w |= m;
    return true;
  };
  mark(x, y);
  r.pairs.push_back({x, y});
  for (std::size_t h = 0; h < r.pairs.size(); ++h) {
    const auto [a, b] = r.pairs[h];
    for (const auto& s : g.generators()) {
      if (mark(s[a], s[b])) {
        r.pairs.push_back({s[a], s[b]});
        if (r.pairs.size() > kMaxPairStates) throw DomainError("pair orbit exceeds the state cap");
      }
    }
  }
  return r;
}

bool is_self_paired(const PermutationGroup& g, Point x, Point y) {
  auto o = orbit(g, x);
  if (std::find(o.begin(), o.end(), y) == o.end()) throw DomainError("points lie in different orbits");
  return pair_orbit(g, x, y).contains(y, x);
}

Permutation pair_lift(const Permutation& g) {
  const std::size_t m = g.degree();
  std::vector<Point> im(m * (m - 1));
  for (Point i = 0; i < m; ++i)
    for (Point j = 0; j < m; ++j)
      if (i != j) im[pair_index(i, j, m)] = pair_index(g[i], g[j], m);
  return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& g, std::size_t limit) {
  std::set<std::vector<Point>> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(g.degree());
  seen.insert(id.images());
  queue.push_back(id);
  std::vector<Permutation> out;
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    out.push_back(p);
    if (out.size() > limit) throw DomainError("element enumeration limit exceeded");
    for (const auto& s : g.generators()) {
      auto q = p * s;
      if (seen.insert(q.images()).second) queue.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace symquot
