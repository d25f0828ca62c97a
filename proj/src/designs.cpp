#include "symquot/designs.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "symquot/errors.hpp"
#include "symquot/ffield.hpp"

namespace symquot {

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<std::vector<Point>> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    if (b.empty()) throw DomainError("empty block");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw DomainError("block repeats a point");
    if (b.back() >= v_) throw DomainError("block point out of range");
    index_.emplace(b, static_cast<std::uint32_t>(i));
  }
}

bool IncidenceStructure::incident(Point p, std::size_t block) const {
  return std::binary_search(blocks_[block].begin(), blocks_[block].end(), p);
}

std::optional<std::uint32_t> IncidenceStructure::find_block(const std::vector<Point>& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool IncidenceStructure::has_repeated_blocks() const { return index_.size() != blocks_.size(); }

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 40)) return r;
  }
  return r;
}

// Visit every t-subset of s (as positions), calling f with the subset.
template <class F>
void for_each_subset(const std::vector<Point>& s, int t, F&& f) {
  std::vector<std::size_t> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = static_cast<std::size_t>(i);
  if (static_cast<std::size_t>(t) > s.size()) return;
  std::vector<Point> cur(t);
  for (;;) {
    for (int i = 0; i < t; ++i) cur[i] = s[idx[i]];
    f(cur);
    int i = t - 1;
    while (i >= 0 && idx[i] == s.size() - static_cast<std::size_t>(t - i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DesignParams design_params(const IncidenceStructure& d, int max_t) {
  if (d.points() == 0 || d.block_count() == 0) throw DomainError("empty incidence structure");
  DesignParams p;
  p.v = d.points();
  p.b = d.block_count();
  std::map<std::vector<Point>, std::size_t> mult;
  for (const auto& b : d.blocks()) p.rho = std::max(p.rho, ++mult[b]);
  bool k_const = true;
  for (const auto& b : d.blocks()) k_const = k_const && b.size() == d.block(0).size();
  if (k_const) p.k = d.block(0).size();
  std::vector<std::size_t> deg(p.v, 0);
  for (const auto& b : d.blocks())
    for (Point x : b) ++deg[x];
  if (std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == deg[0]; })) p.r = deg[0];
  if (!p.r) return p;
  p.max_t = 1;
  p.lambda.push_back(*p.r);
  const std::size_t kmin = [&] {
    std::size_t m = SIZE_MAX;
    for (const auto& b : d.blocks()) m = std::min(m, b.size());
    return m;
  }();
  std::vector<std::vector<std::uint64_t>> pascal(p.v + 1);
  for (int t = 2; t <= max_t && static_cast<std::size_t>(t) <= kmin; ++t) {
    const std::uint64_t total = binom(p.v, static_cast<std::uint64_t>(t));
    std::uint64_t work = 0;
    for (const auto& b : d.blocks()) work += binom(b.size(), static_cast<std::uint64_t>(t));
    if (total > 5'000'000 || work > 50'000'000) break;
    // Colex rank of a sorted subset: sum_i C(c_i, i+1).
    std::vector<std::vector<std::uint64_t>> c(p.v, std::vector<std::uint64_t>(t + 1));
    for (std::size_t x = 0; x < p.v; ++x)
      for (int i = 0; i <= t; ++i) c[x][i] = binom(x, static_cast<std::uint64_t>(i));
    std::vector<std::uint32_t> count(total, 0);
    for (const auto& b : d.blocks())
      for_each_subset(b, t, [&](const std::vector<Point>& s) {
        std::uint64_t r = 0;
        for (int i = 0; i < t; ++i) r += c[s[i]][i + 1];
        ++count[r];
      });
    if (!std::all_of(count.begin(), count.end(), [&](std::uint32_t x) { return x == count[0]; })) break;
    p.max_t = t;
    p.lambda.push_back(count[0]);
  }
  return p;
}

IncidenceStructure derived_design(const IncidenceStructure& d, Point p) {
  std::vector<std::vector<Point>> blocks;
  for (const auto& b : d.blocks()) {
    if (!std::binary_search(b.begin(), b.end(), p)) continue;
    std::vector<Point> nb;
    for (Point x : b)
      if (x != p) nb.push_back(x > p ? x - 1 : x);
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  if (blocks.empty()) throw DomainError("point lies in no block");
  return IncidenceStructure(d.points() - 1, std::move(blocks));
}

IncidenceStructure dual_design(const IncidenceStructure& d) {
  if (d.has_repeated_blocks()) throw DomainError("dual design is undefined with repeated blocks");
  std::vector<std::vector<Point>> blocks(d.points());
  for (std::size_t i = 0; i < d.block_count(); ++i)
    for (Point x : d.block(i)) blocks[x].push_back(static_cast<Point>(i));
  for (const auto& b : blocks)
    if (b.empty()) throw DomainError("a point lies in no block");
  return IncidenceStructure(d.block_count(), std::move(blocks));
}

IncidenceStructure complement_design(const IncidenceStructure& d) {
  std::vector<std::vector<Point>> blocks;
  for (const auto& b : d.blocks()) {
    if (b.size() == d.points()) throw DomainError("complement of the full point set is empty");
    std::vector<Point> c;
    for (Point x = 0; x < d.points(); ++x)
      if (!std::binary_search(b.begin(), b.end(), x)) c.push_back(x);
    blocks.push_back(std::move(c));
  }
  return IncidenceStructure(d.points(), std::move(blocks));
}

IncidenceStructure design_from_partition(const Graph& g, const Partition& p, std::size_t bi) {
  const auto& pts = p.block(bi);
  std::vector<std::vector<Point>> blocks(p.block_count());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (Point y : g.neighbours(pts[i])) {
      auto& blk = blocks[p.block_of(y)];
      if (blk.empty() || blk.back() != i) blk.push_back(static_cast<Point>(i));
    }
  std::vector<std::vector<Point>> out;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    if (j != bi && !blocks[j].empty()) out.push_back(std::move(blocks[j]));
  if (out.empty()) throw DomainError("block has no adjacent blocks");
  return IncidenceStructure(pts.size(), std::move(out));
}

IncidenceStructure ag_design(int d, int e) {
  if (d < 3 || d > 6 || e < 2 || e > d - 1) throw DomainError("ag_design needs 2 <= e <= d-1 <= 5");
  const std::size_t n = std::size_t(1) << d;
  // Subspaces as bitmasks over the 2^d vectors (d <= 6 so 64 bits suffice).
  auto span_add = [&](std::uint64_t s, Point v) {
    std::uint64_t r = s;
    for (Point x = 0; x < n; ++x)
      if ((s >> x) & 1) r |= std::uint64_t(1) << (x ^ v);
    return r;
  };
  std::set<std::uint64_t> layer{1};
  for (int k = 0; k < e; ++k) {
    std::set<std::uint64_t> next;
    for (auto s : layer)
      for (Point v = 1; v < n; ++v)
        if (!((s >> v) & 1)) next.insert(span_add(s, v));
    layer.swap(next);
  }
  std::set<std::vector<Point>> cosets;
  for (auto s : layer)
    for (Point x = 0; x < n; ++x) {
      std::vector<Point> c;
      for (Point w = 0; w < n; ++w)
        if ((s >> w) & 1) c.push_back(x ^ w);
      std::sort(c.begin(), c.end());
      cosets.insert(std::move(c));
    }
  IncidenceStructure r(n, {cosets.begin(), cosets.end()});
  if (e == d - 1 && r.block_count() != 2 * (n - 1)) throw ValidationError("hyperplane count is wrong");
  for (const auto& b : r.blocks())
    if (b.size() != (std::size_t(1) << e)) throw ValidationError("coset size is wrong");
  return r;
}

IncidenceStructure steiner_3_22_6() {
  const auto f = FiniteField::make(2, 2);
  using Vec = std::array<std::uint32_t, 3>;
  auto normalize = [&](Vec v) {
    for (auto c : v)
      if (c) {
        const auto inv = f.inv(c);
        for (auto& x : v) x = f.mul(inv, x);
        break;
      }
    return v;
  };
  std::vector<Vec> pts;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      for (std::uint32_t c = 0; c < 4; ++c) {
        Vec v{a, b, c};
        if ((a || b || c) && normalize(v) == v) pts.push_back(v);
      }
  if (pts.size() != 21) throw ValidationError("PG(2,4) point count is wrong");
  auto index = [&](const Vec& v) {
    return static_cast<Point>(std::find(pts.begin(), pts.end(), normalize(v)) - pts.begin());
  };
  auto dot = [&](const Vec& a, const Vec& b) {
    return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
  };
  std::vector<std::vector<Point>> blocks;
  for (const auto& l : pts) {
    std::vector<Point> line;
    for (Point i = 0; i < 21; ++i)
      if (dot(pts[i], l) == 0) line.push_back(i);
    line.push_back(21);
    blocks.push_back(std::move(line));
  }
  // Hyperoval: conic plus nucleus, then its orbit under SL(3,4) generated by transvections.
  std::vector<Point> oval;
  for (std::uint32_t t = 0; t < 4; ++t) oval.push_back(index({1, t, f.mul(t, t)}));
  oval.push_back(index({0, 0, 1}));
  oval.push_back(index({0, 1, 0}));
  std::sort(oval.begin(), oval.end());
  std::vector<std::vector<Point>> moves;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        for (std::uint32_t a : {1u, 2u}) {
          std::vector<Point> im(21);
          for (Point p = 0; p < 21; ++p) {
            Vec v = pts[p];  // v * (I + a E_ij): coordinate j gains a * v_i
            v[j] = f.add(v[j], f.mul(a, pts[p][i]));
            im[p] = index(v);
          }
          moves.push_back(std::move(im));
        }
  std::set<std::vector<Point>> orb{oval};
  std::vector<std::vector<Point>> frontier{oval};
  while (!frontier.empty()) {
    auto s = frontier.back();
    frontier.pop_back();
    for (const auto& m : moves) {
      std::vector<Point> t;
      for (Point x : s) t.push_back(m[x]);
      std::sort(t.begin(), t.end());
      if (orb.insert(t).second) frontier.push_back(std::move(t));
    }
  }
  if (orb.size() != 56) throw ValidationError("hyperoval orbit length is not 56");
  blocks.insert(blocks.end(), orb.begin(), orb.end());
  std::sort(blocks.begin(), blocks.end());
  IncidenceStructure d(22, std::move(blocks));
  auto p = design_params(d, 3);
  if (d.block_count() != 77 || p.max_t < 3 || p.lambda[2] != 1) throw ValidationError("Witt design check failed");
  return d;
}

IncidenceStructure design_3_12_6_2() {
  auto chi = [](int x) {
    x = ((x % 11) + 11) % 11;
    if (x == 0) return 0;
    for (int y = 1; y < 11; ++y)
      if (y * y % 11 == x) return 1;
    return -1;
  };
  int h[12][12] = {};
  for (int j = 1; j < 12; ++j) {
    h[0][j] = 1;
    h[j][0] = -1;
  }
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) h[i + 1][j + 1] = chi(j - i);
  for (int i = 0; i < 12; ++i) h[i][i] += 1;
  for (int j = 0; j < 12; ++j)
    if (h[0][j] < 0)
      for (auto& row : h) row[j] = -row[j];
  for (auto& row : h)
    if (row[0] < 0)
      for (int& x : row) x = -x;
  std::vector<std::vector<Point>> blocks;
  for (int i = 1; i < 12; ++i) {
    std::vector<Point> pos, neg;
    for (int j = 0; j < 12; ++j) (h[i][j] > 0 ? pos : neg).push_back(static_cast<Point>(j));
    blocks.push_back(std::move(pos));
    blocks.push_back(std::move(neg));
  }
  std::sort(blocks.begin(), blocks.end());
  IncidenceStructure d(12, std::move(blocks));
  auto p = design_params(d, 3);
  if (d.block_count() != 22 || !p.k || *p.k != 6 || p.max_t < 3 || p.lambda[2] != 2)
    throw ValidationError("3-(12,6,2) design check failed");
  return d;
}

std::vector<Flag> flags(const IncidenceStructure& d) {
  std::vector<Flag> r;
  for (Point x = 0; x < d.points(); ++x)
    for (std::size_t b = 0; b < d.block_count(); ++b)
      if (d.incident(x, b)) r.push_back({x, static_cast<std::uint32_t>(b)});
  return r;
}

std::vector<Point> image_of_set(const Permutation& g, const std::vector<Point>& s) {
  std::vector<Point> r;
  r.reserve(s.size());
  for (Point x : s) r.push_back(g[x]);
  std::sort(r.begin(), r.end());
  return r;
}

bool preserves_design(const IncidenceStructure& d, const Permutation& g) {
  if (g.degree() != d.points()) throw DomainError("permutation degree differs from point count");
  std::map<std::vector<Point>, long> bal;
  for (const auto& b : d.blocks()) {
    ++bal[b];
    --bal[image_of_set(g, b)];
  }
  for (auto& kv : bal)
    if (kv.second) return false;
  return true;
}

bool preserves_design(const IncidenceStructure& d, const PermutationGroup& g) {
  for (const auto& s : g.generators())
    if (!preserves_design(d, s)) return false;
  return true;
}

Permutation block_permutation(const IncidenceStructure& d, const Permutation& g) {
  std::vector<Point> im(d.block_count());
  for (std::size_t i = 0; i < im.size(); ++i) {
    auto j = d.find_block(image_of_set(g, d.block(i)));
    if (!j) throw DomainError("permutation does not preserve the design");
    im[i] = *j;
  }
  return Permutation(std::move(im));
}

}  // namespace symquot
