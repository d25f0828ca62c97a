#include "symquot/ffield.hpp"

#include <map>
#include <mutex>

#include "symquot/errors.hpp"

namespace symquot {

namespace detail {

struct FieldData {
  std::uint32_t p = 0, n = 0, q = 0;
  std::vector<std::uint32_t> modulus;  // low to high, monic, size n+1
  std::vector<std::uint32_t> ppow;     // p^i for i <= n
  std::vector<std::uint32_t> exp;      // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;      // log[x] for x != 0
  std::uint32_t primitive = 1;
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo m over GF(p); m nonzero.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t n) {
  Poly d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = index % p;
    index /= p;
  }
  trim(d);
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
  return r;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n <= 1) return n == 1;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::uint32_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(static_cast<std::uint32_t>(low), p, deg);
      g.resize(deg + 1, 0);
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
  };
  return t;
}

Poly choose_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};  // arithmetic in a prime field does not depend on it
  auto it = conway_table().find({p, n});
  if (it != conway_table().end()) {
    if (!irreducible(it->second, p)) throw ValidationError("table modulus is reducible");
    return it->second;
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = digits(static_cast<std::uint32_t>(low), p, n);
    f.resize(n + 1, 0);
    f[n] = 1;
    if (irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

std::vector<std::uint32_t> prime_factors(std::uint32_t m) {
  std::vector<std::uint32_t> r;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= m; ++d) {
    if (m % d == 0) {
      r.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) r.push_back(m);
  return r;
}

std::unique_ptr<detail::FieldData> build(std::uint32_t p, std::uint32_t n) {
  auto f = std::make_unique<detail::FieldData>();
  f->p = p;
  f->n = n;
  f->ppow.resize(n + 1);
  f->ppow[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) f->ppow[i] = f->ppow[i - 1] * p;
  f->q = f->ppow[n];
  f->modulus = choose_modulus(p, n);
  const Poly& m = f->modulus;
  const std::uint32_t q = f->q;

  auto slow_pow = [&](const Poly& a, std::uint64_t e) {
    Poly r{1}, b = a;
    for (; e; e >>= 1) {
      if (e & 1) r = poly_mulmod(r, b, m, p);
      b = poly_mulmod(b, b, m, p);
    }
    return r;
  };

  const auto factors = prime_factors(q - 1);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    Poly c = digits(cand, p, n);
    bool ok = true;
    for (auto r : factors) {
      if (slow_pow(c, (q - 1) / r) == Poly{1}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw ValidationError("no primitive element");
  f->primitive = g;

  f->exp.resize(2 * (q - 1));
  f->log.assign(q, 0);
  Poly gp = digits(g, p, n), cur{1};
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    std::uint32_t idx = undigits(cur, p);
    f->exp[i] = f->exp[i + q - 1] = idx;
    f->log[idx] = i;
    cur = poly_mulmod(cur, gp, m, p);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), n);
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> r;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) r.push_back(d);
  return r;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds 2^20");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<detail::FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) slot = build(p, n);
  return FiniteField(slot.get());
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  auto pn = prime_power(q);
  if (!pn) throw DomainError(std::to_string(q) + " is not a prime power");
  return make(pn->first, pn->second);
}

std::uint32_t FiniteField::characteristic() const { return data_->p; }
std::uint32_t FiniteField::degree() const { return data_->n; }
std::uint32_t FiniteField::order() const { return data_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return data_->modulus; }

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }
FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= data_->q) throw DomainError("field element index out of range");
  return FieldElement(*this, index);
}
FieldElement FiniteField::primitive_element() const { return FieldElement(*this, data_->primitive); }

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> r;
  r.reserve(data_->q);
  for (std::uint32_t i = 0; i < data_->q; ++i) r.emplace_back(*this, i);
  return r;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  const auto& f = *data_;
  if (f.p == 2) return a ^ b;
  if (f.n == 1) return (a + b) % f.p;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    r += ((a % f.p + b % f.p) % f.p) * f.ppow[i];
    a /= f.p;
    b /= f.p;
  }
  return r;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  const auto& f = *data_;
  if (f.p == 2) return a;
  if (f.n == 1) return (f.p - a) % f.p;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    r += ((f.p - a % f.p) % f.p) * f.ppow[i];
    a /= f.p;
  }
  return r;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return data_->exp[data_->log[a] + data_->log[b]];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  const auto& f = *data_;
  return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& f = *data_;
  return f.exp[(std::uint64_t(f.log[a]) * (e % (f.q - 1))) % (f.q - 1)];
}

std::uint32_t FiniteField::frob(std::uint32_t a, std::uint32_t i) const {
  std::uint64_t e = 1;
  for (std::uint32_t k = 0; k < i % data_->n; ++k) e *= data_->p;
  return pow(a, e);
}

FieldElement::FieldElement(const FiniteField& f, std::uint32_t index) : field_(f), index_(index) {}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  std::vector<std::uint32_t> c(field_.degree());
  std::uint32_t x = index_;
  for (auto& ci : c) {
    ci = x % field_.characteristic();
    x /= field_.characteristic();
  }
  return c;
}

void FieldElement::same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw DomainError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {field_, field_.add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {field_, field_.sub(index_, o.index_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {field_, field_.mul(index_, o.index_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  same_field(o);
  if (o.is_zero()) throw DomainError("division by zero");
  return {field_, field_.mul(index_, field_.inv(o.index_))};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(index_)}; }
FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return {field_, field_.inv(index_)};
}
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(index_, e)}; }

FieldElement frobenius(const FieldElement& x, std::uint32_t i) {
  return {x.field(), x.field().frob(x.index(), i)};
}

std::uint32_t subfield_degree(const FieldElement& d) {
  const auto n = d.field().degree();
  for (auto s : divisors(n))
    if (frobenius(d, s) == d) return s;
  return n;
}

SquareClass square_class(const FieldElement& a) {
  if (a.is_zero()) return SquareClass::Zero;
  const auto& f = a.field();
  if (f.characteristic() == 2) return SquareClass::Square;
  return a.pow((f.order() - 1) / 2) == f.one() ? SquareClass::Square : SquareClass::NonSquare;
}

std::string ProjPoint::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::vector<ProjPoint> projective_line(const FiniteField& f) {
  std::vector<ProjPoint> r;
  r.reserve(f.order() + 1);
  r.push_back(ProjPoint::infinity());
  for (std::uint32_t i = 0; i < f.order(); ++i) r.push_back(ProjPoint::finite(i));
  return r;
}

}  // namespace symquot
