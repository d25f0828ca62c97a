#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

namespace detail {
struct FieldData;
}

class FieldElement;

// GF(p^n) in a polynomial basis. Elements are addressed by an integer index
// sum c_i p^i, so the constant coefficient varies fastest in enumeration order.
// Instances with the same (p, n) share one immutable table.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Throws DomainError for non-prime p, n < 1 or p^n above kMaxOrder.
  static FiniteField make(std::uint32_t p, std::uint32_t n);
  // Accepts a prime power q and factors it.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  // Monic modulus, coefficients from x^0 up to x^n.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  // Least element in enumeration order with multiplicative order q-1.
  FieldElement primitive_element() const;
  std::vector<FieldElement> elements() const;

  bool operator==(const FiniteField& o) const { return data_ == o.data_; }

  // Raw index arithmetic for hot loops; no validation.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frob(std::uint32_t a, std::uint32_t i) const;

 private:
  explicit FiniteField(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(const FiniteField& f, std::uint32_t index);

  const FiniteField& field() const { return field_; }
  std::uint32_t index() const { return index_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  // Throws DomainError on division by zero.
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && index_ == o.index_;
  }
  bool operator<(const FieldElement& o) const { return index_ < o.index_; }

 private:
  void same_field(const FieldElement& o) const;
  FiniteField field_;
  std::uint32_t index_;
};

// x^(p^i).
FieldElement frobenius(const FieldElement& x, std::uint32_t i);
// Least s dividing n with x^(p^s) = x.
std::uint32_t subfield_degree(const FieldElement& d);

enum class SquareClass { Zero, Square, NonSquare };
SquareClass square_class(const FieldElement& a);
// Zero counts as a square; use square_class to tell it apart.
inline bool is_square(const FieldElement& a) { return square_class(a) != SquareClass::NonSquare; }

// Point of PG(1,q): a field element or infinity.
class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(std::nullopt); }
  static ProjPoint finite(std::uint32_t index) { return ProjPoint(index); }
  bool is_infinity() const { return !value_.has_value(); }
  std::uint32_t value() const { return *value_; }
  // Canonical label: 0 for infinity, 1 + element index otherwise.
  std::uint32_t label() const { return value_ ? *value_ + 1 : 0; }
  static ProjPoint from_label(std::uint32_t label) {
    return label == 0 ? infinity() : finite(label - 1);
  }
  std::string to_string() const;
  bool operator==(const ProjPoint& o) const { return value_ == o.value_; }

 private:
  explicit ProjPoint(std::optional<std::uint32_t> v) : value_(v) {}
  std::optional<std::uint32_t> value_;
};

std::vector<ProjPoint> projective_line(const FiniteField& f);

bool is_prime(std::uint64_t n);
// Returns (p, n) when q = p^n with p prime, otherwise nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);
std::vector<std::uint32_t> divisors(std::uint32_t n);

}  // namespace symquot
