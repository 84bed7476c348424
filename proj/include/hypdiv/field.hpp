#pragma once

// Exact scalars: the rationals, finite fields F_{p^m} = F_p[T]/(modulus) and
// quadratic number fields Q[T]/(modulus).
//
// A Field is a cheap handle to an interned descriptor, so two handles compare
// equal exactly when they describe the same field with the same modulus.
// FieldElement additionally has an "untyped" state holding a small integer;
// Eigen creates such values through Scalar(0) and Scalar(1), and they are
// coerced into the field of the other operand on first contact.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

#include "hypdiv/error.hpp"

namespace hypdiv {

namespace detail {
struct FieldData;
}

inline constexpr int kMaxExtensionDegree = 8;

class Field {
 public:
  enum class Kind { rationals, prime_field, extension_field, number_field };

  Field() = default;

  static Field rationals();
  static Field prime(std::int64_t p);
  /// F_{p^m} with the default modulus: the first monic irreducible polynomial
  /// of degree m in lexicographic order on (c_{m-1}, ..., c_0).
  static Field finite(std::int64_t p, int m);
  /// F_p[T]/(modulus); `modulus` is monic, lowest degree first, length m+1.
  static Field finite(std::int64_t p, std::vector<std::int64_t> modulus);
  /// Q[T]/(modulus) for a monic quadratic without rational roots.
  static Field number_field(std::vector<mpq_class> modulus);

  Kind kind() const;
  bool is_finite() const;
  bool is_rational_based() const { return !is_finite(); }
  std::int64_t characteristic() const;
  int degree() const;
  /// Number of elements; finite fields only.
  std::uint64_t order() const;
  const std::vector<std::int64_t>& fp_modulus() const;
  const std::vector<mpq_class>& q_modulus() const;
  Field prime_subfield() const;
  const std::string& name() const;

  explicit operator bool() const { return data_ != nullptr; }
  friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }
  friend bool operator<(Field a, Field b) { return a.data_ < b.data_; }

  const detail::FieldData* data() const { return data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  friend Field intern_field(detail::FieldData&&);
  const detail::FieldData* data_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, Field f);

class FieldElement {
 public:
  /// Untyped zero.
  FieldElement() = default;
  /// Untyped integer constant.
  explicit FieldElement(std::int64_t n) { c_[0] = n; }

  static FieldElement zero(Field f) { return from_int(f, 0); }
  static FieldElement one(Field f) { return from_int(f, 1); }
  static FieldElement from_int(Field f, std::int64_t n);
  static FieldElement from_rational(Field f, const mpq_class& q);
  /// Coefficients over the prime field, lowest degree first; reduced mod p.
  static FieldElement from_coeffs(Field f, std::span<const std::int64_t> coeffs);
  static FieldElement from_q_coeffs(Field f, std::vector<mpq_class> coeffs);
  /// Inverse of index(): base-p digits become coefficients.
  static FieldElement from_index(Field f, std::uint64_t index);

  Field field() const { return field_; }
  bool is_typed() const { return static_cast<bool>(field_); }
  bool is_zero() const;
  bool is_one() const;

  /// Sum of c_i p^i; finite fields only. Defines the deterministic element order.
  std::uint64_t index() const;
  std::int64_t coeff(int i) const;
  const std::vector<mpq_class>& q_coeffs() const { return q_; }
  /// Value of an element of Q (or of the Q-part when the element lies in Q).
  mpq_class rational() const;
  /// True when the element lies in the prime subfield (F_p or Q).
  bool in_prime_subfield() const;

  /// Returns this element as a member of `f` (untyped constants only).
  FieldElement typed(Field f) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

 private:
  Field field_;
  std::array<std::int64_t, kMaxExtensionDegree> c_{};
  std::vector<mpq_class> q_;
};

/// Deterministic total order: index order on finite fields, numeric order on
/// Q, coefficientwise on number fields. Untyped values are not ordered.
bool precedes(const FieldElement& a, const FieldElement& b);
/// The distinguished one of r and -r: the smaller index over finite fields,
/// the one with positive leading coefficient over Q-based fields.
FieldElement principal_root(const FieldElement& r);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);
std::string to_string(const FieldElement& a);

/// a^(p^power) for a in a finite field.
FieldElement frobenius(const FieldElement& a, unsigned power = 1);

/// Canonical embedding into a field containing a's field. Extension fields
/// map their generator to the first root (in index order) of their modulus.
FieldElement embed(const FieldElement& a, Field target);
bool embeds_into(Field from, Field to);
/// The larger of two fields when one embeds into the other.
Field common_field(Field a, Field b);

/// Degree-`degree` extension of a finite field, built over the prime field
/// with the default modulus.
Field extension(Field base, int degree);
/// A field containing base and a square root of d.
Field adjoin_sqrt(const FieldElement& d);

std::optional<FieldElement> sqrt_in_field(const FieldElement& a);
bool is_square(const FieldElement& a);

/// Every element in index order. Throws field_too_large beyond 2^22 elements.
std::vector<FieldElement> elements(Field f);

FieldElement random_element(Field f, std::mt19937_64& rng);
FieldElement random_nonzero(Field f, std::mt19937_64& rng);

bool is_prime(std::int64_t n);
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::int64_t> monic, std::int64_t p);

}  // namespace hypdiv

namespace Eigen {

template <>
struct NumTraits<hypdiv::FieldElement> : GenericNumTraits<hypdiv::FieldElement> {
  using Real = hypdiv::FieldElement;
  using NonInteger = hypdiv::FieldElement;
  using Nested = hypdiv::FieldElement;
  using Literal = hypdiv::FieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
