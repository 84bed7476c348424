#pragma once

// Frobenius x -> x^q on objects over F_{q^m} and the two rationality
// predicates for divisor classes.

#include <cstdint>
#include <optional>

#include "hypdiv/equivalence.hpp"
#include "hypdiv/quadratic_form.hpp"

namespace hypdiv {

struct GaloisContext {
  Field base;
  Field ambient;
  std::uint64_t q;  // |base|
};

/// The ambient field is the degree-m extension of `base`.
GaloisContext make_context(Field base, int m);

/// Throws not_in_ambient unless the entries embed into ctx.ambient and the
/// curve is defined over ctx.base.
Triple galois_image(const Triple& t, const GaloisContext& ctx);
GramForm galois_image(const GramForm& s, const GaloisContext& ctx);
OrthMatrix galois_image(const OrthMatrix& a, const GaloisContext& ctx);

/// The Gram matrix is Frobenius-fixed.
bool class_rational_mod_conj(const Triple& t, const GaloisContext& ctx);

struct RationalityVerdict {
  bool rational;
  ClassRelation relation;  // same_class(t, σ t) over the ambient field
};

RationalityVerdict class_rationality(const Triple& t, const GaloisContext& ctx);
bool class_rational(const Triple& t, const GaloisContext& ctx);

struct CaveatReport {
  std::optional<Triple> witness;
  std::optional<ClassRelation> relation;
  std::uint64_t searched = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  /// Samples where class_rational held without class_rational_mod_conj.
  std::uint64_t violations = 0;
  std::uint64_t gram_rational_samples = 0;
};

/// Seeded search for t with a Frobenius-fixed Gram matrix whose class is
/// sent to its conjugate. Even samples are random ambient triples moved by a
/// random ambient word; odd samples come from points of the twist
/// cY^2 = F with c a non-square of the base, lifted as (u, v, sqrt(c) w),
/// and moved by a random base word. Stops at the first hit.
CaveatReport find_caveat_example(const Curve& curve, const GaloisContext& ctx, std::uint64_t budget,
                                 std::uint64_t seed);

/// The odd-sample construction on its own; nullopt when the twist has too
/// few base points with distinct X.
std::optional<Triple> sample_twisted_triple(const Curve& curve, const GaloisContext& ctx, std::mt19937_64& rng);

}  // namespace hypdiv
