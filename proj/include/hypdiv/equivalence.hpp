#pragma once

// Deciding whether two triples define the same divisor class, conjugate
// classes, both, or neither.

#include <optional>
#include <string_view>

#include "hypdiv/omega.hpp"

namespace hypdiv {

enum class ClassKind { equal, equal_and_self_conjugate, conjugate_only, distinct };

std::string_view kind_name(ClassKind kind);
ClassKind parse_kind(std::string_view name);

/// Finite fields: the search runs over the extension of the given degree.
/// The rationals ignore it and solve for a directly.
struct SearchDomain {
  int extension_degree = 2;
};

struct ClassRelation {
  ClassKind kind = ClassKind::distinct;
  /// Proper, with act(witness, t1) = t2.
  std::optional<OrthMatrix> witness;
  /// Proper, with act(conjugate_witness, t1) = conjugate(t2).
  std::optional<OrthMatrix> conjugate_witness;
  Field search_field;
};

/// act(reduction(a), t) = (U + a^2 V - 2aW, V, W - aV). Throws
/// degenerate_result when the first component vanishes.
Triple reduction_step(const Triple& t, const FieldElement& a);

/// act(plain_swap, t) = (v, u, -w).
Triple swap_step(const Triple& t);

ClassRelation same_class(const Triple& t1, const Triple& t2, SearchDomain search = {});

/// Brute force over enumerate_so3 of the triples' field.
ClassKind orbit_oracle(const Triple& t1, const Triple& t2);

/// Combines the two directions of a search.
ClassKind combine_kind(bool equal, bool conjugate);

}  // namespace hypdiv
