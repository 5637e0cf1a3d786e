#pragma once

#include <cstddef>

#include "cka/partial_string.hpp"

// Exhaustive reference implementations. Nothing here calls into the morphism
// search, composition or language code; only the PartialString accessors.
namespace cka::testkit {

/// x ⊑ y by trying every label-respecting bijection from y's events to x's.
/// Intended for at most 7 events per side.
bool brute_force_refines(const PartialString &x, const PartialString &y);

/// Label-preserving order isomorphism by exhaustive search.
bool brute_force_isomorphic(const PartialString &x, const PartialString &y);

/// Number of linear extensions, counted over all n! permutations.
std::size_t brute_force_linear_extensions(const PartialString &x);

} // namespace cka::testkit
