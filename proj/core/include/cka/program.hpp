#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cka/compose.hpp"
#include "cka/morphism.hpp"
#include "cka/partial_string.hpp"

namespace cka {

/// A downward-closed set of finite partial strings, represented by a finite
/// set of generators. The closure itself is never materialized.
///
/// Programs built by the operations below are normalized: the generators
/// form an antichain under refinement with no two isomorphic members, sorted
/// by their text serialization. The raw constructor keeps its input as is.
class Program {
public:
	Program() = default;
	explicit Program(std::vector<PartialString> generators) : generators_(std::move(generators)) {}

	const std::vector<PartialString> &generators() const noexcept { return generators_; }
	std::size_t size() const noexcept { return generators_.size(); }
	bool is_zero() const noexcept { return generators_.empty(); }

private:
	std::vector<PartialString> generators_;
};

/// Iteration count for truncated Kleene stars.
class StarBound {
public:
	explicit StarBound(unsigned n) : n_(n) {
		if (n == 0)
			throw std::invalid_argument("star bound must be at least 1");
	}
	unsigned value() const noexcept { return n_; }

private:
	unsigned n_;
};

/// 0: the empty program.
Program zero();
/// 1: the program generated by the empty partial string.
Program one();

/// Normalized program generated by `xs`. Each input is re-validated.
Program program_of(std::vector<PartialString> xs);

/// Drops generators refining another generator and keeps one representative
/// (smallest serialization) per isomorphism class. Semantics are unchanged.
Program normalize_program(const Program &p);

/// x ∈ ↓P
bool contains(const Program &p, const PartialString &x);

/// Index of a generator of `p` that `x` refines, with the morphism witnessing it.
std::optional<std::pair<std::size_t, Morphism>> find_container(const Program &p, const PartialString &x);

/// ↓P ⊆ ↓Q: every generator of P refines some generator of Q.
bool subset(const Program &p, const Program &q);

/// Semantic equality: subset both ways.
bool equals(const Program &p, const Program &q);

Program punion(const Program &p, const Program &q);

/// ↓{ op(g, h) : g ∈ P, h ∈ Q }
Program pcompose(const Program &p, const Program &q, const Composition &op);

/// F^n(0) where F(X) = 1 ∪ (P op X).
Program star(const Program &p, const Composition &op, StarBound bound);

} // namespace cka
