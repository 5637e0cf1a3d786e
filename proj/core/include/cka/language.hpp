#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "cka/partial_string.hpp"
#include "cka/program.hpp"

namespace cka {

/// A totally ordered string of labels.
struct Word {
	std::vector<Label> symbols;

	friend bool operator==(const Word &, const Word &) = default;
	friend auto operator<=>(const Word &a, const Word &b) { return a.symbols <=> b.symbols; }
};

/// Words sorted lexicographically by symbol sequence.
using Language = std::set<Word>;

/// Label sequences of every linear extension of x's order.
Language linearize(const PartialString &x);

/// Union of linearize(g) over the generators of p.
Language language(const Program &p);

bool lang_subset(const Program &p, const Program &q);

/// Whitespace-joined tokens; the empty word prints as "ε".
std::string to_string(const Word &w);

/// The chain partial string spelling `w`.
PartialString as_partial_string(const Word &w);

} // namespace cka
