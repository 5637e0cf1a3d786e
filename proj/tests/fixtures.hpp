#pragma once

#include <vector>

#include "cka/compose.hpp"
#include "cka/partial_string.hpp"

namespace cka::test {

inline PartialString sym(const char *l) { return singleton(Label(l)); }

/// N shape: e0, e1 labelled a; e2, e3 labelled b; e0 < e2, e0 < e3, e1 < e3.
inline PartialString n4() {
	const std::vector<std::pair<EventId, EventId>> strict{{0, 2}, {0, 3}, {1, 3}};
	return PartialString::from_pairs({Label("a"), Label("a"), Label("b"), Label("b")}, strict);
}

/// (a ; b) ∥ (a ; b)
inline PartialString p4() { return par(seq(sym("a"), sym("b")), seq(sym("a"), sym("b"))); }

} // namespace cka::test
