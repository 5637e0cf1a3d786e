#include "cka/language.hpp"

#include <algorithm>

namespace cka {

namespace {

// Recursive minimal-element removal. `pending[e]` counts the unplaced strict
// predecessors of e.
void extend(const PartialString &x, std::vector<unsigned> &pending, std::vector<bool> &placed, Word &prefix,
            Language &out) {
	const std::size_t n = x.size();
	if (prefix.symbols.size() == n) {
		out.insert(prefix);
		return;
	}
	for (EventId e = 0; e < n; ++e) {
		if (placed[e] || pending[e] != 0)
			continue;
		placed[e] = true;
		for (EventId f = 0; f < n; ++f)
			if (x.strictly_precedes(e, f))
				--pending[f];
		prefix.symbols.push_back(x.label(e));
		extend(x, pending, placed, prefix, out);
		prefix.symbols.pop_back();
		for (EventId f = 0; f < n; ++f)
			if (x.strictly_precedes(e, f))
				++pending[f];
		placed[e] = false;
	}
}

} // namespace

Language linearize(const PartialString &x) {
	const std::size_t n = x.size();
	std::vector<unsigned> pending(n, 0);
	for (EventId e = 0; e < n; ++e)
		for (EventId f = 0; f < n; ++f)
			if (x.strictly_precedes(e, f))
				++pending[f];
	std::vector<bool> placed(n, false);
	Word prefix;
	Language out;
	extend(x, pending, placed, prefix, out);
	return out;
}

Language language(const Program &p) {
	Language out;
	for (const auto &g : p.generators())
		out.merge(linearize(g));
	return out;
}

bool lang_subset(const Program &p, const Program &q) {
	const Language lp = language(p);
	const Language lq = language(q);
	return std::includes(lq.begin(), lq.end(), lp.begin(), lp.end());
}

std::string to_string(const Word &w) {
	if (w.symbols.empty())
		return "ε";
	std::string out;
	for (const auto &l : w.symbols) {
		if (!out.empty())
			out.push_back(' ');
		out += l.token();
	}
	return out;
}

PartialString as_partial_string(const Word &w) { return chain(w.symbols); }

} // namespace cka
