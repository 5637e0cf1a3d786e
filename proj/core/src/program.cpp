#include "cka/program.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cka/morphism.hpp"
#include "cka/text_format.hpp"

namespace cka {

Program zero() { return Program{}; }

Program one() { return Program({empty()}); }

Program program_of(std::vector<PartialString> xs) {
	for (const auto &x : xs)
		if (auto r = validate(x); !r)
			throw ValidationError(r);
	return normalize_program(Program(std::move(xs)));
}

namespace {

// Refinement needs equal event counts and label multisets; bucket on both.
using BucketKey = std::pair<std::size_t, std::vector<Label>>;

BucketKey bucket_key(const PartialString &x) {
	std::vector<Label> ls = x.labels();
	std::sort(ls.begin(), ls.end());
	return {x.size(), std::move(ls)};
}

} // namespace

Program normalize_program(const Program &p) {
	std::vector<std::pair<std::string, const PartialString *>> keyed;
	keyed.reserve(p.size());
	for (const auto &g : p.generators())
		keyed.emplace_back(to_text(g), &g);
	std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });

	std::map<BucketKey, std::vector<std::size_t>> buckets;
	std::vector<const PartialString *> kept;
	std::vector<std::string> kept_text;
	for (auto &[text, g] : keyed) {
		auto &bucket = buckets[bucket_key(*g)];
		bool duplicate = false;
		for (std::size_t k : bucket)
			if (isomorphic(*kept[k], *g)) {
				duplicate = true;
				break;
			}
		if (duplicate)
			continue;
		bucket.push_back(kept.size());
		kept.push_back(g);
		kept_text.push_back(text);
	}

	// No two survivors are isomorphic, so refinement among them is a strict
	// partial order; keep the maximal ones.
	std::vector<bool> dominated(kept.size(), false);
	for (const auto &[key, members] : buckets)
		for (std::size_t a : members)
			for (std::size_t b : members)
				if (a != b && !dominated[a] && refines(*kept[a], *kept[b])) {
					dominated[a] = true;
					break;
				}

	std::vector<PartialString> out;
	for (std::size_t k = 0; k < kept.size(); ++k)
		if (!dominated[k])
			out.push_back(*kept[k]);
	return Program(std::move(out));
}

std::optional<std::pair<std::size_t, Morphism>> find_container(const Program &p, const PartialString &x) {
	for (std::size_t i = 0; i < p.size(); ++i)
		if (auto f = find_morphism(p.generators()[i], x))
			return std::make_pair(i, std::move(*f));
	return std::nullopt;
}

bool contains(const Program &p, const PartialString &x) {
	return std::any_of(p.generators().begin(), p.generators().end(),
	                   [&](const PartialString &g) { return refines(x, g); });
}

bool subset(const Program &p, const Program &q) {
	return std::all_of(p.generators().begin(), p.generators().end(),
	                   [&](const PartialString &g) { return contains(q, g); });
}

bool equals(const Program &p, const Program &q) { return subset(p, q) && subset(q, p); }

Program punion(const Program &p, const Program &q) {
	std::vector<PartialString> gens = p.generators();
	gens.insert(gens.end(), q.generators().begin(), q.generators().end());
	return normalize_program(Program(std::move(gens)));
}

Program pcompose(const Program &p, const Program &q, const Composition &op) {
	std::vector<PartialString> gens;
	gens.reserve(p.size() * q.size());
	for (const auto &g : p.generators())
		for (const auto &h : q.generators())
			gens.push_back(op(g, h));
	return normalize_program(Program(std::move(gens)));
}

Program star(const Program &p, const Composition &op, StarBound bound) {
	Program x = zero();
	for (unsigned i = 0; i < bound.value(); ++i)
		x = punion(one(), pcompose(p, x, op));
	return x;
}

} // namespace cka
