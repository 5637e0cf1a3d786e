#include "cka/testkit/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cka/testkit/oracle.hpp"

namespace cka::testkit {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
	// splitmix64 finalizer over the combined words
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

PartialString random_partial_string(const GenConfig &cfg) {
	Rng rng(cfg.seed);
	return random_partial_string(rng, cfg);
}

PartialString random_partial_string(Rng &rng, const GenConfig &cfg) {
	const std::size_t n = rng.below(cfg.max_events + 1);
	std::vector<EventId> layout(n);
	std::iota(layout.begin(), layout.end(), 0);
	rng.shuffle(layout);

	std::vector<std::pair<EventId, EventId>> strict;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (rng.chance(cfg.edge_probability))
				strict.emplace_back(layout[i], layout[j]);

	std::vector<Label> labels;
	labels.reserve(n);
	for (std::size_t i = 0; i < n; ++i)
		labels.push_back(rng.pick(cfg.alphabet));
	return PartialString::from_pairs(std::move(labels), strict);
}

PartialString random_refinement(Rng &rng, const PartialString &x, double edge_probability) {
	const std::size_t n = x.size();

	// A random linear extension of x: repeatedly take a random minimal event.
	std::vector<EventId> extension;
	std::vector<bool> placed(n, false);
	while (extension.size() < n) {
		std::vector<EventId> minimal;
		for (EventId e = 0; e < n; ++e) {
			if (placed[e])
				continue;
			bool is_min = true;
			for (EventId f = 0; f < n && is_min; ++f)
				is_min = placed[f] || !x.strictly_precedes(f, e);
			if (is_min)
				minimal.push_back(e);
		}
		const EventId e = rng.pick(minimal);
		placed[e] = true;
		extension.push_back(e);
	}

	// rename[e] is e's index in the result.
	std::vector<EventId> rename(n);
	std::iota(rename.begin(), rename.end(), 0);
	rng.shuffle(rename);

	std::vector<Label> labels(n, Label("_"));
	for (EventId e = 0; e < n; ++e)
		labels[rename[e]] = x.label(e);

	std::vector<std::pair<EventId, EventId>> strict;
	for (EventId e = 0; e < n; ++e)
		for (EventId f = 0; f < n; ++f)
			if (x.strictly_precedes(e, f))
				strict.emplace_back(rename[e], rename[f]);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (rng.chance(edge_probability))
				strict.emplace_back(rename[extension[i]], rename[extension[j]]);
	return PartialString::from_pairs(std::move(labels), strict);
}

Program random_program(Rng &rng, const GenConfig &cfg, std::size_t max_generators) {
	if (max_generators == 0 || rng.below(8) == 0)
		return zero();
	const std::size_t k = 1 + rng.below(max_generators);
	std::vector<PartialString> gens;
	for (std::size_t i = 0; i < k; ++i)
		gens.push_back(random_partial_string(rng, cfg));
	return program_of(std::move(gens));
}

DependenceRelation random_dependence(Rng &rng, const std::vector<Label> &alphabet) {
	DependenceRelation d;
	for (const auto &a : alphabet)
		for (const auto &b : alphabet)
			if (rng.chance(0.5))
				d.add(a, b);
	return d;
}

std::vector<PartialString> enumerate_all(std::size_t max_events, const std::vector<Label> &alphabet) {
	std::vector<PartialString> out;
	for (std::size_t n = 0; n <= max_events; ++n) {
		std::vector<std::pair<EventId, EventId>> slots;
		for (EventId i = 0; i < n; ++i)
			for (EventId j = i + 1; j < n; ++j)
				slots.emplace_back(i, j);

		// Every poset has a linear extension, so upper-triangular DAGs cover
		// all orders up to isomorphism.
		std::set<std::vector<std::pair<EventId, EventId>>> orders;
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
			BitRelation r(n);
			for (std::size_t s = 0; s < slots.size(); ++s)
				if ((mask >> s) & 1U)
					r.set(slots[s].first, slots[s].second);
			r.close_reflexive_transitive();
			orders.insert(r.pairs());
		}

		// Candidates bucketed by (order size, sorted labels); isomorphic
		// strings always share a bucket.
		std::map<std::pair<std::size_t, std::vector<Label>>, std::vector<std::size_t>> buckets;
		std::vector<std::size_t> digits(n, 0);
		for (const auto &pairs : orders) {
			std::fill(digits.begin(), digits.end(), 0);
			while (true) {
				std::vector<Label> labels;
				for (auto d : digits)
					labels.push_back(alphabet[d]);
				std::vector<std::pair<EventId, EventId>> strict;
				for (auto [i, j] : pairs)
					if (i != j)
						strict.emplace_back(i, j);
				PartialString candidate = PartialString::from_pairs(labels, strict);

				auto sorted = labels;
				std::sort(sorted.begin(), sorted.end());
				auto &bucket = buckets[{pairs.size(), std::move(sorted)}];
				bool seen = false;
				for (auto k : bucket)
					if (brute_force_isomorphic(out[k], candidate)) {
						seen = true;
						break;
					}
				if (!seen) {
					bucket.push_back(out.size());
					out.push_back(std::move(candidate));
				}

				std::size_t pos = 0;
				while (pos < n && ++digits[pos] == alphabet.size())
					digits[pos++] = 0;
				if (pos == n)
					break;
			}
		}
	}
	return out;
}

} // namespace cka::testkit
