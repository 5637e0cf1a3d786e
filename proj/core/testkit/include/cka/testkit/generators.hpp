#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cka/compose.hpp"
#include "cka/partial_string.hpp"
#include "cka/program.hpp"

namespace cka::testkit {

/// Seeded source of randomness. Draws are reduced by hand rather than through
/// <random> distributions so sequences are identical across standard libraries.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	/// Uniform in [0, n); n > 0.
	std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
	/// True with probability p.
	bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
	std::uint64_t next() { return engine_(); }

	template <typename T>
	const T &pick(const std::vector<T> &xs) { return xs[below(xs.size())]; }

	template <typename T>
	void shuffle(std::vector<T> &xs) {
		for (std::size_t i = xs.size(); i > 1; --i)
			std::swap(xs[i - 1], xs[below(i)]);
	}

private:
	std::mt19937_64 engine_;
};

/// Stable 64-bit mix of a seed with a stream index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct GenConfig {
	std::size_t max_events = 4;
	std::vector<Label> alphabet = {Label("a"), Label("b")};
	double edge_probability = 0.4;
	std::uint64_t seed = 1;
};

/// Event count uniform in [0, max_events]; edges i -> j sampled over a random
/// topological layout; labels uniform over the alphabet.
PartialString random_partial_string(const GenConfig &cfg);
PartialString random_partial_string(Rng &rng, const GenConfig &cfg);

/// A partial string refining `x`: events shuffled, then extra edges drawn
/// along a random linear extension of x.
PartialString random_refinement(Rng &rng, const PartialString &x, double edge_probability);

/// Up to `max_generators` generators of random_partial_string, normalized.
/// Empty with probability 1/8.
Program random_program(Rng &rng, const GenConfig &cfg, std::size_t max_generators);

/// Each ordered label pair included with probability 1/2.
DependenceRelation random_dependence(Rng &rng, const std::vector<Label> &alphabet);

/// Every partial string with at most max_events events over `alphabet`, one
/// per isomorphism class, ordered by event count.
std::vector<PartialString> enumerate_all(std::size_t max_events, const std::vector<Label> &alphabet);

} // namespace cka::testkit
