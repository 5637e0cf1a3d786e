#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cka/compose.hpp"
#include "cka/label.hpp"

namespace cka::testkit {

inline constexpr std::uint64_t kDefaultSeed = 20141014;

struct LawConfig {
	std::size_t cases = 100;
	std::size_t max_events = 3;
	std::size_t max_generators = 3;
	std::uint64_t seed = kDefaultSeed;
	std::vector<Label> alphabet = {Label("a"), Label("b")};
	/// Operators under test. Replaced only to check that the suite catches
	/// faulty compositions.
	Composition sequential = Composition::sequential();
	Composition concurrent = Composition::concurrent();
};

struct LawResult {
	std::string name;
	std::size_t passed = 0;
	std::size_t failed = 0;
	std::string first_failure;

	bool ok() const noexcept { return failed == 0; }
};

struct LawReport {
	std::uint64_t seed = 0;
	std::size_t cases = 0;
	std::size_t max_events = 0;
	std::vector<LawResult> laws;

	bool all_passed() const;
	const LawResult *find(const std::string &name) const;
};

/// Runs every partial-string, program and language law on `cases` seeded
/// random inputs. Case i draws its inputs from derive_seed(seed, i), so all
/// laws of one case share the same corpus.
LawReport law_suite(const LawConfig &cfg);

/// Aligned table, optionally followed by one `#law <name> pass|fail` line per law.
std::string render(const LawReport &report, bool machine_lines = true);

} // namespace cka::testkit
