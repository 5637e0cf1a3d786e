#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cka/label.hpp"

namespace cka {

/// Dense n x n boolean relation stored as packed 64-bit rows.
class BitRelation {
public:
	BitRelation() = default;
	explicit BitRelation(std::size_t n);

	static BitRelation identity(std::size_t n);

	std::size_t size() const noexcept { return n_; }

	bool test(EventId i, EventId j) const noexcept {
		return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1U;
	}
	void set(EventId i, EventId j) noexcept { bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64); }
	void reset(EventId i, EventId j) noexcept { bits_[i * stride_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }

	/// row(i) |= row(k)
	void merge_row(EventId i, EventId k) noexcept;

	/// Reflexive-transitive closure in place (Warshall on bit rows).
	void close_reflexive_transitive();

	/// Number of pairs (i, j) in the relation.
	std::size_t count() const noexcept;
	std::size_t row_count(EventId i) const noexcept;

	/// All pairs (i, j), row-major.
	std::vector<std::pair<EventId, EventId>> pairs() const;

	friend bool operator==(const BitRelation &, const BitRelation &) = default;

private:
	std::size_t n_ = 0;
	std::size_t stride_ = 0;
	std::vector<std::uint64_t> bits_;
};

} // namespace cka
