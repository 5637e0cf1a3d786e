#include "cka/bit_relation.hpp"

#include <bit>

namespace cka {

BitRelation::BitRelation(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitRelation BitRelation::identity(std::size_t n) {
	BitRelation r(n);
	for (EventId i = 0; i < n; ++i)
		r.set(i, i);
	return r;
}

void BitRelation::merge_row(EventId i, EventId k) noexcept {
	std::uint64_t *dst = &bits_[i * stride_];
	const std::uint64_t *src = &bits_[k * stride_];
	for (std::size_t w = 0; w < stride_; ++w)
		dst[w] |= src[w];
}

void BitRelation::close_reflexive_transitive() {
	for (EventId i = 0; i < n_; ++i)
		set(i, i);
	for (EventId k = 0; k < n_; ++k)
		for (EventId i = 0; i < n_; ++i)
			if (i != k && test(i, k))
				merge_row(i, k);
}

std::size_t BitRelation::row_count(EventId i) const noexcept {
	std::size_t c = 0;
	for (std::size_t w = 0; w < stride_; ++w)
		c += static_cast<std::size_t>(std::popcount(bits_[i * stride_ + w]));
	return c;
}

std::size_t BitRelation::count() const noexcept {
	std::size_t c = 0;
	for (auto w : bits_)
		c += static_cast<std::size_t>(std::popcount(w));
	return c;
}

std::vector<std::pair<EventId, EventId>> BitRelation::pairs() const {
	std::vector<std::pair<EventId, EventId>> out;
	for (EventId i = 0; i < n_; ++i)
		for (EventId j = 0; j < n_; ++j)
			if (test(i, j))
				out.emplace_back(i, j);
	return out;
}

} // namespace cka
