#pragma once

#include <optional>
#include <vector>

#include "cka/partial_string.hpp"

namespace cka {

/// A map from the events of a source partial string to those of a target.
/// Produced by find_morphism(); verify() re-checks the defining properties.
class Morphism {
public:
	Morphism() = default;
	explicit Morphism(std::vector<EventId> image) : image_(std::move(image)) {}

	static Morphism identity(std::size_t n);

	EventId operator()(EventId e) const { return image_.at(e); }
	std::size_t size() const noexcept { return image_.size(); }
	const std::vector<EventId> &image() const noexcept { return image_; }

	/// Bijective, label-preserving and monotone from `src` to `tgt`.
	bool verify(const PartialString &src, const PartialString &tgt) const;

	/// verify() plus reflection of order: an isomorphism.
	bool is_isomorphism(const PartialString &src, const PartialString &tgt) const;

	friend bool operator==(const Morphism &, const Morphism &) = default;

private:
	std::vector<EventId> image_;
};

/// Exact backtracking search for a monotonic bijective morphism src -> tgt.
std::optional<Morphism> find_morphism(const PartialString &src, const PartialString &tgt);

/// x ⊑ y: there is a monotonic bijective morphism from y to x, i.e. x carries
/// at least y's ordering.
bool refines(const PartialString &x, const PartialString &y);

/// x ≅ y: refinement both ways.
bool isomorphic(const PartialString &x, const PartialString &y);

/// (u ∥ v) ; (x ∥ y) ⊑ (u ; x) ∥ (v ; y)
bool exchange_holds(const PartialString &u, const PartialString &v, const PartialString &x, const PartialString &y);

} // namespace cka
