#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cka/bit_relation.hpp"
#include "cka/label.hpp"

namespace cka {

/// Partial-order axiom checked by validate().
enum class Axiom { None, LabelsTotal, Reflexivity, Antisymmetry, Transitivity };

const char *to_string(Axiom a) noexcept;

/// Outcome of validate(). On failure, `first`/`second` witness the violation
/// (for reflexivity both are the offending event).
struct CheckResult {
	Axiom violated = Axiom::None;
	EventId first = 0;
	EventId second = 0;

	bool ok() const noexcept { return violated == Axiom::None; }
	explicit operator bool() const noexcept { return ok(); }
	std::string message() const;
};

/// Checks labels-total, reflexivity, antisymmetry and transitivity, in that
/// order, and reports the first violation found (row-major within an axiom).
CheckResult validate(std::span<const Label> labels, const BitRelation &order);

class ValidationError : public std::runtime_error {
public:
	explicit ValidationError(CheckResult r) : std::runtime_error(r.message()), result_(r) {}
	const CheckResult &result() const noexcept { return result_; }

private:
	CheckResult result_;
};

/// A finite labelled partial order. Immutable once constructed; the order is
/// kept reflexively and transitively closed.
class PartialString {
public:
	/// The empty partial string.
	PartialString() = default;

	/// Builds from an already-closed order. Throws ValidationError when the
	/// pair (labels, order) is not a partial string.
	PartialString(std::vector<Label> labels, BitRelation order);

	/// Builds from strict pairs (i < j), closing them first. Throws
	/// ValidationError if the closure has a cycle and std::out_of_range on
	/// indices past the label count.
	static PartialString from_pairs(std::vector<Label> labels, std::span<const std::pair<EventId, EventId>> strict);

	std::size_t size() const noexcept { return labels_.size(); }
	bool empty() const noexcept { return labels_.empty(); }

	const Label &label(EventId e) const { return labels_.at(e); }
	const std::vector<Label> &labels() const noexcept { return labels_; }
	const BitRelation &order() const noexcept { return order_; }

	/// e ⪯ e'
	bool precedes(EventId e, EventId f) const noexcept { return order_.test(e, f); }
	/// e ⪯ e' and e != e'
	bool strictly_precedes(EventId e, EventId f) const noexcept { return e != f && order_.test(e, f); }

	/// Number of pairs in the reflexive order, including (e, e).
	std::size_t order_pairs() const noexcept { return order_.count(); }

	/// Pointwise equality: same indices, labels and order.
	friend bool operator==(const PartialString &, const PartialString &) = default;

private:
	struct Trusted {};
	PartialString(Trusted, std::vector<Label> labels, BitRelation order)
	    : labels_(std::move(labels)), order_(std::move(order)) {}

	friend class Composer;

	std::vector<Label> labels_;
	BitRelation order_;
};

/// The unique empty partial string.
PartialString empty();

/// One event carrying label `l`.
PartialString singleton(const Label &l);

/// Total order l0 ⪯ l1 ⪯ ... over the given labels.
PartialString chain(std::span<const Label> labels);

/// Pairwise incomparable events over the given labels.
PartialString antichain(std::span<const Label> labels);

CheckResult validate(const PartialString &x);

} // namespace cka
