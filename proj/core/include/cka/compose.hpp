#pragma once

#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "cka/partial_string.hpp"

namespace cka {

/// Label pairs (a, b) such that an a-event of the left operand must precede a
/// b-event of the right operand under weak sequencing.
class DependenceRelation {
public:
	DependenceRelation() = default;
	DependenceRelation(std::initializer_list<std::pair<Label, Label>> pairs);

	/// Every ordered pair over `alphabet`.
	static DependenceRelation full(std::span<const Label> alphabet);

	DependenceRelation &add(const Label &a, const Label &b);
	DependenceRelation &add_symmetric(const Label &a, const Label &b);

	bool depends(const Label &a, const Label &b) const { return pairs_.contains({a, b}); }
	bool empty() const noexcept { return pairs_.empty(); }
	const std::set<std::pair<Label, Label>> &pairs() const noexcept { return pairs_; }

	friend bool operator==(const DependenceRelation &, const DependenceRelation &) = default;

private:
	std::set<std::pair<Label, Label>> pairs_;
};

/// x ∥ y: x's events keep indices 0..|x|-1, y's are shifted by |x|; no cross order.
PartialString par(const PartialString &x, const PartialString &y);

/// x ; y: as par plus every x-event before every y-event.
PartialString seq(const PartialString &x, const PartialString &y);

/// Weak sequencing: as par plus e before e' (e in x, e' in y) whenever
/// (label(e), label(e')) is in `d`, then closed.
PartialString weakseq(const PartialString &x, const PartialString &y, const DependenceRelation &d);

/// A binary partial-string operator usable wherever programs are composed.
class Composition {
public:
	using Fn = std::function<PartialString(const PartialString &, const PartialString &)>;

	static Composition sequential();
	static Composition concurrent();
	static Composition weak(DependenceRelation d);
	/// An arbitrary operator; used by tests to inject faulty compositions.
	static Composition custom(std::string name, Fn fn);

	PartialString operator()(const PartialString &x, const PartialString &y) const { return fn_(x, y); }
	const std::string &name() const noexcept { return name_; }

private:
	Composition(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

	std::string name_;
	Fn fn_;
};

} // namespace cka
