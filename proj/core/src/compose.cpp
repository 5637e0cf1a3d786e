#include "cka/compose.hpp"

namespace cka {

// Builds compositions without re-validating: block-disjoint unions of partial
// orders with one-directional cross edges are partial orders once closed.
class Composer {
public:
	template <typename CrossEdge>
	static PartialString build(const PartialString &x, const PartialString &y, CrossEdge cross, bool needs_closure) {
		const std::size_t nx = x.size();
		const std::size_t n = nx + y.size();
		std::vector<Label> labels;
		labels.reserve(n);
		labels.insert(labels.end(), x.labels().begin(), x.labels().end());
		labels.insert(labels.end(), y.labels().begin(), y.labels().end());

		BitRelation order(n);
		for (EventId i = 0; i < nx; ++i)
			for (EventId j = 0; j < nx; ++j)
				if (x.precedes(i, j))
					order.set(i, j);
		for (EventId i = 0; i < y.size(); ++i)
			for (EventId j = 0; j < y.size(); ++j)
				if (y.precedes(i, j))
					order.set(nx + i, nx + j);
		for (EventId i = 0; i < nx; ++i)
			for (EventId j = 0; j < y.size(); ++j)
				if (cross(i, j))
					order.set(i, nx + j);
		if (needs_closure)
			order.close_reflexive_transitive();
		return PartialString(PartialString::Trusted{}, std::move(labels), std::move(order));
	}
};

DependenceRelation::DependenceRelation(std::initializer_list<std::pair<Label, Label>> pairs) : pairs_(pairs) {}

DependenceRelation DependenceRelation::full(std::span<const Label> alphabet) {
	DependenceRelation d;
	for (const auto &a : alphabet)
		for (const auto &b : alphabet)
			d.add(a, b);
	return d;
}

DependenceRelation &DependenceRelation::add(const Label &a, const Label &b) {
	pairs_.emplace(a, b);
	return *this;
}

DependenceRelation &DependenceRelation::add_symmetric(const Label &a, const Label &b) {
	pairs_.emplace(a, b);
	pairs_.emplace(b, a);
	return *this;
}

PartialString par(const PartialString &x, const PartialString &y) {
	return Composer::build(x, y, [](EventId, EventId) { return false; }, false);
}

PartialString seq(const PartialString &x, const PartialString &y) {
	return Composer::build(x, y, [](EventId, EventId) { return true; }, false);
}

PartialString weakseq(const PartialString &x, const PartialString &y, const DependenceRelation &d) {
	return Composer::build(
	    x, y, [&](EventId i, EventId j) { return d.depends(x.label(i), y.label(j)); }, true);
}

Composition Composition::sequential() { return {";", [](const PartialString &x, const PartialString &y) { return seq(x, y); }}; }

Composition Composition::concurrent() { return {"|", [](const PartialString &x, const PartialString &y) { return par(x, y); }}; }

Composition Composition::weak(DependenceRelation d) {
	return {"weak", [d = std::move(d)](const PartialString &x, const PartialString &y) { return weakseq(x, y, d); }};
}

Composition Composition::custom(std::string name, Fn fn) { return {std::move(name), std::move(fn)}; }

} // namespace cka
