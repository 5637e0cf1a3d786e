#include "cka/partial_string.hpp"

#include <sstream>

namespace cka {

const char *to_string(Axiom a) noexcept {
	switch (a) {
	case Axiom::None:
		return "none";
	case Axiom::LabelsTotal:
		return "labels-total";
	case Axiom::Reflexivity:
		return "reflexivity";
	case Axiom::Antisymmetry:
		return "antisymmetry";
	case Axiom::Transitivity:
		return "transitivity";
	}
	return "?";
}

std::string CheckResult::message() const {
	std::ostringstream os;
	switch (violated) {
	case Axiom::None:
		return "ok";
	case Axiom::LabelsTotal:
		os << "labels-total violation: " << first << " labels for " << second << " events";
		break;
	case Axiom::Reflexivity:
		os << "reflexivity violation at " << first;
		break;
	case Axiom::Antisymmetry:
		os << "antisymmetry violation at (" << first << "," << second << ")";
		break;
	case Axiom::Transitivity:
		os << "transitivity violation at (" << first << "," << second << ")";
		break;
	}
	return os.str();
}

CheckResult validate(std::span<const Label> labels, const BitRelation &order) {
	const std::size_t n = order.size();
	if (labels.size() != n)
		return {Axiom::LabelsTotal, labels.size(), n};
	for (EventId i = 0; i < n; ++i)
		if (!order.test(i, i))
			return {Axiom::Reflexivity, i, i};
	for (EventId i = 0; i < n; ++i)
		for (EventId j = i + 1; j < n; ++j)
			if (order.test(i, j) && order.test(j, i))
				return {Axiom::Antisymmetry, i, j};
	// (i,k) and (k,j) present but (i,j) absent; report the missing pair.
	for (EventId i = 0; i < n; ++i)
		for (EventId k = 0; k < n; ++k) {
			if (i == k || !order.test(i, k))
				continue;
			for (EventId j = 0; j < n; ++j)
				if (order.test(k, j) && !order.test(i, j))
					return {Axiom::Transitivity, i, j};
		}
	return {};
}

CheckResult validate(const PartialString &x) { return validate(x.labels(), x.order()); }

PartialString::PartialString(std::vector<Label> labels, BitRelation order)
    : labels_(std::move(labels)), order_(std::move(order)) {
	if (auto r = validate(labels_, order_); !r)
		throw ValidationError(r);
}

PartialString PartialString::from_pairs(std::vector<Label> labels,
                                        std::span<const std::pair<EventId, EventId>> strict) {
	BitRelation order(labels.size());
	for (auto [i, j] : strict) {
		if (i >= labels.size() || j >= labels.size())
			throw std::out_of_range("event index out of range in order pair");
		order.set(i, j);
	}
	order.close_reflexive_transitive();
	return PartialString(std::move(labels), std::move(order));
}

PartialString empty() { return PartialString{}; }

PartialString singleton(const Label &l) { return PartialString({l}, BitRelation::identity(1)); }

PartialString chain(std::span<const Label> labels) {
	BitRelation order(labels.size());
	for (EventId i = 0; i < labels.size(); ++i)
		for (EventId j = i; j < labels.size(); ++j)
			order.set(i, j);
	return PartialString({labels.begin(), labels.end()}, std::move(order));
}

PartialString antichain(std::span<const Label> labels) {
	return PartialString({labels.begin(), labels.end()}, BitRelation::identity(labels.size()));
}

} // namespace cka
