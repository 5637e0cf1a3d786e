#include "cka/morphism.hpp"

#include <algorithm>
#include <map>

#include "cka/compose.hpp"

namespace cka {

Morphism Morphism::identity(std::size_t n) {
	std::vector<EventId> image(n);
	for (EventId e = 0; e < n; ++e)
		image[e] = e;
	return Morphism(std::move(image));
}

bool Morphism::verify(const PartialString &src, const PartialString &tgt) const {
	const std::size_t n = src.size();
	if (image_.size() != n || tgt.size() != n)
		return false;
	std::vector<bool> hit(n, false);
	for (EventId e = 0; e < n; ++e) {
		const EventId t = image_[e];
		if (t >= n || hit[t])
			return false;
		hit[t] = true;
		if (src.label(e) != tgt.label(t))
			return false;
	}
	for (EventId e = 0; e < n; ++e)
		for (EventId f = 0; f < n; ++f)
			if (src.precedes(e, f) && !tgt.precedes(image_[e], image_[f]))
				return false;
	return true;
}

bool Morphism::is_isomorphism(const PartialString &src, const PartialString &tgt) const {
	if (!verify(src, tgt))
		return false;
	for (EventId e = 0; e < src.size(); ++e)
		for (EventId f = 0; f < src.size(); ++f)
			if (tgt.precedes(image_[e], image_[f]) && !src.precedes(e, f))
				return false;
	return true;
}

namespace {

// Per-event profile: the label multiset of the strict up-set and down-set.
// A monotone injection maps the strict up-set of e injectively and
// label-preservingly into the strict up-set of f(e), so each count of the
// source profile must be bounded by the target's.
struct Profile {
	std::vector<std::vector<unsigned>> up;
	std::vector<std::vector<unsigned>> down;
};

Profile profile(const PartialString &p, const std::vector<unsigned> &label_ids, std::size_t num_labels) {
	const std::size_t n = p.size();
	Profile pr{std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(num_labels, 0)),
	           std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(num_labels, 0))};
	for (EventId e = 0; e < n; ++e)
		for (EventId f = 0; f < n; ++f)
			if (p.strictly_precedes(e, f)) {
				++pr.up[e][label_ids[f]];
				++pr.down[f][label_ids[e]];
			}
	return pr;
}

bool dominated(const std::vector<unsigned> &a, const std::vector<unsigned> &b) {
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] > b[i])
			return false;
	return true;
}

class MorphismSearch {
public:
	MorphismSearch(const PartialString &src, const PartialString &tgt) : src_(src), tgt_(tgt), n_(src.size()) {}

	std::optional<Morphism> run() {
		if (tgt_.size() != n_)
			return std::nullopt;
		if (src_.order_pairs() > tgt_.order_pairs())
			return std::nullopt;

		std::map<Label, unsigned> ids;
		for (const auto &l : src_.labels())
			ids.emplace(l, static_cast<unsigned>(ids.size()));
		std::vector<unsigned> src_ids(n_), tgt_ids(n_);
		std::vector<int> balance(ids.size(), 0);
		for (EventId e = 0; e < n_; ++e) {
			src_ids[e] = ids.at(src_.label(e));
			++balance[src_ids[e]];
		}
		for (EventId t = 0; t < n_; ++t) {
			auto it = ids.find(tgt_.label(t));
			if (it == ids.end())
				return std::nullopt;
			tgt_ids[t] = it->second;
			--balance[it->second];
		}
		if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; }))
			return std::nullopt;

		const Profile ps = profile(src_, src_ids, ids.size());
		const Profile pt = profile(tgt_, tgt_ids, ids.size());
		candidates_.assign(n_, {});
		for (EventId e = 0; e < n_; ++e) {
			for (EventId t = 0; t < n_; ++t)
				if (src_ids[e] == tgt_ids[t] && dominated(ps.up[e], pt.up[t]) && dominated(ps.down[e], pt.down[t]))
					candidates_[e].push_back(t);
			if (candidates_[e].empty())
				return std::nullopt;
			// Prefer the same index so identity-indexed witnesses come out first.
			auto same = std::find(candidates_[e].begin(), candidates_[e].end(), e);
			if (same != candidates_[e].end())
				std::rotate(candidates_[e].begin(), same, same + 1);
		}

		plan_order();
		image_.assign(n_, n_);
		used_.assign(n_, false);
		if (!extend(0))
			return std::nullopt;
		return Morphism(image_);
	}

private:
	// Static variable order: fewest candidates first, then greedily the event
	// most connected to those already placed.
	void plan_order() {
		order_.clear();
		std::vector<bool> placed(n_, false);
		std::vector<unsigned> links(n_, 0);
		for (std::size_t step = 0; step < n_; ++step) {
			EventId best = n_;
			for (EventId e = 0; e < n_; ++e) {
				if (placed[e])
					continue;
				if (best == n_ || links[e] > links[best] ||
				    (links[e] == links[best] && candidates_[e].size() < candidates_[best].size()))
					best = e;
			}
			placed[best] = true;
			order_.push_back(best);
			for (EventId e = 0; e < n_; ++e)
				if (!placed[e] && (src_.strictly_precedes(e, best) || src_.strictly_precedes(best, e)))
					++links[e];
		}
		earlier_.assign(n_, {});
		for (std::size_t k = 0; k < n_; ++k)
			for (std::size_t j = 0; j < k; ++j) {
				const EventId e = order_[k], f = order_[j];
				if (src_.strictly_precedes(e, f) || src_.strictly_precedes(f, e))
					earlier_[e].push_back(f);
			}
	}

	bool consistent(EventId e, EventId t) const {
		for (EventId f : earlier_[e]) {
			const EventId u = image_[f];
			if (src_.precedes(e, f) && !tgt_.precedes(t, u))
				return false;
			if (src_.precedes(f, e) && !tgt_.precedes(u, t))
				return false;
		}
		return true;
	}

	bool extend(std::size_t depth) {
		if (depth == n_)
			return true;
		const EventId e = order_[depth];
		for (EventId t : candidates_[e]) {
			if (used_[t] || !consistent(e, t))
				continue;
			image_[e] = t;
			used_[t] = true;
			if (extend(depth + 1))
				return true;
			used_[t] = false;
		}
		image_[e] = n_;
		return false;
	}

	const PartialString &src_;
	const PartialString &tgt_;
	std::size_t n_;
	std::vector<std::vector<EventId>> candidates_;
	std::vector<EventId> order_;
	std::vector<std::vector<EventId>> earlier_;
	std::vector<EventId> image_;
	std::vector<bool> used_;
};

} // namespace

std::optional<Morphism> find_morphism(const PartialString &src, const PartialString &tgt) {
	return MorphismSearch(src, tgt).run();
}

bool refines(const PartialString &x, const PartialString &y) { return find_morphism(y, x).has_value(); }

bool isomorphic(const PartialString &x, const PartialString &y) {
	if (x.size() != y.size() || x.order_pairs() != y.order_pairs())
		return false;
	return refines(x, y) && refines(y, x);
}

bool exchange_holds(const PartialString &u, const PartialString &v, const PartialString &x, const PartialString &y) {
	return refines(seq(par(u, v), par(x, y)), par(seq(u, x), seq(v, y)));
}

} // namespace cka
