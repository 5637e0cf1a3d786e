#include "cka/testkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace cka::testkit {

namespace {

// Calls visit(image) for every bijection image: src events -> tgt events that
// preserves labels; stops when visit returns true.
template <typename Visit>
bool any_label_bijection(const PartialString &src, const PartialString &tgt, Visit visit) {
	const std::size_t n = src.size();
	if (tgt.size() != n)
		return false;
	std::vector<EventId> image(n);
	std::iota(image.begin(), image.end(), 0);
	do {
		bool labels_match = true;
		for (EventId e = 0; e < n && labels_match; ++e)
			labels_match = src.label(e) == tgt.label(image[e]);
		if (labels_match && visit(image))
			return true;
	} while (std::next_permutation(image.begin(), image.end()));
	return false;
}

} // namespace

bool brute_force_refines(const PartialString &x, const PartialString &y) {
	const std::size_t n = y.size();
	return any_label_bijection(y, x, [&](const std::vector<EventId> &f) {
		for (EventId e = 0; e < n; ++e)
			for (EventId g = 0; g < n; ++g)
				if (y.precedes(e, g) && !x.precedes(f[e], f[g]))
					return false;
		return true;
	});
}

bool brute_force_isomorphic(const PartialString &x, const PartialString &y) {
	const std::size_t n = x.size();
	return any_label_bijection(x, y, [&](const std::vector<EventId> &f) {
		for (EventId e = 0; e < n; ++e)
			for (EventId g = 0; g < n; ++g)
				if (x.precedes(e, g) != y.precedes(f[e], f[g]))
					return false;
		return true;
	});
}

std::size_t brute_force_linear_extensions(const PartialString &x) {
	const std::size_t n = x.size();
	std::vector<EventId> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::size_t count = 0;
	do {
		bool ok = true;
		for (std::size_t i = 0; i < n && ok; ++i)
			for (std::size_t j = i + 1; j < n && ok; ++j)
				ok = !x.precedes(perm[j], perm[i]);
		count += ok;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return count;
}

} // namespace cka::testkit
