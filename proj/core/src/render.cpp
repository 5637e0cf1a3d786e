#include "cka/render.hpp"

#include <sstream>

namespace cka {

CoverRelation hasse(const PartialString &x) {
	CoverRelation covers;
	const std::size_t n = x.size();
	for (EventId i = 0; i < n; ++i)
		for (EventId j = 0; j < n; ++j) {
			if (!x.strictly_precedes(i, j))
				continue;
			bool covered = true;
			for (EventId k = 0; k < n && covered; ++k)
				if (x.strictly_precedes(i, k) && x.strictly_precedes(k, j))
					covered = false;
			if (covered)
				covers.emplace_back(i, j);
		}
	return covers;
}

namespace {

std::string dot_escape(const std::string &s) {
	std::string out;
	for (char c : s) {
		if (c == '"' || c == '\\')
			out.push_back('\\');
		out.push_back(c);
	}
	return out;
}

} // namespace

std::string to_dot(const PartialString &x, const std::string &graph_name) {
	std::ostringstream os;
	os << "digraph " << graph_name << " {\n";
	os << "  rankdir=TB;\n";
	for (EventId e = 0; e < x.size(); ++e)
		os << "  e" << e << " [label=\"" << e << ':' << dot_escape(x.label(e).token()) << "\"];\n";
	for (auto [i, j] : hasse(x))
		os << "  e" << i << " -> e" << j << ";\n";
	os << "}\n";
	return os.str();
}

} // namespace cka
