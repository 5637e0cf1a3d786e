#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace cka {

/// Index of an event inside one partial string; dense in [0, n).
using EventId = std::size_t;

/// An alphabet symbol. Labels compare by exact text.
class Label {
public:
	Label() = delete;
	explicit Label(std::string token);
	Label(const char *token) : Label(std::string(token)) {}

	const std::string &token() const noexcept { return token_; }

	friend bool operator==(const Label &, const Label &) = default;
	friend std::strong_ordering operator<=>(const Label &, const Label &) = default;

private:
	std::string token_;
};

inline std::ostream &operator<<(std::ostream &os, const Label &l) { return os << l.token(); }

} // namespace cka

template <>
struct std::hash<cka::Label> {
	std::size_t operator()(const cka::Label &l) const noexcept { return std::hash<std::string>{}(l.token()); }
};
