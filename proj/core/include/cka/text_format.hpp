#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cka/partial_string.hpp"

namespace cka {

class Program;

/// Malformed partial-string or program text. `line` is 1-based.
class FormatError : public std::runtime_error {
public:
	FormatError(std::size_t line, const std::string &what)
	    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

/// Reads
///
///     events: l0 l1 ... l(n-1)
///     order: i < j
///     ...
///
/// and closes the order. Blank lines and lines starting with '#' are ignored.
/// Throws FormatError on syntax errors and on orders whose closure is cyclic.
PartialString parse_partial_string(std::string_view text);

/// Inverse of parse_partial_string; emits the cover pairs only.
std::string to_text(const PartialString &x);

/// Blocks of the partial-string format separated by `---` lines. Text with no
/// blocks denotes the empty program.
Program parse_program(std::string_view text);

std::string to_text(const Program &p);

} // namespace cka
