#include "cka/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "cka/program.hpp"
#include "cka/render.hpp"

namespace cka {

namespace {

struct Line {
	std::size_t number;
	std::string_view text;
};

std::string_view trim(std::string_view s) {
	const auto ws = " \t\r\n";
	const auto b = s.find_first_not_of(ws);
	if (b == std::string_view::npos)
		return {};
	return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<Line> split_lines(std::string_view text, std::size_t first_line = 1) {
	std::vector<Line> lines;
	std::size_t number = first_line;
	while (!text.empty()) {
		const auto nl = text.find('\n');
		lines.push_back({number++, text.substr(0, nl)});
		if (nl == std::string_view::npos)
			break;
		text.remove_prefix(nl + 1);
	}
	return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
	std::vector<std::string_view> out;
	const auto ws = " \t\r";
	std::size_t i = 0;
	while ((i = s.find_first_not_of(ws, i)) != std::string_view::npos) {
		const auto j = s.find_first_of(ws, i);
		out.push_back(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
		if (j == std::string_view::npos)
			break;
		i = j;
	}
	return out;
}

bool is_skippable(std::string_view line) {
	line = trim(line);
	return line.empty() || line.front() == '#';
}

EventId parse_index(std::string_view tok, std::size_t line, std::size_t n) {
	EventId v = 0;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
	if (ec != std::errc{} || ptr != tok.data() + tok.size())
		throw FormatError(line, "expected event index, got '" + std::string(tok) + "'");
	if (v >= n)
		throw FormatError(line, "event index " + std::to_string(v) + " out of range (" + std::to_string(n) + " events)");
	return v;
}

PartialString parse_block(const std::vector<Line> &lines) {
	std::size_t k = 0;
	while (k < lines.size() && is_skippable(lines[k].text))
		++k;
	if (k == lines.size())
		throw FormatError(lines.empty() ? 1 : lines.back().number, "missing 'events:' line");

	const auto head = trim(lines[k].text);
	if (!head.starts_with("events:"))
		throw FormatError(lines[k].number, "expected 'events:' line");
	std::vector<Label> labels;
	for (auto tok : tokens(head.substr(7)))
		labels.emplace_back(std::string(tok));

	std::vector<std::pair<EventId, EventId>> strict;
	for (++k; k < lines.size(); ++k) {
		if (is_skippable(lines[k].text))
			continue;
		const auto body = trim(lines[k].text);
		const auto line = lines[k].number;
		if (!body.starts_with("order:"))
			throw FormatError(line, "expected 'order: i < j'");
		const auto toks = tokens(body.substr(6));
		if (toks.size() != 3 || toks[1] != "<")
			throw FormatError(line, "expected 'order: i < j'");
		const EventId i = parse_index(toks[0], line, labels.size());
		const EventId j = parse_index(toks[2], line, labels.size());
		if (i == j)
			throw FormatError(line, "strict pair needs two distinct events");
		strict.emplace_back(i, j);
	}

	try {
		return PartialString::from_pairs(std::move(labels), strict);
	} catch (const ValidationError &e) {
		throw FormatError(lines[k - 1].number, std::string("order is not a partial order: ") + e.what());
	}
}

} // namespace

PartialString parse_partial_string(std::string_view text) { return parse_block(split_lines(text)); }

std::string to_text(const PartialString &x) {
	std::ostringstream os;
	os << "events:";
	for (const auto &l : x.labels())
		os << ' ' << l.token();
	os << '\n';
	for (auto [i, j] : hasse(x))
		os << "order: " << i << " < " << j << '\n';
	return os.str();
}

Program parse_program(std::string_view text) {
	std::vector<PartialString> gens;
	std::vector<Line> block;
	bool separated = false;
	std::size_t last_line = 1;
	auto blank = [&] {
		for (const auto &l : block)
			if (!is_skippable(l.text))
				return false;
		return true;
	};
	for (const auto &l : split_lines(text)) {
		last_line = l.number;
		if (trim(l.text) != "---") {
			block.push_back(l);
			continue;
		}
		if (blank())
			throw FormatError(l.number, "empty block before '---'");
		gens.push_back(parse_block(block));
		block.clear();
		separated = true;
	}
	if (!blank())
		gens.push_back(parse_block(block));
	else if (separated)
		throw FormatError(last_line, "empty block after '---'");
	return program_of(std::move(gens));
}

std::string to_text(const Program &p) {
	std::string out;
	for (std::size_t i = 0; i < p.size(); ++i) {
		if (i)
			out += "---\n";
		out += to_text(p.generators()[i]);
	}
	return out;
}

} // namespace cka
