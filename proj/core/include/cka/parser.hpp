#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cka/expr.hpp"

namespace cka {

enum class TokenKind { Ident, Zero, One, Integer, Semi, Bar, Plus, LParen, RParen, Comma, SeqStar, ParStar };

const char *to_string(TokenKind k) noexcept;

struct Token {
	TokenKind kind;
	std::string text;
	std::size_t offset; // 0-based byte offset into the input

	friend bool operator==(const Token &, const Token &) = default;
};

/// Lexical or syntax error at a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t offset, const std::string &what)
	    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
	std::size_t offset() const noexcept { return offset_; }

private:
	std::size_t offset_;
};

std::vector<Token> tokenize(std::string_view input);

/// Grammar, lowest precedence first, all binary operators left-associative:
///
///     union   := par ('+' par)*
///     par     := seq ('|' seq)*
///     seq     := primary (';' primary)*
///     primary := IDENT | '0' | '1' | '(' union ')'
///              | ('seqstar' | 'parstar') '(' union ',' INT ')'
Expr parse(const std::vector<Token> &tokens);

inline Expr parse(std::string_view input) { return parse(tokenize(input)); }

} // namespace cka
