#include "cka/parser.hpp"

#include <charconv>

namespace cka {

const char *to_string(TokenKind k) noexcept {
	switch (k) {
	case TokenKind::Ident:
		return "identifier";
	case TokenKind::Zero:
		return "'0'";
	case TokenKind::One:
		return "'1'";
	case TokenKind::Integer:
		return "integer";
	case TokenKind::Semi:
		return "';'";
	case TokenKind::Bar:
		return "'|'";
	case TokenKind::Plus:
		return "'+'";
	case TokenKind::LParen:
		return "'('";
	case TokenKind::RParen:
		return "')'";
	case TokenKind::Comma:
		return "','";
	case TokenKind::SeqStar:
		return "'seqstar'";
	case TokenKind::ParStar:
		return "'parstar'";
	}
	return "?";
}

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

std::vector<Token> tokenize(std::string_view input) {
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < input.size()) {
		const char c = input[i];
		if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
			++i;
			continue;
		}
		const std::size_t start = i;
		if (is_alpha(c)) {
			while (i < input.size() && (is_alpha(input[i]) || is_digit(input[i]) || input[i] == '_'))
				++i;
			std::string word(input.substr(start, i - start));
			TokenKind kind = TokenKind::Ident;
			if (word == "seqstar")
				kind = TokenKind::SeqStar;
			else if (word == "parstar")
				kind = TokenKind::ParStar;
			out.push_back({kind, std::move(word), start});
			continue;
		}
		if (is_digit(c)) {
			while (i < input.size() && is_digit(input[i]))
				++i;
			std::string digits(input.substr(start, i - start));
			TokenKind kind = digits == "0" ? TokenKind::Zero : digits == "1" ? TokenKind::One : TokenKind::Integer;
			out.push_back({kind, std::move(digits), start});
			continue;
		}
		TokenKind kind;
		switch (c) {
		case ';':
			kind = TokenKind::Semi;
			break;
		case '|':
			kind = TokenKind::Bar;
			break;
		case '+':
			kind = TokenKind::Plus;
			break;
		case '(':
			kind = TokenKind::LParen;
			break;
		case ')':
			kind = TokenKind::RParen;
			break;
		case ',':
			kind = TokenKind::Comma;
			break;
		default:
			throw ParseError(start, std::string("lexical error: unexpected character '") + c + "'");
		}
		out.push_back({kind, std::string(1, c), start});
		++i;
	}
	return out;
}

namespace {

class Parser {
public:
	explicit Parser(const std::vector<Token> &tokens) : tokens_(tokens) {}

	Expr parse_all() {
		Expr e = parse_union();
		if (pos_ != tokens_.size())
			unexpected();
		return e;
	}

private:
	const Token *peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
	bool at(TokenKind k) const { return peek() && peek()->kind == k; }

	std::size_t end_offset() const {
		if (tokens_.empty())
			return 0;
		return tokens_.back().offset + tokens_.back().text.size();
	}

	[[noreturn]] void unexpected() const {
		if (const Token *t = peek())
			throw ParseError(t->offset, "syntax error: unexpected " + std::string(to_string(t->kind)) + " '" +
			                                t->text + "'");
		throw ParseError(end_offset(), "syntax error: unexpected end of input");
	}

	const Token &expect(TokenKind k) {
		if (!at(k)) {
			if (const Token *t = peek())
				throw ParseError(t->offset, "syntax error: expected " + std::string(to_string(k)) + ", got '" +
				                                t->text + "'");
			throw ParseError(end_offset(), "syntax error: expected " + std::string(to_string(k)) +
			                                   ", got end of input");
		}
		return tokens_[pos_++];
	}

	Expr parse_union() {
		Expr e = parse_par();
		while (at(TokenKind::Plus)) {
			++pos_;
			e = Expr::choice(std::move(e), parse_par());
		}
		return e;
	}

	Expr parse_par() {
		Expr e = parse_seq();
		while (at(TokenKind::Bar)) {
			++pos_;
			e = Expr::par(std::move(e), parse_seq());
		}
		return e;
	}

	Expr parse_seq() {
		Expr e = parse_primary();
		while (at(TokenKind::Semi)) {
			++pos_;
			e = Expr::seq(std::move(e), parse_primary());
		}
		return e;
	}

	unsigned parse_bound() {
		const Token *t = peek();
		if (!t)
			unexpected();
		if (t->kind != TokenKind::One && t->kind != TokenKind::Integer && t->kind != TokenKind::Zero)
			throw ParseError(t->offset, "syntax error: expected star bound, got '" + t->text + "'");
		unsigned v = 0;
		auto [ptr, ec] = std::from_chars(t->text.data(), t->text.data() + t->text.size(), v);
		if (ec != std::errc{})
			throw ParseError(t->offset, "syntax error: star bound '" + t->text + "' out of range");
		if (v == 0)
			throw ParseError(t->offset, "syntax error: star bound must be at least 1");
		++pos_;
		return v;
	}

	Expr parse_primary() {
		const Token *t = peek();
		if (!t)
			unexpected();
		switch (t->kind) {
		case TokenKind::Ident:
			++pos_;
			return Expr::sym(Label(t->text));
		case TokenKind::Zero:
			++pos_;
			return Expr::zero();
		case TokenKind::One:
			++pos_;
			return Expr::one();
		case TokenKind::LParen: {
			++pos_;
			Expr e = parse_union();
			expect(TokenKind::RParen);
			return e;
		}
		case TokenKind::SeqStar:
		case TokenKind::ParStar: {
			const bool sequential = t->kind == TokenKind::SeqStar;
			++pos_;
			expect(TokenKind::LParen);
			Expr body = parse_union();
			expect(TokenKind::Comma);
			StarBound bound(parse_bound());
			expect(TokenKind::RParen);
			return sequential ? Expr::seq_star(std::move(body), bound) : Expr::par_star(std::move(body), bound);
		}
		default:
			unexpected();
		}
	}

	const std::vector<Token> &tokens_;
	std::size_t pos_ = 0;
};

} // namespace

Expr parse(const std::vector<Token> &tokens) { return Parser(tokens).parse_all(); }

} // namespace cka
