#include <doctest.h>

#include "cka/expr.hpp"
#include "cka/morphism.hpp"
#include "cka/parser.hpp"
#include "fixtures.hpp"

using namespace cka;
using cka::test::sym;

namespace {

Expr s(const char *l) { return Expr::sym(Label(l)); }

} // namespace

TEST_CASE("tokenize") {
	CHECK(tokenize("(a;b)|(a;b)").size() == 11);

	const auto star = tokenize("seqstar(a,3)");
	REQUIRE(star.size() == 6);
	CHECK(star[0].kind == TokenKind::SeqStar);
	CHECK(star[1].kind == TokenKind::LParen);
	CHECK(star[2].kind == TokenKind::Ident);
	CHECK(star[3].kind == TokenKind::Comma);
	CHECK(star[4].kind == TokenKind::Integer);
	CHECK(star[4].text == "3");
	CHECK(star[5].kind == TokenKind::RParen);

	const auto t = tokenize(" x_1 + 0 | 1 ; 12");
	REQUIRE(t.size() == 7);
	CHECK(t[0] == Token{TokenKind::Ident, "x_1", 1});
	CHECK(t[2].kind == TokenKind::Zero);
	CHECK(t[4].kind == TokenKind::One);
	CHECK(t[6].kind == TokenKind::Integer);

	try {
		tokenize("a ; $");
		FAIL("expected lexical error");
	} catch (const ParseError &e) {
		CHECK(e.offset() == 4);
	}
	CHECK_THROWS_AS(tokenize("a ∥ b"), ParseError);
}

TEST_CASE("parse precedence") {
	CHECK(parse("a;b|c") == Expr::par(Expr::seq(s("a"), s("b")), s("c")));
	CHECK(parse("a+b|c") == Expr::choice(s("a"), Expr::par(s("b"), s("c"))));
	CHECK(parse("(a;b)|(a;b)") == Expr::par(Expr::seq(s("a"), s("b")), Expr::seq(s("a"), s("b"))));
	CHECK(parse("a;b;c") == Expr::seq(Expr::seq(s("a"), s("b")), s("c")));
	CHECK(parse("a|(b|c)") == Expr::par(s("a"), Expr::par(s("b"), s("c"))));
	CHECK(parse("parstar(a+b, 2)") == Expr::par_star(Expr::choice(s("a"), s("b")), StarBound(2)));
	CHECK(parse("seqstar(a,1);0") == Expr::seq(Expr::seq_star(s("a"), StarBound(1)), Expr::zero()));
}

TEST_CASE("parse errors") {
	auto offset_of = [](const char *text) -> std::size_t {
		try {
			parse(text);
		} catch (const ParseError &e) {
			return e.offset();
		}
		return 999;
	};
	CHECK(offset_of("a;") == 2);
	CHECK(offset_of("a b") == 2);
	CHECK(offset_of("(a;b") == 4);
	CHECK(offset_of(")") == 0);
	CHECK(offset_of("seqstar(a,0)") == 10);
	CHECK(offset_of("seqstar(a)") == 9);
	CHECK(offset_of("a;7") == 2);
	CHECK(offset_of("") == 0);
}

TEST_CASE("pretty round trip") {
	for (const char *text : {"a;b|c", "a+b|c", "(a;b)|(a;b)", "a;(b;c)", "(a+b);c", "a|(b|c)+0",
	                         "seqstar(a|b, 3);parstar(1+c, 2)", "((x))", "a;(b+c)|d"}) {
		const Expr e = parse(text);
		CHECK(parse(pretty(e)) == e);
	}
	CHECK(pretty(parse("(a;b)|(a;b)")) == "a;b | a;b");
	CHECK(pretty(parse("a;(b;c)")) == "a;(b;c)");
}

TEST_CASE("eval") {
	CHECK(equals(eval(parse("1")), one()));
	CHECK(eval(parse("a;0")).is_zero());
	CHECK(eval(parse("0|a")).is_zero());

	const Program lhs = eval(parse("(a|b);c"));
	const Program rhs = eval(parse("a|(b;c)"));
	CHECK_FALSE(equals(lhs, rhs));
	CHECK(subset(lhs, rhs));
	CHECK_FALSE(subset(rhs, lhs));

	CHECK(equals(eval(parse("a+b")), punion(eval(parse("a")), eval(parse("b")))));
	CHECK(equals(eval(parse("(a+b);c")), eval(parse("a;c+b;c"))));
	CHECK(equals(eval(parse("seqstar(a,3)")), star(eval(parse("a")), Composition::sequential(), StarBound(3))));

	const Program p = eval(parse("(a;b)|(a;b)"));
	REQUIRE(p.size() == 1);
	CHECK(isomorphic(p.generators()[0], cka::test::p4()));
}

TEST_CASE("eval with weak sequencing") {
	EvalOptions opts;
	opts.sequential = Composition::weak(DependenceRelation{{Label("a"), Label("b")}});
	const Program p = eval(parse("a;b;c"), opts);
	REQUIRE(p.size() == 1);
	const PartialString g = p.generators()[0];
	// a before b, c unordered
	CHECK(isomorphic(g, par(seq(sym("a"), sym("b")), sym("c"))));
}
