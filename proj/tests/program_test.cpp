#include <doctest.h>

#include "cka/morphism.hpp"
#include "cka/program.hpp"
#include "cka/text_format.hpp"
#include "cka/testkit/generators.hpp"
#include "fixtures.hpp"

using namespace cka;
using cka::test::sym;

namespace {

const Composition kSeq = Composition::sequential();
const Composition kPar = Composition::concurrent();

Program prog(const char *l) { return program_of({sym(l)}); }

bool same_generators(const Program &p, const std::vector<PartialString> &expected) {
	if (p.size() != expected.size())
		return false;
	for (const auto &e : expected) {
		bool found = false;
		for (const auto &g : p.generators())
			found = found || isomorphic(g, e);
		if (!found)
			return false;
	}
	return true;
}

} // namespace

TEST_CASE("zero and one") {
	CHECK(zero().is_zero());
	REQUIRE(one().size() == 1);
	CHECK(one().generators()[0].empty());
	CHECK_FALSE(equals(zero(), one()));

	const Program p = program_of({seq(sym("a"), sym("b")), sym("c")});
	CHECK(subset(zero(), p));
	for (const auto &op : {kSeq, kPar}) {
		CHECK(pcompose(p, zero(), op).is_zero());
		CHECK(pcompose(zero(), p, op).is_zero());
		CHECK(equals(pcompose(p, one(), op), p));
		CHECK(equals(pcompose(one(), p, op), p));
	}
}

TEST_CASE("program_of normalizes") {
	const PartialString s = seq(sym("a"), sym("b"));
	const PartialString p = par(sym("a"), sym("b"));
	const Program prog_ab = program_of({s, p});
	REQUIRE(prog_ab.size() == 1);
	CHECK(prog_ab.generators()[0] == p);

	CHECK(program_of({}).is_zero());
	REQUIRE(program_of({empty()}).size() == 1);
	CHECK(program_of({empty()}).generators()[0] == empty());
}

TEST_CASE("normalize_program") {
	SUBCASE("antichain unchanged") {
		const Program raw({sym("a"), seq(sym("a"), sym("b")), seq(sym("b"), sym("a"))});
		const Program n = normalize_program(raw);
		CHECK(n.size() == 3);
		CHECK(same_generators(n, raw.generators()));
	}
	SUBCASE("isomorphic copies keep the smaller serialization") {
		const std::vector<std::pair<EventId, EventId>> rev{{1, 0}};
		const PartialString flipped = PartialString::from_pairs({Label("b"), Label("a")}, rev);
		const PartialString ab = PartialString::from_pairs({Label("a"), Label("b")}, std::vector<std::pair<EventId, EventId>>{{0, 1}});
		REQUIRE(isomorphic(flipped, ab));
		const Program n = normalize_program(Program({flipped, ab}));
		REQUIRE(n.size() == 1);
		CHECK(n.generators()[0] == ab);
	}
	SUBCASE("semantics preserved") {
		const Program raw({seq(sym("a"), sym("b")), par(sym("a"), sym("b")), sym("a"), sym("a")});
		CHECK(equals(raw, normalize_program(raw)));
		CHECK(normalize_program(raw).size() == 2);
	}
}

TEST_CASE("contains") {
	const Program pab = program_of({par(sym("a"), sym("b"))});
	CHECK(contains(pab, seq(sym("a"), sym("b"))));
	CHECK(contains(pab, seq(sym("b"), sym("a"))));
	CHECK_FALSE(contains(one(), sym("a")));
	CHECK(contains(one(), empty()));
	CHECK_FALSE(contains(prog("a"), empty()));
	CHECK_FALSE(contains(zero(), empty()));

	const auto hit = find_container(pab, seq(sym("b"), sym("a")));
	REQUIRE(hit);
	CHECK(hit->first == 0);
	CHECK(hit->second.verify(pab.generators()[0], seq(sym("b"), sym("a"))));
}

TEST_CASE("subset and equals") {
	const Program x = prog("X"), y = prog("Y");
	CHECK(subset(pcompose(x, y, kSeq), pcompose(x, y, kPar)));
	CHECK_FALSE(subset(pcompose(x, y, kPar), pcompose(x, y, kSeq)));

	const Program a = prog("a"), b = prog("b");
	const Program interleavings = punion(pcompose(a, b, kSeq), pcompose(b, a, kSeq));
	CHECK_FALSE(subset(pcompose(a, b, kPar), interleavings));
	CHECK(subset(interleavings, pcompose(a, b, kPar)));

	CHECK(subset(interleavings, interleavings));
	CHECK(equals(punion(a, b), punion(b, a)));
	CHECK(equals(pcompose(a, one(), kSeq), a));
}

TEST_CASE("union") {
	const Program p = program_of({seq(sym("a"), sym("b")), sym("c")});
	CHECK(equals(punion(p, zero()), p));
	CHECK(equals(punion(p, p), p));
	const Program q = program_of({par(sym("a"), sym("b"))});
	// seq(a,b) is absorbed by par(a,b)
	CHECK(punion(p, q).size() == 2);
}

TEST_CASE("exchange and distributivity on programs") {
	const Program u = program_of({sym("a"), seq(sym("a"), sym("b"))});
	const Program v = prog("b");
	const Program x = program_of({par(sym("a"), sym("a"))});
	const Program y = punion(prog("a"), prog("b"));
	CHECK(subset(pcompose(pcompose(u, v, kPar), pcompose(x, y, kPar), kSeq),
	             pcompose(pcompose(u, x, kSeq), pcompose(v, y, kSeq), kPar)));
	for (const auto &op : {kSeq, kPar}) {
		CHECK(equals(pcompose(u, punion(x, y), op), punion(pcompose(u, x, op), pcompose(u, y, op))));
		CHECK(equals(pcompose(punion(u, x), y, op), punion(pcompose(u, y, op), pcompose(x, y, op))));
	}
}

TEST_CASE("bounded star") {
	const Program a = prog("a");
	CHECK(equals(star(a, kSeq, StarBound(1)), one()));
	CHECK(equals(star(program_of({seq(sym("a"), sym("b")), sym("c")}), kPar, StarBound(1)), one()));

	const Program a3 = star(a, kSeq, StarBound(3));
	CHECK(same_generators(a3, {empty(), sym("a"), seq(sym("a"), sym("a"))}));

	const Program ab = program_of({par(sym("a"), sym("b")), sym("c")});
	for (const auto &op : {kSeq, kPar})
		for (unsigned n = 1; n <= 4; ++n) {
			const Program lo = star(ab, op, StarBound(n));
			const Program hi = star(ab, op, StarBound(n + 1));
			CHECK(subset(lo, hi));
			CHECK(equals(hi, punion(one(), pcompose(ab, lo, op))));
		}
	CHECK_FALSE(subset(star(a, kPar, StarBound(3)), star(a, kPar, StarBound(2))));
	CHECK_THROWS_AS(StarBound(0), std::invalid_argument);
}

TEST_CASE("program text format") {
	const Program p = program_of({cka::test::n4(), seq(sym("c"), sym("d")), empty()});
	const std::string text = to_text(p);
	CHECK(equals(parse_program(text), p));
	CHECK(parse_program("").is_zero());
	CHECK(equals(parse_program("events:\n"), one()));
	CHECK(to_text(zero()).empty());
	CHECK(to_text(one()) == "events:\n");
	CHECK(parse_program("events: a\n---\nevents: b\n").size() == 2);
	CHECK_THROWS_AS(parse_program("---\nevents: a\n"), FormatError);
	CHECK_THROWS_AS(parse_program("events: a\n---\n"), FormatError);
}

TEST_CASE("random programs satisfy the representation invariant") {
	testkit::Rng rng(5);
	testkit::GenConfig cfg;
	cfg.max_events = 3;
	for (int i = 0; i < 100; ++i) {
		const Program p = testkit::random_program(rng, cfg, 3);
		for (std::size_t a = 0; a < p.size(); ++a)
			for (std::size_t b = 0; b < p.size(); ++b)
				if (a != b)
					CHECK_FALSE(refines(p.generators()[a], p.generators()[b]));
		CHECK(equals(p, normalize_program(p)));
	}
}
