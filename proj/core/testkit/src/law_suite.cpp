#include "cka/testkit/law_suite.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "cka/language.hpp"
#include "cka/morphism.hpp"
#include "cka/program.hpp"
#include "cka/testkit/generators.hpp"
#include "cka/testkit/oracle.hpp"

namespace cka::testkit {

bool LawReport::all_passed() const {
	return std::all_of(laws.begin(), laws.end(), [](const LawResult &r) { return r.ok(); });
}

const LawResult *LawReport::find(const std::string &name) const {
	for (const auto &r : laws)
		if (r.name == name)
			return &r;
	return nullptr;
}

namespace {

// Inputs shared by every law within one case.
struct Corpus {
	PartialString u, v, x, y, z;
	PartialString x_refined; // refines x
	PartialString y_refined; // refines y, which refines y_coarse
	PartialString y_coarse;
	DependenceRelation dep;
	Program pu, pv, px, py, pz;
};

Corpus draw(Rng &rng, const LawConfig &cfg) {
	GenConfig g;
	g.max_events = cfg.max_events;
	g.alphabet = cfg.alphabet;
	g.edge_probability = 0.4;
	Corpus c{random_partial_string(rng, g), random_partial_string(rng, g), random_partial_string(rng, g),
	         random_partial_string(rng, g), random_partial_string(rng, g), {}, {}, {}, {}, {}, {}, {}, {}, {}};
	c.x_refined = random_refinement(rng, c.x, 0.3);
	c.y_coarse = random_partial_string(rng, g);
	c.y_refined = random_refinement(rng, c.y_coarse, 0.3);
	c.dep = random_dependence(rng, cfg.alphabet);
	c.pu = random_program(rng, g, cfg.max_generators);
	c.pv = random_program(rng, g, cfg.max_generators);
	c.px = random_program(rng, g, cfg.max_generators);
	c.py = random_program(rng, g, cfg.max_generators);
	c.pz = random_program(rng, g, cfg.max_generators);
	return c;
}

struct Law {
	std::string name;
	std::function<bool(const Corpus &)> holds;
};

std::vector<Law> make_laws(const LawConfig &cfg) {
	const Composition S = cfg.sequential;
	const Composition P = cfg.concurrent;
	auto weak = [](const Corpus &c) { return Composition::weak(c.dep); };
	const Program O = one();
	const Program N = zero();

	std::vector<Law> laws;
	auto add = [&](std::string name, std::function<bool(const Corpus &)> fn) {
		laws.push_back({std::move(name), std::move(fn)});
	};

	// Partial strings.
	add("pomset.valid", [](const Corpus &c) {
		return validate(c.x).ok() && validate(c.x_refined).ok() && validate(c.y_refined).ok();
	});
	add("pomset.reflexive", [](const Corpus &c) { return refines(c.x, c.x) && refines(c.u, c.u); });
	add("pomset.transitive", [](const Corpus &c) {
		const bool chain = refines(c.y_refined, c.y_coarse);
		const bool random = !(refines(c.x, c.y) && refines(c.y, c.z)) || refines(c.x, c.z);
		return chain && random;
	});
	add("pomset.antisymmetry-iso", [](const Corpus &c) {
		auto check = [](const PartialString &a, const PartialString &b) {
			return (refines(a, b) && refines(b, a)) == brute_force_isomorphic(a, b);
		};
		return check(c.x, c.x_refined) && check(c.x, c.y) && check(c.y_refined, c.y_coarse);
	});
	add("pomset.par-commutative", [P](const Corpus &c) { return isomorphic(P(c.x, c.y), P(c.y, c.x)); });
	add("pomset.identity", [S, P, weak](const Corpus &c) {
		const PartialString bot = empty();
		for (const Composition &op : {S, P, weak(c)})
			if (!isomorphic(op(c.x, bot), c.x) || !isomorphic(op(bot, c.x), c.x))
				return false;
		return true;
	});
	add("pomset.weak-sandwich", [S, P, weak](const Corpus &c) {
		const PartialString w = weak(c)(c.x, c.y);
		return refines(S(c.x, c.y), w) && refines(w, P(c.x, c.y));
	});
	add("pomset.monotone", [S, P](const Corpus &c) {
		for (const Composition &op : {S, P})
			if (!refines(op(c.x_refined, c.z), op(c.x, c.z)) || !refines(op(c.z, c.x_refined), op(c.z, c.x)))
				return false;
		return true;
	});
	add("pomset.associative", [S, P](const Corpus &c) {
		for (const Composition &op : {S, P})
			if (!isomorphic(op(op(c.x, c.y), c.z), op(c.x, op(c.y, c.z))))
				return false;
		return true;
	});
	add("pomset.exchange", [S, P](const Corpus &c) {
		const PartialString lhs = S(P(c.u, c.v), P(c.x, c.y));
		const PartialString rhs = P(S(c.u, c.x), S(c.v, c.y));
		const auto witness = find_morphism(rhs, lhs);
		return witness && witness->verify(rhs, lhs);
	});
	add("pomset.frame", [S, P](const Corpus &c) {
		return refines(S(P(c.x, c.y), c.z), P(c.x, S(c.y, c.z))) && refines(S(c.x, P(c.y, c.z)), P(S(c.x, c.y), c.z));
	});
	add("pomset.counting", [S, P, weak](const Corpus &c) {
		const PartialString s = S(c.x, c.y), w = weak(c)(c.x, c.y), p = P(c.x, c.y);
		const std::size_t n = c.x.size() + c.y.size();
		return s.size() == n && w.size() == n && p.size() == n && s.order_pairs() >= w.order_pairs() &&
		       w.order_pairs() >= p.order_pairs();
	});
	add("pomset.oracle", [](const Corpus &c) {
		return refines(c.x_refined, c.x) == brute_force_refines(c.x_refined, c.x) &&
		       refines(c.x, c.x_refined) == brute_force_refines(c.x, c.x_refined) &&
		       refines(c.x, c.y) == brute_force_refines(c.x, c.y);
	});

	// Programs.
	add("program.union-associative", [](const Corpus &c) {
		return equals(punion(c.px, punion(c.py, c.pz)), punion(punion(c.px, c.py), c.pz));
	});
	add("program.union-commutative", [](const Corpus &c) { return equals(punion(c.px, c.py), punion(c.py, c.px)); });
	add("program.union-idempotent", [](const Corpus &c) { return equals(punion(c.px, c.px), c.px); });
	add("program.union-zero", [N](const Corpus &c) { return equals(punion(c.px, N), c.px) && equals(punion(N, c.px), c.px); });
	add("program.seq-zero", [S, N](const Corpus &c) {
		return equals(pcompose(c.px, N, S), N) && equals(pcompose(N, c.px, S), N);
	});
	add("program.par-zero", [P, N](const Corpus &c) {
		return equals(pcompose(c.px, N, P), N) && equals(pcompose(N, c.px, P), N);
	});
	add("program.seq-one", [S, O](const Corpus &c) {
		return equals(pcompose(c.px, O, S), c.px) && equals(pcompose(O, c.px, S), c.px);
	});
	add("program.par-one", [P, O](const Corpus &c) {
		return equals(pcompose(c.px, O, P), c.px) && equals(pcompose(O, c.px, P), c.px);
	});
	add("program.par-commutative", [P](const Corpus &c) { return equals(pcompose(c.px, c.py, P), pcompose(c.py, c.px, P)); });
	add("program.seq-associative", [S](const Corpus &c) {
		return equals(pcompose(pcompose(c.px, c.py, S), c.pz, S), pcompose(c.px, pcompose(c.py, c.pz, S), S));
	});
	add("program.par-associative", [P](const Corpus &c) {
		return equals(pcompose(pcompose(c.px, c.py, P), c.pz, P), pcompose(c.px, pcompose(c.py, c.pz, P), P));
	});
	for (const auto &[tag, op] : {std::pair<std::string, Composition>{"seq", S}, {"par", P}}) {
		add("program." + tag + "-distributes-left", [op](const Corpus &c) {
			return equals(pcompose(c.px, punion(c.py, c.pz), op), punion(pcompose(c.px, c.py, op), pcompose(c.px, c.pz, op)));
		});
		add("program." + tag + "-distributes-right", [op](const Corpus &c) {
			return equals(pcompose(punion(c.px, c.py), c.pz, op), punion(pcompose(c.px, c.pz, op), pcompose(c.py, c.pz, op)));
		});
	}
	add("program.exchange", [S, P](const Corpus &c) {
		return subset(pcompose(pcompose(c.pu, c.pv, P), pcompose(c.px, c.py, P), S),
		              pcompose(pcompose(c.pu, c.px, S), pcompose(c.pv, c.py, S), P));
	});
	add("program.order-join", [S, P](const Corpus &c) {
		auto law = [](const Program &a, const Program &b) { return subset(a, b) == equals(punion(a, b), b); };
		return law(c.px, c.py) && law(c.px, punion(c.px, c.pz)) &&
		       law(pcompose(c.px, c.py, S), pcompose(c.px, c.py, P)) && law(pcompose(c.px, c.py, P), pcompose(c.px, c.py, S));
	});
	add("program.frame-i", [S, P](const Corpus &c) { return subset(pcompose(c.px, c.py, S), pcompose(c.px, c.py, P)); });
	add("program.frame-left", [S, P](const Corpus &c) {
		return subset(pcompose(pcompose(c.px, c.py, P), c.pz, S), pcompose(c.px, pcompose(c.py, c.pz, S), P));
	});
	add("program.frame-right", [S, P](const Corpus &c) {
		return subset(pcompose(c.px, pcompose(c.py, c.pz, P), S), pcompose(pcompose(c.px, c.py, S), c.pz, P));
	});
	add("program.weak-consistency", [S, P](const Corpus &c) {
		return subset(punion(pcompose(c.px, c.py, S), pcompose(c.py, c.px, S)), pcompose(c.px, c.py, P));
	});
	add("program.weak-sandwich", [S, P, weak](const Corpus &c) {
		const Program w = pcompose(c.px, c.py, weak(c));
		return subset(pcompose(c.px, c.py, S), w) && subset(w, pcompose(c.px, c.py, P));
	});
	add("program.normalize-preserves", [S](const Corpus &c) {
		std::vector<PartialString> raw = c.px.generators();
		raw.insert(raw.end(), c.py.generators().begin(), c.py.generators().end());
		for (const auto &g : c.px.generators())
			for (const auto &h : c.py.generators())
				raw.push_back(S(g, h));
		const Program p(std::move(raw));
		return equals(p, normalize_program(p));
	});
	add("program.subset-preorder", [S, P](const Corpus &c) {
		const Program a = pcompose(c.px, c.py, S);
		const Program b = pcompose(c.px, c.py, P);
		const Program d = punion(b, c.pz);
		const bool transitive = !(subset(c.px, c.py) && subset(c.py, c.pz)) || subset(c.px, c.pz);
		return subset(c.px, c.px) && subset(a, b) && subset(b, d) && subset(a, d) && transitive;
	});
	add("program.star-one", [S, P, O](const Corpus &c) {
		return equals(star(c.px, S, StarBound(1)), O) && equals(star(c.px, P, StarBound(1)), O);
	});
	add("program.star-chain", [S, P](const Corpus &c) {
		for (const Composition &op : {S, P}) {
			Program prev = star(c.px, op, StarBound(1));
			for (unsigned n = 2; n <= 3; ++n) {
				Program next = star(c.px, op, StarBound(n));
				if (!subset(prev, next))
					return false;
				prev = std::move(next);
			}
		}
		return true;
	});
	add("program.star-unfold", [S, P, O](const Corpus &c) {
		for (const Composition &op : {S, P})
			for (unsigned n = 2; n <= 3; ++n)
				if (!equals(star(c.px, op, StarBound(n)), punion(O, pcompose(c.px, star(c.px, op, StarBound(n - 1)), op))))
					return false;
		return true;
	});

	// Languages.
	add("language.linearizations-refine", [](const Corpus &c) {
		for (const PartialString *p : {&c.x, &c.x_refined})
			for (const Word &w : linearize(*p))
				if (!refines(as_partial_string(w), *p))
					return false;
		return true;
	});
	add("language.extension-count", [](const Corpus &c) {
		// Distinct labels so that words and linear extensions correspond.
		std::vector<Label> labels;
		for (EventId e = 0; e < c.x.size(); ++e)
			labels.emplace_back("e" + std::to_string(e));
		const PartialString distinct(labels, c.x.order());
		return linearize(distinct).size() == brute_force_linear_extensions(distinct);
	});
	add("language.monotone", [S, P](const Corpus &c) {
		auto law = [](const Program &a, const Program &b) { return !subset(a, b) || lang_subset(a, b); };
		return law(c.px, c.py) && law(pcompose(c.px, c.py, S), pcompose(c.px, c.py, P)) &&
		       law(c.px, punion(c.px, c.pz));
	});
	return laws;
}

} // namespace

LawReport law_suite(const LawConfig &cfg) {
	LawReport report;
	report.seed = cfg.seed;
	report.cases = cfg.cases;
	report.max_events = cfg.max_events;

	const std::vector<Law> laws = make_laws(cfg);
	report.laws.resize(laws.size());
	for (std::size_t k = 0; k < laws.size(); ++k)
		report.laws[k].name = laws[k].name;

	for (std::size_t i = 0; i < cfg.cases; ++i) {
		Rng rng(derive_seed(cfg.seed, i));
		const Corpus corpus = draw(rng, cfg);
		for (std::size_t k = 0; k < laws.size(); ++k) {
			LawResult &r = report.laws[k];
			if (laws[k].holds(corpus)) {
				++r.passed;
			} else {
				if (r.failed == 0)
					r.first_failure = "case " + std::to_string(i);
				++r.failed;
			}
		}
	}
	return report;
}

std::string render(const LawReport &report, bool machine_lines) {
	std::size_t width = 0;
	for (const auto &r : report.laws)
		width = std::max(width, r.name.size());

	std::ostringstream os;
	os << "law suite: seed=" << report.seed << " cases=" << report.cases << " max-events=" << report.max_events
	   << '\n';
	std::size_t failing = 0;
	for (const auto &r : report.laws) {
		os << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::right << std::setw(5)
		   << r.passed << '/' << std::left << std::setw(5) << (r.passed + r.failed) << (r.ok() ? "pass" : "FAIL");
		if (!r.ok()) {
			os << "  (first failure: " << r.first_failure << ")";
			++failing;
		}
		os << '\n';
	}
	os << "result: " << (failing ? "FAIL" : "pass") << " (" << report.laws.size() << " laws, " << failing
	   << " failing)\n";
	if (machine_lines)
		for (const auto &r : report.laws)
			os << "#law " << r.name << ' ' << (r.ok() ? "pass" : "fail") << '\n';
	return os.str();
}

} // namespace cka::testkit
