// cka: refinement checking and algebraic laws for partial strings and programs.
//
// Exit codes: 0 holds, 1 fails, 2 input error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cka/expr.hpp"
#include "cka/language.hpp"
#include "cka/morphism.hpp"
#include "cka/parser.hpp"
#include "cka/program.hpp"
#include "cka/render.hpp"
#include "cka/testkit/law_suite.hpp"
#include "cka/text_format.hpp"

namespace {

using namespace cka;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Named partial strings, referenced on the command line as @N4 and @P4.
const std::map<std::string, PartialString> &named_library() {
	static const std::map<std::string, PartialString> lib = [] {
		const Label a("a"), b("b");
		const std::vector<std::pair<EventId, EventId>> n_order{{0, 2}, {0, 3}, {1, 3}};
		std::map<std::string, PartialString> m;
		m.emplace("N4", PartialString::from_pairs({a, a, b, b}, n_order));
		m.emplace("P4", par(seq(singleton(a), singleton(b)), seq(singleton(a), singleton(b))));
		return m;
	}();
	return lib;
}

struct Operands {
	std::vector<std::string> exprs;
	std::vector<std::string> files;
	std::string weak_dep;
	bool weak_symmetric = false;
};

EvalOptions eval_options(const Operands &ops) {
	EvalOptions opts;
	if (ops.weak_dep.empty())
		return opts;
	DependenceRelation d;
	std::stringstream ss(ops.weak_dep);
	std::string item;
	while (std::getline(ss, item, ',')) {
		const auto colon = item.find(':');
		if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
			throw InputError("bad --weak-dep entry '" + item + "', expected a:b");
		const Label a(item.substr(0, colon)), b(item.substr(colon + 1));
		if (ops.weak_symmetric)
			d.add_symmetric(a, b);
		else
			d.add(a, b);
	}
	opts.sequential = Composition::weak(std::move(d));
	return opts;
}

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Program program_from_expr(const std::string &text, const EvalOptions &opts) {
	if (text.starts_with("@")) {
		const auto &lib = named_library();
		auto it = lib.find(text.substr(1));
		if (it == lib.end())
			throw InputError("unknown named example '" + text + "' (known: @N4, @P4)");
		return program_of({it->second});
	}
	return eval(parse(text), opts);
}

std::vector<Program> load_operands(const Operands &ops, std::size_t expected) {
	const EvalOptions opts = eval_options(ops);
	std::vector<Program> out;
	for (const auto &e : ops.exprs)
		out.push_back(program_from_expr(e, opts));
	for (const auto &f : ops.files)
		out.push_back(parse_program(read_file(f)));
	if (out.size() != expected)
		throw InputError("expected " + std::to_string(expected) + " operand(s), got " + std::to_string(out.size()));
	return out;
}

const PartialString &single_generator(const Program &p, const char *what) {
	if (p.size() != 1)
		throw InputError(std::string(what) + " must denote a single partial string, but has " +
		                 std::to_string(p.size()) + " generators");
	return p.generators()[0];
}

std::string mapping(const Morphism &f) {
	std::string out;
	for (EventId e = 0; e < f.size(); ++e) {
		if (e)
			out += ' ';
		out += std::to_string(e) + "->" + std::to_string(f(e));
	}
	return out.empty() ? "(empty)" : out;
}

class Stopwatch {
public:
	double ms() const {
		return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
	}

private:
	std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_elapsed(const Stopwatch &sw) {
	std::cout << "elapsed: " << std::fixed << std::setprecision(3) << sw.ms() << " ms\n";
}

// Reports every generator of `lhs` together with the generator of `rhs` it
// refines; stops at the first one that refines none.
bool report_subset(const Program &lhs, const Program &rhs, const std::string &side) {
	for (std::size_t i = 0; i < lhs.size(); ++i) {
		const PartialString &g = lhs.generators()[i];
		const auto hit = find_container(rhs, g);
		if (!hit) {
			std::cout << "counterexample: " << side << " generator " << i << " refines no generator of the other side\n"
			          << to_text(g);
			return false;
		}
		if (!hit->second.verify(rhs.generators()[hit->first], g))
			throw std::logic_error("internal error: witness failed verification");
		std::cout << "witness: " << side << " generator " << i << " <= generator " << hit->first << " via (right -> left) "
		          << mapping(hit->second) << '\n';
	}
	return true;
}

int cmd_refines(const Operands &ops, bool pomset) {
	const auto progs = load_operands(ops, 2);
	Stopwatch sw;
	bool holds = false;
	if (pomset) {
		const PartialString &x = single_generator(progs[0], "left operand");
		const PartialString &y = single_generator(progs[1], "right operand");
		const auto f = find_morphism(y, x);
		holds = f.has_value();
		std::cout << (holds ? "holds" : "fails") << '\n';
		if (f) {
			if (!f->verify(y, x))
				throw std::logic_error("internal error: witness failed verification");
			std::cout << "witness (right -> left): " << mapping(*f) << '\n';
		}
	} else {
		holds = subset(progs[0], progs[1]);
		std::cout << (holds ? "holds" : "fails") << '\n';
		report_subset(progs[0], progs[1], "left");
	}
	print_elapsed(sw);
	return holds ? kHolds : kFails;
}

int cmd_equal(const Operands &ops) {
	const auto progs = load_operands(ops, 2);
	Stopwatch sw;
	const bool holds = equals(progs[0], progs[1]);
	std::cout << (holds ? "holds" : "fails") << '\n';
	if (report_subset(progs[0], progs[1], "left"))
		report_subset(progs[1], progs[0], "right");
	print_elapsed(sw);
	return holds ? kHolds : kFails;
}

int cmd_member(const Operands &ops) {
	const auto progs = load_operands(ops, 2);
	const PartialString &x = single_generator(progs[1], "member candidate");
	Stopwatch sw;
	const auto hit = find_container(progs[0], x);
	std::cout << (hit ? "holds" : "fails") << '\n';
	if (hit) {
		if (!hit->second.verify(progs[0].generators()[hit->first], x))
			throw std::logic_error("internal error: witness failed verification");
		std::cout << "witness: generator " << hit->first << " via (generator -> candidate) " << mapping(hit->second)
		          << '\n';
	}
	print_elapsed(sw);
	return hit ? kHolds : kFails;
}

int cmd_lang(const Operands &ops, std::optional<std::size_t> max_display) {
	const auto progs = load_operands(ops, 1);
	const Language words = language(progs[0]);
	std::size_t shown = 0;
	for (const auto &w : words) {
		if (max_display && shown == *max_display)
			break;
		std::cout << to_string(w) << '\n';
		++shown;
	}
	if (shown < words.size())
		std::cout << "... (" << words.size() - shown << " more, " << words.size() << " total)\n";
	return kHolds;
}

int cmd_dot(const Operands &ops) {
	const auto progs = load_operands(ops, 1);
	std::cout << to_dot(single_generator(progs[0], "dot input"));
	return kHolds;
}

int cmd_star(const Operands &ops, const std::string &op, unsigned bound) {
	const auto progs = load_operands(ops, 1);
	const EvalOptions opts = eval_options(ops);
	const Composition &comp = op == "par" ? opts.concurrent : opts.sequential;
	std::cout << to_text(star(progs[0], comp, StarBound(bound)));
	return kHolds;
}

int cmd_laws(const testkit::LawConfig &cfg, bool machine) {
	const testkit::LawReport report = testkit::law_suite(cfg);
	std::cout << testkit::render(report, machine);
	return report.all_passed() ? kHolds : kFails;
}

void add_operands(CLI::App *cmd, Operands &ops, const std::string &expr_help) {
	cmd->add_option("exprs", ops.exprs, expr_help);
	cmd->add_option("--file", ops.files, "Operand in the partial-string/program text format (repeatable)")
	    ->check(CLI::ExistingFile);
	cmd->add_option("--weak-dep", ops.weak_dep, "Evaluate ';' as weak sequencing with dependence pairs a:b,c:d");
	cmd->add_flag("--weak-symmetric", ops.weak_symmetric, "Add every --weak-dep pair in both directions");
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Refinement checking for partial strings and concurrent programs"};
	app.require_subcommand(1);

	Operands ops;
	bool pomset = false;
	std::optional<std::size_t> max_display;
	std::string star_op = "seq";
	unsigned star_bound = 1;
	testkit::LawConfig law_cfg;
	bool machine = false;

	auto *refines_cmd = app.add_subcommand("refines", "Check E1 ⊆ E2 (or partial-string refinement with --pomset)");
	add_operands(refines_cmd, ops, "Two algebra expressions, or @N4 / @P4");
	refines_cmd->add_flag("--pomset", pomset, "Compare single partial strings instead of programs");

	auto *equal_cmd = app.add_subcommand("equal", "Check semantic equality of two programs");
	add_operands(equal_cmd, ops, "Two algebra expressions");

	auto *member_cmd = app.add_subcommand("member", "Check that partial string E2 belongs to program E1");
	add_operands(member_cmd, ops, "Program expression, then a single partial string");

	auto *lang_cmd = app.add_subcommand("lang", "List the words of a program's language");
	add_operands(lang_cmd, ops, "One algebra expression");
	lang_cmd->add_option("--max-display", max_display, "Print at most this many words");

	auto *dot_cmd = app.add_subcommand("dot", "Emit the Hasse diagram of a partial string as DOT");
	add_operands(dot_cmd, ops, "One expression denoting a single partial string");

	auto *star_cmd = app.add_subcommand("star", "Print the bounded Kleene star of a program");
	add_operands(star_cmd, ops, "One algebra expression");
	star_cmd->add_option("--op", star_op, "Composition to iterate")->check(CLI::IsMember({"seq", "par"}));
	star_cmd->add_option("--bound", star_bound, "Iteration count n >= 1")->check(CLI::PositiveNumber);

	auto *laws_cmd = app.add_subcommand("laws", "Run the algebraic law suite on seeded random inputs");
	laws_cmd->add_option("--cases", law_cfg.cases, "Random cases per law")->check(CLI::PositiveNumber);
	laws_cmd->add_option("--max-events", law_cfg.max_events, "Maximum events per generated partial string");
	laws_cmd->add_option("--max-generators", law_cfg.max_generators, "Maximum generators per random program");
	laws_cmd->add_option("--seed", law_cfg.seed, "Random seed");
	laws_cmd->add_flag("--machine", machine, "Append '#law <name> pass|fail' lines");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kInputError;
	}

	try {
		if (*refines_cmd)
			return cmd_refines(ops, pomset);
		if (*equal_cmd)
			return cmd_equal(ops);
		if (*member_cmd)
			return cmd_member(ops);
		if (*lang_cmd)
			return cmd_lang(ops, max_display);
		if (*dot_cmd)
			return cmd_dot(ops);
		if (*star_cmd)
			return cmd_star(ops, star_op, star_bound);
		if (*laws_cmd)
			return cmd_laws(law_cfg, machine);
	} catch (const ParseError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const FormatError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const InputError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const ValidationError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	}
	return kInputError;
}
