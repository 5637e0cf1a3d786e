#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
	int code;
	std::string out;
};

std::string quote(const std::string &s) {
	std::string q = "'";
	for (char c : s)
		q += c == '\'' ? std::string("'\\''") : std::string(1, c);
	return q + "'";
}

Run run(std::initializer_list<std::string> args) {
	std::string cmd = CKA_CLI_PATH;
	for (const auto &a : args)
		cmd += ' ' + quote(a);
	cmd += " 2>&1";
	FILE *pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::string out;
	std::array<char, 4096> buf{};
	while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
		out.append(buf.data(), n);
	const int status = pclose(pipe);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool starts_with(const std::string &s, const std::string &prefix) { return s.rfind(prefix, 0) == 0; }

} // namespace

TEST_CASE("refines") {
	CHECK(run({"refines", "a;b", "a|b"}).code == 0);
	const Run fails = run({"refines", "a|b", "a;b + b;a"});
	CHECK(fails.code == 1);
	CHECK(starts_with(fails.out, "fails\n"));
	CHECK(fails.out.find("counterexample") != std::string::npos);
	CHECK(run({"refines", "x", "x"}).code == 0);

	const Run n = run({"refines", "--pomset", "@N4", "@P4"});
	CHECK(n.code == 0);
	CHECK(n.out.find("witness (right -> left):") != std::string::npos);
	const Run p = run({"refines", "--pomset", "@P4", "@N4"});
	CHECK(p.code == 1);
	CHECK(p.out.find("witness") == std::string::npos);

	CHECK(run({"refines", "--pomset", "a+b", "a"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
	const Run r = run({"refines", "a ; $", "a"});
	CHECK(r.code == 2);
	CHECK(r.out.find("offset 4") != std::string::npos);
	CHECK(run({"refines", "a"}).code == 2);
	CHECK(run({"equal", "(a", "a"}).code == 2);
	CHECK(run({"refines", "@X9", "a"}).code == 2);
	CHECK(run({"nonsense"}).code == 2);
	CHECK(run({"star", "a", "--bound", "0"}).code == 2);
}

TEST_CASE("equal and member") {
	CHECK(run({"equal", "a+b", "b+a"}).code == 0);
	CHECK(run({"equal", "a;1", "a"}).code == 0);
	CHECK(run({"equal", "0", "1"}).code == 1);
	CHECK(run({"equal", "(a|b);c", "a|(b;c)"}).code == 1);
	CHECK(run({"member", "a|b", "b;a"}).code == 0);
	CHECK(run({"member", "1", "a"}).code == 1);
	CHECK(run({"member", "a", "a+b"}).code == 2);
}

TEST_CASE("lang") {
	CHECK(run({"lang", "a|b"}).out == "a b\nb a\n");
	CHECK(run({"lang", "1"}).out == "ε\n");
	CHECK(run({"lang", "seqstar(a,3)"}).out == "ε\na\na a\n");
	CHECK(run({"lang", "@N4"}).out == run({"lang", "@P4"}).out);
	const Run capped = run({"lang", "a|b|c", "--max-display", "2"});
	CHECK(capped.out == "a b c\na c b\n... (4 more, 6 total)\n");
}

TEST_CASE("dot") {
	const Run chain = run({"dot", "a;b;c"});
	CHECK(chain.code == 0);
	CHECK(chain.out.find("e0 -> e1;\n  e1 -> e2;") != std::string::npos);
	CHECK(chain.out.find("e0 -> e2") == std::string::npos);
	CHECK(run({"dot", "a|b"}).out.find("->") == std::string::npos);
	const Run n = run({"dot", "@N4"});
	CHECK(n.out.find("e0 -> e2;\n  e0 -> e3;\n  e1 -> e3;") != std::string::npos);
	const Run multi = run({"dot", "a+b"});
	CHECK(multi.code == 2);
	CHECK(multi.out.find("2 generators") != std::string::npos);
}

TEST_CASE("file operands") {
	const std::string path = "cli_test_n.ps";
	{
		std::ofstream f(path);
		f << "events: a a b b\norder: 0 < 2\norder: 0 < 3\norder: 1 < 3\n";
	}
	CHECK(run({"refines", "--pomset", "--file", path, "--file", path}).code == 0);
	CHECK(run({"dot", "--file", path}).out == run({"dot", "@N4"}).out);
	{
		std::ofstream f("cli_test_bad.ps");
		f << "events: a b\norder: 0 < 1\norder: 1 < 0\n";
	}
	CHECK(run({"dot", "--file", "cli_test_bad.ps"}).code == 2);
	std::remove(path.c_str());
	std::remove("cli_test_bad.ps");
}

TEST_CASE("star") {
	CHECK(run({"star", "a", "--bound", "3"}).out == "events:\n---\nevents: a\n---\nevents: a a\norder: 0 < 1\n");
	CHECK(run({"star", "a", "--op", "par", "--bound", "2"}).out == "events:\n---\nevents: a\n");
}

TEST_CASE("weak sequencing flag") {
	CHECK(run({"equal", "--weak-dep", "a:b", "a;b;c", "(a;b)|c"}).code == 0);
	CHECK(run({"equal", "a;b;c", "(a;b)|c"}).code == 1);
	CHECK(run({"equal", "--weak-dep", "a:b", "b;a", "a|b"}).code == 0);
	CHECK(run({"equal", "--weak-dep", "a:b", "--weak-symmetric", "b;a", "a|b"}).code == 1);
	CHECK(run({"refines", "--weak-dep", "ab", "a", "a"}).code == 2);
}

TEST_CASE("laws") {
	const Run a = run({"laws", "--cases", "20", "--seed", "9", "--machine"});
	const Run b = run({"laws", "--cases", "20", "--seed", "9", "--machine"});
	CHECK(a.code == 0);
	CHECK(a.out == b.out);
	CHECK(a.out.find("seed=9") != std::string::npos);
	CHECK(a.out.find("#law pomset.exchange pass") != std::string::npos);
	CHECK(run({"laws", "--cases", "20"}).out.find("#law") == std::string::npos);
}
