#include "cka/expr.hpp"

#include <stdexcept>

namespace cka {

struct Expr::Node {
	Kind kind;
	std::optional<Label> symbol;
	std::optional<Expr> lhs;
	std::optional<Expr> rhs;
	unsigned bound = 0;
};

Expr Expr::zero() { return Expr(std::make_shared<const Node>(Node{Kind::Zero, {}, {}, {}, 0})); }
Expr Expr::one() { return Expr(std::make_shared<const Node>(Node{Kind::One, {}, {}, {}, 0})); }
Expr Expr::sym(Label l) { return Expr(std::make_shared<const Node>(Node{Kind::Sym, std::move(l), {}, {}, 0})); }

Expr Expr::seq(Expr lhs, Expr rhs) {
	return Expr(std::make_shared<const Node>(Node{Kind::Seq, {}, std::move(lhs), std::move(rhs), 0}));
}
Expr Expr::par(Expr lhs, Expr rhs) {
	return Expr(std::make_shared<const Node>(Node{Kind::Par, {}, std::move(lhs), std::move(rhs), 0}));
}
Expr Expr::choice(Expr lhs, Expr rhs) {
	return Expr(std::make_shared<const Node>(Node{Kind::Union, {}, std::move(lhs), std::move(rhs), 0}));
}
Expr Expr::seq_star(Expr body, StarBound bound) {
	return Expr(std::make_shared<const Node>(Node{Kind::SeqStar, {}, std::move(body), {}, bound.value()}));
}
Expr Expr::par_star(Expr body, StarBound bound) {
	return Expr(std::make_shared<const Node>(Node{Kind::ParStar, {}, std::move(body), {}, bound.value()}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

const Label &Expr::symbol() const {
	if (!node_->symbol)
		throw std::logic_error("Expr::symbol on non-symbol node");
	return *node_->symbol;
}
const Expr &Expr::lhs() const {
	if (!node_->lhs)
		throw std::logic_error("Expr::lhs on leaf node");
	return *node_->lhs;
}
const Expr &Expr::rhs() const {
	if (!node_->rhs)
		throw std::logic_error("Expr::rhs on non-binary node");
	return *node_->rhs;
}
unsigned Expr::bound() const {
	if (node_->kind != Kind::SeqStar && node_->kind != Kind::ParStar)
		throw std::logic_error("Expr::bound on non-star node");
	return node_->bound;
}

bool operator==(const Expr &a, const Expr &b) {
	if (a.node_ == b.node_)
		return true;
	const auto &x = *a.node_;
	const auto &y = *b.node_;
	return x.kind == y.kind && x.symbol == y.symbol && x.lhs == y.lhs && x.rhs == y.rhs && x.bound == y.bound;
}

namespace {

int precedence(Expr::Kind k) {
	switch (k) {
	case Expr::Kind::Union:
		return 1;
	case Expr::Kind::Par:
		return 2;
	case Expr::Kind::Seq:
		return 3;
	default:
		return 4;
	}
}

void print(const Expr &e, std::string &out) {
	using K = Expr::Kind;
	switch (e.kind()) {
	case K::Zero:
		out += '0';
		return;
	case K::One:
		out += '1';
		return;
	case K::Sym:
		out += e.symbol().token();
		return;
	case K::SeqStar:
	case K::ParStar:
		out += e.kind() == K::SeqStar ? "seqstar(" : "parstar(";
		print(e.lhs(), out);
		out += ", " + std::to_string(e.bound()) + ")";
		return;
	case K::Seq:
	case K::Par:
	case K::Union: {
		const int p = precedence(e.kind());
		const bool wrap_l = precedence(e.lhs().kind()) < p;
		const bool wrap_r = precedence(e.rhs().kind()) <= p;
		if (wrap_l)
			out += '(';
		print(e.lhs(), out);
		if (wrap_l)
			out += ')';
		out += e.kind() == K::Seq ? ";" : e.kind() == K::Par ? " | " : " + ";
		if (wrap_r)
			out += '(';
		print(e.rhs(), out);
		if (wrap_r)
			out += ')';
		return;
	}
	}
}

} // namespace

std::string pretty(const Expr &e) {
	std::string out;
	print(e, out);
	return out;
}

Program eval(const Expr &e, const EvalOptions &opts) {
	using K = Expr::Kind;
	switch (e.kind()) {
	case K::Zero:
		return zero();
	case K::One:
		return one();
	case K::Sym:
		return program_of({singleton(e.symbol())});
	case K::Seq:
		return pcompose(eval(e.lhs(), opts), eval(e.rhs(), opts), opts.sequential);
	case K::Par:
		return pcompose(eval(e.lhs(), opts), eval(e.rhs(), opts), opts.concurrent);
	case K::Union:
		return punion(eval(e.lhs(), opts), eval(e.rhs(), opts));
	case K::SeqStar:
		return star(eval(e.lhs(), opts), opts.sequential, StarBound(e.bound()));
	case K::ParStar:
		return star(eval(e.lhs(), opts), opts.concurrent, StarBound(e.bound()));
	}
	throw std::logic_error("unreachable Expr kind");
}

} // namespace cka
