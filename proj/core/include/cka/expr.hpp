#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cka/compose.hpp"
#include "cka/label.hpp"
#include "cka/program.hpp"

namespace cka {

/// Immutable algebra term. Copies share structure.
class Expr {
public:
	enum class Kind { Zero, One, Sym, Seq, Par, Union, SeqStar, ParStar };

	static Expr zero();
	static Expr one();
	static Expr sym(Label l);
	static Expr seq(Expr lhs, Expr rhs);
	static Expr par(Expr lhs, Expr rhs);
	static Expr choice(Expr lhs, Expr rhs);
	static Expr seq_star(Expr body, StarBound bound);
	static Expr par_star(Expr body, StarBound bound);

	Kind kind() const noexcept;
	/// Sym only.
	const Label &symbol() const;
	/// Binary nodes; for stars lhs() is the body.
	const Expr &lhs() const;
	const Expr &rhs() const;
	/// Star nodes only.
	unsigned bound() const;

	friend bool operator==(const Expr &a, const Expr &b);

private:
	struct Node;
	explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	std::shared_ptr<const Node> node_;
};

/// Text that parses back to a structurally equal term, using the fewest
/// parentheses the precedence `;` > `|` > `+` allows.
std::string pretty(const Expr &e);

/// Operators used for `;` and `|` during evaluation. Replacing `sequential`
/// with a weak composition evaluates every `;` as weak sequencing.
struct EvalOptions {
	Composition sequential = Composition::sequential();
	Composition concurrent = Composition::concurrent();
};

/// Compositional evaluation; every node is normalized.
Program eval(const Expr &e, const EvalOptions &opts = {});

} // namespace cka
