#pragma once

#include "vest/forms.hpp"
#include "vest/liealg.hpp"
#include "vest/poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vest {

// A parsed expression: a (possibly vector-valued) sum of polynomial multiples of
// wedge monomials in atoms. Atoms are differentials d<var> or algebra duals e<i>.
class Expr {
public:
	using Atoms = std::vector<std::string>; // strictly increasing
	using Terms = std::map<Atoms, std::vector<MultiPoly>>;

	Expr() = default;
	static Expr scalar(const MultiPoly &f);
	static Expr atom(std::string name);
	static Expr vector(std::vector<Expr> entries);

	int width() const { return width_; }
	const Terms &terms() const { return terms_; }
	bool has_atoms() const;
	bool is_zero() const { return terms_.empty(); }
	// 0 for no atoms, -1 when the degree is mixed
	int degree() const;

	Expr &operator+=(const Expr &o);
	Expr &operator-=(const Expr &o);
	friend Expr operator-(Expr a);
	// '*' needs a scalar on one side, '/\' wedges
	friend Expr multiply(const Expr &a, const Expr &b);
	friend Expr wedge(const Expr &a, const Expr &b);
	Expr power(unsigned e) const;

	MultiPoly to_poly() const;
	std::vector<MultiPoly> to_poly_vector() const;
	// differentials must be coordinates of the chart
	PolyForm to_form(const Chart &chart) const;
	// chart from the differentials present (sorted canonically)
	PolyForm to_form() const;
	CEElement to_ce(std::shared_ptr<const LieAlgebra> g, int vdim = 1) const;

private:
	void add_term(Atoms atoms, const std::vector<MultiPoly> &coef, int sign);
	int width_ = 1;
	Terms terms_;
};

bool is_known_variable(std::string_view name);

// Grammar: expr := ['-'] term (('+'|'-') term)*; term := wedge ('*' wedge)*;
// wedge := power ('/\' power)*; power := primary ('^' int)*;
// primary := rational | var | d<var> | e<i> | '(' expr ')' | '[' expr (',' expr)* ']'.
// Lines starting with '#' are comments.
Expr parse_expr(std::string_view text);

MultiPoly parse_poly(std::string_view text);
PolyForm parse_form(std::string_view text);
PolyForm parse_form(std::string_view text, const Chart &chart);
CEElement parse_ce(std::string_view text, std::shared_ptr<const LieAlgebra> g, int vdim = 1);

} // namespace vest
