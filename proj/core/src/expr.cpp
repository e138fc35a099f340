#include "vest/expr.hpp"

#include "vest/errors.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace vest {

namespace {

bool is_ce_atom(const std::string &a) { return a[0] == 'e'; }

int ce_index(const std::string &a) { return std::stoi(a.substr(1)); }

bool atom_less(const std::string &a, const std::string &b)
{
	bool ea = is_ce_atom(a), eb = is_ce_atom(b);
	if (ea != eb)
		return ea;
	if (ea)
		return ce_index(a) < ce_index(b);
	return var_less(std::string_view(a).substr(1), std::string_view(b).substr(1));
}

// sorts atoms, returns sign or 0 on repetition
int sort_atoms(Expr::Atoms &atoms)
{
	int sign = 1;
	for (size_t i = 1; i < atoms.size(); ++i)
		for (size_t j = i; j > 0 && atom_less(atoms[j], atoms[j - 1]); --j) {
			std::swap(atoms[j], atoms[j - 1]);
			sign = -sign;
		}
	for (size_t i = 1; i < atoms.size(); ++i)
		if (atoms[i] == atoms[i - 1])
			return 0;
	return sign;
}

bool all_zero(const std::vector<MultiPoly> &v)
{
	for (auto &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

} // namespace

bool is_known_variable(std::string_view name)
{
	static const std::regex pattern(R"((g[1-9][0-9]*_[1-9][0-9]*)|(m[0-9]+_[1-9][0-9]*)|(y_[1-9][0-9]*)|(t[1-9][0-9]*)|x)");
	return std::regex_match(name.begin(), name.end(), pattern);
}

void Expr::add_term(Atoms atoms, const std::vector<MultiPoly> &coef, int sign)
{
	int s = sort_atoms(atoms) * sign;
	if (s == 0 || all_zero(coef))
		return;
	auto &slot = terms_[atoms];
	if (slot.empty())
		slot.assign(coef.size(), MultiPoly());
	for (size_t i = 0; i < coef.size(); ++i)
		slot[i] += s > 0 ? coef[i] : -coef[i];
	if (all_zero(slot))
		terms_.erase(atoms);
}

Expr Expr::scalar(const MultiPoly &f)
{
	Expr e;
	e.add_term({}, {f}, 1);
	return e;
}

Expr Expr::atom(std::string name)
{
	Expr e;
	e.add_term({std::move(name)}, {MultiPoly(1)}, 1);
	return e;
}

Expr Expr::vector(std::vector<Expr> entries)
{
	Expr r;
	r.width_ = static_cast<int>(entries.size());
	for (size_t i = 0; i < entries.size(); ++i) {
		if (entries[i].width_ != 1)
			throw ShapeMismatch("nested vectors are not supported");
		for (auto &[atoms, c] : entries[i].terms_) {
			std::vector<MultiPoly> v(entries.size());
			v[i] = c[0];
			r.add_term(atoms, v, 1);
		}
	}
	return r;
}

bool Expr::has_atoms() const
{
	for (auto &[atoms, c] : terms_)
		if (!atoms.empty())
			return true;
	return false;
}

int Expr::degree() const
{
	if (terms_.empty())
		return 0;
	int d = static_cast<int>(terms_.begin()->first.size());
	for (auto &[atoms, c] : terms_)
		if (static_cast<int>(atoms.size()) != d)
			return -1;
	return d;
}

Expr &Expr::operator+=(const Expr &o)
{
	if (terms_.empty())
		width_ = o.width_;
	else if (!o.terms_.empty() && o.width_ != width_)
		throw ShapeMismatch("adding vectors of different length");
	for (auto &[atoms, c] : o.terms_)
		add_term(atoms, c, 1);
	return *this;
}

Expr &Expr::operator-=(const Expr &o) { return *this += -o; }

Expr operator-(Expr a)
{
	for (auto &[atoms, c] : a.terms_)
		for (auto &x : c)
			x = -x;
	return a;
}

Expr wedge(const Expr &a, const Expr &b)
{
	if (a.width_ != 1 && b.width_ != 1)
		throw ShapeMismatch("cannot multiply two vectors");
	Expr r;
	r.width_ = std::max(a.width_, b.width_);
	for (auto &[aa, ca] : a.terms_)
		for (auto &[ab, cb] : b.terms_) {
			Expr::Atoms atoms = aa;
			atoms.insert(atoms.end(), ab.begin(), ab.end());
			std::vector<MultiPoly> c;
			if (ca.size() == 1)
				for (auto &x : cb)
					c.push_back(ca[0] * x);
			else
				for (auto &x : ca)
					c.push_back(x * cb[0]);
			r.add_term(std::move(atoms), c, 1);
		}
	return r;
}

Expr multiply(const Expr &a, const Expr &b)
{
	if (a.has_atoms() && b.has_atoms())
		throw ShapeMismatch("use /\\ to multiply forms");
	return wedge(a, b);
}

Expr Expr::power(unsigned e) const
{
	if (has_atoms() || width_ != 1)
		throw ShapeMismatch("only scalar polynomials can be raised to a power");
	return scalar(pow(to_poly(), e));
}

MultiPoly Expr::to_poly() const
{
	if (has_atoms() || width_ != 1)
		throw ShapeMismatch("expected a scalar polynomial");
	auto it = terms_.find(Atoms{});
	return it == terms_.end() ? MultiPoly() : it->second[0];
}

std::vector<MultiPoly> Expr::to_poly_vector() const
{
	if (has_atoms())
		throw ShapeMismatch("expected a polynomial vector");
	auto it = terms_.find(Atoms{});
	return it == terms_.end() ? std::vector<MultiPoly>(width_) : it->second;
}

PolyForm Expr::to_form(const Chart &chart) const
{
	if (width_ != 1)
		throw ShapeMismatch("expected a scalar form");
	int deg = degree();
	if (deg < 0)
		throw DegreeMismatch("form has mixed degree");
	PolyForm out(chart, deg);
	for (auto &[atoms, c] : terms_) {
		IndexSet idx;
		for (auto &a : atoms) {
			if (is_ce_atom(a))
				throw ShapeMismatch("algebra dual " + a + " inside a differential form");
			auto pos = chart.coords.index_of(std::string_view(a).substr(1));
			if (!pos)
				throw ChartMismatch(a + " is not a coordinate differential of the chart");
			idx.push_back(static_cast<int>(*pos));
		}
		out.add(idx, c[0]);
	}
	return out;
}

PolyForm Expr::to_form() const
{
	std::vector<std::string> coords;
	for (auto &[atoms, c] : terms_)
		for (auto &a : atoms)
			if (!is_ce_atom(a))
				coords.push_back(a.substr(1));
	std::sort(coords.begin(), coords.end(),
	          [](const std::string &x, const std::string &y) { return var_less(x, y); });
	coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
	return to_form(Chart::make(coords));
}

CEElement Expr::to_ce(std::shared_ptr<const LieAlgebra> g, int vdim) const
{
	if (width_ != vdim)
		throw ShapeMismatch("expected " + std::to_string(vdim) + " components, got " +
		                    std::to_string(width_));
	int deg = degree();
	if (deg < 0)
		throw DegreeMismatch("Chevalley-Eilenberg element has mixed degree");
	const int n = g->dim();
	CEElement out(g, vdim, deg);
	for (auto &[atoms, c] : terms_) {
		IndexSet idx;
		for (auto &a : atoms) {
			if (!is_ce_atom(a))
				throw ShapeMismatch("differential " + a + " inside a Chevalley-Eilenberg element");
			int i = ce_index(a);
			if (i < 1 || i > n)
				throw ShapeMismatch(a + " is outside the algebra of dimension " + std::to_string(n));
			idx.push_back(i - 1);
		}
		RatVector v;
		for (auto &x : c) {
			if (!x.is_constant())
				throw ShapeMismatch("Chevalley-Eilenberg coefficients must be constants");
			v.push_back(x.constant_term());
		}
		out.add(idx, v);
	}
	return out;
}

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, Wedge, End };

struct Token {
	Tok kind;
	std::string text;
	int line, column;
};

std::vector<Token> lex(std::string_view s)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	size_t i = 0;
	auto advance = [&](size_t k) {
		for (size_t j = 0; j < k; ++j) {
			if (s[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
			++i;
		}
	};
	while (i < s.size()) {
		char c = s[i];
		if (c == '#') {
			while (i < s.size() && s[i] != '\n')
				advance(1);
			continue;
		}
		if (std::isspace(static_cast<unsigned char>(c))) {
			advance(1);
			continue;
		}
		int l = line, cl = col;
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t j = i;
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
				++j;
				while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
					++j;
			}
			out.push_back({Tok::Num, std::string(s.substr(i, j - i)), l, cl});
			advance(j - i);
			continue;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t j = i;
			while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
				++j;
			out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cl});
			advance(j - i);
			continue;
		}
		if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') {
			out.push_back({Tok::Wedge, "/\\", l, cl});
			advance(2);
			continue;
		}
		Tok k;
		switch (c) {
		case '+': k = Tok::Plus; break;
		case '-': k = Tok::Minus; break;
		case '*': k = Tok::Star; break;
		case '^': k = Tok::Caret; break;
		case '(': k = Tok::LParen; break;
		case ')': k = Tok::RParen; break;
		case '[': k = Tok::LBracket; break;
		case ']': k = Tok::RBracket; break;
		case ',': k = Tok::Comma; break;
		default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
		}
		out.push_back({k, std::string(1, c), l, cl});
		advance(1);
	}
	out.push_back({Tok::End, "", line, col});
	return out;
}

class Parser {
public:
	explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

	Expr parse()
	{
		Expr e = expr();
		if (peek().kind != Tok::End)
			fail("unexpected '" + peek().text + "'");
		return e;
	}

private:
	const Token &peek() const { return toks_[pos_]; }
	const Token &take() { return toks_[pos_++]; }
	[[noreturn]] void fail(const std::string &msg) const { fail_at(msg, peek()); }
	[[noreturn]] void fail_at(const std::string &msg, const Token &t) const
	{
		throw ParseError(msg, t.line, t.column);
	}
	void expect(Tok k, const char *what)
	{
		if (peek().kind != k)
			fail(std::string("expected ") + what);
		++pos_;
	}

	Expr expr()
	{
		bool neg = false;
		if (peek().kind == Tok::Minus) {
			++pos_;
			neg = true;
		}
		Expr e = term();
		if (neg)
			e = -e;
		while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
			const Token &op = take();
			Expr t = term();
			try {
				if (op.kind == Tok::Plus)
					e += t;
				else
					e -= t;
			} catch (const ParseError &) {
				throw;
			} catch (const Error &err) {
				fail_at(err.what(), op);
			}
		}
		return e;
	}

	Expr term()
	{
		Expr e = wedge_chain();
		while (peek().kind == Tok::Star) {
			const Token &op = take();
			Expr f = wedge_chain();
			try {
				e = multiply(e, f);
			} catch (const ParseError &) {
				throw;
			} catch (const Error &err) {
				fail_at(err.what(), op);
			}
		}
		return e;
	}

	Expr wedge_chain()
	{
		Expr e = power();
		while (peek().kind == Tok::Wedge) {
			const Token &op = take();
			Expr f = power();
			try {
				e = wedge(e, f);
			} catch (const ParseError &) {
				throw;
			} catch (const Error &err) {
				fail_at(err.what(), op);
			}
		}
		return e;
	}

	Expr power()
	{
		Expr e = primary();
		while (peek().kind == Tok::Caret) {
			const Token &op = take();
			if (peek().kind != Tok::Num || peek().text.find('/') != std::string::npos)
				fail_at("expected a nonnegative integer exponent after '^'", op);
			unsigned k = static_cast<unsigned>(std::stoul(take().text));
			try {
				e = e.power(k);
			} catch (const ParseError &) {
				throw;
			} catch (const Error &err) {
				fail_at(err.what(), op);
			}
		}
		return e;
	}

	Expr primary()
	{
		const Token &t = peek();
		switch (t.kind) {
		case Tok::Num:
			++pos_;
			try {
				return Expr::scalar(MultiPoly(Rat::parse(t.text)));
			} catch (const Error &err) {
				fail_at(err.what(), t);
			}
		case Tok::Ident:
			++pos_;
			return identifier(t);
		case Tok::LParen: {
			++pos_;
			Expr e = expr();
			expect(Tok::RParen, "')'");
			return e;
		}
		case Tok::LBracket: {
			++pos_;
			std::vector<Expr> entries{expr()};
			while (peek().kind == Tok::Comma) {
				++pos_;
				entries.push_back(expr());
			}
			expect(Tok::RBracket, "']'");
			try {
				return Expr::vector(std::move(entries));
			} catch (const Error &err) {
				fail_at(err.what(), t);
			}
		}
		case Tok::End:
			fail("unexpected end of input");
		default:
			fail("unexpected '" + t.text + "'");
		}
	}

	Expr identifier(const Token &t)
	{
		const std::string &s = t.text;
		if (is_known_variable(s))
			return Expr::scalar(MultiPoly::variable(s));
		if (s.size() > 1 && s[0] == 'd' && is_known_variable(s.substr(1)))
			return Expr::atom(s);
		static const std::regex ce(R"(e[1-9][0-9]*)");
		if (std::regex_match(s, ce))
			return Expr::atom(s);
		throw UnknownVariable("unknown variable '" + s + "' at " + std::to_string(t.line) + ":" +
		                      std::to_string(t.column));
	}

	std::vector<Token> toks_;
	size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text) { return Parser(lex(text)).parse(); }

MultiPoly parse_poly(std::string_view text) { return parse_expr(text).to_poly(); }

PolyForm parse_form(std::string_view text) { return parse_expr(text).to_form(); }

PolyForm parse_form(std::string_view text, const Chart &chart)
{
	return parse_expr(text).to_form(chart);
}

CEElement parse_ce(std::string_view text, std::shared_ptr<const LieAlgebra> g, int vdim)
{
	return parse_expr(text).to_ce(std::move(g), vdim);
}

} // namespace vest
