#include "vest/liealg.hpp"

#include "vest/errors.hpp"

#include <functional>

namespace vest {

std::vector<IndexSet> index_subsets(int n, int q)
{
	std::vector<IndexSet> out;
	if (q < 0 || q > n)
		return out;
	IndexSet cur;
	std::function<void(int)> rec = [&](int start) {
		if (static_cast<int>(cur.size()) == q) {
			out.push_back(cur);
			return;
		}
		for (int i = start; i < n; ++i) {
			cur.push_back(i);
			rec(i + 1);
			cur.pop_back();
		}
	};
	rec(0);
	return out;
}

RatVector LieAlgebra::bracket(const RatVector &x, const RatVector &y) const
{
	RatVector r(dim_, Rat(0));
	for (int i = 0; i < dim_; ++i) {
		if (x[i].is_zero())
			continue;
		for (int j = 0; j < dim_; ++j) {
			if (y[j].is_zero())
				continue;
			for (auto &[k, c] : bracket_terms(i, j))
				r[k] += c * x[i] * y[j];
		}
	}
	return r;
}

LieAlgebra LieAlgebra::validate(std::string name, int dim, const std::vector<Entry> &entries,
                                std::optional<int> declared_class)
{
	if (dim <= 0)
		throw ConfigError("Lie algebra dimension must be positive");
	LieAlgebra g;
	g.name_ = std::move(name);
	g.dim_ = dim;
	g.tensor_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
	std::vector<bool> seen(g.tensor_.size(), false);
	for (auto &e : entries) {
		if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim)
			throw ConfigError("structure constant index out of range");
		size_t at = (static_cast<size_t>(e.i) * dim + e.j) * dim + e.k;
		if (seen[at] && g.tensor_[at] != e.c)
			throw ConfigError("conflicting values for one structure constant");
		seen[at] = true;
		g.tensor_[at] = e.c;
	}
	auto label = [](int i, int j, int k) {
		return "c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" +
		       std::to_string(k + 1) + "]";
	};
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			for (int k = 0; k < dim; ++k)
				if (g.c(i, j, k) != -g.c(j, i, k))
					throw AntisymmetryViolation(label(i, j, k) + " = " + g.c(i, j, k).str() +
					                            " but " + label(j, i, k) + " = " +
					                            g.c(j, i, k).str());
	g.sparse_.assign(static_cast<size_t>(dim) * dim, {});
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			for (int k = 0; k < dim; ++k)
				if (!g.c(i, j, k).is_zero())
					g.sparse_[i * dim + j].emplace_back(k, g.c(i, j, k));

	auto unit = [dim](int i) {
		RatVector v(dim, Rat(0));
		v[i] = Rat(1);
		return v;
	};
	for (int i = 0; i < dim; ++i)
		for (int j = i + 1; j < dim; ++j)
			for (int k = j + 1; k < dim; ++k) {
				RatVector a = g.bracket(g.bracket(unit(i), unit(j)), unit(k));
				RatVector b = g.bracket(g.bracket(unit(j), unit(k)), unit(i));
				RatVector c = g.bracket(g.bracket(unit(k), unit(i)), unit(j));
				for (int m = 0; m < dim; ++m)
					if (!(a[m] + b[m] + c[m]).is_zero())
						throw JacobiViolation("for e" + std::to_string(i + 1) + ", e" +
						                      std::to_string(j + 1) + ", e" +
						                      std::to_string(k + 1));
			}

	// lower central series
	std::vector<RatVector> term = span_basis(identity_matrix(dim));
	int s = 0;
	while (!term.empty()) {
		std::vector<RatVector> next;
		for (int i = 0; i < dim; ++i)
			for (auto &v : term)
				next.push_back(g.bracket(unit(i), v));
		next = span_basis(next);
		++s;
		if (next.size() == term.size())
			break;
		term = std::move(next);
		if (term.empty())
			g.class_ = s;
	}
	if (declared_class && g.class_ != declared_class)
		throw NilpotencyClassWrong("declared " + std::to_string(*declared_class) + ", computed " +
		                           (g.class_ ? std::to_string(*g.class_) : "not nilpotent"));
	return g;
}

LieAlgebra LieAlgebra::abelian(int n)
{
	return validate("abelian-" + std::to_string(n), n, {}, 1);
}

LieAlgebra LieAlgebra::heisenberg3()
{
	return validate("heisenberg3", 3, {{0, 1, 2, Rat(1)}, {1, 0, 2, Rat(-1)}}, 2);
}

LieAlgebra LieAlgebra::filiform4()
{
	return validate("filiform4", 4,
	                {{0, 1, 2, Rat(1)},
	                 {1, 0, 2, Rat(-1)},
	                 {0, 2, 3, Rat(1)},
	                 {2, 0, 3, Rat(-1)}},
	                3);
}

Representation Representation::validate(const LieAlgebra &g, std::vector<RatMatrix> actions)
{
	if (static_cast<int>(actions.size()) != g.dim())
		throw NotARepresentation("need one matrix per basis element");
	size_t d = actions.empty() ? 1 : actions[0].size();
	for (auto &m : actions) {
		if (m.size() != d)
			throw NotARepresentation("matrices of different sizes");
		for (auto &row : m)
			if (row.size() != d)
				throw NotARepresentation("non-square matrix");
	}
	for (int i = 0; i < g.dim(); ++i)
		for (int j = i + 1; j < g.dim(); ++j) {
			RatMatrix lhs = zero_matrix(d, d);
			for (auto &[k, c] : g.bracket_terms(i, j))
				for (size_t a = 0; a < d; ++a)
					for (size_t b = 0; b < d; ++b)
						lhs[a][b] += c * actions[k][a][b];
			RatMatrix rhs =
			    matsub(matmul(actions[i], actions[j]), matmul(actions[j], actions[i]));
			if (!is_zero_matrix(matsub(lhs, rhs)))
				throw NotARepresentation("bracket of e" + std::to_string(i + 1) + ", e" +
				                         std::to_string(j + 1) + " not preserved");
		}
	Representation r;
	r.vdim_ = static_cast<int>(d);
	r.actions_ = std::move(actions);
	return r;
}

Representation Representation::trivial(const LieAlgebra &g, int vdim)
{
	Representation r;
	r.vdim_ = vdim;
	r.actions_.assign(g.dim(), zero_matrix(vdim, vdim));
	return r;
}

bool Representation::is_trivial() const
{
	for (auto &m : actions_)
		if (!is_zero_matrix(m))
			return false;
	return true;
}

CEElement CEElement::basis(std::shared_ptr<const LieAlgebra> g, int vdim, IndexSet idx,
                           int component)
{
	CEElement e(std::move(g), vdim, static_cast<int>(idx.size()));
	RatVector v(vdim, Rat(0));
	v[component] = Rat(1);
	e.add(std::move(idx), v);
	return e;
}

RatVector CEElement::coefficient(const IndexSet &idx) const
{
	auto it = terms_.find(idx);
	return it == terms_.end() ? RatVector(vdim_, Rat(0)) : it->second;
}

namespace {

std::string scalar_ce_str(const std::vector<std::pair<IndexSet, Rat>> &terms)
{
	if (terms.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[idx, c] : terms) {
		std::string mono;
		for (int i : idx) {
			if (!mono.empty())
				mono += "/\\";
			mono += "e" + std::to_string(i + 1);
		}
		Rat mag = c.sign() < 0 ? -c : c;
		std::string piece = mono.empty() ? mag.str()
		                    : mag.is_one() ? mono
		                                   : mag.str() + "*" + mono;
		if (first)
			out = (c.sign() < 0 ? "-" : "") + piece;
		else
			out += (c.sign() < 0 ? " - " : " + ") + piece;
		first = false;
	}
	return out;
}

} // namespace

std::string CEElement::str() const
{
	std::vector<std::string> comps;
	for (int a = 0; a < vdim_; ++a) {
		std::vector<std::pair<IndexSet, Rat>> terms;
		for (auto &[idx, v] : terms_)
			if (!v[a].is_zero())
				terms.emplace_back(idx, v[a]);
		comps.push_back(scalar_ce_str(terms));
	}
	if (vdim_ == 1)
		return comps[0];
	std::string out = "[";
	for (size_t i = 0; i < comps.size(); ++i)
		out += (i ? ", " : "") + comps[i];
	return out + "]";
}

CEElement &CEElement::operator+=(const CEElement &o)
{
	if (o.is_zero())
		return *this;
	if (!g_) {
		*this = o;
		return *this;
	}
	if (o.degree_ != degree_ || o.vdim_ != vdim_)
		throw DegreeMismatch("adding Chevalley-Eilenberg cochains of different shape");
	for (auto &[idx, v] : o.terms_)
		alt_accumulate(terms_, idx, Rat(1), v);
	return *this;
}

CEElement &CEElement::operator-=(const CEElement &o) { return *this += -o; }

CEElement operator-(CEElement a)
{
	for (auto &[idx, v] : a.terms_)
		for (auto &x : v)
			x = -x;
	return a;
}

bool operator==(const CEElement &a, const CEElement &b)
{
	if (a.is_zero() && b.is_zero())
		return true;
	return a.degree_ == b.degree_ && a.vdim_ == b.vdim_ && a.terms_ == b.terms_;
}

CEElement ce_diff(const CEElement &a, const Representation &rep)
{
	CEElement r(a.algebra(), a.vdim(), a.degree() + 1);
	r.terms() = ce_apply<Rat>(*a.algebra(), a.degree(), a.terms(), a.vdim(),
	                          [&](int i, const RatVector &v) { return matvec(rep.action(i), v); });
	return r;
}

CEElement ce_contract(const CEElement &a, const RatVector &xi)
{
	if (a.degree() == 0)
		return CEElement(a.algebra(), a.vdim(), 0);
	CEElement r(a.algebra(), a.vdim(), a.degree() - 1);
	r.terms() = ce_contract_terms<Rat>(a.algebra()->dim(), a.degree(), a.terms(), xi, a.vdim());
	return r;
}

CEElement ce_lie_derivative(const CEElement &a, const Representation &rep, const RatVector &xi)
{
	CEElement r = ce_contract(ce_diff(a, rep), xi);
	if (a.degree() > 0)
		r += ce_diff(ce_contract(a, xi), rep);
	return r;
}

} // namespace vest
