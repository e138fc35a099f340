#include "vest/forms.hpp"

#include "vest/errors.hpp"

#include <algorithm>

namespace vest {

Chart Chart::make(std::vector<std::string> coords, std::vector<std::string> params)
{
	Chart c;
	c.coords = VarSet::of(std::move(coords));
	c.params = VarSet::of(std::move(params));
	for (auto &p : c.params.names())
		if (c.coords.contains(p))
			throw ChartMismatch("variable " + p + " is both coordinate and parameter");
	return c;
}

int sort_with_sign(IndexSet &idx)
{
	int sign = 1;
	for (size_t i = 1; i < idx.size(); ++i)
		for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
			if (idx[j - 1] == idx[j])
				return 0;
			std::swap(idx[j - 1], idx[j]);
			sign = -sign;
		}
	return sign;
}

PolyForm PolyForm::scalar(Chart chart, const MultiPoly &f)
{
	PolyForm r(std::move(chart), 0);
	r.add({}, f);
	return r;
}

PolyForm PolyForm::differential(Chart chart, std::string_view coord)
{
	auto i = chart.coords.index_of(coord);
	if (!i)
		throw ChartMismatch(std::string(coord) + " is not a chart coordinate");
	PolyForm r(std::move(chart), 1);
	r.add({static_cast<int>(*i)}, MultiPoly(Rat(1)));
	return r;
}

MultiPoly PolyForm::coefficient(const IndexSet &idx) const
{
	auto it = terms_.find(idx);
	return it == terms_.end() ? MultiPoly() : it->second;
}

void PolyForm::add(IndexSet idx, const MultiPoly &c)
{
	if (static_cast<int>(idx.size()) != degree_)
		throw DegreeMismatch("term of degree " + std::to_string(idx.size()) +
		                     " added to a " + std::to_string(degree_) + "-form");
	if (c.is_zero())
		return;
	int s = sort_with_sign(idx);
	if (s == 0)
		return;
	for (int i : idx)
		if (i < 0 || i >= static_cast<int>(chart_.dim()))
			throw ChartMismatch("coordinate index out of range");
	auto [it, inserted] = terms_.try_emplace(idx, s > 0 ? c : -c);
	if (!inserted) {
		it->second += s > 0 ? c : -c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

PolyForm PolyForm::times(const MultiPoly &f) const
{
	PolyForm r(chart_, degree_);
	for (auto &[idx, c] : terms_)
		r.add(idx, c * f);
	return r;
}

std::string PolyForm::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[idx, c] : terms_) {
		std::string wedge;
		for (int i : idx) {
			if (!wedge.empty())
				wedge += "/\\";
			wedge += "d" + chart_.coords[i];
		}
		std::string coef = c.str();
		std::string piece;
		if (wedge.empty())
			piece = c.size() > 1 && !first ? "(" + coef + ")" : coef;
		else if (c.size() > 1)
			piece = "(" + coef + ")*" + wedge;
		else if (coef == "1")
			piece = wedge;
		else if (coef == "-1")
			piece = "-" + wedge;
		else
			piece = coef + "*" + wedge;
		if (first)
			out = piece;
		else if (piece[0] == '-')
			out += " - " + piece.substr(1);
		else
			out += " + " + piece;
		first = false;
	}
	return out;
}

PolyForm &PolyForm::operator+=(const PolyForm &o)
{
	if (o.is_zero())
		return *this;
	if (is_zero() && degree_ == 0 && chart_.coords.empty()) {
		*this = o;
		return *this;
	}
	if (!(chart_ == o.chart_))
		throw ChartMismatch("adding forms on different charts");
	if (degree_ != o.degree_)
		throw DegreeMismatch("adding forms of different degree");
	for (auto &[idx, c] : o.terms_)
		add(idx, c);
	return *this;
}

PolyForm &PolyForm::operator-=(const PolyForm &o) { return *this += -o; }

PolyForm operator-(PolyForm a)
{
	for (auto &[idx, c] : a.terms_)
		c = -c;
	return a;
}

bool operator==(const PolyForm &a, const PolyForm &b)
{
	if (a.is_zero() && b.is_zero())
		return true;
	return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

PolyVF PolyVF::coordinate(const Chart &chart, std::string_view coord)
{
	auto i = chart.coords.index_of(coord);
	if (!i)
		throw ChartMismatch(std::string(coord) + " is not a chart coordinate");
	PolyVF x{chart, std::vector<MultiPoly>(chart.dim())};
	x.components[*i] = MultiPoly(Rat(1));
	return x;
}

MultiPoly apply_vf(const PolyVF &x, const MultiPoly &f)
{
	MultiPoly r;
	for (size_t i = 0; i < x.components.size(); ++i)
		if (!x.components[i].is_zero())
			r += x.components[i] * diff(f, x.chart.coords[i]);
	return r;
}

PolyForm wedge(const PolyForm &a, const PolyForm &b)
{
	if (!(a.chart() == b.chart()))
		throw ChartMismatch("wedge of forms on different charts");
	PolyForm r(a.chart(), a.degree() + b.degree());
	for (auto &[ia, ca] : a.terms())
		for (auto &[ib, cb] : b.terms()) {
			IndexSet idx = ia;
			idx.insert(idx.end(), ib.begin(), ib.end());
			r.add(std::move(idx), ca * cb);
		}
	return r;
}

PolyForm exterior_d(const PolyForm &a)
{
	PolyForm r(a.chart(), a.degree() + 1);
	for (auto &[idx, c] : a.terms())
		for (size_t j = 0; j < a.chart().dim(); ++j) {
			MultiPoly dc = diff(c, a.chart().coords[j]);
			if (dc.is_zero())
				continue;
			IndexSet k{static_cast<int>(j)};
			k.insert(k.end(), idx.begin(), idx.end());
			r.add(std::move(k), dc);
		}
	return r;
}

PolyForm pullback(const PolyForm &a, const Chart &target,
                  const std::map<std::string, MultiPoly> &phi)
{
	const Chart &src = a.chart();
	std::map<std::string, MultiPoly> assignment;
	for (auto &c : src.coords.names()) {
		auto it = phi.find(c);
		if (it == phi.end())
			throw ChartMismatch("pullback map does not assign coordinate " + c);
		assignment.emplace(c, it->second);
	}
	std::vector<PolyForm> dphi;
	for (auto &c : src.coords.names())
		dphi.push_back(exterior_d(PolyForm::scalar(target, assignment.at(c))));
	PolyForm r(target, a.degree());
	for (auto &[idx, c] : a.terms()) {
		PolyForm piece = PolyForm::scalar(target, subst(c, assignment));
		for (int i : idx) {
			piece = wedge(piece, dphi[i]);
			if (piece.is_zero())
				break;
		}
		r += piece;
	}
	return r;
}

PolyForm contract(const PolyForm &a, const PolyVF &x)
{
	if (!(a.chart() == x.chart))
		throw ChartMismatch("contraction with a vector field on another chart");
	if (a.degree() == 0)
		return PolyForm(a.chart(), 0);
	PolyForm r(a.chart(), a.degree() - 1);
	for (auto &[idx, c] : a.terms())
		for (size_t k = 0; k < idx.size(); ++k) {
			const MultiPoly &xk = x.components[idx[k]];
			if (xk.is_zero())
				continue;
			IndexSet rest = idx;
			rest.erase(rest.begin() + k);
			MultiPoly v = xk * c;
			r.add(std::move(rest), k % 2 ? -v : v);
		}
	return r;
}

PolyForm lie_derivative(const PolyForm &a, const PolyVF &x)
{
	PolyForm r = contract(exterior_d(a), x);
	if (a.degree() > 0)
		r += exterior_d(contract(a, x));
	return r;
}

PolyForm homotopy_T(const PolyForm &a)
{
	const Chart &src = a.chart();
	if (a.degree() == 0)
		return PolyForm(src, -1);
	const std::string tau = "tau";
	if (src.coords.contains(tau))
		throw ChartMismatch("chart already uses the reserved name tau");
	std::vector<std::string> coords = src.coords.names();
	coords.push_back(tau);
	Chart cyl = Chart::make(coords, src.params.names());
	std::map<std::string, MultiPoly> scaling;
	for (auto &c : src.coords.names())
		scaling.emplace(c, MultiPoly::variable(tau) * MultiPoly::variable(c));
	PolyForm lifted = contract(pullback(a, cyl, scaling), PolyVF::coordinate(cyl, tau));
	PolyForm r(src, a.degree() - 1);
	for (auto &[idx, c] : lifted.terms()) {
		IndexSet back;
		for (int i : idx)
			back.push_back(static_cast<int>(*src.coords.index_of(cyl.coords[i])));
		r.add(std::move(back), defint01(c, tau));
	}
	return r;
}

MultiPoly cube_integrate(const PolyForm &a)
{
	const Chart &ch = a.chart();
	int p = static_cast<int>(ch.dim());
	for (int i = 1; i <= p; ++i)
		if (ch.coords[i - 1] != cube_var(i))
			throw ChartMismatch("cube integration needs coordinates t1..tp");
	if (a.degree() != p)
		throw DegreeMismatch("cube integration needs a top-degree form");
	IndexSet all(p);
	for (int i = 0; i < p; ++i)
		all[i] = i;
	MultiPoly c = a.coefficient(all);
	for (int i = 1; i <= p; ++i)
		c = defint01(c, cube_var(i));
	return c.trimmed();
}

} // namespace vest
