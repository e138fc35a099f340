#include "vest/nilgroup.hpp"

#include "vest/errors.hpp"

#include <mutex>

namespace vest {

PolyMatrix poly_identity(size_t n)
{
	PolyMatrix m(n, PolyVector(n));
	for (size_t i = 0; i < n; ++i)
		m[i][i] = MultiPoly(Rat(1));
	return m;
}

PolyMatrix poly_matmul(const PolyMatrix &a, const PolyMatrix &b)
{
	size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
	PolyMatrix r(n, PolyVector(m));
	for (size_t i = 0; i < n; ++i)
		for (size_t l = 0; l < k; ++l) {
			if (a[i][l].is_zero())
				continue;
			for (size_t j = 0; j < m; ++j)
				if (!b[l][j].is_zero())
					r[i][j] += a[i][l] * b[l][j];
		}
	return r;
}

PolyVector poly_matvec(const PolyMatrix &a, const PolyVector &v)
{
	PolyVector r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < v.size(); ++j)
			if (!a[i][j].is_zero() && !v[j].is_zero())
				r[i] += a[i][j] * v[j];
	return r;
}

PolyMatrix poly_subst(const PolyMatrix &a, const std::map<std::string, MultiPoly> &s)
{
	PolyMatrix r = a;
	for (auto &row : r)
		for (auto &x : row)
			x = subst(x, s);
	return r;
}

PolyVector poly_subst(const PolyVector &v, const std::map<std::string, MultiPoly> &s)
{
	PolyVector r = v;
	for (auto &x : r)
		x = subst(x, s);
	return r;
}

bool poly_is_zero(const PolyMatrix &a)
{
	for (auto &row : a)
		for (auto &x : row)
			if (!x.is_zero())
				return false;
	return true;
}

std::map<std::string, MultiPoly> assign_block(const std::vector<std::string> &names,
                                              const PolyVector &v)
{
	std::map<std::string, MultiPoly> m;
	for (size_t i = 0; i < names.size(); ++i)
		m.emplace(names[i], v[i]);
	return m;
}

namespace {

std::vector<std::string> law_names(char prefix, int n)
{
	std::vector<std::string> out;
	for (int j = 1; j <= n; ++j)
		out.push_back(std::string(1, prefix) + "_" + std::to_string(j));
	return out;
}

PolyVector named_point(char prefix, int n)
{
	PolyVector v;
	for (auto &s : law_names(prefix, n))
		v.push_back(MultiPoly::variable(s));
	return v;
}

PolyVector add(const PolyVector &a, const PolyVector &b)
{
	PolyVector r = a;
	for (size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

PolyVector scaled(const Rat &c, const PolyVector &a)
{
	PolyVector r;
	for (auto &x : a)
		r.push_back(scale(c, x));
	return r;
}

} // namespace

PolyVector PolyGroup::bracket(const PolyVector &a, const PolyVector &b) const
{
	int n = dim();
	PolyVector r(n);
	for (int i = 0; i < n; ++i) {
		if (a[i].is_zero())
			continue;
		for (int j = 0; j < n; ++j) {
			if (b[j].is_zero())
				continue;
			MultiPoly ab = a[i] * b[j];
			for (auto &[k, c] : g_->bracket_terms(i, j))
				r[k] += scale(c, ab);
		}
	}
	return r;
}

std::shared_ptr<const PolyGroup> PolyGroup::from_algebra(std::shared_ptr<const LieAlgebra> g)
{
	auto cls = g->nilpotency_class();
	if (!cls || *cls > 4)
		throw NilpotencyClassWrong("product law is available for nilpotency class at most 4");
	auto grp = std::shared_ptr<PolyGroup>(new PolyGroup());
	grp->g_ = g;
	int n = g->dim();
	PolyVector x = named_point('x', n), y = named_point('y', n);
	PolyVector xy = grp->bracket(x, y);
	PolyVector xxy = grp->bracket(x, xy);
	PolyVector yxy = grp->bracket(y, xy);
	PolyVector yxxy = grp->bracket(y, xxy);
	PolyVector m = add(x, y);
	m = add(m, scaled(Rat(1, 2), xy));
	m = add(m, scaled(Rat(1, 12), xxy));
	m = add(m, scaled(Rat(-1, 12), yxy));
	m = add(m, scaled(Rat(-1, 24), yxxy));
	return from_law(g, m);
}

std::shared_ptr<const PolyGroup> PolyGroup::from_law(std::shared_ptr<const LieAlgebra> g,
                                                     PolyVector law)
{
	int n = g->dim();
	if (static_cast<int>(law.size()) != n)
		throw NotAGroupLaw("law has the wrong number of components");
	auto grp = std::shared_ptr<PolyGroup>(new PolyGroup());
	grp->g_ = g;
	grp->law_ = std::move(law);
	PolyVector x = named_point('x', n), zero(n);
	if (grp->product(x, zero) != x || grp->product(zero, x) != x)
		throw NotAGroupLaw("0 is not a two-sided unit");
	PolyVector a = slot_point(1, n), b = slot_point(2, n), c = slot_point(3, n);
	if (grp->product(grp->product(a, b), c) != grp->product(a, grp->product(b, c)))
		throw NotAGroupLaw("product is not associative");
	if (grp->product(a, grp->inverse(a)) != zero)
		throw NotAGroupLaw("negation is not the inverse; coordinates are not exponential");
	grp->build_frames();
	return grp;
}

PolyVector PolyGroup::product(const PolyVector &a, const PolyVector &b) const
{
	int n = dim();
	std::map<std::string, MultiPoly> s;
	auto xs = law_names('x', n), ys = law_names('y', n);
	for (int j = 0; j < n; ++j) {
		s.emplace(xs[j], a[j]);
		s.emplace(ys[j], b[j]);
	}
	return poly_subst(law_, s);
}

PolyVector PolyGroup::inverse(const PolyVector &a) const
{
	PolyVector r;
	for (auto &x : a)
		r.push_back(-x);
	return r;
}

Chart PolyGroup::fiber_chart() const
{
	std::vector<std::string> ys;
	for (int j = 1; j <= dim(); ++j)
		ys.push_back(fiber_var(j));
	return Chart::make(ys);
}

void PolyGroup::build_frames()
{
	int n = dim();
	auto xs = law_names('x', n), ys = law_names('y', n);
	std::map<std::string, MultiPoly> at_unit;
	for (int j = 0; j < n; ++j) {
		at_unit.emplace(xs[j], MultiPoly::variable(fiber_var(j + 1)));
		at_unit.emplace(ys[j], MultiPoly());
	}
	frame_.assign(n, PolyVector(n));
	for (int k = 0; k < n; ++k)
		for (int j = 0; j < n; ++j)
			frame_[k][j] = subst(diff(law_[k], ys[j]), at_unit).trimmed();

	PolyMatrix nil = frame_;
	for (int i = 0; i < n; ++i)
		nil[i][i] -= MultiPoly(Rat(1));
	PolyMatrix neg = nil;
	for (auto &row : neg)
		for (auto &x : row)
			x = -x;
	PolyMatrix inv = poly_identity(n), term = poly_identity(n);
	for (int k = 1; k <= n; ++k) {
		term = poly_matmul(term, neg);
		if (poly_is_zero(term))
			break;
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				inv[i][j] += term[i][j];
	}
	if (poly_matmul(frame_, inv) != poly_identity(n))
		throw NonUnipotentJacobian("left-invariant frame is not unipotent in " + name());
	coframe_ = inv;
}

PolyVF PolyGroup::left_invariant_vf(const RatVector &xi) const
{
	int n = dim();
	PolyVF v{fiber_chart(), PolyVector(n)};
	for (int k = 0; k < n; ++k)
		for (int j = 0; j < n; ++j)
			if (!xi[j].is_zero())
				v.components[k] += scale(xi[j], frame_[k][j]);
	return v;
}

PolyForm PolyGroup::maurer_cartan(int i) const
{
	Chart ch = fiber_chart();
	PolyForm f(ch, 1);
	for (int k = 0; k < dim(); ++k)
		f.add({k}, coframe_[i][k]);
	return f;
}

std::shared_ptr<const PolyRep> PolyRep::validate(std::shared_ptr<const PolyGroup> group,
                                                 std::string name, PolyMatrix rho)
{
	int n = group->dim();
	size_t d = rho.size();
	for (auto &row : rho)
		if (row.size() != d)
			throw NotARepresentation("matrix is not square");
	auto rep = std::make_shared<PolyRep>();
	rep->group_ = group;
	rep->name_ = std::move(name);
	rep->rho_ = std::move(rho);
	std::map<std::string, MultiPoly> at_unit;
	for (int j = 1; j <= n; ++j)
		at_unit.emplace(fiber_var(j), MultiPoly());
	for (auto &row : rep->rho_)
		for (auto &x : row)
			for (auto &v : x.support())
				if (!at_unit.count(v))
					throw NotARepresentation("entry depends on " + v);
	if (poly_subst(rep->rho_, at_unit) != poly_identity(d))
		throw NotARepresentation("rho(e) is not the identity");
	PolyVector a = slot_point(1, n), b = slot_point(2, n);
	if (rep->at(group->product(a, b)) != poly_matmul(rep->at(a), rep->at(b)))
		throw NotARepresentation("rho is not multiplicative");
	PolyMatrix nil = rep->rho_;
	for (size_t i = 0; i < d; ++i)
		nil[i][i] -= MultiPoly(Rat(1));
	PolyMatrix pw = poly_identity(d);
	for (size_t k = 0; k < d; ++k)
		pw = poly_matmul(pw, nil);
	if (!poly_is_zero(pw))
		throw NotARepresentation("rho is not unipotent");
	std::vector<RatMatrix> actions;
	for (int i = 1; i <= n; ++i) {
		RatMatrix m = zero_matrix(d, d);
		for (size_t r = 0; r < d; ++r)
			for (size_t c = 0; c < d; ++c)
				m[r][c] = subst(diff(rep->rho_[r][c], fiber_var(i)), at_unit).constant_term();
		actions.push_back(std::move(m));
	}
	rep->inf_ = Representation::validate(group->algebra(), std::move(actions));
	rep->trivial_ = rep->inf_.is_trivial();
	return rep;
}

std::shared_ptr<const PolyRep> PolyRep::trivial(std::shared_ptr<const PolyGroup> group)
{
	return validate(group, "trivial", poly_identity(1));
}

std::shared_ptr<const PolyRep> PolyRep::adjoint(std::shared_ptr<const PolyGroup> group)
{
	int n = group->dim();
	PolyMatrix ad(n, PolyVector(n));
	PolyVector y = fiber_point(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (auto &[k, c] : group->algebra().bracket_terms(i, j))
				ad[k][j] += scale(c, y[i]);
	PolyMatrix sum = poly_identity(n), term = poly_identity(n);
	for (int k = 1; k <= n; ++k) {
		term = poly_matmul(term, ad);
		for (auto &row : term)
			for (auto &x : row)
				x = scale(Rat(1, k), x);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				sum[i][j] += term[i][j];
	}
	return validate(group, "adjoint", sum);
}

PolyMatrix PolyRep::at(const PolyVector &point) const
{
	std::map<std::string, MultiPoly> s;
	for (int j = 1; j <= group_->dim(); ++j)
		s.emplace(fiber_var(j), point[j - 1]);
	return poly_subst(rho_, s);
}

PolyMatrix PolyRep::inverse_at(const PolyVector &point) const
{
	return at(group_->inverse(point));
}

namespace {

std::mutex g_registry_mutex;

} // namespace

std::shared_ptr<const PolyGroup> group_by_name(const std::string &name)
{
	static std::map<std::string, std::shared_ptr<const PolyGroup>> cache;
	std::lock_guard lock(g_registry_mutex);
	auto it = cache.find(name);
	if (it != cache.end())
		return it->second;
	std::shared_ptr<const LieAlgebra> g;
	if (name == "heisenberg3")
		g = std::make_shared<LieAlgebra>(LieAlgebra::heisenberg3());
	else if (name == "filiform4")
		g = std::make_shared<LieAlgebra>(LieAlgebra::filiform4());
	else if (name.rfind("abelian-", 0) == 0) {
		int n = 0;
		try {
			n = std::stoi(name.substr(8));
		} catch (const std::exception &) {
			throw UnknownInstance(name);
		}
		if (n < 1 || n > 8 || "abelian-" + std::to_string(n) != name)
			throw UnknownInstance(name);
		g = std::make_shared<LieAlgebra>(LieAlgebra::abelian(n));
	} else {
		throw UnknownInstance("no group named " + name);
	}
	auto grp = PolyGroup::from_algebra(g);
	cache.emplace(name, grp);
	return grp;
}

std::vector<std::string> registered_groups()
{
	return {"abelian-1", "abelian-2", "abelian-3", "heisenberg3", "filiform4"};
}

std::shared_ptr<const PolyRep> rep_by_name(const std::shared_ptr<const PolyGroup> &group,
                                           const std::string &name)
{
	if (name.empty() || name == "trivial")
		return PolyRep::trivial(group);
	if (name == "adjoint")
		return PolyRep::adjoint(group);
	if (name == "standard" && group->name() == "heisenberg3") {
		PolyVector y = fiber_point(3);
		PolyMatrix rho = poly_identity(3);
		rho[0][1] = y[0];
		rho[1][2] = y[1];
		rho[0][2] = y[2] + scale(Rat(1, 2), y[0] * y[1]);
		return PolyRep::validate(group, "standard", rho);
	}
	throw UnknownInstance("no representation " + name + " for " + group->name());
}

bool GroupCochain::is_zero() const
{
	for (auto &x : value)
		if (!x.is_zero())
			return false;
	return true;
}

std::string GroupCochain::str() const
{
	if (value.size() == 1)
		return value[0].str();
	std::string out = "[";
	for (size_t i = 0; i < value.size(); ++i)
		out += (i ? ", " : "") + value[i].str();
	return out + "]";
}

GroupCochain &GroupCochain::operator+=(const GroupCochain &o)
{
	if (value.empty()) {
		*this = o;
		return *this;
	}
	if (o.value.size() != value.size() || o.p != p)
		throw DegreeMismatch("adding group cochains of different shape");
	for (size_t i = 0; i < value.size(); ++i)
		value[i] += o.value[i];
	return *this;
}

GroupCochain &GroupCochain::operator-=(const GroupCochain &o) { return *this += -o; }

GroupCochain operator-(GroupCochain a)
{
	for (auto &x : a.value)
		x = -x;
	return a;
}

bool operator==(const GroupCochain &a, const GroupCochain &b)
{
	if (a.is_zero() && b.is_zero())
		return true;
	return a.p == b.p && a.value == b.value;
}

std::map<std::string, MultiPoly> face_substitution(const PolyGroup &group, int p, int i)
{
	int n = group.dim();
	std::map<std::string, MultiPoly> s;
	auto shift = [&](int from, int to) {
		for (int c = 1; c <= n; ++c)
			s.emplace(slot_var(from, c), MultiPoly::variable(slot_var(to, c)));
	};
	if (i == 0) {
		for (int j = 1; j <= p; ++j)
			shift(j, j + 1);
	} else if (i <= p) {
		PolyVector prod = group.product(slot_point(i, n), slot_point(i + 1, n));
		for (int c = 1; c <= n; ++c)
			s.emplace(slot_var(i, c), prod[c - 1]);
		for (int j = i + 1; j <= p; ++j)
			shift(j, j + 1);
	}
	return s;
}

GroupCochain group_delta(const GroupCochain &f)
{
	const PolyGroup &grp = *f.group;
	int p = f.p, n = grp.dim();
	GroupCochain r{f.group, f.rep, p + 1, PolyVector(f.value.size())};
	for (int i = 0; i <= p; ++i) {
		PolyVector face = poly_subst(f.value, face_substitution(grp, p, i));
		for (size_t a = 0; a < face.size(); ++a)
			r.value[a] += i % 2 ? -face[a] : face[a];
	}
	PolyVector last = f.value;
	if (!f.rep->is_trivial())
		last = poly_matvec(f.rep->inverse_at(slot_point(p + 1, n)), last);
	for (size_t a = 0; a < last.size(); ++a)
		r.value[a] += (p + 1) % 2 ? -last[a] : last[a];
	return r;
}

} // namespace vest
