#include "vest/pairgpd.hpp"

#include "vest/liealg.hpp"

#include <algorithm>
#include <memory>

namespace vest {

namespace {

std::map<std::string, MultiPoly> point_to(int point, const std::vector<MultiPoly> &target)
{
	std::map<std::string, MultiPoly> s;
	for (size_t j = 1; j <= target.size(); ++j)
		s.emplace(point_var(point, static_cast<int>(j)), target[j - 1]);
	return s;
}

std::map<std::string, MultiPoly> fiber_to(const std::vector<MultiPoly> &target)
{
	std::map<std::string, MultiPoly> s;
	for (size_t j = 1; j <= target.size(); ++j)
		s.emplace(fiber_var(static_cast<int>(j)), target[j - 1]);
	return s;
}

// m_j -> m_{j+1} for j >= i: a function of p+1 points viewed on p+2 points
std::map<std::string, MultiPoly> omit_point(int n, int p, int i)
{
	std::map<std::string, MultiPoly> s;
	for (int j = i; j <= p; ++j)
		s.merge(point_to(j, base_point(j + 1, n)));
	return s;
}

std::vector<MultiPoly> add(std::vector<MultiPoly> a, const std::vector<MultiPoly> &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

std::vector<MultiPoly> scaled(const MultiPoly &c, std::vector<MultiPoly> a)
{
	for (auto &x : a)
		x = c * x;
	return a;
}

// pullback along y -> y + shift
PolyForm translate(const PolyForm &a, const std::vector<MultiPoly> &shift)
{
	int n = static_cast<int>(shift.size());
	return pullback(a, a.chart(), fiber_to(add(fiber_point(n), shift)));
}

std::vector<MultiPoly> negated(std::vector<MultiPoly> v)
{
	for (auto &x : v)
		x = -x;
	return v;
}

} // namespace

ASCochain &ASCochain::operator+=(const ASCochain &o)
{
	if (value.is_zero()) {
		n = o.n;
		p = o.p;
	}
	value += o.value;
	return *this;
}

ASCochain &ASCochain::operator-=(const ASCochain &o)
{
	if (value.is_zero()) {
		n = o.n;
		p = o.p;
	}
	value -= o.value;
	return *this;
}

Chart pair_chart(int n)
{
	std::vector<std::string> coords;
	for (int j = 1; j <= n; ++j)
		coords.push_back(fiber_var(j));
	return Chart::make(coords);
}

ASCochain as_delta(const ASCochain &f)
{
	ASCochain r{f.n, f.p + 1, MultiPoly()};
	for (int i = 0; i <= f.p + 1; ++i) {
		MultiPoly face = subst(f.value, omit_point(f.n, f.p, i));
		r.value += i % 2 ? -face : face;
	}
	return r;
}

PolyForm pair_ve(const ASCochain &f)
{
	const int n = f.n, p = f.p;
	Chart ch = pair_chart(n);
	PolyForm out(ch, p);
	std::map<std::string, MultiPoly> diag;
	for (int i = 0; i <= p; ++i)
		diag.merge(point_to(i, fiber_point(n)));
	if (p > n)
		return out;
	// ordered tuples of distinct directions; point i is differentiated along tuple[i-1]
	std::vector<std::pair<IndexSet, MultiPoly>> level{{IndexSet{}, f.value}};
	for (int i = 1; i <= p; ++i) {
		std::vector<std::pair<IndexSet, MultiPoly>> next;
		for (auto &[seq, g] : level)
			for (int j = 0; j < n; ++j) {
				if (std::find(seq.begin(), seq.end(), j) != seq.end())
					continue;
				MultiPoly dg = diff(g, point_var(i, j + 1));
				if (dg.is_zero())
					continue;
				IndexSet s = seq;
				s.push_back(j);
				next.emplace_back(std::move(s), std::move(dg));
			}
		level = std::move(next);
	}
	for (auto &[seq, g] : level)
		out.add(seq, subst(g, diag).trimmed());
	return out;
}

ASCochain decomposable(int n, const std::vector<MultiPoly> &factors)
{
	ASCochain r{n, static_cast<int>(factors.size()) - 1, MultiPoly(1)};
	for (size_t i = 0; i < factors.size(); ++i)
		r.value *= subst(factors[i], fiber_to(base_point(static_cast<int>(i), n)));
	return r;
}

PolyForm pair_ve_decomposable(int n, const std::vector<MultiPoly> &factors)
{
	Chart ch = pair_chart(n);
	if (factors.empty())
		throw DegreeMismatch("decomposable cochain needs at least one factor");
	PolyForm out = PolyForm::scalar(ch, factors[0]);
	for (size_t i = 1; i < factors.size(); ++i)
		out = wedge(out, exterior_d(PolyForm::scalar(ch, factors[i])));
	return out;
}

std::vector<MultiPoly> straight_cube(int n, int p)
{
	std::vector<MultiPoly> z = base_point(p, n);
	for (int i = p; i >= 1; --i) {
		MultiPoly t = MultiPoly::variable(cube_var(i));
		z = add(scaled(MultiPoly(1) - t, base_point(i - 1, n)), scaled(t, z));
	}
	return z;
}

ASCochain pair_r(const PolyForm &alpha)
{
	const int n = static_cast<int>(alpha.chart().dim()), p = alpha.degree();
	if (!(alpha.chart() == pair_chart(n)))
		throw ChartMismatch("forms on M must use the coordinates y_1..y_n");
	ASCochain r{n, p, MultiPoly()};
	if (p == 0) {
		r.value = subst(alpha.coefficient({}), fiber_to(base_point(0, n))).trimmed();
		return r;
	}
	std::vector<std::string> cube, params;
	for (int i = 1; i <= p; ++i)
		cube.push_back(cube_var(i));
	for (int i = 0; i <= p; ++i)
		for (int j = 1; j <= n; ++j)
			params.push_back(point_var(i, j));
	Chart target = Chart::make(cube, params);
	r.value = cube_integrate(pullback(alpha, target, fiber_to(straight_cube(n, p))));
	return r;
}

PairInstance pair_instance(int n)
{
	PairInstance in;
	in.name = "pair-r" + std::to_string(n);
	in.max_q = n;
	Chart ch = pair_chart(n);
	auto sign = [](int p, PolyForm a) { return p % 2 ? -a : a; };
	in.d = [sign](Bidegree b, const PolyForm &x) { return sign(b.p, exterior_d(x)); };
	in.delta = [n](Bidegree b, const PolyForm &x) {
		PolyForm r(x.chart(), x.degree());
		for (int i = 0; i <= b.p + 1; ++i) {
			auto s = omit_point(n, b.p, i);
			PolyForm face = x.map_coefficients([&](const MultiPoly &c) { return subst(c, s); });
			r += i % 2 ? -face : face;
		}
		return r;
	};
	in.h = [n, sign](Bidegree b, const PolyForm &x) {
		auto s = point_to(b.p, fiber_point(n));
		return sign(b.p, x.map_coefficients([&](const MultiPoly &c) { return subst(c, s); }));
	};
	in.p_hat = [n](int, const PolyForm &x) {
		auto s = point_to(0, fiber_point(n));
		return x.map_coefficients([&](const MultiPoly &c) { return subst(c, s).trimmed(); });
	};
	in.i_hat = [](int, const PolyForm &x) { return x; };
	in.zero_x = [ch](int q) { return PolyForm(ch, q); };
	in.k = [n, sign](Bidegree b, const PolyForm &x) {
		auto centre = base_point(b.p, n);
		return sign(b.p, translate(homotopy_T(translate(x, centre)), negated(centre)));
	};
	in.q_hat = [n](int p, const PolyForm &x) {
		return ASCochain{n, p, subst(x.coefficient({}), fiber_to(base_point(p, n))).trimmed()};
	};
	in.j_hat = [ch](int, const ASCochain &f) { return PolyForm::scalar(ch, f.value); };
	in.zero_y = [n](int p) { return ASCochain{n, p, MultiPoly()}; };
	return in;
}

namespace {

std::vector<std::string> point_vars(int n, int p, bool fiber)
{
	std::vector<std::string> v;
	for (int i = 0; i <= p; ++i)
		for (int j = 1; j <= n; ++j)
			v.push_back(point_var(i, j));
	if (fiber)
		for (int j = 1; j <= n; ++j)
			v.push_back(fiber_var(j));
	return v;
}

PolyForm random_form(Rng &rng, const Chart &ch, int q, const std::vector<std::string> &vars,
                     int max_deg)
{
	int n = static_cast<int>(ch.dim());
	PolyForm a(ch, q);
	if (q > n)
		return a;
	auto subsets = index_subsets(n, q);
	int count = std::min<int>(static_cast<int>(subsets.size()), 2);
	for (int t = 0; t < count; ++t)
		a.add(subsets[uniform_int(rng, 0, static_cast<int>(subsets.size()) - 1)],
		      random_poly(rng, vars, max_deg, 3));
	return a;
}

} // namespace

PairSampler pair_sampler(int n, int max_deg)
{
	Chart ch = pair_chart(n);
	PairSampler s;
	s.element = [ch, n, max_deg](Bidegree b, Rng &rng) {
		return random_form(rng, ch, b.q, point_vars(n, b.p, true), max_deg);
	};
	s.x = [ch, n, max_deg](int q, Rng &rng) {
		return random_form(rng, ch, q, point_vars(n, -1, true), max_deg);
	};
	s.y = [n, max_deg](int p, Rng &rng) {
		return ASCochain{n, p, random_poly(rng, point_vars(n, p, false), max_deg, 4)};
	};
	return s;
}

PolyForm pair_ve_zigzag(const ASCochain &f, ZigzagTrace *trace)
{
	return zigzag_xy(pair_instance(f.n), f.p, f, trace);
}

ASCochain pair_r_zigzag(const PolyForm &alpha, ZigzagTrace *trace)
{
	return zigzag_yx(pair_instance(static_cast<int>(alpha.chart().dim())), alpha.degree(), alpha,
	                 trace);
}

} // namespace vest
