#include "vest/vanest.hpp"

#include <algorithm>
#include <numeric>

namespace vest {

namespace {

std::string ce_monomial(const IndexSet &idx)
{
	std::string s;
	for (size_t k = 0; k < idx.size(); ++k) {
		if (k)
			s += "/\\";
		s += "e" + std::to_string(idx[k] + 1);
	}
	return s;
}

std::string vec_str(const std::vector<MultiPoly> &v)
{
	if (v.size() == 1)
		return v[0].str();
	std::string s = "[";
	for (size_t a = 0; a < v.size(); ++a)
		s += (a ? ", " : "") + v[a].str();
	return s + "]";
}

std::map<std::string, MultiPoly> zero_block(int slot_or_fiber, int n)
{
	std::map<std::string, MultiPoly> s;
	for (int c = 1; c <= n; ++c)
		s.emplace(slot_or_fiber > 0 ? slot_var(slot_or_fiber, c) : fiber_var(c), MultiPoly());
	return s;
}

std::map<std::string, MultiPoly> to_block(int slot_or_fiber, const PolyVector &v)
{
	std::map<std::string, MultiPoly> s;
	for (size_t c = 1; c <= v.size(); ++c)
		s.emplace(slot_or_fiber > 0 ? slot_var(slot_or_fiber, static_cast<int>(c))
		                            : fiber_var(static_cast<int>(c)),
		          v[c - 1]);
	return s;
}

AltTerms<MultiPoly> subst_terms(const AltTerms<MultiPoly> &terms,
                                const std::map<std::string, MultiPoly> &s, const Rat &factor)
{
	AltTerms<MultiPoly> out;
	for (auto &[idx, v] : terms) {
		std::vector<MultiPoly> w(v.size());
		for (size_t a = 0; a < v.size(); ++a)
			if (!v[a].is_zero())
				w[a] = scale(factor, subst(v[a], s));
		alt_accumulate(out, idx, Rat(1), w);
	}
	return out;
}

// t0-linear part after substitution
AltTerms<MultiPoly> derivative_terms(const AltTerms<MultiPoly> &terms,
                                     const std::map<std::string, MultiPoly> &s)
{
	AltTerms<MultiPoly> out;
	const std::string t = cube_var(0);
	for (auto &[idx, v] : terms) {
		std::vector<MultiPoly> w(v.size());
		for (size_t a = 0; a < v.size(); ++a)
			if (!v[a].is_zero())
				w[a] = subst(v[a], s).coefficient(t, 1);
		alt_accumulate(out, idx, Rat(1), w);
	}
	return out;
}

PolyVector scaled_direction(const RatVector &xi, const Rat &c)
{
	PolyVector a;
	MultiPoly t = MultiPoly::variable(cube_var(0));
	for (auto &x : xi)
		a.push_back(scale(c * x, t));
	return a;
}

// slot substitution for the i-th action on p slots (V and fiber handled by callers)
std::map<std::string, MultiPoly> action_substitution(const PolyGroup &grp, int p, int i,
                                                     const RatVector &xi)
{
	int n = grp.dim();
	if (static_cast<int>(xi.size()) != n)
		throw ShapeMismatch("algebra vector has wrong length");
	if (i < 0 || i > p)
		throw ShapeMismatch("action index " + std::to_string(i) + " out of range 0.." +
		                    std::to_string(p));
	PolyVector a = scaled_direction(xi, Rat(1));
	PolyVector a_inv = scaled_direction(xi, Rat(-1));
	std::map<std::string, MultiPoly> s;
	if (p == 0)
		return s;
	if (i == p) {
		s = to_block(p, grp.product(slot_point(p, n), a_inv));
	} else if (i == 0) {
		s = to_block(1, grp.product(a, slot_point(1, n)));
	} else {
		s = to_block(i, grp.product(slot_point(i, n), a_inv));
		s.merge(to_block(i + 1, grp.product(a, slot_point(i + 1, n))));
	}
	return s;
}

RatVector basis_vector(int n, int i)
{
	RatVector v(n, Rat(0));
	v[i] = Rat(1);
	return v;
}

} // namespace

std::vector<MultiPoly> BigradedElement::component(const IndexSet &idx) const
{
	return alt_eval(terms, idx, vdim);
}

std::string BigradedElement::str() const
{
	if (terms.empty())
		return "0";
	std::string s;
	for (auto &[idx, v] : terms) {
		if (!s.empty())
			s += " + ";
		std::string c = vec_str(v);
		if (idx.empty()) {
			s += v.size() == 1 ? "(" + c + ")" : c;
		} else {
			s += (v.size() == 1 ? "(" + c + ")" : c) + "*" + ce_monomial(idx);
		}
	}
	return s;
}

BigradedElement &BigradedElement::operator+=(const BigradedElement &o)
{
	if (terms.empty() && !o.terms.empty()) {
		p = o.p;
		q = o.q;
		vdim = o.vdim;
	}
	for (auto &[idx, v] : o.terms)
		alt_accumulate(terms, idx, Rat(1), v);
	return *this;
}

BigradedElement &BigradedElement::operator-=(const BigradedElement &o)
{
	if (terms.empty() && !o.terms.empty()) {
		p = o.p;
		q = o.q;
		vdim = o.vdim;
	}
	for (auto &[idx, v] : o.terms)
		alt_accumulate(terms, idx, Rat(-1), v);
	return *this;
}

BigradedElement operator-(BigradedElement a)
{
	for (auto &[idx, v] : a.terms)
		for (auto &x : v)
			x = -x;
	return a;
}

bool operator==(const BigradedElement &a, const BigradedElement &b)
{
	if (a.terms.size() != b.terms.size())
		return false;
	for (auto ia = a.terms.begin(), ib = b.terms.begin(); ia != a.terms.end(); ++ia, ++ib) {
		if (ia->first != ib->first || ia->second.size() != ib->second.size())
			return false;
		for (size_t k = 0; k < ia->second.size(); ++k)
			if (!(ia->second[k] == ib->second[k]))
				return false;
	}
	return true;
}

VanEstComplex::VanEstComplex(std::shared_ptr<const PolyGroup> group,
                             std::shared_ptr<const PolyRep> rep)
    : group_(std::move(group)), rep_(std::move(rep))
{
	if (!rep_)
		rep_ = PolyRep::trivial(group_);
	const int n = group_->dim();
	for (int i = 0; i < n; ++i)
		frame_vf_.push_back(group_->left_invariant_vf(basis_vector(n, i)));
	Chart ch = group_->fiber_chart();
	std::vector<PolyForm> theta;
	for (int i = 0; i < n; ++i)
		theta.push_back(group_->maurer_cartan(i));
	for (int q = 0; q <= n; ++q)
		for (auto &idx : index_subsets(n, q)) {
			PolyForm w = PolyForm::scalar(ch, MultiPoly(1));
			for (int i : idx)
				w = wedge(w, theta[i]);
			theta_.emplace(idx, std::move(w));
		}
	rho_y_ = rep_->matrix();
	rho_y_inv_ = rep_->inverse_at(fiber_point(n));
}

const PolyForm &VanEstComplex::theta_wedge(const IndexSet &idx) const { return theta_.at(idx); }

std::vector<MultiPoly> VanEstComplex::apply_rho_inverse(const std::vector<MultiPoly> &v) const
{
	if (rep_->is_trivial())
		return v;
	return poly_matvec(rho_y_inv_, v);
}

BigradedElement VanEstComplex::zero(Bidegree b) const { return BigradedElement{b.p, b.q, vdim(), {}}; }

CEElement VanEstComplex::zero_ce(int q) const { return CEElement(group_->algebra_ptr(), vdim(), q); }

GroupCochain VanEstComplex::zero_cochain(int p) const
{
	return GroupCochain{group_, rep_, p, PolyVector(vdim())};
}

BigradedElement VanEstComplex::delta(const BigradedElement &psi) const
{
	const int p = psi.p, n = dim();
	BigradedElement r = zero({p + 1, psi.q});
	for (int i = 0; i <= p; ++i) {
		auto faced = subst_terms(psi.terms, face_substitution(*group_, p, i), Rat(i % 2 ? -1 : 1));
		for (auto &[idx, v] : faced)
			alt_accumulate(r.terms, idx, Rat(1), v);
	}
	auto last = subst_terms(psi.terms, to_block(0, group_->product(slot_point(p + 1, n), fiber_point(n))),
	                        Rat((p + 1) % 2 ? -1 : 1));
	for (auto &[idx, v] : last)
		alt_accumulate(r.terms, idx, Rat(1), v);
	return r;
}

BigradedElement VanEstComplex::d_ce(const BigradedElement &psi) const
{
	const int n = dim();
	const Representation &inf = rep_->infinitesimal();
	const bool triv = rep_->is_trivial();
	auto act = [&](int i, const std::vector<MultiPoly> &v) {
		std::vector<MultiPoly> out(v.size());
		for (size_t a = 0; a < v.size(); ++a)
			out[a] = apply_vf(frame_vf_[i], v[a]);
		if (!triv) {
			const RatMatrix &m = inf.action(i);
			for (size_t a = 0; a < v.size(); ++a)
				for (size_t b = 0; b < v.size(); ++b)
					if (!m[a][b].is_zero() && !v[b].is_zero())
						out[a] += scale(m[a][b], v[b]);
		}
		return out;
	};
	BigradedElement r = zero({psi.p, psi.q + 1});
	if (psi.q + 1 > n)
		return r;
	r.terms = ce_apply(group_->algebra(), psi.q, psi.terms, vdim(), act);
	return r;
}

BigradedElement VanEstComplex::d(const BigradedElement &psi) const
{
	BigradedElement r = d_ce(psi);
	return psi.p % 2 ? -r : r;
}

BigradedElement VanEstComplex::h(const BigradedElement &psi) const
{
	const int p = psi.p, n = dim();
	if (p == 0)
		throw DegreeMismatch("h needs p >= 1");
	BigradedElement r = zero({p - 1, psi.q});
	auto s = to_block(p, fiber_point(n));
	s.merge(zero_block(0, n));
	r.terms = subst_terms(psi.terms, s, Rat(p % 2 ? -1 : 1));
	return r;
}

std::vector<PolyForm> VanEstComplex::to_forms(const BigradedElement &psi) const
{
	Chart ch = group_->fiber_chart();
	const int v = vdim();
	std::vector<PolyForm> out(v, PolyForm(ch, psi.q));
	const bool triv = rep_->is_trivial();
	for (auto &[idx, comp] : psi.terms) {
		std::vector<MultiPoly> w = triv ? comp : poly_matvec(rho_y_, comp);
		const PolyForm &th = theta_wedge(idx);
		for (int a = 0; a < v; ++a)
			if (!w[a].is_zero())
				out[a] += th.times(w[a]);
	}
	return out;
}

BigradedElement VanEstComplex::from_forms(int p, const std::vector<PolyForm> &beta) const
{
	const int v = vdim(), n = dim();
	if (static_cast<int>(beta.size()) != v)
		throw ShapeMismatch("form vector has wrong length");
	int q = beta.empty() ? 0 : beta[0].degree();
	BigradedElement r = zero({p, q});
	for (auto &idx : index_subsets(n, q)) {
		std::vector<MultiPoly> val(v);
		bool any = false;
		for (int a = 0; a < v; ++a) {
			if (beta[a].is_zero())
				continue;
			PolyForm c = beta[a];
			for (int i : idx)
				c = vest::contract(c, frame_vf_[i]);
			val[a] = c.coefficient({});
			any = any || !val[a].is_zero();
		}
		if (any)
			alt_accumulate(r.terms, idx, Rat(1), apply_rho_inverse(val));
	}
	return r;
}

BigradedElement VanEstComplex::k(const BigradedElement &psi) const
{
	if (psi.q == 0)
		throw DegreeMismatch("k needs q >= 1");
	auto beta = to_forms(psi);
	for (auto &b : beta)
		b = homotopy_T(b);
	BigradedElement r = from_forms(psi.p, beta);
	r.q = psi.q - 1;
	return psi.p % 2 ? -r : r;
}

CEElement VanEstComplex::p_hat(const BigradedElement &psi) const
{
	if (psi.p != 0)
		throw DegreeMismatch("p-hat needs p = 0");
	CEElement out = zero_ce(psi.q);
	std::map<std::string, Rat> at_unit;
	for (int c = 1; c <= dim(); ++c)
		at_unit.emplace(fiber_var(c), Rat(0));
	for (auto &[idx, comp] : psi.terms) {
		RatVector v;
		for (auto &f : comp)
			v.push_back(eval_rat(f, at_unit));
		out.add(idx, v);
	}
	return out;
}

BigradedElement VanEstComplex::i_hat(const CEElement &alpha) const
{
	BigradedElement r = zero({0, alpha.degree()});
	for (auto &[idx, v] : alpha.terms()) {
		std::vector<MultiPoly> w(v.begin(), v.end());
		alt_accumulate(r.terms, idx, Rat(1), w);
	}
	return r;
}

GroupCochain VanEstComplex::q_hat(const BigradedElement &psi) const
{
	if (psi.q != 0)
		throw DegreeMismatch("q-hat needs q = 0");
	GroupCochain out = zero_cochain(psi.p);
	auto it = psi.terms.find(IndexSet{});
	if (it == psi.terms.end())
		return out;
	auto s = zero_block(0, dim());
	for (int a = 0; a < vdim(); ++a)
		out.value[a] = subst(it->second[a], s).trimmed();
	return out;
}

BigradedElement VanEstComplex::j_hat(const GroupCochain &f) const
{
	BigradedElement r = zero({f.p, 0});
	alt_accumulate(r.terms, IndexSet{}, Rat(1), apply_rho_inverse(f.value));
	return r;
}

BigradedElement VanEstComplex::contract(const BigradedElement &psi, const RatVector &xi) const
{
	if (psi.q == 0)
		throw DegreeMismatch("contraction needs q >= 1");
	BigradedElement r = zero({psi.p, psi.q - 1});
	r.terms = ce_contract_terms(dim(), psi.q, psi.terms, xi, vdim());
	return r;
}

BigradedElement VanEstComplex::lie_derivative(const BigradedElement &psi, const RatVector &xi) const
{
	BigradedElement r = zero({psi.p, psi.q});
	if (psi.q > 0)
		r += d_ce(contract(psi, xi));
	if (psi.q < dim())
		r += contract(d_ce(psi), xi);
	r.p = psi.p;
	r.q = psi.q;
	return r;
}

BigradedElement VanEstComplex::nabla(int i, const RatVector &xi, const BigradedElement &psi) const
{
	const int p = psi.p, n = dim();
	auto s = action_substitution(*group_, p, i, xi);
	if (i == p)
		s.merge(to_block(0, group_->product(scaled_direction(xi, Rat(1)), fiber_point(n))));
	BigradedElement r = zero({p, psi.q});
	r.terms = derivative_terms(psi.terms, s);
	return r;
}

BigradedElement VanEstComplex::normalize(const BigradedElement &psi) const
{
	BigradedElement r = psi;
	for (int slot = 1; slot <= psi.p; ++slot) {
		BigradedElement unit = r;
		unit.terms = subst_terms(r.terms, zero_block(slot, dim()), Rat(1));
		r -= unit;
	}
	r.p = psi.p;
	r.q = psi.q;
	return r;
}

namespace {

std::vector<std::string> element_vars(int p, int n, bool fiber)
{
	std::vector<std::string> vars;
	for (int s = 1; s <= p; ++s)
		for (int c = 1; c <= n; ++c)
			vars.push_back(slot_var(s, c));
	if (fiber)
		for (int c = 1; c <= n; ++c)
			vars.push_back(fiber_var(c));
	return vars;
}

} // namespace

BigradedElement VanEstComplex::random_element(Rng &rng, Bidegree b, int max_deg) const
{
	BigradedElement r = zero(b);
	if (b.q > dim())
		return r;
	auto vars = element_vars(b.p, dim(), true);
	auto subsets = index_subsets(dim(), b.q);
	int count = std::min<int>(static_cast<int>(subsets.size()), 2);
	for (int t = 0; t < count; ++t) {
		auto &idx = subsets[uniform_int(rng, 0, static_cast<int>(subsets.size()) - 1)];
		std::vector<MultiPoly> v(vdim());
		for (auto &x : v)
			x = random_poly(rng, vars, max_deg, 3);
		alt_accumulate(r.terms, idx, Rat(1), v);
	}
	return r;
}

GroupCochain VanEstComplex::random_cochain(Rng &rng, int p, int max_deg) const
{
	GroupCochain f = zero_cochain(p);
	auto vars = element_vars(p, dim(), false);
	for (auto &x : f.value)
		x = random_poly(rng, vars, max_deg, 4);
	return f;
}

CEElement VanEstComplex::random_ce(Rng &rng, int q) const
{
	CEElement a = zero_ce(q);
	if (q > dim())
		return a;
	for (auto &idx : index_subsets(dim(), q)) {
		RatVector v;
		for (int c = 0; c < vdim(); ++c)
			v.push_back(random_coefficient(rng));
		a.add(idx, v);
	}
	return a;
}

VanEstInstance VanEstComplex::instance() const
{
	auto self = std::make_shared<const VanEstComplex>(*this);
	VanEstInstance in;
	in.name = group_->name() + "/" + rep_->name();
	in.max_q = dim();
	in.d = [self](Bidegree, const BigradedElement &x) { return self->d(x); };
	in.delta = [self](Bidegree, const BigradedElement &x) { return self->delta(x); };
	in.h = [self](Bidegree, const BigradedElement &x) { return self->h(x); };
	in.p_hat = [self](int, const BigradedElement &x) { return self->p_hat(x); };
	in.i_hat = [self](int, const CEElement &a) { return self->i_hat(a); };
	in.zero_x = [self](int q) { return self->zero_ce(q); };
	in.k = [self](Bidegree, const BigradedElement &x) { return self->k(x); };
	in.q_hat = [self](int, const BigradedElement &x) { return self->q_hat(x); };
	in.j_hat = [self](int, const GroupCochain &f) { return self->j_hat(f); };
	in.zero_y = [self](int p) { return self->zero_cochain(p); };
	return in;
}

VanEstSampler VanEstComplex::sampler(int max_deg) const
{
	auto self = std::make_shared<const VanEstComplex>(*this);
	VanEstSampler s;
	s.element = [self, max_deg](Bidegree b, Rng &rng) { return self->random_element(rng, b, max_deg); };
	s.x = [self](int q, Rng &rng) { return self->random_ce(rng, q); };
	s.y = [self, max_deg](int p, Rng &rng) { return self->random_cochain(rng, p, max_deg); };
	s.normalized = [self, max_deg](Bidegree b, Rng &rng) {
		return self->normalize(self->random_element(rng, b, max_deg));
	};
	return s;
}

GroupCochain nabla(int i, const RatVector &xi, const GroupCochain &f)
{
	const PolyGroup &grp = *f.group;
	auto s = action_substitution(grp, f.p, i, xi);
	GroupCochain r{f.group, f.rep, f.p, PolyVector(f.value.size())};
	const std::string t = cube_var(0);
	PolyVector moved = s.empty() ? f.value : poly_subst(f.value, s);
	if (i == f.p && !f.rep->is_trivial())
		moved = poly_matvec(f.rep->inverse_at(scaled_direction(xi, Rat(1))), moved);
	for (size_t a = 0; a < moved.size(); ++a)
		r.value[a] = moved[a].coefficient(t, 1);
	return r;
}

CEElement ve_closed(const GroupCochain &f)
{
	const PolyGroup &grp = *f.group;
	const int p = f.p, n = grp.dim(), v = static_cast<int>(f.value.size());
	CEElement out(grp.algebra_ptr(), v, p);
	if (p > n)
		return out;
	if (p == 0) {
		RatVector c;
		for (auto &x : f.value)
			c.push_back(x.constant_term());
		out.add({}, c);
		return out;
	}
	// derivatives along ordered tuples of distinct basis directions, units inserted
	// slot by slot as soon as no later action touches them
	std::map<IndexSet, GroupCochain> level{{IndexSet{}, f}};
	for (int k = 1; k <= p; ++k) {
		std::map<IndexSet, GroupCochain> next;
		for (auto &[seq, g] : level)
			for (int j = 0; j < n; ++j) {
				if (std::find(seq.begin(), seq.end(), j) != seq.end())
					continue;
				IndexSet s = seq;
				s.push_back(j);
				next.emplace(std::move(s), insert_unit(nabla(k, basis_vector(n, j), g), k));
			}
		level = std::move(next);
	}
	const Rat sign(p % 2 ? -1 : 1);
	for (auto &[seq, g] : level) {
		IndexSet sorted = seq;
		int s = sort_with_sign(sorted);
		RatVector c;
		for (auto &x : g.value)
			c.push_back(sign * Rat(s) * x.constant_term());
		// every ordering of the same subset contributes sign(s) * value
		out.add(sorted, c);
	}
	return out;
}

CEElement ve_zigzag(const VanEstComplex &cx, const GroupCochain &f, ZigzagTrace *trace)
{
	return zigzag_xy(cx.instance(), f.p, f, trace);
}

PolyVector gamma_map(const PolyGroup &grp, int p)
{
	if (p < 1)
		throw DegreeMismatch("gamma map needs p >= 1");
	const int n = grp.dim();
	auto scale_by = [&](int i, PolyVector z) {
		MultiPoly t = MultiPoly::variable(cube_var(i));
		for (auto &x : z)
			x = t * x;
		return z;
	};
	PolyVector z = scale_by(p, slot_point(p, n));
	for (int i = p - 1; i >= 1; --i)
		z = scale_by(i, grp.product(slot_point(i, n), z));
	return z;
}

GroupCochain r_closed(const VanEstComplex &cx, const CEElement &alpha)
{
	const int p = alpha.degree(), n = cx.dim();
	GroupCochain out = cx.zero_cochain(p);
	if (p == 0) {
		auto c = alpha.coefficient({});
		for (int a = 0; a < cx.vdim(); ++a)
			out.value[a] = MultiPoly(c[a]);
		return out;
	}
	if (p > n)
		return out;
	std::vector<std::string> cube, params;
	for (int i = 1; i <= p; ++i)
		cube.push_back(cube_var(i));
	for (int s = 1; s <= p; ++s)
		for (int c = 1; c <= n; ++c)
			params.push_back(slot_var(s, c));
	Chart target = Chart::make(cube, params);
	auto phi = to_block(0, gamma_map(cx.group(), p));
	auto forms = cx.to_forms(cx.i_hat(alpha));
	for (int a = 0; a < cx.vdim(); ++a)
		out.value[a] = cube_integrate(pullback(forms[a], target, phi));
	if (!cx.rep_ptr()->is_trivial()) {
		PolyVector prod = slot_point(1, n);
		for (int s = 2; s <= p; ++s)
			prod = cx.group().product(prod, slot_point(s, n));
		out.value = poly_matvec(cx.rep_ptr()->inverse_at(prod), out.value);
	}
	for (auto &x : out.value)
		x = x.trimmed();
	return out;
}

GroupCochain r_zigzag(const VanEstComplex &cx, const CEElement &alpha, ZigzagTrace *trace)
{
	return zigzag_yx(cx.instance(), alpha.degree(), alpha, trace);
}

GroupCochain insert_unit(const GroupCochain &f, int slot)
{
	GroupCochain r = f;
	r.value = poly_subst(f.value, zero_block(slot, f.group->dim()));
	return r;
}

} // namespace vest
