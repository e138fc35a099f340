#pragma once

#include "vest/nilgroup.hpp"
#include "vest/perturb.hpp"

#include <memory>
#include <string>
#include <vector>

namespace vest {

// psi in D^{p,q}: polynomial in g1_*..gp_*, y_* with values in V (x) Lambda^q g*.
struct BigradedElement {
	int p = 0;
	int q = 0;
	int vdim = 1;
	AltTerms<MultiPoly> terms;

	std::vector<MultiPoly> component(const IndexSet &idx) const;
	bool is_zero() const { return terms.empty(); }
	std::string str() const;

	BigradedElement &operator+=(const BigradedElement &o);
	BigradedElement &operator-=(const BigradedElement &o);
	friend BigradedElement operator+(BigradedElement a, const BigradedElement &b) { return a += b; }
	friend BigradedElement operator-(BigradedElement a, const BigradedElement &b) { return a -= b; }
	friend BigradedElement operator-(BigradedElement a);
	friend bool operator==(const BigradedElement &a, const BigradedElement &b);
};

using VanEstInstance = DoubleComplexInstance<BigradedElement, CEElement, GroupCochain>;
using VanEstSampler = Sampler<BigradedElement, CEElement, GroupCochain>;

class VanEstComplex {
public:
	VanEstComplex(std::shared_ptr<const PolyGroup> group, std::shared_ptr<const PolyRep> rep);

	const PolyGroup &group() const { return *group_; }
	const std::shared_ptr<const PolyGroup> &group_ptr() const { return group_; }
	const std::shared_ptr<const PolyRep> &rep_ptr() const { return rep_; }
	int dim() const { return group_->dim(); }
	int vdim() const { return rep_->dim(); }

	BigradedElement zero(Bidegree b) const;
	CEElement zero_ce(int q) const;
	GroupCochain zero_cochain(int p) const;

	BigradedElement delta(const BigradedElement &psi) const;
	// unsigned Chevalley-Eilenberg differential in the y-direction
	BigradedElement d_ce(const BigradedElement &psi) const;
	BigradedElement d(const BigradedElement &psi) const;
	BigradedElement h(const BigradedElement &psi) const;
	BigradedElement k(const BigradedElement &psi) const;
	CEElement p_hat(const BigradedElement &psi) const;
	BigradedElement i_hat(const CEElement &alpha) const;
	GroupCochain q_hat(const BigradedElement &psi) const;
	BigradedElement j_hat(const GroupCochain &f) const;

	// component picture <-> V-valued coordinate forms on the y-chart
	std::vector<PolyForm> to_forms(const BigradedElement &psi) const;
	BigradedElement from_forms(int p, const std::vector<PolyForm> &beta) const;

	BigradedElement contract(const BigradedElement &psi, const RatVector &xi) const;
	BigradedElement lie_derivative(const BigradedElement &psi, const RatVector &xi) const;
	// derivative along the i-th action, 0 <= i <= p (trivial on V (x) Lambda)
	BigradedElement nabla(int i, const RatVector &xi, const BigradedElement &psi) const;

	BigradedElement normalize(const BigradedElement &psi) const;

	BigradedElement random_element(Rng &rng, Bidegree b, int max_deg) const;
	GroupCochain random_cochain(Rng &rng, int p, int max_deg) const;
	CEElement random_ce(Rng &rng, int q) const;

	VanEstInstance instance() const;
	VanEstSampler sampler(int max_deg) const;

private:
	std::vector<MultiPoly> apply_rho_inverse(const std::vector<MultiPoly> &v) const;
	const PolyForm &theta_wedge(const IndexSet &idx) const;

	std::shared_ptr<const PolyGroup> group_;
	std::shared_ptr<const PolyRep> rep_;
	std::vector<PolyVF> frame_vf_;
	std::map<IndexSet, PolyForm> theta_;
	PolyMatrix rho_y_;
	PolyMatrix rho_y_inv_;
};

// Derivative along the i-th action on p-cochains, 0 <= i <= p:
// i = 0 moves g1 -> a g1; 0 < i < p moves (g_i, g_{i+1}) -> (g_i a^-1, a g_{i+1});
// i = p moves g_p -> g_p a^-1 and acts by rho(a)^-1 on values.
GroupCochain nabla(int i, const RatVector &xi, const GroupCochain &f);

CEElement ve_closed(const GroupCochain &f);
CEElement ve_zigzag(const VanEstComplex &cx, const GroupCochain &f, ZigzagTrace *trace = nullptr);

// gamma^{(p)}: iterated scaled product, components in t1..tp and the slot variables
PolyVector gamma_map(const PolyGroup &group, int p);

GroupCochain r_closed(const VanEstComplex &cx, const CEElement &alpha);
GroupCochain r_zigzag(const VanEstComplex &cx, const CEElement &alpha, ZigzagTrace *trace = nullptr);

// slot substitution g_i -> 0
GroupCochain insert_unit(const GroupCochain &f, int slot);

} // namespace vest
