#pragma once

#include "vest/forms.hpp"
#include "vest/liealg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace vest {

using PolyVector = std::vector<MultiPoly>;
using PolyMatrix = std::vector<PolyVector>;

PolyMatrix poly_identity(size_t n);
PolyMatrix poly_matmul(const PolyMatrix &a, const PolyMatrix &b);
PolyVector poly_matvec(const PolyMatrix &a, const PolyVector &v);
PolyMatrix poly_subst(const PolyMatrix &a, const std::map<std::string, MultiPoly> &s);
PolyVector poly_subst(const PolyVector &v, const std::map<std::string, MultiPoly> &s);
bool poly_is_zero(const PolyMatrix &a);
// assignment {prefix_j -> v[j-1]} for a named coordinate block
std::map<std::string, MultiPoly> assign_block(const std::vector<std::string> &names,
                                              const PolyVector &v);

// Simply connected nilpotent group in exponential coordinates; the product is a
// polynomial law in x_1..x_n, y_1..y_n.
class PolyGroup {
public:
	static std::shared_ptr<const PolyGroup> from_algebra(std::shared_ptr<const LieAlgebra> g);
	static std::shared_ptr<const PolyGroup> from_law(std::shared_ptr<const LieAlgebra> g,
	                                                 PolyVector law);

	const std::shared_ptr<const LieAlgebra> &algebra_ptr() const { return g_; }
	const LieAlgebra &algebra() const { return *g_; }
	const std::string &name() const { return g_->name(); }
	int dim() const { return g_->dim(); }
	const PolyVector &law() const { return law_; }

	PolyVector product(const PolyVector &a, const PolyVector &b) const;
	PolyVector inverse(const PolyVector &a) const;
	PolyVector bracket(const PolyVector &a, const PolyVector &b) const;

	// chart with coordinates y_1..y_n
	Chart fiber_chart() const;
	PolyVF left_invariant_vf(const RatVector &xi) const;
	// column j holds the components of e_j^L
	const PolyMatrix &left_frame() const { return frame_; }
	// theta^i = sum_k coframe()[i][k] dy_k
	const PolyMatrix &coframe() const { return coframe_; }
	PolyForm maurer_cartan(int i) const;

private:
	PolyGroup() = default;
	void build_frames();

	std::shared_ptr<const LieAlgebra> g_;
	PolyVector law_;
	PolyMatrix frame_;
	PolyMatrix coframe_;
};

// Unipotent polynomial representation rho(y), entries in y_1..y_n.
class PolyRep {
public:
	static std::shared_ptr<const PolyRep> validate(std::shared_ptr<const PolyGroup> group,
	                                               std::string name, PolyMatrix rho);
	static std::shared_ptr<const PolyRep> trivial(std::shared_ptr<const PolyGroup> group);
	static std::shared_ptr<const PolyRep> adjoint(std::shared_ptr<const PolyGroup> group);

	const std::string &name() const { return name_; }
	int dim() const { return static_cast<int>(rho_.size()); }
	const PolyMatrix &matrix() const { return rho_; }
	PolyMatrix at(const PolyVector &point) const;
	PolyMatrix inverse_at(const PolyVector &point) const;
	const Representation &infinitesimal() const { return inf_; }
	bool is_trivial() const { return trivial_; }

private:
	std::shared_ptr<const PolyGroup> group_;
	std::string name_;
	PolyMatrix rho_;
	Representation inf_;
	bool trivial_ = false;
};

// Registry: abelian-<n>, heisenberg3, filiform4.
std::shared_ptr<const PolyGroup> group_by_name(const std::string &name);
std::vector<std::string> registered_groups();
// trivial, adjoint, and standard (heisenberg3 only)
std::shared_ptr<const PolyRep> rep_by_name(const std::shared_ptr<const PolyGroup> &group,
                                           const std::string &name);

// Polynomial V-valued function of p group slots g1_*..gp_*.
struct GroupCochain {
	std::shared_ptr<const PolyGroup> group;
	std::shared_ptr<const PolyRep> rep;
	int p = 0;
	PolyVector value;

	bool is_zero() const;
	std::string str() const;
	GroupCochain &operator+=(const GroupCochain &o);
	GroupCochain &operator-=(const GroupCochain &o);
	friend GroupCochain operator+(GroupCochain a, const GroupCochain &b) { return a += b; }
	friend GroupCochain operator-(GroupCochain a, const GroupCochain &b) { return a -= b; }
	friend GroupCochain operator-(GroupCochain a);
	friend bool operator==(const GroupCochain &a, const GroupCochain &b);
};

// Substitution realizing the i-th face map G^{p+1} -> G^p on slot variables
// (0 drops g1, p+1 drops the last slot, otherwise g_i g_{i+1} is multiplied).
std::map<std::string, MultiPoly> face_substitution(const PolyGroup &group, int p, int i);

GroupCochain group_delta(const GroupCochain &f);

} // namespace vest
