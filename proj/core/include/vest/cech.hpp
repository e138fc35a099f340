#pragma once

#include "vest/perturb.hpp"
#include "vest/forms.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vest {

// Piecewise polynomial in x on the circle R/Z. Piece i lives on
// [breaks[i], breaks[i+1]) with breaks[0] = 0 and the last piece ending at 1.
class PwPoly {
public:
	PwPoly();
	PwPoly(const Rat &c);
	PwPoly(std::vector<Rat> breaks, std::vector<MultiPoly> pieces);

	static const std::string &var();
	static MultiPoly x();

	const std::vector<Rat> &breaks() const { return breaks_; }
	const std::vector<MultiPoly> &pieces() const { return pieces_; }
	bool is_zero() const;
	std::string str() const;

	PwPoly refined(const std::vector<Rat> &extra) const;
	PwPoly derivative() const;
	Rat integral() const;
	// limits from the right and from the left at a point of [0,1)
	Rat right_value(const Rat &at) const;
	Rat left_value(const Rat &at) const;
	bool continuous() const;

	PwPoly &operator+=(const PwPoly &o);
	PwPoly &operator-=(const PwPoly &o);
	friend PwPoly operator+(PwPoly a, const PwPoly &b) { return a += b; }
	friend PwPoly operator-(PwPoly a, const PwPoly &b) { return a -= b; }
	friend PwPoly operator-(PwPoly a);
	friend PwPoly operator*(const PwPoly &a, const PwPoly &b);
	friend bool operator==(const PwPoly &a, const PwPoly &b);

	template <class F> PwPoly map_pieces(F &&f) const
	{
		PwPoly r = *this;
		for (size_t i = 0; i < r.pieces_.size(); ++i)
			r.pieces_[i] = f(i, r.pieces_[i]);
		r.canonicalize();
		return r;
	}

private:
	void canonicalize();
	Rat piece_end(size_t i) const;
	std::vector<Rat> breaks_;
	std::vector<MultiPoly> pieces_;
};

Rat circle_mod(const Rat &x);

// Open arc (lo, hi) of the circle, given by a lift with 0 < hi - lo < 1.
struct Arc {
	Rat lo, hi;

	bool contains(const Rat &circle_point) const;
	// lift of a circle point into [lo, lo + 1)
	Rat lift(const Rat &circle_point) const;
	Rat midpoint() const;
	std::string str() const;
};

// connected components of an intersection of arcs
std::vector<Arc> intersect(const Arc &a, const Arc &b);

// zero outside the arc
PwPoly restrict_to(const PwPoly &f, const Arc &arc);
// polynomial in the lifted coordinate x on the arc, zero outside
PwPoly on_arc(const Arc &arc, const MultiPoly &f);
// x -> integral from base to x along the arc of f, zero outside
PwPoly primitive_on_arc(const PwPoly &f, const Arc &arc, const Rat &base);
// hat function: 0 up to a, linear up to 1 on [a, b], 1 up to c, linear down to 0 on [c, d]
PwPoly hat(const Rat &a, const Rat &b, const Rat &c, const Rat &d);

class CircleCover {
public:
	// throws InvalidCover unless sum chi = 1, supp chi_i inside arc i, and all
	// nonempty intersections are arcs
	static std::shared_ptr<const CircleCover> make(std::vector<Arc> arcs, std::vector<PwPoly> pou);
	static std::shared_ptr<const CircleCover> three_arcs();

	int size() const { return static_cast<int>(arcs_.size()); }
	const std::vector<Arc> &arcs() const { return arcs_; }
	const PwPoly &chi(int i) const { return pou_[i]; }
	// sorted index sets of size p+1 with nonempty intersection
	const std::vector<IndexSet> &simplices(int p) const;
	int max_p() const { return static_cast<int>(nerve_.size()) - 1; }
	bool nonempty(const IndexSet &sorted) const { return domain_.count(sorted) > 0; }
	const Arc &domain(const IndexSet &sorted) const { return domain_.at(sorted); }
	const Rat &basepoint(const IndexSet &sorted) const { return base_.at(sorted); }

private:
	std::vector<Arc> arcs_;
	std::vector<PwPoly> pou_;
	std::vector<std::vector<IndexSet>> nerve_;
	std::map<IndexSet, Arc> domain_;
	std::map<IndexSet, Rat> base_;
};

// element of C^p(U, Omega^q); components stored on sorted index sets, zero
// outside their intersection; a q = 1 component f means f dx
struct CechForm {
	int p = 0;
	int q = 0;
	std::map<IndexSet, PwPoly> comps;

	PwPoly component(IndexSet idx) const;
	void add(IndexSet idx, const PwPoly &f);
	bool is_zero() const { return comps.empty(); }
	std::string str() const;

	CechForm &operator+=(const CechForm &o);
	CechForm &operator-=(const CechForm &o);
	friend CechForm operator+(CechForm a, const CechForm &b) { return a += b; }
	friend CechForm operator-(CechForm a, const CechForm &b) { return a -= b; }
	friend CechForm operator-(CechForm a);
	friend bool operator==(const CechForm &a, const CechForm &b);
};

// global q-form on the circle
struct CircleForm {
	int q = 0;
	PwPoly coeff;

	bool is_zero() const { return coeff.is_zero(); }
	std::string str() const;
	CircleForm &operator+=(const CircleForm &o);
	CircleForm &operator-=(const CircleForm &o);
	friend CircleForm operator+(CircleForm a, const CircleForm &b) { return a += b; }
	friend CircleForm operator-(CircleForm a, const CircleForm &b) { return a -= b; }
	friend CircleForm operator-(CircleForm a) { a.coeff = -a.coeff; return a; }
	friend bool operator==(const CircleForm &a, const CircleForm &b) { return a.coeff == b.coeff; }
};

// Cech cochain with constant coefficients
struct CechCochain {
	int p = 0;
	std::map<IndexSet, Rat> values;

	void add(IndexSet idx, const Rat &c);
	bool is_zero() const { return values.empty(); }
	std::string str() const;
	CechCochain &operator+=(const CechCochain &o);
	CechCochain &operator-=(const CechCochain &o);
	friend CechCochain operator+(CechCochain a, const CechCochain &b) { return a += b; }
	friend CechCochain operator-(CechCochain a, const CechCochain &b) { return a -= b; }
	friend CechCochain operator-(CechCochain a);
	friend bool operator==(const CechCochain &a, const CechCochain &b) { return a.values == b.values; }
};

class CechComplex {
public:
	explicit CechComplex(std::shared_ptr<const CircleCover> cover) : cover_(std::move(cover)) {}

	const CircleCover &cover() const { return *cover_; }

	CechForm delta(const CechForm &w) const;
	CechForm d(const CechForm &w) const;
	CechForm h(const CechForm &w) const;
	CechForm k(const CechForm &w) const;
	CircleForm p_hat(const CechForm &w) const;
	CechForm i_hat(const CircleForm &a) const;
	CechCochain q_hat(const CechForm &w) const;
	CechForm j_hat(const CechCochain &c) const;
	CechCochain cochain_delta(const CechCochain &c) const;

	CircleForm collate(const CechCochain &c, ZigzagTrace *trace = nullptr) const;
	CechCochain cech_image(const CircleForm &a, ZigzagTrace *trace = nullptr) const;

	CechForm random_element(Rng &rng, Bidegree b, int max_deg) const;
	CircleForm random_global(Rng &rng, int q, int max_deg) const;
	CechCochain random_cochain(Rng &rng, int p) const;

	using Instance = DoubleComplexInstance<CechForm, CircleForm, CechCochain>;
	Instance instance() const;
	Sampler<CechForm, CircleForm, CechCochain> sampler(int max_deg) const;

private:
	std::shared_ptr<const CircleCover> cover_;
};

Rat circle_integral(const CircleForm &a);

} // namespace vest
