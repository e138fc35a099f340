#pragma once

#include "vest/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace vest {

// Coordinate chart: differentials exist only for coords. Every other variable
// appearing in a coefficient is a constant parameter.
struct Chart {
	VarSet coords;
	VarSet params;

	static Chart make(std::vector<std::string> coords, std::vector<std::string> params = {});
	size_t dim() const { return coords.size(); }
	friend bool operator==(const Chart &a, const Chart &b) { return a.coords == b.coords; }
};

// strictly increasing coordinate positions
using IndexSet = std::vector<int>;

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexSet &idx);

class PolyForm {
public:
	using Terms = std::map<IndexSet, MultiPoly>;

	PolyForm() = default;
	PolyForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {}
	static PolyForm scalar(Chart chart, const MultiPoly &f);
	static PolyForm differential(Chart chart, std::string_view coord);

	const Chart &chart() const { return chart_; }
	int degree() const { return degree_; }
	const Terms &terms() const { return terms_; }
	MultiPoly coefficient(const IndexSet &idx) const;
	bool is_zero() const { return terms_.empty(); }

	// accumulate c * dx_idx; idx may be unsorted
	void add(IndexSet idx, const MultiPoly &c);

	PolyForm times(const MultiPoly &f) const;
	template <class F> PolyForm map_coefficients(F &&f) const
	{
		PolyForm r(chart_, degree_);
		for (auto &[idx, c] : terms_)
			r.add(idx, f(c));
		return r;
	}

	std::string str() const;

	PolyForm &operator+=(const PolyForm &o);
	PolyForm &operator-=(const PolyForm &o);
	friend PolyForm operator+(PolyForm a, const PolyForm &b) { return a += b; }
	friend PolyForm operator-(PolyForm a, const PolyForm &b) { return a -= b; }
	friend PolyForm operator-(PolyForm a);
	friend bool operator==(const PolyForm &a, const PolyForm &b);

private:
	Chart chart_;
	int degree_ = 0;
	Terms terms_;
};

struct PolyVF {
	Chart chart;
	std::vector<MultiPoly> components;

	static PolyVF coordinate(const Chart &chart, std::string_view coord);
};

MultiPoly apply_vf(const PolyVF &x, const MultiPoly &f);
PolyForm wedge(const PolyForm &a, const PolyForm &b);
PolyForm exterior_d(const PolyForm &a);
// phi assigns a polynomial over target coords/params to every source coordinate
PolyForm pullback(const PolyForm &a, const Chart &target,
                  const std::map<std::string, MultiPoly> &phi);
PolyForm contract(const PolyForm &a, const PolyVF &x);
PolyForm lie_derivative(const PolyForm &a, const PolyVF &x);
// Poincare homotopy for the scaling retraction y -> t*y
PolyForm homotopy_T(const PolyForm &a);
// integral of a top form over [0,1]^p in a chart whose coords are t1..tp
MultiPoly cube_integrate(const PolyForm &a);

} // namespace vest
