#pragma once

#include "vest/forms.hpp"
#include "vest/perturb.hpp"

#include <string>
#include <vector>

namespace vest {

// Function of p+1 points m0_*..mp_* of R^n.
struct ASCochain {
	int n = 1;
	int p = 0;
	MultiPoly value;

	bool is_zero() const { return value.is_zero(); }
	std::string str() const { return value.str(); }
	ASCochain &operator+=(const ASCochain &o);
	ASCochain &operator-=(const ASCochain &o);
	friend ASCochain operator+(ASCochain a, const ASCochain &b) { return a += b; }
	friend ASCochain operator-(ASCochain a, const ASCochain &b) { return a -= b; }
	friend ASCochain operator-(ASCochain a) { a.value = -a.value; return a; }
	friend bool operator==(const ASCochain &a, const ASCochain &b) { return a.value == b.value; }
};

// forms on R^n use the coordinates y_1..y_n
Chart pair_chart(int n);

ASCochain as_delta(const ASCochain &f);
// general cochain: antisymmetrized point derivatives along the diagonal
PolyForm pair_ve(const ASCochain &f);
// f0 (x) f1 (x) ... (x) fp with each factor a polynomial in y_*
ASCochain decomposable(int n, const std::vector<MultiPoly> &factors);
PolyForm pair_ve_decomposable(int n, const std::vector<MultiPoly> &factors);
// integral over straight-line cubes rho_t(a, b) = (1-t) a + t b
ASCochain pair_r(const PolyForm &alpha);
// composite of straight lines, components in t1..tp and m0..mp
std::vector<MultiPoly> straight_cube(int n, int p);

// D^{p,q}: q-forms in y with coefficients depending on m0..mp
using PairInstance = DoubleComplexInstance<PolyForm, PolyForm, ASCochain>;
using PairSampler = Sampler<PolyForm, PolyForm, ASCochain>;

PairInstance pair_instance(int n);
PairSampler pair_sampler(int n, int max_deg);

PolyForm pair_ve_zigzag(const ASCochain &f, ZigzagTrace *trace = nullptr);
ASCochain pair_r_zigzag(const PolyForm &alpha, ZigzagTrace *trace = nullptr);

} // namespace vest
