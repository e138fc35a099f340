#pragma once

#include "vest/rat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vest {

// Canonical variable order: t<i>, then g<i>_<j> by slot, m<i>_<j> by point,
// y_<j>, then any other name lexicographically.
bool var_less(std::string_view a, std::string_view b);

// Interned, canonically sorted set of variable names. Equality is identity.
class VarSet {
public:
	VarSet();
	static VarSet of(std::vector<std::string> names);
	static VarSet unite(const VarSet &a, const VarSet &b);

	size_t size() const;
	bool empty() const { return size() == 0; }
	const std::string &operator[](size_t i) const;
	const std::vector<std::string> &names() const;
	std::optional<size_t> index_of(std::string_view name) const;
	bool contains(std::string_view name) const { return index_of(name).has_value(); }
	bool subset_of(const VarSet &other) const;

	friend bool operator==(const VarSet &a, const VarSet &b) { return a.data_ == b.data_; }

	struct Data;

private:
	explicit VarSet(const Data *d) : data_(d) {}
	const Data *data_;
};

using Exponent = std::vector<std::uint8_t>;

// Hard cap on total degree of any polynomial produced by mul/subst/pow.
int degree_cap();
void set_degree_cap(int cap);

class DegreeCapScope {
public:
	explicit DegreeCapScope(int cap) : saved_(degree_cap()) { set_degree_cap(cap); }
	~DegreeCapScope() { set_degree_cap(saved_); }
	DegreeCapScope(const DegreeCapScope &) = delete;
	DegreeCapScope &operator=(const DegreeCapScope &) = delete;

private:
	int saved_;
};

// Sparse polynomial with exact rational coefficients over a VarSet.
// No stored coefficient is zero.
class MultiPoly {
public:
	using Terms = std::map<Exponent, Rat>;

	MultiPoly() = default;
	MultiPoly(const Rat &c);
	MultiPoly(long c) : MultiPoly(Rat(c)) {}
	MultiPoly(int c) : MultiPoly(Rat(c)) {}
	static MultiPoly variable(std::string_view name);
	static MultiPoly from_terms(VarSet vars, Terms terms);
	static MultiPoly monomial(const Rat &c, const std::vector<std::pair<std::string, int>> &powers);

	const VarSet &vars() const { return vars_; }
	const Terms &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Rat constant_term() const;
	int total_degree() const;
	int degree_in(std::string_view var) const;
	// variables that actually occur
	std::vector<std::string> support() const;
	bool depends_on(std::string_view var) const { return degree_in(var) > 0; }

	MultiPoly aligned(const VarSet &superset) const;
	MultiPoly trimmed() const;

	// coefficient of var^k, as a polynomial in the remaining variables
	MultiPoly coefficient(std::string_view var, int k) const;

	std::string str() const;

	MultiPoly &operator+=(const MultiPoly &o);
	MultiPoly &operator-=(const MultiPoly &o);
	MultiPoly &operator*=(const MultiPoly &o);

	friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
	friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
	friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
	friend MultiPoly operator-(MultiPoly a);
	friend bool operator==(const MultiPoly &a, const MultiPoly &b);

private:
	VarSet vars_;
	Terms terms_;
};

MultiPoly scale(const Rat &c, const MultiPoly &f);
MultiPoly pow(const MultiPoly &f, unsigned e);
MultiPoly diff(const MultiPoly &f, std::string_view var);
// simultaneous substitution; variables absent from the map are kept
MultiPoly subst(const MultiPoly &f, const std::map<std::string, MultiPoly> &assignment);
MultiPoly defint01(const MultiPoly &f, std::string_view var);
// partial evaluation; the result is constant when every occurring variable is assigned
MultiPoly eval(const MultiPoly &f, const std::map<std::string, Rat> &values);
Rat eval_rat(const MultiPoly &f, const std::map<std::string, Rat> &values);

// Variable-name helpers for the naming scheme shared across modules.
std::string slot_var(int slot, int coord);   // g<slot>_<coord>
std::string point_var(int point, int coord); // m<point>_<coord>
std::string fiber_var(int coord);            // y_<coord>
std::string cube_var(int i);                 // t<i>
std::vector<MultiPoly> slot_point(int slot, int dim);
std::vector<MultiPoly> fiber_point(int dim);
std::vector<MultiPoly> base_point(int point, int dim);

} // namespace vest
