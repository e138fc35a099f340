#pragma once

#include "vest/forms.hpp"
#include "vest/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vest {

// Finite-dimensional Lie algebra over Q by structure constants
// [e_i, e_j] = sum_k c^k_ij e_k (indices 0-based internally, 1-based in text).
class LieAlgebra {
public:
	struct Entry {
		int i, j, k;
		Rat c;
	};

	static LieAlgebra validate(std::string name, int dim, const std::vector<Entry> &entries,
	                           std::optional<int> declared_class = std::nullopt);
	static LieAlgebra abelian(int n);
	static LieAlgebra heisenberg3();
	static LieAlgebra filiform4();

	const std::string &name() const { return name_; }
	int dim() const { return dim_; }
	const Rat &c(int i, int j, int k) const { return tensor_[(i * dim_ + j) * dim_ + k]; }
	// nonzero (k, c^k_ij)
	const std::vector<std::pair<int, Rat>> &bracket_terms(int i, int j) const
	{
		return sparse_[i * dim_ + j];
	}
	// nullopt when not nilpotent
	std::optional<int> nilpotency_class() const { return class_; }
	RatVector bracket(const RatVector &x, const RatVector &y) const;

private:
	std::string name_;
	int dim_ = 0;
	std::vector<Rat> tensor_;
	std::vector<std::vector<std::pair<int, Rat>>> sparse_;
	std::optional<int> class_;
};

class Representation {
public:
	static Representation validate(const LieAlgebra &g, std::vector<RatMatrix> actions);
	static Representation trivial(const LieAlgebra &g, int vdim = 1);

	int dim() const { return vdim_; }
	const RatMatrix &action(int i) const { return actions_[i]; }
	bool is_trivial() const;

private:
	int vdim_ = 1;
	std::vector<RatMatrix> actions_;
};

std::vector<IndexSet> index_subsets(int n, int q);

// Alternating q-forms on g with values in a module whose elements are vectors of S.
// act(i, v) returns e_i . v.
template <class S> using AltTerms = std::map<IndexSet, std::vector<S>>;

template <class S> bool vec_is_zero(const std::vector<S> &v)
{
	for (auto &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

template <class S> void vec_axpy(std::vector<S> &acc, const Rat &a, const std::vector<S> &v)
{
	if (acc.empty())
		acc.assign(v.size(), S());
	for (size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			acc[i] += a.is_one() ? v[i] : S(a) * v[i];
}

template <class S> void alt_accumulate(AltTerms<S> &terms, IndexSet idx, const Rat &a,
                                       const std::vector<S> &v)
{
	int s = sort_with_sign(idx);
	if (s == 0 || a.is_zero() || vec_is_zero(v))
		return;
	auto &slot = terms[idx];
	vec_axpy(slot, s > 0 ? a : -a, v);
	if (vec_is_zero(slot))
		terms.erase(idx);
}

// value of alpha on (e_idx[0], ..., e_idx[q-1]) for an arbitrary index list
template <class S> std::vector<S> alt_eval(const AltTerms<S> &alpha, IndexSet idx, size_t vdim)
{
	int s = sort_with_sign(idx);
	std::vector<S> out(vdim);
	if (s == 0)
		return out;
	auto it = alpha.find(idx);
	if (it == alpha.end())
		return out;
	vec_axpy(out, Rat(s), it->second);
	return out;
}

template <class S, class Act>
AltTerms<S> ce_apply(const LieAlgebra &g, int q, const AltTerms<S> &alpha, size_t vdim, Act &&act)
{
	AltTerms<S> out;
	const int n = g.dim();
	for (auto &J : index_subsets(n, q + 1)) {
		std::vector<S> val(vdim);
		for (int k = 0; k <= q; ++k) {
			IndexSet rest = J;
			rest.erase(rest.begin() + k);
			auto it = alpha.find(rest);
			if (it == alpha.end())
				continue;
			vec_axpy(val, Rat(k % 2 ? -1 : 1), act(J[k], it->second));
		}
		for (int k = 0; k <= q; ++k)
			for (int l = k + 1; l <= q; ++l)
				for (auto &[m, c] : g.bracket_terms(J[k], J[l])) {
					IndexSet idx{m};
					for (int r = 0; r <= q; ++r)
						if (r != k && r != l)
							idx.push_back(J[r]);
					int s = sort_with_sign(idx);
					if (s == 0)
						continue;
					auto it = alpha.find(idx);
					if (it == alpha.end())
						continue;
					Rat f = c * Rat(((k + l) % 2 ? -1 : 1) * s);
					vec_axpy(val, f, it->second);
				}
		if (!vec_is_zero(val))
			out.emplace(J, std::move(val));
	}
	return out;
}

template <class S>
AltTerms<S> ce_contract_terms(int n, int q, const AltTerms<S> &alpha, const RatVector &xi,
                              size_t vdim)
{
	AltTerms<S> out;
	if (q == 0)
		return out;
	for (auto &J : index_subsets(n, q - 1)) {
		std::vector<S> val(vdim);
		for (int m = 0; m < n; ++m) {
			if (xi[m].is_zero())
				continue;
			IndexSet idx{m};
			idx.insert(idx.end(), J.begin(), J.end());
			vec_axpy(val, xi[m], alt_eval(alpha, idx, vdim));
		}
		if (!vec_is_zero(val))
			out.emplace(J, std::move(val));
	}
	return out;
}

class CEElement {
public:
	CEElement() = default;
	CEElement(std::shared_ptr<const LieAlgebra> g, int vdim, int degree)
	    : g_(std::move(g)), vdim_(vdim), degree_(degree)
	{}
	static CEElement basis(std::shared_ptr<const LieAlgebra> g, int vdim, IndexSet idx,
	                       int component = 0);

	const std::shared_ptr<const LieAlgebra> &algebra() const { return g_; }
	int vdim() const { return vdim_; }
	int degree() const { return degree_; }
	const AltTerms<Rat> &terms() const { return terms_; }
	AltTerms<Rat> &terms() { return terms_; }
	RatVector coefficient(const IndexSet &idx) const;
	bool is_zero() const { return terms_.empty(); }
	void add(IndexSet idx, const RatVector &v) { alt_accumulate(terms_, std::move(idx), Rat(1), v); }

	std::string str() const;

	CEElement &operator+=(const CEElement &o);
	CEElement &operator-=(const CEElement &o);
	friend CEElement operator+(CEElement a, const CEElement &b) { return a += b; }
	friend CEElement operator-(CEElement a, const CEElement &b) { return a -= b; }
	friend CEElement operator-(CEElement a);
	friend bool operator==(const CEElement &a, const CEElement &b);

private:
	std::shared_ptr<const LieAlgebra> g_;
	int vdim_ = 1;
	int degree_ = 0;
	AltTerms<Rat> terms_;
};

CEElement ce_diff(const CEElement &a, const Representation &rep);
CEElement ce_contract(const CEElement &a, const RatVector &xi);
CEElement ce_lie_derivative(const CEElement &a, const Representation &rep, const RatVector &xi);

} // namespace vest
