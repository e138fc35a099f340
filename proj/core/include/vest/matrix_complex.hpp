#pragma once

#include "vest/linalg.hpp"
#include "vest/perturb.hpp"

#include <cstdint>
#include <map>

namespace vest {

// Element of a finite-dimensional graded piece, tagged with its bidegree.
struct MatVec {
	Bidegree at;
	RatVector v;

	bool is_zero() const;
	std::string str() const;
	MatVec &operator+=(const MatVec &o);
	friend MatVec operator+(MatVec a, const MatVec &b) { return a += b; }
	friend MatVec operator-(MatVec a);
	friend MatVec operator-(MatVec a, const MatVec &b) { return a += -b; }
	friend bool operator==(const MatVec &a, const MatVec &b);
};

// Random finite double complex D^{p,q} = A^p (x) B^q, 0 <= p,q <= 3, where A is a
// contractible augmented complex, then conjugated by random invertible matrices
// in every bidegree so that no operator keeps a tensor or sparse shape.
class MatrixComplex {
public:
	using Instance = DoubleComplexInstance<MatVec, MatVec, MatVec>;

	static MatrixComplex random(std::uint64_t seed, int top = 3);

	int top() const { return top_; }
	int dim(Bidegree b) const;
	int xdim(int q) const;
	Instance instance(const std::string &name = "matrix") const;
	Sampler<MatVec, MatVec, MatVec> sampler() const;
	// (1+dh)^{-1} x through a dense inverse on the total degree of x
	Tot<MatVec> dense_neumann(const MatVec &x) const;
	// replaces h in one bidegree by a perturbed matrix (fault injection)
	void corrupt_h(Bidegree b);

	const RatMatrix &d_matrix(Bidegree b) const { return d_.at(b); }
	const RatMatrix &h_matrix(Bidegree b) const { return h_.at(b); }

private:
	int top_ = 3;
	std::map<Bidegree, int> dims_;
	std::map<int, int> xdims_;
	std::map<Bidegree, RatMatrix> d_, delta_, h_;
	std::map<int, RatMatrix> i_, p_;
};

} // namespace vest
