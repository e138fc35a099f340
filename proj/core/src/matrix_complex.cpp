#include "vest/matrix_complex.hpp"

#include "vest/errors.hpp"

#include <memory>

namespace vest {

bool MatVec::is_zero() const
{
	for (auto &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

std::string MatVec::str() const
{
	std::string out = "[";
	for (size_t i = 0; i < v.size(); ++i)
		out += (i ? ", " : "") + v[i].str();
	return out + "]";
}

MatVec &MatVec::operator+=(const MatVec &o)
{
	if (v.empty()) {
		*this = o;
		return *this;
	}
	if (o.v.size() != v.size())
		throw ShapeMismatch("adding vectors of different length");
	for (size_t i = 0; i < v.size(); ++i)
		v[i] += o.v[i];
	return *this;
}

MatVec operator-(MatVec a)
{
	for (auto &x : a.v)
		x = -x;
	return a;
}

bool operator==(const MatVec &a, const MatVec &b)
{
	if (a.is_zero() && b.is_zero())
		return true;
	return a.v == b.v;
}

namespace {

RatMatrix kron(const RatMatrix &a, const RatMatrix &b)
{
	size_t ar = a.size(), ac = ar ? a[0].size() : 0;
	size_t br = b.size(), bc = br ? b[0].size() : 0;
	RatMatrix r = zero_matrix(ar * br, ac * bc);
	for (size_t i = 0; i < ar; ++i)
		for (size_t j = 0; j < ac; ++j)
			if (!a[i][j].is_zero())
				for (size_t k = 0; k < br; ++k)
					for (size_t l = 0; l < bc; ++l)
						r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
	return r;
}

RatMatrix random_invertible(Rng &rng, size_t n)
{
	RatMatrix lower = identity_matrix(n), upper = identity_matrix(n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < i; ++j) {
			lower[i][j] = random_coefficient(rng);
			upper[j][i] = random_coefficient(rng);
		}
	for (size_t i = 0; i < n; ++i)
		upper[i][i] = random_nonzero_coefficient(rng);
	return matmul(lower, upper);
}

RatVector as_column(const RatMatrix &m, const RatVector &v) { return matvec(m, v); }

} // namespace

MatrixComplex MatrixComplex::random(std::uint64_t seed, int top)
{
	Rng rng(derive_seed(seed, "matrix-complex"));
	MatrixComplex mc;
	mc.top_ = top;

	// A: ground class at degree 0 plus elementary pairs u_p -> w_{p+1}, p < top
	std::vector<int> pairs(top + 1, 0);
	for (int p = 0; p < top; ++p)
		pairs[p] = p == 0 ? 1 : uniform_int(rng, 0, 1);
	std::vector<int> adim(top + 1);
	for (int p = 0; p <= top; ++p)
		adim[p] = (p == 0 ? 1 : 0) + pairs[p] + (p > 0 ? pairs[p - 1] : 0);
	// basis of A^p: [ground (p = 0)], w's from pairs[p-1], u's from pairs[p]
	auto w_index = [&](int p, int k) { return (p == 0 ? 1 : 0) + k; };
	auto u_index = [&](int p, int k) { return (p == 0 ? 1 : 0) + (p > 0 ? pairs[p - 1] : 0) + k; };
	std::vector<RatMatrix> dA(top), hA(top + 1);
	for (int p = 0; p < top; ++p) {
		dA[p] = zero_matrix(adim[p + 1], adim[p]);
		for (int k = 0; k < pairs[p]; ++k)
			dA[p][w_index(p + 1, k)][u_index(p, k)] = Rat(1);
	}
	for (int p = 1; p <= top; ++p) {
		hA[p] = zero_matrix(adim[p - 1], adim[p]);
		for (int k = 0; k < pairs[p - 1]; ++k)
			hA[p][u_index(p - 1, k)][w_index(p, k)] = Rat(1);
	}

	// B: any complex; classes plus pairs s_q -> t_{q+1}
	std::vector<int> bpairs(top + 1, 0), classes(top + 1, 0), bdim(top + 1);
	for (int q = 0; q <= top; ++q) {
		classes[q] = uniform_int(rng, 0, 1);
		bpairs[q] = q < top ? uniform_int(rng, 0, 1) : 0;
	}
	for (int q = 0; q <= top; ++q) {
		bdim[q] = classes[q] + bpairs[q] + (q > 0 ? bpairs[q - 1] : 0);
		if (bdim[q] == 0) {
			classes[q] = 1;
			bdim[q] = 1;
		}
	}
	std::vector<RatMatrix> dB(top);
	for (int q = 0; q < top; ++q) {
		dB[q] = zero_matrix(bdim[q + 1], bdim[q]);
		for (int k = 0; k < bpairs[q]; ++k)
			dB[q][classes[q + 1] + k][classes[q] + (q > 0 ? bpairs[q - 1] : 0) + k] = Rat(1);
	}

	std::map<Bidegree, RatMatrix> conj, conj_inv;
	for (int p = 0; p <= top; ++p)
		for (int q = 0; q <= top; ++q) {
			Bidegree b{p, q};
			mc.dims_[b] = adim[p] * bdim[q];
			conj[b] = random_invertible(rng, mc.dims_[b]);
			conj_inv[b] = *inverse(conj[b]);
		}
	std::map<int, RatMatrix> xconj, xconj_inv;
	for (int q = 0; q <= top; ++q) {
		mc.xdims_[q] = bdim[q];
		xconj[q] = random_invertible(rng, bdim[q]);
		xconj_inv[q] = *inverse(xconj[q]);
	}

	auto conjugate = [&](Bidegree to, const RatMatrix &m, Bidegree from) {
		return matmul(conj[to], matmul(m, conj_inv[from]));
	};
	for (int p = 0; p <= top; ++p)
		for (int q = 0; q <= top; ++q) {
			Bidegree b{p, q};
			RatMatrix ida = identity_matrix(adim[p]), idb = identity_matrix(bdim[q]);
			if (q < top) {
				RatMatrix m = kron(ida, dB[q]);
				if (p % 2)
					for (auto &row : m)
						for (auto &x : row)
							x = -x;
				mc.d_[b] = conjugate({p, q + 1}, m, b);
			}
			if (p < top)
				mc.delta_[b] = conjugate({p + 1, q}, kron(dA[p], idb), b);
			if (p > 0)
				mc.h_[b] = conjugate({p - 1, q}, kron(hA[p], idb), b);
		}
	RatMatrix ground_in = zero_matrix(adim[0], 1), ground_out = zero_matrix(1, adim[0]);
	ground_in[0][0] = Rat(1);
	ground_out[0][0] = Rat(1);
	for (int q = 0; q <= top; ++q) {
		RatMatrix idb = identity_matrix(bdim[q]);
		mc.i_[q] = matmul(conj[{0, q}], matmul(kron(ground_in, idb), xconj_inv[q]));
		mc.p_[q] = matmul(xconj[q], matmul(kron(ground_out, idb), conj_inv[{0, q}]));
	}
	return mc;
}

int MatrixComplex::dim(Bidegree b) const { return dims_.at(b); }
int MatrixComplex::xdim(int q) const { return xdims_.at(q); }

void MatrixComplex::corrupt_h(Bidegree b)
{
	auto &m = h_.at(b);
	if (m.empty() || m[0].empty())
		throw ShapeMismatch("h vanishes in bidegree " + b.str());
	m[0][0] += Rat(1);
}

MatrixComplex::Instance MatrixComplex::instance(const std::string &name) const
{
	Instance inst;
	inst.name = name;
	inst.max_p = top_;
	inst.max_q = top_;
	auto self = std::make_shared<MatrixComplex>(*this);
	auto mk = [self](const std::map<Bidegree, RatMatrix> MatrixComplex::*which, int dp, int dq) {
		return [self, which, dp, dq](Bidegree b, const MatVec &x) {
			const RatMatrix &m = ((*self).*which).at(b);
			return MatVec{Bidegree{b.p + dp, b.q + dq}, as_column(m, x.v)};
		};
	};
	inst.d = mk(&MatrixComplex::d_, 0, 1);
	inst.delta = mk(&MatrixComplex::delta_, 1, 0);
	inst.h = mk(&MatrixComplex::h_, -1, 0);
	inst.p_hat = [self](int q, const MatVec &x) {
		return MatVec{Bidegree{0, q}, matvec(self->p_.at(q), x.v)};
	};
	inst.i_hat = [self](int q, const MatVec &x) {
		return MatVec{Bidegree{0, q}, matvec(self->i_.at(q), x.v)};
	};
	inst.zero_x = [self](int q) { return MatVec{Bidegree{0, q}, RatVector(self->xdim(q), Rat(0))}; };
	return inst;
}

Sampler<MatVec, MatVec, MatVec> MatrixComplex::sampler() const
{
	auto self = std::make_shared<MatrixComplex>(*this);
	Sampler<MatVec, MatVec, MatVec> s;
	s.element = [self](Bidegree b, Rng &rng) {
		RatVector v(self->dim(b));
		for (auto &x : v)
			x = random_coefficient(rng);
		return MatVec{b, v};
	};
	s.x = [self](int q, Rng &rng) {
		RatVector v(self->xdim(q));
		for (auto &x : v)
			x = random_coefficient(rng);
		return MatVec{Bidegree{0, q}, v};
	};
	return s;
}

Tot<MatVec> MatrixComplex::dense_neumann(const MatVec &x) const
{
	int n = x.at.p + x.at.q;
	std::vector<Bidegree> blocks;
	std::map<Bidegree, int> offset;
	int total = 0;
	for (int p = 0; p <= top_; ++p) {
		int q = n - p;
		if (q < 0 || q > top_)
			continue;
		blocks.push_back({p, q});
		offset[{p, q}] = total;
		total += dims_.at({p, q});
	}
	RatMatrix m = identity_matrix(total);
	for (auto b : blocks) {
		if (b.p == 0 || b.q + 1 > top_)
			continue;
		Bidegree hb{b.p - 1, b.q}, to{b.p - 1, b.q + 1};
		RatMatrix dh = matmul(d_.at(hb), h_.at(b));
		for (size_t i = 0; i < dh.size(); ++i)
			for (size_t j = 0; j < dh[i].size(); ++j)
				m[offset[to] + i][offset[b] + j] += dh[i][j];
	}
	auto inv = inverse(m);
	if (!inv)
		throw Error("1 + dh is singular");
	RatVector full(total, Rat(0));
	for (size_t j = 0; j < x.v.size(); ++j)
		full[offset[x.at] + j] = x.v[j];
	RatVector y = matvec(*inv, full);
	Tot<MatVec> out;
	for (auto b : blocks) {
		RatVector piece(y.begin() + offset[b], y.begin() + offset[b] + dims_.at(b));
		tot_add(out, b, MatVec{b, piece});
	}
	return out;
}

} // namespace vest
