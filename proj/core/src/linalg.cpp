#include "vest/linalg.hpp"

#include <algorithm>

namespace vest {

RatMatrix identity_matrix(size_t n)
{
	RatMatrix m = zero_matrix(n, n);
	for (size_t i = 0; i < n; ++i)
		m[i][i] = Rat(1);
	return m;
}

RatMatrix zero_matrix(size_t rows, size_t cols)
{
	return RatMatrix(rows, RatVector(cols, Rat(0)));
}

RatMatrix matmul(const RatMatrix &a, const RatMatrix &b)
{
	size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
	RatMatrix r = zero_matrix(n, m);
	for (size_t i = 0; i < n; ++i)
		for (size_t l = 0; l < k; ++l) {
			if (a[i][l].is_zero())
				continue;
			for (size_t j = 0; j < m; ++j)
				if (!b[l][j].is_zero())
					r[i][j] += a[i][l] * b[l][j];
		}
	return r;
}

RatVector matvec(const RatMatrix &a, const RatVector &v)
{
	RatVector r(a.size(), Rat(0));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < v.size(); ++j)
			if (!a[i][j].is_zero() && !v[j].is_zero())
				r[i] += a[i][j] * v[j];
	return r;
}

RatMatrix matadd(const RatMatrix &a, const RatMatrix &b)
{
	RatMatrix r = a;
	for (size_t i = 0; i < r.size(); ++i)
		for (size_t j = 0; j < r[i].size(); ++j)
			r[i][j] += b[i][j];
	return r;
}

RatMatrix matsub(const RatMatrix &a, const RatMatrix &b)
{
	RatMatrix r = a;
	for (size_t i = 0; i < r.size(); ++i)
		for (size_t j = 0; j < r[i].size(); ++j)
			r[i][j] -= b[i][j];
	return r;
}

bool is_zero_matrix(const RatMatrix &a)
{
	for (auto &row : a)
		for (auto &x : row)
			if (!x.is_zero())
				return false;
	return true;
}

std::vector<RatVector> span_basis(std::vector<RatVector> rows)
{
	if (rows.empty())
		return {};
	size_t cols = rows[0].size();
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows.size(); ++c) {
		size_t piv = r;
		while (piv < rows.size() && rows[piv][c].is_zero())
			++piv;
		if (piv == rows.size())
			continue;
		std::swap(rows[r], rows[piv]);
		Rat inv = Rat(1) / rows[r][c];
		for (auto &x : rows[r])
			x *= inv;
		for (size_t i = 0; i < rows.size(); ++i) {
			if (i == r || rows[i][c].is_zero())
				continue;
			Rat f = rows[i][c];
			for (size_t j = 0; j < cols; ++j)
				rows[i][j] -= f * rows[r][j];
		}
		++r;
	}
	rows.resize(r);
	return rows;
}

size_t rank(const RatMatrix &a) { return span_basis(a).size(); }

std::optional<RatMatrix> inverse(const RatMatrix &a)
{
	size_t n = a.size();
	RatMatrix aug = zero_matrix(n, 2 * n);
	for (size_t i = 0; i < n; ++i) {
		for (size_t j = 0; j < n; ++j)
			aug[i][j] = a[i][j];
		aug[i][n + i] = Rat(1);
	}
	for (size_t c = 0; c < n; ++c) {
		size_t piv = c;
		while (piv < n && aug[piv][c].is_zero())
			++piv;
		if (piv == n)
			return std::nullopt;
		std::swap(aug[c], aug[piv]);
		Rat inv = Rat(1) / aug[c][c];
		for (auto &x : aug[c])
			x *= inv;
		for (size_t i = 0; i < n; ++i) {
			if (i == c || aug[i][c].is_zero())
				continue;
			Rat f = aug[i][c];
			for (size_t j = 0; j < 2 * n; ++j)
				aug[i][j] -= f * aug[c][j];
		}
	}
	RatMatrix r = zero_matrix(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			r[i][j] = aug[i][n + j];
	return r;
}

} // namespace vest
