#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace vest {

// Exact rational in lowest terms, positive denominator.
class Rat {
public:
	Rat() = default;
	Rat(long v) : v_(v) {}
	Rat(long num, long den);
	explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	// accepts "a" or "a/b" with optional sign
	static Rat parse(std::string_view text);

	const mpq_class &value() const { return v_; }
	int sign() const { return sgn(v_); }
	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	std::string str() const;

	Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
	Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
	Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
	Rat &operator/=(const Rat &o);

	friend Rat operator+(Rat a, const Rat &b) { return a += b; }
	friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
	friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
	friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
	friend Rat operator-(const Rat &a) { return Rat(mpq_class(-a.v_)); }

	friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(const Rat &a, const Rat &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater
		                      : std::strong_ordering::equal);
	}

private:
	mpq_class v_;
};

Rat pow(const Rat &base, unsigned e);

} // namespace vest
