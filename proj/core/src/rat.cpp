#include "vest/rat.hpp"

#include "vest/errors.hpp"

#include <cctype>

namespace vest {

Rat::Rat(long num, long den)
{
	if (den == 0)
		throw ZeroDenominator(std::to_string(num) + "/0");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

Rat &Rat::operator/=(const Rat &o)
{
	if (o.is_zero())
		throw ZeroDenominator("division by zero");
	v_ /= o.v_;
	return *this;
}

Rat Rat::parse(std::string_view text)
{
	std::string s(text);
	auto bad = [&] { return Error("malformed rational '" + s + "'"); };
	if (s.empty())
		throw bad();
	auto slash = s.find('/');
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	auto digits = [](const std::string &t, bool sign_ok) {
		size_t i = 0;
		if (sign_ok && i < t.size() && (t[i] == '-' || t[i] == '+'))
			++i;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(t[i])))
				return false;
		return true;
	};
	if (!digits(num, true) || !digits(den, false))
		throw bad();
	if (num[0] == '+')
		num.erase(0, 1);
	mpz_class n(num), d(den);
	if (d == 0)
		throw ZeroDenominator(s);
	mpq_class q(n, d);
	q.canonicalize();
	return Rat(q);
}

std::string Rat::str() const
{
	if (v_.get_den() == 1)
		return v_.get_num().get_str();
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat &base, unsigned e)
{
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), e);
	return Rat(mpq_class(n, d));
}

} // namespace vest
