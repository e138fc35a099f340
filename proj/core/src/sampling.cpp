#include "vest/sampling.hpp"

#include <array>

namespace vest {

namespace {

std::uint64_t splitmix(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::int64_t a,
                          std::int64_t b, std::int64_t c)
{
	std::uint64_t h = 1469598103934665603ULL;
	for (unsigned char ch : tag)
		h = (h ^ ch) * 1099511628211ULL;
	std::uint64_t s = splitmix(base ^ h);
	s = splitmix(s ^ static_cast<std::uint64_t>(a));
	s = splitmix(s ^ static_cast<std::uint64_t>(b));
	return splitmix(s ^ static_cast<std::uint64_t>(c));
}

int uniform_int(Rng &rng, int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat random_coefficient(Rng &rng)
{
	static const std::array<Rat, 7> pool = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
	                                        Rat(1, 2), Rat(1), Rat(2)};
	return pool[uniform_int(rng, 0, 6)];
}

Rat random_nonzero_coefficient(Rng &rng)
{
	static const std::array<Rat, 6> pool = {Rat(-2), Rat(-1), Rat(-1, 2),
	                                        Rat(1, 2), Rat(1), Rat(2)};
	return pool[uniform_int(rng, 0, 5)];
}

MultiPoly random_poly(Rng &rng, const std::vector<std::string> &vars, int max_deg,
                      int max_terms)
{
	MultiPoly f;
	int terms = uniform_int(rng, 1, max_terms);
	for (int t = 0; t < terms; ++t) {
		Rat c = random_coefficient(rng);
		if (c.is_zero())
			continue;
		int deg = vars.empty() ? 0 : uniform_int(rng, 0, max_deg);
		MultiPoly m(c);
		for (int k = 0; k < deg; ++k)
			m *= MultiPoly::variable(vars[uniform_int(rng, 0, static_cast<int>(vars.size()) - 1)]);
		f += m;
	}
	return f;
}

} // namespace vest
