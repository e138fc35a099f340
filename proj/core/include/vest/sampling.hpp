#pragma once

#include "vest/poly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vest {

using Rng = std::mt19937_64;

// deterministic seed derived from a base seed and a tag
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::int64_t a = 0,
                          std::int64_t b = 0, std::int64_t c = 0);

// uniform draw from {-2, -1, -1/2, 0, 1/2, 1, 2}
Rat random_coefficient(Rng &rng);
Rat random_nonzero_coefficient(Rng &rng);

// up to max_terms monomials of total degree <= max_deg in the given variables
MultiPoly random_poly(Rng &rng, const std::vector<std::string> &vars, int max_deg,
                      int max_terms = 5);

int uniform_int(Rng &rng, int lo, int hi);

} // namespace vest
