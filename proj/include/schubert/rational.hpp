#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace schubert {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b exactly. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

// Basis of the right kernel {x | A x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel(RationalMatrix a);

// Determinant by fraction-exact elimination.
Rational determinant(RationalMatrix a);

} // namespace schubert
