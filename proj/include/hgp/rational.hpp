#pragma once

// Exact rational value type used throughout. Magnitudes stay at desk scale
// (integer sums below ~10^9 before normalization), so int64 components with
// gcd normalization are sufficient.

#include <boost/rational.hpp>

#include <string>

namespace hgp {

using Rat = boost::rational<long long>;

inline std::string rat_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

}   // namespace hgp
