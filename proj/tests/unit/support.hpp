#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "starrees/groebner.hpp"
#include "starrees/linalg.hpp"
#include "starrees/polyring.hpp"
#include "starrees/star_config.hpp"

namespace test {

inline starrees::StarConfig example_cfg(const starrees::Field& f = starrees::Field::rationals()) {
    return starrees::StarConfig(starrees::ScalarMatrix::from_ints(f, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}), 2);
}

inline starrees::StarConfig cfg_of(const std::vector<std::vector<long>>& U, int c = 2,
                                   const starrees::Field& f = starrees::Field::rationals()) {
    return starrees::StarConfig(starrees::ScalarMatrix::from_ints(f, U), c);
}

inline starrees::Poly P(const starrees::RingPtr& R, const std::string& s) { return starrees::Poly::parse(R, s); }

inline std::vector<starrees::Poly> Ps(const starrees::RingPtr& R, const std::vector<std::string>& v) {
    std::vector<starrees::Poly> out;
    for (const auto& s : v) out.push_back(P(R, s));
    return out;
}

// f = c*g for a nonzero scalar c.
inline bool scalar_multiple(const starrees::Poly& f, const starrees::Poly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.monic() == g.monic();
}

} // namespace test

namespace Catch {
template <> struct StringMaker<starrees::Poly> {
    static std::string convert(const starrees::Poly& p) { return p.to_string(); }
};
} // namespace Catch
