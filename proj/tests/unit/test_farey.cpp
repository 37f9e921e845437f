#include "fermat_torus/farey.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using fermat::Rational;

namespace {

// Oracle: double loop over all p/q with reduction, deduplicated and sorted.
std::vector<Rational> farey_oracle(std::int64_t d) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::int64_t q = 1; q <= d; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            std::int64_t g = std::gcd(p, q);
            seen.insert({p / std::max<std::int64_t>(g, 1), q / std::max<std::int64_t>(g, 1)});
        }
    }
    std::vector<Rational> out;
    for (auto [p, q] : seen) {
        out.emplace_back(p, q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("farey_enumerate smallest sequences") {
    CHECK(fermat::farey_enumerate(1) == std::vector<Rational>{Rational(0, 1), Rational(1, 1)});
    CHECK(fermat::farey_enumerate(2) ==
          std::vector<Rational>{Rational(0, 1), Rational(1, 2), Rational(1, 1)});
    CHECK(fermat::farey_enumerate(5).size() == 11);
}

TEST_CASE("farey_enumerate matches the double-loop oracle up to 50") {
    for (std::int64_t d = 1; d <= 50; ++d) {
        CHECK(fermat::farey_enumerate(d) == farey_oracle(d));
    }
}

TEST_CASE("farey_successor restarts the sequence from any member") {
    const std::int64_t d = 37;
    auto full = fermat::farey_enumerate(d);
    for (std::size_t i = 0; i + 1 < full.size(); ++i) {
        auto next = fermat::farey_successor(full[i].num().convert_to<std::int64_t>(),
                                            full[i].den().convert_to<std::int64_t>(), d);
        REQUIRE(next.has_value());
        CHECK(*next == full[i + 1]);
    }
    CHECK(!fermat::farey_successor(1, 1, d).has_value());
}

TEST_CASE("FareySequence resumed mid-stream agrees with the full run") {
    const std::int64_t d = 41;
    auto full = fermat::farey_enumerate(d);
    fermat::FareySequence seq(d, 1, 3);  // resume at 1/3
    std::vector<Rational> tail{seq.current()};
    while (seq.advance()) {
        tail.push_back(seq.current());
    }
    auto it = std::find(full.begin(), full.end(), Rational(1, 3));
    REQUIRE(it != full.end());
    CHECK(std::equal(it, full.end(), tail.begin(), tail.end()));
}

TEST_CASE("farey rejects non-members") {
    CHECK_THROWS(fermat::farey_successor(2, 4, 10));   // not reduced
    CHECK_THROWS(fermat::farey_successor(1, 11, 10));  // denominator too large
    CHECK_THROWS(fermat::farey_successor(3, 2, 10));   // outside [0,1]
}
