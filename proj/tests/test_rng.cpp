// Copyright 2026 The cdfge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <set>

#include "catch_amalgamated.hpp"

#include "cdfge/rng.hpp"

using namespace cdfge;

TEST_CASE("Counter generator is a pure function of its key", "[rng]") {
    CounterRng a(42, 7);
    CounterRng b(42, 7);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    CounterRng skip(42, 7, 50);
    CounterRng walk(42, 7);
    for (int i = 0; i < 50; ++i) {
        walk.next_u64();
    }
    CHECK(skip.next_u64() == walk.next_u64());
    CHECK(CounterRng(42, 8).next_u64() != CounterRng(42, 7).next_u64());
    CHECK(CounterRng(43, 7).next_u64() != CounterRng(42, 7).next_u64());
}

TEST_CASE("Uniform and normal moments", "[rng]") {
    CounterRng r(1, 1);
    const int n = 200000;
    double su = 0.0;
    double sn = 0.0;
    double sn2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        su += u;
    }
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        sn += z;
        sn2 += z * z;
    }
    CHECK(std::abs(su / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(sn / n) < 4.0 / std::sqrt(n));
    CHECK(std::abs(sn2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("Derived seeds are distinct", "[rng]") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t root : {0ULL, 1ULL, 2ULL}) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            seen.insert(derive_seed(root, i));
        }
    }
    CHECK(seen.size() == 300);
}
