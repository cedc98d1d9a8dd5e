/*
   Copyright 2026 The weylnorm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylnorm/echelon.hpp"

using namespace weylnorm;

TEST_CASE("duplicate insert keeps rank") {
    Shape s{1, 1};
    GradedSubspaceBasis basis(s, 2);
    Polynomial x2 = Polynomial::variable(s, 0, 0, 2);
    CHECK(basis.insert(x2));
    CHECK_FALSE(basis.insert(x2));
    CHECK(basis.rank() == 1);
}

TEST_CASE("independence detected through leading terms") {
    Shape s{1, 2};
    GradedSubspaceBasis basis(s, 2);
    Polynomial x = Polynomial::variable(s, 0, 0);
    Polynomial y = Polynomial::variable(s, 0, 1);
    CHECK(basis.insert(x * x));
    CHECK(basis.insert(y * y));
    CHECK(basis.insert((x + y) * (x + y)));
    CHECK(basis.rank() == 3);
}

TEST_CASE("insert into empty basis") {
    Shape s{2, 2};
    GradedSubspaceBasis basis(s, 3);
    Polynomial p = Polynomial::parse("x1_1^2*x2_2 - 5*x1_2^3", s);
    CHECK(basis.insert(p));
    CHECK(basis.rank() == 1);
    CHECK(basis.contains(p.scaled(Rational(7, 3))));
}

TEST_CASE("degree mismatch rejected") {
    Shape s{1, 2};
    GradedSubspaceBasis basis(s, 2);
    CHECK_THROWS_AS(basis.insert(Polynomial::variable(s, 0, 0, 3)),
                    std::invalid_argument);
}

TEST_CASE("rank equals number of independent inserts; membership via rank") {
    Shape s{1, 3};
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto monos = monomials_of_degree(s, 3);
    GradedSubspaceBasis basis(s, 3);
    std::vector<Polynomial> inserted;
    int independent = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Polynomial p(s);
        for (const auto& m : monos) p.add_term(m, coeff(rng));
        if (basis.insert(p)) ++independent;
        inserted.push_back(p);
    }
    CHECK(basis.rank() == independent);
    for (const auto& p : inserted) {
        GradedSubspaceBasis probe = basis;
        CHECK(basis.contains(p) == !probe.insert(p));
        CHECK(basis.contains(p));  // everything inserted lies in the final span
    }
    CHECK(basis.rank() <= static_cast<int>(monos.size()));
}
