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

#include <map>
#include <set>

#include "weylnorm/weyl.hpp"

using namespace weylnorm;

TEST_CASE("type parsing and rank constraints") {
    CHECK(CartanType::parse("B2") == CartanType('B', 2));
    CHECK_THROWS_AS(CartanType::parse("F5"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("G3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("Z2"), std::invalid_argument);
}

TEST_CASE("simple reflections are involutions") {
    for (const char* name : {"A1", "A3", "B2", "B3", "C3", "D3", "D4", "G2", "F4"}) {
        CartanType t = CartanType::parse(name);
        auto gens = simple_reflections(t);
        CHECK(gens.size() == static_cast<size_t>(t.rank));
        for (const auto& s : gens) CHECK((s * s).is_identity());
    }
}

TEST_CASE("A1 reflection is -1") {
    auto gens = simple_reflections(CartanType('A', 1));
    CHECK(gens[0].at(0, 0) == -1);
}

TEST_CASE("known group orders") {
    std::map<std::string, long long> expected = {
        {"A1", 2},  {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},
        {"B3", 48}, {"C2", 8},   {"C3", 48},  {"D3", 24},  {"D4", 192},
        {"G2", 12}, {"F4", 1152}};
    for (const auto& [name, order] : expected) {
        WeylGroup W = enumerate(CartanType::parse(name));
        CHECK_MESSAGE(W.order() == order, name);
    }
}

TEST_CASE("closure under product and inverse; faithfulness") {
    WeylGroup W = enumerate(CartanType('B', 2));
    for (size_t i = 0; i < W.elements.size(); ++i) {
        CHECK(W.index_of(W.elements[i] * W.elements[(i * 3 + 1) % 8]) >= 0);
        const IntMat& inv = W.elements[W.inverse_index[i]];
        CHECK((W.elements[i] * inv).is_identity());
        if (i > 0) CHECK_FALSE(W.elements[i].is_identity());
    }
}

TEST_CASE("budget exceeded signals configuration error") {
    CHECK_THROWS_AS(enumerate(CartanType('F', 4), 100), std::runtime_error);
}

TEST_CASE("diagonal action on A1") {
    WeylGroup W = enumerate(CartanType('A', 1));
    int neg = 1;  // the nonidentity element
    Shape s1{1, 1};
    Polynomial x = Polynomial::variable(s1, 0, 0);
    CHECK(act(W, neg, x) == -x);
    CHECK(act(W, neg, x * x) == x * x);
    Shape s2{2, 1};
    Polynomial cross =
        Polynomial::variable(s2, 0, 0) * Polynomial::variable(s2, 1, 0);
    CHECK(act(W, neg, cross) == cross);
}

TEST_CASE("epsilon realization recovers the Cartan matrix") {
    // A1: alpha -> (1,-1); B2: alpha1 -> (1,-1), alpha2 -> (0,1).
    RatMat ea = to_epsilon_coordinates(CartanType('A', 1));
    CHECK(ea.at(0, 0) == 1);
    CHECK(ea.at(1, 0) == -1);
    RatMat eb = to_epsilon_coordinates(CartanType('B', 2));
    CHECK(eb.at(0, 0) == 1);
    CHECK(eb.at(1, 0) == -1);
    CHECK(eb.at(0, 1) == 0);
    CHECK(eb.at(1, 1) == 1);
    // Cartan entries from pairwise inner products stay consistent.
    auto A = cartan_matrix(CartanType('G', 2));
    CHECK(A[0][0] == 2);
    CHECK(A[1][1] == 2);
    CHECK(A[0][1] * A[1][0] == 3);
}

TEST_CASE("B and D epsilon images are signed permutations") {
    for (const char* name : {"B2", "B3", "D3"}) {
        CartanType t = CartanType::parse(name);
        WeylGroup W = enumerate(t);
        RatMat E = to_epsilon_coordinates(t);
        RatMat Einv = E.inverse();  // square for B/D
        int even_violations = 0;
        for (const auto& g : W.elements) {
            RatMat img = E * g.to_rational() * Einv;
            CHECK(is_signed_permutation(img));
            if (t.family == 'D' && count_sign_flips(img) % 2 != 0) ++even_violations;
        }
        if (t.family == 'D') CHECK(even_violations == 0);
    }
}

TEST_CASE("epsilon group enumeration matches root-basis order") {
    for (const char* name : {"A2", "B2", "D3", "G2"}) {
        CartanType t = CartanType::parse(name);
        CHECK(static_cast<long long>(epsilon_group(t).size()) ==
              enumerate(t).order());
    }
}

TEST_CASE("adjoining sigma to D3 yields the B3 group") {
    auto extended = dn_extended_group(3);
    CHECK(extended.size() == 48);
    CHECK(enumerate(CartanType('B', 3)).order() == 48);
    // sigma itself is an involution outside W(D3).
    RatMat sigma = dn_sigma_root(3);
    CHECK(sigma * sigma == RatMat::identity(3));
    WeylGroup D3 = enumerate(CartanType('D', 3));
    bool inside = false;
    for (const auto& g : D3.elements)
        if (g.to_rational() == sigma) inside = true;
    CHECK_FALSE(inside);
}
