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

#include "weylnorm/polarize.hpp"

using namespace weylnorm;

TEST_CASE("polarizing x^2 to two copies") {
    Shape s{1, 1};
    Polynomial f = Polynomial::variable(s, 0, 0, 2);
    PolarizationFamily fam = polarize_all(f, 2);
    Shape t{2, 1};
    CHECK(fam.members.size() == 3);
    CHECK(fam.members.at({2, 0}) == Polynomial::variable(t, 0, 0, 2));
    CHECK(fam.members.at({1, 1}) ==
          (Polynomial::variable(t, 0, 0) * Polynomial::variable(t, 1, 0)).scaled(2));
    CHECK(fam.members.at({0, 2}) == Polynomial::variable(t, 1, 0, 2));
}

TEST_CASE("bilinear component of x1*x2") {
    Shape s{1, 2};
    Polynomial f = Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 0, 1);
    PolarizationFamily fam = polarize_all(f, 2);
    Shape t{2, 2};
    Polynomial expected =
        Polynomial::variable(t, 0, 0) * Polynomial::variable(t, 1, 1) +
        Polynomial::variable(t, 0, 1) * Polynomial::variable(t, 1, 0);
    CHECK(fam.members.at({1, 1}) == expected);
}

TEST_CASE("one-copy polarization is the identity") {
    Shape s{1, 2};
    Polynomial f = Polynomial::parse("x1_1^3 - 2*x1_1*x1_2^2", s);
    PolarizationFamily fam = polarize_all(f, 1);
    CHECK(fam.members.size() == 1);
    CHECK(fam.members.at({3}) == f);
}

TEST_CASE("non-homogeneous input rejected") {
    Shape s{1, 1};
    Polynomial f = Polynomial::parse("x1_1^2 + x1_1", s);
    CHECK_THROWS_AS(polarize_all(f, 2), std::invalid_argument);
}

TEST_CASE("multidegree of each member matches its index; copy-sum identity") {
    Shape s{1, 2};
    Polynomial f = Polynomial::parse("x1_1^2*x1_2 + x1_2^3", s);
    int m = 3;
    PolarizationFamily fam = polarize_all(f, m);
    Shape t{m, 2};
    // Setting all copies equal turns the sum of members into f(m*y).
    std::vector<Polynomial> glue;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < 2; ++k) glue.push_back(Polynomial::variable(s, 0, k));
    Polynomial total(s);
    for (const auto& [alpha, member] : fam.members) {
        CHECK(member.multidegree_components().size() == 1);
        CHECK(member.multidegree_components().begin()->first == alpha);
        total += member.substitute_vars(glue);
    }
    CHECK(total == f.scaled(27));  // m^deg = 3^3
}

TEST_CASE("D_21 on a single variable square") {
    Shape s{2, 1};
    Polynomial f = Polynomial::variable(s, 0, 0, 2);
    CHECK(apply_Dij(2, 1, f) ==
          (Polynomial::variable(s, 1, 0) * Polynomial::variable(s, 0, 0)).scaled(2));
    CHECK(apply_Dij(2, 1, Polynomial::constant(s, 5)).is_zero());
}

TEST_CASE("P_1 is the first polarization of the coordinate product") {
    Shape s{2, 3};
    Polynomial f = Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 0, 1) *
                   Polynomial::variable(s, 0, 2);
    Polynomial p1 = apply_Pr(1, f);
    Polynomial expected =
        Polynomial::variable(s, 1, 0) * Polynomial::variable(s, 0, 1) *
            Polynomial::variable(s, 0, 2) +
        Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 1, 1) *
            Polynomial::variable(s, 0, 2) +
        Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 0, 1) *
            Polynomial::variable(s, 1, 2);
    CHECK(p1 == expected);
    CHECK(p1.degree() == 3);  // degree n + r - 1 with n = 3, r = 1
}

TEST_CASE("P_3 on a two-coordinate product") {
    Shape s{2, 2};
    Polynomial f = Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 0, 1);
    Polynomial expected =
        Polynomial::variable(s, 1, 0, 3) * Polynomial::variable(s, 0, 1) +
        Polynomial::variable(s, 0, 0) * Polynomial::variable(s, 1, 1, 3);
    CHECK(apply_Pr(3, f) == expected);
    CHECK_THROWS_AS(apply_Pr(2, f), std::invalid_argument);
}

TEST_CASE("polarizations of invariants stay invariant") {
    for (const char* name : {"A2", "B2", "D3"}) {
        CartanType t = CartanType::parse(name);
        WeylGroup W = enumerate(t);
        BasicInvariantSystem sys = basic_invariants(t);
        for (const auto& f : sys.polys)
            for (const auto& [alpha, member] : polarize_all(f, 2).members)
                for (size_t g = 0; g < W.elements.size(); ++g)
                    CHECK(act(W, static_cast<int>(g), member) == member);
    }
}

TEST_CASE("admissible P-words") {
    CHECK(admissible_p_words(3) == std::vector<std::vector<int>>{{}, {1}});
    auto w4 = admissible_p_words(4);
    CHECK(w4 == std::vector<std::vector<int>>{{}, {1}, {1, 1}, {3}});
}

TEST_CASE("A2 generators at one copy are the basic invariants") {
    GeneratorSet gens = generators_Vm(CartanType('A', 2), 1);
    CHECK(gens.generators.size() == 2);
    std::vector<int> degs;
    for (const auto& g : gens.generators) degs.push_back(g.degree);
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 3});
}

TEST_CASE("B2 two-copy generator counts before pruning merge to 8") {
    // d+1 polarizations per basic invariant of degree d when m = 2.
    BasicInvariantSystem sys = basic_invariants(CartanType('B', 2));
    int total = 0;
    for (const auto& f : sys.polys)
        total += static_cast<int>(polarize_all(f, 2).members.size());
    CHECK(total == 3 + 5);
}

TEST_CASE("D3 two-copy generators include exactly the P_1 word") {
    GeneratorSet gens = generators_Vm(CartanType('D', 3), 2);
    int pwords = 0;
    for (const auto& g : gens.generators)
        if (g.source == GeneratorSource::PWord) ++pwords;
    CHECK(pwords == 1);
    // The P-word has degree n + r - 1 = 3.
    for (const auto& g : gens.generators)
        if (g.source == GeneratorSource::PWord) CHECK(g.degree == 3);
}

TEST_CASE("F4 generator sets are rejected") {
    CHECK_THROWS_AS(generators_Vm(CartanType('F', 4), 2), std::invalid_argument);
}

TEST_CASE("operators commute with the diagonal action") {
    // In the epsilon realizations every element is a (signed) permutation,
    // so both D_ij and P_r commute with the diagonal substitution.
    std::mt19937 rng(19);
    for (const char* name : {"A2", "B2", "B3", "D3"}) {
        CartanType t = CartanType::parse(name);
        auto group = epsilon_group(t);
        Shape s{2, epsilon_dim(t)};
        std::uniform_int_distribution<int> pick(0, static_cast<int>(group.size()) - 1);
        std::uniform_int_distribution<int> coeff(-3, 3), var(0, s.vars() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial f(s);
            for (int terms = 0; terms < 4; ++terms) {
                Monomial m(s.vars());
                for (int d = 0; d < 3; ++d)
                    m = m.times(Monomial::variable(s.vars(), var(rng)));
                f.add_term(m, coeff(rng));
            }
            const RatMat& g = group[pick(rng)];
            CHECK(substitute_linear_diagonal(apply_Dij(2, 1, f), g) ==
                  apply_Dij(2, 1, substitute_linear_diagonal(f, g)));
            CHECK(substitute_linear_diagonal(apply_Pr(3, f), g) ==
                  apply_Pr(3, substitute_linear_diagonal(f, g)));
        }
    }
}

TEST_CASE("repolarization spreads a two-copy word to three copies") {
    Shape two{2, 2};
    Polynomial w = Polynomial::variable(two, 0, 0) * Polynomial::variable(two, 1, 1);
    auto spread = polarize_to_copies(w, 3);
    CHECK(!spread.empty());
    Shape three{3, 2};
    for (const auto& p : spread) {
        CHECK(p.shape() == three);
        if (!p.is_zero()) CHECK(p.multidegree_components().size() == 1);
    }
}
