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

#include "weylnorm/normality.hpp"

using namespace weylnorm;

TEST_CASE("A1 one copy: every level is one-dimensional") {
    NormalityReport report = check_first_degree_generation(CartanType('A', 1), 1, 3);
    CHECK(report.pass);
    for (const auto& level : report.levels) {
        CHECK(level.target_dim == 1);
        CHECK(level.span_dim == 1);
    }
}

TEST_CASE("A1 two copies: quadrics generate the quartics") {
    NormalityReport report = check_first_degree_generation(CartanType('A', 1), 2, 2);
    CHECK(report.pass);
    CHECK(report.levels[0].target_dim == 3);  // x1^2, x1x2, x2^2
    CHECK(report.levels[1].target_dim == 5);
}

TEST_CASE("B2 one copy: R_1 is three-dimensional at degree 8") {
    NormalityReport report = check_first_degree_generation(CartanType('B', 2), 1, 2);
    CHECK(report.pass);
    CHECK(report.levels[0].target_dim == 3);  // f1^4, f1^2 f2, f2^2
}

TEST_CASE("product span dimensions computed against a direct oracle") {
    // A1, m = 2: span of pairwise products of the three invariant quadrics,
    // assembled without the normality machinery.
    WeylGroup W = enumerate(CartanType('A', 1));
    Shape s{2, 1};
    auto B1 = invariant_basis(W, 2, 2).rows();
    GradedSubspaceBasis span(s, 4);
    for (const auto& a : B1)
        for (const auto& b : B1) span.insert(a * b);
    CHECK(span.rank() == 5);
    CHECK(span.rank() == molien_dim(W, 2, 4));
}

TEST_CASE("polarization generation for one copy up to the top basic degree") {
    for (const char* name : {"A2", "B2"}) {
        CartanType t = CartanType::parse(name);
        BasicInvariantSystem sys = basic_invariants(t);
        int dmax = *std::max_element(sys.degrees.begin(), sys.degrees.end());
        PolarizationGenReport report = check_polarization_generation(t, 1, dmax);
        CHECK(report.pass);
    }
}

TEST_CASE("sigma antiinvariance for D3") {
    SigmaReport report = check_sigma_antiinvariance(3, 1);
    CHECK(report.pass);
    CHECK(report.odd_generators == 1);  // f3 = x1 x2 x3
    CHECK(report.extended_order == 48);

    SigmaReport report2 = check_sigma_antiinvariance(3, 2);
    CHECK(report2.pass);
    // Four multidegree components of f3 polarize out; the P_1 word coincides
    // with the (2,1) component and absorbs it in the pruned set.
    CHECK(report2.odd_generators == 4);
}

TEST_CASE("sigma fixes the even-degree basics") {
    BasicInvariantSystem sys = basic_invariants(CartanType('D', 3));
    RatMat sigma = dn_sigma_root(3);
    CHECK(substitute_linear_diagonal(sys.polys[0], sigma) == sys.polys[0]);
    CHECK(substitute_linear_diagonal(sys.polys[2], sigma) == -sys.polys[2]);
}

TEST_CASE("even case bookkeeping requires even rank") {
    CHECK_THROWS_AS(check_dn_even_case(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_sigma_antiinvariance(4, 2), std::invalid_argument);
}

TEST_CASE("monomial factorization in B2") {
    // f1^6 f2^3 has degree 6*2 + 3*4 = 24 = 3|W|; a degree-8 invariant
    // sub-monomial must split off with invariant quotient.
    FactorizationReport report =
        check_monomial_factorization(CartanType('B', 2), {6, 3});
    CHECK(report.pass);
    CHECK(2 * report.extracted[0] + 4 * report.extracted[1] == 8);
}
