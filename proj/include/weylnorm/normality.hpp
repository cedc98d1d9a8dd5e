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

#ifndef WEYLNORM_NORMALITY_HPP
#define WEYLNORM_NORMALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylnorm/polarize.hpp"
#include "weylnorm/semigroup.hpp"

namespace weylnorm {

struct LevelRecord {
    int q;
    long long target_dim;  // Molien dimension at degree q|W|
    long long span_dim;    // dimension of the span of q-fold R_1 products
    bool pass;
};

struct NormalityReport {
    CartanType type;
    int m;
    int q_max;
    std::vector<LevelRecord> levels;
    bool pass;
    long long elapsed_ms;
    // First invariant found outside the product span, on a failed level.
    std::optional<Polynomial> witness;
};

/// Degree-one generation of R = sum_q (Sym^{q|W|} (V^m)*)^W: builds the
/// invariant slice at degree |W|, closes it under products level by level,
/// and compares each level's rank to the Molien dimension.
NormalityReport check_first_degree_generation(const CartanType& t, int m, int q_max,
                                              int threads = 1);

struct DegreeRecord {
    int degree;
    long long target_dim;
    long long span_dim;
    bool pass;
};

struct PolarizationGenReport {
    CartanType type;
    int m;
    int d_max;
    std::vector<DegreeRecord> degrees;
    bool pass;
};

/// Checks that the subalgebra generated by generators_Vm fills every
/// invariant graded slice up to d_max (Weyl / Wallach generation).
PolarizationGenReport check_polarization_generation(const CartanType& t, int m,
                                                    int d_max);

struct SigmaReport {
    int rank;
    int m;
    int odd_generators;
    int products_checked;
    bool sigma_anti_ok;       // sigma f = -f for every odd-degree generator
    bool symmetrization_ok;   // (f + sigma f)/2 = 0
    bool products_ok;         // products of two odd generators are B_n-invariant
    long long extended_order; // |<W(D_n), sigma>|, expected 2 |W(D_n)|
    bool pass;
};

/// The odd-rank D_n identity sigma(f) = -f on odd-degree generators, plus
/// B_n-invariance of their pairwise products.
SigmaReport check_sigma_antiinvariance(int n, int m);

struct EvenCaseReport {
    int rank;
    int m;
    int generators;
    bool pass;  // every generator has even degree, and P-words stay <= 2n-2
};

/// The even-rank D_n degree bookkeeping: all generator degrees even, with
/// P-word generators of degree at most 2n-2.
EvenCaseReport check_dn_even_case(int n, int m);

struct FactorizationReport {
    std::vector<long long> exponents;      // m_i of the sampled monomial
    std::vector<long long> extracted;      // the S_d part found inside it
    bool divides;                          // g | f as polynomials
    bool quotient_invariant;
    bool pass;
};

/// Re-executes the monomial factorization step of the generation argument
/// on one explicit invariant monomial prod f_i^{m_i} of degree q|W|.
FactorizationReport check_monomial_factorization(const CartanType& t,
                                                 const std::vector<long long>& exps);

}  // namespace weylnorm

#endif
