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

#ifndef WEYLNORM_INVARIANTS_HPP
#define WEYLNORM_INVARIANTS_HPP

#include <map>
#include <vector>

#include "weylnorm/echelon.hpp"
#include "weylnorm/weyl.hpp"

namespace weylnorm {

// Algebraically independent homogeneous generators of the one-copy invariant
// ring, in root coordinates, with prod(degrees) = |W|.
struct BasicInvariantSystem {
    CartanType type;
    std::vector<Polynomial> polys;  // shape (1, rank)
    std::vector<int> degrees;

    long long degree_product() const;
};

/// A/B/C/D systems are classical formulas pulled back from epsilon
/// coordinates; G2 and F4 are found by Reynolds search guided by Molien
/// dimensions. Independence is certified by a nonzero Jacobian.
BasicInvariantSystem basic_invariants(const CartanType& t);

/// (1/|W|) sum_g g.f for the diagonal action on m copies.
Polynomial reynolds(const WeylGroup& W, const Polynomial& f);

/// Average of f over an explicit matrix list (e.g. an epsilon realization).
Polynomial reynolds_matrices(const std::vector<RatMat>& group, const Polynomial& f);

struct MolienTable {
    CartanType type;
    int m;
    std::vector<long long> dims;  // dims[d] for d = 0..dmax

    long long dim(int d) const { return dims.at(d); }
    int dmax() const { return static_cast<int>(dims.size()) - 1; }
};

/// Coefficients of (1/|W|) sum_g det(1 - t g)^-m up to t^dmax, by exact
/// power-series inversion of the integer reversed characteristic polynomials.
MolienTable molien_table(const WeylGroup& W, int m, int dmax);
long long molien_dim(const WeylGroup& W, int m, int d);

/// Echelon basis of Reynolds images of all degree-d monomials on m copies.
/// If stop_at_rank >= 0 the scan stops once that rank is reached (sound:
/// invariant images can never exceed the Molien dimension). `threads`
/// parallelizes the Reynolds averaging; insertion order stays fixed.
GradedSubspaceBasis invariant_basis(const WeylGroup& W, int m, int d,
                                    int threads = 1, long long stop_at_rank = -1);

/// Pullback of a polynomial in epsilon coordinates (shape (1, epsilon_dim))
/// to root coordinates (shape (1, rank)) through to_epsilon_coordinates.
Polynomial pull_back_from_epsilon(const CartanType& t, const Polynomial& p_eps);

/// Nonzero test for the Jacobian determinant of a basic system, by exact
/// evaluation at deterministic rational points.
bool jacobian_nonzero(const BasicInvariantSystem& sys);

}  // namespace weylnorm

#endif
