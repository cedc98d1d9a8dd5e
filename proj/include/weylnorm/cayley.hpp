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

#ifndef WEYLNORM_CAYLEY_HPP
#define WEYLNORM_CAYLEY_HPP

#include <string>
#include <vector>

#include "weylnorm/polynomial.hpp"

namespace weylnorm {

// Finite group by multiplication table, with a rational matrix
// representation on a k-dimensional space U.
struct FiniteGroupTable {
    int order;
    std::vector<std::vector<int>> table;  // table[g][h] = index of g*h
    std::vector<RatMat> rep;              // k x k matrix per element
    int rep_dim;

    /// Checks identity/inverses, associativity spot checks, and that the
    /// representation is a homomorphism. Throws on violation.
    void validate() const;

    int inverse(int g) const;

    static FiniteGroupTable trivial();
    static FiniteGroupTable c2_sign();          // order 2, sign rep on 1-dim U
    static FiniteGroupTable s3_permutation();   // order 6, permutation rep on 3-dim U
};

struct CayleyEmbedding {
    // perms[g][i] = index of g * g_i: the left-translation permutation.
    std::vector<std::vector<int>> perms;
};

CayleyEmbedding cayley_embed(const FiniteGroupTable& G);

/// Shape of the Sym(V^k) side: k copies of the n-dimensional permutation
/// space, variable x_{i,l} = (copy l, coord i).
Shape cayley_shape(const FiniteGroupTable& G);

/// The equivariant epimorphism: substitutes x_{i,l} by the linear form of
/// g_i(u_l) in U-coordinates. Degree preserving algebra homomorphism.
Polynomial eta(const Polynomial& p, const FiniteGroupTable& G);

/// Averaging section f -> (1/n) sum_i f(x_{i,1}, .., x_{i,k}); the output is
/// symmetric in the row index and eta maps it back to f when f is invariant.
Polynomial noether_transfer(const Polynomial& f, const FiniteGroupTable& G);

/// (1/|G|) sum_g f(rep(g) u) on U-coordinates; projects onto G-invariants.
Polynomial group_average(const FiniteGroupTable& G, const Polynomial& f);

bool is_invariant(const FiniteGroupTable& G, const Polynomial& f);

/// Applies the Cayley permutation of g to the row index of V^k variables.
Polynomial cayley_row_action(const CayleyEmbedding& emb, int g, const Polynomial& p,
                             const FiniteGroupTable& G);

}  // namespace weylnorm

#endif
