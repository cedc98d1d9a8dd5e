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

#ifndef WEYLNORM_WEYL_HPP
#define WEYLNORM_WEYL_HPP

#include <string>
#include <vector>

#include "weylnorm/polynomial.hpp"

namespace weylnorm {

struct CartanType {
    char family;  // 'A','B','C','D','F','G'
    int rank;

    CartanType(char f, int r);  // validates rank constraints
    static CartanType parse(const std::string& s);  // "A1".."A4","B2",...,"F4","G2"
    std::string to_string() const { return family + std::to_string(rank); }
    bool operator==(const CartanType&) const = default;
};

// Integer matrix in simple-root coordinates; every Weyl element is one.
struct IntMat {
    int n;
    std::vector<long long> a;  // row-major

    explicit IntMat(int dim) : n(dim), a(dim * dim, 0) {}
    static IntMat identity(int dim);
    long long& at(int r, int c) { return a[r * n + c]; }
    long long at(int r, int c) const { return a[r * n + c]; }
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat&) const = default;
    bool operator<(const IntMat& o) const { return a < o.a; }
    bool is_identity() const { return *this == identity(n); }
    RatMat to_rational() const;
};

struct WeylGroup {
    CartanType type;
    std::vector<IntMat> elements;   // elements[0] is the identity
    std::vector<int> inverse_index; // inverse_index[i] = index of elements[i]^-1

    int rank() const { return type.rank; }
    long long order() const { return static_cast<long long>(elements.size()); }
    int index_of(const IntMat& m) const;  // -1 if absent
};

/// Simple roots of the standard classical realizations, as exact rational
/// vectors in epsilon coordinates (dimension epsilon_dim(t)).
std::vector<std::vector<Rational>> simple_roots_epsilon(const CartanType& t);
int epsilon_dim(const CartanType& t);

/// Cartan matrix A[i][j] = 2(a_i,a_j)/(a_j,a_j), recomputed from the root
/// realizations; entries are integers for every in-scope type.
std::vector<std::vector<long long>> cartan_matrix(const CartanType& t);

/// Involutive generator matrices in the root basis:
/// s_i(a_j) = a_j - A[j][i] a_i.
std::vector<IntMat> simple_reflections(const CartanType& t);

/// BFS closure of the simple reflections. Throws if the element count
/// exceeds `budget` (a configuration error; all in-scope orders are <= 1152).
WeylGroup enumerate(const CartanType& t, int budget = 4096);

/// Diagonal action (g.f)(v_1..v_m) = f(g^-1 v_1, .., g^-1 v_m) on a
/// polynomial whose per-copy coordinate count equals the rank.
Polynomial act(const WeylGroup& W, int element, const Polynomial& f);
Polynomial act_matrix_inverse(const RatMat& g, const Polynomial& f);

/// Columns are the simple roots in epsilon coordinates: maps root-basis
/// coordinates of a vector to its epsilon coordinates.
RatMat to_epsilon_coordinates(const CartanType& t);

/// The group realized in epsilon coordinates, enumerated by closing the
/// exact reflection matrices s_a(x) = x - 2(x,a)/(a,a) a.
std::vector<RatMat> epsilon_group(const CartanType& t, int budget = 4096);

bool is_signed_permutation(const RatMat& m);
int count_sign_flips(const RatMat& signed_perm);

/// The reflection x_n -> -x_n of the D_n realization, expressed in the
/// D_n simple-root basis (rational entries).
RatMat dn_sigma_root(int n);

/// Closure of the D_n root reflections together with sigma; this is the
/// B_n Weyl group written in D_n root coordinates, order 2^n n!.
std::vector<RatMat> dn_extended_group(int n, int budget = 4096);

}  // namespace weylnorm

#endif
