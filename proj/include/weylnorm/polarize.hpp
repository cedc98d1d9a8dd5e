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

#ifndef WEYLNORM_POLARIZE_HPP
#define WEYLNORM_POLARIZE_HPP

#include <map>
#include <vector>

#include "weylnorm/invariants.hpp"

namespace weylnorm {

// The multihomogeneous components f_alpha of f(t_1 v_1 + ... + t_m v_m),
// keyed by the multi-index alpha with |alpha| = deg f.
struct PolarizationFamily {
    Polynomial source;  // shape (1, n)
    int copies;
    std::map<std::vector<int>, Polynomial> members;  // shape (m, n)
};

/// Full polarization of a homogeneous one-copy polynomial to m copies,
/// computed by substituting x_k -> sum_i x_{i,k} and splitting the result
/// by multidegree.
PolarizationFamily polarize_all(const Polynomial& f, int m);

/// The derivation sum_k x_{ik} d/dx_{jk}; copies are 1-based.
Polynomial apply_Dij(int i, int j, const Polynomial& f);

/// The two-copy derivation sum_k x_{2k}^r d/dx_{1k} for odd r; raises the
/// degree by r - 1.
Polynomial apply_Pr(int r, const Polynomial& f);

/// All multihomogeneous components of g spread from its own copies onto m
/// copies (full polarization of a multi-copy polynomial).
std::vector<Polynomial> polarize_to_copies(const Polynomial& g, int m);

enum class GeneratorSource { BasicPolarization, PWord };

struct Generator {
    Polynomial poly;
    int degree;
    GeneratorSource source;
};

struct GeneratorSet {
    CartanType type;
    int m;
    std::vector<Generator> generators;
};

/// Generating set of the m-copy invariant ring: polarizations of the basic
/// invariants for A/B/C/G2; for D_n additionally the polarized words
/// P_{r_1}..P_{r_l}(f_n) with r_i >= 1 odd and sum r_i <= n - l. F4 is
/// rejected (no generator description is available). Zero members are
/// dropped and duplicates pruned per degree.
GeneratorSet generators_Vm(const CartanType& t, int m);

/// The admissible P-word exponent sequences (r_1..r_l) for rank n,
/// including the empty word.
std::vector<std::vector<int>> admissible_p_words(int n);

}  // namespace weylnorm

#endif
