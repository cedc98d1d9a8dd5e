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

#ifndef WEYLNORM_SEMIGROUP_HPP
#define WEYLNORM_SEMIGROUP_HPP

#include <stdexcept>
#include <vector>

namespace weylnorm {

// The semigroup M_d of exponent vectors with sum m_i d_i = 0 mod N, and its
// slice S_d where the weighted sum equals N = prod d_i.
struct DegreeVector {
    std::vector<long long> d;
    long long N;

    explicit DegreeVector(std::vector<long long> degrees);
    int size() const { return static_cast<int>(d.size()); }
};

struct NotMemberError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised only if a member of M_d admits no decomposition into S_d parts,
// which would contradict the generation lemma.
struct LemmaViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Decomposition {
    std::vector<long long> target;
    std::vector<std::vector<long long>> parts;  // each in S_d, lex-sorted
};

/// All nonnegative solutions of sum m_i d_i = N, decreasing lex order.
std::vector<std::vector<long long>> enumerate_S(const DegreeVector& d);

/// Membership in M_d; rejects negative entries.
bool is_member(const std::vector<long long>& m, const DegreeVector& d);

/// Depth-first search over S_d elements in the fixed enumeration order,
/// subtracting componentwise with backtracking. Each chosen part lowers the
/// weighted sum by exactly N, so the search terminates.
Decomposition decompose(const std::vector<long long>& m, const DegreeVector& d);

/// Slice extraction used by the monomial factorization argument: some part
/// of S_d bounded componentwise by m, for any member with weighted sum >= N.
std::vector<long long> extract_part(const std::vector<long long>& m,
                                    const DegreeVector& d);

struct GenerationReport {
    DegreeVector d;
    long long bound;
    long long members_checked;
    bool pass;
};

/// Decomposes every member of M_d with all entries <= bound.
GenerationReport verify_generation(const DegreeVector& d, long long bound);

}  // namespace weylnorm

#endif
