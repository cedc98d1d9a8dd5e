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

#include "weylnorm/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace weylnorm {

DegreeVector::DegreeVector(std::vector<long long> degrees) : d(std::move(degrees)) {
    if (d.empty()) throw std::invalid_argument("degree vector must be nonempty");
    N = 1;
    for (long long di : d) {
        if (di < 1) throw std::invalid_argument("degrees must be positive");
        N *= di;
    }
}

namespace {

long long weighted_sum(const std::vector<long long>& m, const DegreeVector& d) {
    long long s = 0;
    for (int i = 0; i < d.size(); ++i) s += m[i] * d.d[i];
    return s;
}

}  // namespace

std::vector<std::vector<long long>> enumerate_S(const DegreeVector& d) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(d.size(), 0);
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == d.size() - 1) {
            if (remaining % d.d[i] == 0) {
                cur[i] = remaining / d.d[i];
                out.push_back(cur);
            }
            return;
        }
        for (long long e = remaining / d.d[i]; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, remaining - e * d.d[i]);
        }
    };
    rec(rec, 0, d.N);
    return out;
}

bool is_member(const std::vector<long long>& m, const DegreeVector& d) {
    if (static_cast<int>(m.size()) != d.size())
        throw std::invalid_argument("dimension mismatch");
    for (long long v : m)
        if (v < 0) throw std::invalid_argument("negative entries rejected");
    return weighted_sum(m, d) % d.N == 0;
}

namespace {

bool decompose_rec(std::vector<long long>& residual, const DegreeVector& d,
                   const std::vector<std::vector<long long>>& S,
                   std::vector<std::vector<long long>>& parts) {
    if (std::all_of(residual.begin(), residual.end(),
                    [](long long v) { return v == 0; }))
        return true;
    for (const auto& s : S) {
        bool fits = true;
        for (int i = 0; i < d.size(); ++i)
            if (s[i] > residual[i]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for (int i = 0; i < d.size(); ++i) residual[i] -= s[i];
        parts.push_back(s);
        if (decompose_rec(residual, d, S, parts)) return true;
        parts.pop_back();
        for (int i = 0; i < d.size(); ++i) residual[i] += s[i];
    }
    return false;
}

}  // namespace

Decomposition decompose(const std::vector<long long>& m, const DegreeVector& d) {
    if (!is_member(m, d)) throw NotMemberError("vector is not in M_d");
    auto S = enumerate_S(d);
    std::vector<long long> residual = m;
    Decomposition result{m, {}};
    if (!decompose_rec(residual, d, S, result.parts))
        throw LemmaViolationError("member of M_d admits no S_d decomposition");
    std::sort(result.parts.begin(), result.parts.end());
    return result;
}

std::vector<long long> extract_part(const std::vector<long long>& m,
                                    const DegreeVector& d) {
    if (!is_member(m, d)) throw NotMemberError("vector is not in M_d");
    if (weighted_sum(m, d) < d.N)
        throw std::invalid_argument("weighted sum below N; nothing to extract");
    for (const auto& s : enumerate_S(d)) {
        bool fits = true;
        for (int i = 0; i < d.size(); ++i)
            if (s[i] > m[i]) {
                fits = false;
                break;
            }
        if (fits) return s;
    }
    throw LemmaViolationError("no S_d part bounded by the given member");
}

GenerationReport verify_generation(const DegreeVector& d, long long bound) {
    if (bound < d.N) throw std::invalid_argument("bound must be at least N");
    long long checked = 0;
    std::vector<long long> m(d.size(), 0);
    auto S = enumerate_S(d);
    auto sweep = [&](auto&& self, int i) -> void {
        if (i == d.size()) {
            if (weighted_sum(m, d) % d.N != 0) return;
            ++checked;
            std::vector<long long> residual = m;
            std::vector<std::vector<long long>> parts;
            if (!decompose_rec(residual, d, S, parts))
                throw LemmaViolationError("member of M_d admits no S_d decomposition");
            return;
        }
        for (long long v = 0; v <= bound; ++v) {
            m[i] = v;
            self(self, i + 1);
        }
    };
    sweep(sweep, 0);
    return GenerationReport{d, bound, checked, true};
}

}  // namespace weylnorm
