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

#include "weylnorm/polarize.hpp"

#include <algorithm>

namespace weylnorm {

PolarizationFamily polarize_all(const Polynomial& f, int m) {
    if (f.shape().copies != 1)
        throw std::invalid_argument("polarization source must live in one copy");
    if (!f.is_homogeneous())
        throw std::invalid_argument("polarization source must be homogeneous");
    int n = f.shape().coords;
    Shape target{m, n};
    std::vector<Polynomial> images;
    for (int k = 0; k < n; ++k) {
        Polynomial sum(target);
        for (int i = 0; i < m; ++i) sum += Polynomial::variable(target, i, k);
        images.push_back(sum);
    }
    Polynomial expanded = f.substitute_vars(images);
    PolarizationFamily family{f, m, {}};
    family.members = expanded.multidegree_components();
    return family;
}

Polynomial apply_Dij(int i, int j, const Polynomial& f) {
    const Shape& shape = f.shape();
    if (i < 1 || j < 1 || i > shape.copies || j > shape.copies)
        throw std::invalid_argument("copy index out of range");
    Polynomial out(shape);
    for (int k = 0; k < shape.coords; ++k)
        out += Polynomial::variable(shape, i - 1, k) * f.derivative(j - 1, k);
    return out;
}

Polynomial apply_Pr(int r, const Polynomial& f) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("P_r requires odd r >= 1");
    const Shape& shape = f.shape();
    if (shape.copies != 2)
        throw std::invalid_argument("P_r acts on two-copy polynomials");
    Polynomial out(shape);
    for (int k = 0; k < shape.coords; ++k)
        out += Polynomial::variable(shape, 1, k, r) * f.derivative(0, k);
    return out;
}

std::vector<Polynomial> polarize_to_copies(const Polynomial& g, int m) {
    int m0 = g.shape().copies;
    int n = g.shape().coords;
    // Spread each original copy over all m target copies with independent
    // bookkeeping: expand in m0*m scratch copies, split by multidegree, then
    // collapse scratch copy (j, i) onto target copy i.
    Shape big{m0 * m, n};
    std::vector<Polynomial> images;
    for (int j = 0; j < m0; ++j)
        for (int k = 0; k < n; ++k) {
            Polynomial sum(big);
            for (int i = 0; i < m; ++i)
                sum += Polynomial::variable(big, j * m + i, k);
            images.push_back(sum);
        }
    Polynomial expanded = g.substitute_vars(images);
    Shape target{m, n};
    std::vector<Polynomial> collapse;
    for (int j = 0; j < m0; ++j)
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < n; ++k)
                collapse.push_back(Polynomial::variable(target, i, k));
    std::vector<Polynomial> out;
    for (const auto& [alpha, component] : expanded.multidegree_components())
        out.push_back(component.substitute_vars(collapse));
    return out;
}

std::vector<std::vector<int>> admissible_p_words(int n) {
    std::vector<std::vector<int>> words = {{}};
    std::vector<int> word;
    auto rec = [&](auto&& self, int sum) -> void {
        int l = static_cast<int>(word.size());
        for (int r = 1; sum + r <= n - (l + 1); r += 2) {
            word.push_back(r);
            words.push_back(word);
            self(self, sum + r);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return words;
}

GeneratorSet generators_Vm(const CartanType& t, int m) {
    if (t.family == 'F')
        throw std::invalid_argument(
            "no generator description is available for F4 beyond one copy");
    if (m < 1) throw std::invalid_argument("m must be positive");
    BasicInvariantSystem basics = basic_invariants(t);
    int n = t.rank;
    Shape target{m, n};

    struct RawGen {
        Polynomial poly;
        GeneratorSource source;
    };
    std::vector<RawGen> raw;

    auto add_polarizations = [&](const Polynomial& f, GeneratorSource src) {
        for (const auto& [alpha, member] : polarize_all(f, m).members)
            if (!member.is_zero()) raw.push_back({member, src});
    };

    if (t.family != 'D' || m == 1) {
        for (const auto& f : basics.polys)
            add_polarizations(f, GeneratorSource::BasicPolarization);
    } else {
        // The P-word generators live on two copies; build them there and
        // re-polarize when more copies are requested. Words go in first so
        // that a word coinciding with a polarization (P_1 = D_21) keeps its
        // word label through pruning.
        Shape two{2, n};
        std::vector<Polynomial> embed;
        for (int k = 0; k < n; ++k) embed.push_back(Polynomial::variable(two, 0, k));
        Polynomial fn = basics.polys[n - 1].substitute_vars(embed);
        std::vector<Polynomial> words;
        for (const auto& word : admissible_p_words(n)) {
            if (word.empty()) continue;
            Polynomial w = fn;
            for (int r : word) w = apply_Pr(r, w);
            if (!w.is_zero()) words.push_back(w);
        }
        if (m == 2) {
            for (const auto& w : words) raw.push_back({w, GeneratorSource::PWord});
        } else {
            for (const auto& w : words)
                for (const auto& p : polarize_to_copies(w, m))
                    if (!p.is_zero()) raw.push_back({p, GeneratorSource::PWord});
        }
        for (const auto& f : basics.polys)
            add_polarizations(f, GeneratorSource::BasicPolarization);
    }

    // Prune duplicates and linear dependencies within each degree.
    std::map<int, GradedSubspaceBasis> per_degree;
    GeneratorSet out{t, m, {}};
    for (const auto& gen : raw) {
        int d = gen.poly.degree();
        auto it = per_degree.find(d);
        if (it == per_degree.end())
            it = per_degree.emplace(d, GradedSubspaceBasis(target, d)).first;
        if (it->second.insert(gen.poly))
            out.generators.push_back({gen.poly, d, gen.source});
    }
    return out;
}

}  // namespace weylnorm
