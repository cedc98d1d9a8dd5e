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

#include "weylnorm/weyl.hpp"

#include <deque>
#include <map>
#include <set>

namespace weylnorm {

CartanType::CartanType(char f, int r) : family(f), rank(r) {
    bool ok = false;
    switch (f) {
        case 'A': ok = r >= 1; break;
        case 'B': ok = r >= 2; break;
        case 'C': ok = r >= 2; break;
        case 'D': ok = r >= 2; break;
        case 'F': ok = r == 4; break;
        case 'G': ok = r == 2; break;
        default: break;
    }
    if (!ok)
        throw std::invalid_argument("invalid Cartan type " + std::string(1, f) +
                                    std::to_string(r));
}

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
    char f = s[0];
    int r;
    try {
        r = std::stoi(s.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad type string: " + s);
    }
    return CartanType(f, r);
}

IntMat IntMat::identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat IntMat::to_rational() const {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = at(i, j);
    return m;
}

int WeylGroup::index_of(const IntMat& m) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return static_cast<int>(i);
    return -1;
}

int epsilon_dim(const CartanType& t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'G': return 3;
        default: return t.rank;
    }
}

std::vector<std::vector<Rational>> simple_roots_epsilon(const CartanType& t) {
    int n = t.rank;
    int dim = epsilon_dim(t);
    std::vector<std::vector<Rational>> roots;
    auto e = [&](int k) {
        std::vector<Rational> v(dim, Rational(0));
        v[k] = 1;
        return v;
    };
    auto diff = [&](int i, int j) {
        auto v = e(i);
        v[j] = -1;
        return v;
    };
    switch (t.family) {
        case 'A':
            for (int i = 0; i < n; ++i) roots.push_back(diff(i, i + 1));
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(i, i + 1));
            roots.push_back(e(n - 1));
            break;
        case 'C': {
            for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(i, i + 1));
            auto last = e(n - 1);
            last[n - 1] = 2;
            roots.push_back(last);
            break;
        }
        case 'D': {
            for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(i, i + 1));
            auto last = e(n - 2);
            last[n - 1] = 1;
            roots.push_back(last);
            break;
        }
        case 'G': {
            roots.push_back(diff(0, 1));
            std::vector<Rational> beta = {-2, 1, 1};
            roots.push_back(beta);
            break;
        }
        case 'F': {
            roots.push_back(diff(1, 2));
            roots.push_back(diff(2, 3));
            roots.push_back(e(3));
            std::vector<Rational> half = {Rational(1, 2), Rational(-1, 2),
                                          Rational(-1, 2), Rational(-1, 2)};
            roots.push_back(half);
            break;
        }
    }
    return roots;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<long long>> cartan_matrix(const CartanType& t) {
    auto roots = simple_roots_epsilon(t);
    int n = t.rank;
    std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = 2 * dot(roots[i], roots[j]) / dot(roots[j], roots[j]);
            if (denominator(v) != 1)
                throw std::logic_error("non-integer Cartan entry");
            A[i][j] = static_cast<long long>(numerator(v));
        }
    return A;
}

std::vector<IntMat> simple_reflections(const CartanType& t) {
    auto A = cartan_matrix(t);
    int n = t.rank;
    std::vector<IntMat> out;
    for (int i = 0; i < n; ++i) {
        IntMat s = IntMat::identity(n);
        // s_i(a_j) = a_j - A[j][i] a_i: column j picks up -A[j][i] in row i.
        for (int j = 0; j < n; ++j) s.at(i, j) -= A[j][i];
        out.push_back(s);
    }
    return out;
}

WeylGroup enumerate(const CartanType& t, int budget) {
    auto gens = simple_reflections(t);
    int n = t.rank;
    WeylGroup W{t, {}, {}};
    std::map<IntMat, int> index;
    IntMat id = IntMat::identity(n);
    W.elements.push_back(id);
    index.emplace(id, 0);
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            IntMat next = W.elements[cur] * s;
            if (index.count(next)) continue;
            if (static_cast<int>(W.elements.size()) >= budget)
                throw std::runtime_error("group enumeration budget exceeded");
            int idx = static_cast<int>(W.elements.size());
            W.elements.push_back(next);
            index.emplace(next, idx);
            queue.push_back(idx);
        }
    }
    W.inverse_index.resize(W.elements.size());
    for (size_t i = 0; i < W.elements.size(); ++i) {
        RatMat inv = W.elements[i].to_rational().inverse();
        IntMat invi(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (denominator(inv.at(r, c)) != 1)
                    throw std::logic_error("non-integer group inverse");
                invi.at(r, c) = static_cast<long long>(numerator(inv.at(r, c)));
            }
        auto it = index.find(invi);
        if (it == index.end()) throw std::logic_error("inverse missing from closure");
        W.inverse_index[i] = it->second;
    }
    return W;
}

Polynomial act(const WeylGroup& W, int element, const Polynomial& f) {
    if (f.shape().coords != W.rank())
        throw std::invalid_argument("polynomial coordinate count != rank");
    const IntMat& inv = W.elements[W.inverse_index[element]];
    return substitute_linear_diagonal(f, inv.to_rational());
}

Polynomial act_matrix_inverse(const RatMat& g, const Polynomial& f) {
    return substitute_linear_diagonal(f, g.inverse());
}

RatMat to_epsilon_coordinates(const CartanType& t) {
    auto roots = simple_roots_epsilon(t);
    RatMat E(epsilon_dim(t), t.rank);
    for (int j = 0; j < t.rank; ++j)
        for (int i = 0; i < epsilon_dim(t); ++i) E.at(i, j) = roots[j][i];
    return E;
}

namespace {

std::vector<RatMat> closure(std::vector<RatMat> gens, int budget) {
    if (gens.empty()) return {};
    int dim = gens.front().rows();
    std::vector<RatMat> elems = {RatMat::identity(dim)};
    std::set<std::vector<std::pair<std::string, std::string>>> seen;
    auto key = [dim](const RatMat& m) {
        std::vector<std::pair<std::string, std::string>> k;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                k.emplace_back(numerator(m.at(i, j)).str(),
                               denominator(m.at(i, j)).str());
        return k;
    };
    seen.insert(key(elems[0]));
    std::deque<size_t> queue = {0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            RatMat next = elems[cur] * g;
            if (!seen.insert(key(next)).second) continue;
            if (static_cast<int>(elems.size()) >= budget)
                throw std::runtime_error("group enumeration budget exceeded");
            elems.push_back(next);
            queue.push_back(elems.size() - 1);
        }
    }
    return elems;
}

}  // namespace

std::vector<RatMat> epsilon_group(const CartanType& t, int budget) {
    auto roots = simple_roots_epsilon(t);
    int dim = epsilon_dim(t);
    std::vector<RatMat> gens;
    for (const auto& alpha : roots) {
        Rational norm = dot(alpha, alpha);
        RatMat s = RatMat::identity(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) s.at(i, j) -= 2 * alpha[i] * alpha[j] / norm;
        gens.push_back(s);
    }
    return closure(std::move(gens), budget);
}

bool is_signed_permutation(const RatMat& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    for (int j = 0; j < m.cols(); ++j) {
        int nonzero = 0;
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

int count_sign_flips(const RatMat& signed_perm) {
    int flips = 0;
    for (int i = 0; i < signed_perm.rows(); ++i)
        for (int j = 0; j < signed_perm.cols(); ++j)
            if (signed_perm.at(i, j) == -1) ++flips;
    return flips;
}

RatMat dn_sigma_root(int n) {
    CartanType t('D', n);
    RatMat E = to_epsilon_coordinates(t);  // square for D_n
    RatMat sigma_eps = RatMat::identity(n);
    sigma_eps.at(n - 1, n - 1) = -1;
    return E.inverse() * sigma_eps * E;
}

std::vector<RatMat> dn_extended_group(int n, int budget) {
    CartanType t('D', n);
    std::vector<RatMat> gens;
    for (const auto& s : simple_reflections(t)) gens.push_back(s.to_rational());
    gens.push_back(dn_sigma_root(n));
    return closure(std::move(gens), budget);
}

}  // namespace weylnorm
