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

#include "weylnorm/invariants.hpp"

#include <algorithm>
#include <thread>

namespace weylnorm {

long long BasicInvariantSystem::degree_product() const {
    long long p = 1;
    for (int d : degrees) p *= d;
    return p;
}

Polynomial pull_back_from_epsilon(const CartanType& t, const Polynomial& p_eps) {
    int dim = epsilon_dim(t);
    if (p_eps.shape().copies != 1 || p_eps.shape().coords != dim)
        throw std::invalid_argument("pullback input must have shape (1, epsilon_dim)");
    RatMat E = to_epsilon_coordinates(t);
    Shape target{1, t.rank};
    std::vector<Polynomial> images;
    for (int k = 0; k < dim; ++k) {
        Polynomial form(target);
        for (int i = 0; i < t.rank; ++i)
            if (E.at(k, i) != 0)
                form += Polynomial::variable(target, 0, i).scaled(E.at(k, i));
        images.push_back(form);
    }
    return p_eps.substitute_vars(images);
}

namespace {

// Elementary symmetric polynomial e_k in the epsilon variables.
Polynomial elementary_symmetric(Shape shape, int k) {
    int n = shape.coords;
    Polynomial out(shape);
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            Polynomial term = Polynomial::constant(shape, 1);
            for (int i : idx) term = term * Polynomial::variable(shape, 0, i);
            out += term;
            return;
        }
        for (int i = start; i <= n - (k - pos); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Polynomial power_sum(Shape shape, int p) {
    Polynomial out(shape);
    for (int k = 0; k < shape.coords; ++k)
        out += Polynomial::variable(shape, 0, k, p);
    return out;
}

// Graded slices of the subalgebra generated by `gens`, built degree by
// degree: slice_d = sum over g of g * slice_{d - deg g} (plus constants).
class SubalgebraSlices {
  public:
    SubalgebraSlices(Shape shape, std::vector<Polynomial> gens)
        : shape_(shape), gens_(std::move(gens)) {}

    const GradedSubspaceBasis& slice(int d) {
        while (static_cast<int>(slices_.size()) <= d) {
            int cur = static_cast<int>(slices_.size());
            GradedSubspaceBasis basis(shape_, cur);
            if (cur == 0) {
                basis.insert(Polynomial::constant(shape_, 1));
            } else {
                for (const auto& g : gens_) {
                    int gd = g.degree();
                    if (gd <= 0 || gd > cur) continue;
                    if (gd == cur) {
                        basis.insert(g);
                        continue;
                    }
                    for (const auto& row : slice(cur - gd).rows()) basis.insert(g * row);
                }
            }
            slices_.push_back(std::move(basis));
        }
        return slices_[d];
    }

    void add_generator(const Polynomial& g) {
        gens_.push_back(g);
        slices_.clear();
    }

  private:
    Shape shape_;
    std::vector<Polynomial> gens_;
    std::vector<GradedSubspaceBasis> slices_;
};

// Reynolds search for basic invariants of the exceptional types: walk the
// degrees, and whenever the Molien dimension exceeds the subalgebra
// dimension, average monomials until a new independent invariant appears.
BasicInvariantSystem reynolds_search(const CartanType& t, int degree_budget) {
    WeylGroup W = enumerate(t);
    Shape shape{1, t.rank};
    std::vector<LinearSubstitution> subs;
    subs.reserve(W.elements.size());
    for (const auto& g : W.elements)
        subs.push_back(LinearSubstitution::diagonal(shape, g.to_rational()));
    Rational inv_order(1, Int(W.order()));
    MolienTable molien = molien_table(W, 1, degree_budget);
    BasicInvariantSystem sys{t, {}, {}};
    SubalgebraSlices sub(shape, {});
    for (int d = 1; d <= degree_budget; ++d) {
        if (sys.degree_product() == W.order() &&
            static_cast<int>(sys.polys.size()) == t.rank)
            break;
        long long target = molien.dim(d);
        long long have = sub.slice(d).rank();
        while (have < target) {
            GradedSubspaceBasis seen(shape, d);
            for (const auto& row : sub.slice(d).rows()) seen.insert(row);
            bool found = false;
            for (const auto& mono : monomials_of_degree(shape, d)) {
                Polynomial img(shape);
                for (auto& s : subs) img += s.apply_monomial(mono, 1);
                img = img.scaled(inv_order);
                if (img.is_zero()) continue;
                if (!seen.insert(img)) continue;
                sys.polys.push_back(img);
                sys.degrees.push_back(d);
                sub.add_generator(img);
                found = true;
                break;
            }
            if (!found)
                throw std::runtime_error(
                    "Reynolds search failed to realize the Molien dimension");
            have = sub.slice(d).rank();
        }
    }
    if (static_cast<int>(sys.polys.size()) != t.rank ||
        sys.degree_product() != W.order())
        throw std::runtime_error("basic invariant search exhausted its degree budget");
    return sys;
}

}  // namespace

BasicInvariantSystem basic_invariants(const CartanType& t) {
    int n = t.rank;
    Shape eps_shape{1, epsilon_dim(t)};
    BasicInvariantSystem sys{t, {}, {}};
    switch (t.family) {
        case 'A':
            // e_1 vanishes on the sum-zero hyperplane; e_2..e_{n+1} pull back
            // to a basic system of degrees 2..n+1.
            for (int k = 2; k <= n + 1; ++k) {
                sys.polys.push_back(
                    pull_back_from_epsilon(t, elementary_symmetric(eps_shape, k)));
                sys.degrees.push_back(k);
            }
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) {
                sys.polys.push_back(pull_back_from_epsilon(t, power_sum(eps_shape, 2 * i)));
                sys.degrees.push_back(2 * i);
            }
            break;
        case 'D': {
            for (int i = 1; i <= n - 1; ++i) {
                sys.polys.push_back(pull_back_from_epsilon(t, power_sum(eps_shape, 2 * i)));
                sys.degrees.push_back(2 * i);
            }
            Polynomial prod = Polynomial::constant(eps_shape, 1);
            for (int k = 0; k < n; ++k) prod = prod * Polynomial::variable(eps_shape, 0, k);
            sys.polys.push_back(pull_back_from_epsilon(t, prod));
            sys.degrees.push_back(n);
            break;
        }
        case 'G':
            return reynolds_search(t, 8);
        case 'F':
            return reynolds_search(t, 14);
    }
    return sys;
}

Polynomial reynolds(const WeylGroup& W, const Polynomial& f) {
    if (f.shape().coords != W.rank())
        throw std::invalid_argument("polynomial coordinate count != rank");
    Polynomial sum(f.shape());
    for (size_t g = 0; g < W.elements.size(); ++g) {
        // Summing f(g v) over all g equals summing f(g^-1 v); no inverse needed.
        sum += substitute_linear_diagonal(f, W.elements[g].to_rational());
    }
    return sum.scaled(Rational(1, W.order()));
}

Polynomial reynolds_matrices(const std::vector<RatMat>& group, const Polynomial& f) {
    Polynomial sum(f.shape());
    for (const auto& g : group) sum += substitute_linear_diagonal(f, g);
    return sum.scaled(Rational(1, Int(group.size())));
}

MolienTable molien_table(const WeylGroup& W, int m, int dmax) {
    int n = W.rank();
    std::vector<Int> total(dmax + 1, 0);
    for (const auto& g : W.elements) {
        // det(1 - t g) as an integer polynomial of degree <= n.
        std::vector<Int> p = {1};
        {
            // Expansion over permutations is fine for n <= 4.
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::vector<Int> acc(n + 1, 0);
            do {
                int inversions = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (perm[i] > perm[j]) ++inversions;
                // Product of entries (delta - t*g) along the permutation.
                std::vector<Int> prod = {1};
                for (int i = 0; i < n; ++i) {
                    Int c0 = (perm[i] == i) ? 1 : 0;
                    Int c1 = -g.at(i, perm[i]);
                    std::vector<Int> next(prod.size() + 1, 0);
                    for (size_t k = 0; k < prod.size(); ++k) {
                        next[k] += prod[k] * c0;
                        next[k + 1] += prod[k] * c1;
                    }
                    prod = std::move(next);
                }
                Int sign = (inversions % 2 == 0) ? 1 : -1;
                for (size_t k = 0; k < prod.size(); ++k) acc[k] += sign * prod[k];
            } while (std::next_permutation(perm.begin(), perm.end()));
            p.assign(acc.begin(), acc.end());
        }
        // q = p^m truncated to degree dmax.
        std::vector<Int> q = {1};
        for (int rep = 0; rep < m; ++rep) {
            std::vector<Int> next(std::min<size_t>(q.size() + p.size() - 1, dmax + 1), 0);
            for (size_t a = 0; a < q.size(); ++a)
                for (size_t b = 0; b < p.size() && a + b < next.size(); ++b)
                    next[a + b] += q[a] * p[b];
            q = std::move(next);
        }
        q.resize(dmax + 1, 0);
        // Series inverse of q (constant term 1) up to t^dmax.
        std::vector<Int> inv(dmax + 1, 0);
        inv[0] = 1;
        for (int d = 1; d <= dmax; ++d) {
            Int s = 0;
            for (int k = 1; k <= d; ++k) s += q[k] * inv[d - k];
            inv[d] = -s;
        }
        for (int d = 0; d <= dmax; ++d) total[d] += inv[d];
    }
    MolienTable table{W.type, m, {}};
    for (int d = 0; d <= dmax; ++d) {
        Rational avg(total[d], Int(W.order()));
        if (denominator(avg) != 1 || avg < 0)
            throw std::logic_error("Molien coefficient is not a nonnegative integer");
        table.dims.push_back(static_cast<long long>(numerator(avg)));
    }
    return table;
}

long long molien_dim(const WeylGroup& W, int m, int d) {
    return molien_table(W, m, d).dim(d);
}

GradedSubspaceBasis invariant_basis(const WeylGroup& W, int m, int d, int threads,
                                    long long stop_at_rank) {
    Shape shape{m, W.rank()};
    GradedSubspaceBasis basis(shape, d);
    auto monos = monomials_of_degree(shape, d);
    std::vector<LinearSubstitution> subs;
    subs.reserve(W.elements.size());
    for (const auto& g : W.elements)
        subs.push_back(LinearSubstitution::diagonal(shape, g.to_rational()));
    Rational inv_order(1, Int(W.order()));

    auto reynolds_of = [&](std::vector<LinearSubstitution>& local_subs,
                           const Monomial& mono) {
        Polynomial sum(shape);
        for (auto& sub : local_subs) sum += sub.apply_monomial(mono, 1);
        return sum.scaled(inv_order);
    };

    if (threads <= 1) {
        for (const auto& mono : monos) {
            basis.insert(reynolds_of(subs, mono));
            if (stop_at_rank >= 0 && basis.rank() >= stop_at_rank) break;
        }
        return basis;
    }

    // Batched: workers average disjoint chunks, insertion stays serial and
    // in the fixed monomial order, so the echelon result is deterministic.
    const size_t chunk = 64;
    for (size_t start = 0; start < monos.size(); start += chunk * threads) {
        size_t end = std::min(monos.size(), start + chunk * threads);
        std::vector<Polynomial> images(end - start, Polynomial(shape));
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w]() {
                auto local_subs = subs;  // private power caches
                for (size_t i = start + w * chunk;
                     i < std::min(end, start + (w + 1) * chunk); ++i)
                    images[i - start] = reynolds_of(local_subs, monos[i]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& img : images) {
            basis.insert(img);
            if (stop_at_rank >= 0 && basis.rank() >= stop_at_rank) return basis;
        }
        if (stop_at_rank >= 0 && basis.rank() >= stop_at_rank) break;
    }
    return basis;
}

bool jacobian_nonzero(const BasicInvariantSystem& sys) {
    int n = sys.type.rank;
    std::vector<std::vector<Polynomial>> jac(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i].push_back(sys.polys[i].derivative(0, j));
    // A nonzero value at any point certifies the determinant polynomial is
    // nonzero; deterministic points avoid flaky runs.
    std::vector<std::vector<Rational>> points;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rational> pt;
        for (int j = 0; j < n; ++j)
            pt.push_back(Rational(2 + trial + 3 * j, 1 + ((j + trial) % 3)));
        points.push_back(pt);
    }
    for (const auto& pt : points) {
        RatMat J(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) J.at(i, j) = jac[i][j].evaluate(pt);
        if (J.det() != 0) return true;
    }
    return false;
}

}  // namespace weylnorm
