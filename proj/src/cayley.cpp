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

#include "weylnorm/cayley.hpp"

#include <stdexcept>

namespace weylnorm {

void FiniteGroupTable::validate() const {
    int n = order;
    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("table size mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("table row size mismatch");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }
    // Element 0 is the identity.
    for (int g = 0; g < n; ++g)
        if (table[0][g] != g || table[g][0] != g)
            throw std::invalid_argument("element 0 is not an identity");
    for (int g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n; ++h)
            if (table[g][h] == 0 && table[h][g] == 0) has_inverse = true;
        if (!has_inverse) throw std::invalid_argument("missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("table is not associative");
    if (static_cast<int>(rep.size()) != n)
        throw std::invalid_argument("one representation matrix per element required");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (!(rep[g] * rep[h] == rep[table[g][h]]))
                throw std::invalid_argument("representation is not a homomorphism");
}

int FiniteGroupTable::inverse(int g) const {
    for (int h = 0; h < order; ++h)
        if (table[g][h] == 0) return h;
    throw std::logic_error("missing inverse");
}

FiniteGroupTable FiniteGroupTable::trivial() {
    return FiniteGroupTable{1, {{0}}, {RatMat::identity(1)}, 1};
}

FiniteGroupTable FiniteGroupTable::c2_sign() {
    RatMat sign(1, 1);
    sign.at(0, 0) = -1;
    return FiniteGroupTable{2, {{0, 1}, {1, 0}}, {RatMat::identity(1), sign}, 1};
}

FiniteGroupTable FiniteGroupTable::s3_permutation() {
    // Permutations of {0,1,2} in a fixed order; composition (p*q)(x)=p(q(x)).
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    int n = 6;
    auto compose = [&](int a, int b) {
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < n; ++i)
            if (perms[i] == c) return i;
        throw std::logic_error("composition missing");
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = compose(a, b);
    std::vector<RatMat> rep;
    for (int g = 0; g < n; ++g) {
        RatMat mat(3, 3);
        for (int j = 0; j < 3; ++j) mat.at(perms[g][j], j) = 1;  // u_j -> u_{p(j)}
        rep.push_back(mat);
    }
    return FiniteGroupTable{n, table, rep, 3};
}

CayleyEmbedding cayley_embed(const FiniteGroupTable& G) {
    G.validate();
    CayleyEmbedding emb;
    emb.perms.resize(G.order);
    for (int g = 0; g < G.order; ++g) {
        emb.perms[g].resize(G.order);
        for (int i = 0; i < G.order; ++i) emb.perms[g][i] = G.table[g][i];
    }
    // Left translation is free, so the embedding is automatically faithful;
    // still verify injectivity on the identity.
    for (int g = 1; g < G.order; ++g)
        if (emb.perms[g] == emb.perms[0])
            throw std::logic_error("Cayley embedding is not faithful");
    return emb;
}

Shape cayley_shape(const FiniteGroupTable& G) { return Shape{G.rep_dim, G.order}; }

Polynomial eta(const Polynomial& p, const FiniteGroupTable& G) {
    Shape source = cayley_shape(G);
    if (!(p.shape() == source)) throw std::invalid_argument("shape mismatch");
    Shape u_shape{1, G.rep_dim};
    std::vector<Polynomial> images;
    images.reserve(source.vars());
    for (int l = 0; l < G.rep_dim; ++l)
        for (int i = 0; i < G.order; ++i) {
            // x_{i,l} -> g_i(u_l) = sum_j rep(g_i)[j][l] u_j.
            Polynomial form(u_shape);
            for (int j = 0; j < G.rep_dim; ++j)
                if (G.rep[i].at(j, l) != 0)
                    form += Polynomial::variable(u_shape, 0, j).scaled(G.rep[i].at(j, l));
            images.push_back(form);
        }
    return p.substitute_vars(images);
}

Polynomial noether_transfer(const Polynomial& f, const FiniteGroupTable& G) {
    Shape u_shape{1, G.rep_dim};
    if (!(f.shape() == u_shape))
        throw std::invalid_argument("transfer input must live on U");
    if (!is_invariant(G, f))
        throw std::invalid_argument("transfer input must be G-invariant");
    Shape target = cayley_shape(G);
    Polynomial sum(target);
    for (int i = 0; i < G.order; ++i) {
        std::vector<Polynomial> images;
        for (int l = 0; l < G.rep_dim; ++l)
            images.push_back(Polynomial::variable(target, l, i));  // u_l -> x_{i,l}
        sum += f.substitute_vars(images);
    }
    return sum.scaled(Rational(1, Int(G.order)));
}

Polynomial group_average(const FiniteGroupTable& G, const Polynomial& f) {
    Shape u_shape{1, G.rep_dim};
    if (!(f.shape() == u_shape)) throw std::invalid_argument("shape mismatch");
    Polynomial sum(u_shape);
    for (int g = 0; g < G.order; ++g)
        sum += substitute_linear(f, G.rep[g], 0);
    return sum.scaled(Rational(1, Int(G.order)));
}

bool is_invariant(const FiniteGroupTable& G, const Polynomial& f) {
    for (int g = 0; g < G.order; ++g)
        if (!(substitute_linear(f, G.rep[g], 0) == f)) return false;
    return true;
}

Polynomial cayley_row_action(const CayleyEmbedding& emb, int g, const Polynomial& p,
                             const FiniteGroupTable& G) {
    Shape shape = cayley_shape(G);
    if (!(p.shape() == shape)) throw std::invalid_argument("shape mismatch");
    std::vector<Polynomial> images(shape.vars(), Polynomial(shape));
    for (int l = 0; l < G.rep_dim; ++l)
        for (int i = 0; i < G.order; ++i)
            images[shape.flat(l, i)] =
                Polynomial::variable(shape, l, emb.perms[g][i]);
    return p.substitute_vars(images);
}

}  // namespace weylnorm
