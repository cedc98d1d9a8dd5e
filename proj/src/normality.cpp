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

#include "weylnorm/normality.hpp"

#include <chrono>

namespace weylnorm {

NormalityReport check_first_degree_generation(const CartanType& t, int m, int q_max,
                                              int threads) {
    auto start = std::chrono::steady_clock::now();
    WeylGroup W = enumerate(t);
    int base_degree = static_cast<int>(W.order());
    Shape shape{m, W.rank()};
    MolienTable molien = molien_table(W, m, base_degree * q_max);

    NormalityReport report{t, m, q_max, {}, true, 0, std::nullopt};

    long long dim1 = molien.dim(base_degree);
    GradedSubspaceBasis B1 = invariant_basis(W, m, base_degree, threads, dim1);
    report.levels.push_back({1, dim1, B1.rank(), B1.rank() == dim1});
    if (B1.rank() > dim1)
        throw std::logic_error("invariant span exceeds Molien dimension");
    report.pass = report.levels.back().pass;

    std::vector<Polynomial> b1_rows = B1.rows();
    std::vector<Polynomial> prev_rows = b1_rows;
    for (int q = 2; q <= q_max && report.pass; ++q) {
        int d = base_degree * q;
        long long target = molien.dim(d);
        GradedSubspaceBasis span(shape, d);
        for (const auto& b : b1_rows)
            for (const auto& r : prev_rows) span.insert(b * r);
        if (span.rank() > target)
            throw std::logic_error("product span exceeds Molien dimension");
        bool pass = span.rank() == target;
        report.levels.push_back({q, target, span.rank(), pass});
        if (!pass) {
            // Certificate: an invariant of degree q|W| outside the product
            // span, found by reducing Reynolds images against it.
            GradedSubspaceBasis full = invariant_basis(W, m, d, threads, target);
            for (const auto& row : full.rows()) {
                Polynomial residue = span.reduce(row);
                if (!residue.is_zero()) {
                    report.witness = residue;
                    break;
                }
            }
            report.pass = false;
        }
        prev_rows = span.rows();
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

PolarizationGenReport check_polarization_generation(const CartanType& t, int m,
                                                    int d_max) {
    WeylGroup W = enumerate(t);
    Shape shape{m, W.rank()};
    MolienTable molien = molien_table(W, m, d_max);
    GeneratorSet gens = generators_Vm(t, m);

    PolarizationGenReport report{t, m, d_max, {}, true};
    // slices[d] = degree-d slice of the subalgebra generated by the set.
    std::vector<GradedSubspaceBasis> slices;
    for (int d = 0; d <= d_max; ++d) {
        GradedSubspaceBasis basis(shape, d);
        if (d == 0) {
            basis.insert(Polynomial::constant(shape, 1));
        } else {
            for (const auto& gen : gens.generators) {
                if (gen.degree > d) continue;
                if (gen.degree == d) {
                    basis.insert(gen.poly);
                    continue;
                }
                for (const auto& row : slices[d - gen.degree].rows())
                    basis.insert(gen.poly * row);
            }
        }
        long long target = molien.dim(d);
        if (basis.rank() > target)
            throw std::logic_error("subalgebra slice exceeds Molien dimension");
        bool pass = basis.rank() == target;
        report.degrees.push_back({d, target, basis.rank(), pass});
        report.pass = report.pass && pass;
        slices.push_back(std::move(basis));
    }
    return report;
}

SigmaReport check_sigma_antiinvariance(int n, int m) {
    if (n % 2 == 0) throw std::invalid_argument("odd rank required");
    CartanType t('D', n);
    GeneratorSet gens = generators_Vm(t, m);
    RatMat sigma = dn_sigma_root(n);
    auto extended = dn_extended_group(n);

    SigmaReport report{n, m, 0, 0, true, true, true, 0, false};
    report.extended_order = static_cast<long long>(extended.size());

    std::vector<Polynomial> odd_gens;
    for (const auto& gen : gens.generators)
        if (gen.degree % 2 == 1) odd_gens.push_back(gen.poly);
    report.odd_generators = static_cast<int>(odd_gens.size());

    for (const auto& f : odd_gens) {
        Polynomial sf = substitute_linear_diagonal(f, sigma);
        if (!(sf == -f)) report.sigma_anti_ok = false;
        if (!((f + sf).scaled(Rational(1, 2)).is_zero()))
            report.symmetrization_ok = false;
    }
    for (size_t a = 0; a < odd_gens.size(); ++a)
        for (size_t b = a; b < odd_gens.size(); ++b) {
            Polynomial prod = odd_gens[a] * odd_gens[b];
            ++report.products_checked;
            for (const auto& g : extended)
                if (!(substitute_linear_diagonal(prod, g) == prod)) {
                    report.products_ok = false;
                    break;
                }
        }

    WeylGroup Bn = enumerate(CartanType('B', n));
    bool order_ok =
        report.extended_order == 2 * enumerate(t).order() &&
        report.extended_order == Bn.order();
    report.pass = report.sigma_anti_ok && report.symmetrization_ok &&
                  report.products_ok && order_ok;
    return report;
}

EvenCaseReport check_dn_even_case(int n, int m) {
    if (n % 2 != 0) throw std::invalid_argument("even rank required");
    CartanType t('D', n);
    GeneratorSet gens = generators_Vm(t, m);
    EvenCaseReport report{n, m, static_cast<int>(gens.generators.size()), true};
    for (const auto& gen : gens.generators) {
        if (gen.degree % 2 != 0) report.pass = false;
        if (gen.source == GeneratorSource::PWord && gen.degree > 2 * n - 2)
            report.pass = false;
    }
    return report;
}

FactorizationReport check_monomial_factorization(const CartanType& t,
                                                 const std::vector<long long>& exps) {
    BasicInvariantSystem basics = basic_invariants(t);
    int n = t.rank;
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("need one exponent per basic invariant");
    std::vector<long long> degs(basics.degrees.begin(), basics.degrees.end());
    DegreeVector d(degs);
    std::vector<long long> part = extract_part(exps, d);

    Shape shape{1, n};
    Polynomial f = Polynomial::constant(shape, 1);
    Polynomial g = Polynomial::constant(shape, 1);
    for (int i = 0; i < n; ++i) {
        f = f * basics.polys[i].pow(static_cast<int>(exps[i]));
        g = g * basics.polys[i].pow(static_cast<int>(part[i]));
    }
    // The quotient is the product over the exponent differences, invariant
    // by construction; verify divisibility by direct multiplication.
    Polynomial quotient = Polynomial::constant(shape, 1);
    for (int i = 0; i < n; ++i)
        quotient = quotient * basics.polys[i].pow(static_cast<int>(exps[i] - part[i]));
    bool divides = (g * quotient == f);
    WeylGroup W = enumerate(t);
    bool invariant = true;
    for (size_t e = 0; e < W.elements.size() && invariant; ++e)
        invariant = act(W, static_cast<int>(e), quotient) == quotient;
    return FactorizationReport{exps, part, divides, invariant, divides && invariant};
}

}  // namespace weylnorm
