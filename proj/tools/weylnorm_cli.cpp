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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylnorm/cayley.hpp"
#include "weylnorm/invariants.hpp"
#include "weylnorm/normality.hpp"
#include "weylnorm/polarize.hpp"
#include "weylnorm/semigroup.hpp"
#include "weylnorm/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace weylnorm;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw CLI::RuntimeError("cannot open output file: " + out_path, 2);
    f << text << "\n";
}

std::vector<long long> parse_vec(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

int run_degrees(const std::string& type_str, const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    WeylGroup W = enumerate(t);
    BasicInvariantSystem sys = basic_invariants(t);
    bool ok = sys.degree_product() == static_cast<long long>(W.elements.size());
    json rep;
    rep["type"] = t.to_string();
    rep["rank"] = t.rank;
    rep["degrees"] = sys.degrees;
    rep["group_order"] = W.elements.size();
    rep["degree_product"] = sys.degree_product();
    rep["product_matches_order"] = ok;
    emit(rep.dump(2), out_path);
    return ok ? 0 : 1;
}

int run_invariants(const std::string& type_str, const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    BasicInvariantSystem sys = basic_invariants(t);
    json rep;
    rep["type"] = t.to_string();
    rep["degrees"] = sys.degrees;
    json polys = json::array();
    for (const auto& p : sys.polys) polys.push_back(p.to_string());
    rep["basic_invariants"] = polys;
    rep["jacobian_nonzero"] = jacobian_nonzero(sys);
    emit(rep.dump(2), out_path);
    return 0;
}

int run_polarize(const std::string& type_str, int index, int m,
                 const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    BasicInvariantSystem sys = basic_invariants(t);
    if (index < 1 || index > static_cast<int>(sys.polys.size()))
        throw CLI::RuntimeError("--index out of range", 2);
    PolarizationFamily fam = polarize_all(sys.polys[index - 1], m);
    json rep;
    rep["type"] = t.to_string();
    rep["index"] = index;
    rep["m"] = m;
    rep["source"] = fam.source.to_string();
    json members = json::object();
    for (const auto& [alpha, poly] : fam.members) {
        std::string key;
        for (size_t i = 0; i < alpha.size(); ++i)
            key += (i ? "," : "") + std::to_string(alpha[i]);
        members[key] = poly.to_string();
    }
    rep["members"] = members;
    emit(rep.dump(2), out_path);
    return 0;
}

int run_molien(const std::string& type_str, int m, int dmax,
               const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    WeylGroup W = enumerate(t);
    MolienTable table = molien_table(W, m, dmax);
    json rep = json::object();
    for (int d = 0; d <= table.dmax(); ++d)
        rep[std::to_string(d)] = table.dim(d);
    emit(rep.dump(2), out_path);
    return 0;
}

int run_semigroup_decompose(const std::string& d_csv, const std::string& m_csv,
                            const std::string& out_path) {
    DegreeVector d(parse_vec(d_csv));
    std::vector<long long> target = parse_vec(m_csv);
    json rep;
    rep["d"] = d.d;
    rep["N"] = d.N;
    rep["target"] = target;
    try {
        Decomposition dec = decompose(target, d);
        rep["parts"] = dec.parts;
        rep["pass"] = true;
        emit(rep.dump(2), out_path);
        return 0;
    } catch (const NotMemberError& e) {
        rep["pass"] = false;
        rep["error"] = std::string("not a member: ") + e.what();
        emit(rep.dump(2), out_path);
        return 1;
    }
}

int run_semigroup_verify(const std::string& d_csv, long long bound,
                         const std::string& out_path) {
    DegreeVector d(parse_vec(d_csv));
    if (bound <= 0) bound = 2 * d.N;
    GenerationReport report = verify_generation(d, bound);
    json rep;
    rep["d"] = d.d;
    rep["N"] = d.N;
    rep["bound"] = report.bound;
    rep["members_checked"] = report.members_checked;
    rep["pass"] = report.pass;
    emit(rep.dump(2), out_path);
    return report.pass ? 0 : 1;
}

int run_check_normality(const std::string& type_str, int m, int qmax, int threads,
                        const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    NormalityReport report = check_first_degree_generation(t, m, qmax, threads);
    json rep;
    rep["type"] = t.to_string();
    rep["rank"] = t.rank;
    rep["m"] = report.m;
    rep["qmax"] = report.q_max;
    json levels = json::array();
    for (const auto& lvl : report.levels)
        levels.push_back(json{{"q", lvl.q},
                              {"target_dim", lvl.target_dim},
                              {"span_dim", lvl.span_dim},
                              {"pass", lvl.pass}});
    rep["levels"] = levels;
    rep["pass"] = report.pass;
    rep["elapsed_ms"] = report.elapsed_ms;
    if (report.witness) rep["witness"] = report.witness->to_string();
    emit(rep.dump(2), out_path);
    return report.pass ? 0 : 1;
}

int run_check_dn(const std::string& type_str, int m, const std::string& out_path) {
    CartanType t = CartanType::parse(type_str);
    if (t.family != 'D') throw CLI::RuntimeError("check-dn requires a D type", 2);
    json rep;
    rep["type"] = t.to_string();
    rep["m"] = m;
    bool pass;
    if (t.rank % 2 == 1) {
        SigmaReport sr = check_sigma_antiinvariance(t.rank, m);
        rep["case"] = "odd";
        rep["odd_generators"] = sr.odd_generators;
        rep["products_checked"] = sr.products_checked;
        rep["sigma_anti_ok"] = sr.sigma_anti_ok;
        rep["symmetrization_ok"] = sr.symmetrization_ok;
        rep["products_ok"] = sr.products_ok;
        rep["extended_order"] = sr.extended_order;
        pass = sr.pass;
    } else {
        EvenCaseReport er = check_dn_even_case(t.rank, m);
        rep["case"] = "even";
        rep["generators"] = er.generators;
        pass = er.pass;
    }
    rep["pass"] = pass;
    emit(rep.dump(2), out_path);
    return pass ? 0 : 1;
}

int run_cayley_demo(const std::string& group_name, const std::string& out_path) {
    FiniteGroupTable G;
    Polynomial sample{Shape{1, 1}};
    if (group_name == "C2") {
        G = FiniteGroupTable::c2_sign();
        sample = Polynomial::variable(Shape{1, 1}, 0, 0, 2);
    } else if (group_name == "S3") {
        G = FiniteGroupTable::s3_permutation();
        sample = Polynomial::parse("x1_1*x1_2 + x1_1*x1_3 + x1_2*x1_3", Shape{1, 3});
    } else if (group_name == "trivial") {
        G = FiniteGroupTable::trivial();
        sample = Polynomial::variable(Shape{1, 1}, 0, 0, 3);
    } else {
        throw CLI::RuntimeError("unknown group (use C2, S3 or trivial)", 2);
    }
    CayleyEmbedding emb = cayley_embed(G);
    Polynomial fprime = noether_transfer(sample, G);
    bool ok = eta(fprime, G) == sample;
    json rep;
    rep["group"] = group_name;
    rep["order"] = G.order;
    rep["embedding"] = emb.perms;
    rep["f"] = sample.to_string();
    rep["f_prime"] = fprime.to_string();
    rep["eta_of_f_prime_equals_f"] = ok;
    emit(rep.dump(2), out_path);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Weyl group invariants"};
    app.require_subcommand(1);

    std::string type_str = "A1", out_path, d_csv, m_csv, group_name = "S3";
    int m = 1, dmax = 8, qmax = 2, index = 1, threads = 1;
    long long bound = 0;

    auto* degrees = app.add_subcommand("degrees", "Basic invariant degrees and |W|");
    degrees->add_option("--type", type_str, "Cartan type, e.g. B2")->required();
    degrees->add_option("--out", out_path, "Output file (default stdout)");

    auto* invariants =
        app.add_subcommand("invariants", "Basic invariants in the text grammar");
    invariants->add_option("--type", type_str)->required();
    invariants->add_option("--out", out_path);

    auto* polarize =
        app.add_subcommand("polarize", "Polarization family of a basic invariant");
    polarize->add_option("--type", type_str)->required();
    polarize->add_option("--index", index, "1-based basic invariant index");
    polarize->add_option("--m", m, "Number of copies")->required();
    polarize->add_option("--out", out_path);

    auto* molien = app.add_subcommand("molien", "Molien dimensions {degree: dim}");
    molien->add_option("--type", type_str)->required();
    molien->add_option("--m", m, "Number of copies");
    molien->add_option("--max-degree", dmax);
    molien->add_option("--out", out_path);

    auto* semigroup = app.add_subcommand("semigroup", "Degree semigroup tools");
    semigroup->require_subcommand(1);
    auto* sg_dec = semigroup->add_subcommand("decompose", "Decompose one member");
    sg_dec->add_option("--d", d_csv, "Degrees, comma separated")->required();
    sg_dec->add_option("--m", m_csv, "Target exponent vector")->required();
    sg_dec->add_option("--out", out_path);
    auto* sg_ver = semigroup->add_subcommand("verify", "Sweep members up to a bound");
    sg_ver->add_option("--d", d_csv, "Degrees, comma separated")->required();
    sg_ver->add_option("--bound", bound, "Entry bound (default 2N)");
    sg_ver->add_option("--out", out_path);

    auto* normality =
        app.add_subcommand("check-normality", "First-degree generation check");
    normality->add_option("--type", type_str)->required();
    normality->add_option("--m", m, "Number of copies");
    normality->add_option("--qmax", qmax, "Levels to close under products");
    normality->add_option("--threads", threads, "Worker threads");
    normality->add_option("--out", out_path);

    auto* checkdn = app.add_subcommand("check-dn", "D type generator bookkeeping");
    checkdn->add_option("--type", type_str, "D3 or D4")->required();
    checkdn->add_option("--m", m, "Number of copies");
    checkdn->add_option("--out", out_path);

    auto* cayley = app.add_subcommand("cayley-demo", "Transfer round trip demo");
    cayley->add_option("--group", group_name, "trivial, C2 or S3");
    cayley->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (degrees->parsed()) return run_degrees(type_str, out_path);
        if (invariants->parsed()) return run_invariants(type_str, out_path);
        if (polarize->parsed()) return run_polarize(type_str, index, m, out_path);
        if (molien->parsed()) return run_molien(type_str, m, dmax, out_path);
        if (sg_dec->parsed()) return run_semigroup_decompose(d_csv, m_csv, out_path);
        if (sg_ver->parsed()) return run_semigroup_verify(d_csv, bound, out_path);
        if (normality->parsed())
            return run_check_normality(type_str, m, qmax, threads, out_path);
        if (checkdn->parsed()) return run_check_dn(type_str, m, out_path);
        if (cayley->parsed()) return run_cayley_demo(group_name, out_path);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << e.what() << "\n";
        return e.get_exit_code();
    } catch (const LemmaViolationError& e) {
        std::cerr << "lemma violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
