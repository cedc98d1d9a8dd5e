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

#include "weylnorm/echelon.hpp"

namespace weylnorm {

Polynomial GradedSubspaceBasis::reduce(Polynomial p) const {
    Polynomial residue(shape_);
    while (!p.is_zero()) {
        auto it = rows_.find(p.leading_monomial());
        if (it == rows_.end()) {
            residue.add_term(p.leading_monomial(), p.leading_coefficient());
            Polynomial lead = Polynomial::from_monomial(shape_, p.leading_monomial(),
                                                        p.leading_coefficient());
            p -= lead;
        } else {
            p -= it->second.scaled(p.leading_coefficient());
        }
    }
    return residue;
}

bool GradedSubspaceBasis::insert(const Polynomial& p) {
    if (!(p.shape() == shape_)) throw std::invalid_argument("shape mismatch");
    if (!p.is_homogeneous_of(degree_))
        throw std::invalid_argument("degree mismatch on echelon insert");
    Polynomial r = reduce(p);
    if (r.is_zero()) return false;
    Polynomial monic = r.scaled(Rational(1) / r.leading_coefficient());
    rows_.emplace(monic.leading_monomial(), monic);
    return true;
}

std::vector<Polynomial> GradedSubspaceBasis::rows() const {
    std::vector<Polynomial> out;
    out.reserve(rows_.size());
    for (const auto& [lm, row] : rows_) out.push_back(row);
    return out;
}

}  // namespace weylnorm
