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

#ifndef WEYLNORM_ECHELON_HPP
#define WEYLNORM_ECHELON_HPP

#include <map>
#include <vector>

#include "weylnorm/polynomial.hpp"

namespace weylnorm {

// Echelonized basis of a subspace of one graded slice. Rows are monic with
// pairwise distinct leading monomials; rank and membership are exact.
class GradedSubspaceBasis {
  public:
    GradedSubspaceBasis(Shape shape, int degree) : shape_(shape), degree_(degree) {}

    Shape shape() const { return shape_; }
    int degree() const { return degree_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces p against the rows; returns true and adds the (monic) residue
    /// as a new row iff p was outside the current span.
    bool insert(const Polynomial& p);

    /// Remainder of p after reduction; zero iff p is in the span.
    Polynomial reduce(Polynomial p) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

    std::vector<Polynomial> rows() const;

  private:
    Shape shape_;
    int degree_;
    std::map<Monomial, Polynomial, MonomialGreater> rows_;
};

}  // namespace weylnorm

#endif
