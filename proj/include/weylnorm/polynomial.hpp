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

#ifndef WEYLNORM_POLYNOMIAL_HPP
#define WEYLNORM_POLYNOMIAL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylnorm/rational.hpp"

namespace weylnorm {

// Ambient variable grid: `copies` vector copies of an n-dimensional space,
// one block of `coords` variables per copy. Variable x_{i,k} (1-based in the
// text grammar) is flat index (i-1)*coords + (k-1), i.e. copy-major.
struct Shape {
    int copies = 1;
    int coords = 1;

    int vars() const { return copies * coords; }
    int flat(int copy, int coord) const { return copy * coords + coord; }
    bool operator==(const Shape& o) const = default;
};

class Monomial {
  public:
    explicit Monomial(int nvars) : exp_(nvars, 0), degree_(0) {}
    static Monomial variable(int nvars, int idx, int power = 1);

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const { return degree_; }
    int exponent(int idx) const { return exp_[idx]; }
    const std::vector<int>& exponents() const { return exp_; }

    /// Degree in each copy block.
    std::vector<int> multidegree(const Shape& shape) const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  private:
    std::vector<int> exp_;
    int degree_;
};

// Graded lexicographic order on the flattened (copy-major) exponent vector.
// This is the one total order used everywhere: echelon pivots, printing,
// monomial enumeration, so all reports are byte-stable.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(b, a);
    }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    explicit Polynomial(Shape shape) : shape_(shape) {}
    static Polynomial zero(Shape shape) { return Polynomial(shape); }
    static Polynomial constant(Shape shape, const Rational& c);
    static Polynomial variable(Shape shape, int copy, int coord, int power = 1);
    static Polynomial from_monomial(Shape shape, const Monomial& m,
                                    const Rational& c = 1);

    const Shape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous_of(int d) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int e) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const {
        return shape_ == o.shape_ && terms_ == o.terms_;
    }

    Polynomial derivative(int copy, int coord) const;

    /// Substitutes every variable by `images[flat index]`; all images must
    /// share one target shape, which becomes the shape of the result.
    Polynomial substitute_vars(const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Splits into multihomogeneous components keyed by per-copy degree.
    std::map<std::vector<int>, Polynomial> multidegree_components() const;

    std::string to_string() const;
    static Polynomial parse(const std::string& text, Shape shape);

  private:
    Shape shape_;
    TermMap terms_;
};

// Rational dense matrix, rows x cols, row-major. Sized for rank <= 5 work.
class RatMat {
  public:
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

    RatMat operator*(const RatMat& o) const;
    bool operator==(const RatMat& o) const = default;
    RatMat inverse() const;  // throws on singular input
    Rational det() const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// p composed with the linear change of coordinates M on one copy block:
/// x_{copy,k} -> sum_l M[k][l] * x_{copy,l}. M must be coords x coords.
Polynomial substitute_linear(const Polynomial& p, const RatMat& M, int copy);

/// Same substitution applied to every copy at once (diagonal action).
Polynomial substitute_linear_diagonal(const Polynomial& p, const RatMat& M);

Polynomial partial_derivative(const Polynomial& p, int copy, int coord);

/// All monomials of total degree d in the given shape, decreasing
/// graded-lex order. Count is C(vars+d-1, d).
std::vector<Monomial> monomials_of_degree(Shape shape, int d);

// Reusable linear substitution with a power cache, for applying one change
// of variables to many polynomials (Reynolds sums over a whole group).
class LinearSubstitution {
  public:
    LinearSubstitution(Shape source, std::vector<Polynomial> images);
    static LinearSubstitution diagonal(Shape shape, const RatMat& M);

    Polynomial apply(const Polynomial& p);
    Polynomial apply_monomial(const Monomial& m, const Rational& coeff);

  private:
    Shape source_;
    Shape target_;
    std::vector<Polynomial> images_;
    std::vector<std::vector<Polynomial>> powers_;  // powers_[var][e] = image^e
};

}  // namespace weylnorm

#endif
