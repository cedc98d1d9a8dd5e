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

#include "weylnorm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weylnorm {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

Monomial Monomial::variable(int nvars, int idx, int power) {
    Monomial m(nvars);
    m.exp_[idx] = power;
    m.degree_ = power;
    return m;
}

std::vector<int> Monomial::multidegree(const Shape& shape) const {
    std::vector<int> md(shape.copies, 0);
    for (int i = 0; i < shape.copies; ++i)
        for (int k = 0; k < shape.coords; ++k) md[i] += exp_[shape.flat(i, k)];
    return md;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
    r.degree_ += o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > o.exp_[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= o.exp_[i];
    r.degree_ -= o.degree_;
    return r;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();  // lex: earlier variable wins
}

Polynomial Polynomial::constant(Shape shape, const Rational& c) {
    Polynomial p(shape);
    if (c != 0) p.terms_.emplace(Monomial(shape.vars()), c);
    return p;
}

Polynomial Polynomial::variable(Shape shape, int copy, int coord, int power) {
    Polynomial p(shape);
    p.terms_.emplace(Monomial::variable(shape.vars(), shape.flat(copy, coord), power),
                     Rational(1));
    return p;
}

Polynomial Polynomial::from_monomial(Shape shape, const Monomial& m,
                                     const Rational& c) {
    Polynomial p(shape);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::is_homogeneous_of(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero");
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("shape mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("shape mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(shape_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("shape mismatch");
    Polynomial r(shape_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(shape_, 1);
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derivative(int copy, int coord) const {
    int idx = shape_.flat(copy, coord);
    Polynomial r(shape_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(idx);
        if (e == 0) continue;
        std::vector<int> exp = m.exponents();
        exp[idx] -= 1;
        Monomial dm(shape_.vars());
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i]) dm = dm.times(Monomial::variable(shape_.vars(),
                                                         static_cast<int>(i), exp[i]));
        r.add_term(dm, c * e);
    }
    return r;
}

Polynomial Polynomial::substitute_vars(const std::vector<Polynomial>& images) const {
    LinearSubstitution sub(shape_, images);
    return sub.apply(*this);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != shape_.vars())
        throw std::invalid_argument("point dimension mismatch");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < shape_.vars(); ++i)
            for (int e = 0; e < m.exponent(i); ++e) v *= point[i];
        total += v;
    }
    return total;
}

std::map<std::vector<int>, Polynomial> Polynomial::multidegree_components() const {
    std::map<std::vector<int>, Polynomial> comps;
    for (const auto& [m, c] : terms_) {
        auto md = m.multidegree(shape_);
        auto it = comps.find(md);
        if (it == comps.end())
            it = comps.emplace(md, Polynomial(shape_)).first;
        it->second.add_term(m, c);
    }
    return comps;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool printed_coeff = false;
        if (coeff != 1 || m.degree() == 0) {
            out << weylnorm::to_string(coeff);
            printed_coeff = true;
        }
        bool first_factor = true;
        for (int i = 0; i < shape_.copies; ++i)
            for (int k = 0; k < shape_.coords; ++k) {
                int e = m.exponent(shape_.flat(i, k));
                if (e == 0) continue;
                if (printed_coeff || !first_factor) out << "*";
                first_factor = false;
                out << "x" << (i + 1) << "_" << (k + 1);
                if (e > 1) out << "^" << e;
            }
    }
    return out.str();
}

namespace {

// Recursive-descent reader for the CLI grammar:
//   poly := ['-'] term (('+'|'-') term)*
//   term := rational ['*' factors] | factors
//   factor := 'x' copy '_' coord ['^' exp]
struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    Shape shape;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    long long read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer at position " +
                                                      std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }
    Rational read_rational() {
        Int num(read_uint());
        if (eat('/')) return Rational(num, Int(read_uint()));
        return Rational(num);
    }
    Polynomial read_term() {
        Polynomial term = Polynomial::constant(shape, 1);
        bool any = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            term = Polynomial::constant(shape, read_rational());
            any = true;
            if (!eat('*')) return term;
        }
        while (true) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'x') break;
            ++pos;
            int copy = static_cast<int>(read_uint());
            if (!eat('_')) throw std::invalid_argument("expected '_' in variable");
            int coord = static_cast<int>(read_uint());
            int e = 1;
            if (eat('^')) e = static_cast<int>(read_uint());
            if (copy < 1 || copy > shape.copies || coord < 1 || coord > shape.coords)
                throw std::invalid_argument("variable x" + std::to_string(copy) + "_" +
                                            std::to_string(coord) + " outside shape");
            term = term * Polynomial::variable(shape, copy - 1, coord - 1, e);
            any = true;
            if (!eat('*')) break;
        }
        if (!any) throw std::invalid_argument("empty term at position " +
                                              std::to_string(pos));
        return term;
    }
    Polynomial parse() {
        Polynomial result(shape);
        bool negate = eat('-');
        if (!negate) eat('+');
        while (true) {
            Polynomial t = read_term();
            result += negate ? -t : t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                negate = false;
            else if (eat('-'))
                negate = true;
            else
                throw std::invalid_argument("unexpected character at position " +
                                            std::to_string(pos));
        }
        return result;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, Shape shape) {
    PolyParser parser{text, 0, shape};
    return parser.parse();
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    RatMat work(*this);
    RatMat inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(work.at(col, j), work.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Rational p = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            Rational f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    RatMat work(*this);
    Rational d = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
            d = -d;
        }
        d *= work.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (work.at(r, col) == 0) continue;
            Rational f = work.at(r, col) / work.at(col, col);
            for (int j = col; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
        }
    }
    return d;
}

Polynomial substitute_linear(const Polynomial& p, const RatMat& M, int copy) {
    const Shape& shape = p.shape();
    if (M.rows() != shape.coords || M.cols() != shape.coords)
        throw std::invalid_argument("matrix dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(shape.vars());
    for (int i = 0; i < shape.copies; ++i)
        for (int k = 0; k < shape.coords; ++k) {
            if (i != copy) {
                images.push_back(Polynomial::variable(shape, i, k));
                continue;
            }
            Polynomial form(shape);
            for (int l = 0; l < shape.coords; ++l)
                if (M.at(k, l) != 0)
                    form += Polynomial::variable(shape, i, l).scaled(M.at(k, l));
            images.push_back(form);
        }
    return p.substitute_vars(images);
}

Polynomial substitute_linear_diagonal(const Polynomial& p, const RatMat& M) {
    LinearSubstitution sub = LinearSubstitution::diagonal(p.shape(), M);
    return sub.apply(p);
}

Polynomial partial_derivative(const Polynomial& p, int copy, int coord) {
    return p.derivative(copy, coord);
}

std::vector<Monomial> monomials_of_degree(Shape shape, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Monomial> out;
    std::vector<int> exp(shape.vars(), 0);
    // Lexicographic enumeration over exponent vectors; with equal total
    // degree this is decreasing graded-lex.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == shape.vars() - 1) {
            exp[var] = remaining;
            Monomial m(shape.vars());
            for (int i = 0; i < shape.vars(); ++i)
                if (exp[i]) m = m.times(Monomial::variable(shape.vars(), i, exp[i]));
            out.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exp[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (shape.vars() == 0) {
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(rec, 0, d);
    return out;
}

LinearSubstitution::LinearSubstitution(Shape source, std::vector<Polynomial> images)
    : source_(source), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.vars())
        throw std::invalid_argument("need one image per variable");
    target_ = images_.empty() ? source_ : images_.front().shape();
    for (const auto& im : images_)
        if (!(im.shape() == target_))
            throw std::invalid_argument("images disagree on target shape");
    powers_.resize(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        powers_[i].push_back(Polynomial::constant(target_, 1));
}

LinearSubstitution LinearSubstitution::diagonal(Shape shape, const RatMat& M) {
    if (M.rows() != shape.coords || M.cols() != shape.coords)
        throw std::invalid_argument("matrix dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(shape.vars());
    for (int i = 0; i < shape.copies; ++i)
        for (int k = 0; k < shape.coords; ++k) {
            Polynomial form(shape);
            for (int l = 0; l < shape.coords; ++l)
                if (M.at(k, l) != 0)
                    form += Polynomial::variable(shape, i, l).scaled(M.at(k, l));
            images.push_back(form);
        }
    return LinearSubstitution(shape, std::move(images));
}

Polynomial LinearSubstitution::apply_monomial(const Monomial& m, const Rational& coeff) {
    Polynomial result = Polynomial::constant(target_, coeff);
    for (int v = 0; v < source_.vars(); ++v) {
        int e = m.exponent(v);
        if (e == 0) continue;
        auto& pow = powers_[v];
        while (static_cast<int>(pow.size()) <= e)
            pow.push_back(pow.back() * images_[v]);
        result = result * pow[e];
        if (result.is_zero()) return result;
    }
    return result;
}

Polynomial LinearSubstitution::apply(const Polynomial& p) {
    if (!(p.shape() == source_)) throw std::invalid_argument("shape mismatch");
    Polynomial result(target_);
    for (const auto& [m, c] : p.terms()) result += apply_monomial(m, c);
    return result;
}

}  // namespace weylnorm
