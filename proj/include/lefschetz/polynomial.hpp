#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz::poly {

using kernel::Matrix;
using kernel::Rational;

// Sparse multivariate polynomial over Q with terms kept in descending
// graded-lex order and no stored zero coefficients. The zero polynomial is
// variable-count agnostic: binary operations adopt the other operand's nvars.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);
    static Polynomial term(Monomial m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;  // zero polynomials compare equal across nvars
    }

    // 0 for the zero polynomial
    std::uint32_t total_degree() const;
    bool is_homogeneous() const;

    Polynomial derivative(std::size_t var) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Evaluation in any commutative Q-algebra K; `one` seeds the embedding of
    // the rational coefficients (K must support K*Rational, K*K, K+K).
    template <typename K>
    K evaluate_in(std::span<const K> point, const K& one) const {
        K acc = one - one;
        for (const auto& [m, c] : terms_) {
            K t = one * c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::uint32_t e = 0; e < m.exponents[i]; ++e) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    // Substitution x_i -> sum_j m(i, j) x_j for a square rational matrix.
    Polynomial substitute_linear(const Matrix<Rational>& m) const;

    std::string to_string(char var_letter = 'x') const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// Differentiation action of an operator polynomial (in the dual variables)
// on f: X^a acts on x^b as (b!/(b-a)!) x^(b-a) when a <= b, else 0.
Polynomial apply(const Polynomial& op, const Polynomial& f);

// Nonzero homogeneous polynomial together with its degree.
class Form {
public:
    explicit Form(Polynomial p);  // throws std::invalid_argument if zero or inhomogeneous

    const Polynomial& poly() const { return poly_; }
    std::uint32_t degree() const { return degree_; }
    std::size_t nvars() const { return poly_.nvars(); }

    friend bool operator==(const Form& a, const Form& b) { return a.poly_ == b.poly_; }

private:
    Polynomial poly_;
    std::uint32_t degree_;
};

// Polynomial in the dual variables X_i, acting on forms by differentiation.
struct DiffOperator {
    Polynomial poly;
    std::string to_string() const { return poly.to_string('X'); }
};

// Vector of the N+1 first partials of f, each homogeneous of degree d-1 (or zero).
std::vector<Polynomial> gradient(const Form& f);

// Symmetric (N+1) x (N+1) matrix of second partials.
Matrix<Polynomial> hessian_matrix(const Form& f);

}  // namespace lefschetz::poly
