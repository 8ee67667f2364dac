#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz::kernel {

class NumberFieldElement;

// All rational roots of the univariate polynomial sum coeffs[i] * t^i,
// found exactly by the rational root theorem. The zero polynomial is rejected.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

// Simple extension Q[t]/(m) with m monic irreducible of degree 2 or 3.
// Degree <= 3 means irreducibility is equivalent to having no rational root,
// which create() verifies.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // low_coeffs = (c_0, ..., c_{d-1}) for m(t) = t^d + c_{d-1} t^{d-1} + ... + c_0.
    static std::shared_ptr<const NumberField> create(std::vector<Rational> low_coeffs);

    std::size_t degree() const { return low_.size(); }
    const std::vector<Rational>& modulus_low() const { return low_; }

    NumberFieldElement from_rational(const Rational& r) const;
    NumberFieldElement element(std::vector<Rational> coeffs) const;
    NumberFieldElement generator() const;  // the class of t
    NumberFieldElement zero() const;
    NumberFieldElement one() const;

private:
    explicit NumberField(std::vector<Rational> low) : low_(std::move(low)) {}
    std::vector<Rational> low_;
};

// Element of a NumberField, stored as a coefficient vector of length deg(m).
// A default-constructed element is the exact zero, usable with any field.
class NumberFieldElement {
public:
    NumberFieldElement() = default;

    bool is_zero() const;
    const std::shared_ptr<const NumberField>& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    NumberFieldElement operator-() const;
    NumberFieldElement& operator+=(const NumberFieldElement& o);
    NumberFieldElement& operator-=(const NumberFieldElement& o);
    NumberFieldElement& operator*=(const NumberFieldElement& o);
    NumberFieldElement& operator/=(const NumberFieldElement& o);
    NumberFieldElement& operator*=(const Rational& s);

    friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
    friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
    friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
    friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }
    friend NumberFieldElement operator*(NumberFieldElement a, const Rational& s) { return a *= s; }

    NumberFieldElement inverse() const;  // throws std::domain_error on zero

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }

    std::string to_string() const;  // polynomial in t, e.g. "1/2 + 3*t - t^2"

private:
    friend class NumberField;
    NumberFieldElement(std::shared_ptr<const NumberField> f, std::vector<Rational> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    std::shared_ptr<const NumberField> field_;  // null: exact zero of unspecified field
    std::vector<Rational> c_;
};

}  // namespace lefschetz::kernel
