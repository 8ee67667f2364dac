#include "lefschetz/number_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz::kernel {

namespace {

// divisors of |n| > 0, by trial division
std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // trim leading zeros
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<Rational> roots;
    // strip t | p(t)
    std::size_t lowest = 0;
    while (lowest < c.size() && c[lowest].is_zero()) ++lowest;
    if (lowest > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(lowest));
    }
    if (c.size() <= 1) return roots;

    // clear denominators to an integer polynomial
    mpz_class lcm_den(1);
    for (const auto& q : c) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
        lcm_den = lcm_den / g * q.den();
    }
    std::vector<mpz_class> ic;
    ic.reserve(c.size());
    for (const auto& q : c) ic.push_back(q.num() * (lcm_den / q.den()));

    const mpz_class a0 = ic.front();
    const mpz_class an = ic.back();
    for (const mpz_class& p : positive_divisors(a0)) {
        for (const mpz_class& q : positive_divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * p, q));
                if (eval_poly(c, cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::shared_ptr<const NumberField> NumberField::create(std::vector<Rational> low_coeffs) {
    const std::size_t d = low_coeffs.size();
    if (d < 2 || d > 3) throw std::invalid_argument("NumberField: modulus degree must be 2 or 3");
    std::vector<Rational> full = low_coeffs;
    full.push_back(Rational(1));
    if (!rational_roots(full).empty())
        throw std::invalid_argument("NumberField: modulus is reducible over Q");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(low_coeffs)));
}

NumberFieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = r;
    return NumberFieldElement(shared_from_this(), std::move(c));
}

NumberFieldElement NumberField::element(std::vector<Rational> coeffs) const {
    if (coeffs.size() != degree())
        throw std::invalid_argument("NumberField: coefficient vector length mismatch");
    return NumberFieldElement(shared_from_this(), std::move(coeffs));
}

NumberFieldElement NumberField::generator() const {
    std::vector<Rational> c(degree(), Rational(0));
    c[1] = Rational(1);
    return NumberFieldElement(shared_from_this(), std::move(c));
}

NumberFieldElement NumberField::zero() const { return from_rational(Rational(0)); }
NumberFieldElement NumberField::one() const { return from_rational(Rational(1)); }

bool NumberFieldElement::is_zero() const {
    for (const auto& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

NumberFieldElement NumberFieldElement::operator-() const {
    NumberFieldElement r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
    if (!o.field_) return *this;
    if (!field_) return *this = o;
    if (field_ != o.field_ && field_->modulus_low() != o.field_->modulus_low())
        throw std::invalid_argument("NumberFieldElement: mixed fields");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
    return *this += -o;
}

NumberFieldElement& NumberFieldElement::operator*=(const Rational& s) {
    for (auto& q : c_) q *= s;
    return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
    if (!field_ || !o.field_) {
        field_.reset();
        c_.clear();
        return *this;  // zero
    }
    if (field_ != o.field_ && field_->modulus_low() != o.field_->modulus_low())
        throw std::invalid_argument("NumberFieldElement: mixed fields");
    const std::size_t d = field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    // reduce t^k for k >= d using t^d = -(c_0 + ... + c_{d-1} t^{d-1})
    const std::vector<Rational>& m = field_->modulus_low();
    for (std::size_t k = prod.size(); k-- > d;) {
        if (prod[k].is_zero()) continue;
        const Rational lead = prod[k];
        prod[k] = Rational(0);
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= lead * m[i];
    }
    prod.resize(d);
    c_ = std::move(prod);
    return *this;
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("NumberFieldElement: inverse of zero");
    const std::size_t d = field_->degree();
    // extended Euclid in Q[t] on (a, m): find u with u*a = 1 mod m
    std::vector<Rational> r0 = field_->modulus_low();
    r0.push_back(Rational(1));
    std::vector<Rational> r1 = c_;
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(r1);
    std::vector<std::vector<Rational>> u = {{}, {Rational(1)}};  // u0 = 0, u1 = 1 (coeffs of a-multiplier)
    auto sub_scaled = [&](std::vector<Rational> a, const std::vector<Rational>& b, const Rational& s,
                          std::size_t shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        return a;
    };
    while (true) {
        // divide r0 by r1
        std::vector<Rational> rem = r0;
        std::vector<Rational> q;  // quotient, low-to-high
        trim(rem);
        if (r1.empty()) throw std::logic_error("NumberFieldElement: gcd degenerated");
        while (rem.size() >= r1.size() && !rem.empty()) {
            const std::size_t shift = rem.size() - r1.size();
            const Rational s = rem.back() / r1.back();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += s;
            rem = sub_scaled(std::move(rem), r1, s, shift);
        }
        // u2 = u0 - q*u1
        std::vector<Rational> u2 = u[0];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            u2 = sub_scaled(std::move(u2), u[1], q[i], i);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u[0] = std::move(u[1]);
        u[1] = std::move(u2);
        if (r1.empty()) break;
    }
    // r0 is the gcd, a nonzero constant since m is irreducible
    if (r0.size() != 1)
        throw std::logic_error("NumberFieldElement: modulus not irreducible");
    std::vector<Rational> inv = u[0];
    inv.resize(d, Rational(0));
    for (auto& q : inv) q /= r0[0];
    return field_->element(std::move(inv));
}

NumberFieldElement& NumberFieldElement::operator/=(const NumberFieldElement& o) {
    return *this *= o.inverse();
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (!a.field_ || !b.field_) return a.is_zero() && b.is_zero();
    if (a.field_ != b.field_ && a.field_->modulus_low() != b.field_->modulus_low()) return false;
    return a.c_ == b.c_;
}

std::string NumberFieldElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        const Rational a = c_[i].abs();
        if (i == 0) os << a.to_string();
        else {
            if (a != Rational(1)) os << a.to_string() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace lefschetz::kernel
