#include "lefschetz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lefschetz::poly {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t k) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (k == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    Monomial cur(nvars);
    // descending grlex = descending lex within the fixed degree
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
        if (var + 1 == nvars) {
            cur.exponents[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            cur.exponents[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur.exponents[var] = 0;
    };
    rec(rec, 0, k);
    return out;
}

std::size_t monomial_count(std::size_t nvars, std::uint32_t k) {
    // binom(nvars + k - 1, k)
    if (nvars == 0) return k == 0 ? 1 : 0;
    std::size_t n = nvars + k - 1, r = k, acc = 1;
    for (std::size_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
    if (i >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Monomial m(nvars);
    m.exponents[i] = power;
    return term(std::move(m), Rational(1));
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(std::max(a.nvars_, b.nvars_));
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(nvars_, Rational(1));
    for (std::uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponents[var];
        if (e == 0) continue;
        Monomial mm = m;
        mm.exponents[var] = e - 1;
        r.add_term(mm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_ && !is_zero())
        throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.exponents[i] > 0) t *= point[i].pow(m.exponents[i]);
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute_linear(const Matrix<Rational>& m) const {
    if (m.rows() != nvars_ || m.cols() != nvars_)
        throw std::invalid_argument("substitute_linear: matrix must be nvars x nvars");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        Polynomial li(nvars_);
        for (std::size_t j = 0; j < nvars_; ++j) {
            Monomial mj(nvars_);
            mj.exponents[j] = 1;
            li.add_term(mj, m(i, j));
        }
        images.push_back(std::move(li));
    }
    // cache powers of each image as needed
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto image_pow = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(nvars_, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial r(nvars_);
    for (const auto& [mono, c] : terms_) {
        Polynomial t = Polynomial::constant(nvars_, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (mono.exponents[i] > 0) t *= image_pow(i, mono.exponents[i]);
        r += t;
    }
    return r;
}

std::string Polynomial::to_string(char var_letter) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0)
            os << "-";
        const Rational a = c.abs();
        const bool constant_mono = m.degree() == 0;
        if (constant_mono) {
            os << a.to_string();
        } else {
            bool printed = false;
            if (a != Rational(1)) {
                os << a.to_string();
                printed = true;
            }
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m.exponents[i] == 0) continue;
                if (printed) os << "*";
                os << var_letter << i;
                if (m.exponents[i] > 1) os << "^" << m.exponents[i];
                printed = true;
            }
        }
        first = false;
    }
    return os.str();
}

Polynomial apply(const Polynomial& op, const Polynomial& f) {
    if (op.is_zero() || f.is_zero()) return Polynomial(std::max(op.nvars(), f.nvars()));
    if (op.nvars() != f.nvars()) throw std::invalid_argument("apply: nvars mismatch");
    Polynomial r(f.nvars());
    for (const auto& [a, ca] : op.terms()) {
        for (const auto& [b, cb] : f.terms()) {
            if (!a.divides(b)) continue;
            Rational factor(1);
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                for (std::uint32_t e = 0; e < a.exponents[i]; ++e)
                    factor *= Rational(static_cast<long>(b.exponents[i] - e));
            }
            r.add_term(b.quotient_by(a), ca * cb * factor);
        }
    }
    return r;
}

Form::Form(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero()) throw std::invalid_argument("Form: zero polynomial");
    if (!poly_.is_homogeneous()) throw std::invalid_argument("Form: not homogeneous");
    degree_ = poly_.total_degree();
    if (degree_ == 0) throw std::invalid_argument("Form: degree must be >= 1");
}

std::vector<Polynomial> gradient(const Form& f) {
    std::vector<Polynomial> g;
    g.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.poly().derivative(i));
    return g;
}

Matrix<Polynomial> hessian_matrix(const Form& f) {
    const std::size_t n = f.nvars();
    Matrix<Polynomial> h(n, n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial fi = f.poly().derivative(i);
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = fi.derivative(j);
            if (j != i) h(j, i) = h(i, j);
        }
    }
    return h;
}

}  // namespace lefschetz::poly
