#pragma once

#include <cstdint>
#include <vector>

namespace lefschetz::poly {

// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t nvars() const { return exponents.size(); }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (std::uint32_t e : exponents) d += e;
        return d;
    }

    bool divides(const Monomial& o) const {
        if (nvars() != o.nvars()) return false;
        for (std::size_t i = 0; i < nvars(); ++i)
            if (exponents[i] > o.exponents[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < nvars(); ++i) r.exponents[i] += o.exponents[i];
        return r;
    }

    // exponentwise difference; requires divides(o) == false the other way round
    Monomial quotient_by(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < nvars(); ++i) r.exponents[i] -= o.exponents[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

// Graded lexicographic order with x0 > x1 > ...: higher total degree first,
// ties broken at the leftmost differing exponent (larger wins).
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.nvars() && i < b.nvars(); ++i)
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
    return a.nvars() > b.nvars();
}

// Comparator putting the grlex-largest monomial first; map iteration order is
// the canonical (descending) term order used for serialization.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// All degree-k monomials in nvars variables, in descending graded-lex order
// (x0^k first). This listing order fixes every basis choice downstream.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t k);

std::size_t monomial_count(std::size_t nvars, std::uint32_t k);

}  // namespace lefschetz::poly
