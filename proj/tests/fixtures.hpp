#pragma once

// Shared test fixtures. The *_mini builders construct oracle polynomials by
// hand so derivations stay independent of the library's parser and types;
// to_mini only copies term data when an oracle needs a library-built input.

#include "lefschetz/classify.hpp"
#include "lefschetz/parser.hpp"
#include "oracle.hpp"

namespace fixtures {

using lefschetz::poly::Form;

inline Form perazzo() { return lefschetz::cubics::canonical_form(lefschetz::cubics::CanonicalKind::PerazzoS12); }
inline Form fermat() { return lefschetz::cubics::canonical_form(lefschetz::cubics::CanonicalKind::Fermat); }
inline Form secant_rnc() { return lefschetz::cubics::canonical_form(lefschetz::cubics::CanonicalKind::SecantRnc); }
inline Form join_conics() { return lefschetz::cubics::canonical_form(lefschetz::cubics::CanonicalKind::JoinConics); }

// x0*x3^2 + x1*x3*x4 + x2*x4^2
inline oracle::MiniPoly perazzo_mini() {
    oracle::MiniPoly f;
    f.nvars = 5;
    f.add({1, 0, 0, 2, 0}, 1);
    f.add({0, 1, 0, 1, 1}, 1);
    f.add({0, 0, 1, 0, 2}, 1);
    return f;
}

inline oracle::MiniPoly fermat_mini() {
    oracle::MiniPoly f;
    f.nvars = 5;
    f.add({3, 0, 0, 0, 0}, 1);
    f.add({0, 3, 0, 0, 0}, 1);
    f.add({0, 0, 3, 0, 0}, 1);
    f.add({0, 0, 0, 3, 0}, 1);
    f.add({0, 0, 0, 0, 3}, 1);
    return f;
}

// x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3 (Hankel determinant)
inline oracle::MiniPoly secant_rnc_mini() {
    oracle::MiniPoly f;
    f.nvars = 5;
    f.add({1, 0, 1, 0, 1}, 1);
    f.add({1, 0, 0, 2, 0}, -1);
    f.add({0, 2, 0, 0, 1}, -1);
    f.add({0, 1, 1, 1, 0}, 2);
    f.add({0, 0, 3, 0, 0}, -1);
    return f;
}

// x0*x2*x4 - x1^2*x4 - x0*x3^2
inline oracle::MiniPoly join_conics_mini() {
    oracle::MiniPoly f;
    f.nvars = 5;
    f.add({1, 0, 1, 0, 1}, 1);
    f.add({0, 2, 0, 0, 1}, -1);
    f.add({1, 0, 0, 2, 0}, -1);
    return f;
}

// term-data copy (no algorithm reuse) for oracles that need a library input
inline oracle::MiniPoly to_mini(const lefschetz::poly::Polynomial& p) {
    oracle::MiniPoly f;
    f.nvars = p.nvars();
    for (const auto& [m, c] : p.terms()) {
        oracle::Expo e(m.exponents.begin(), m.exponents.end());
        f.add(e, mpq_class(c.num(), c.den()));
    }
    return f;
}

inline std::vector<lefschetz::kernel::Rational> rat_vec(std::initializer_list<long> xs) {
    std::vector<lefschetz::kernel::Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline oracle::Vec mini_vec(std::initializer_list<long> xs) {
    oracle::Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace fixtures
