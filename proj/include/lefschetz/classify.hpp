#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/apolar.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::cubics {

using kernel::Matrix;
using kernel::Rational;
using poly::Form;

enum class CubicLabel {
    Cone,
    PerazzoS12,
    SecantRnc,
    JoinConics,
    NonDevelopable,
    Unrecognized,
};

std::string to_string(CubicLabel label);

struct InvariantsRecord {
    bool is_cone = false;
    int vertex_dim = -1;
    bool hess_vanishes = false;
    std::optional<int> dual_dim;
    std::optional<int> stab_dim;
    std::vector<int> hilbert;
    std::string diagnostics;  // non-empty only for Unrecognized outcomes
};

struct CubicClass {
    CubicLabel label;
    InvariantsRecord invariants;
};

enum class CanonicalKind {
    PerazzoS12,  // x0*x3^2 + x1*x3*x4 + x2*x4^2
    SecantRnc,   // determinant of the 3x3 Hankel matrix in x0..x4
    JoinConics,  // join of conics in {x3=x4=0} and {x0=x1=0} through e2
    Fermat,      // x0^3 + ... + x4^3
};

Form canonical_form(CanonicalKind kind);

// Random cubic in 5 variables with small integer coefficients.
Form random_cubic(std::uint64_t seed);

// f composed with a seeded random invertible integer matrix.
Form random_pgl_conjugate(const Form& f, std::uint64_t seed);

// Dimension of { A in End(K^5) : D_A f in span(f) } where
// D_A f = sum_{i,j} A_ij x_i df/dx_j; one exact null-space computation.
int stabilizer_dimension(const Form& f);

// Thrown when no usable smooth point is found within the retry cap.
class LineSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// dim X* computed as rank(Hess_f(p)) - 2 at a point p cut out by a seeded
// random rational line; works in Q[t]/(m) when the restriction has no
// rational root. Retries on singular points, cap 20.
int dual_variety_dimension(const Form& f, std::uint64_t seed);

// Decision procedure: cone -> vanishing Hessian -> dual dimension ->
// stabilizer dimension. Never guesses: unexpected invariant combinations
// come back as Unrecognized with full diagnostics.
CubicClass classify(const Form& f, std::uint64_t seed);

}  // namespace lefschetz::cubics
