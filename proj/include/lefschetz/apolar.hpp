#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::apolar {

using kernel::Matrix;
using kernel::Rational;
using poly::DiffOperator;
using poly::Form;
using poly::Monomial;
using poly::Polynomial;

// Partition of dim A into Jordan block sizes, non-increasing.
struct JordanType {
    std::vector<int> parts;

    int sum() const;
    JordanType conjugate() const;
    std::string to_string() const;  // e.g. "4^1 2^3 1^2"

    friend bool operator==(const JordanType& a, const JordanType& b) { return a.parts == b.parts; }
    friend bool operator!=(const JordanType& a, const JordanType& b) { return !(a == b); }
};

// a <= b in the dominance order (prefix sums of a never exceed those of b).
// Only defined for partitions of the same total.
bool dominance_leq(const JordanType& a, const JordanType& b);

// The graded Artinian Gorenstein algebra A_f = Q / Ann_f presented by
// catalecticant kernels. For each degree k <= d it stores the full list of
// degree-k dual monomials, the kernel of the catalecticant map Q_k -> R_{d-k}
// (a basis of (Ann_f)_k), and the lexicographically-first monomial subset
// whose classes form a basis of A_k.
class AGAlgebra {
public:
    static AGAlgebra build(const Form& f);

    const Form& form() const { return f_; }
    std::uint32_t socle_degree() const { return f_.degree(); }
    std::size_t nvars() const { return f_.nvars(); }

    const std::vector<int>& hilbert() const { return hilbert_; }
    int dim() const;  // sum of the Hilbert vector

    const std::vector<Monomial>& monomials(std::uint32_t k) const;
    const std::vector<std::size_t>& basis_indices(std::uint32_t k) const;
    const std::vector<std::vector<Rational>>& ann_kernel(std::uint32_t k) const;

private:
    explicit AGAlgebra(Form f) : f_(std::move(f)) {}

    Form f_;
    std::vector<int> hilbert_;
    std::vector<std::vector<Monomial>> monomials_;
    std::vector<std::vector<std::size_t>> basis_;
    std::vector<std::vector<std::vector<Rational>>> ann_;
};

// k-th Hessian over the stored basis of A_k: entries alpha_i(alpha_j(f)).
struct HessianRecord {
    std::uint32_t k;
    Matrix<Polynomial> matrix;
    Polynomial symbolic_det;
};

HessianRecord higher_hessian(const AGAlgebra& algebra, std::uint32_t k);

// True iff the ideal generated by the operators agrees with Ann_f in every
// degree <= max_degree (default d+1). Exact degreewise span comparison by
// linear algebra; no Groebner bases. Generators must be homogeneous.
bool ann_generators_match(const AGAlgebra& algebra, const std::vector<DiffOperator>& generators);
bool ann_generators_match(const AGAlgebra& algebra, const std::vector<DiffOperator>& generators,
                          std::uint32_t max_degree);

// hess^k(a) != 0 for every k <= floor(d/2); k = 0 is f(a) itself.
bool is_lefschetz_element(const AGAlgebra& algebra, std::span<const Rational> a);

struct SlpResult {
    bool holds;
    std::optional<std::vector<Rational>> witness;
};

// SLP holds iff every hess^k, k <= floor(d/2), is a nonzero polynomial. When
// it holds, a witness element is found by seeded search over small integer
// vectors.
SlpResult has_slp(const AGAlgebra& algebra, std::uint64_t seed);

// Matrix of multiplication by l = sum l_i X_i, restricted A_k -> A_{k+1},
// in the stored bases (size a_{k+1} x a_k).
Matrix<Rational> multiplication_matrix(const AGAlgebra& algebra, std::span<const Rational> l,
                                       std::uint32_t k);

// Jordan partition of multiplication by l on the whole of A, from ranks of
// powers of the nilpotent full matrix.
JordanType jordan_type(const AGAlgebra& algebra, std::span<const Rational> l);

// Thrown when seeded sampling cannot certify a dominance-maximal Jordan type.
class GenericJordanFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Jordan type for generic l: samples seeded integer vectors, returns the
// dominance-maximum; widens the sample on incomparability, up to 6 rounds.
JordanType generic_jordan_type(const AGAlgebra& algebra, std::uint64_t seed);

// (is cone, projective dimension of the vertex); vertex_dim = -1 for non-cones.
std::pair<bool, int> is_cone(const Form& f);

// det of the classical Hessian matrix is the zero polynomial (symbolic, exact).
bool has_vanishing_hessian(const Form& f);

}  // namespace lefschetz::apolar
