#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/rational.hpp"

namespace lefschetz::schubert {

using kernel::Rational;

// Grassmannian G(k, n) of k-dimensional subspaces of an n-dimensional space.
// G(1, n+1) is projective n-space.
struct GrassContext {
    int k;
    int n;

    int dim() const { return k * (n - k); }
    int qvars() const { return n - k; }  // rank of the tautological quotient

    friend bool operator==(const GrassContext& a, const GrassContext& b) {
        return a.k == b.k && a.n == b.n;
    }
};

// Weakly decreasing positive parts; indexes a Schubert class when it fits in
// the k x (n-k) box.
struct Partition {
    std::vector<int> parts;

    int weight() const;
    bool fits_in_box(const GrassContext& ctx) const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// Element of the Chow ring of G(k, n), written as a polynomial in the Chern
// classes q_1 .. q_{n-k} of the tautological quotient bundle (deg q_i = i),
// truncated above the top degree k(n-k).
class ChowClass {
public:
    // key: exponent vector over q_1..q_{n-k}
    using TermMap = std::map<std::vector<int>, Rational>;

    explicit ChowClass(GrassContext ctx) : ctx_(ctx) {}
    static ChowClass zero(GrassContext ctx) { return ChowClass(ctx); }
    static ChowClass one(GrassContext ctx);
    static ChowClass generator(GrassContext ctx, int i);  // q_i, 1 <= i <= n-k

    const GrassContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const Rational& c);
    static int weighted_degree(const std::vector<int>& exps);

    // true when every term has the same weighted degree g (zero passes)
    bool is_homogeneous_of(int g) const;
    ChowClass graded_part(int g) const;

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    ChowClass& operator*=(const ChowClass& o) { return *this = *this * o; }
    friend ChowClass operator*(ChowClass a, const Rational& s);
    ChowClass pow(int e) const;

    // multiplicative inverse of a class with constant term 1, truncated
    ChowClass inverse_unit() const;

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    GrassContext ctx_;
    TermMap terms_;
};

// Rank plus total Chern class; rank may be negative for virtual differences.
struct BundleClass {
    GrassContext ctx;
    int rank;
    ChowClass total_chern;

    ChowClass chern(int i) const { return total_chern.graded_part(i); }
};

// (S, Q) from the tautological sequence 0 -> S -> O^n -> Q -> 0:
// c(Q) = 1 + q_1 + ... + q_{n-k}, c(S) = c(Q)^{-1} truncated.
std::pair<BundleClass, BundleClass> tautological_bundles(GrassContext ctx);

BundleClass dual(const BundleClass& b);                       // c_i -> (-1)^i c_i
BundleClass sum(const BundleClass& a, const BundleClass& b);  // Whitney product
BundleClass difference(const BundleClass& a, const BundleClass& b);
BundleClass scale(const BundleClass& b, int copies);  // b ^ (+copies)

// Splitting-principle constructions; rank(b) <= 4 and d in {1, 2, 3}.
BundleClass sym_power(int d, const BundleClass& b);
BundleClass ext_power(int d, const BundleClass& b);
// b tensor a line bundle, via c_k(F (x) L) = sum binom(r-i, k-i) c_i(F) c_1(L)^{k-i}
BundleClass tensor_line(const BundleClass& b, const BundleClass& line);
// b (x) b via Chern roots (used by the splitting-consistency checks)
BundleClass tensor_square(const BundleClass& b);

// Formal inverse of the total Chern class, truncated at the top degree.
ChowClass segre(const BundleClass& b);

// Integral over G(k, n): expands the top-degree component into the Schubert
// basis by iterated Pieri multiplication and returns the coefficient of the
// full-box class. Exact; the result of any integral computed from integer
// Chern data is an integer.
mpz_class integral(const ChowClass& c);

// Schubert class sigma_lambda as a q-polynomial (Giambelli determinant).
ChowClass schur_class(GrassContext ctx, const Partition& lambda);

struct LocusInfo {
    int dim;
    mpz_class degree;
};

// Thrown when the Segre-class route and the closed binomial formula disagree.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Degree of the locus of degree-d cones in the space of degree-d
// hypersurfaces of P^n, via s_n(Sym^d P*) on P^n, cross-checked against
// binom(binom(n+d-1, n), n). Supported: 1 <= n <= 4, 1 <= d <= 3.
mpz_class degree_cone_locus(int n, int d);
// same degree, with the locus dimension n + rank(Sym^d P*) - 1
LocusInfo cone_locus_info(int n, int d);

// (dim, degree) of the locus of cubics in P^4 lying doubly on a 2-plane
// (equivalently, closure of the vanishing-Hessian non-cones): (18, 29960).
LocusInfo vanishing_hessian_locus();

// (dim, degree) of its intersection with the cone locus: (17, 116420).
LocusInfo intersection_locus();

}  // namespace lefschetz::schubert
