#include "lefschetz/classify.hpp"

#include <random>
#include <sstream>

#include "lefschetz/number_field.hpp"
#include "lefschetz/parser.hpp"

namespace lefschetz::cubics {

using kernel::NumberField;
using kernel::NumberFieldElement;
using poly::Monomial;
using poly::Polynomial;

namespace {

long bounded(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// rank of the Hessian of f at a point with entries in any field K
template <typename K>
std::size_t hessian_rank_at(const Form& f, const std::vector<K>& point, const K& one) {
    const Matrix<Polynomial> h = poly::hessian_matrix(f);
    Matrix<K> hv(h.rows(), h.cols(), one - one);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            hv(i, j) = h(i, j).template evaluate_in<K>(point, one);
    return kernel::rank(hv);
}

template <typename K>
bool gradient_nonzero_at(const Form& f, const std::vector<K>& point, const K& one) {
    for (const Polynomial& fi : poly::gradient(f))
        if (!fi.template evaluate_in<K>(point, one).is_zero()) return true;
    return false;
}

}  // namespace

std::string to_string(CubicLabel label) {
    switch (label) {
        case CubicLabel::Cone: return "CONE";
        case CubicLabel::PerazzoS12: return "PERAZZO_S12";
        case CubicLabel::SecantRnc: return "SECANT_RNC";
        case CubicLabel::JoinConics: return "JOIN_CONICS";
        case CubicLabel::NonDevelopable: return "NON_DEVELOPABLE";
        case CubicLabel::Unrecognized: return "UNRECOGNIZED";
    }
    return "UNRECOGNIZED";
}

Form canonical_form(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::PerazzoS12:
            return Form(poly::parse_polynomial("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5));
        case CanonicalKind::SecantRnc: {
            // det of the Hankel matrix [[x0,x1,x2],[x1,x2,x3],[x2,x3,x4]]
            Matrix<Polynomial> hk(3, 3, Polynomial(5));
            const std::size_t idx[3][3] = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    hk(i, j) = Polynomial::variable(5, idx[i][j]);
            return Form(kernel::det_cofactor(hk));
        }
        case CanonicalKind::JoinConics:
            // join of C1 = {(s^2 : st : t^2 : 0 : 0)} and C2 = {(0 : 0 : u^2 : uv : v^2)},
            // meeting at e2; cubic equation of the union of connecting lines
            return Form(poly::parse_polynomial("x0*x2*x4 - x1^2*x4 - x0*x3^2", 5));
        case CanonicalKind::Fermat:
            return Form(poly::parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3", 5));
    }
    throw std::invalid_argument("canonical_form: unknown kind");
}

Form random_cubic(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        Polynomial p(5);
        for (const Monomial& m : poly::monomials_of_degree(5, 3))
            p.add_term(m, Rational(bounded(rng, -5, 5)));
        if (!p.is_zero()) return Form(std::move(p));
    }
}

Form random_pgl_conjugate(const Form& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = f.nvars();
    while (true) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(bounded(rng, -3, 3));
        if (kernel::det_bareiss(m).is_zero()) continue;
        return Form(f.poly().substitute_linear(m));
    }
}

int stabilizer_dimension(const Form& f) {
    const std::size_t n = f.nvars();
    const std::vector<Polynomial> grad = poly::gradient(f);
    const std::vector<Monomial> rows = poly::monomials_of_degree(n, f.degree());
    // unknowns: A_ij (n^2 of them) then lambda
    Matrix<Rational> sys(rows.size(), n * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial xi = Polynomial::variable(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial pij = xi * grad[j];
            for (std::size_t r = 0; r < rows.size(); ++r)
                sys(r, i * n + j) = pij.coefficient(rows[r]);
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
        sys(r, n * n) = -f.poly().coefficient(rows[r]);
    const std::size_t nullity = (n * n + 1) - kernel::rank(sys);
    // the projection (A, lambda) -> A is injective because f != 0 pins lambda
    return static_cast<int>(nullity);
}

int dual_variety_dimension(const Form& f, std::uint64_t seed) {
    if (f.nvars() != 5 || f.degree() != 3)
        throw std::invalid_argument("dual_variety_dimension: expects a cubic in 5 variables");
    std::mt19937_64 rng(seed);
    // The Hessian rank on X is upper-semicontinuous, so its value at a
    // general smooth point is the maximum over smooth points. Sampling a few
    // independent lines and keeping the largest rank makes the result immune
    // to a line accidentally meeting a special locus of X.
    std::size_t best_rank = 0;
    int points_seen = 0;
    for (int attempt = 0; attempt < 20 && points_seen < 3; ++attempt) {
        const long bound = 7 + attempt / 5;
        std::vector<Rational> p(5), q(5);
        for (auto& c : p) c = Rational(bounded(rng, -bound, bound));
        for (auto& c : q) c = Rational(bounded(rng, -bound, bound));
        // restrict f to the line p + t q: a univariate cubic in t, recovered
        // exactly from four sample values by solving the Vandermonde system
        std::vector<Rational> m(4, Rational(0));
        {
            Matrix<Rational> vand(4, 4);
            Matrix<Rational> vals(4, 1);
            for (long t = 0; t < 4; ++t) {
                Rational tt(t);
                std::vector<Rational> pt(5);
                for (std::size_t i = 0; i < 5; ++i) pt[i] = p[i] + tt * q[i];
                vals(t, 0) = f.poly().evaluate(pt);
                Rational pw(1);
                for (std::size_t j = 0; j < 4; ++j) {
                    vand(t, j) = pw;
                    pw *= tt;
                }
            }
            const auto sol = kernel::solve(vand, vals);
            for (std::size_t i = 0; i < 4; ++i) m[i] = (*sol)(i, 0);
        }
        bool all_zero = true;
        for (const auto& c : m)
            if (!c.is_zero()) all_zero = false;
        if (all_zero) continue;  // line lies inside V(f)

        // prefer a rational root of the restriction when one exists
        const std::vector<Rational> roots = kernel::rational_roots(m);
        bool used_line = false;
        for (const Rational& t0 : roots) {
            std::vector<Rational> pt(5);
            for (std::size_t i = 0; i < 5; ++i) pt[i] = p[i] + t0 * q[i];
            bool nonzero_pt = false;
            for (const auto& c : pt)
                if (!c.is_zero()) nonzero_pt = true;
            if (!nonzero_pt) continue;
            if (!gradient_nonzero_at<Rational>(f, pt, Rational(1))) continue;
            best_rank = std::max(best_rank, hessian_rank_at<Rational>(f, pt, Rational(1)));
            used_line = true;
            break;  // one point per line; fresh lines give independent samples
        }
        if (used_line) {
            ++points_seen;
            continue;
        }
        if (!roots.empty()) continue;  // only singular rational intersections: new line

        // no rational root: the monic normalization is irreducible (degree 2 or 3)
        std::vector<Rational> mm = m;
        while (!mm.empty() && mm.back().is_zero()) mm.pop_back();
        if (mm.size() < 3) continue;  // nonzero constant restriction: degenerate line
        const Rational lead = mm.back();
        std::vector<Rational> low(mm.size() - 1);
        for (std::size_t i = 0; i + 1 < mm.size(); ++i) low[i] = mm[i] / lead;
        const std::shared_ptr<const NumberField> field = NumberField::create(low);
        const NumberFieldElement theta = field->generator();
        const NumberFieldElement one = field->one();
        std::vector<NumberFieldElement> pt(5);
        for (std::size_t i = 0; i < 5; ++i)
            pt[i] = field->from_rational(p[i]) + theta * q[i];
        if (!gradient_nonzero_at<NumberFieldElement>(f, pt, one)) continue;
        best_rank = std::max(best_rank, hessian_rank_at<NumberFieldElement>(f, pt, one));
        ++points_seen;
    }
    if (points_seen == 0)
        throw LineSearchError("dual_variety_dimension: no smooth point found in 20 attempts");
    return static_cast<int>(best_rank) - 2;
}

CubicClass classify(const Form& f, std::uint64_t seed) {
    if (f.nvars() != 5 || f.degree() != 3)
        throw std::invalid_argument("classify: expects a nonzero cubic in 5 variables");
    InvariantsRecord rec;
    rec.hilbert = apolar::AGAlgebra::build(f).hilbert();

    const auto [cone, vertex_dim] = apolar::is_cone(f);
    rec.is_cone = cone;
    rec.vertex_dim = vertex_dim;
    if (cone) {
        rec.hess_vanishes = true;  // a cone always has vanishing Hessian
        return {CubicLabel::Cone, rec};
    }

    rec.hess_vanishes = apolar::has_vanishing_hessian(f);
    if (rec.hess_vanishes) return {CubicLabel::PerazzoS12, rec};

    try {
        rec.dual_dim = dual_variety_dimension(f, seed);
    } catch (const LineSearchError& e) {
        rec.diagnostics = e.what();
        return {CubicLabel::Unrecognized, rec};
    }
    if (*rec.dual_dim >= 3) return {CubicLabel::NonDevelopable, rec};

    rec.stab_dim = stabilizer_dimension(f);
    if (*rec.stab_dim == 4) return {CubicLabel::SecantRnc, rec};
    if (*rec.stab_dim == 5) return {CubicLabel::JoinConics, rec};

    std::ostringstream os;
    os << "developable cubic with unexpected stabilizer dimension " << *rec.stab_dim;
    rec.diagnostics = os.str();
    return {CubicLabel::Unrecognized, rec};
}

}  // namespace lefschetz::cubics
