#include "lefschetz/apolar.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lefschetz::apolar {

namespace {

// coefficient row of g over the given monomial list
std::vector<Rational> coeff_row(const Polynomial& g, const std::vector<Monomial>& basis) {
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const auto& m : basis) row.push_back(g.coefficient(m));
    return row;
}

Matrix<Rational> rows_to_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix<Rational> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

// deterministic bounded integer from a seeded engine (avoids the
// implementation-defined std::uniform_int_distribution)
long bounded(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

std::vector<Rational> random_int_vector(std::mt19937_64& rng, std::size_t n, long bound) {
    std::vector<Rational> v(n, Rational(0));
    bool nonzero = false;
    while (!nonzero) {
        for (auto& x : v) {
            long val = bounded(rng, -bound, bound);
            x = Rational(val);
            nonzero = nonzero || val != 0;
        }
    }
    return v;
}

Polynomial linear_form(std::span<const Rational> l) {
    Polynomial p(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        Monomial m(l.size());
        m.exponents[i] = 1;
        p.add_term(m, l[i]);
    }
    return p;
}

}  // namespace

int JordanType::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

JordanType JordanType::conjugate() const {
    JordanType c;
    if (parts.empty()) return c;
    for (int col = 1; col <= parts.front(); ++col) {
        int cnt = 0;
        for (int p : parts)
            if (p >= col) ++cnt;
        c.parts.push_back(cnt);
    }
    return c;
}

std::string JordanType::to_string() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!first) os << " ";
        os << parts[i] << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

bool dominance_leq(const JordanType& a, const JordanType& b) {
    if (a.sum() != b.sum()) throw std::invalid_argument("dominance order: different totals");
    int pa = 0, pb = 0;
    const std::size_t n = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < n; ++i) {
        pa += i < a.parts.size() ? a.parts[i] : 0;
        pb += i < b.parts.size() ? b.parts[i] : 0;
        if (pa > pb) return false;
    }
    return true;
}

AGAlgebra AGAlgebra::build(const Form& f) {
    AGAlgebra a(f);
    const std::uint32_t d = f.degree();
    const std::size_t n = f.nvars();
    a.monomials_.resize(d + 1);
    a.basis_.resize(d + 1);
    a.ann_.resize(d + 1);
    a.hilbert_.resize(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) {
        a.monomials_[k] = poly::monomials_of_degree(n, k);
        const std::vector<Monomial> targets = poly::monomials_of_degree(n, d - k);
        // catalecticant: rows = target monomials, cols = operator monomials
        Matrix<Rational> cat(targets.size(), a.monomials_[k].size());
        for (std::size_t c = 0; c < a.monomials_[k].size(); ++c) {
            const Polynomial img = poly::apply(Polynomial::term(a.monomials_[k][c], Rational(1)),
                                               f.poly());
            for (std::size_t r = 0; r < targets.size(); ++r) cat(r, c) = img.coefficient(targets[r]);
        }
        Matrix<Rational> red = cat;
        const std::vector<std::size_t> pivots = kernel::rref_in_place(red);
        // pivot columns, scanned in monomial order, are the lexicographically
        // first independent subset
        a.basis_[k] = pivots;
        a.hilbert_[k] = static_cast<int>(pivots.size());
        a.ann_[k] = kernel::kernel_basis(cat);
    }
    return a;
}

int AGAlgebra::dim() const {
    int s = 0;
    for (int h : hilbert_) s += h;
    return s;
}

const std::vector<Monomial>& AGAlgebra::monomials(std::uint32_t k) const {
    if (k >= monomials_.size()) throw std::out_of_range("AGAlgebra: degree out of range");
    return monomials_[k];
}

const std::vector<std::size_t>& AGAlgebra::basis_indices(std::uint32_t k) const {
    if (k >= basis_.size()) throw std::out_of_range("AGAlgebra: degree out of range");
    return basis_[k];
}

const std::vector<std::vector<Rational>>& AGAlgebra::ann_kernel(std::uint32_t k) const {
    if (k >= ann_.size()) throw std::out_of_range("AGAlgebra: degree out of range");
    return ann_[k];
}

HessianRecord higher_hessian(const AGAlgebra& algebra, std::uint32_t k) {
    if (k > algebra.socle_degree() / 2)
        throw std::invalid_argument("higher_hessian: k must be <= d/2");
    const auto& monos = algebra.monomials(k);
    const auto& basis = algebra.basis_indices(k);
    const std::size_t s = basis.size();
    const std::size_t n = algebra.nvars();
    Matrix<Polynomial> h(s, s, Polynomial(n));
    for (std::size_t i = 0; i < s; ++i) {
        const Polynomial gi = poly::apply(Polynomial::term(monos[basis[i]], Rational(1)),
                                          algebra.form().poly());
        for (std::size_t j = i; j < s; ++j) {
            Polynomial entry = poly::apply(Polynomial::term(monos[basis[j]], Rational(1)), gi);
            h(i, j) = entry;
            if (j != i) h(j, i) = std::move(entry);
        }
    }
    HessianRecord rec{k, h, kernel::det_cofactor(h)};
    return rec;
}

bool ann_generators_match(const AGAlgebra& algebra, const std::vector<DiffOperator>& generators) {
    return ann_generators_match(algebra, generators, algebra.socle_degree() + 1);
}

bool ann_generators_match(const AGAlgebra& algebra, const std::vector<DiffOperator>& generators,
                          std::uint32_t max_degree) {
    const std::uint32_t d = algebra.socle_degree();
    const std::size_t n = algebra.nvars();
    for (const auto& g : generators) {
        if (g.poly.is_zero() || !g.poly.is_homogeneous())
            throw std::invalid_argument("ann_generators_match: generators must be homogeneous and nonzero");
        if (g.poly.nvars() != n)
            throw std::invalid_argument("ann_generators_match: nvars mismatch");
    }
    for (std::uint32_t k = 0; k <= max_degree; ++k) {
        const std::vector<Monomial> monos = poly::monomials_of_degree(n, k);
        // span generated by the ideal at degree k
        std::vector<std::vector<Rational>> gen_rows;
        for (const auto& g : generators) {
            const std::uint32_t dg = g.poly.total_degree();
            if (dg > k) continue;
            for (const auto& m : poly::monomials_of_degree(n, k - dg))
                gen_rows.push_back(coeff_row(Polynomial::term(m, Rational(1)) * g.poly, monos));
        }
        // annihilator span at degree k
        std::vector<std::vector<Rational>> ann_rows;
        if (k <= d) {
            ann_rows = algebra.ann_kernel(k);
        } else {
            for (std::size_t i = 0; i < monos.size(); ++i) {
                std::vector<Rational> e(monos.size(), Rational(0));
                e[i] = Rational(1);
                ann_rows.push_back(std::move(e));
            }
        }
        const std::size_t rg = gen_rows.empty() ? 0 : kernel::rank(rows_to_matrix(gen_rows, monos.size()));
        const std::size_t ra = ann_rows.empty() ? 0 : kernel::rank(rows_to_matrix(ann_rows, monos.size()));
        if (rg != ra) return false;
        std::vector<std::vector<Rational>> stacked = gen_rows;
        stacked.insert(stacked.end(), ann_rows.begin(), ann_rows.end());
        const std::size_t rs = stacked.empty() ? 0 : kernel::rank(rows_to_matrix(stacked, monos.size()));
        if (rs != ra) return false;
    }
    return true;
}

bool is_lefschetz_element(const AGAlgebra& algebra, std::span<const Rational> a) {
    if (a.size() != algebra.nvars())
        throw std::invalid_argument("is_lefschetz_element: wrong vector length");
    const std::uint32_t half = algebra.socle_degree() / 2;
    for (std::uint32_t k = 0; k <= half; ++k) {
        const HessianRecord rec = higher_hessian(algebra, k);
        if (rec.symbolic_det.evaluate(a).is_zero()) return false;
    }
    return true;
}

SlpResult has_slp(const AGAlgebra& algebra, std::uint64_t seed) {
    const std::uint32_t half = algebra.socle_degree() / 2;
    std::vector<Polynomial> dets;
    for (std::uint32_t k = 0; k <= half; ++k) {
        Polynomial det = higher_hessian(algebra, k).symbolic_det;
        if (det.is_zero()) return {false, std::nullopt};
        dets.push_back(std::move(det));
    }
    // all determinants are nonzero polynomials: a witness exists; search small
    // integer vectors with a widening range
    std::mt19937_64 rng(seed);
    long bound = 1;
    for (int attempt = 0; attempt < 400; ++attempt) {
        if (attempt > 0 && attempt % 25 == 0) bound *= 2;
        const std::vector<Rational> a = random_int_vector(rng, algebra.nvars(), bound);
        bool good = true;
        for (const auto& det : dets)
            if (det.evaluate(a).is_zero()) {
                good = false;
                break;
            }
        if (good) return {true, a};
    }
    throw std::logic_error("has_slp: witness search failed despite nonzero Hessians");
}

Matrix<Rational> multiplication_matrix(const AGAlgebra& algebra, std::span<const Rational> l,
                                       std::uint32_t k) {
    if (k >= algebra.socle_degree())
        throw std::invalid_argument("multiplication_matrix: k must be < socle degree");
    if (l.size() != algebra.nvars())
        throw std::invalid_argument("multiplication_matrix: wrong vector length");
    const auto& src_monos = algebra.monomials(k);
    const auto& src_basis = algebra.basis_indices(k);
    const auto& dst_monos = algebra.monomials(k + 1);
    const auto& dst_basis = algebra.basis_indices(k + 1);
    const auto& dst_kernel = algebra.ann_kernel(k + 1);
    const std::size_t dst_dim = dst_monos.size();

    // Q_{k+1} = span(basis monomials) + (Ann_f)_{k+1}; solve for coordinates
    // of each product in that decomposition, keeping only the basis block.
    Matrix<Rational> decomp(dst_dim, dst_dim);
    for (std::size_t j = 0; j < dst_basis.size(); ++j) decomp(dst_basis[j], j) = Rational(1);
    for (std::size_t j = 0; j < dst_kernel.size(); ++j)
        for (std::size_t i = 0; i < dst_dim; ++i)
            decomp(i, dst_basis.size() + j) = dst_kernel[j][i];

    const Polynomial lf = linear_form(l);
    Matrix<Rational> rhs(dst_dim, src_basis.size());
    for (std::size_t j = 0; j < src_basis.size(); ++j) {
        const Polynomial prod = lf * Polynomial::term(src_monos[src_basis[j]], Rational(1));
        for (std::size_t i = 0; i < dst_dim; ++i) rhs(i, j) = prod.coefficient(dst_monos[i]);
    }
    const auto sol = kernel::solve(decomp, rhs);
    if (!sol) throw std::logic_error("multiplication_matrix: basis decomposition is singular");
    Matrix<Rational> out(dst_basis.size(), src_basis.size());
    for (std::size_t i = 0; i < dst_basis.size(); ++i)
        for (std::size_t j = 0; j < src_basis.size(); ++j) out(i, j) = (*sol)(i, j);
    return out;
}

JordanType jordan_type(const AGAlgebra& algebra, std::span<const Rational> l) {
    const std::uint32_t d = algebra.socle_degree();
    const int dim = algebra.dim();
    // offsets of each graded block inside the full matrix
    std::vector<std::size_t> offset(d + 2, 0);
    for (std::uint32_t k = 0; k <= d; ++k)
        offset[k + 1] = offset[k] + algebra.basis_indices(k).size();

    Matrix<Rational> full(dim, dim);
    for (std::uint32_t k = 0; k < d; ++k) {
        const Matrix<Rational> blk = multiplication_matrix(algebra, l, k);
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                full(offset[k + 1] + i, offset[k] + j) = blk(i, j);
    }

    std::vector<int> ranks = {dim};  // rank of M^0
    Matrix<Rational> power = Matrix<Rational>::identity(dim);
    while (ranks.back() != 0) {
        power = power * full;
        ranks.push_back(static_cast<int>(kernel::rank(power)));
    }
    JordanType jt;
    const std::size_t nil = ranks.size() - 1;  // M^nil = 0
    for (std::size_t j = nil; j >= 1; --j) {
        const int blocks_ge_j = ranks[j - 1] - ranks[j];
        const int blocks_ge_j1 = j < nil ? ranks[j] - ranks[j + 1] : 0;
        const int exactly_j = blocks_ge_j - blocks_ge_j1;
        for (int c = 0; c < exactly_j; ++c) jt.parts.push_back(static_cast<int>(j));
    }
    std::sort(jt.parts.rbegin(), jt.parts.rend());
    return jt;
}

JordanType generic_jordan_type(const AGAlgebra& algebra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long bound = 5;
    std::size_t samples = 3;
    for (int round = 0; round < 6; ++round) {
        std::vector<JordanType> found;
        for (std::size_t s = 0; s < samples; ++s)
            found.push_back(jordan_type(algebra, random_int_vector(rng, algebra.nvars(), bound)));
        // a sample that dominates all others is the certified generic type
        for (const auto& cand : found) {
            bool dominates_all = true;
            for (const auto& other : found)
                if (!dominance_leq(other, cand)) {
                    dominates_all = false;
                    break;
                }
            if (dominates_all) return cand;
        }
        bound *= 2;
        samples += 2;
    }
    throw GenericJordanFailure("generic_jordan_type: no dominance-maximal sample after 6 rounds");
}

std::pair<bool, int> is_cone(const Form& f) {
    const std::vector<Polynomial> g = gradient(f);
    const std::vector<Monomial> targets = poly::monomials_of_degree(f.nvars(), f.degree() - 1);
    Matrix<Rational> cat(targets.size(), g.size());
    for (std::size_t c = 0; c < g.size(); ++c)
        for (std::size_t r = 0; r < targets.size(); ++r) cat(r, c) = g[c].coefficient(targets[r]);
    const std::size_t nullity = g.size() - kernel::rank(cat);
    return {nullity > 0, static_cast<int>(nullity) - 1};
}

bool has_vanishing_hessian(const Form& f) {
    return kernel::det_cofactor(poly::hessian_matrix(f)).is_zero();
}

}  // namespace lefschetz::apolar
