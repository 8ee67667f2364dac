#include "lefschetz/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::schubert {

using kernel::Matrix;
using poly::Monomial;
using poly::Polynomial;

namespace {

mpz_class binom(long n, long r) {
    if (r < 0 || r > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

// product truncated at total degree maxdeg
Polynomial mul_trunc(const Polynomial& a, const Polynomial& b, std::uint32_t maxdeg) {
    Polynomial r(std::max(a.nvars(), b.nvars()));
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.degree() + mb.degree() > maxdeg) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

// i-th elementary symmetric polynomial in r variables
Polynomial elementary_symmetric(std::size_t r, std::size_t i) {
    Polynomial p(r);
    if (i == 0) return Polynomial::constant(r, Rational(1));
    std::vector<std::size_t> idx(i);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == i) {
            Monomial m(r);
            for (std::size_t v : idx) m.exponents[v] = 1;
            p.add_term(m, Rational(1));
            return;
        }
        for (std::size_t v = start; v < r; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return p;
}

// Rewrite a homogeneous symmetric polynomial in r root variables as a
// polynomial in the elementary symmetrics, by leading-term subtraction.
// Returns exponent vectors over e_1..e_r with rational coefficients.
std::map<std::vector<int>, Rational> symmetric_to_elementary(Polynomial p, std::size_t r) {
    std::map<std::vector<int>, Rational> out;
    std::vector<Polynomial> elem;
    for (std::size_t i = 0; i <= r; ++i) elem.push_back(elementary_symmetric(r, i));
    while (!p.is_zero()) {
        // copy before subtracting: p's term map is about to change
        const Monomial lead = p.terms().begin()->first;
        const Rational coef = p.terms().begin()->second;
        std::vector<int> eexp(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint32_t ai = lead.exponents[i];
            const std::uint32_t an = i + 1 < r ? lead.exponents[i + 1] : 0;
            if (an > ai)
                throw std::logic_error("symmetric_to_elementary: input is not symmetric");
            eexp[i] = static_cast<int>(ai - an);
        }
        Polynomial prod = Polynomial::constant(r, coef);
        for (std::size_t i = 0; i < r; ++i)
            for (int c = 0; c < eexp[i]; ++c) prod *= elem[i + 1];
        p -= prod;
        out[eexp] += coef;
        if (out[eexp].is_zero()) out.erase(eexp);
    }
    return out;
}

// Total Chern class of a bundle built from b by the splitting principle:
// each row of `forms` gives the root-coefficients of one Chern root of the
// new bundle; the product of (1 + root) is re-expressed in c_i(b).
ChowClass chern_from_roots(const BundleClass& b, const std::vector<std::vector<int>>& forms) {
    const std::size_t r = static_cast<std::size_t>(b.rank);
    const std::uint32_t maxdeg = static_cast<std::uint32_t>(b.ctx.dim());
    Polynomial prod = Polynomial::constant(r, Rational(1));
    for (const auto& form : forms) {
        Polynomial factor = Polynomial::constant(r, Rational(1));
        for (std::size_t i = 0; i < r; ++i) {
            if (form[i] == 0) continue;
            Monomial m(r);
            m.exponents[i] = 1;
            factor.add_term(m, Rational(form[i]));
        }
        prod = mul_trunc(prod, factor, maxdeg);
    }
    ChowClass total = ChowClass::one(b.ctx);
    for (std::uint32_t g = 1; g <= maxdeg; ++g) {
        Polynomial comp(r);
        for (const auto& [m, c] : prod.terms())
            if (m.degree() == g) comp.add_term(m, c);
        if (comp.is_zero()) continue;
        for (const auto& [eexp, coef] : symmetric_to_elementary(std::move(comp), r)) {
            ChowClass term = ChowClass::one(b.ctx) * coef;
            for (std::size_t i = 0; i < r; ++i)
                if (eexp[i] > 0) term *= b.chern(static_cast<int>(i) + 1).pow(eexp[i]);
            total += term;
        }
    }
    return total;
}

void require_root_rank(const BundleClass& b, int d) {
    if (b.rank < 1 || b.rank > 4)
        throw std::invalid_argument("splitting principle: rank must be between 1 and 4");
    if (d < 1 || d > 3) throw std::invalid_argument("splitting principle: power must be 1, 2 or 3");
}

// horizontal-strip additions of size `amount` to lambda inside the box
void pieri_step(const GrassContext& ctx, const std::vector<int>& lambda, int amount,
                std::vector<std::vector<int>>& out) {
    const int rows = ctx.k;
    const int width = ctx.n - ctx.k;
    std::vector<int> mu(rows, 0);
    auto part = [&](int j) { return j < static_cast<int>(lambda.size()) ? lambda[j] : 0; };
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) {
                std::vector<int> trimmed = mu;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                out.push_back(std::move(trimmed));
            }
            return;
        }
        const int lo = part(row);
        const int hi = row == 0 ? width : std::min(width, part(row - 1));
        for (int v = lo; v <= hi; ++v) {
            if (v - lo > remaining) break;
            mu[row] = v;
            self(self, row + 1, remaining - (v - lo));
        }
        mu[row] = 0;
    };
    rec(rec, 0, amount);
}

}  // namespace

int Partition::weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

bool Partition::fits_in_box(const GrassContext& ctx) const {
    if (static_cast<int>(parts.size()) > ctx.k) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || parts[i] > ctx.n - ctx.k) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

ChowClass ChowClass::one(GrassContext ctx) {
    ChowClass c(ctx);
    c.add_term(std::vector<int>(ctx.qvars(), 0), Rational(1));
    return c;
}

ChowClass ChowClass::generator(GrassContext ctx, int i) {
    if (i < 1 || i > ctx.qvars())
        throw std::invalid_argument("ChowClass::generator: index out of range");
    ChowClass c(ctx);
    std::vector<int> e(ctx.qvars(), 0);
    e[i - 1] = 1;
    c.add_term(e, Rational(1));
    return c;
}

int ChowClass::weighted_degree(const std::vector<int>& exps) {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<int>(i + 1) * exps[i];
    return d;
}

void ChowClass::add_term(const std::vector<int>& exps, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exps.size()) != ctx_.qvars())
        throw std::invalid_argument("ChowClass: exponent vector length mismatch");
    if (weighted_degree(exps) > ctx_.dim()) return;  // truncated away
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ChowClass::is_homogeneous_of(int g) const {
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) != g) return false;
    return true;
}

ChowClass ChowClass::graded_part(int g) const {
    ChowClass out(ctx_);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) == g) out.add_term(e, c);
    return out;
}

ChowClass ChowClass::operator-() const {
    ChowClass out(ctx_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("ChowClass: context mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) { return *this += -o; }

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("ChowClass: context mismatch");
    ChowClass out(a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ChowClass operator*(ChowClass a, const Rational& s) {
    ChowClass out(a.ctx_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
    return out;
}

ChowClass ChowClass::pow(int e) const {
    ChowClass out = ChowClass::one(ctx_);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

ChowClass ChowClass::inverse_unit() const {
    const std::vector<int> unit(ctx_.qvars(), 0);
    auto it = terms_.find(unit);
    if (it == terms_.end() || it->second != Rational(1))
        throw std::invalid_argument("ChowClass::inverse_unit: constant term must be 1");
    ChowClass w = *this;
    w.terms_.erase(unit);  // positive-degree part
    ChowClass out = ChowClass::one(ctx_);
    ChowClass power = ChowClass::one(ctx_);
    for (int j = 1; j <= ctx_.dim(); ++j) {
        power = power * w;
        if (power.is_zero()) break;
        out += j % 2 == 1 ? -power : power;
    }
    return out;
}

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0)
            os << "-";
        const Rational a = c.abs();
        bool printed = false;
        if (a != Rational(1)) {
            os << a.to_string();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "q" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << a.to_string();
        first = false;
    }
    return os.str();
}

std::pair<BundleClass, BundleClass> tautological_bundles(GrassContext ctx) {
    if (ctx.k <= 0 || ctx.k >= ctx.n)
        throw std::invalid_argument("tautological_bundles: need 0 < k < n");
    ChowClass cq = ChowClass::one(ctx);
    for (int i = 1; i <= ctx.qvars(); ++i) cq += ChowClass::generator(ctx, i);
    BundleClass q{ctx, ctx.qvars(), cq};
    BundleClass s{ctx, ctx.k, cq.inverse_unit()};
    return {s, q};
}

BundleClass dual(const BundleClass& b) {
    ChowClass total = ChowClass::zero(b.ctx);
    for (int g = 0; g <= b.ctx.dim(); ++g) {
        ChowClass part = b.total_chern.graded_part(g);
        total += g % 2 == 1 ? -part : part;
    }
    return {b.ctx, b.rank, total};
}

BundleClass sum(const BundleClass& a, const BundleClass& b) {
    if (!(a.ctx == b.ctx)) throw std::invalid_argument("sum: context mismatch");
    return {a.ctx, a.rank + b.rank, a.total_chern * b.total_chern};
}

BundleClass difference(const BundleClass& a, const BundleClass& b) {
    if (!(a.ctx == b.ctx)) throw std::invalid_argument("difference: context mismatch");
    return {a.ctx, a.rank - b.rank, a.total_chern * b.total_chern.inverse_unit()};
}

BundleClass scale(const BundleClass& b, int copies) {
    if (copies < 0) throw std::invalid_argument("scale: negative multiplicity");
    return {b.ctx, b.rank * copies, b.total_chern.pow(copies)};
}

BundleClass sym_power(int d, const BundleClass& b) {
    require_root_rank(b, d);
    const int r = b.rank;
    std::vector<std::vector<int>> forms;
    std::vector<int> pick(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == d) {
            std::vector<int> form(static_cast<std::size_t>(r), 0);
            for (int v : pick) ++form[static_cast<std::size_t>(v)];
            forms.push_back(std::move(form));
            return;
        }
        for (int v = start; v < r; ++v) {
            pick[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return {b.ctx, static_cast<int>(forms.size()), chern_from_roots(b, forms)};
}

BundleClass ext_power(int d, const BundleClass& b) {
    require_root_rank(b, d);
    if (d > b.rank) throw std::invalid_argument("ext_power: d exceeds rank");
    const int r = b.rank;
    std::vector<std::vector<int>> forms;
    std::vector<int> pick(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == d) {
            std::vector<int> form(static_cast<std::size_t>(r), 0);
            for (int v : pick) ++form[static_cast<std::size_t>(v)];
            forms.push_back(std::move(form));
            return;
        }
        for (int v = start; v < r; ++v) {
            pick[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return {b.ctx, static_cast<int>(forms.size()), chern_from_roots(b, forms)};
}

BundleClass tensor_line(const BundleClass& b, const BundleClass& line) {
    if (!(b.ctx == line.ctx)) throw std::invalid_argument("tensor_line: context mismatch");
    if (line.rank != 1) throw std::invalid_argument("tensor_line: second factor must have rank 1");
    const ChowClass l1 = line.chern(1);
    ChowClass total = ChowClass::zero(b.ctx);
    const int r = b.rank;
    for (int k = 0; k <= r; ++k) {
        ChowClass ck(b.ctx);
        for (int i = 0; i <= k; ++i) {
            const Rational coef{Rational(mpz_class(binom(r - i, k - i)))};
            if (coef.is_zero()) continue;
            ck += b.chern(i) * l1.pow(k - i) * coef;
        }
        total += ck;
    }
    return {b.ctx, r, total};
}

BundleClass tensor_square(const BundleClass& b) {
    require_root_rank(b, 2);
    const int r = b.rank;
    std::vector<std::vector<int>> forms;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<int> form(static_cast<std::size_t>(r), 0);
            ++form[static_cast<std::size_t>(i)];
            ++form[static_cast<std::size_t>(j)];
            forms.push_back(std::move(form));
        }
    return {b.ctx, r * r, chern_from_roots(b, forms)};
}

ChowClass segre(const BundleClass& b) { return b.total_chern.inverse_unit(); }

mpz_class integral(const ChowClass& c) {
    const GrassContext ctx = c.context();
    const ChowClass top = c.graded_part(ctx.dim());
    const std::vector<int> box(static_cast<std::size_t>(ctx.k), ctx.n - ctx.k);
    Rational total(0);
    for (const auto& [exps, coef] : top.terms()) {
        // fold sigma_empty through Pieri multiplications by each q_i factor
        std::map<std::vector<int>, Rational> cur;
        cur[{}] = Rational(1);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (int rep = 0; rep < exps[i]; ++rep) {
                std::map<std::vector<int>, Rational> next;
                for (const auto& [lam, cc] : cur) {
                    std::vector<std::vector<int>> additions;
                    pieri_step(ctx, lam, static_cast<int>(i) + 1, additions);
                    for (auto& mu : additions) {
                        auto [it, inserted] = next.emplace(std::move(mu), cc);
                        if (!inserted) it->second += cc;
                    }
                }
                cur = std::move(next);
            }
        }
        auto it = cur.find(box);
        if (it != cur.end()) total += coef * it->second;
    }
    if (!total.is_integer())
        throw std::logic_error("integral: non-integral result from non-integer input");
    return total.num();
}

ChowClass schur_class(GrassContext ctx, const Partition& lambda) {
    if (!lambda.fits_in_box(ctx))
        throw std::invalid_argument("schur_class: partition does not fit the box");
    const std::size_t len = lambda.parts.size();
    if (len == 0) return ChowClass::one(ctx);
    auto q_of = [&](int m) {
        if (m == 0) return ChowClass::one(ctx);
        if (m < 0 || m > ctx.qvars()) return ChowClass::zero(ctx);
        return ChowClass::generator(ctx, m);
    };
    Matrix<ChowClass> g(len, len, ChowClass::zero(ctx));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j)
            g(i, j) = q_of(lambda.parts[i] + static_cast<int>(j) - static_cast<int>(i));
    return kernel::det_cofactor(g);
}

mpz_class degree_cone_locus(int n, int d) { return cone_locus_info(n, d).degree; }

LocusInfo cone_locus_info(int n, int d) {
    if (n < 1 || n > 4 || d < 1 || d > 3)
        throw std::invalid_argument("cone locus: supported range is 1 <= n <= 4, 1 <= d <= 3");
    const GrassContext ctx{1, n + 1};  // P^n
    const BundleClass q = tautological_bundles(ctx).second;
    const BundleClass f = sym_power(d, dual(q));
    const mpz_class via_segre = integral(segre(f));
    const mpz_class via_formula = binom(
        static_cast<long>(mpz_class(binom(n + d - 1, n)).get_ui()), n);
    if (via_segre != via_formula) {
        std::ostringstream os;
        os << "cone locus degree mismatch: Segre route " << via_segre.get_str()
           << " vs binomial formula " << via_formula.get_str();
        throw ConsistencyError(os.str());
    }
    return {n + f.rank - 1, via_segre};
}

namespace {

// E from 0 -> wedge^2 Q* (x) Q* -> Sym^2 Q* (x) V* -> E -> 0 on G(3,5)
BundleClass hessian_bundle() {
    const GrassContext ctx{3, 5};
    const BundleClass q = tautological_bundles(ctx).second;
    const BundleClass r = dual(q);
    const BundleClass a = sym_power(2, r);
    const BundleClass b5 = scale(a, 5);
    const BundleClass c = tensor_line(r, ext_power(2, r));
    return difference(b5, c);
}

}  // namespace

LocusInfo vanishing_hessian_locus() {
    const BundleClass e = hessian_bundle();
    const mpz_class deg = integral(segre(e));
    return {e.ctx.dim() + e.rank - 1, deg};
}

LocusInfo intersection_locus() {
    const GrassContext ctx{3, 5};
    const BundleClass q = tautological_bundles(ctx).second;
    const BundleClass e = hessian_bundle();
    const ChowClass se = segre(e);
    const ChowClass s6 = se.graded_part(6);
    const ChowClass s5 = se.graded_part(5);
    const ChowClass c1a = sym_power(2, dual(q)).chern(1);
    const ChowClass c1q = q.chern(1);
    // Reduced pushforward of h^dim from the incidence projective bundle. The
    // relative O(1) there pairs with the dual of the convention behind
    // segre(), which negates odd Segre components: hence the minus sign.
    const ChowClass integrand = s6 * Rational(3) - (c1a + c1q) * s5;
    const mpz_class deg = integral(integrand);
    // over the flag variety {(W, p) : p in W}, a P^2-bundle over G, the
    // relevant bundle is E minus a rank-3 twist
    const int dim_flag = ctx.dim() + 2;
    const int rank_e1 = e.rank - sym_power(2, dual(q)).rank;
    return {dim_flag + rank_e1 - 1, deg};
}

}  // namespace lefschetz::schubert
