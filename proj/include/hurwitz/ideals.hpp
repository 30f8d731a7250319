#pragma once

#include "gring.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hurwitz {

/// Row-reduced echelon form over a field, columns in preference order.
template <class C>
class Echelon {
public:
    explicit Echelon(int ncols = 0) : ncols_(ncols), col_row_(ncols, -1) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<C>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivot_; }
    bool is_pivot(int col) const { return col_row_[col] >= 0; }

    void reduce(std::vector<C>& v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int p = pivot_[r];
            if (is_zero(v[p])) continue;
            C f = v[p];
            for (int j = 0; j < ncols_; ++j)
                if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
        }
    }

    /// Adds v to the row space; returns its new pivot column or -1.
    int insert(std::vector<C> v)
    {
        reduce(v);
        int p = -1;
        for (int j = 0; j < ncols_; ++j)
            if (!is_zero(v[j])) { p = j; break; }
        if (p < 0) return -1;
        C inv = C(1) / v[p];
        for (auto& x : v)
            if (!is_zero(x)) x = x * inv;
        for (auto& row : rows_) {
            if (is_zero(row[p])) continue;
            C f = row[p];
            for (int j = 0; j < ncols_; ++j)
                if (!is_zero(v[j])) row[j] -= f * v[j];
        }
        col_row_[p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return p;
    }

    const std::vector<C>& row_for_pivot(int col) const { return rows_.at(col_row_.at(col)); }

private:
    int ncols_;
    std::vector<std::vector<C>> rows_;
    std::vector<int> pivot_;
    std::vector<int> col_row_;
};

/// Over Q(g) the rows are kept fraction-free, as primitive vectors of
/// polynomials; normalized rows are produced on demand.
template <>
class Echelon<GenusRational> {
    using GR = GenusRational;
    using Row = std::vector<GenusPoly>;

public:
    explicit Echelon(int ncols = 0) : ncols_(ncols), col_row_(ncols, -1) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(prow_.size()); }
    const std::vector<int>& pivots() const { return pivot_; }
    bool is_pivot(int col) const { return col_row_[col] >= 0; }
    const std::vector<std::vector<GR>>& rows() const
    {
        sync();
        return rows_;
    }
    const std::vector<GR>& row_for_pivot(int col) const
    {
        sync();
        return rows_.at(col_row_.at(col));
    }

    void reduce(std::vector<GR>& v) const
    {
        GR scale;
        Row p = to_poly(v, scale);
        reduce_poly(p, scale);
        for (int j = 0; j < ncols_; ++j) v[j] = p[j].is_zero() ? GR() : GR(p[j]) * scale;
    }

    int insert(const std::vector<GR>& v)
    {
        GR scale;
        Row p = to_poly(v, scale);
        reduce_poly(p, scale);
        int piv = -1;
        for (int j = 0; j < ncols_; ++j)
            if (!p[j].is_zero()) { piv = j; break; }
        if (piv < 0) return -1;
        for (auto& row : prow_) {
            if (row[piv].is_zero()) continue;
            GenusPoly a = p[piv], b = row[piv];
            for (int j = 0; j < ncols_; ++j) {
                if (row[j].is_zero() && p[j].is_zero()) continue;
                row[j] = row[j] * a - p[j] * b;
            }
            make_primitive(row, nullptr);
        }
        col_row_[piv] = static_cast<int>(prow_.size());
        prow_.push_back(std::move(p));
        pivot_.push_back(piv);
        dirty_ = true;
        return piv;
    }

private:
    /// Clears denominators: v = result * scale.
    Row to_poly(const std::vector<GR>& v, GR& scale) const
    {
        GenusPoly L(1);
        for (const auto& x : v)
            if (!x.is_zero() && !x.den().is_one()) L = L * GenusPoly::divmod(x.den(), GenusPoly::gcd(L, x.den())).first;
        Row p(ncols_);
        for (int j = 0; j < ncols_; ++j)
            if (!v[j].is_zero()) p[j] = v[j].num() * GenusPoly::divmod(L, v[j].den()).first;
        scale = GR(1) / GR(L);
        make_primitive(p, &scale);
        return p;
    }

    /// Divides out the polynomial content of the row; scale absorbs it.
    static void make_primitive(Row& row, GR* scale)
    {
        GenusPoly g;
        bool first = true;
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            if (first) { g = x.monic(); first = false; }
            else if (g.degree() > 0) g = GenusPoly::gcd(g, x);
            if (g.degree() == 0) break;
        }
        if (first) return;
        if (g.degree() > 0) {
            for (auto& x : row)
                if (!x.is_zero()) x = GenusPoly::divmod(x, g).first;
            if (scale) *scale = *scale * GR(g);
        }
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& x : row)
            for (const auto& c : x.coeffs()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            }
        Rational s(num_gcd, den_lcm);
        s.canonicalize();
        if (s != 1) {
            Rational inv = Rational(1) / s;
            for (auto& x : row)
                if (!x.is_zero()) x = x * inv;
            if (scale) *scale = scale->scaled(s);
        }
    }

    void reduce_poly(Row& v, GR& scale) const
    {
        for (std::size_t r = 0; r < prow_.size(); ++r) {
            int p = pivot_[r];
            if (v[p].is_zero()) continue;
            GenusPoly a = prow_[r][p], b = v[p];
            for (int j = 0; j < ncols_; ++j) {
                if (v[j].is_zero() && prow_[r][j].is_zero()) continue;
                v[j] = v[j] * a - prow_[r][j] * b;
            }
            scale = scale / GR(a);
            make_primitive(v, &scale);
        }
    }

    void sync() const
    {
        if (!dirty_) return;
        rows_.clear();
        for (std::size_t r = 0; r < prow_.size(); ++r) {
            const auto& row = prow_[r];
            GR inv = GR(1) / GR(row[pivot_[r]]);
            std::vector<GR> out(ncols_);
            for (int j = 0; j < ncols_; ++j)
                if (!row[j].is_zero()) out[j] = j == pivot_[r] ? GR(1) : GR(row[j]) * inv;
            rows_.push_back(std::move(out));
        }
        dirty_ = false;
    }

    int ncols_;
    std::vector<Row> prow_;
    std::vector<int> pivot_;
    std::vector<int> col_row_;
    mutable std::vector<std::vector<GR>> rows_;
    mutable bool dirty_ = false;
};

template <class C>
C determinant(std::vector<std::vector<C>> m)
{
    const std::size_t n = m.size();
    C det(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k].size() != n) throw RingError("determinant of a non-square matrix");
        std::size_t p = k;
        while (p < n && is_zero(m[p][k])) ++p;
        if (p == n) return C(0);
        if (p != k) { std::swap(m[p], m[k]); det = -det; }
        det = det * m[k][k];
        C inv = C(1) / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m[i][k])) continue;
            C f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j)
                if (!is_zero(m[k][j])) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

/// Monomials of exact degree d in the given variables.
template <class C>
std::vector<Monomial> monomials_of_degree(const Ring<C>& R, const std::vector<int>& vars, int d)
{
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (left == 0) { out.push_back(cur); return; }
        if (i == vars.size()) return;
        int v = vars[i], dv = R.generator(v).degree;
        for (int e = 0; e * dv <= left; ++e) {
            cur.e[v] = static_cast<std::uint8_t>(e);
            self(self, i + 1, left - e * dv);
        }
        cur.e[v] = 0;
    };
    rec(rec, 0, d);
    // Term order used elsewhere: larger exponent vectors first.
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.e > b.e; });
    return out;
}

/// Row pre-selection for elimination over Q(g). Rows are reduced at a fixed
/// large genus value first; only rows independent there need exact work, since
/// independence at one value implies independence over Q(g). A second value
/// gives an independent lower bound on the generic rank.
template <class C>
class SpecializedFilter {
public:
    explicit SpecializedFilter(int) {}
    bool independent(const std::vector<C>&) { return true; }
    int recheck_rank() const { return 0; }
};

template <>
class SpecializedFilter<GenusRational> {
public:
    static constexpr long g0 = 1000003, g1 = 999983;

    explicit SpecializedFilter(int ncols) : a_(ncols), b_(ncols) {}

    bool independent(const std::vector<GenusRational>& row)
    {
        std::vector<Rational> va, vb;
        bool pa = at(row, g0, va), pb = at(row, g1, vb);
        if (pb) b_.insert(std::move(vb));
        else poles_ = true;
        if (!pa) return true;  // pole at g0: keep for exact treatment
        return a_.insert(std::move(va)) >= 0;
    }

    /// Rank seen at the second value, or a sentinel forcing exact work when
    /// a row had a pole there.
    int recheck_rank() const { return poles_ ? b_.ncols() + 1 : b_.rank(); }

private:
    static bool at(const std::vector<GenusRational>& row, long g, std::vector<Rational>& out)
    {
        out.resize(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            Rational d = row[j].den().eval(Rational(g));
            if (sgn(d) == 0) return false;
            out[j] = row[j].num().eval(Rational(g)) / d;
        }
        return true;
    }

    Echelon<Rational> a_, b_;
    bool poles_ = false;
};

/// Quotient of a free graded ring by a homogeneous ideal, computed degree by
/// degree up to dmax. Variables outside the keep-list are eliminated in their
/// own degree; what remains is a presentation on the kept variables.
template <class C>
class GradedQuotient {
public:
    /// With `keep` given, every other variable must be eliminable (strict).
    /// Without it, variables are eliminated greedily, latest generator first.
    static GradedQuotient build(const RingPtr<C>& R, const std::vector<GradedClass<C>>& gens,
                                std::optional<std::vector<std::string>> keep, int dmax)
    {
        GradedQuotient Q;
        Q.R_ = R;
        Q.dmax_ = dmax;
        if (dmax > R->cut()) throw RingError("quotient degree exceeds the ring cut");
        for (const auto& r : R->rules())
            throw RingError("quotients need a free ring; generator " + R->generator(r.var).name + " has a rule");
        std::map<int, std::vector<GradedClass<C>>> by_deg;
        for (const auto& f0 : gens) {
            auto f = f0.pulled(R);
            if (f.is_zero()) continue;
            if (!f.is_homogeneous()) throw RingError("ideal generator is not homogeneous");
            int d = f.min_degree();
            if (d <= dmax) by_deg[d].push_back(f);
        }
        std::set<int> strict_keep;
        if (keep)
            for (const auto& n : *keep) strict_keep.insert(R->index(n));
        Q.strict_ = keep.has_value();
        Q.I_.resize(dmax + 1);
        Q.cols_.resize(dmax + 1);
        Q.total_monomials_.resize(dmax + 1);
        std::vector<int> all;
        for (int i = 0; i < R->ngens(); ++i) all.push_back(i);

        for (int d = 1; d <= dmax; ++d) {
            Q.total_monomials_[d] = static_cast<long>(monomials_of_degree(*R, all, d).size());
            std::vector<int> elim, newkeep;
            for (int i = R->ngens() - 1; i >= 0; --i) {
                if (R->generator(i).degree != d) continue;
                if (Q.strict_ && strict_keep.count(i)) newkeep.push_back(i);
                else elim.push_back(i);
            }
            // Columns: eliminable variables, then monomials in kept variables.
            std::vector<int> kvars = Q.kept_idx_;
            for (int v : newkeep) kvars.push_back(v);
            std::sort(kvars.begin(), kvars.end());
            auto kmons = monomials_of_degree(*R, kvars, d);
            std::vector<Monomial> cols;
            for (int v : elim) {
                Monomial m;
                m.e[v] = 1;
                cols.push_back(m);
            }
            for (auto& m : kmons) cols.push_back(m);
            absl::flat_hash_map<Monomial, int, MonomialHash> colix;
            for (std::size_t j = 0; j < cols.size(); ++j) colix[cols[j]] = static_cast<int>(j);
            Echelon<C> E(static_cast<int>(cols.size()));
            auto to_row = [&](const GradedClass<C>& a) {
                std::vector<C> row(cols.size(), C(0));
                for (const auto& [m, c] : a.terms()) {
                    auto it = colix.find(m);
                    if (it == colix.end()) throw RingError("elimination produced an unexpected monomial");
                    row[it->second] += c;
                }
                return row;
            };
            SpecializedFilter<C> filter(static_cast<int>(cols.size()));
            std::vector<std::vector<C>> skipped;
            auto add = [&](std::vector<C> row) {
                if (filter.independent(row)) E.insert(std::move(row));
                else skipped.push_back(std::move(row));
            };
            // Multiples of the lower-degree ideal go first: their entries are small.
            for (int x : Q.kept_idx_) {
                int e = d - R->generator(x).degree;
                if (e < 1) continue;
                auto xv = R->gen(R->generator(x).name);
                for (const auto& b : Q.basis_classes(e)) add(to_row(xv * b));
            }
            for (const auto& f : by_deg[d]) add(to_row(Q.substitute(f)));
            // A second specialization bounds the generic rank from below; if it
            // sees more than the exact rank, fall back to exact insertion.
            if (filter.recheck_rank() > E.rank()) {
                Q.rechecked_ = true;
                for (auto& row : skipped) E.insert(std::move(row));
            }
            // Variables that received a pivot are eliminated.
            std::vector<int> survivors;
            for (std::size_t j = 0; j < elim.size(); ++j) {
                int v = elim[j];
                if (!E.is_pivot(static_cast<int>(j))) {
                    if (Q.strict_)
                        throw RingError("variable " + R->generator(v).name + " cannot be eliminated in degree " +
                                        std::to_string(d));
                    survivors.push_back(v);
                }
            }
            for (int v : survivors) newkeep.push_back(v);
            for (int v : newkeep) Q.kept_idx_.push_back(v);
            std::sort(Q.kept_idx_.begin(), Q.kept_idx_.end());
            for (std::size_t j = 0; j < elim.size(); ++j) {
                if (!E.is_pivot(static_cast<int>(j))) continue;
                const auto& row = E.row_for_pivot(static_cast<int>(j));
                TermMap<C> acc;
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (k != j && !is_zero(row[k])) acc[cols[k]] -= row[k];
                Q.phi_.emplace(R->generator(elim[j]).name, GradedClass<C>::from_map(R, std::move(acc)));
            }
            // Ideal part in the kept variables, in a fresh echelon with the final columns.
            auto fin = monomials_of_degree(*R, Q.kept_idx_, d);
            absl::flat_hash_map<Monomial, int, MonomialHash> fix;
            for (std::size_t j = 0; j < fin.size(); ++j) fix[fin[j]] = static_cast<int>(j);
            Echelon<C> I(static_cast<int>(fin.size()));
            for (std::size_t r = 0; r < E.rows().size(); ++r) {
                int p = E.pivots()[r];
                if (p < static_cast<int>(elim.size())) continue;
                std::vector<C> v(fin.size(), C(0));
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (!is_zero(E.rows()[r][k])) v[fix.at(cols[k])] = E.rows()[r][k];
                I.insert(std::move(v));
            }
            Q.cols_[d] = std::move(fin);
            Q.I_[d] = std::move(I);
        }
        return Q;
    }

    const RingPtr<C>& ring() const { return R_; }
    int dmax() const { return dmax_; }
    std::vector<std::string> kept() const
    {
        std::vector<std::string> out;
        for (int v : kept_idx_) out.push_back(R_->generator(v).name);
        return out;
    }
    const std::map<std::string, GradedClass<C>>& eliminations() const { return phi_; }
    /// True when the specialized pre-selection disagreed and exact insertion was used.
    bool rechecked() const { return rechecked_; }

    int dim(int d) const
    {
        if (d == 0) return 1;
        check(d);
        return static_cast<int>(cols_[d].size()) - I_[d].rank();
    }
    long rank(int d) const
    {
        if (d == 0) return 0;
        check(d);
        return total_monomials_[d] - dim(d);
    }
    long monomial_count(int d) const
    {
        if (d == 0) return 1;
        check(d);
        return total_monomials_[d];
    }
    std::vector<int> dims() const
    {
        std::vector<int> out;
        for (int d = 1; d <= dmax_; ++d) out.push_back(dim(d));
        return out;
    }

    /// Standard monomials (non-pivot columns) in degree d.
    std::vector<Monomial> standard_monomials(int d) const
    {
        check(d);
        std::vector<Monomial> out;
        for (std::size_t j = 0; j < cols_[d].size(); ++j)
            if (!I_[d].is_pivot(static_cast<int>(j))) out.push_back(cols_[d][j]);
        return out;
    }

    /// Basis of the ideal in the kept variables, degree d.
    std::vector<GradedClass<C>> basis_classes(int d) const
    {
        check(d);
        std::vector<GradedClass<C>> out;
        for (const auto& row : I_[d].rows()) out.push_back(from_row(d, row));
        return out;
    }

    GradedClass<C> substitute(const GradedClass<C>& a) const
    {
        if (phi_.empty()) return a.pulled(R_);
        return class_substitute(a.pulled(R_), phi_);
    }

    /// Canonical representative: a combination of standard monomials.
    GradedClass<C> normal_form(const GradedClass<C>& a) const
    {
        auto s = substitute(a);
        GradedClass<C> out(R_);
        std::map<int, TermMap<C>> parts;
        for (const auto& [m, c] : s.terms()) parts[R_->degree(m)][m] += c;
        for (auto& [d, tm] : parts) {
            if (d == 0) {
                out += GradedClass<C>::from_map(R_, std::move(tm));
                continue;
            }
            check(d);
            auto v = vec(d, GradedClass<C>::from_map(R_, std::move(tm)));
            I_[d].reduce(v);
            out += from_row(d, v);
        }
        return out;
    }

    bool contains(const GradedClass<C>& a) const { return normal_form(a).is_zero(); }

    /// Coordinates of a homogeneous class on the standard monomials of degree d.
    std::vector<C> coordinates(int d, const GradedClass<C>& a) const
    {
        auto nf = normal_form(a);
        for (const auto& t : nf.terms())
            if (R_->degree(t.first) != d) throw RingError("class is not homogeneous of degree " + std::to_string(d));
        auto v = vec(d, nf);
        std::vector<C> out;
        for (std::size_t j = 0; j < cols_[d].size(); ++j)
            if (!I_[d].is_pivot(static_cast<int>(j))) out.push_back(v[j]);
        return out;
    }

    /// Rank of the span of the given classes in degree d of the quotient.
    int span_rank(int d, const std::vector<GradedClass<C>>& S) const
    {
        Echelon<C> E(dim(d));
        for (const auto& s : S) E.insert(coordinates(d, s));
        return E.rank();
    }
    bool spans(int d, const std::vector<GradedClass<C>>& S) const { return span_rank(d, S) == dim(d); }

    /// Solve a = sum x_i S_i in degree d; empty when a is not in the span.
    std::optional<std::vector<C>> express(int d, const GradedClass<C>& a, const std::vector<GradedClass<C>>& S) const
    {
        const int n = static_cast<int>(S.size()), m = dim(d);
        // Columns: unknowns then the right-hand side; rows indexed by coordinates.
        std::vector<std::vector<C>> cs;
        for (const auto& s : S) cs.push_back(coordinates(d, s));
        auto b = coordinates(d, a);
        Echelon<C> E(n + 1);
        for (int i = 0; i < m; ++i) {
            std::vector<C> row(n + 1, C(0));
            for (int j = 0; j < n; ++j) row[j] = cs[j][i];
            row[n] = b[i];
            E.insert(std::move(row));
        }
        if (E.is_pivot(n)) return std::nullopt;
        std::vector<C> x(n, C(0));
        for (std::size_t r = 0; r < E.rows().size(); ++r) x[E.pivots()[r]] = E.rows()[r][n];
        return x;
    }

    /// Matrix of coordinates of S in the basis B (both in degree d).
    std::vector<std::vector<C>> matrix_in_basis(int d, const std::vector<GradedClass<C>>& S,
                                                const std::vector<GradedClass<C>>& B) const
    {
        if (static_cast<int>(B.size()) != dim(d) || !spans(d, B))
            throw RingError("reference set is not a basis in degree " + std::to_string(d));
        std::vector<std::vector<C>> M;
        for (const auto& s : S) {
            auto x = express(d, s, B);
            if (!x) throw RingError("class outside the span of a basis");
            M.push_back(*x);
        }
        return M;
    }

private:
    void check(int d) const
    {
        if (d < 0 || d > dmax_) throw RingError("degree " + std::to_string(d) + " outside the computed range");
    }
    std::vector<C> vec(int d, const GradedClass<C>& a) const
    {
        absl::flat_hash_map<Monomial, int, MonomialHash> ix;
        for (std::size_t j = 0; j < cols_[d].size(); ++j) ix[cols_[d][j]] = static_cast<int>(j);
        std::vector<C> v(cols_[d].size(), C(0));
        for (const auto& [m, c] : a.terms()) {
            auto it = ix.find(m);
            if (it == ix.end()) throw RingError("class involves an eliminated variable after substitution");
            v[it->second] += c;
        }
        return v;
    }
    GradedClass<C> from_row(int d, const std::vector<C>& row) const
    {
        TermMap<C> acc;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!is_zero(row[j])) acc[cols_[d][j]] = row[j];
        return GradedClass<C>::from_map(R_, std::move(acc));
    }

    RingPtr<C> R_;
    int dmax_ = 0;
    bool strict_ = false;
    bool rechecked_ = false;
    std::vector<int> kept_idx_;
    std::map<std::string, GradedClass<C>> phi_;
    std::vector<Echelon<C>> I_;
    std::vector<std::vector<Monomial>> cols_;
    std::vector<long> total_monomials_;
};

/// Specialize every coefficient at g = g0.
inline GradedClass<GenusRational> specialize_class(const GradedClass<GenusRational>& a, long g0)
{
    return a.map_coeffs([&](const GenusRational& q) { return specialize(q, Rational(g0)); });
}

inline std::vector<GradedClass<GenusRational>> specialize_all(const std::vector<GradedClass<GenusRational>>& v,
                                                              long g0)
{
    std::vector<GradedClass<GenusRational>> out;
    for (const auto& a : v) out.push_back(specialize_class(a, g0));
    return out;
}

/// A determinant in Q(g), split as scalar * primitive numerator / denominator,
/// with its integer zeros and poles for g >= gmin.
struct DeterminantReport {
    GenusRational value;
    Rational scalar;
    GenusPoly primitive;
    GenusPoly denominator;
    std::set<long> roots;
    std::set<long> poles;

    bool nonvanishing() const { return !value.is_zero() && roots.empty(); }

    static DeterminantReport of(const GenusRational& v, long gmin = 2)
    {
        DeterminantReport r;
        r.value = v;
        r.denominator = v.den();
        if (v.is_zero()) {
            r.scalar = 0;
            return r;
        }
        r.scalar = v.num().content();
        r.primitive = v.num().primitive_part();
        r.roots = r.primitive.integer_roots(gmin);
        r.poles = v.den().integer_roots(gmin);
        return r;
    }

    nlohmann::json to_json() const
    {
        return {{"value", value.to_string()},
                {"scalar", rational_str(scalar)},
                {"primitive", primitive.to_string()},
                {"denominator", denominator.to_string()},
                {"integer_roots", roots},
                {"poles", poles}};
    }
};

} // namespace hurwitz
