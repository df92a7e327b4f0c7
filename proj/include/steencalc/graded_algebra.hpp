#pragma once

// Finite-dimensional commutative Z/p-graded algebras over F_q, i.e. affine
// schemes with a mu_p-action, handled by linear algebra on structure
// constants.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/arith/finite_field.hpp"
#include "steencalc/arith/power_class.hpp"
#include "steencalc/arith/prime.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

using FqVector = std::vector<FqElement>;

namespace detail {

inline FqVector zero_vector(const FqField& f, std::size_t n) { return FqVector(n, f.zero()); }

inline bool is_zero_vector(const FqVector& v) {
    return std::all_of(v.begin(), v.end(), [](const FqElement& x) { return x.is_zero(); });
}

/// Reduced row echelon form of the span of `rows`; zero rows dropped.
inline std::vector<FqVector> rref(std::vector<FqVector> rows, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const FqElement inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FqElement f = rows[i][c];
            for (std::size_t k = 0; k < ncols; ++k)
                if (!rows[r][k].is_zero()) rows[i][k] = rows[i][k] - f * rows[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = std::move(piv);
    return rows;
}

}  // namespace detail

/// A subspace of one graded component R_i, kept in canonical reduced echelon
/// form over the component's basis.
class Subspace {
public:
    Subspace(FqField field, int component, std::size_t ambient_dim, std::vector<FqVector> spanning = {})
        : field_(std::move(field)), component_(component), n_(ambient_dim) {
        for (const auto& v : spanning)
            if (v.size() != n_) detail::internal_failure("subspace vector of wrong length");
        rows_ = detail::rref(std::move(spanning), n_, &pivots_);
    }

    static Subspace full(const FqField& f, int component, std::size_t n) {
        std::vector<FqVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            FqVector v = detail::zero_vector(f, n);
            v[i] = f.one();
            rows.push_back(std::move(v));
        }
        return Subspace(f, component, n, std::move(rows));
    }

    const FqField& field() const noexcept { return field_; }
    int component() const noexcept { return component_; }
    std::size_t ambient_dimension() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<FqVector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool is_zero() const noexcept { return rows_.empty(); }
    bool is_full() const noexcept { return rows_.size() == n_; }

    /// v minus its projection along the echelon rows (zero iff v lies in the subspace).
    FqVector reduce(FqVector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const FqElement c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n_; ++k)
                if (!rows_[r][k].is_zero()) v[k] = v[k] - c * rows_[r][k];
        }
        return v;
    }
    bool contains(const FqVector& v) const { return detail::is_zero_vector(reduce(v)); }
    bool contains(const Subspace& s) const {
        return std::all_of(s.rows_.begin(), s.rows_.end(), [&](const FqVector& v) { return contains(v); });
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.component_ != b.component_ || a.n_ != b.n_) throw MismatchError("sum of subspaces of different components");
        std::vector<FqVector> rows = a.rows_;
        rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
        return Subspace(a.field_, a.component_, a.n_, std::move(rows));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.component_ == b.component_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    FqField field_;
    int component_;
    std::size_t n_;
    std::vector<FqVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// R = R_0 + ... + R_{p-1}: named basis elements, each in one component,
/// with structure constants for all basis products and a unit in R_0.
class GradedAlgebra {
public:
    using ProductFn = std::function<FqVector(std::size_t, std::size_t)>;

    GradedAlgebra(PrimeModulus p, FqField field, std::vector<std::string> names, std::vector<int> components,
                  const ProductFn& product, FqVector unit)
        : p_(p), field_(std::move(field)), names_(std::move(names)), comp_(std::move(components)), unit_(std::move(unit)) {
        if (field_.characteristic() == p_.value())
            throw ValidationError("graded algebras need characteristic different from p");
        const std::size_t n = names_.size();
        if (comp_.size() != n) throw ValidationError("one component per basis element required");
        if (unit_.size() != n) throw ValidationError("unit has wrong length");
        for (auto& c : comp_) {
            c = static_cast<int>(p_.reduce(c));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw ValidationError("duplicate basis element '" + names_[i] + "'");
        local_.resize(n);
        by_comp_.assign(p_.value(), {});
        for (std::size_t i = 0; i < n; ++i) {
            local_[i] = by_comp_[static_cast<std::size_t>(comp_[i])].size();
            by_comp_[static_cast<std::size_t>(comp_[i])].push_back(i);
        }
        table_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FqVector v = product(i, j);
                if (v.size() != n) throw ValidationError("product vector has wrong length");
                for (std::size_t k = 0; k < n; ++k)
                    if (!v[k].is_zero() && comp_[k] != static_cast<int>(p_.reduce(comp_[i] + comp_[j])))
                        throw ValidationError("product " + names_[i] + "*" + names_[j] + " leaves component " +
                                              std::to_string(p_.reduce(comp_[i] + comp_[j])));
                table_[i * n + j] = std::move(v);
            }
        validate();
    }

    PrimeModulus p() const noexcept { return p_; }
    const FqField& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    int component_of(std::size_t i) const noexcept { return comp_[i]; }
    const std::vector<int>& components() const noexcept { return comp_; }
    const std::vector<std::size_t>& component_basis(int c) const { return by_comp_.at(static_cast<std::size_t>(c)); }
    std::size_t component_dimension(int c) const { return component_basis(c).size(); }
    const FqVector& unit() const noexcept { return unit_; }
    const FqVector& product(std::size_t i, std::size_t j) const { return table_[i * names_.size() + j]; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    FqVector basis_vector(std::size_t i) const {
        FqVector v = detail::zero_vector(field_, dimension());
        v[i] = field_.one();
        return v;
    }

    FqVector multiply(const FqVector& a, const FqVector& b) const {
        const std::size_t n = dimension();
        FqVector r = detail::zero_vector(field_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                const FqElement c = a[i] * b[j];
                const FqVector& t = table_[i * n + j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!t[k].is_zero()) r[k] = r[k] + c * t[k];
            }
        }
        return r;
    }

    FqVector power(const FqVector& a, std::uint64_t e) const {
        FqVector r = unit_, b = a;
        while (e) {
            if (e & 1) r = multiply(r, b);
            e >>= 1;
            if (e) b = multiply(b, b);
        }
        return r;
    }

    /// Full-coordinate vector from coordinates on the basis of component c.
    FqVector embed(int c, const FqVector& local) const {
        FqVector v = detail::zero_vector(field_, dimension());
        const auto& idx = component_basis(c);
        for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
        return v;
    }
    /// Coordinates on component c of a vector supported in that component.
    FqVector restrict(int c, const FqVector& v) const {
        const auto& idx = component_basis(c);
        FqVector local;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero() && comp_[k] != c) detail::internal_failure("vector not supported in the component");
        for (auto i : idx) local.push_back(v[i]);
        return local;
    }

    Subspace full_component(int c) const { return Subspace::full(field_, c, component_dimension(c)); }
    Subspace zero_component(int c) const { return Subspace(field_, c, component_dimension(c)); }

    /// Product of subspaces U of R_i and V of R_j inside R_{i+j}.
    Subspace product(const Subspace& u, const Subspace& v) const {
        const int c = static_cast<int>(p_.reduce(u.component() + v.component()));
        std::vector<FqVector> rows;
        for (const auto& a : u.rows())
            for (const auto& b : v.rows()) rows.push_back(restrict(c, multiply(embed(u.component(), a), embed(v.component(), b))));
        return Subspace(field_, c, component_dimension(c), std::move(rows));
    }

    std::string vector_to_string(const FqVector& v) const {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            s += v[i].is_one() ? names_[i] : "(" + v[i].to_string() + ")*" + names_[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    void validate() const {
        const std::size_t n = dimension();
        for (std::size_t i = 0; i < n; ++i)
            if (!unit_[i].is_zero() && comp_[i] != 0) throw ValidationError("unit must lie in R_0");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(multiply(unit_, basis_vector(i)) == basis_vector(i)))
                throw ValidationError("unit law fails on '" + names_[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (!(product(i, j) == product(j, i)))
                    throw ValidationError("multiplication is not commutative on " + names_[i] + ", " + names_[j]);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!(multiply(product(i, j), basis_vector(k)) == multiply(basis_vector(i), product(j, k))))
                        throw ValidationError("multiplication is not associative on " + names_[i] + ", " + names_[j] +
                                              ", " + names_[k]);
    }

    PrimeModulus p_;
    FqField field_;
    std::vector<std::string> names_;
    std::vector<int> comp_;
    FqVector unit_;
    std::vector<std::size_t> local_;
    std::vector<std::vector<std::size_t>> by_comp_;
    std::vector<FqVector> table_;
};

/// Row space of all products of basis elements of R_i and R_j, in R_{i+j}.
inline Subspace component_product(const GradedAlgebra& a, int i, int j) {
    return a.product(a.full_component(i), a.full_component(j));
}

/// I = sum over i + j = p (1 <= i, j <= p-1) of R_i R_j, inside R_0.
inline Subspace fixed_ideal(const GradedAlgebra& a) {
    const int p = static_cast<int>(a.p().value());
    Subspace ideal = a.zero_component(0);
    for (int i = 1; i < p; ++i) ideal = ideal + component_product(a, i, p - i);
    if (!a.product(a.full_component(0), ideal).contains(ideal) || !ideal.contains(a.product(a.full_component(0), ideal)))
        detail::internal_failure("fixed ideal is not an R_0-ideal");
    return ideal;
}

/// R_0 / I as a trivially graded algebra on representatives of the non-pivot
/// coordinates of I.
inline GradedAlgebra fixed_point_quotient(const GradedAlgebra& a) {
    const Subspace ideal = fixed_ideal(a);
    const auto& r0 = a.component_basis(0);
    std::vector<std::size_t> keep;  // local indices in R_0 not pivots of I
    for (std::size_t k = 0; k < r0.size(); ++k)
        if (std::find(ideal.pivots().begin(), ideal.pivots().end(), k) == ideal.pivots().end()) keep.push_back(k);
    const FqField& f = a.field();
    auto to_quotient = [&](const FqVector& local) {
        const FqVector red = ideal.reduce(local);
        FqVector q;
        for (auto k : keep) q.push_back(red[k]);
        return q;
    };
    std::vector<std::string> names;
    for (auto k : keep) names.push_back("[" + a.names()[r0[k]] + "]");
    auto product = [&](std::size_t i, std::size_t j) {
        return to_quotient(a.restrict(0, a.product(r0[keep[i]], r0[keep[j]])));
    };
    return GradedAlgebra(a.p(), f, names, std::vector<int>(keep.size(), 0), product, to_quotient(a.restrict(0, a.unit())));
}

namespace detail {

/// dim_F of R_k (x)_{R_0} R_l: the F-tensor modulo (r x) (x) y - x (x) (r y).
inline std::size_t balanced_tensor_dimension(const GradedAlgebra& a, int k, int l) {
    const auto& bk = a.component_basis(k);
    const auto& bl = a.component_basis(l);
    const auto& b0 = a.component_basis(0);
    const std::size_t nk = bk.size(), nl = bl.size();
    if (nk == 0 || nl == 0) return 0;
    std::vector<FqVector> rel;
    for (auto r : b0)
        for (std::size_t x = 0; x < nk; ++x)
            for (std::size_t y = 0; y < nl; ++y) {
                const FqVector rx = a.restrict(k, a.product(r, bk[x]));
                const FqVector ry = a.restrict(l, a.product(r, bl[y]));
                FqVector v = zero_vector(a.field(), nk * nl);
                for (std::size_t i = 0; i < nk; ++i)
                    if (!rx[i].is_zero()) v[i * nl + y] = v[i * nl + y] + rx[i];
                for (std::size_t j = 0; j < nl; ++j)
                    if (!ry[j].is_zero()) v[x * nl + j] = v[x * nl + j] - ry[j];
                if (!is_zero_vector(v)) rel.push_back(std::move(v));
            }
    return nk * nl - rref(std::move(rel), nk * nl).size();
}

inline Subspace component_power(const GradedAlgebra& a, int i, int e) {
    Subspace s = a.full_component(i);
    for (int k = 1; k < e; ++k) s = a.product(s, a.full_component(i));
    return s;
}

/// R_0 is a field iff it is nonzero, Frobenius x -> x^q is injective on it
/// (reduced) and the Frobenius-fixed subalgebra is F_q itself (one factor).
inline bool degree_zero_is_field(const GradedAlgebra& a) {
    const auto& b0 = a.component_basis(0);
    const std::size_t n = b0.size();
    if (n == 0) return false;
    const std::uint64_t q = a.field().order();
    std::vector<FqVector> frob, frob_minus_id;
    for (std::size_t k = 0; k < n; ++k) {
        const FqVector img = a.restrict(0, a.power(a.basis_vector(b0[k]), q));
        frob.push_back(img);
        FqVector d = img;
        d[k] = d[k] - a.field().one();
        frob_minus_id.push_back(std::move(d));
    }
    const std::size_t rank_frob = rref(frob, n).size();
    const std::size_t rank_fix = rref(frob_minus_id, n).size();
    return rank_frob == n && n - rank_fix == 1;
}

}  // namespace detail

/// The conditions of the torsor criterion; `condition7` is computed only
/// when R_0 is a field.
struct TorsorReport {
    bool condition1 = false;  // R_0 / I = 0
    bool condition2 = false;  // I = R_0
    bool condition3 = false;  // R_i^p = R_0 for all i
    bool condition4 = false;  // R_1^p = R_0
    bool condition5 = false;  // R_i R_{p-i} = R_0 for all i
    bool condition6 = false;  // R_k (x)_{R_0} R_l -> R_{k+l} bijective for all k, l
    std::optional<bool> condition7;  // Phi: R (x)_{R_0} R -> F[t]/(t^p-1) (x) R bijective

    std::vector<bool> values() const {
        std::vector<bool> v{condition1, condition2, condition3, condition4, condition5, condition6};
        if (condition7) v.push_back(*condition7);
        return v;
    }
    bool all_true() const {
        auto v = values();
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    }
    bool all_false() const {
        auto v = values();
        return std::none_of(v.begin(), v.end(), [](bool b) { return b; });
    }
    bool mixed() const { return !all_true() && !all_false(); }
};

inline TorsorReport torsor_check(const GradedAlgebra& a) {
    const int p = static_cast<int>(a.p().value());
    TorsorReport r;
    const Subspace full0 = a.full_component(0);
    r.condition1 = fixed_point_quotient(a).dimension() == 0;
    r.condition2 = fixed_ideal(a) == full0;
    r.condition3 = true;
    for (int i = 1; i < p; ++i) r.condition3 = r.condition3 && detail::component_power(a, i, p) == full0;
    r.condition4 = detail::component_power(a, 1, p) == full0;
    r.condition5 = true;
    for (int i = 1; i < p; ++i) r.condition5 = r.condition5 && component_product(a, i, p - i) == full0;
    r.condition6 = true;
    for (int k = 0; k < p && r.condition6; ++k)
        for (int l = 0; l < p; ++l) {
            const int c = (k + l) % p;
            if (!component_product(a, k, l).is_full() ||
                detail::balanced_tensor_dimension(a, k, l) != a.component_dimension(c)) {
                r.condition6 = false;
                break;
            }
        }
    if (detail::degree_zero_is_field(a)) {
        // Phi on the F-tensor R (x)_F R, target F^p (x) R with coordinates (t^k, basis index)
        const std::size_t n = a.dimension();
        std::vector<FqVector> images;
        std::size_t source_dim = 0;
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l) source_dim += detail::balanced_tensor_dimension(a, k, l);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FqVector v = detail::zero_vector(a.field(), static_cast<std::size_t>(p) * n);
                const auto& prod = a.product(i, j);
                const std::size_t t = static_cast<std::size_t>(a.component_of(i));
                for (std::size_t m = 0; m < n; ++m) v[t * n + m] = prod[m];
                images.push_back(std::move(v));
            }
        const std::size_t rank = detail::rref(std::move(images), static_cast<std::size_t>(p) * n).size();
        r.condition7 = rank == static_cast<std::size_t>(p) * n && source_dim == static_cast<std::size_t>(p) * n;
    }
    return r;
}

/// The same algebra with R'_i = R_{k' i}, k k' = 1 mod p: an element of old
/// degree j gets degree k j.
inline GradedAlgebra twist(const GradedAlgebra& a, std::int64_t k) {
    const std::uint32_t kk = a.p().reduce(k);
    if (kk == 0) throw DomainError("twist needs k not divisible by p");
    std::vector<int> comps;
    for (int c : a.components()) comps.push_back(static_cast<int>(a.p().mul(kk, static_cast<std::uint32_t>(c))));
    return GradedAlgebra(a.p(), a.field(), a.names(), comps, [&](std::size_t i, std::size_t j) { return a.product(i, j); },
                         a.unit());
}

/// The class of b^p in R_0 = F_q for any nonzero b in R_1, for a torsor whose
/// degree-zero part is one-dimensional.
inline PthPowerClass kummer_parameter(const GradedAlgebra& a) {
    if (a.component_dimension(0) != 1) throw DomainError("Kummer parameter needs R_0 = F_q (dimension 1)");
    if (!torsor_check(a).all_true()) throw DomainError("Kummer parameter needs a torsor");
    const std::size_t e = a.component_basis(0).front();
    const FqElement u = a.unit()[e];
    std::optional<PthPowerClass> cls;
    for (auto b : a.component_basis(1)) {
        const FqVector bp = a.power(a.basis_vector(b), a.p().value());
        const PthPowerClass c(bp[e] / u, a.p());
        if (cls && !(*cls == c)) detail::internal_failure("Kummer parameter depends on the choice of b");
        if (!cls) cls = c;
    }
    if (!cls) detail::internal_failure("torsor with R_1 = 0");
    return *cls;
}

/// Result of checking the graded-deformation identity for k = 1..kmax.
struct DeformationReport {
    std::vector<bool> identity;        // I~_{-k} = (J^k)_0
    std::vector<bool> proof_identity;  // (J^k)_0 = sum_{i+j=p} J_i (J^{k-1})_j
    bool bookkeeping = false;          // dim (R~_0 / I~)_n = dim R_0/I for n >= 0, 0 for n < 0
    bool holds() const {
        return bookkeeping && std::all_of(identity.begin(), identity.end(), [](bool b) { return b; }) &&
               std::all_of(proof_identity.begin(), proof_identity.end(), [](bool b) { return b; });
    }
};

/// A graded ideal J = J_0 + ... + J_{p-1}, R_j J_i inside J_{i+j} checked.
class GradedIdeal {
public:
    GradedIdeal(const GradedAlgebra& a, std::vector<Subspace> parts) : parts_(std::move(parts)) {
        const int p = static_cast<int>(a.p().value());
        if (parts_.size() != static_cast<std::size_t>(p)) throw ValidationError("graded ideal needs one part per component");
        for (int i = 0; i < p; ++i) {
            if (parts_[static_cast<std::size_t>(i)].component() != i) throw ValidationError("graded ideal part in wrong component");
            for (int j = 0; j < p; ++j)
                if (!part((i + j) % p).contains(a.product(a.full_component(j), part(i))))
                    throw ValidationError("not an ideal: R_" + std::to_string(j) + " J_" + std::to_string(i) +
                                          " leaves J_" + std::to_string((i + j) % p));
        }
    }

    const Subspace& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    const std::vector<Subspace>& parts() const noexcept { return parts_; }

private:
    std::vector<Subspace> parts_;
};

/// J = I + R_1 + ... + R_{p-1}.
inline GradedIdeal augmentation_ideal(const GradedAlgebra& a) {
    std::vector<Subspace> parts{fixed_ideal(a)};
    for (int c = 1; c < static_cast<int>(a.p().value()); ++c) parts.push_back(a.full_component(c));
    return GradedIdeal(a, std::move(parts));
}

inline GradedIdeal ideal_product(const GradedAlgebra& a, const GradedIdeal& x, const GradedIdeal& y) {
    const int p = static_cast<int>(a.p().value());
    std::vector<Subspace> parts;
    for (int c = 0; c < p; ++c) parts.push_back(a.zero_component(c));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            auto& dst = parts[static_cast<std::size_t>((i + j) % p)];
            dst = dst + a.product(x.part(i), y.part(j));
        }
    return GradedIdeal(a, std::move(parts));
}

inline GradedIdeal unit_ideal(const GradedAlgebra& a) {
    std::vector<Subspace> parts;
    for (int c = 0; c < static_cast<int>(a.p().value()); ++c) parts.push_back(a.full_component(c));
    return GradedIdeal(a, std::move(parts));
}

inline DeformationReport deformation_check(const GradedAlgebra& a, int kmax) {
    if (kmax < 1) throw DomainError("kmax must be positive");
    const int p = static_cast<int>(a.p().value());
    const Subspace ideal = fixed_ideal(a);
    const int smax = 3 * kmax + 2;
    // jp[s] = J^s, with J^0 = R
    std::vector<GradedIdeal> jp{unit_ideal(a), augmentation_ideal(a)};
    for (int s = 2; s <= smax; ++s) jp.push_back(ideal_product(a, jp[1], jp.back()));
    // component i of R~ in t-degree n: R_i for n >= 0, (J^{-n})_i for n < 0
    auto piece = [&](int i, int n) -> const Subspace& {
        return jp[static_cast<std::size_t>(n >= 0 ? 0 : -n)].part(i);
    };
    auto itilde = [&](int n) {
        Subspace acc = a.zero_component(0);
        const int w = kmax + (n < 0 ? -n : n) + 1;
        for (int i = 1; i < p; ++i)
            for (int s = n - w; s <= w; ++s) {
                if (-s > smax || -(n - s) > smax) continue;
                acc = acc + a.product(piece(i, s), piece(p - i, n - s));
            }
        return acc;
    };

    DeformationReport rep;
    for (int k = 1; k <= kmax; ++k) {
        const Subspace& jk0 = jp[static_cast<std::size_t>(k)].part(0);
        rep.identity.push_back(itilde(-k) == jk0);
        Subspace rhs = a.zero_component(0);
        for (int i = 1; i < p; ++i)
            rhs = rhs + a.product(jp[1].part(i), jp[static_cast<std::size_t>(k - 1)].part(p - i));
        rep.proof_identity.push_back(rhs == jk0);
    }
    const std::size_t quotient_dim = a.component_dimension(0) - ideal.dimension();
    rep.bookkeeping = true;
    for (int n = -kmax; n <= kmax; ++n) {
        const Subspace top = piece(0, n);
        const Subspace bottom = itilde(n);
        if (!top.contains(bottom)) {
            rep.bookkeeping = false;
            continue;
        }
        const std::size_t dim = top.dimension() - bottom.dimension();
        if (dim != (n >= 0 ? quotient_dim : 0)) rep.bookkeeping = false;
    }
    return rep;
}

/// Fiber of the torsor t^p = a over Spec F_q: (residue degree, number of
/// points of that degree), with sum of degree * count equal to p.
inline std::vector<std::pair<std::size_t, std::size_t>> fiber_decomposition(const FqElement& a, PrimeModulus p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t total = 0;
    for (const auto& [deg, mult] : factor_kummer(a, p)) {
        total += deg * mult;
        if (!out.empty() && out.back().first == deg)
            out.back().second += mult;
        else
            out.emplace_back(deg, mult);
    }
    if (total != p.value()) detail::internal_failure("fiber degrees do not add up to p");
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> fiber_decomposition(std::uint64_t q, std::uint64_t p, std::int64_t a) {
    const FqField f = FqField::of_order(q);
    return fiber_decomposition(f.from_int(a), PrimeModulus(p));
}

// ---- constructions ----

/// F_q[x_1..x_m]/(x_v^{n_v} - a_v) with x_v of degree d_v; a_v = 0 truncates.
inline GradedAlgebra monomial_algebra(PrimeModulus p, const FqField& f, const std::vector<std::string>& vars,
                                      const std::vector<int>& bounds, const std::vector<int>& degrees,
                                      const std::vector<FqElement>& values) {
    const std::size_t m = vars.size();
    if (bounds.size() != m || degrees.size() != m || values.size() != m) throw DomainError("inconsistent variable data");
    std::vector<std::vector<int>> mons{{}};
    for (std::size_t v = 0; v < m; ++v) {
        if (bounds[v] < 1) throw DomainError("exponent bound must be positive");
        std::vector<std::vector<int>> next;
        for (const auto& mon : mons)
            for (int e = 0; e < bounds[v]; ++e) {
                auto x = mon;
                x.push_back(e);
                next.push_back(std::move(x));
            }
        mons = std::move(next);
    }
    std::vector<std::string> names;
    std::vector<int> comps;
    for (const auto& mon : mons) {
        std::string s;
        int deg = 0;
        for (std::size_t v = 0; v < m; ++v) {
            deg += mon[v] * degrees[v];
            if (mon[v] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[v];
            if (mon[v] > 1) s += "^" + std::to_string(mon[v]);
        }
        names.push_back(s.empty() ? "1" : s);
        comps.push_back(deg);
    }
    auto index = [&](const std::vector<int>& mon) {
        std::size_t i = 0;
        for (std::size_t v = 0; v < m; ++v) i = i * static_cast<std::size_t>(bounds[v]) + static_cast<std::size_t>(mon[v]);
        return i;
    };
    auto product = [&](std::size_t i, std::size_t j) {
        FqVector out = detail::zero_vector(f, mons.size());
        std::vector<int> mon(m);
        FqElement c = f.one();
        for (std::size_t v = 0; v < m; ++v) {
            int e = mons[i][v] + mons[j][v];
            if (e >= bounds[v]) {
                e -= bounds[v];
                c = c * values[v];
            }
            mon[v] = e;
        }
        out[index(mon)] = c;
        return out;
    };
    FqVector unit = detail::zero_vector(f, mons.size());
    unit[0] = f.one();
    return GradedAlgebra(p, f, names, comps, product, unit);
}

/// F_q[t]/(t^p - a), t of degree 1.
inline GradedAlgebra kummer_algebra(PrimeModulus p, const FqElement& a) {
    return monomial_algebra(p, a.field(), {"t"}, {static_cast<int>(p.value())}, {1}, {a});
}

/// F_q[t]/(t^m), t of degree 1: the canonical action on a truncated cone.
inline GradedAlgebra truncated_cone(PrimeModulus p, const FqField& f, int m) {
    return monomial_algebra(p, f, {"t"}, {m}, {1}, {f.zero()});
}

/// A x B with componentwise multiplication and unit (1, 1).
inline GradedAlgebra direct_product(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (!(a.p() == b.p()) || !(a.field() == b.field())) throw MismatchError("direct product needs the same p and field");
    const std::size_t na = a.dimension(), nb = b.dimension();
    std::vector<std::string> names;
    std::vector<int> comps;
    for (std::size_t i = 0; i < na; ++i) {
        names.push_back(a.names()[i] + "_1");
        comps.push_back(a.component_of(i));
    }
    for (std::size_t i = 0; i < nb; ++i) {
        names.push_back(b.names()[i] + "_2");
        comps.push_back(b.component_of(i));
    }
    auto product = [&](std::size_t i, std::size_t j) {
        FqVector v = detail::zero_vector(a.field(), na + nb);
        if (i < na && j < na) {
            const auto& t = a.product(i, j);
            std::copy(t.begin(), t.end(), v.begin());
        } else if (i >= na && j >= na) {
            const auto& t = b.product(i - na, j - na);
            std::copy(t.begin(), t.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
        }
        return v;
    };
    FqVector unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    return GradedAlgebra(a.p(), a.field(), names, comps, product, unit);
}

/// The same algebra with every basis element in degree 0.
inline GradedAlgebra trivial_action(const GradedAlgebra& a) {
    return GradedAlgebra(a.p(), a.field(), a.names(), std::vector<int>(a.dimension(), 0),
                         [&](std::size_t i, std::size_t j) { return a.product(i, j); }, a.unit());
}

/// F_q + V with V^2 = 0, one basis vector of V per entry of `degrees`.
inline GradedAlgebra square_zero_algebra(PrimeModulus p, const FqField& f, const std::vector<std::string>& vars,
                                         const std::vector<int>& degrees) {
    if (vars.size() != degrees.size()) throw DomainError("one degree per variable required");
    const std::size_t n = vars.size() + 1;
    std::vector<std::string> names{"1"};
    names.insert(names.end(), vars.begin(), vars.end());
    std::vector<int> comps{0};
    comps.insert(comps.end(), degrees.begin(), degrees.end());
    auto product = [&](std::size_t i, std::size_t j) {
        FqVector v = detail::zero_vector(f, n);
        if (i == 0) v[j] = f.one();
        else if (j == 0) v[i] = f.one();
        return v;
    };
    FqVector unit = detail::zero_vector(f, n);
    unit[0] = f.one();
    return GradedAlgebra(p, f, names, comps, product, unit);
}

struct NamedAlgebra {
    std::string name;
    GradedAlgebra algebra;
    bool expected_torsor;  // known from the construction
};

/// Kummer algebras, truncated cones, group algebras, square-zero algebras,
/// direct products, trivial actions and all their twists, for p in {2, 3, 5}.
inline std::vector<NamedAlgebra> graded_corpus() {
    std::vector<NamedAlgebra> out;
    const std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> plan{
        {2, {3, 5, 9}}, {3, {4, 5, 7, 13}}, {5, {3, 4, 11}}};
    for (const auto& [pv, qs] : plan) {
        const PrimeModulus p(pv);
        const int pi = static_cast<int>(pv);
        for (auto q : qs) {
            const FqField f = FqField::of_order(q);
            const std::string tag = "p" + std::to_string(pv) + "_q" + std::to_string(q) + "_";
            std::vector<NamedAlgebra> base;
            auto add = [&](const std::string& n, GradedAlgebra a, bool torsor) {
                base.push_back({tag + n, std::move(a), torsor});
            };
            // a primitive element is never a p-th power when p | q-1
            FqElement prim = f.one();
            for (std::uint64_t c = 1; c < q; ++c) {
                const FqElement x = f.from_code(c);
                std::uint64_t ord = 1;
                for (FqElement y = x; !y.is_one(); y = y * x) ++ord;
                if (ord == q - 1) {
                    prim = x;
                    break;
                }
            }
            add("kummer_1", kummer_algebra(p, f.one()), true);
            add("kummer_prim", kummer_algebra(p, prim), true);
            add("kummer_prim2", kummer_algebra(p, prim * prim), true);
            for (int m : {1, 2, pi, pi + 1}) add("cone_" + std::to_string(m), truncated_cone(p, f, m), false);
            add("group_s0_t1", monomial_algebra(p, f, {"s", "t"}, {pi, pi}, {0, 1}, {f.one(), f.one()}), true);
            add("group_s1_t1", monomial_algebra(p, f, {"s", "t"}, {pi, pi}, {1, 1}, {f.one(), f.one()}), true);
            add("t2p_prim", monomial_algebra(p, f, {"t"}, {2 * pi}, {1}, {prim}), true);
            add("xy_exterior", monomial_algebra(p, f, {"x", "y"}, {2, 2}, {1, pi - 1}, {f.zero(), f.zero()}), false);
            add("square_zero", square_zero_algebra(p, f, {"x", "y"}, {1, 2 % pi}), false);
            add("kummer_x_kummer", direct_product(kummer_algebra(p, f.one()), kummer_algebra(p, prim)), true);
            add("kummer_x_cone", direct_product(kummer_algebra(p, prim), truncated_cone(p, f, 2)), false);
            add("trivial_kummer", trivial_action(kummer_algebra(p, prim)), false);
            for (auto& b : base) {
                for (int k = 2; k < pi; ++k)
                    out.push_back({b.name + "_tw" + std::to_string(k), twist(b.algebra, k), b.expected_torsor});
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

}  // namespace steencalc
