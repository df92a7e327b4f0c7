#pragma once

// Ch(X)[l]: polynomials in the codimension-1 symbol l with coefficients in a
// Chow ring. Coefficients may be mixed in codimension; total codimension of
// a_i l^i counts l with weight 1.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/chow_ring.hpp"

namespace steencalc {

class EquivariantClass {
public:
    explicit EquivariantClass(RingSpec ring) : ring_(std::move(ring)) {}
    /// sum_i coeffs[i] * l^i
    EquivariantClass(RingSpec ring, std::vector<CycleClass> coeffs) : ring_(std::move(ring)), a_(std::move(coeffs)) {
        for (const auto& c : a_)
            if (!(c.ring() == ring_)) throw MismatchError("equivariant coefficient from another ring");
        trim();
    }

    static EquivariantClass from_base(const CycleClass& a) { return {a.ring(), {a}}; }
    static EquivariantClass l(const RingSpec& r) { return {r, {CycleClass::zero(r), CycleClass::one(r)}}; }
    static EquivariantClass one(const RingSpec& r) { return from_base(CycleClass::one(r)); }

    const RingSpec& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return a_.empty(); }
    /// Highest power of l present, -1 for zero.
    int l_degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
    /// Coefficient a_i of l^i.
    CycleClass coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(a_.size())) return CycleClass::zero(ring_);
        return a_[static_cast<std::size_t>(i)];
    }

    friend EquivariantClass operator+(const EquivariantClass& x, const EquivariantClass& y) {
        check(x, y);
        std::vector<CycleClass> r;
        for (int i = 0; i <= std::max(x.l_degree(), y.l_degree()); ++i) r.push_back(x.coefficient(i) + y.coefficient(i));
        return {x.ring_, std::move(r)};
    }
    friend EquivariantClass operator-(const EquivariantClass& x, const EquivariantClass& y) {
        check(x, y);
        std::vector<CycleClass> r;
        for (int i = 0; i <= std::max(x.l_degree(), y.l_degree()); ++i) r.push_back(x.coefficient(i) - y.coefficient(i));
        return {x.ring_, std::move(r)};
    }
    friend EquivariantClass operator*(const EquivariantClass& x, const EquivariantClass& y) {
        check(x, y);
        if (x.is_zero() || y.is_zero()) return EquivariantClass(x.ring_);
        std::vector<CycleClass> r(x.a_.size() + y.a_.size() - 1, CycleClass::zero(x.ring_));
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            for (std::size_t j = 0; j < y.a_.size(); ++j) r[i + j] += x.a_[i] * y.a_[j];
        return {x.ring_, std::move(r)};
    }
    friend EquivariantClass operator*(const CycleClass& c, const EquivariantClass& x) { return from_base(c) * x; }

    /// Part of total codimension k: sum_i (a_i)_{k-i} l^i.
    EquivariantClass graded_component(int k) const {
        std::vector<CycleClass> r;
        for (int i = 0; i <= l_degree() && i <= k; ++i) r.push_back(a_[static_cast<std::size_t>(i)].graded_component(k - i));
        return {ring_, std::move(r)};
    }

    bool is_homogeneous_of(int k) const { return graded_component(k) == *this; }

    /// Drop every term of total codimension above max_codim.
    EquivariantClass truncated(int max_codim) const {
        std::vector<CycleClass> r;
        for (int i = 0; i <= l_degree() && i <= max_codim; ++i) {
            CycleClass c = CycleClass::zero(ring_);
            for (int k = 0; k <= max_codim - i; ++k) c += a_[static_cast<std::size_t>(i)].graded_component(k);
            r.push_back(std::move(c));
        }
        return {ring_, std::move(r)};
    }

    friend bool operator==(const EquivariantClass& x, const EquivariantClass& y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_;
    }

    std::string to_string() const {
        if (a_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            const std::string li = i == 0 ? "" : (i == 1 ? "l" : "l^" + std::to_string(i));
            s += i == 0 ? a_[i].to_string() : "(" + a_[i].to_string() + ")*" + li;
        }
        return s;
    }

private:
    void trim() {
        while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    }
    static void check(const EquivariantClass& x, const EquivariantClass& y) {
        if (!(x.ring_ == y.ring_)) throw MismatchError("equivariant classes from different rings");
    }

    RingSpec ring_;
    std::vector<CycleClass> a_;
};

/// Inverse of a class with constant term 1, modulo terms of total
/// codimension above max_codim (powers of l do not truncate on their own).
inline EquivariantClass invert_unit_series(const EquivariantClass& a, int max_codim) {
    if (!(a.coefficient(0).constant_term() == 1))
        throw DomainError("equivariant series inversion needs constant term 1, got " + a.to_string());
    const auto one = EquivariantClass::one(a.ring());
    const auto u = (one - a).truncated(max_codim);
    EquivariantClass b = one;
    for (int j = 0; j < max_codim; ++j) b = (one + u * b).truncated(max_codim);
    return b;
}

/// Substitute l -> 1: a_0 + a_1 + ... + a_n.
inline CycleClass epsilon(const EquivariantClass& s) {
    CycleClass r = CycleClass::zero(s.ring());
    for (int i = 0; i <= s.l_degree(); ++i) r += s.coefficient(i);
    return r;
}

}  // namespace steencalc
