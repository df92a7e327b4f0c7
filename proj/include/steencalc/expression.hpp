#pragma once

// Recursive-descent parser for the small arithmetic language used in input
// files and on the command line:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | name | '(' expr ')'
//
// The tree is evaluated into cycle classes, raw polynomials, elements of
// F_q, rational functions over F_q and linear combinations of named basis
// vectors. Every error is an InputError carrying a byte offset.

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steencalc/arith/finite_field.hpp"
#include "steencalc/chow_ring.hpp"
#include "steencalc/errors.hpp"
#include "steencalc/milnor_k.hpp"

namespace steencalc {

struct Expr {
    enum class Kind { Integer, Name, Add, Sub, Neg, Mul, Div, Pow };
    Kind kind;
    std::size_t position;
    std::int64_t value = 0;  // Integer literal, or exponent of Pow
    std::string name;
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        skip();
        if (at_end()) throw InputError("empty expression", pos_);
        ExprPtr e = expr();
        skip();
        if (!at_end()) throw InputError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, std::size_t pos, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->position = pos;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('+')) lhs = node(Expr::Kind::Add, at, {lhs, term()});
            else if (accept('-')) lhs = node(Expr::Kind::Sub, at, {lhs, term()});
            else return lhs;
        }
    }
    ExprPtr term() {
        ExprPtr lhs = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('*')) lhs = node(Expr::Kind::Mul, at, {lhs, unary()});
            else if (accept('/')) lhs = node(Expr::Kind::Div, at, {lhs, unary()});
            else return lhs;
        }
    }
    ExprPtr unary() {
        skip();
        const std::size_t at = pos_;
        if (accept('-')) return node(Expr::Kind::Neg, at, {unary()});
        if (accept('+')) return unary();
        return power();
    }
    ExprPtr power() {
        ExprPtr base = primary();
        skip();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip();
        if (!at_end() && s_[pos_] == '-') throw InputError("negative exponents are not allowed", pos_);
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw InputError("exponent must be a nonnegative integer", pos_);
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->position = at;
        e->value = integer();
        e->args = {base};
        skip();
        if (!at_end() && s_[pos_] == '^') throw InputError("chained exponents need parentheses", pos_);
        return e;
    }
    ExprPtr primary() {
        skip();
        if (at_end()) throw InputError("unexpected end of expression", pos_);
        const std::size_t at = pos_;
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!accept(')')) throw InputError("missing ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Integer;
            e->position = at;
            e->value = integer();
            if (!at_end() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                throw InputError("missing '*' between number and name", pos_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Name;
            e->position = at;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) e->name += s_[pos_++];
            return e;
        }
        throw InputError(std::string("unexpected '") + c + "'", pos_);
    }
    std::int64_t integer() {
        const std::size_t at = pos_;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const int d = s_[pos_++] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw InputError("integer literal too large", at);
            v = v * 10 + d;
        }
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

/// Fold an expression tree over a value type with the given operations.
template <class V, class Ops>
V fold(const Expr& e, const Ops& ops) {
    switch (e.kind) {
        case Expr::Kind::Integer: return ops.integer(e.value, e.position);
        case Expr::Kind::Name: return ops.name(e.name, e.position);
        case Expr::Kind::Add: return ops.add(fold<V>(*e.args[0], ops), fold<V>(*e.args[1], ops), e.position);
        case Expr::Kind::Sub: return ops.sub(fold<V>(*e.args[0], ops), fold<V>(*e.args[1], ops), e.position);
        case Expr::Kind::Neg: return ops.neg(fold<V>(*e.args[0], ops), e.position);
        case Expr::Kind::Mul: return ops.mul(fold<V>(*e.args[0], ops), fold<V>(*e.args[1], ops), e.position);
        case Expr::Kind::Div: return ops.div(fold<V>(*e.args[0], ops), fold<V>(*e.args[1], ops), e.position);
        case Expr::Kind::Pow: return ops.pow(fold<V>(*e.args[0], ops), e.value, e.position);
    }
    internal_failure("unknown expression node");
}

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) { return detail::Parser(text).parse(); }

/// A class in a Chow ring; names are the ring's generators.
inline CycleClass evaluate_class(const Expr& e, const RingSpec& ring) {
    struct Ops {
        const RingSpec& r;
        CycleClass integer(std::int64_t v, std::size_t) const { return CycleClass::constant(r, v); }
        CycleClass name(const std::string& n, std::size_t at) const {
            if (!r.generator_index(n)) throw InputError("unknown generator '" + n + "'", at);
            return CycleClass::generator(r, n);
        }
        CycleClass add(const CycleClass& a, const CycleClass& b, std::size_t) const { return a + b; }
        CycleClass sub(const CycleClass& a, const CycleClass& b, std::size_t) const { return a - b; }
        CycleClass neg(const CycleClass& a, std::size_t) const { return -a; }
        CycleClass mul(const CycleClass& a, const CycleClass& b, std::size_t) const { return a * b; }
        CycleClass div(const CycleClass&, const CycleClass&, std::size_t at) const {
            throw InputError("division is not allowed in cycle class expressions", at);
        }
        CycleClass pow(const CycleClass& a, std::int64_t k, std::size_t) const { return a.pow(static_cast<std::uint64_t>(k)); }
    };
    return detail::fold<CycleClass>(e, Ops{ring});
}

inline CycleClass parse_class(std::string_view text, const RingSpec& ring) { return evaluate_class(*parse_expression(text), ring); }

/// A polynomial in named variables with coefficients mod p, with no
/// relations imposed; used for the relations of a ring presentation.
inline std::map<Exponents, std::uint32_t> evaluate_raw(const Expr& e, const std::vector<std::string>& vars, PrimeModulus p) {
    using Poly = std::map<Exponents, std::uint32_t>;
    struct Ops {
        const std::vector<std::string>& vars;
        PrimeModulus p;
        static void clean(Poly& a) {
            for (auto it = a.begin(); it != a.end();) it = it->second ? std::next(it) : a.erase(it);
        }
        Poly integer(std::int64_t v, std::size_t) const {
            Poly r;
            r[Exponents(vars.size(), 0)] = p.reduce(v);
            clean(r);
            return r;
        }
        Poly name(const std::string& n, std::size_t at) const {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == n) {
                    Exponents e(vars.size(), 0);
                    e[i] = 1;
                    return Poly{{e, 1}};
                }
            throw InputError("unknown generator '" + n + "'", at);
        }
        Poly add(Poly a, const Poly& b, std::size_t) const {
            for (const auto& [m, c] : b) a[m] = p.add(a[m], c);
            clean(a);
            return a;
        }
        Poly neg(Poly a, std::size_t) const {
            for (auto& [m, c] : a) c = p.neg(c);
            return a;
        }
        Poly sub(Poly a, const Poly& b, std::size_t at) const { return add(std::move(a), neg(b, at), at); }
        Poly mul(const Poly& a, const Poly& b, std::size_t) const {
            Poly r;
            for (const auto& [ma, ca] : a)
                for (const auto& [mb, cb] : b) {
                    Exponents m(ma.size());
                    for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                    r[m] = p.add(r[m], p.mul(ca, cb));
                }
            clean(r);
            return r;
        }
        Poly div(const Poly&, const Poly&, std::size_t at) const {
            throw InputError("division is not allowed in relations", at);
        }
        Poly pow(const Poly& a, std::int64_t k, std::size_t at) const {
            Poly r = integer(1, at);
            for (std::int64_t i = 0; i < k; ++i) r = mul(r, a, at);
            return r;
        }
    };
    return detail::fold<std::map<Exponents, std::uint32_t>>(e, Ops{vars, p});
}

/// An element of F_q; integers are reduced into the prime field and `g`
/// names the field generator when q is not prime.
inline FqElement evaluate_field_element(const Expr& e, const FqField& f) {
    struct Ops {
        const FqField& f;
        FqElement integer(std::int64_t v, std::size_t) const { return f.from_int(v); }
        FqElement name(const std::string& n, std::size_t at) const {
            if (n == "g" && f.degree() > 1) return f.generator();
            throw InputError("unknown name '" + n + "' in a field element", at);
        }
        FqElement add(const FqElement& a, const FqElement& b, std::size_t) const { return a + b; }
        FqElement sub(const FqElement& a, const FqElement& b, std::size_t) const { return a - b; }
        FqElement neg(const FqElement& a, std::size_t) const { return f.zero() - a; }
        FqElement mul(const FqElement& a, const FqElement& b, std::size_t) const { return a * b; }
        FqElement div(const FqElement& a, const FqElement& b, std::size_t at) const {
            if (b.is_zero()) throw InputError("division by zero", at);
            return a / b;
        }
        FqElement pow(const FqElement& a, std::int64_t k, std::size_t) const { return a.pow(static_cast<std::uint64_t>(k)); }
    };
    return detail::fold<FqElement>(e, Ops{f});
}

inline FqElement parse_field_element(std::string_view text, const FqField& f) {
    return evaluate_field_element(*parse_expression(text), f);
}

/// A rational function in `var` over F_q.
inline RationalFunction evaluate_rational_function(const Expr& e, const FqField& f, const std::string& var = "t") {
    struct Ops {
        const FqField& f;
        const std::string& var;
        RationalFunction integer(std::int64_t v, std::size_t) const { return RationalFunction::constant(f.from_int(v)); }
        RationalFunction name(const std::string& n, std::size_t at) const {
            if (n == var) return RationalFunction::t(f);
            if (n == "g" && f.degree() > 1) return RationalFunction::constant(f.generator());
            throw InputError("unknown name '" + n + "' in a rational function of " + var, at);
        }
        RationalFunction add(const RationalFunction& a, const RationalFunction& b, std::size_t) const { return a + b; }
        RationalFunction sub(const RationalFunction& a, const RationalFunction& b, std::size_t) const { return a - b; }
        RationalFunction neg(const RationalFunction& a, std::size_t) const { return -a; }
        RationalFunction mul(const RationalFunction& a, const RationalFunction& b, std::size_t) const { return a * b; }
        RationalFunction div(const RationalFunction& a, const RationalFunction& b, std::size_t at) const {
            if (b.is_zero()) throw InputError("division by zero", at);
            return a / b;
        }
        RationalFunction pow(const RationalFunction& a, std::int64_t k, std::size_t) const { return a.pow(k); }
    };
    return detail::fold<RationalFunction>(e, Ops{f, var});
}

inline RationalFunction parse_rational_function(std::string_view text, const FqField& f, const std::string& var = "t") {
    return evaluate_rational_function(*parse_expression(text), f, var);
}

/// An F_q-linear combination of named basis vectors, such as "3*e - t2".
inline std::vector<FqElement> parse_linear_combination(std::string_view text, const FqField& f,
                                                       const std::vector<std::string>& names) {
    // a scalar has no vector part; products need at least one scalar factor
    struct Value {
        std::optional<FqElement> scalar;
        std::vector<FqElement> vec;
    };
    struct Ops {
        const FqField& f;
        const std::vector<std::string>& names;
        Value integer(std::int64_t v, std::size_t) const { return {f.from_int(v), {}}; }
        Value name(const std::string& n, std::size_t at) const {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == n) {
                    Value r{std::nullopt, std::vector<FqElement>(names.size(), f.zero())};
                    r.vec[i] = f.one();
                    return r;
                }
            if (n == "g" && f.degree() > 1) return {f.generator(), {}};
            throw InputError("unknown basis element '" + n + "'", at);
        }
        Value add(const Value& a, const Value& b, std::size_t at) const {
            if (a.scalar && b.scalar) return {*a.scalar + *b.scalar, {}};
            if (a.scalar || b.scalar) throw InputError("cannot add a scalar to a basis combination", at);
            Value r = a;
            for (std::size_t i = 0; i < r.vec.size(); ++i) r.vec[i] = r.vec[i] + b.vec[i];
            return r;
        }
        Value neg(const Value& a, std::size_t) const {
            if (a.scalar) return {f.zero() - *a.scalar, {}};
            Value r = a;
            for (auto& x : r.vec) x = f.zero() - x;
            return r;
        }
        Value sub(const Value& a, const Value& b, std::size_t at) const { return add(a, neg(b, at), at); }
        Value mul(const Value& a, const Value& b, std::size_t at) const {
            if (a.scalar && b.scalar) return {*a.scalar * *b.scalar, {}};
            if (!a.scalar && !b.scalar) throw InputError("product of two basis elements in a linear combination", at);
            const FqElement c = a.scalar ? *a.scalar : *b.scalar;
            Value r = a.scalar ? b : a;
            for (auto& x : r.vec) x = x * c;
            return r;
        }
        Value div(const Value& a, const Value& b, std::size_t at) const {
            if (!b.scalar) throw InputError("division by a basis element", at);
            if (b.scalar->is_zero()) throw InputError("division by zero", at);
            return mul(a, Value{b.scalar->inverse(), {}}, at);
        }
        Value pow(const Value& a, std::int64_t k, std::size_t at) const {
            if (!a.scalar) throw InputError("power of a basis element in a linear combination", at);
            return {a.scalar->pow(static_cast<std::uint64_t>(k)), {}};
        }
    };
    Value v = detail::fold<Value>(*parse_expression(text), Ops{f, names});
    if (v.scalar) {
        if (!v.scalar->is_zero()) throw InputError("a nonzero scalar is not a basis combination", 0);
        return std::vector<FqElement>(names.size(), f.zero());
    }
    return v.vec;
}

}  // namespace steencalc
