#pragma once

// Named randomized property suites. Each returns a SuiteReport that is
// deterministic for a given seed apart from the timing field.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "steencalc/arith/prime.hpp"
#include "steencalc/char_classes.hpp"
#include "steencalc/graded_algebra.hpp"
#include "steencalc/milnor_k.hpp"
#include "steencalc/steenrod.hpp"

namespace steencalc {

struct SuiteFailure {
    std::string input;   // smallest failing input found
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<SuiteFailure> failures;  // first few, minimized where possible
    double wall_seconds = 0;

    bool passed() const noexcept { return failure_count == 0; }

    nlohmann::json to_json(bool with_timing = true) const {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& x : failures) f.push_back({{"input", x.input}, {"detail", x.detail}});
        nlohmann::json j = {{"suite", suite},   {"seed", seed},         {"cases", cases},
                            {"passed", passed()}, {"failure_count", failure_count}, {"failures", f}};
        if (with_timing) j["wall_seconds"] = wall_seconds;
        return j;
    }
};

namespace detail {

class SuiteRun {
public:
    SuiteRun(std::string name, std::uint64_t seed) : rng(seed) {
        report_.suite = std::move(name);
        report_.seed = seed;
    }

    /// Count one case; on failure keep the description (computed lazily).
    void check(bool ok, const std::function<std::string()>& input, const std::string& detail = {}) {
        ++report_.cases;
        if (ok) return;
        ++report_.failure_count;
        if (report_.failures.size() < kKeep) report_.failures.push_back({input(), detail});
    }

    SuiteReport finish(std::chrono::steady_clock::time_point start) {
        report_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report_;
    }

    std::mt19937_64 rng;

private:
    static constexpr std::size_t kKeep = 10;
    SuiteReport report_;
};

/// Drop terms one at a time while the failure persists.
inline CycleClass minimize_class(CycleClass c, const std::function<bool(const CycleClass&)>& fails) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const auto& [e, coef] : c.terms()) {
            CycleClass smaller = c - CycleClass::monomial(c.ring(), e, coef);
            if (fails(smaller)) {
                c = std::move(smaller);
                shrunk = true;
                break;
            }
        }
    }
    return c;
}

inline CycleClass random_homogeneous(const RingSpec& r, int codim, std::mt19937_64& rng) {
    CycleClass c = CycleClass::zero(r);
    for (std::size_t i = 0; i < r.basis_size(); ++i)
        if (r.basis_codim(i) == codim)
            c += CycleClass::monomial(r, r.basis()[i], static_cast<std::int64_t>(rng() % r.modulus().value()));
    return c;
}

inline CycleClass random_class(const RingSpec& r, std::mt19937_64& rng) {
    CycleClass c = CycleClass::zero(r);
    for (std::size_t i = 0; i < r.basis_size(); ++i)
        c += CycleClass::monomial(r, r.basis()[i], static_cast<std::int64_t>(rng() % r.modulus().value()));
    return c;
}

/// Presets of the pth-power criterion: P^n (n <= 6) and P^a x P^b (1 <= a, b <= 4).
inline std::vector<VarietySpec> pthpower_presets(PrimeModulus p) {
    std::vector<VarietySpec> out;
    for (int n = 0; n <= 6; ++n) out.push_back(VarietySpec::projective_space(n, p));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) out.push_back(VarietySpec::product_of_projective_spaces({a, b}, p));
    return out;
}

inline std::string describe(const VarietySpec& x, const CycleClass& c) {
    return "p=" + std::to_string(x.modulus().value()) + " X=" + x.ring().label() + " class=" + c.to_string();
}

inline RingSpec random_product_ring(PrimeModulus p, std::mt19937_64& rng) {
    std::vector<int> dims;
    const int factors = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < factors; ++i) dims.push_back(1 + static_cast<int>(rng() % (factors == 1 ? 6 : 3)));
    return RingSpec::product_of_projective_spaces(dims, p);
}

inline std::vector<CycleClass> random_roots(const RingSpec& r, std::mt19937_64& rng) {
    std::vector<CycleClass> roots;
    const int rank = static_cast<int>(rng() % 5);
    for (int i = 0; i < rank; ++i) roots.push_back(random_homogeneous(r, 1, rng));
    return roots;
}

inline CycleClass literal_product(const RingSpec& r, const std::vector<CycleClass>& roots, std::int64_t sign) {
    const auto p = r.modulus().value();
    CycleClass acc = CycleClass::one(r);
    for (const auto& x : roots) acc = acc * (CycleClass::one(r) + sign * x.pow(p - 1));
    return acc;
}

inline std::string roots_string(const std::vector<CycleClass>& roots) {
    std::string s = "roots=[";
    for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + roots[i].to_string();
    return s + "]";
}

inline const std::vector<PrimeModulus>& suite_primes() {
    static const std::vector<PrimeModulus> ps{PrimeModulus(2), PrimeModulus(3), PrimeModulus(5)};
    return ps;
}

}  // namespace detail

/// S^0 = id, S^k(d) = d^p at k = codim d, and S^r = 0 for r outside [0, k].
inline SuiteReport suite_pthpower(std::uint64_t seed, int random_per_preset = 200) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("pthpower", seed);
    for (const auto& p : detail::suite_primes()) {
        const int step = static_cast<int>(p.value()) - 1;
        for (const auto& x : detail::pthpower_presets(p)) {
            const RingSpec& r = x.ring();
            auto fails = [&](const CycleClass& d, int k) {
                const CycleClass total = steenrod_coh_total(x, d);
                for (int c = 0; c <= r.dimension(); ++c) {
                    const CycleClass comp = total.graded_component(c);
                    const int shift = c - k;
                    const bool on_lattice = shift >= 0 && shift % step == 0 && shift / step <= k;
                    if (!on_lattice && !comp.is_zero()) return true;
                }
                if (!(steenrod_coh_k(x, d, 0) == d)) return true;
                if (!(steenrod_coh_k(x, d, k) == d.pow(p.value()))) return true;
                return false;
            };
            std::vector<std::pair<CycleClass, int>> cases;
            for (std::size_t i = 0; i < r.basis_size(); ++i)
                cases.emplace_back(CycleClass::monomial(r, r.basis()[i]), r.basis_codim(i));
            for (int i = 0; i < random_per_preset; ++i) {
                const int k = static_cast<int>(run.rng() % static_cast<std::uint64_t>(r.dimension() + 1));
                cases.emplace_back(detail::random_homogeneous(r, k, run.rng), k);
            }
            for (const auto& [d, k] : cases) {
                const bool bad = fails(d, k);
                run.check(!bad, [&, k = k, d = d] {
                    return detail::describe(x, detail::minimize_class(d, [&](const CycleClass& c) { return fails(c, k); }));
                });
            }
        }
    }
    return run.finish(start);
}

/// S_X(gamma delta) = S_X(gamma) S_X(delta).
inline SuiteReport suite_cartan(std::uint64_t seed, int per_preset = 50) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("cartan", seed);
    for (const auto& p : detail::suite_primes())
        for (const auto& x : detail::pthpower_presets(p))
            for (int i = 0; i < per_preset; ++i) {
                const auto g = detail::random_class(x.ring(), run.rng), d = detail::random_class(x.ring(), run.rng);
                run.check(steenrod_coh_total(x, g * d) == steenrod_coh_total(x, g) * steenrod_coh_total(x, d),
                          [&] { return detail::describe(x, g) + " delta=" + d.to_string(); });
            }
    return run.finish(start);
}

/// Coefficient of h^{k(p-1)} in (1 + h^{p-1})^{-k(p-1)-1}, three ways.
inline SuiteReport suite_prx_divisibility(std::uint64_t seed) {
    using boost::multiprecision::cpp_int;
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("prx-divisibility", seed);
    for (const auto& p : detail::suite_primes()) {
        const int step = static_cast<int>(p.value()) - 1;
        for (int k = 1; k <= 5; ++k) {
            const int r = k * step;
            const FpElement series = degree(prx_series(r, p));
            const FpElement lucas = binom_neg_mod_p(static_cast<std::uint64_t>(r + 1), static_cast<std::uint64_t>(k), p);
            cpp_int exact = 1;  // C(pk, k)
            for (int i = 0; i < k; ++i) exact = exact * (static_cast<int>(p.value()) * k - i) / (i + 1);
            const std::int64_t exact_mod = static_cast<std::int64_t>(exact % p.value());
            const FpElement signed_exact = FpElement((k % 2 ? -1 : 1) * exact_mod, p);
            run.check(series == lucas && lucas == signed_exact && series == 0, [&] {
                return "p=" + std::to_string(p.value()) + " k=" + std::to_string(k) + " series=" +
                       std::to_string(series.value()) + " binom=" + std::to_string(lucas.value()) +
                       " exact=" + std::to_string(signed_exact.value());
            });
        }
        // off the lattice the coefficient of the top class vanishes
        for (int r = 1; r <= 5 * step; ++r)
            if (r % step != 0)
                run.check(degree(prx_series(r, p)) == 0,
                          [&] { return "p=" + std::to_string(p.value()) + " r=" + std::to_string(r); });
    }
    return run.finish(start);
}

/// b multiplicativity, b(L) = 1 + c1^{p-1}, b = literal root product, c s = 1.
inline SuiteReport suite_bclass(std::uint64_t seed, int per_prime = 200) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("bclass", seed);
    for (const auto& p : detail::suite_primes())
        for (int i = 0; i < per_prime; ++i) {
            const RingSpec r = detail::random_product_ring(p, run.rng);
            const auto xs = detail::random_roots(r, run.rng), ys = detail::random_roots(r, run.rng);
            const auto v = BundleClass::split(r, xs), w = BundleClass::split(r, ys);
            auto in = [&] { return "p=" + std::to_string(p.value()) + " X=" + r.label() + " " + detail::roots_string(xs) + " " + detail::roots_string(ys); };
            run.check(b_class(v + w) == b_class(v) * b_class(w), in, "b(V+W) != b(V) b(W)");
            run.check(b_class(v) == detail::literal_product(r, xs, 1), in, "b(V) != prod(1 + x^{p-1})");
            run.check(b_class(v - w) * b_class(w) == b_class(v), in, "b(V-W) b(W) != b(V)");
            run.check(segre_total(v) * v.total_chern() == CycleClass::one(r), in, "c s != 1");
            const auto l = detail::random_homogeneous(r, 1, run.rng);
            run.check(b_class(BundleClass::line(l)) == CycleClass::one(r) + l.pow(p.value() - 1),
                      [&] { return "p=" + std::to_string(p.value()) + " X=" + r.label() + " c1=" + l.to_string(); },
                      "b(L) != 1 + c1^{p-1}");
        }
    return run.finish(start);
}

/// omega_{k(p-1)} = (-1)^k b_{k(p-1)}, omega = literal product, zero off the lattice.
inline SuiteReport suite_omega(std::uint64_t seed, int per_prime = 200) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("omega", seed);
    for (const auto& p : detail::suite_primes()) {
        const int step = static_cast<int>(p.value()) - 1;
        for (int i = 0; i < per_prime; ++i) {
            const RingSpec r = detail::random_product_ring(p, run.rng);
            const auto xs = detail::random_roots(r, run.rng);
            const auto v = BundleClass::split(r, xs);
            const CycleClass om = omega_class(v), b = b_class(v);
            bool ok = om == detail::literal_product(r, xs, -1);
            for (int c = 0; c <= r.dimension(); ++c) {
                if (c % step != 0) {
                    ok = ok && om.graded_component(c).is_zero();
                    continue;
                }
                const std::int64_t sign = (c / step) % 2 ? -1 : 1;
                ok = ok && om.graded_component(c) == sign * b.graded_component(c);
            }
            run.check(ok, [&] { return "p=" + std::to_string(p.value()) + " X=" + r.label() + " " + detail::roots_string(xs); });
        }
    }
    return run.finish(start);
}

/// mu(V (x) H) = (-1)^{rank V} omega(V).
inline SuiteReport suite_mu(std::uint64_t seed, int per_prime = 200) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("mu", seed);
    for (const auto& p : detail::suite_primes())
        for (int i = 0; i < per_prime; ++i) {
            const RingSpec r = detail::random_product_ring(p, run.rng);
            const auto xs = detail::random_roots(r, run.rng);
            const std::int64_t sign = xs.size() % 2 ? -1 : 1;
            run.check(mu_class(tensor_H_filtration(r, xs)) == sign * omega_class(BundleClass::split(r, xs)),
                      [&] { return "p=" + std::to_string(p.value()) + " X=" + r.label() + " " + detail::roots_string(xs); });
        }
    return run.finish(start);
}

/// corcalc_eval agrees with the seed-based operation and every subcone
/// class passes the brolemma check, for Z = X and linear Z in X.
inline SuiteReport suite_corcalc(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("corcalc", seed);
    for (const auto& p : detail::suite_primes()) {
        std::vector<std::pair<VarietySpec, std::vector<int>>> spaces;
        for (int n = 0; n <= 5; ++n) spaces.push_back({VarietySpec::projective_space(n, p), {n}});
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) spaces.push_back({VarietySpec::product_of_projective_spaces({a, b}, p), {a, b}});
        for (const auto& [x, dims] : spaces) {
            std::vector<std::vector<int>> subs{{}};
            for (int d : dims) {
                std::vector<std::vector<int>> next;
                for (const auto& s : subs)
                    for (int m = 0; m <= d; ++m) {
                        auto t = s;
                        t.push_back(m);
                        next.push_back(std::move(t));
                    }
                subs = std::move(next);
            }
            for (const auto& sub : subs) {
                const auto rep = corcalc_eval(x, sub);
                run.check(rep.consistent(), [&] {
                    std::string s = "p=" + std::to_string(p.value()) + " X=" + x.ring().label() + " Z=";
                    for (int m : sub) s += "P" + std::to_string(m);
                    return s;
                }, "corcalc=" + rep.corcalc.to_string() + " seed_based=" + rep.seed_based.to_string() +
                       " rost=" + rep.rost_route.to_string() + " brolemma=" + (rep.brolemma ? "1" : "0"));
            }
        }
    }
    return run.finish(start);
}

/// f^* S_X = S_Y f^* for all linear P^m in P^n, n <= 6.
inline SuiteReport suite_pullback(std::uint64_t seed, int random_per_map = 10) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("pullback", seed);
    for (const auto& p : detail::suite_primes())
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= n; ++m) {
                const auto f = MorphismSpec::linear_embedding(m, n, p);
                const RingSpec& r = f.target().ring();
                std::vector<CycleClass> cases;
                for (std::size_t i = 0; i < r.basis_size(); ++i) cases.push_back(CycleClass::monomial(r, r.basis()[i]));
                for (int i = 0; i < random_per_map; ++i) cases.push_back(detail::random_class(r, run.rng));
                auto fails = [&](const CycleClass& c) {
                    return !(pullback(f, steenrod_coh_total(f.target(), c)) == steenrod_coh_total(f.source(), pullback(f, c)));
                };
                for (const auto& c : cases)
                    run.check(!fails(c), [&] {
                        return "p=" + std::to_string(p.value()) + " P" + std::to_string(m) + "->P" + std::to_string(n) +
                               " class=" + detail::minimize_class(c, fails).to_string();
                    });
            }
    return run.finish(start);
}

/// q_* S^{P^r x X} = S^X q_* for q: P^r x X -> X, r <= 2(p-1).
inline SuiteReport suite_pushforward(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("pushforward", seed);
    for (const auto& p : detail::suite_primes()) {
        const std::vector<VarietySpec> xs{VarietySpec::projective_space(0, p), VarietySpec::projective_space(1, p),
                                          VarietySpec::projective_space(2, p),
                                          VarietySpec::product_of_projective_spaces({1, 1}, p)};
        for (const auto& x : xs)
            for (int r = 0; r <= 2 * (static_cast<int>(p.value()) - 1); ++r) {
                const auto q = MorphismSpec::projection(r, x);
                const RingSpec& src = q.source().ring();
                auto fails = [&](const CycleClass& c) {
                    return !(pushforward_projection(r, x, steenrod_hom_total(q.source(), c)) ==
                             steenrod_hom_total(x, pushforward_projection(r, x, c)));
                };
                std::vector<CycleClass> cases;
                for (std::size_t i = 0; i < src.basis_size(); ++i) cases.push_back(CycleClass::monomial(src, src.basis()[i]));
                for (int i = 0; i < 5; ++i) cases.push_back(detail::random_class(src, run.rng));
                for (const auto& c : cases)
                    run.check(!fails(c), [&] {
                        return "p=" + std::to_string(p.value()) + " P" + std::to_string(r) + "x" + x.ring().label() +
                               " class=" + detail::minimize_class(c, fails).to_string();
                    });
            }
    }
    return run.finish(start);
}

/// Torsor conditions are never mixed and match the construction.
inline SuiteReport suite_torsor_equivalence(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("torsor-equivalence", seed);
    const auto corpus = graded_corpus();
    run.check(corpus.size() >= 60, [&] { return "corpus size " + std::to_string(corpus.size()); });
    for (const auto& [name, a, expected] : corpus) {
        const auto r = torsor_check(a);
        run.check(!r.mixed() && r.all_true() == expected, [&, &name = name] { return name; },
                  r.mixed() ? "mixed conditions" : "unexpected verdict");
    }
    return run.finish(start);
}

inline SuiteReport suite_deformation(std::uint64_t seed, int kmax = 4) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("deformation", seed);
    for (const auto& [name, a, expected] : graded_corpus()) {
        const auto rep = deformation_check(a, kmax);
        run.check(rep.holds(), [&, &name = name] { return name; }, rep.bookkeeping ? "identity" : "bookkeeping");
    }
    return run.finish(start);
}

/// Sum of residue degrees is p, and the rational points are the p-th roots of a.
inline SuiteReport suite_fibers(std::uint64_t seed, int count = 50) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("fibers", seed);
    const std::vector<std::uint64_t> qs{5, 7, 11, 13}, ps{2, 3, 5};
    for (int done = 0; done < count;) {
        const auto q = qs[run.rng() % qs.size()];
        const auto p = ps[run.rng() % ps.size()];
        if (q % p == 0) continue;
        const auto a = 1 + run.rng() % (q - 1);
        const auto fiber = fiber_decomposition(q, p, static_cast<std::int64_t>(a));
        std::uint64_t total = 0, rational = 0, roots = 0;
        for (const auto& [deg, n] : fiber) {
            total += deg * n;
            if (deg == 1) rational = n;
        }
        for (std::uint64_t x = 1; x < q; ++x) {
            std::uint64_t y = 1;
            for (std::uint64_t e = 0; e < p; ++e) y = y * x % q;
            roots += y == a;
        }
        run.check(total == p && rational == roots, [&] {
            return "q=" + std::to_string(q) + " p=" + std::to_string(p) + " a=" + std::to_string(a);
        });
        ++done;
    }
    return run.finish(start);
}

/// d alpha = -alpha d at places off the support of a, Steinberg, and Weil
/// reciprocity mod p.
inline SuiteReport suite_anticommute(std::uint64_t seed, int per_case = 100) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("anticommute", seed);
    const std::vector<std::pair<std::uint64_t, std::uint32_t>> cases{{7, 3}, {13, 3}, {5, 2}, {7, 2}};
    for (const auto& [q, pv] : cases) {
        const FqField f = FqField::of_order(q);
        const PrimeModulus p(pv);
        auto random_poly = [&] {
            for (;;) {
                std::vector<FqElement> c;
                const int deg = static_cast<int>(run.rng() % 4);
                for (int i = 0; i <= deg; ++i) c.push_back(f.from_code(run.rng() % q));
                FqPoly g(f, c);
                if (!g.is_zero()) return g;
            }
        };
        const auto one = RationalFunction::constant(f.one());
        for (int i = 0; i < per_case; ++i) {
            const RationalFunction a(random_poly(), random_poly());
            const RationalFunction g(random_poly(), random_poly());
            auto in = [&] {
                return "q=" + std::to_string(q) + " p=" + std::to_string(pv) + " a=" + a.to_string() + " f=" + g.to_string();
            };
            run.check(anticommute_check(a, g, p), in, "anticommutation");
            FqElement prod = f.one();
            for (const auto& x : support({a, g})) prod = prod * tame_value(a, g, x).norm();
            run.check(pth_power_class(prod, p).is_trivial(), in, "reciprocity");
            if (!(g == one)) {
                bool steinberg = true;
                for (const auto& x : support({g, one - g})) steinberg = steinberg && tame_symbol(g, one - g, x, p).is_trivial();
                run.check(steinberg, in, "Steinberg");
            }
        }
    }
    return run.finish(start);
}

/// kummer_parameter(twist(A, k)) = kummer_parameter(A)^k on torsors with R_0 = F_q.
inline SuiteReport suite_twist(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("twist", seed);
    for (const auto& [name, a, expected] : graded_corpus()) {
        if (!expected || a.component_dimension(0) != 1) continue;
        const auto base = kummer_parameter(a);
        for (int k = 1; k < static_cast<int>(a.p().value()); ++k) {
            const auto t = kummer_parameter(twist(a, k));
            run.check(t == base.pow(k), [&, &name = name] { return name + " k=" + std::to_string(k); },
                      "twisted class " + t.representative().to_string() + ", a^k = " + base.pow(k).representative().to_string());
        }
    }
    return run.finish(start);
}

/// binom_mod_p against exact Pascal rows, n < nmax.
inline SuiteReport suite_lucas(std::uint64_t seed, int nmax = 2000) {
    using boost::multiprecision::cpp_int;
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("lucas", seed);
    const std::vector<std::uint32_t> ps{2, 3, 5, 7};
    std::vector<cpp_int> row{1};
    for (int n = 0; n < nmax; ++n) {
        for (auto pv : ps) {
            const PrimeModulus p(pv);
            bool ok = true;
            int bad_k = -1;
            for (int k = 0; k <= n && ok; ++k) {
                const auto exact = static_cast<std::uint32_t>(row[static_cast<std::size_t>(k)] % pv);
                if (binom_mod_p(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p).value() != exact) {
                    ok = false;
                    bad_k = k;
                }
            }
            run.check(ok, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(bad_k) + " p=" + std::to_string(pv); });
        }
        std::vector<cpp_int> next(row.size() + 1);
        next.front() = next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return run.finish(start);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pthpower",  "cartan",  "pullback",     "pushforward",
                                                "prx-divisibility", "bclass", "omega", "mu", "corcalc",
                                                "torsor-equivalence", "deformation", "fibers", "anticommute",
                                                "twist",     "lucas"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    static const std::map<std::string, std::function<SuiteReport(std::uint64_t)>> table{
        {"pthpower", [](std::uint64_t s) { return suite_pthpower(s); }},
        {"cartan", [](std::uint64_t s) { return suite_cartan(s); }},
        {"pullback", [](std::uint64_t s) { return suite_pullback(s); }},
        {"pushforward", [](std::uint64_t s) { return suite_pushforward(s); }},
        {"prx-divisibility", [](std::uint64_t s) { return suite_prx_divisibility(s); }},
        {"bclass", [](std::uint64_t s) { return suite_bclass(s); }},
        {"omega", [](std::uint64_t s) { return suite_omega(s); }},
        {"mu", [](std::uint64_t s) { return suite_mu(s); }},
        {"corcalc", [](std::uint64_t s) { return suite_corcalc(s); }},
        {"torsor-equivalence", [](std::uint64_t s) { return suite_torsor_equivalence(s); }},
        {"deformation", [](std::uint64_t s) { return suite_deformation(s); }},
        {"fibers", [](std::uint64_t s) { return suite_fibers(s); }},
        {"anticommute", [](std::uint64_t s) { return suite_anticommute(s); }},
        {"twist", [](std::uint64_t s) { return suite_twist(s); }},
        {"lucas", [](std::uint64_t s) { return suite_lucas(s); }},
    };
    auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown suite '" + name + "'");
    return it->second(seed);
}

}  // namespace steencalc
