// steencalc: JSON front end to the library.
// Exit codes: 0 success, 1 property violation, 2 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "steencalc/steencalc.hpp"

namespace {

using namespace steencalc;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

int emit(const json& j, int code = kOk) {
    std::cout << j.dump() << "\n";
    return code;
}

std::uint64_t effective_seed(std::uint64_t flag) {
    const char* env = std::getenv("STEENCALC_SEED");
    if (!env || !*env) return flag;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("STEENCALC_SEED is not a nonnegative integer: '") + env + "'");
    }
}

PrimeModulus prime_arg(std::uint64_t p) {
    try {
        return PrimeModulus(p);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

FqField field_arg(std::uint64_t q) {
    try {
        return FqField::of_order(q);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

int steenrod_eval(const std::string& file, const std::string& expr, const std::string& op, std::optional<int> k) {
    const VarietySpec x = variety_from_json(read_json_file(file));
    const CycleClass c = parse_class(expr, x.ring());
    CycleClass out = CycleClass::zero(x.ring());
    if (op == "total") {
        out = steenrod_coh_total(x, c);
    } else if (op == "hom-total") {
        out = steenrod_hom_total(x, c);
    } else if (op == "coh-k" || op == "hom-k") {
        if (!k) throw InputError("--op " + op + " needs --k");
        try {
            out = op == "coh-k" ? steenrod_coh_k(x, c, *k) : steenrod_hom_k(x, c, *k);
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    } else {
        throw InputError("unknown --op '" + op + "' (total, coh-k, hom-total, hom-k)");
    }
    return emit({{"result", class_to_json(out)}});
}

int steenrod_verify(const std::string& suite, std::uint64_t seed) {
    const SuiteReport r = run_suite(suite, effective_seed(seed));
    return emit(r.to_json(), r.passed() ? kOk : kViolation);
}

int torsor_check_cmd(const std::string& file) {
    const auto r = torsor_check(algebra_from_json(read_json_file(file)));
    return emit({{"result", torsor_report_to_json(r)}}, r.mixed() ? kViolation : kOk);
}

int torsor_deform_cmd(const std::string& file, int kmax) {
    if (kmax < 1) throw InputError("--kmax must be at least 1");
    const auto r = deformation_check(algebra_from_json(read_json_file(file)), kmax);
    return emit({{"result",
                  {{"kmax", kmax},
                   {"identity", r.identity},
                   {"proof_identity", r.proof_identity},
                   {"bookkeeping", r.bookkeeping},
                   {"holds", r.holds()}}}},
                r.holds() ? kOk : kViolation);
}

int kummer_factor_cmd(std::uint64_t q, std::uint64_t pv, const std::string& a_text) {
    const FqField f = field_arg(q);
    const PrimeModulus p = prime_arg(pv);
    if (f.characteristic() == p.value()) throw InputError("p must differ from the characteristic of F_q");
    const FqElement a = parse_field_element(a_text, f);
    if (a.is_zero()) throw InputError("a must be nonzero");
    json fiber = json::array();
    for (const auto& [deg, n] : fiber_decomposition(a, p)) fiber.push_back({{"degree", deg}, {"count", n}});
    return emit({{"result",
                  {{"a", a.to_string()}, {"pth_power", pth_power_class(a, p).is_trivial()}, {"fiber", fiber}}}});
}

int kcomplex_check_cmd(std::uint64_t q, std::uint64_t pv, const std::string& a_text, const std::string& f_text) {
    const FqField fq = field_arg(q);
    const PrimeModulus p = prime_arg(pv);
    if (fq.characteristic() == p.value()) throw InputError("p must differ from the characteristic of F_q");
    const RationalFunction a = parse_rational_function(a_text, fq);
    const RationalFunction f = parse_rational_function(f_text, fq);
    if (a.is_zero() || f.is_zero()) throw InputError("a and f must be nonzero");

    json div = json::object();
    for (const auto& [x, v] : divisor_map(f, p)) div[x.to_string()] = v;
    json res = json::object();
    for (const auto& [x, c] : residues(SymbolChain::symbol(p, {a, f}))) res[x.to_string()] = c.representative().to_string();
    const bool ok = anticommute_check(a, f, p);
    return emit({{"result",
                  {{"symbol", SymbolChain::symbol(p, {a, f}).to_string()},
                   {"divisor_f", div},
                   {"residues_af", res},
                   {"anticommute", ok}}}},
                ok ? kOk : kViolation);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Steenrod operations, torsors and Milnor K residues mod p"};
    app.require_subcommand(1);

    auto* steenrod = app.add_subcommand("steenrod", "Steenrod operations on Chow rings");
    steenrod->require_subcommand(1);
    auto* eval = steenrod->add_subcommand("eval", "apply an operation to a class");
    std::string variety, cls, op = "total";
    std::optional<int> k;
    eval->add_option("--variety", variety, "variety JSON file")->required();
    eval->add_option("--class", cls, "class expression")->required();
    eval->add_option("--op", op, "total | coh-k | hom-total | hom-k");
    eval->add_option("--k", k, "degree for coh-k and hom-k");
    auto* verify = steenrod->add_subcommand("verify", "run a named property suite");
    std::string suite;
    std::uint64_t seed = 0;
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--seed", seed, "RNG seed (STEENCALC_SEED overrides)");

    auto* torsor = app.add_subcommand("torsor", "Z/p-graded algebras");
    torsor->require_subcommand(1);
    auto* tcheck = torsor->add_subcommand("check", "evaluate the torsor conditions");
    auto* tdeform = torsor->add_subcommand("deform", "check the deformation identity");
    std::string algebra;
    int kmax = 4;
    tcheck->add_option("--algebra", algebra, "algebra JSON file")->required();
    tdeform->add_option("--algebra", algebra, "algebra JSON file")->required();
    tdeform->add_option("--kmax", kmax, "largest k");

    std::uint64_t q = 0, p = 0;
    std::string a_text, f_text;
    auto* kummer = app.add_subcommand("kummer", "Kummer torsors over F_q");
    kummer->require_subcommand(1);
    auto* kfactor = kummer->add_subcommand("factor", "fiber of t^p = a");
    kfactor->add_option("--q", q, "field order")->required();
    kfactor->add_option("--p", p, "prime")->required();
    kfactor->add_option("--a", a_text, "element of F_q (g is the generator)")->required();

    auto* kcomplex = app.add_subcommand("kcomplex", "Milnor K residues over F_q(t)");
    kcomplex->require_subcommand(1);
    auto* kcheck = kcomplex->add_subcommand("check", "residues of {a, f} and anticommutation");
    kcheck->add_option("--q", q, "field order")->required();
    kcheck->add_option("--p", p, "prime")->required();
    kcheck->add_option("--a", a_text, "rational function in t")->required();
    kcheck->add_option("--f", f_text, "rational function in t")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (eval->parsed()) return steenrod_eval(variety, cls, op, k);
        if (verify->parsed()) return steenrod_verify(suite, seed);
        if (tcheck->parsed()) return torsor_check_cmd(algebra);
        if (tdeform->parsed()) return torsor_deform_cmd(algebra, kmax);
        if (kfactor->parsed()) return kummer_factor_cmd(q, p, a_text);
        if (kcheck->parsed()) return kcomplex_check_cmd(q, p, a_text, f_text);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        // anything else the library rejects came from the user's data
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
