#include "rbx/commands.hpp"

#include "rbx/abelian.hpp"
#include "rbx/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace rbx {

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) {
        return *flag;
    }
    const char* env = std::getenv("RBX_BUDGET");
    if (env == nullptr || *env == '\0') {
        return kDefaultBudget;
    }
    std::string_view text(env);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("RBX_BUDGET: expected a non-negative integer, got \"" + std::string(text) + "\"");
    }
    return v;
}

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        return {kExitBudget, Json{{"error", e.what()}, {"required", e.required()}, {"budget", e.budget()}}};
    } catch (const Error& e) {
        return {kExitInputError, Json{{"error", e.what()}}};
    } catch (const std::exception& e) {
        return {kExitInternal, Json{{"error", std::string("internal: ") + e.what()}}};
    }
}

namespace {

const char* verdict_name(Verdict v, const char* yes, const char* no) {
    switch (v) {
    case Verdict::Yes:
        return yes;
    case Verdict::No:
        return no;
    default:
        return "Undecided";
    }
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::Yes:
        return kExitOk;
    case Verdict::No:
        return kExitNegative;
    default:
        return kExitUndecided;
    }
}

[[noreturn]] void invalid(const Input& in, const std::string& what, const Diagnosis& d) {
    throw ParseError(in.source + ": invalid " + what + ": " + d.condition + (d.detail.empty() ? "" : " " + d.detail));
}

Diagnosis algebra_diagnosis(const RBLieAlgebra& a) {
    if (!check_jacobi(a.lie)) {
        return Diagnosis::fail("jacobi", "");
    }
    if (!check_rota_baxter(a.lie, a.op)) {
        return Diagnosis::fail("rota_baxter", "");
    }
    return Diagnosis::pass();
}

Representation load_representation(const Input& in) {
    Representation r = representation_from_json(in);
    check_shapes(r);
    Diagnosis d = algebra_diagnosis(r.base);
    if (!d) {
        invalid(in, "base algebra", d);
    }
    if (r.h_bracket && !check_jacobi(*r.h_bracket)) {
        invalid(in, "representation", Diagnosis::fail("hbracket", "fails the Jacobi identity"));
    }
    if (!check_representation(r)) {
        invalid(in, "representation", Diagnosis::fail("compatibility", "psi and S are not a representation"));
    }
    return r;
}

NonAbelianCocycle load_cocycle(const Input& in) {
    NonAbelianCocycle c = cocycle_from_json(in);
    Diagnosis d = validate_cocycle(c);
    if (!d) {
        invalid(in, "cocycle", d);
    }
    return c;
}

Extension load_extension(const Input& in) {
    Extension x = extension_from_json(in);
    Diagnosis d = validate_extension(x);
    if (!d) {
        invalid(in, "extension", d);
    }
    return x;
}

Json diagnosis_json(const Diagnosis& d) {
    Json j{{"valid", d.ok}};
    if (!d.ok) {
        j["failing_condition"] = d.condition;
        if (!d.detail.empty()) {
            j["detail"] = d.detail;
        }
    }
    return j;
}

Json pairs_json(const std::vector<AutomorphismPair>& pairs) {
    Json a = Json::array();
    for (const auto& p : pairs) {
        a.push_back(to_json(p));
    }
    return a;
}

Json matrices_json(const std::vector<Matrix>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) {
        a.push_back(to_json(m));
    }
    return a;
}

Json assertions_json(const std::vector<Assertion>& as) {
    Json a = Json::array();
    for (const auto& x : as) {
        Json j{{"name", x.name}, {"passed", x.passed}};
        if (!x.detail.empty()) {
            j["detail"] = x.detail;
        }
        a.push_back(j);
    }
    return a;
}

Json abelian_report_json(const AbelianReport& r) {
    return Json{{"counts", r.counts}, {"assertions", assertions_json(r.assertions)}, {"passed", r.passed()}};
}

} // namespace

CommandResult cmd_validate(const Input& in) {
    const std::string kind = document_kind(in.doc);
    if (kind == "algebra") {
        RBLieAlgebra a = algebra_from_json(in);
        const bool jacobi = check_jacobi(a.lie);
        const bool rb = check_rota_baxter(a.lie, a.op);
        return {jacobi && rb ? kExitOk : kExitNegative, Json{{"jacobi", jacobi}, {"rota_baxter", rb}}};
    }
    if (kind == "representation") {
        Representation r = representation_from_json(in);
        check_shapes(r);
        const bool jacobi = check_jacobi(r.base.lie);
        const bool rb = check_rota_baxter(r.base.lie, r.base.op);
        const bool compatible = check_rb_compatibility(r);
        Json j{{"base", Json{{"jacobi", jacobi}, {"rota_baxter", rb}}}, {"rb_compatible", compatible}};
        bool ok = jacobi && rb && compatible;
        if (r.h_is_abelian()) {
            const bool module = check_module_homomorphism(r);
            j["module"] = module;
            ok = ok && module;
        } else {
            const bool hj = check_jacobi(*r.h_bracket);
            j["hbracket_jacobi"] = hj;
            ok = ok && hj;
        }
        j["valid"] = ok;
        return {ok ? kExitOk : kExitNegative, j};
    }
    if (kind == "cocycle") {
        Diagnosis d = validate_cocycle(cocycle_from_json(in));
        return {d.ok ? kExitOk : kExitNegative, diagnosis_json(d)};
    }
    if (kind == "extension") {
        Diagnosis d = validate_extension(extension_from_json(in));
        return {d.ok ? kExitOk : kExitNegative, diagnosis_json(d)};
    }
    throw ParseError(in.source + ": not an algebra, representation, cocycle or extension file");
}

CommandResult cmd_cohomology(const Input& rep, std::size_t degree) {
    Representation r = load_representation(rep);
    CohomologyDims d = cohomology_dims(r, degree);
    return {kExitOk, Json{{"zdim", d.zdim}, {"bdim", d.bdim}, {"hdim", d.hdim}}};
}

CommandResult cmd_derivations(const Input& rep) {
    Representation r = load_representation(rep);
    std::vector<Matrix> basis = derivation_space(r);
    return {kExitOk, Json{{"dim", basis.size()}, {"basis", matrices_json(basis)}}};
}

CommandResult cmd_extend(const Input& cocycle) {
    BuiltExtension b = build_extension(load_cocycle(cocycle));
    return {kExitOk, to_json(b.extension)};
}

CommandResult cmd_extract(const Input& extension, const std::optional<Input>& section) {
    Extension x = load_extension(extension);
    Matrix s = section ? section_from_json(*section, x) : canonical_section(x);
    return {kExitOk, to_json(extract_cocycle(x, s))};
}

CommandResult cmd_equivalent(const Input& a, const Input& b) {
    const std::string ka = document_kind(a.doc);
    const std::string kb = document_kind(b.doc);
    if (ka != kb || (ka != "cocycle" && ka != "extension")) {
        throw ParseError(a.source + ", " + b.source + ": expected two cocycle files or two extension files");
    }
    if (ka == "cocycle") {
        NonAbelianCocycle c1 = load_cocycle(a);
        NonAbelianCocycle c2 = load_cocycle(b);
        if (!(c1.g == c2.g) || !(c1.h == c2.h)) {
            throw InvalidArgument("the cocycles live on different (g_T, h_S)");
        }
        CocycleEquivalence r = solve_cocycle_equivalence(c1, c2);
        Json j{{"verdict", verdict_name(r.verdict, "Equivalent", "NotEquivalent")}};
        if (r.phi) {
            j["phi"] = to_json(*r.phi);
        }
        if (r.verdict == Verdict::No) {
            j["failing_condition"] = r.failing_condition;
        }
        return {verdict_exit(r.verdict), j};
    }
    ExtensionEquivalence r = check_extension_equivalence(load_extension(a), load_extension(b));
    Json j{{"verdict", verdict_name(r.verdict, "Equivalent", "NotEquivalent")}};
    if (r.map) {
        j["map"] = to_json(*r.map);
    }
    if (r.phi) {
        j["phi"] = to_json(*r.phi);
    }
    if (r.verdict == Verdict::No) {
        j["failing_condition"] = r.failing_condition;
    }
    return {verdict_exit(r.verdict), j};
}

CommandResult cmd_inducible(const Input& extension, const Input& pair, const std::optional<Input>& witness) {
    Extension x = load_extension(extension);
    AutomorphismPair p = pair_from_json(pair, x);
    require_automorphism_pair(x.g, x.h, p);
    if (witness) {
        const Matrix s = canonical_section(x);
        Matrix lambda = witness_from_json(*witness, x);
        Diagnosis d = verify_inducibility_witness(x, s, p, lambda);
        if (!d) {
            Json j{{"verdict", "WitnessRejected"}, {"failing_condition", d.condition}};
            if (!d.detail.empty()) {
                j["detail"] = d.detail;
            }
            return {kExitNegative, j};
        }
        return {kExitOk,
                Json{{"verdict", "Inducible"}, {"lambda", to_json(lambda)}, {"gamma", to_json(lift_automorphism(x, s, p, lambda))}}};
    }
    InducibilityResult r = decide_inducible(x, p);
    Json j{{"verdict", verdict_name(r.verdict, "Inducible", "NotInducible")}};
    if (r.gamma) {
        j["gamma"] = to_json(*r.gamma);
        j["lambda"] = to_json(*r.lambda);
    }
    if (r.verdict == Verdict::No) {
        j["failing_condition"] = r.failing_condition;
    }
    return {verdict_exit(r.verdict), j};
}

CommandResult cmd_wells(const Input& extension, const Input& arg, WellsKind kind) {
    Extension x = load_extension(extension);
    AutomorphismPair p = pair_from_json(arg, x, kind != WellsKind::Alpha, kind != WellsKind::Beta);
    require_automorphism_pair(x.g, x.h, p);
    const Verdict v = wells_is_trivial(x, p);
    Json j{{"verdict", verdict_name(v, "Trivial", "Nontrivial")}, {"pair", to_json(p)}};
    if (x.h.lie.is_abelian()) {
        AbelianExtensionView view = abelianize(x);
        const bool compatible = is_compatible_pair(view, p);
        j["compatible"] = compatible;
        if (compatible) {
            j["class"] = to_json(abelian_wells_class(view, p));
        }
    }
    return {verdict_exit(v), j};
}

CommandResult cmd_exactness(const Input& extension, std::uint64_t budget) {
    Extension x = load_extension(extension);
    ExactnessReport r = check_wells_exactness(x, budget);
    Json orders{{"aut_h", r.aut_h.size()},
                {"kernel", r.kernel.size()},
                {"fixing_h", r.fixing_h},
                {"fixing_g", r.fixing_g},
                {"aut_g", r.aut_g.size()},
                {"aut_hs", r.aut_hs.size()},
                {"image", r.image.size()}};
    Json j{{"orders", orders},
           {"kernel", matrices_json(r.kernel)},
           {"image", pairs_json(r.image)},
           {"non_inducible", pairs_json(r.non_inducible)},
           {"assertions", assertions_json(r.assertions)}};
    bool passed = r.passed();
    if (x.h.lie.is_abelian()) {
        AbelianExtensionView view = abelianize(x);
        AbelianReport a = check_abelian_wells_sequence(view, budget);
        j["abelian"] = abelian_report_json(a);
        passed = passed && a.passed();
        if (view.cocycle.is_zero()) {
            AbelianReport s = check_split_semidirect(view, budget);
            j["split"] = abelian_report_json(s);
            passed = passed && s.passed();
        }
    }
    j["passed"] = passed;
    return {passed ? kExitOk : kExitNegative, j};
}

CommandResult cmd_semidirect(const Input& rep) {
    Representation r = load_representation(rep);
    const Field& f = r.field();
    const std::size_t n = r.gdim();
    const std::size_t m = r.hdim;
    Extension x;
    x.e = semidirect_product(r);
    x.g = r.base;
    x.h = RBLieAlgebra{LieAlgebra(f, m), r.s_op};
    x.i = Matrix(f, n + m, m);
    x.p = Matrix(f, n, n + m);
    for (std::size_t k = 0; k < m; ++k) {
        x.i(n + k, k) = Scalar::one(f);
    }
    for (std::size_t k = 0; k < n; ++k) {
        x.p(k, k) = Scalar::one(f);
    }
    Diagnosis d = validate_extension(x);
    if (!d) {
        throw std::logic_error("semidirect product fails " + d.condition);
    }
    return {kExitOk, to_json(x)};
}

} // namespace rbx
