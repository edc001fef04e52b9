// One line per acceptance criterion. Exit status is nonzero iff a criterion
// that is expected to hold fails.

#include "nichols/cli.hpp"
#include "nichols/errors.hpp"
#include "nichols/identities.hpp"
#include "nichols/io.hpp"
#include "nichols/nichols.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "specs.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

using namespace nichols;

namespace {

// Pinned runtime limits in seconds.
constexpr double kLimitExterior = 5;
constexpr double kLimitSl3 = 10;
constexpr double kLimitIdentities = 60;
constexpr double kLimitConvolution = 60;
constexpr double kLimitPrimitivity = 120;

int failures = 0;

// Runs a check; it passes when it returns an empty string and finishes within the limit.
void criterion(int id, const std::string& title, double limit, const std::function<std::string()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && limit > 0 && seconds >= limit) problem = "over the " + std::to_string(limit) + " s limit";
    const bool ok = problem.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), seconds, ok ? "" : ": ",
                problem.c_str());
    std::fflush(stdout);
}

Scalar qp(int e)
{
    return RatFunc::q(e);
}

TensorVector vec(std::initializer_list<std::pair<Word, Scalar>> terms)
{
    TensorVector v;
    for (const auto& [w, c] : terms) v.add_term(w, c);
    return v;
}

TensorVector serre_12()
{
    return vec({{{0, 0, 1}, 1}, {{0, 1, 0}, -(qp(1) + qp(-1))}, {{1, 0, 0}, 1}});
}

TensorVector serre_21()
{
    return vec({{{1, 1, 0}, 1}, {{1, 0, 1}, -(qp(1) + qp(-1))}, {{0, 1, 1}, 1}});
}

bool proportional(const TensorVector& a, const TensorVector& b)
{
    if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
    const auto& [w0, c0] = *a.terms().begin();
    const Scalar ratio = b.coeff(w0) / c0;
    return !ratio.is_zero() && ratio * a == b;
}

std::string spec_path(const std::string& name)
{
    return std::string(NICHOLS_SPEC_DIR) + "/" + name + ".spec";
}

// --- 1 ---------------------------------------------------------------------

std::string exterior_algebra()
{
    std::ostringstream out, err;
    if (run_command({"relations", "--spec", spec_path("exterior3"), "--max-degree", "4", "--json"}, out, err) != kExitOk)
        return "relations command failed: " + err.str();
    const BraidingSpec spec = load_spec(spec_path("exterior3"));
    std::vector<TensorVector> found;
    const auto doc = nlohmann::json::parse(out.str());
    for (const auto& c : doc.at("classes"))
        for (const auto& rel : c.at("relations")) {
            TensorVector v;
            for (const auto& t : rel.at("terms")) {
                Word w;
                for (int a : t.at("word")) w.push_back(a - 1);
                v.add_term(w, parse_scalar(t.at("coeff").get<std::string>()));
            }
            if (v.degree() != 2) return "relation of degree " + std::to_string(v.degree());
            found.push_back(v);
        }
    if (found.size() != 6) return "expected 6 relations, got " + std::to_string(found.size());
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const TensorVector expected = TensorVector(Word{i, j}) + TensorVector(Word{j, i});
            int hits = 0;
            for (const auto& v : found) hits += proportional(v, expected) ? 1 : 0;
            if (hits != 1) return "v" + std::to_string(i + 1) + "v" + std::to_string(j + 1) + " + v" +
                                  std::to_string(j + 1) + "v" + std::to_string(i + 1) + " not found exactly once";
        }
    const auto dims = nichols_dimensions(spec, 4);
    if (dims != std::vector<long>{1, 3, 3, 1, 0}) return "dimensions differ from (1,3,3,1,0)";
    return {};
}

// --- 2 ---------------------------------------------------------------------

std::string sl3_serre()
{
    const BraidingSpec s = specs::sl3();
    if (dynkin_apply(TensorVector(Word{0, 0, 1}), s) != serre_12()) return "P_3(E1^2 E2) differs";

    // The six u-values, seeds in the order E1^2E2, E1E2E1, E2E1^2, E1E2^2, E2E1E2, E2^2E1.
    const std::vector<std::pair<Word, TensorVector>> expected_u{
        {{0, 0, 1}, vec({{{0, 0, 1}, 2}})},
        {{0, 1, 0}, vec({{{0, 1, 0}, 1}, {{1, 0, 0}, qp(3)}})},
        {{1, 0, 0}, vec({{{1, 0, 0}, 1}, {{0, 1, 0}, qp(-3)}})},
        {{0, 1, 1}, vec({{{0, 1, 1}, 1}, {{1, 0, 1}, qp(-3)}})},
        {{1, 0, 1}, vec({{{1, 0, 1}, 1}, {{0, 1, 1}, qp(3)}})},
        {{1, 1, 0}, vec({{{1, 1, 0}, 2}})},
    };
    std::map<Word, TensorVector> u;
    for (const Multidegree& m : {Multidegree{2, 1}, Multidegree{1, 2}}) {
        const RelationSearch r = search_relations(m, s);
        for (const auto& step : r.steps) u.emplace(step.seed, step.u);
        if (r.relations.size() != 1) return "class " + format_multidegree(m) + " gave " + std::to_string(r.relations.size()) + " relations";
        if (!r.spans_kernel || r.kernel_dimension != 1) return "class " + format_multidegree(m) + ": kernel not one-dimensional";
        if (r.relations[0].vector != (m[0] == 2 ? serre_12() : serre_21())) return "class " + format_multidegree(m) + ": wrong relation";
    }
    for (const auto& [seed, value] : expected_u)
        if (!u.count(seed) || u.at(seed) != value) return "u-value for seed " + format_word(seed, s) + " differs";

    const LevelReport r22 = level_classify({2, 2}, s);
    if (r22.verdict != Verdict::ThetaFixedOnly) return "class (2,2) not rejected";
    bool witness = false;
    for (const auto& v : r22.violating_subsets)
        witness = witness || (v.size == 3 && class_twist_scalar(v.subset, s).is_one());
    if (!witness) return "no Pi_3 = 1 witness for (2,2)";
    try {
        search_relations({2, 2}, s);
        return "search on (2,2) did not throw";
    } catch (const NotLevelN&) {
    }
    return {};
}

// --- 3 ---------------------------------------------------------------------

std::string operator_identities()
{
    const std::pair<const char*, BraidingSpec> list[] = {
        {"exterior", specs::exterior()}, {"sl3", specs::sl3()}, {"primes", specs::primes6()}};
    int checked = 0;
    for (const auto& [name, s] : list)
        for (int n = 2; n <= 6; ++n) {
            const auto classes = sample_classes(s.dim(), n, 3);
            if (classes.size() < 3) return std::string(name) + ": fewer than 3 classes at n=" + std::to_string(n);
            for (const auto& m : classes) {
                const ClassPtr cls = make_class(m);
                for (IdentityKind k : all_identities()) {
                    if (!check_identity(k, cls, s))
                        return std::string(to_string(k)) + " fails on " + name + " " + format_multidegree(m);
                    ++checked;
                }
            }
        }
    return checked > 0 ? std::string() : "nothing checked";
}

// --- 4 ---------------------------------------------------------------------

std::string convolution_identities()
{
    const std::pair<const char*, BraidingSpec> list[] = {{"exterior", specs::exterior()}, {"sl3", specs::sl3()}};
    for (const auto& [name, s] : list)
        for (int n = 1; n <= 5; ++n)
            for (const auto& m : multidegrees(s.dim(), n)) {
                const ClassPtr cls = make_class(m);
                for (const auto& w : cls->basis()) {
                    const TensorVector x(w);
                    if (!convolution_check_phi_id(x, s)) return std::string("Phi*id != N on ") + name + " " + format_word(w, s);
                    if (!convolution_check_ns(x, s)) return std::string("N*S != Phi on ") + name + " " + format_word(w, s);
                }
            }
    return {};
}

// --- 5 ---------------------------------------------------------------------

std::string killed_and_primitive(const TensorVector& r, const BraidingSpec& s)
{
    if (!is_primitive(r, s)) return "not primitive: " + format_vector(r, s);
    for (int i = 0; i < s.dim(); ++i)
        if (!derivation(Side::Right, i, r, s).is_zero()) return "not killed by d_" + std::to_string(i + 1) + ": " + format_vector(r, s);
    return {};
}

std::string primitivity()
{
    const BraidingSpec a2 = specs::sl3(), b2 = specs::b2();
    bool degree_four = false;
    for (const BraidingSpec* s : {&a2, &b2})
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
            const SerreRelation e = serre_element(i, j, *s);
            if (auto p = killed_and_primitive(e.relation.vector, *s); !p.empty()) return p;
            if (s == &b2 && e.exponent == 3 && e.relation.vector.degree() == 4) degree_four = true;
        }
    if (!degree_four) return "B2 has no N = 3 pair";

    const std::tuple<const char*, BraidingSpec, int> list[] = {
        {"sl3", a2, 6}, {"b2", b2, 5}, {"exterior", specs::exterior(), 4}};
    int relations = 0;
    for (const auto& [name, s, max_degree] : list)
        for (const auto& m : theta_fixed_classes(s, max_degree)) {
            if (level_classify(m, s).verdict != Verdict::LevelN) continue;
            for (const auto& r : find_relations(m, s)) {
                if (auto p = killed_and_primitive(r.vector, s); !p.empty()) return std::string(name) + ": " + p;
                ++relations;
            }
        }
    return relations > 0 ? std::string() : "no relations found";
}

// --- 6 ---------------------------------------------------------------------

std::string tuple_text(const std::vector<long>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::vector<long> sl3_dimensions;

std::string dimensions_vs_pbw()
{
    sl3_dimensions = nichols_dimensions(specs::sl3(), 4);
    std::vector<long> pbw;
    for (int d = 0; d <= 4; ++d) pbw.push_back(oracle::pbw_count(d));
    if (sl3_dimensions != pbw) return "computed " + tuple_text(sl3_dimensions) + " vs PBW " + tuple_text(pbw);
    return {};
}

// --- 7 ---------------------------------------------------------------------

std::string property_suites()
{
    gen::Rng rng(7007);
    // Field axioms on random rational functions.
    for (int t = 0; t < 40; ++t) {
        const Scalar a = gen::ratfunc(rng), b = gen::ratfunc(rng), c = gen::nonzero_ratfunc(rng);
        if (a * (b + c) != a * b + a * c) return "distributivity";
        if ((a * b) * c != a * (b * c)) return "associativity";
        if (c * c.inverse() != Scalar(1)) return "inverse";
    }
    for (int t = 0; t < 15; ++t) {
        const BraidingSpec s = gen::monomial_spec(rng, 3);
        const int n = gen::uniform(rng, 3, 5);
        const ClassPtr cls = make_class(multidegree_of(gen::word(rng, 3, n), 3));
        // Braid relations.
        for (int i = 1; i + 1 < n; ++i)
            if (operator_matrix(BraidWord::positive(n, {i, i + 1, i}), cls, s) !=
                operator_matrix(BraidWord::positive(n, {i + 1, i, i + 1}), cls, s))
                return "braid relation";
        // Monomial structure.
        const OperatorMatrix m = operator_matrix(gen::braid_word(rng, n, 6), cls, s);
        if (!m.is_monomial()) return "monomial structure";
        // Structured inverse vs Gaussian inverse.
        try {
            const OperatorMatrix inv = invert_one_minus_monomial(m);
            const OperatorMatrix one_minus = OperatorMatrix::identity(cls) - m;
            if (inv != inverse(one_minus) || one_minus * inv != OperatorMatrix::identity(cls)) return "structured inverse";
        } catch (const SingularFactor&) {
        }
        // Kernel exactness.
        const OperatorMatrix sym = symmetrizer_matrix(cls, s);
        for (const auto& v : kernel(sym))
            if (!sym.apply(v).is_zero()) return "kernel exactness";
        // Coassociativity of components (a, b, c) = (1, 1, n-2).
        const TensorVector x = gen::class_vector(rng, 3, n);
        std::map<std::tuple<Word, Word, Word>, Scalar> lhs, rhs;
        auto add = [](auto& t, const Word& l, const Word& mid, const Word& r, const Scalar& c) {
            auto [it, inserted] = t.try_emplace({l, mid, r}, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) t.erase(it);
            }
        };
        for (const auto& [lr, c] : coproduct_component(x, 1, s).terms)
            for (const auto& [lr2, c2] : coproduct_component(TensorVector(lr.second), 1, s).terms)
                add(lhs, lr.first, lr2.first, lr2.second, c * c2);
        for (const auto& [lr, c] : coproduct_component(x, 2, s).terms)
            for (const auto& [lr2, c2] : coproduct_component(TensorVector(lr.first), 1, s).terms)
                add(rhs, lr2.first, lr2.second, lr.second, c * c2);
        if (lhs != rhs) return "coassociativity";
        // Derivation commutation and the twisted product rule.
        const int i = gen::uniform(rng, 0, 2), j = gen::uniform(rng, 0, 2);
        if (derivation(Side::Left, i, derivation(Side::Right, j, x, s), s) !=
            derivation(Side::Right, j, derivation(Side::Left, i, x, s), s))
            return "derivation commutation";
        const Word wy = gen::word(rng, 3, 2);
        Scalar lambda(1);
        for (int b : wy) lambda *= s.q(i, b);
        const TensorVector y(wy);
        if (derivation(Side::Right, i, x * y, s) !=
            x * derivation(Side::Right, i, y, s) + lambda * (derivation(Side::Right, i, x, s) * y))
            return "twisted product rule";
    }
    return {};
}

}  // namespace

int main()
{
    criterion(1, "exterior algebra: six degree-2 relations, dimensions (1,3,3,1,0)", kLimitExterior, exterior_algebra);
    criterion(2, "U_q(sl_3): P_3 image, u-values, Serre relations, (2,2) witness", kLimitSl3, sl3_serre);
    criterion(3, "operator identities for n = 2..6 on three specs", kLimitIdentities, operator_identities);
    criterion(4, "Phi*id = N and N*S = Phi on every word of degree <= 5", kLimitConvolution, convolution_identities);
    criterion(5, "Serre elements and found relations are primitive and killed by d^R", kLimitPrimitivity, primitivity);
    criterion(6, "sl_3 dimensions to degree 4 equal the PBW monomial count", 0, dimensions_vs_pbw);
    // The criterion also lists the tuple (1,2,4,6,8), which contradicts its own
    // oracle at degree 4. Reported, not counted.
    const std::vector<long> literal{1, 2, 4, 6, 8};
    std::printf("[%s] 6 literal tuple (1,2,4,6,8): computed %s%s\n", sl3_dimensions == literal ? "PASS" : "FAIL*",
                tuple_text(sl3_dimensions).c_str(),
                sl3_dimensions == literal ? "" : "; known spec defect, the PBW oracle gives 9 at degree 4");
    criterion(7, "property suites: field, braid, monomial, kernel, inverse, coproduct, derivations", 0, property_suites);
    std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria FAILED").c_str());
    return failures == 0 ? 0 : 1;
}
