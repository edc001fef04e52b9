#include "nichols/nichols.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace nichols {

namespace {

// Matsumoto lifts of the (k, n-k)-shuffles, shared across calls.
const std::vector<BraidWord>& shuffle_lifts(int k, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<BraidWord>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace({k, n});
    if (inserted)
        for (const auto& tau : shuffles(k, n)) it->second.push_back(matsumoto_lift(tau));
    return it->second;
}

const GroupAlgebraElement& cached_dynkin(int n)
{
    static std::mutex mutex;
    static std::map<int, GroupAlgebraElement> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, dynkin_element(n)).first;
    return it->second;
}

const GroupAlgebraElement& cached_symmetrizer(int n)
{
    static std::mutex mutex;
    static std::map<int, GroupAlgebraElement> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, named_element(NamedElement::SymmetrizerSum, n)).first;
    return it->second;
}

Word slice(const Word& w, std::size_t from, std::size_t to)
{
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

GroupAlgebraElement one_minus(const BraidWord& b)
{
    return GroupAlgebraElement::one(b.strands()) - GroupAlgebraElement(b);
}

}  // namespace

// ---------------------------------------------------------------------------
// Coproduct and antipode

void CoproductComponent::add(const Word& left, const Word& right, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CoproductComponent coproduct_component(const TensorVector& x, int k, const BraidingSpec& spec)
{
    CoproductComponent out;
    const int n = x.degree();
    if (n < 0) return out;
    if (k < 0 || k > n) throw IndexOutOfRange("coproduct component k outside 0..n");
    const auto& lifts = shuffle_lifts(k, n);
    for (const auto& [w, c] : x.terms())
        for (const auto& b : lifts) {
            auto [s, image] = act_braid_word(b, w, spec);
            out.add(slice(image, 0, static_cast<std::size_t>(k)), slice(image, static_cast<std::size_t>(k), image.size()),
                    c * s);
        }
    return out;
}

bool is_primitive(const TensorVector& x, const BraidingSpec& spec)
{
    const int n = x.degree();
    for (int k = 1; k <= n - 1; ++k)
        if (!coproduct_component(x, k, spec).is_zero()) return false;
    return true;
}

namespace {

const TensorVector& antipode_word(const Word& w, const BraidingSpec& spec, std::map<Word, TensorVector>& memo)
{
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    TensorVector out;
    if (w.empty()) {
        out = TensorVector::one();
    } else {
        out = -TensorVector(w);
        const TensorVector x(w);
        for (int k = 1; k < static_cast<int>(w.size()); ++k)
            for (const auto& [lr, c] : coproduct_component(x, k, spec).terms) {
                TensorVector s_left = antipode_word(lr.first, spec, memo);
                out -= c * (s_left * TensorVector(lr.second));
            }
    }
    return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

TensorVector antipode(const GradedElement& x, const BraidingSpec& spec)
{
    std::map<Word, TensorVector> memo;
    TensorVector out;
    for (const auto& [w, c] : x.terms()) out += c * antipode_word(w, spec, memo);
    return out;
}

TensorVector dynkin_apply(const GradedElement& x, const BraidingSpec& spec)
{
    TensorVector out;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) continue;
        for (const auto& [b, eb] : cached_dynkin(static_cast<int>(w.size())).terms()) {
            auto [s, image] = act_braid_word(b, w, spec);
            out.add_term(image, c * eb * s);
        }
    }
    return out;
}

TensorVector phi_convolution_id(const TensorVector& x, const BraidingSpec& spec)
{
    TensorVector out;
    const int n = x.degree();
    for (int k = 1; k <= n; ++k)
        for (const auto& [lr, c] : coproduct_component(x, k, spec).terms)
            out += c * (dynkin_apply(TensorVector(lr.first), spec) * TensorVector(lr.second));
    return out;
}

TensorVector degree_convolution_antipode(const TensorVector& x, const BraidingSpec& spec)
{
    TensorVector out;
    const int n = x.degree();
    std::map<Word, TensorVector> memo;
    for (int k = 1; k <= n; ++k)
        for (const auto& [lr, c] : coproduct_component(x, k, spec).terms)
            out += (c * Scalar(k)) * (TensorVector(lr.first) * antipode_word(lr.second, spec, memo));
    return out;
}

bool convolution_check_phi_id(const TensorVector& x, const BraidingSpec& spec)
{
    const int n = x.degree();
    return phi_convolution_id(x, spec) == Scalar(n < 0 ? 0 : n) * x;
}

bool convolution_check_ns(const TensorVector& x, const BraidingSpec& spec)
{
    return degree_convolution_antipode(x, spec) == dynkin_apply(x, spec);
}

// ---------------------------------------------------------------------------
// Levels

Scalar class_twist_scalar(const Multidegree& k, const BraidingSpec& spec)
{
    const int n = spec.dim();
    if (static_cast<int>(k.size()) != n) throw DegreeMismatch("multidegree length differs from the spec dimension");
    std::vector<int> exponents(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ka = k[static_cast<std::size_t>(a)], kb = k[static_cast<std::size_t>(b)];
            exponents[static_cast<std::size_t>(a * n + b)] = a == b ? ka * (ka - 1) : ka * kb;
        }
    return spec.monomial(exponents);
}

std::vector<Multidegree> theta_fixed_classes(const BraidingSpec& spec, int max_degree)
{
    std::vector<Multidegree> out;
    for (int d = 2; d <= max_degree; ++d)
        for (const auto& m : multidegrees(spec.dim(), d))
            if (class_twist_scalar(m, spec).is_one()) out.push_back(m);
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::LevelN:
        return "LEVEL_N";
    case Verdict::ThetaFixedOnly:
        return "THETA_FIXED_ONLY";
    case Verdict::NotThetaFixed:
        return "NOT_THETA_FIXED";
    }
    return "?";
}

namespace {

void sub_multidegrees(const Multidegree& bound, std::size_t pos, Multidegree& current, std::vector<Multidegree>& out)
{
    if (pos == bound.size()) {
        out.push_back(current);
        return;
    }
    for (int k = 0; k <= bound[pos]; ++k) {
        current[pos] = k;
        sub_multidegrees(bound, pos + 1, current, out);
    }
}

int total(const Multidegree& m)
{
    int t = 0;
    for (int k : m) t += k;
    return t;
}

}  // namespace

LevelReport level_classify(const Multidegree& multidegree, const BraidingSpec& spec)
{
    LevelReport report;
    report.multidegree = multidegree;
    const int n = total(multidegree);
    if (n < 2) throw DegreeMismatch("level classification needs total degree >= 2");
    report.theta_fixed = class_twist_scalar(multidegree, spec).is_one();

    std::vector<Multidegree> subs;
    Multidegree current(multidegree.size(), 0);
    sub_multidegrees(multidegree, 0, current, subs);
    std::map<Multidegree, bool> is_violating;
    for (const auto& sub : subs) {
        const int s = total(sub);
        if (s < 2 || s > n - 1) continue;
        const bool violating = class_twist_scalar(sub, spec).is_one();
        is_violating[sub] = violating;
        if (violating) report.violating_subsets.push_back({s, sub});
    }
    std::sort(report.violating_subsets.begin(), report.violating_subsets.end(),
              [](const ViolatingSubset& a, const ViolatingSubset& b) {
                  return a.size != b.size ? a.size < b.size : a.subset > b.subset;
              });

    // Positional version: sub-twists on contiguous windows of every word.
    std::set<Multidegree> window_hits;
    const AnagramClass cls(multidegree);
    for (const auto& w : cls.basis())
        for (int s = 2; s <= n - 1; ++s)
            for (int start = 0; start + s <= n; ++start) {
                Multidegree sub(multidegree.size(), 0);
                for (int p = start; p < start + s; ++p) ++sub[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])];
                if (is_violating.at(sub)) window_hits.insert(sub);
            }
    std::set<Multidegree> subset_hits;
    for (const auto& v : report.violating_subsets) subset_hits.insert(v.subset);
    report.window_check_agrees = window_hits == subset_hits;

    if (!report.theta_fixed)
        report.verdict = Verdict::NotThetaFixed;
    else if (report.violating_subsets.empty())
        report.verdict = Verdict::LevelN;
    else
        report.verdict = Verdict::ThetaFixedOnly;
    return report;
}

// ---------------------------------------------------------------------------
// Relations

OperatorMatrix symmetrizer_matrix(const ClassPtr& cls, const BraidingSpec& spec)
{
    const int n = cls->degree();
    OperatorMatrix m = OperatorMatrix::identity(cls);
    for (int k = 2; k <= n; ++k) {
        GroupAlgebraElement t(n);
        for (int bottom = k; bottom >= 1; --bottom) t.add_term(BraidWord::descending(n, k - 1, bottom), 1);
        m = m * operator_matrix(t, cls, spec);
    }
    return m;
}

Certificates certify(const TensorVector& r, const BraidingSpec& spec)
{
    Certificates c;
    const int n = r.degree();
    if (n < 1) return c;
    const ClassPtr cls = make_class(multidegree_of(r.terms().begin()->first, spec.dim()));
    c.in_ker_sn = symmetrizer_matrix(cls, spec).apply(r).is_zero();
    try {
        solve(operator_matrix(cached_dynkin(n), cls, spec), r);
        c.in_im_pn = true;
    } catch (const NoSolution&) {
        c.in_im_pn = false;
    }
    c.primitive = is_primitive(r, spec);
    return c;
}

RelationSearch search_relations(const Multidegree& multidegree, const BraidingSpec& spec)
{
    RelationSearch out;
    out.level = level_classify(multidegree, spec);
    if (out.level.verdict != Verdict::LevelN)
        throw NotLevelN("class is " + to_string(out.level.verdict) + ", not of level n");
    const ClassPtr cls = make_class(multidegree);
    const int n = cls->degree();

    const OperatorMatrix twist_sum = operator_matrix(partial_twist_sum(n), cls, spec);
    const OperatorMatrix pn = operator_matrix(cached_dynkin(n), cls, spec);
    std::vector<OperatorMatrix> x_inverse;  // applied in order: (1 - Y_2)^{-1} first
    for (int i = 2; i <= n - 1; ++i) x_inverse.push_back(invert_one_minus_monomial(one_minus(twisted_run(n, i)), cls, spec));

    std::vector<TensorVector> found;
    for (const auto& w : cls->basis()) {
        SearchStep step;
        step.seed = w;
        step.u = twist_sum.apply(TensorVector(w));
        if (step.u.is_zero()) continue;
        step.x = step.u;
        for (const auto& inv : x_inverse) step.x = inv.apply(step.x);
        step.r = pn.apply(step.x);
        if (!step.r.is_zero()) found.push_back(step.r);
        out.steps.push_back(std::move(step));
    }

    for (auto& v : row_reduce(found, cls)) out.relations.push_back({multidegree, std::move(v), {}});
    for (auto& rel : out.relations) rel.certificates = certify(rel.vector, spec);

    const OperatorMatrix sn = symmetrizer_matrix(cls, spec);
    out.kernel_dimension = static_cast<int>(cls->size()) - rank(sn);
    out.spans_kernel = out.kernel_dimension == static_cast<int>(out.relations.size());
    return out;
}

std::vector<Relation> find_relations(const Multidegree& multidegree, const BraidingSpec& spec)
{
    return search_relations(multidegree, spec).relations;
}

SerreRelation serre_element(int i, int j, const BraidingSpec& spec, int bound)
{
    if (i < 0 || j < 0 || i >= spec.dim() || j >= spec.dim()) throw IndexOutOfRange("serre_element: letter outside the alphabet");
    if (i == j) throw std::invalid_argument("serre_element needs i != j");
    const Scalar lhs = spec.q(i, j) * spec.q(j, i);
    for (int c = 0; c >= -bound; --c) {
        if (spec.q(i, i).pow(c) != lhs) continue;
        const int N = 1 - c;
        Word w(static_cast<std::size_t>(N), i);
        w.push_back(j);
        SerreRelation out{{multidegree_of(w, spec.dim()), dynkin_apply(TensorVector(w), spec), {}}, c, N};
        out.relation.certificates = certify(out.relation.vector, spec);
        return out;
    }
    throw NoSerreExponent("no c in 0..-" + std::to_string(bound) + " with q_ij q_ji = q_ii^c for (i, j) = (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
}

// ---------------------------------------------------------------------------
// Derivations

TensorVector derivation(Side side, int letter, const TensorVector& x, const BraidingSpec& spec)
{
    if (letter < 0 || letter >= spec.dim()) throw IndexOutOfRange("derivation letter outside the alphabet");
    TensorVector out;
    const int n = x.degree();
    if (n < 1) return out;
    const int k = side == Side::Left ? 1 : n - 1;
    for (const auto& [lr, c] : coproduct_component(x, k, spec).terms) {
        const Word& single = side == Side::Left ? lr.first : lr.second;
        if (single[0] == letter) out.add_term(side == Side::Left ? lr.second : lr.first, c);
    }
    return out;
}

TensorVector derivation(Side side, const Word& a, const TensorVector& x, const BraidingSpec& spec)
{
    TensorVector out = x;
    if (side == Side::Right)
        for (int letter : a) out = derivation(side, letter, out, spec);
    else
        for (auto it = a.rbegin(); it != a.rend(); ++it) out = derivation(side, *it, out, spec);
    return out;
}

Scalar pairing(const Word& a, const TensorVector& y, const BraidingSpec& spec)
{
    TensorVector same_degree;
    for (const auto& [w, c] : y.terms())
        if (w.size() == a.size()) same_degree.add_term(w, c);
    if (same_degree.is_zero()) return Scalar();
    if (a.empty()) return same_degree.coeff(Word{});
    const Word reversed(a.rbegin(), a.rend());
    return act_element(cached_symmetrizer(static_cast<int>(a.size())), same_degree, spec).coeff(reversed);
}

TensorVector derivation_direct(Side side, const Word& a, const TensorVector& x, const BraidingSpec& spec)
{
    TensorVector out;
    const int n = x.degree();
    const int m = static_cast<int>(a.size());
    if (n < m) return out;
    const int k = side == Side::Left ? m : n - m;
    for (const auto& [lr, c] : coproduct_component(x, k, spec).terms) {
        const Word& paired = side == Side::Left ? lr.first : lr.second;
        const Word& kept = side == Side::Left ? lr.second : lr.first;
        out.add_term(kept, c * pairing(a, TensorVector(paired), spec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dimensions

std::vector<long> nichols_dimensions(const BraidingSpec& spec, int max_degree)
{
    std::vector<long> dims;
    for (int d = 0; d <= max_degree; ++d) {
        if (d == 0) {
            dims.push_back(1);
            continue;
        }
        long total_rank = 0;
        for (const auto& m : multidegrees(spec.dim(), d)) total_rank += rank(symmetrizer_matrix(make_class(m), spec));
        dims.push_back(total_rank);
    }
    return dims;
}

}  // namespace nichols
