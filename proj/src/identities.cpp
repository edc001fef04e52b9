#include "nichols/identities.hpp"

#include "nichols/braid.hpp"
#include "nichols/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace nichols {

namespace {

struct Entry {
    IdentityKind kind;
    std::string_view name;
};

constexpr Entry kEntries[] = {
    {IdentityKind::SymmetrizerProduct, "symmetrizer_product"},
    {IdentityKind::TnPn, "tn_pn"},
    {IdentityKind::FullTwist, "full_twist"},
    {IdentityKind::PartialTwistSum, "partial_twist_sum"},
    {IdentityKind::LnTnPrime, "ln_tn_prime"},
    {IdentityKind::DynkinSetVsProduct, "dynkin_set_vs_product"},
    {IdentityKind::TnPrimeFactorization, "tn_prime_factorization"},
    {IdentityKind::ThetaScalar, "theta_scalar"},
};

// Operators for the factors, multiplied as matrices so that long products
// are never expanded as formal words.
class Factors {
public:
    Factors(const ClassPtr& cls, const BraidingSpec& spec) : cls_(cls), spec_(spec), n_(cls->degree()) {}

    OperatorMatrix id() const { return OperatorMatrix::identity(cls_); }
    OperatorMatrix of(const GroupAlgebraElement& e) const { return operator_matrix(e, cls_, spec_); }
    OperatorMatrix of(const BraidWord& b) const { return operator_matrix(b, cls_, spec_); }
    OperatorMatrix one_minus(const BraidWord& b) const { return id() - of(b); }

    OperatorMatrix t(int m) const
    {
        GroupAlgebraElement e(n_);
        for (int bottom = m; bottom >= 1; --bottom) e.add_term(BraidWord::descending(n_, m - 1, bottom), 1);
        return of(e);
    }

    OperatorMatrix y(int bottom) const { return of(twisted_run(n_, bottom)); }

    OperatorMatrix theta(int s) const
    {
        return of(BraidWord::descending(s, s - 1, 1).pow(s).embedded(n_ - s, n_));
    }

    OperatorMatrix geometric(const OperatorMatrix& m, int terms) const
    {
        OperatorMatrix sum(cls_), power = id();
        for (int k = 0; k < terms; ++k) {
            sum = sum + power;
            power = power * m;
        }
        return sum;
    }

    int n() const { return n_; }

private:
    ClassPtr cls_;
    const BraidingSpec& spec_;
    int n_;
};

}  // namespace

std::string_view to_string(IdentityKind k)
{
    for (const auto& e : kEntries)
        if (e.kind == k) return e.name;
    return "?";
}

const std::vector<IdentityKind>& all_identities()
{
    static const std::vector<IdentityKind> kinds = [] {
        std::vector<IdentityKind> v;
        for (const auto& e : kEntries) v.push_back(e.kind);
        return v;
    }();
    return kinds;
}

bool check_identity(IdentityKind kind, const ClassPtr& cls, const BraidingSpec& spec)
{
    const Factors f(cls, spec);
    const int n = f.n();
    if (n < 2) throw DegreeMismatch("identity checks need degree >= 2");
    switch (kind) {
    case IdentityKind::SymmetrizerProduct: {
        OperatorMatrix product = f.id();
        for (int m = 2; m <= n; ++m) product = product * f.t(m);
        return f.of(named_element(NamedElement::SymmetrizerSum, n)) == product;
    }
    case IdentityKind::TnPn:
        return f.t(n) * f.of(dynkin_element(n)) == f.of(named_element(NamedElement::TnPrime, n));
    case IdentityKind::FullTwist: {
        const OperatorMatrix garside = f.of(named_element(NamedElement::Garside, n));
        const OperatorMatrix twist = f.of(named_element(NamedElement::FullTwist, n));
        return garside * garside == twist && twist == f.of(named_element(NamedElement::FullTwistAlt, n));
    }
    case IdentityKind::PartialTwistSum:
        return f.of(partial_twist_sum(n)) * f.one_minus(twisted_run(n, 1)) ==
               f.id() - f.of(named_element(NamedElement::FullTwist, n));
    case IdentityKind::LnTnPrime: {
        OperatorMatrix ln = f.id();
        for (int bottom = n - 2; bottom >= 1; --bottom) ln = ln * f.geometric(f.y(bottom), n - bottom);
        OperatorMatrix tn_prime = f.id();
        for (int bottom = 1; bottom <= n - 1; ++bottom) tn_prime = tn_prime * (f.id() - f.y(bottom));
        OperatorMatrix chain = f.id();
        for (int s = n; s >= 2; --s) chain = chain * (f.id() - f.theta(s));
        return ln * tn_prime == chain && chain == f.of(twist_defect_chain(n));
    }
    case IdentityKind::DynkinSetVsProduct:
        return f.of(lift(dynkin_set(1, n, n), n)) == f.of(dynkin_element(n));
    case IdentityKind::TnPrimeFactorization:
        return f.of(named_element(NamedElement::TnPrime, n)) ==
               f.one_minus(twisted_run(n, 1)) * f.of(named_element(NamedElement::X, n));
    case IdentityKind::ThetaScalar: {
        OperatorMatrix diagonal(cls);
        for (std::size_t j = 0; j < cls->size(); ++j)
            diagonal.add(static_cast<int>(j), static_cast<int>(j), full_twist_scalar(cls->word(j), spec));
        return f.theta(n) == diagonal;
    }
    }
    throw std::logic_error("unhandled identity");
}

std::vector<IdentityCheck> check_identities(const std::vector<Multidegree>& classes, const BraidingSpec& spec)
{
    std::vector<IdentityCheck> out;
    for (const auto& m : classes) {
        const ClassPtr cls = make_class(m);
        for (IdentityKind kind : all_identities()) out.push_back({kind, m, check_identity(kind, cls, spec)});
    }
    return out;
}

std::vector<Multidegree> sample_classes(int dim, int n, int count)
{
    struct Candidate {
        std::size_t size;
        Multidegree m;
    };
    std::vector<Candidate> firsts, rest;
    std::set<Multidegree> shapes_seen;
    for (auto& m : multidegrees(dim, n)) {
        Multidegree shape = m;
        std::sort(shape.begin(), shape.end(), std::greater<>());
        const std::size_t size = AnagramClass(m).size();
        if (shapes_seen.insert(shape).second)
            firsts.push_back({size, std::move(m)});
        else
            rest.push_back({size, std::move(m)});
    }
    auto by_size = [](const Candidate& a, const Candidate& b) {
        const bool a_trivial = a.size == 1, b_trivial = b.size == 1;
        if (a_trivial != b_trivial) return b_trivial;
        return a.size < b.size;
    };
    std::stable_sort(firsts.begin(), firsts.end(), by_size);
    std::stable_sort(rest.begin(), rest.end(), by_size);
    std::vector<Multidegree> out;
    for (auto* list : {&firsts, &rest})
        for (const auto& c : *list) {
            if (static_cast<int>(out.size()) == count) return out;
            out.push_back(c.m);
        }
    return out;
}

}  // namespace nichols
