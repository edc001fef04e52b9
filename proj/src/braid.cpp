#include "nichols/braid.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nichols {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i)
{
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    auto v = identity(n).images_;
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles)
{
    Permutation result = identity(n);
    for (const auto& cycle : cycles) {
        auto v = identity(n).images_;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            v[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
        result = result * Permutation(std::move(v));
    }
    return result;
}

Permutation Permutation::inverse() const
{
    std::vector<int> v(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p) v[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p) + 1;
    return Permutation(std::move(v));
}

int Permutation::inversions() const
{
    int count = 0;
    for (std::size_t a = 0; a < images_.size(); ++a)
        for (std::size_t b = a + 1; b < images_.size(); ++b)
            if (images_[a] > images_[b]) ++count;
    return count;
}

bool Permutation::is_identity() const
{
    for (std::size_t p = 0; p < images_.size(); ++p)
        if (images_[p] != static_cast<int>(p) + 1) return false;
    return true;
}

std::string Permutation::cycle_string() const
{
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    const bool wide = size() >= 10;
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
        out += "(";
        int p = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(p - 1)]) {
            seen[static_cast<std::size_t>(p - 1)] = true;
            if (wide && !first) out += ",";
            out += std::to_string(p);
            first = false;
            p = (*this)(p);
        }
        out += ")";
    }
    return out.empty() ? "(1)" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> v(a.images_.size());
    for (int p = 1; p <= a.size(); ++p) v[static_cast<std::size_t>(p - 1)] = a(b(p));
    return Permutation(std::move(v));
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters))
{
    for (const auto& l : letters_) {
        if (l.generator < 1 || l.generator >= strands_)
            throw IndexOutOfRange("generator s" + std::to_string(l.generator) + " outside B_" + std::to_string(strands_));
        if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("braid letter exponent must be +-1");
    }
}

BraidWord BraidWord::positive(int strands, const std::vector<int>& generators)
{
    std::vector<BraidLetter> letters;
    letters.reserve(generators.size());
    for (int g : generators) letters.push_back({g, 1});
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::descending(int strands, int top, int bottom)
{
    std::vector<int> gens;
    for (int g = top; g >= bottom; --g) gens.push_back(g);
    return positive(strands, gens);
}

BraidWord BraidWord::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    BraidWord out(strands_);
    for (int i = 0; i < k; ++i) out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

BraidWord BraidWord::inverse() const
{
    BraidWord out(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->generator, -it->exponent});
    return out;
}

BraidWord BraidWord::embedded(int offset, int strands) const
{
    std::vector<BraidLetter> letters = letters_;
    for (auto& l : letters) l.generator += offset;
    return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const
{
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += "*";
        out += "s" + std::to_string(letters_[i].generator);
        if (letters_[i].exponent < 0) out += "^-1";
    }
    return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b)
{
    if (a.strands_ != b.strands_) throw DegreeMismatch("braid words on different strand counts");
    BraidWord out = a;
    out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    return out;
}

BraidWord parse_braid_word(std::string_view text, int strands)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, 1, static_cast<int>(pos) + 1); };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip();
        if (pos != text.size()) fail("unexpected text after identity word");
        return BraidWord(strands);
    }
    std::vector<BraidLetter> letters;
    for (;;) {
        skip();
        if (pos >= text.size() || text[pos] != 's') fail("expected generator 's<k>'");
        ++pos;
        int g = number();
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
            int k = number();
            if (k != 1) fail("only exponents +-1 are allowed");
            e = negative ? -1 : 1;
        }
        letters.push_back({g, e});
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '*') fail("expected '*'");
        ++pos;
    }
    return BraidWord(strands, std::move(letters));
}

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement::GroupAlgebraElement(const BraidWord& w, Scalar coeff) : strands_(w.strands())
{
    add_term(w, coeff);
}

void GroupAlgebraElement::add_term(const BraidWord& w, const Scalar& c)
{
    if (w.strands() != strands_) throw DegreeMismatch("braid word strand count differs from element");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::pow(int k) const
{
    GroupAlgebraElement out = one(strands_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

GroupAlgebraElement GroupAlgebraElement::embedded(int offset, int strands) const
{
    GroupAlgebraElement out(strands);
    for (const auto& [w, c] : terms_) out.add_term(w.embedded(offset, strands), c);
    return out;
}

std::string GroupAlgebraElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar coeff = c;
        bool negative = c.is_constant() && c.constant_value() < 0;
        if (negative) coeff = -coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (w.empty()) {
            out += coeff.is_constant() ? nichols::to_string(coeff) : "(" + nichols::to_string(coeff) + ")";
            continue;
        }
        if (!coeff.is_one()) {
            if (coeff.is_constant())
                out += nichols::to_string(coeff) + "*";
            else
                out += "(" + nichols::to_string(coeff) + ")*";
        }
        out += w.to_string();
    }
    return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o)
{
    if (o.strands_ != strands_) throw DegreeMismatch("group algebra elements on different strand counts");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o)
{
    if (o.strands_ != strands_) throw DegreeMismatch("group algebra elements on different strand counts");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    if (a.strands_ != b.strands_) throw DegreeMismatch("group algebra elements on different strand counts");
    GroupAlgebraElement out(a.strands_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

GroupAlgebraElement operator*(const Scalar& c, GroupAlgebraElement a)
{
    if (c.is_zero()) return GroupAlgebraElement(a.strands_);
    for (auto& [w, coeff] : a.terms_) coeff *= c;
    return a;
}

// ---------------------------------------------------------------------------
// Symmetric group

BraidWord matsumoto_lift(const Permutation& w)
{
    const int n = w.size();
    std::vector<int> images = w.one_line();
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(images[static_cast<std::size_t>(p)])] = p;
    std::vector<int> gens;
    // Greedy on left descents: i is a left descent iff i+1 stands before i.
    for (;;) {
        int i = 1;
        while (i < n && position[static_cast<std::size_t>(i + 1)] > position[static_cast<std::size_t>(i)]) ++i;
        if (i >= n) break;
        gens.push_back(i);
        std::swap(position[static_cast<std::size_t>(i)], position[static_cast<std::size_t>(i + 1)]);
    }
    return BraidWord::positive(n, gens);
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    auto v = Permutation::identity(n).one_line();
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> shuffles(int k, int n)
{
    if (k < 0 || k > n) throw std::invalid_argument("shuffles: need 0 <= k <= n");
    std::vector<Permutation> out;
    // Choose the positions sent to 1..k; the rest keep their order behind them.
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::fill(chosen.begin(), chosen.begin() + k, true);
    do {
        std::vector<int> images(static_cast<std::size_t>(n));
        int front = 1, back = k + 1;
        for (std::size_t p = 0; p < chosen.size(); ++p) images[p] = chosen[p] ? front++ : back++;
        out.emplace_back(std::move(images));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

std::vector<SignedPermutation> dynkin_set(int i, int j, int n)
{
    if (i < 1 || i > j || j > n) throw std::invalid_argument("dynkin_set: need 1 <= i <= j <= n");
    if (i == j) return {{1, Permutation::identity(n)}};
    std::vector<SignedPermutation> out = dynkin_set(i + 1, j, n);
    std::vector<int> cycle{i};
    for (int t = j; t > i; --t) cycle.push_back(t);
    const Permutation c = Permutation::from_cycles(n, {cycle});
    for (const auto& [sign, perm] : dynkin_set(i, j - 1, n)) out.push_back({-sign, perm * c});
    return out;
}

GroupAlgebraElement lift(const std::vector<SignedPermutation>& set, int n)
{
    GroupAlgebraElement out(n);
    for (const auto& [sign, perm] : set) out.add_term(matsumoto_lift(perm), sign);
    return out;
}

// ---------------------------------------------------------------------------
// Named elements

namespace {

void require(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

GroupAlgebraElement one_minus(const BraidWord& w)
{
    GroupAlgebraElement e = GroupAlgebraElement::one(w.strands());
    e.add_term(w, -1);
    return e;
}

GroupAlgebraElement geometric_sum(const BraidWord& w, int terms)
{
    GroupAlgebraElement e(w.strands());
    for (int k = 0; k < terms; ++k) e.add_term(w.pow(k), 1);
    return e;
}

// T_m inside B_n: 1 + s_{m-1} + s_{m-1}s_{m-2} + ... + s_{m-1}...s_1.
GroupAlgebraElement t_element(int m, int n)
{
    GroupAlgebraElement e(n);
    for (int bottom = m; bottom >= 1; --bottom) e.add_term(BraidWord::descending(n, m - 1, bottom), 1);
    return e;
}

}  // namespace

GroupAlgebraElement dynkin_element(int n)
{
    require(n >= 1, "dynkin_element: n >= 1");
    GroupAlgebraElement e = GroupAlgebraElement::one(n);
    for (int bottom = 1; bottom <= n - 1; ++bottom) e = e * one_minus(BraidWord::descending(n, n - 1, bottom));
    return e;
}

BraidWord twisted_run(int n, int bottom)
{
    require(n >= 2 && bottom >= 1 && bottom <= n - 1, "twisted_run: need 1 <= bottom <= n-1");
    return BraidWord::positive(n, {n - 1}) * BraidWord::descending(n, n - 1, bottom);
}

GroupAlgebraElement partial_twist_sum(int n)
{
    require(n >= 2, "partial_twist_sum: n >= 2");
    return geometric_sum(twisted_run(n, 1), n - 1);
}

GroupAlgebraElement twist_defect_chain(int n)
{
    require(n >= 2, "twist_defect_chain: n >= 2");
    GroupAlgebraElement e = GroupAlgebraElement::one(n);
    for (int s = n; s >= 2; --s) {
        BraidWord theta = BraidWord::descending(s, s - 1, 1).pow(s).embedded(n - s, n);
        e = e * one_minus(theta);
    }
    return e;
}

namespace {

struct NamedEntry {
    NamedElement value;
    std::string_view name;
};

constexpr NamedEntry kNamed[] = {
    {NamedElement::Garside, "garside"},
    {NamedElement::FullTwist, "full_twist"},
    {NamedElement::FullTwistAlt, "full_twist_alt"},
    {NamedElement::Tn, "t_n"},
    {NamedElement::TnPrime, "t_n_prime"},
    {NamedElement::Ln, "l_n"},
    {NamedElement::X, "x_element"},
    {NamedElement::SymmetrizerSum, "symmetrizer_sum"},
    {NamedElement::SymmetrizerProduct, "symmetrizer_product"},
};

}  // namespace

NamedElement named_element_from_string(std::string_view name)
{
    for (const auto& e : kNamed)
        if (e.name == name) return e.value;
    throw UnknownName(std::string(name));
}

std::string_view to_string(NamedElement e)
{
    for (const auto& entry : kNamed)
        if (entry.value == e) return entry.name;
    return "?";
}

GroupAlgebraElement named_element(NamedElement which, int n)
{
    switch (which) {
    case NamedElement::SymmetrizerSum: {
        require(n >= 1, "symmetrizer_sum: n >= 1");
        GroupAlgebraElement e(n);
        for (const auto& w : all_permutations(n)) e.add_term(matsumoto_lift(w), 1);
        return e;
    }
    case NamedElement::SymmetrizerProduct: {
        require(n >= 1, "symmetrizer_product: n >= 1");
        GroupAlgebraElement e = GroupAlgebraElement::one(n);
        for (int m = 2; m <= n; ++m) e = e * t_element(m, n);
        return e;
    }
    default:
        break;
    }
    require(n >= 2, "named element needs n >= 2");
    switch (which) {
    case NamedElement::Garside: {
        std::vector<int> gens;
        for (int top = n - 1; top >= 1; --top)
            for (int g = 1; g <= top; ++g) gens.push_back(g);
        return BraidWord::positive(n, gens);
    }
    case NamedElement::FullTwist:
        return BraidWord::descending(n, n - 1, 1).pow(n);
    case NamedElement::FullTwistAlt:
        return twisted_run(n, 1).pow(n - 1);
    case NamedElement::Tn:
        return t_element(n, n);
    case NamedElement::TnPrime: {
        GroupAlgebraElement e = GroupAlgebraElement::one(n);
        for (int bottom = 1; bottom <= n - 1; ++bottom) e = e * one_minus(twisted_run(n, bottom));
        return e;
    }
    case NamedElement::Ln: {
        GroupAlgebraElement e = GroupAlgebraElement::one(n);
        for (int bottom = n - 2; bottom >= 1; --bottom) e = e * geometric_sum(twisted_run(n, bottom), n - bottom);
        return e;
    }
    case NamedElement::X: {
        GroupAlgebraElement e = GroupAlgebraElement::one(n);
        for (int bottom = 2; bottom <= n - 1; ++bottom) e = e * one_minus(twisted_run(n, bottom));
        return e;
    }
    default:
        break;
    }
    throw std::logic_error("unhandled named element");
}

GroupAlgebraElement named_element(std::string_view name, int n)
{
    return named_element(named_element_from_string(name), n);
}

}  // namespace nichols
