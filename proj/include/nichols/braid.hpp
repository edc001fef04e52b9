#pragma once

// Symmetric and braid group combinatorics: permutations, braid words, the
// Matsumoto section, shuffles, and named elements of the braid group algebra.
//
// Conventions used everywhere in the library:
//   * a permutation w moves the letter at position p to position w(p);
//   * products compose right-first: (a*b)(p) = a(b(p)), and in a braid word
//     the rightmost generator acts first.

#include "nichols/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

class Permutation {
public:
    /// One-line notation over 1..n; throws std::invalid_argument if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// s_i = (i, i+1), 1 <= i < n.
    static Permutation transposition(int n, int i);
    /// Product of disjoint or overlapping cycles, e.g. {{1,3,2}}; cycles compose right-first.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int p) const { return images_[static_cast<std::size_t>(p - 1)]; }
    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const;
    int inversions() const;
    bool is_identity() const;

    /// Cycle notation without fixed points, "(1)" for the identity.
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

struct SignedPermutation {
    int sign;
    Permutation perm;
    bool operator==(const SignedPermutation& o) const { return sign == o.sign && perm == o.perm; }
    bool operator<(const SignedPermutation& o) const
    {
        return perm < o.perm || (perm == o.perm && sign < o.sign);
    }
};

struct BraidLetter {
    int generator;  // 1..n-1
    int exponent;   // +1 or -1
    bool operator==(const BraidLetter& o) const { return generator == o.generator && exponent == o.exponent; }
    bool operator<(const BraidLetter& o) const
    {
        return generator < o.generator || (generator == o.generator && exponent < o.exponent);
    }
};

class BraidWord {
public:
    explicit BraidWord(int strands) : strands_(strands) {}
    BraidWord(int strands, std::vector<BraidLetter> letters);

    /// Positive word sigma_{g1} sigma_{g2} ... from generator indices.
    static BraidWord positive(int strands, const std::vector<int>& generators);
    /// sigma_top sigma_{top-1} ... sigma_bottom (empty when top < bottom).
    static BraidWord descending(int strands, int top, int bottom);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    BraidWord pow(int k) const;
    BraidWord inverse() const;
    /// Positional embedding sigma_t -> sigma_{t+offset} into a braid group on `strands` strands.
    BraidWord embedded(int offset, int strands) const;

    /// "s1*s2*s1^-1", "1" for the empty word.
    std::string to_string() const;

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    bool operator==(const BraidWord& o) const { return strands_ == o.strands_ && letters_ == o.letters_; }
    bool operator<(const BraidWord& o) const { return letters_ < o.letters_; }

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// Parses "s1*s2^-1*s3" (or "1") into a word on `strands` strands.
BraidWord parse_braid_word(std::string_view text, int strands);

/// Formal linear combination of written braid words.
///
/// Words are not reduced to any normal form: two different written words may
/// be the same braid. Compare elements through operator matrices.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int strands) : strands_(strands) {}
    GroupAlgebraElement(const BraidWord& w, Scalar coeff = 1);  // NOLINT(implicit)

    static GroupAlgebraElement one(int strands) { return GroupAlgebraElement(BraidWord(strands)); }

    int strands() const { return strands_; }
    const std::map<BraidWord, Scalar>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BraidWord& w, const Scalar& c);
    GroupAlgebraElement pow(int k) const;
    GroupAlgebraElement embedded(int offset, int strands) const;

    std::string to_string() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Scalar& c, GroupAlgebraElement a);

private:
    int strands_;
    std::map<BraidWord, Scalar> terms_;
};

// --- Symmetric group -------------------------------------------------------

/// Lexicographically smallest reduced word of w, lifted letter for letter.
BraidWord matsumoto_lift(const Permutation& w);

/// All permutations of 1..n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// (k, n-k)-shuffles: w^{-1}(1) < ... < w^{-1}(k) and w^{-1}(k+1) < ... < w^{-1}(n).
std::vector<Permutation> shuffles(int k, int n);

/// Signed permutation set of the Dynkin operator on positions i..j of n.
std::vector<SignedPermutation> dynkin_set(int i, int j, int n);

/// Sum of sign * T_w over a signed set.
GroupAlgebraElement lift(const std::vector<SignedPermutation>& set, int n);

// --- Named elements --------------------------------------------------------

/// (1 - s_{n-1}...s_1)(1 - s_{n-1}...s_2)...(1 - s_{n-1}); the identity for n = 1.
GroupAlgebraElement dynkin_element(int n);

enum class NamedElement {
    Garside,
    FullTwist,
    FullTwistAlt,
    Tn,
    TnPrime,
    Ln,
    X,
    SymmetrizerSum,
    SymmetrizerProduct,
};

NamedElement named_element_from_string(std::string_view name);  // throws UnknownName
std::string_view to_string(NamedElement e);

GroupAlgebraElement named_element(NamedElement which, int n);
GroupAlgebraElement named_element(std::string_view name, int n);

/// Y_i = s_{n-1}^2 s_{n-2} ... s_i, the building block of T_n', X and L_n.
BraidWord twisted_run(int n, int bottom);

/// sum_{k=0}^{n-2} Y_1^k.
GroupAlgebraElement partial_twist_sum(int n);

/// (1 - theta_n)(1 - theta_{n-1} on the last n-1 strands)...(1 - s_{n-1}^2).
GroupAlgebraElement twist_defect_chain(int n);

}  // namespace nichols
