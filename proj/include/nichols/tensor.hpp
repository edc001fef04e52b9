#pragma once

// Diagonal braided vector spaces: braiding specs, tensor words, anagram
// classes and the monomial action of the braid group on them.
//
// Letters are stored 0-based internally (letter a stands for v_{a+1}); braid
// generators and positions are 1-based as in the braid module.

#include "nichols/braid.hpp"
#include "nichols/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nichols {

using Word = std::vector<int>;
using Multidegree = std::vector<int>;

class BraidingSpec {
public:
    /// Throws ZeroEntry (1-based indices) when some q_ij vanishes. Empty names
    /// default to v1..vn.
    BraidingSpec(std::vector<std::string> names, std::vector<std::vector<Scalar>> q);

    /// q_ij = q^{d_i c_ij}.
    static BraidingSpec from_cartan(std::vector<std::string> names, const std::vector<std::vector<int>>& cartan,
                                    const std::vector<int>& diag);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const Scalar& q(int a, int b) const { return q_[idx(a, b)]; }
    const Scalar& q_inv(int a, int b) const { return q_inv_[idx(a, b)]; }

    /// True when every entry is a constant rational.
    bool is_numeric() const { return numeric_; }

    /// Same spec with q replaced by a rational point; throws PoleAtPoint.
    BraidingSpec evaluated_at(const Rational& point) const;

    /// 0-based letter index of a generator name; throws UnknownName.
    int letter_index(std::string_view name) const;

    /// prod q_ab^{e_ab} for an exponent table laid out like the matrix.
    Scalar monomial(const std::vector<int>& exponents) const;

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * dim() + b); }

    std::vector<std::string> names_;
    std::vector<Scalar> q_;
    std::vector<Scalar> q_inv_;
    bool numeric_ = false;
};

/// Span of all words with a fixed multidegree, basis in lexicographic order.
class AnagramClass {
public:
    explicit AnagramClass(Multidegree multidegree);

    const Multidegree& multidegree() const { return multidegree_; }
    int dim() const { return static_cast<int>(multidegree_.size()); }
    int degree() const { return degree_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Word>& basis() const { return basis_; }
    const Word& word(std::size_t j) const { return basis_[j]; }

    bool contains(const Word& w) const { return index_.count(w) != 0; }
    /// Throws DegreeMismatch for a word outside the class.
    int index_of(const Word& w) const;

private:
    Multidegree multidegree_;
    int degree_ = 0;
    std::vector<Word> basis_;
    std::map<Word, int> index_;
};

using ClassPtr = std::shared_ptr<const AnagramClass>;

ClassPtr make_class(Multidegree multidegree);

/// All multidegrees of the given total degree over `dim` letters, in
/// lexicographically decreasing order ((d,0,...) first).
std::vector<Multidegree> multidegrees(int dim, int degree);

Multidegree multidegree_of(const Word& w, int dim);

/// Finite linear combination of words; an element of T(V).
class TensorVector {
public:
    using Terms = std::map<Word, Scalar>;

    TensorVector() = default;
    TensorVector(Word w, Scalar coeff = 1);  // NOLINT(implicit)

    /// The unit: the empty word with coefficient 1.
    static TensorVector one() { return TensorVector(Word{}); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    /// Common length of all words; throws DegreeMismatch if mixed, -1 when zero.
    int degree() const;
    bool is_homogeneous() const;
    /// Homogeneous components keyed by degree.
    std::map<int, TensorVector> components() const;

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    TensorVector operator-() const;
    /// Concatenation product of T(V).
    friend TensorVector operator*(const TensorVector& a, const TensorVector& b);
    friend TensorVector operator*(const Scalar& c, TensorVector a);
    bool operator==(const TensorVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorVector& o) const { return !(*this == o); }

private:
    Terms terms_;
};

/// Elements of T(V) are handled through their homogeneous components.
using GradedElement = TensorVector;

/// sigma_i^{sign} on positions (i, i+1); throws IndexOutOfRange.
std::pair<Scalar, Word> act_generator(const Word& w, int i, int sign, const BraidingSpec& spec);

/// Action of a braid word (rightmost letter first); the result is monomial.
std::pair<Scalar, Word> act_braid_word(const BraidWord& b, Word w, const BraidingSpec& spec);

/// Throws DegreeMismatch when a word length differs from the strand count.
TensorVector act_element(const GroupAlgebraElement& e, const TensorVector& v, const BraidingSpec& spec);

/// prod_{p != r} q_{w_p w_r}: the eigenvalue of the full twist on w.
Scalar full_twist_scalar(const Word& w, const BraidingSpec& spec);

/// Sparse square matrix over Scalar indexed by the basis of a class.
class OperatorMatrix {
public:
    using Column = std::map<int, Scalar>;

    explicit OperatorMatrix(ClassPtr cls);
    static OperatorMatrix identity(ClassPtr cls);

    const AnagramClass& space() const { return *cls_; }
    const ClassPtr& class_ptr() const { return cls_; }
    std::size_t size() const { return cols_.size(); }
    const Column& column(std::size_t j) const { return cols_[j]; }
    Scalar at(int row, int col) const;

    void add(int row, int col, const Scalar& c);

    /// Throws DegreeMismatch when v has a word outside the class.
    TensorVector apply(const TensorVector& v) const;
    /// Coordinates of v in the class basis.
    std::vector<Scalar> coords(const TensorVector& v) const;
    TensorVector vector_from(const std::vector<Scalar>& coords) const;

    bool is_monomial() const;
    bool is_zero() const;
    std::vector<std::vector<Scalar>> to_dense() const;

    OperatorMatrix evaluated_at(const Rational& point) const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(const Scalar& c, const OperatorMatrix& a);
    bool operator==(const OperatorMatrix& o) const;
    bool operator!=(const OperatorMatrix& o) const { return !(*this == o); }

private:
    ClassPtr cls_;
    std::vector<Column> cols_;
};

OperatorMatrix operator_matrix(const GroupAlgebraElement& e, const ClassPtr& cls, const BraidingSpec& spec);
OperatorMatrix operator_matrix(const BraidWord& b, const ClassPtr& cls, const BraidingSpec& spec);

}  // namespace nichols
