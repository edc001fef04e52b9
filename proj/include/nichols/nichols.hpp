#pragma once

// Nichols algebras of diagonal type: coproduct components, antipode, the
// Dynkin map, convolution identities, level classification, the relation
// search, Serre elements, skew-derivations and dimensions.
//
// Letters are 0-based throughout, as in tensor.hpp.

#include "nichols/linalg.hpp"
#include "nichols/tensor.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

// --- Coproduct and antipode ------------------------------------------------

/// Bidegree (k, n-k) part of the coproduct, as a sum of pure tensors left (x) right.
struct CoproductComponent {
    std::map<std::pair<Word, Word>, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& left, const Word& right, const Scalar& c);
};

/// sum over (k, n-k)-shuffles tau of T_tau x, each word split after position k.
/// x must be homogeneous (DegreeMismatch otherwise) and 0 <= k <= n.
CoproductComponent coproduct_component(const TensorVector& x, int k, const BraidingSpec& spec);

/// True iff every proper component Delta_{k,n-k}(x), 1 <= k <= n-1, vanishes.
bool is_primitive(const TensorVector& x, const BraidingSpec& spec);

/// Antipode of T(V), by S(x) = -x - sum S(x') x'' over proper components; S(1) = 1.
TensorVector antipode(const GradedElement& x, const BraidingSpec& spec);

/// Phi(x) = P_n x on each homogeneous component; Phi(1) = 0.
TensorVector dynkin_apply(const GradedElement& x, const BraidingSpec& spec);

/// sum_k m(Phi (x) id) Delta_{k,n-k}(x) for homogeneous x.
TensorVector phi_convolution_id(const TensorVector& x, const BraidingSpec& spec);
/// sum_k m(N (x) S) Delta_{k,n-k}(x), N multiplying by the degree.
TensorVector degree_convolution_antipode(const TensorVector& x, const BraidingSpec& spec);

bool convolution_check_phi_id(const TensorVector& x, const BraidingSpec& spec);
bool convolution_check_ns(const TensorVector& x, const BraidingSpec& spec);

// --- Levels -----------------------------------------------------------------

/// prod_a q_aa^{k_a(k_a-1)} prod_{a != b} q_ab^{k_a k_b}: the full twist
/// eigenvalue on any word of multidegree k.
Scalar class_twist_scalar(const Multidegree& k, const BraidingSpec& spec);

/// Multidegrees of total degree 2..max_degree fixed by the full twist.
std::vector<Multidegree> theta_fixed_classes(const BraidingSpec& spec, int max_degree);

enum class Verdict { LevelN, ThetaFixedOnly, NotThetaFixed };
std::string to_string(Verdict v);

struct ViolatingSubset {
    int size;
    Multidegree subset;
    bool operator==(const ViolatingSubset& o) const { return size == o.size && subset == o.subset; }
};

struct LevelReport {
    Multidegree multidegree;
    bool theta_fixed = false;
    std::vector<ViolatingSubset> violating_subsets;
    Verdict verdict = Verdict::NotThetaFixed;
    /// The positional test (every contiguous window of every word) found the
    /// same violating sub-multisets.
    bool window_check_agrees = true;
};

LevelReport level_classify(const Multidegree& multidegree, const BraidingSpec& spec);

// --- Relations -------------------------------------------------------------

struct Certificates {
    bool in_ker_sn = false;
    bool in_im_pn = false;
    bool primitive = false;
    bool all() const { return in_ker_sn && in_im_pn && primitive; }
};

struct Relation {
    Multidegree multidegree;
    TensorVector vector;
    Certificates certificates;
};

/// One seed of the search: u = (sum_k Y_1^k) w, x = X^{-1} u, r = P_n x.
struct SearchStep {
    Word seed;
    TensorVector u;
    TensorVector x;
    TensorVector r;
};

struct RelationSearch {
    LevelReport level;
    std::vector<SearchStep> steps;  // seeds with u = 0 are omitted
    std::vector<Relation> relations;
    int kernel_dimension = 0;
    /// The relations span ker(S_n) on the class.
    bool spans_kernel = false;
};

/// Throws NotLevelN unless the class is of level n; SingularFactor propagates.
RelationSearch search_relations(const Multidegree& multidegree, const BraidingSpec& spec);
std::vector<Relation> find_relations(const Multidegree& multidegree, const BraidingSpec& spec);

Certificates certify(const TensorVector& r, const BraidingSpec& spec);

struct SerreRelation {
    Relation relation;
    int cartan_entry;  // c with q_ij q_ji = q_ii^c
    int exponent;      // N = 1 - c
};

/// P_{N+1}(v_i^N v_j) for letters i != j; throws NoSerreExponent when no
/// c in {0, -1, ..., -bound} satisfies q_ij q_ji = q_ii^c.
SerreRelation serre_element(int i, int j, const BraidingSpec& spec, int bound = 12);

// --- Derivations -------------------------------------------------------------

enum class Side { Left, Right };

/// Left: read off Delta_{1,n-1}; right: read off Delta_{n-1,1}.
TensorVector derivation(Side side, int letter, const TensorVector& x, const BraidingSpec& spec);

/// Word derivations by composition: d^R_{a1...am} = d^R_{am} o ... o d^R_{a1},
/// d^L_{a1...am} = d^L_{a1} o ... o d^L_{am}.
TensorVector derivation(Side side, const Word& a, const TensorVector& x, const BraidingSpec& spec);

/// phi(a, y): coefficient of the reversed word of a in S_m y, m = |a|.
Scalar pairing(const Word& a, const TensorVector& y, const BraidingSpec& spec);

/// Word derivation through one coproduct component and the pairing.
TensorVector derivation_direct(Side side, const Word& a, const TensorVector& x, const BraidingSpec& spec);

// --- Dimensions ------------------------------------------------------------

/// S_n on a class, built as T_2 T_3 ... T_n.
OperatorMatrix symmetrizer_matrix(const ClassPtr& cls, const BraidingSpec& spec);

/// dim N(V)_d for d = 0..max_degree.
std::vector<long> nichols_dimensions(const BraidingSpec& spec, int max_degree);

}  // namespace nichols
