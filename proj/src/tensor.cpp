#include "nichols/tensor.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace nichols {

namespace {

Rational rational_pow(const Rational& base, int k)
{
    Rational b = k < 0 ? Rational(1) / base : base;
    unsigned long e = static_cast<unsigned long>(std::abs(k));
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BraidingSpec

BraidingSpec::BraidingSpec(std::vector<std::string> names, std::vector<std::vector<Scalar>> q)
    : names_(std::move(names))
{
    const std::size_t n = q.size();
    if (names_.empty())
        for (std::size_t i = 0; i < n; ++i) names_.push_back("v" + std::to_string(i + 1));
    if (names_.size() != n) throw DegreeMismatch("braiding matrix size differs from the number of names");
    numeric_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i].size() != n) throw DegreeMismatch("braiding matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (q[i][j].is_zero()) throw ZeroEntry(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            numeric_ = numeric_ && q[i][j].is_constant();
            q_.push_back(q[i][j]);
            q_inv_.push_back(q[i][j].inverse());
        }
    }
}

BraidingSpec BraidingSpec::from_cartan(std::vector<std::string> names, const std::vector<std::vector<int>>& cartan,
                                       const std::vector<int>& diag)
{
    const std::size_t n = cartan.size();
    if (diag.size() != n) throw DegreeMismatch("diag length differs from the Cartan matrix size");
    std::vector<std::vector<Scalar>> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i].size() != n) throw DegreeMismatch("Cartan matrix is not square");
        for (std::size_t j = 0; j < n; ++j) q[i].push_back(RatFunc::q(diag[i] * cartan[i][j]));
    }
    return BraidingSpec(std::move(names), std::move(q));
}

BraidingSpec BraidingSpec::evaluated_at(const Rational& point) const
{
    std::vector<std::vector<Scalar>> q(static_cast<std::size_t>(dim()));
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) q[static_cast<std::size_t>(a)].push_back(this->q(a, b).eval_at(point));
    return BraidingSpec(names_, std::move(q));
}

int BraidingSpec::letter_index(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    throw UnknownName(std::string(name));
}

Scalar BraidingSpec::monomial(const std::vector<int>& exponents) const
{
    if (numeric_) {
        Rational r = 1;
        for (std::size_t k = 0; k < exponents.size(); ++k)
            if (exponents[k] != 0) r *= rational_pow(q_[k].constant_value(), exponents[k]);
        return r;
    }
    Scalar s = 1;
    for (std::size_t k = 0; k < exponents.size(); ++k)
        if (exponents[k] != 0) s *= q_[k].pow(exponents[k]);
    return s;
}

// ---------------------------------------------------------------------------
// AnagramClass

AnagramClass::AnagramClass(Multidegree multidegree) : multidegree_(std::move(multidegree))
{
    Word w;
    for (std::size_t a = 0; a < multidegree_.size(); ++a) {
        if (multidegree_[a] < 0) throw std::invalid_argument("negative multidegree entry");
        w.insert(w.end(), static_cast<std::size_t>(multidegree_[a]), static_cast<int>(a));
    }
    degree_ = static_cast<int>(w.size());
    do {
        index_.emplace(w, static_cast<int>(basis_.size()));
        basis_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

int AnagramClass::index_of(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) throw DegreeMismatch("word outside the anagram class");
    return it->second;
}

ClassPtr make_class(Multidegree multidegree)
{
    return std::make_shared<const AnagramClass>(std::move(multidegree));
}

std::vector<Multidegree> multidegrees(int dim, int degree)
{
    std::vector<Multidegree> out;
    if (dim <= 0) return out;
    Multidegree current(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim - 1) {
            current[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(current);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            current[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

Multidegree multidegree_of(const Word& w, int dim)
{
    Multidegree m(static_cast<std::size_t>(dim), 0);
    for (int a : w) {
        if (a < 0 || a >= dim) throw IndexOutOfRange("letter outside the alphabet");
        ++m[static_cast<std::size_t>(a)];
    }
    return m;
}

// ---------------------------------------------------------------------------
// TensorVector

TensorVector::TensorVector(Word w, Scalar coeff)
{
    add_term(w, coeff);
}

Scalar TensorVector::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorVector::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int TensorVector::degree() const
{
    if (terms_.empty()) return -1;
    const std::size_t d = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != d) throw DegreeMismatch("element is not homogeneous");
    return static_cast<int>(d);
}

bool TensorVector::is_homogeneous() const
{
    if (terms_.empty()) return true;
    const std::size_t d = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.size() == d; });
}

std::map<int, TensorVector> TensorVector::components() const
{
    std::map<int, TensorVector> out;
    for (const auto& [w, c] : terms_) out[static_cast<int>(w.size())].terms_.emplace(w, c);
    return out;
}

TensorVector& TensorVector::operator+=(const TensorVector& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

TensorVector TensorVector::operator-() const
{
    TensorVector out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

TensorVector operator*(const TensorVector& a, const TensorVector& b)
{
    TensorVector out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

TensorVector operator*(const Scalar& c, TensorVector a)
{
    if (c.is_zero()) return TensorVector();
    for (auto& [w, coeff] : a.terms_) coeff *= c;
    return a;
}

// ---------------------------------------------------------------------------
// Actions

std::pair<Scalar, Word> act_generator(const Word& w, int i, int sign, const BraidingSpec& spec)
{
    if (i < 1 || i >= static_cast<int>(w.size()))
        throw IndexOutOfRange("generator s" + std::to_string(i) + " on a word of length " + std::to_string(w.size()));
    Word out = w;
    const int a = w[static_cast<std::size_t>(i - 1)];
    const int b = w[static_cast<std::size_t>(i)];
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
    return {sign > 0 ? spec.q(a, b) : spec.q_inv(b, a), std::move(out)};
}

std::pair<Scalar, Word> act_braid_word(const BraidWord& b, Word w, const BraidingSpec& spec)
{
    if (static_cast<int>(w.size()) != b.strands())
        throw DegreeMismatch("braid word on " + std::to_string(b.strands()) + " strands applied to a word of length " +
                             std::to_string(w.size()));
    const int n = spec.dim();
    std::vector<int> exponents(static_cast<std::size_t>(n * n), 0);
    const auto& letters = b.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        auto p = static_cast<std::size_t>(it->generator - 1);
        const int a = w[p], c = w[p + 1];
        if (it->exponent > 0)
            ++exponents[static_cast<std::size_t>(a * n + c)];
        else
            --exponents[static_cast<std::size_t>(c * n + a)];
        std::swap(w[p], w[p + 1]);
    }
    return {spec.monomial(exponents), std::move(w)};
}

TensorVector act_element(const GroupAlgebraElement& e, const TensorVector& v, const BraidingSpec& spec)
{
    TensorVector out;
    for (const auto& [w, c] : v.terms()) {
        if (static_cast<int>(w.size()) != e.strands())
            throw DegreeMismatch("element on " + std::to_string(e.strands()) + " strands applied to degree " +
                                 std::to_string(w.size()));
        for (const auto& [b, eb] : e.terms()) {
            auto [s, image] = act_braid_word(b, w, spec);
            out.add_term(image, c * eb * s);
        }
    }
    return out;
}

Scalar full_twist_scalar(const Word& w, const BraidingSpec& spec)
{
    const int n = spec.dim();
    std::vector<int> exponents(static_cast<std::size_t>(n * n), 0);
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t r = 0; r < w.size(); ++r)
            if (p != r) ++exponents[static_cast<std::size_t>(w[p] * n + w[r])];
    return spec.monomial(exponents);
}

// ---------------------------------------------------------------------------
// OperatorMatrix

OperatorMatrix::OperatorMatrix(ClassPtr cls) : cls_(std::move(cls)), cols_(cls_->size()) {}

OperatorMatrix OperatorMatrix::identity(ClassPtr cls)
{
    OperatorMatrix m(std::move(cls));
    for (std::size_t j = 0; j < m.size(); ++j) m.cols_[j].emplace(static_cast<int>(j), Scalar(1));
    return m;
}

Scalar OperatorMatrix::at(int row, int col) const
{
    const auto& c = cols_[static_cast<std::size_t>(col)];
    auto it = c.find(row);
    return it == c.end() ? Scalar() : it->second;
}

void OperatorMatrix::add(int row, int col, const Scalar& value)
{
    if (value.is_zero()) return;
    auto& c = cols_[static_cast<std::size_t>(col)];
    auto [it, inserted] = c.try_emplace(row, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) c.erase(it);
    }
}

TensorVector OperatorMatrix::apply(const TensorVector& v) const
{
    TensorVector out;
    for (const auto& [w, c] : v.terms()) {
        const int j = cls_->index_of(w);
        for (const auto& [i, m] : cols_[static_cast<std::size_t>(j)]) out.add_term(cls_->word(static_cast<std::size_t>(i)), m * c);
    }
    return out;
}

std::vector<Scalar> OperatorMatrix::coords(const TensorVector& v) const
{
    std::vector<Scalar> out(size());
    for (const auto& [w, c] : v.terms()) out[static_cast<std::size_t>(cls_->index_of(w))] = c;
    return out;
}

TensorVector OperatorMatrix::vector_from(const std::vector<Scalar>& coords) const
{
    TensorVector out;
    for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(cls_->word(i), coords[i]);
    return out;
}

bool OperatorMatrix::is_monomial() const
{
    std::vector<bool> row_used(size(), false);
    for (const auto& c : cols_) {
        if (c.size() != 1) return false;
        auto r = static_cast<std::size_t>(c.begin()->first);
        if (row_used[r]) return false;
        row_used[r] = true;
    }
    return true;
}

bool OperatorMatrix::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

std::vector<std::vector<Scalar>> OperatorMatrix::to_dense() const
{
    std::vector<std::vector<Scalar>> out(size(), std::vector<Scalar>(size()));
    for (std::size_t j = 0; j < size(); ++j)
        for (const auto& [i, v] : cols_[j]) out[static_cast<std::size_t>(i)][j] = v;
    return out;
}

OperatorMatrix OperatorMatrix::evaluated_at(const Rational& point) const
{
    OperatorMatrix out(cls_);
    for (std::size_t j = 0; j < size(); ++j)
        for (const auto& [i, v] : cols_[j]) out.add(i, static_cast<int>(j), v.eval_at(point));
    return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b)
{
    if (a.cls_->multidegree() != b.cls_->multidegree()) throw DegreeMismatch("operators on different classes");
    OperatorMatrix out(a.cls_);
    for (std::size_t j = 0; j < b.size(); ++j)
        for (const auto& [k, bkj] : b.cols_[j])
            for (const auto& [i, aik] : a.cols_[static_cast<std::size_t>(k)]) out.add(i, static_cast<int>(j), aik * bkj);
    return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b)
{
    if (a.cls_->multidegree() != b.cls_->multidegree()) throw DegreeMismatch("operators on different classes");
    OperatorMatrix out = a;
    for (std::size_t j = 0; j < b.size(); ++j)
        for (const auto& [i, v] : b.cols_[j]) out.add(i, static_cast<int>(j), v);
    return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b)
{
    return a + Scalar(-1) * b;
}

OperatorMatrix operator*(const Scalar& c, const OperatorMatrix& a)
{
    OperatorMatrix out(a.cls_);
    if (c.is_zero()) return out;
    out.cols_ = a.cols_;
    for (auto& col : out.cols_)
        for (auto& [i, v] : col) v *= c;
    return out;
}

bool OperatorMatrix::operator==(const OperatorMatrix& o) const
{
    return cls_->multidegree() == o.cls_->multidegree() && cols_ == o.cols_;
}

OperatorMatrix operator_matrix(const GroupAlgebraElement& e, const ClassPtr& cls, const BraidingSpec& spec)
{
    if (e.strands() != cls->degree())
        throw DegreeMismatch("element on " + std::to_string(e.strands()) + " strands on a class of degree " +
                             std::to_string(cls->degree()));
    OperatorMatrix m(cls);
    for (std::size_t j = 0; j < cls->size(); ++j)
        for (const auto& [b, c] : e.terms()) {
            auto [s, image] = act_braid_word(b, cls->word(j), spec);
            m.add(cls->index_of(image), static_cast<int>(j), c * s);
        }
    return m;
}

OperatorMatrix operator_matrix(const BraidWord& b, const ClassPtr& cls, const BraidingSpec& spec)
{
    return operator_matrix(GroupAlgebraElement(b), cls, spec);
}

}  // namespace nichols
