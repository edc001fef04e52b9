#pragma once

// Braid group algebra identities checked as exact operator identities on
// anagram classes.

#include "nichols/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nichols {

enum class IdentityKind {
    SymmetrizerProduct,    // sum over S_n of T_w = T_2 T_3 ... T_n
    TnPn,                  // T_n P_n = T_n'
    FullTwist,             // Delta_n^2 = (s_{n-1}...s_1)^n = Y_1^{n-1}
    PartialTwistSum,       // (sum_{k<n-1} Y_1^k)(1 - Y_1) = 1 - theta_n
    LnTnPrime,             // L_n T_n' = (1 - theta_n)(1 - theta_{n-1})...(1 - theta_2), shifted
    DynkinSetVsProduct,    // lifted signed set P_{1,n} = product form of P_n
    TnPrimeFactorization,  // T_n' = (1 - Y_1) X
    ThetaScalar,           // theta_n acts on each word by its full twist scalar
};

std::string_view to_string(IdentityKind k);
const std::vector<IdentityKind>& all_identities();

/// Both sides of the identity as operators on the class, compared exactly.
bool check_identity(IdentityKind kind, const ClassPtr& cls, const BraidingSpec& spec);

struct IdentityCheck {
    IdentityKind kind;
    Multidegree multidegree;
    bool holds;
};

std::vector<IdentityCheck> check_identities(const std::vector<Multidegree>& classes, const BraidingSpec& spec);

/// `count` classes of degree n with small bases and distinct letter patterns:
/// one per partition shape (smallest classes first, one-word classes last),
/// topped up with further multidegrees if there are too few shapes.
std::vector<Multidegree> sample_classes(int dim, int n, int count);

}  // namespace nichols
