#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algdef/mul_table.hpp"

namespace algdef {

enum class FormKind { trace, killing };

struct GramForm {
    FormKind kind;
    RationalMatrix gram;
    Rational discriminant;
    /// For the trace form: false when the law is not associative, in which
    /// case the semisimplicity reading of the discriminant does not apply.
    bool semantics_apply = true;
};

/// Principal trace form T(a,b) = Tr(L_{ab}); gram(i,j) = Tr(L_{e_i e_j}).
/// Computed for any law.
GramForm trace_gram(const MulTable& x);

/// Trace-form discriminant is nonzero. Throws OffVariety off Alg(V).
bool is_separable(const MulTable& x);

/// Right Killing form kappa_R(a,b) = Tr(R_a R_b). The coordinate sum
/// sum_{q,r} x(q,i,r) x(r,j,q) and the operator traces are both evaluated;
/// disagreement throws InternalInconsistency.
GramForm killing_gram(const MulTable& x);

/// det(killing_gram) != 0 on Leib(V). When true, also asserts the law is Lie
/// (InternalInconsistency otherwise). Throws OffVariety off Leib(V).
bool is_semisimple_lie_point(const MulTable& x);

struct CharacterPair {
    Vector sigma_L;  // Tr(L_{e_i})
    Vector sigma_R;  // Tr(R_{e_i})
};

/// On Leibniz points also checks sigma_R(mu(e_i, e_j)) = 0 for all basis
/// pairs and throws InternalInconsistency if it fails.
CharacterPair modular_characters(const MulTable& x);

bool is_right_unimodular(const CharacterPair& c);
bool is_left_unimodular(const CharacterPair& c);

/// Span of the squares mu(a, a), generated by mu(e_i + e_j, e_i + e_j), i <= j.
/// The basis is a subset of those generators. On Leibniz points the
/// containment in right_annihilator is checked (InternalInconsistency).
std::vector<Vector> leibniz_kernel(const MulTable& x);

/// {v : R_v = 0}.
std::vector<Vector> right_annihilator(const MulTable& x);

/// Center {v : mu(a, v) = mu(v, a) for all a}.
std::vector<Vector> center(const MulTable& x);

struct OperatorIdentityResult {
    bool ok = true;
    /// First basis pair (a, b) where an identity fails, and which one.
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
    std::string failed_identity;
};

/// R_{mu(a,b)} = -[R_a, R_b] and [R_b, L_a] = L_{mu(a,b)} on all basis pairs.
OperatorIdentityResult operator_identities_check(const MulTable& x);

/// Gram of Tr(ad a ad b) with ad = L - R.
RationalMatrix adjoint_killing_gram(const MulTable& x);

}  // namespace algdef
