#pragma once

// Shifted families M_n = <n, n + r_1, ..., n + r_k>: the Apery structure of
// M_n over Ap(S, dn), the representative sets P_n = P_n' u P_n'', the maps
// psi_n / phi_n and their lambda-iterates, the periodicity bound N and the
// transported properties (nearly Gorenstein, almost symmetric, canonical
// reduction, reduced type, residue).
//
// Thresholds: everything built on P_n needs n > N0. Statements proved only
// for n >= r_k^4 are accepted for smaller n in Mode::Observed, with a
// warning attached to the result; Mode::Strict rejects them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftfam/core.hpp"

namespace shiftfam {

enum class Mode { Strict, Observed };

struct ShiftSpec {
    GeneratorTuple r;  // r_1 < ... < r_k
    Submonoid s;       // S = <r_1, ..., r_k>
    Int d;             // gcd(r)
    Int fs;            // F(S), a multiple of d; -d when S = dN
    Int n0;            // max{r_k^2, r_k^2 + F(S) r_k}

    Int k() const noexcept { return static_cast<Int>(r.size()); }
    Int rk() const { return r.back(); }
    /// F(S) / d, computed without division.
    Int fs_reduced() const { return s.reduced().frobenius(); }
    /// r_k^4 as a checked product.
    Int rk4() const;
};

/// Throws TooFewShifts for k < 2.
ShiftSpec make_spec(const GeneratorTuple& r);
ShiftSpec make_spec(std::span<const Int> r);

/// M_n. Throws NotCoprime when gcd(n, d) > 1.
NumericalSemigroup member_semigroup(const ShiftSpec& spec, Int n);

struct AperyEntry {
    Int i;        // element of Ap(S, dn)
    Int m;        // m(i) over the listed shifts
    Int element;  // i + m(i) n, an element of Ap(M_n, n)
};

/// Ap(M_n, n) as {i + m(i) n | i in Ap(S, dn)}, ascending in i. Needs n > r_k^2.
std::vector<AperyEntry> apery_structure(const ShiftSpec& spec, Int n);

enum class PClass { Prime, Double };

std::string_view to_string(PClass cls);

struct PEntry {
    Int i;
    Int m;

    friend bool operator==(const PEntry&, const PEntry&) = default;
};

struct PFEntry {
    Int f;
    PClass cls;
    Int i;
    Int m;
};

struct PProfile {
    Int n;
    std::vector<PEntry> p_prime;   // i < dn - r_k, ascending
    std::vector<PEntry> p_double;  // i >= dn - r_k, ascending
    std::vector<PFEntry> pf;       // ascending in f

    /// P_n = P_n' u P_n'' as a sorted list of representatives.
    std::vector<Int> representatives() const;
    const PFEntry* find_pf(Int f) const;
    const PFEntry* find_representative(Int i) const;
};

/// Needs n > N0 and gcd(n, d) = 1.
PProfile p_profile(const ShiftSpec& spec, Int n);

/// Corrected bijection P_n -> P_{n + r_k}. Throws NotInP.
Int psi(const ShiftSpec& spec, Int n, Int i);
/// psi iterated lambda times: i on P_n', i + lambda d r_k on P_n''.
Int psi_lambda(const ShiftSpec& spec, Int n, Int i, Int lambda);
/// The uncorrected map (i if i <= dn, else i + r_k); kept to exhibit
/// where it diverges from psi.
Int psi_wrong(const ShiftSpec& spec, Int n, Int i);

/// phi_n^lambda(f) = constant + linear * lambda + quadratic * lambda^2.
struct ClosedForm {
    Int base_n;
    Int base_f;
    PClass cls;
    Int i;
    Int m;
    Int constant;
    Int linear;
    Int quadratic;

    /// Checked evaluation; throws Overflow.
    Int evaluate(Int lambda) const;
};

ClosedForm closed_form(const ShiftSpec& spec, const PProfile& profile, const PFEntry& entry);
std::vector<ClosedForm> closed_forms(const ShiftSpec& spec, Int n);

/// PF(M_n) -> PF(M_{n + r_k}). Throws NotPseudoFrobenius.
Int phi(const ShiftSpec& spec, Int n, Int f);
Int phi_lambda(const ShiftSpec& spec, Int n, Int f, Int lambda);

/// m(psi_n^lambda(i)). Throws NotInP.
Int m_shift(const ShiftSpec& spec, Int n, Int i, Int lambda);

struct BoundN {
    Int n_star;  // bootstrap n the components were read from
    Int n1;
    Int n2;
    Int n3;
    Int n;
    bool below_rk4;  // N < r_k^4
};

/// Components read off P_{n_star}. Needs n_star > N0, gcd(n_star, d) = 1.
/// N depends only on the class of n_star modulo r_k.
BoundN bound_n_from(const ShiftSpec& spec, Int n_star);
/// Bootstrap at the smallest n > N0 coprime to d.
BoundN bound_n(const ShiftSpec& spec);
/// Bootstrap at the smallest n' > N0 with n' = n (mod r_k); this is the N
/// that governs M_{n + lambda r_k}.
BoundN bound_n_for(const ShiftSpec& spec, Int n);

struct FrobeniusClosedForm {
    Int value;
    Int base_frobenius;
    Int i;
    bool representative_double;
    std::vector<std::string> warnings;
};

/// F(M_{n + lambda r_k}) from F(M_n). Needs n > N0; n < r_k^4 requires Observed.
FrobeniusClosedForm frobenius_closed_form(const ShiftSpec& spec, Int n, Int lambda, Mode mode = Mode::Strict);

struct OrderCheck {
    bool ordered;
    std::optional<std::string> violation;
    std::vector<std::string> warnings;
};

/// Sorted PF(M_n) splits into a P'-block followed by a P''-block, and every
/// phi_n^lambda, lambda <= lambda_max, is strictly increasing on it.
OrderCheck order_preservation_check(const ShiftSpec& spec, Int n, Int lambda_max, Mode mode = Mode::Strict);

struct NGTransport {
    std::vector<Int> base_vector;
    std::vector<Int> vector;  // for M_{n + lambda r_k}
    bool verified;            // every coordinate checked on the shifted member
    bool theorem_backed;      // n > N
    std::vector<std::string> warnings;
};

/// Throws BaseNotNearlyGorenstein, BelowThreshold (n <= N in Strict).
NGTransport ng_transport(const ShiftSpec& spec, Int n, Int lambda, Mode mode = Mode::Strict);

/// True when M_n and M_{n + lambda r_k} are both almost symmetric. A base that
/// is not almost symmetric yields false with no claim. Throws
/// InvariantViolation if a theorem-backed transport fails.
bool almost_symmetric_transport(const ShiftSpec& spec, Int n, Int lambda, Mode mode = Mode::Strict);

/// True iff M_n is not (almost symmetric of even type). Needs n >= r_k^4 in Strict.
bool even_type_exclusion(const ShiftSpec& spec, Int n, Mode mode = Mode::Strict);

struct ReducedTypeFormula {
    std::size_t value;
    Int reduced_base;  // p = n - mu r_k, the smallest such p > N0
    Int frobenius_representative;
    std::vector<std::string> warnings;
};

/// Reduced type of M_n read from P_p'' at the reduced base p, by default the
/// smallest p > N0 with p = n (mod r_k).
ReducedTypeFormula reduced_type_formula(const ShiftSpec& spec, Int n, Mode mode = Mode::Strict);
/// Same at a caller-chosen base: N0 < p <= n, p = n (mod r_k). Throws
/// BadReducedBase otherwise.
ReducedTypeFormula reduced_type_formula(const ShiftSpec& spec, Int n, Int p, Mode mode = Mode::Strict);

struct ResidueRow {
    Int lambda;
    Int n;
    std::size_t residue;
};

/// Least-squares line through the scanned residues. Empirical only.
struct LinearFit {
    double slope;
    double intercept;
    double max_deviation;
};

struct ResidueScan {
    std::vector<ResidueRow> rows;
    LinearFit fit;
};

ResidueScan residue_scan(const ShiftSpec& spec, Int n, Int lambda_lo, Int lambda_hi);

struct Flag {
    bool value;
    bool theorem_backed;
};

struct LambdaRow {
    Int lambda;
    Int n;
    std::vector<Int> pf_closed_form;
    std::vector<Int> pf_direct;
    Int frobenius;
    bool match;
};

struct FamilyFlags {
    Flag nearly_gorenstein;
    Flag almost_symmetric;
    Flag canonical_reduction;
    Flag even_type_excluded;
    Flag order_preserved;
};

struct FamilyReport {
    ShiftSpec spec;
    Int n;
    std::vector<Int> pf;
    std::optional<BoundN> bound;
    std::optional<PProfile> profile;
    std::vector<ClosedForm> closed_forms;
    std::vector<LambdaRow> rows;
    FamilyFlags flags;
    std::vector<std::string> warnings;
};

FamilyReport family_report(const ShiftSpec& spec, Int n, Int lambda_max, Mode mode = Mode::Strict);

}  // namespace shiftfam
