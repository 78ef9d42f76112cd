#pragma once

// Single-semigroup invariants: membership, Apery sets, pseudo-Frobenius
// numbers, factorization lengths, canonical and trace ideals, NG-vectors and
// the almost-symmetric / canonical-reduction / reduced-type predicates.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shiftfam/checked.hpp"

namespace shiftfam {

/// Ascending, duplicate-free list of positive integers.
class GeneratorTuple {
public:
    GeneratorTuple() = default;

    const std::vector<Int>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    Int operator[](std::size_t i) const { return values_[i]; }
    Int front() const { return values_.front(); }
    Int back() const { return values_.back(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;

private:
    explicit GeneratorTuple(std::vector<Int> v) : values_(std::move(v)) {}
    std::vector<Int> values_;

    friend GeneratorTuple normalize_generators(std::span<const Int> raw);
};

/// Sorts and deduplicates. Throws EmptyInput / NonPositiveEntry.
GeneratorTuple normalize_generators(std::span<const Int> raw);

/// Drops every generator that is an N-combination of the others.
GeneratorTuple minimal_generators(const GeneratorTuple& gens);

Int gcd_of(const GeneratorTuple& gens);

/// Least member in each residue class modulo `base`.
class AperySet {
public:
    static constexpr Int kUnreachable = -1;

    AperySet(Int base, std::vector<Int> least) : base_(base), least_(std::move(least)) {}

    Int base() const noexcept { return base_; }
    /// Least member congruent to `residue`, or nullopt when the class holds no member.
    std::optional<Int> in_class(Int residue) const;
    /// Raw table indexed by residue; kUnreachable marks empty classes.
    const std::vector<Int>& table() const noexcept { return least_; }
    /// All elements, ascending.
    std::vector<Int> elements() const;
    bool contains(Int x) const;

private:
    Int base_;
    std::vector<Int> least_;
};

class NumericalSemigroup {
public:
    const GeneratorTuple& generators() const noexcept { return generators_; }
    const GeneratorTuple& minimal_generators() const noexcept { return minimal_; }
    Int multiplicity() const noexcept { return minimal_.front(); }
    Int frobenius() const noexcept { return frobenius_; }
    /// Ascending pseudo-Frobenius numbers.
    const std::vector<Int>& pseudo_frobenius() const noexcept { return pf_; }
    std::size_t type() const noexcept { return pf_.size(); }
    std::size_t embedding_dimension() const noexcept { return minimal_.size(); }

    bool contains(Int x) const;

    /// Apery set with respect to the multiplicity.
    const AperySet& apery() const noexcept { return apery_; }

    /// Dense membership over [0, F(H) + 1]; every larger integer is a member.
    std::vector<bool> membership_table() const;

private:
    friend NumericalSemigroup build_semigroup(const GeneratorTuple& gens);
    NumericalSemigroup(GeneratorTuple gens, GeneratorTuple minimal, AperySet apery);

    GeneratorTuple generators_;
    GeneratorTuple minimal_;
    AperySet apery_;
    Int frobenius_;
    std::vector<Int> pf_;
};

/// Throws NotNumerical when gcd(gens) > 1.
NumericalSemigroup build_semigroup(const GeneratorTuple& gens);
NumericalSemigroup build_semigroup(std::span<const Int> raw);

/// Submonoid of N with arbitrary gcd d, stored as d times a numerical semigroup.
class Submonoid {
public:
    explicit Submonoid(const GeneratorTuple& gens);

    const GeneratorTuple& generators() const noexcept { return generators_; }
    Int gcd() const noexcept { return d_; }
    const NumericalSemigroup& reduced() const noexcept { return reduced_; }
    /// d * F(reduced); equals -d when the reduced semigroup is N.
    Int frobenius() const noexcept { return d_ * reduced_.frobenius(); }
    bool contains(Int x) const;

private:
    GeneratorTuple generators_;
    Int d_;
    NumericalSemigroup reduced_;
};

/// Apery set of H with respect to a nonzero member. Throws BaseNotMember.
AperySet apery_set(const NumericalSemigroup& h, Int base);
/// When base = d*n exceeds F(S) the representatives are i_j = dj (if dj is in S)
/// or dj + dn, j = 0..n-1; otherwise a generic shortest-path computation is
/// used. Throws BaseNotMember.
AperySet apery_set(const Submonoid& s, Int base);

/// PF(H) recomputed from the maximal elements of Ap(H, multiplicity).
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h);

/// Minimum number of coins summing to x, or nullopt if x is not representable.
/// The coins are used as listed, even when some are redundant as generators.
std::optional<Int> min_fact_length(Int x, const GeneratorTuple& coins);

/// Same query against the minimal generators of the generated monoid.
std::optional<Int> min_fact_length_minimal(Int x, const GeneratorTuple& gens);

/// m(x) for every x in [0, limit]; -1 marks non-representable values.
class FactorizationLengths {
public:
    FactorizationLengths(const GeneratorTuple& coins, Int limit);

    Int limit() const noexcept { return static_cast<Int>(lengths_.size()) - 1; }
    std::optional<Int> at(Int x) const;
    /// Like at(), throws InvariantViolation on a non-member or out-of-range x.
    Int require(Int x) const;

private:
    std::vector<Int> lengths_;
};

/// K(H) = {x >= 0 : F(H) - x not in H}: an explicit finite part plus every
/// integer >= threshold.
struct CanonicalIdeal {
    std::vector<Int> finite_part;
    Int threshold;

    bool contains(Int x) const;
};

CanonicalIdeal canonical_ideal(const NumericalSemigroup& h);

struct TraceWitness {
    Int element;
    Int certificate;  // f* in PF(H)
};

struct TraceData {
    std::vector<Int> holes;  // members of H outside tr(H), ascending
    std::size_t residue = 0;
    std::vector<TraceWitness> witnesses;  // members of [0, F(H)] inside tr(H)
};

/// Trace membership test for one element: returns the least certifying f*.
std::optional<Int> trace_certificate(const NumericalSemigroup& h, Int x);
TraceData trace(const NumericalSemigroup& h);

struct NGCertificate {
    /// candidates[c] lists f in PF(H) with h_c + f - g in H for every g in PF(H),
    /// h_c the c-th minimal generator.
    std::vector<std::vector<Int>> candidates;
    std::optional<std::vector<Int>> vector;

    bool nearly_gorenstein() const noexcept { return vector.has_value(); }
};

NGCertificate ng_certificate(const NumericalSemigroup& h);

/// Nari: f_a + f_{t-a} = F(H) for a = 1..t-1.
bool is_almost_symmetric(const NumericalSemigroup& h);
bool is_symmetric(const NumericalSemigroup& h);

/// multiplicity + F(H) - f in H for every f in PF(H).
bool has_canonical_reduction(const NumericalSemigroup& h);

/// Number of pseudo-Frobenius numbers in [F(H) - multiplicity, F(H)].
std::size_t reduced_type(const NumericalSemigroup& h);

}  // namespace shiftfam
