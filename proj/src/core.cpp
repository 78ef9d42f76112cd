#include "shiftfam/core.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace shiftfam {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::NotNumerical: return "NotNumerical";
        case ErrorKind::BaseNotMember: return "BaseNotMember";
        case ErrorKind::TooFewShifts: return "TooFewShifts";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::BelowThreshold: return "BelowThreshold";
        case ErrorKind::NotInP: return "NotInP";
        case ErrorKind::NotPseudoFrobenius: return "NotPseudoFrobenius";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::BaseNotNearlyGorenstein: return "BaseNotNearlyGorenstein";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::BadReducedBase: return "BadReducedBase";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max();

// Round-robin shortest paths over Z/modulus with one edge family per
// generator (Boecker-Liptak). After processing a generator the table holds
// the least element of each class representable with the generators seen so
// far. Unreachable classes keep kInf.
void relax_round_robin(std::vector<Int>& least, Int g) {
    const Int modulus = static_cast<Int>(least.size());
    const Int step = g % modulus;
    if (step == 0) return;
    const Int cycles = std::gcd(step, modulus);
    const Int cycle_len = modulus / cycles;
    for (Int p = 0; p < cycles; ++p) {
        Int start = p;
        for (Int q = p + cycles; q < modulus; q += cycles)
            if (least[q] < least[start]) start = q;
        Int cur = least[start];
        if (cur == kInf) continue;
        for (Int s = 1; s < cycle_len; ++s) {
            cur += g;
            Int& slot = least[cur % modulus];
            if (slot < cur)
                cur = slot;
            else
                slot = cur;
        }
    }
}

std::vector<Int> least_per_residue(Int modulus, const GeneratorTuple& gens) {
    // Every least element is below modulus * max(gens).
    (void)checked_mul(modulus, gens.back());
    std::vector<Int> least(static_cast<std::size_t>(modulus), kInf);
    least[0] = 0;
    for (Int g : gens) relax_round_robin(least, g);
    return least;
}

AperySet to_apery(Int base, std::vector<Int> least) {
    for (Int& v : least)
        if (v == kInf) v = AperySet::kUnreachable;
    return AperySet(base, std::move(least));
}

}  // namespace

GeneratorTuple normalize_generators(std::span<const Int> raw) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "generator list is empty");
    std::vector<Int> v(raw.begin(), raw.end());
    for (Int x : v)
        if (x <= 0)
            throw Error(ErrorKind::NonPositiveEntry, "generator " + std::to_string(x) + " is not positive");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return GeneratorTuple(std::move(v));
}

Int gcd_of(const GeneratorTuple& gens) {
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    return d;
}

GeneratorTuple minimal_generators(const GeneratorTuple& gens) {
    // g is redundant iff it is reachable from the strictly smaller kept
    // generators; the table tracks exactly that set.
    const Int base = gens.front();
    std::vector<Int> least(static_cast<std::size_t>(base), kInf);
    least[0] = 0;
    std::vector<Int> kept{base};
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const Int g = gens[i];
        if (least[g % base] <= g) continue;
        kept.push_back(g);
        relax_round_robin(least, g);
    }
    return normalize_generators(kept);
}

std::optional<Int> AperySet::in_class(Int residue) const {
    const Int v = least_[static_cast<std::size_t>(mod_floor(residue, base_))];
    if (v == kUnreachable) return std::nullopt;
    return v;
}

std::vector<Int> AperySet::elements() const {
    std::vector<Int> out;
    out.reserve(least_.size());
    for (Int v : least_)
        if (v != kUnreachable) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool AperySet::contains(Int x) const {
    if (x < 0) return false;
    const auto v = in_class(x);
    return v && *v == x;
}

NumericalSemigroup::NumericalSemigroup(GeneratorTuple gens, GeneratorTuple minimal, AperySet apery)
    : generators_(std::move(gens)), minimal_(std::move(minimal)), apery_(std::move(apery)) {
    const auto& table = apery_.table();
    frobenius_ = *std::max_element(table.begin(), table.end()) - multiplicity();
    pf_ = shiftfam::pseudo_frobenius(*this);
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return x >= apery_.table()[static_cast<std::size_t>(x % multiplicity())];
}

std::vector<bool> NumericalSemigroup::membership_table() const {
    std::vector<bool> table(static_cast<std::size_t>(frobenius_ + 2));
    for (Int x = 0; x <= frobenius_ + 1; ++x) table[static_cast<std::size_t>(x)] = contains(x);
    return table;
}

NumericalSemigroup build_semigroup(const GeneratorTuple& gens) {
    const Int d = gcd_of(gens);
    if (d != 1)
        throw Error(ErrorKind::NotNumerical,
                    "generators have gcd " + std::to_string(d) + ", not a numerical semigroup");
    GeneratorTuple minimal = minimal_generators(gens);
    const Int m = minimal.front();
    AperySet ap = to_apery(m, least_per_residue(m, minimal));
    return NumericalSemigroup(gens, std::move(minimal), std::move(ap));
}

NumericalSemigroup build_semigroup(std::span<const Int> raw) {
    return build_semigroup(normalize_generators(raw));
}

namespace {

GeneratorTuple divided(const GeneratorTuple& gens, Int d) {
    std::vector<Int> v;
    v.reserve(gens.size());
    for (Int g : gens) v.push_back(g / d);
    return normalize_generators(v);
}

}  // namespace

Submonoid::Submonoid(const GeneratorTuple& gens)
    : generators_(gens), d_(gcd_of(gens)), reduced_(build_semigroup(divided(gens, gcd_of(gens)))) {}

bool Submonoid::contains(Int x) const {
    return x >= 0 && x % d_ == 0 && reduced_.contains(x / d_);
}

AperySet apery_set(const NumericalSemigroup& h, Int base) {
    if (base <= 0 || !h.contains(base))
        throw Error(ErrorKind::BaseNotMember, std::to_string(base) + " is not a nonzero member");
    if (base == h.multiplicity()) return h.apery();
    return to_apery(base, least_per_residue(base, h.minimal_generators()));
}

AperySet apery_set(const Submonoid& s, Int base) {
    if (base <= 0 || !s.contains(base))
        throw Error(ErrorKind::BaseNotMember, std::to_string(base) + " is not a nonzero member");
    const Int d = s.gcd();
    if (base <= s.frobenius()) return to_apery(base, least_per_residue(base, s.generators()));

    const Int n = base / d;
    std::vector<Int> least(static_cast<std::size_t>(base), AperySet::kUnreachable);
    for (Int j = 0; j < n; ++j) {
        const Int dj = d * j;
        const Int i = s.contains(dj) ? dj : dj + base;
        least[static_cast<std::size_t>(dj)] = i;
    }
    return AperySet(base, std::move(least));
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h) {
    // w in Ap(H, m) is maximal under <=_H iff w + g leaves the Apery set for
    // every minimal generator g, i.e. w + g - m stays in H.
    const Int m = h.multiplicity();
    const auto& gens = h.minimal_generators();
    std::vector<Int> pf;
    for (Int w : h.apery().table()) {
        bool maximal = true;
        for (std::size_t c = 1; c < gens.size() && maximal; ++c)
            maximal = h.contains(w + gens[c] - m);
        if (maximal) pf.push_back(w - m);
    }
    std::sort(pf.begin(), pf.end());
    return pf;
}

std::optional<Int> min_fact_length(Int x, const GeneratorTuple& coins) {
    if (x < 0) return std::nullopt;
    return FactorizationLengths(coins, x).at(x);
}

std::optional<Int> min_fact_length_minimal(Int x, const GeneratorTuple& gens) {
    return min_fact_length(x, minimal_generators(gens));
}

FactorizationLengths::FactorizationLengths(const GeneratorTuple& coins, Int limit)
    : lengths_(static_cast<std::size_t>(std::max<Int>(limit, 0) + 1), -1) {
    lengths_[0] = 0;
    const Int top = static_cast<Int>(lengths_.size());
    for (Int x = 1; x < top; ++x) {
        Int best = -1;
        for (Int c : coins) {
            if (c > x) break;
            const Int prev = lengths_[static_cast<std::size_t>(x - c)];
            if (prev >= 0 && (best < 0 || prev + 1 < best)) best = prev + 1;
        }
        lengths_[static_cast<std::size_t>(x)] = best;
    }
}

std::optional<Int> FactorizationLengths::at(Int x) const {
    if (x < 0 || x > limit())
        throw Error(ErrorKind::InvariantViolation,
                    "factorization table queried at " + std::to_string(x) + " beyond limit " +
                        std::to_string(limit()));
    const Int v = lengths_[static_cast<std::size_t>(x)];
    if (v < 0) return std::nullopt;
    return v;
}

Int FactorizationLengths::require(Int x) const {
    const auto v = at(x);
    if (!v) throw Error(ErrorKind::InvariantViolation, std::to_string(x) + " has no factorization");
    return *v;
}

bool CanonicalIdeal::contains(Int x) const {
    if (x < 0) return false;
    if (x >= threshold) return true;
    return std::binary_search(finite_part.begin(), finite_part.end(), x);
}

CanonicalIdeal canonical_ideal(const NumericalSemigroup& h) {
    CanonicalIdeal k{{}, h.frobenius() + 1};
    for (Int x = 0; x <= h.frobenius(); ++x)
        if (!h.contains(h.frobenius() - x)) k.finite_part.push_back(x);
    return k;
}

std::optional<Int> trace_certificate(const NumericalSemigroup& h, Int x) {
    const auto& pf = h.pseudo_frobenius();
    for (Int star : pf) {
        const bool ok = std::all_of(pf.begin(), pf.end(), [&](Int f) { return h.contains(x + star - f); });
        if (ok) return star;
    }
    return std::nullopt;
}

TraceData trace(const NumericalSemigroup& h) {
    // Members above F(H) are certified by f* = F(H), so [0, F(H)] suffices.
    TraceData out;
    for (Int x = 0; x <= h.frobenius(); ++x) {
        if (!h.contains(x)) continue;
        if (auto star = trace_certificate(h, x))
            out.witnesses.push_back({x, *star});
        else
            out.holes.push_back(x);
    }
    out.residue = out.holes.size();
    return out;
}

NGCertificate ng_certificate(const NumericalSemigroup& h) {
    const auto& pf = h.pseudo_frobenius();
    NGCertificate cert;
    bool complete = true;
    for (Int gen : h.minimal_generators()) {
        std::vector<Int> cands;
        for (Int f : pf) {
            const bool ok = std::all_of(pf.begin(), pf.end(), [&](Int g) { return h.contains(gen + f - g); });
            if (ok) cands.push_back(f);
        }
        complete = complete && !cands.empty();
        cert.candidates.push_back(std::move(cands));
    }
    if (complete) {
        std::vector<Int> v;
        for (const auto& c : cert.candidates) v.push_back(c.front());
        cert.vector = std::move(v);
    }
    return cert;
}

bool is_almost_symmetric(const NumericalSemigroup& h) {
    const auto& pf = h.pseudo_frobenius();
    const std::size_t t = pf.size();
    for (std::size_t a = 1; a < t; ++a)
        if (pf[a - 1] + pf[t - a - 1] != h.frobenius()) return false;
    return true;
}

bool is_symmetric(const NumericalSemigroup& h) { return h.type() == 1; }

bool has_canonical_reduction(const NumericalSemigroup& h) {
    const auto& pf = h.pseudo_frobenius();
    return std::all_of(pf.begin(), pf.end(), [&](Int f) {
        return h.contains(h.multiplicity() + h.frobenius() - f);
    });
}

std::size_t reduced_type(const NumericalSemigroup& h) {
    const Int lo = h.frobenius() - h.multiplicity();
    const auto& pf = h.pseudo_frobenius();
    return static_cast<std::size_t>(
        std::count_if(pf.begin(), pf.end(), [&](Int f) { return f >= lo && f <= h.frobenius(); }));
}

}  // namespace shiftfam
