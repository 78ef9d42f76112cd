#pragma once

// Brute-force reference implementations. Nothing here goes through Apery
// sets, round-robin tables or closed forms: membership comes from a dense
// sieve and everything else from the definitions.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftfam/core.hpp"
#include "shiftfam/family.hpp"

namespace shiftfam::oracle {

inline constexpr Int kDefaultCap = 100'000'000;

/// Dense sieve of <gens> up to F + max(gens).
class BruteSemigroup {
public:
    /// Throws NotNumerical, CapExceeded when F exceeds `cap`.
    BruteSemigroup(std::span<const Int> gens, Int cap = kDefaultCap);

    Int frobenius() const noexcept { return frobenius_; }
    bool contains(Int x) const;
    const std::vector<Int>& generators() const noexcept { return gens_; }

private:
    std::vector<Int> gens_;
    std::vector<std::uint8_t> member_;
    Int frobenius_;
};

/// PF by definition: x not in H with x + g in H for every generator g.
std::vector<Int> brute_pf(std::span<const Int> gens, Int cap = kDefaultCap);
std::vector<Int> brute_pf(const BruteSemigroup& h);

/// tr(H) = K(H) + (H - K(H)) formed as a sumset. (H - K(H)) is enumerated on
/// [-F, 2F]: holes lie in [0, F], K(H) is contained in [0, inf), and every
/// y > F belongs to H - K(H) but only produces sums above F.
TraceData brute_trace(std::span<const Int> gens, Int cap = kDefaultCap);

/// Minimum coin count on [0, limit] by breadth-first search (-1 = unreachable).
std::vector<Int> brute_min_lengths(std::span<const Int> coins, Int limit);

struct DiffReport {
    std::string subject;
    std::string instance;
    std::optional<Int> expected;  // nullopt: the oracle finds no such value
    std::optional<Int> actual;
    bool match;
};

struct ShiftCheckOptions {
    Int cap = kDefaultCap;
    /// Replace psi by psi_wrong at lambda = 1.
    bool use_wrong_bijection = false;
};

/// Differential harness: closed forms against direct recomputation for every
/// lambda in [0, lambda_max]. Covers psi, phi_lambda, the PF set, m_shift,
/// the Frobenius closed form and the reduced-type formula.
std::vector<DiffReport> brute_shift_check(const ShiftSpec& spec, Int n, Int lambda_max,
                                          const ShiftCheckOptions& options = {});

/// xorshift64* seeded through splitmix64.
///   splitmix64: z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
///               z = (z ^ z>>27) * 0x94D049BB133111EB; z ^= z>>31
///   xorshift64*: x ^= x>>12; x ^= x<<25; x ^= x>>27; return x * 0x2545F4914F6CDD1D
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform-ish in [lo, hi] by modulo reduction.
    Int uniform(Int lo, Int hi);

private:
    std::uint64_t state_;
};

/// Reproducible spec with k in [k_lo, k_hi] distinct shifts drawn from [1, r_k_max].
ShiftSpec random_family(std::uint64_t seed, Int r_k_max, std::pair<Int, Int> k_range = {2, 4});

/// Smallest n > threshold with gcd(n, d) = 1, then the next `count - 1` such values.
std::vector<Int> valid_members_above(const ShiftSpec& spec, Int threshold, std::size_t count);

}  // namespace shiftfam::oracle
