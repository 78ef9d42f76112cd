#include "shiftfam/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace shiftfam::oracle {

namespace {

std::string str(Int x) { return std::to_string(x); }

std::string spec_label(const ShiftSpec& spec) {
    std::string out = "(";
    for (std::size_t c = 0; c < spec.r.size(); ++c) out += (c ? "," : "") + str(spec.r[c]);
    return out + ")";
}

// Dense sieve of a submonoid (any gcd) on [0, limit].
std::vector<std::uint8_t> sieve(std::span<const Int> gens, Int limit) {
    std::vector<std::uint8_t> member(static_cast<std::size_t>(limit + 1), 0);
    member[0] = 1;
    for (Int x = 1; x <= limit; ++x)
        for (Int g : gens)
            if (g <= x && member[static_cast<std::size_t>(x - g)]) {
                member[static_cast<std::size_t>(x)] = 1;
                break;
            }
    return member;
}

}  // namespace

BruteSemigroup::BruteSemigroup(std::span<const Int> gens, Int cap) : gens_(gens.begin(), gens.end()) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.empty() || gens_.front() <= 0) throw Error(ErrorKind::NonPositiveEntry, "generators must be positive");
    Int d = 0;
    for (Int g : gens_) d = std::gcd(d, g);
    if (d != 1) throw Error(ErrorKind::NotNumerical, "generators have gcd " + str(d));

    // Once min(gens) consecutive members appear, everything above is a member.
    const Int smallest = gens_.front();
    member_.push_back(1);
    Int run = 1;
    Int last_gap = -1;
    for (Int x = 1; run < smallest; ++x) {
        if (x > cap + smallest)
            throw Error(ErrorKind::CapExceeded, "Frobenius number exceeds cap " + str(cap));
        std::uint8_t in = 0;
        for (Int g : gens_) {
            if (g > x) break;
            if (member_[static_cast<std::size_t>(x - g)]) {
                in = 1;
                break;
            }
        }
        member_.push_back(in);
        if (in) {
            ++run;
        } else {
            run = 0;
            last_gap = x;
        }
    }
    frobenius_ = last_gap;
    if (frobenius_ > cap) throw Error(ErrorKind::CapExceeded, "Frobenius number exceeds cap " + str(cap));
}

bool BruteSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
}

std::vector<Int> brute_pf(const BruteSemigroup& h) {
    std::vector<Int> pf;
    for (Int x = -1; x <= h.frobenius(); ++x) {
        if (h.contains(x)) continue;
        const auto& gens = h.generators();
        if (std::all_of(gens.begin(), gens.end(), [&](Int g) { return h.contains(x + g); })) pf.push_back(x);
    }
    return pf;
}

std::vector<Int> brute_pf(std::span<const Int> gens, Int cap) { return brute_pf(BruteSemigroup(gens, cap)); }

TraceData brute_trace(std::span<const Int> gens, Int cap) {
    const BruteSemigroup h(gens, cap);
    const Int f = h.frobenius();
    TraceData out;
    if (f < 0) return out;

    // K(H) on [0, F]; every x > F is in K(H) as well.
    std::vector<Int> k_finite;
    for (Int x = 0; x <= f; ++x)
        if (!h.contains(f - x)) k_finite.push_back(x);

    // y in H - K(H) iff y + x in H for every x in K(H). x > F gives y + x > F
    // whenever y >= 0, and y < 0 fails at x = 0, so only x <= F matters.
    std::vector<Int> h_minus_k;
    for (Int y = -f; y <= 2 * f; ++y) {
        const bool ok = std::all_of(k_finite.begin(), k_finite.end(), [&](Int x) { return h.contains(x + y); });
        if (ok) h_minus_k.push_back(y);
    }

    std::vector<std::uint8_t> in_trace(static_cast<std::size_t>(f + 1), 0);
    for (Int x : k_finite)
        for (Int y : h_minus_k) {
            const Int s = x + y;
            if (s > f) break;
            if (s >= 0) in_trace[static_cast<std::size_t>(s)] = 1;
        }

    for (Int x = 0; x <= f; ++x) {
        if (!h.contains(x)) continue;
        if (!in_trace[static_cast<std::size_t>(x)]) out.holes.push_back(x);
    }
    out.residue = out.holes.size();
    return out;
}

std::vector<Int> brute_min_lengths(std::span<const Int> coins, Int limit) {
    // Breadth-first search from 0: the BFS depth is the coin count.
    std::vector<Int> dist(static_cast<std::size_t>(limit + 1), -1);
    dist[0] = 0;
    std::deque<Int> queue{0};
    while (!queue.empty()) {
        const Int x = queue.front();
        queue.pop_front();
        for (Int c : coins) {
            const Int y = x + c;
            if (y > limit || dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::vector<DiffReport> brute_shift_check(const ShiftSpec& spec, Int n, Int lambda_max,
                                          const ShiftCheckOptions& options) {
    const PProfile base = p_profile(spec, n);
    const Int rk = spec.rk();
    const Int top_n = checked_add(n, checked_mul(lambda_max, rk));
    const Int limit = checked_add(checked_mul(spec.d, top_n), std::abs(spec.fs) + 2 * rk);
    const auto in_s = sieve(spec.r.values(), limit);
    const auto lengths = brute_min_lengths(spec.r.values(), limit);

    std::vector<DiffReport> reports;
    auto record = [&](std::string subject, std::string instance, std::optional<Int> expected, std::optional<Int> actual) {
        const bool match = expected.has_value() && expected == actual;
        reports.push_back({std::move(subject), std::move(instance), expected, actual, match});
    };

    for (Int lambda = 0; lambda <= lambda_max; ++lambda) {
        const Int nl = n + lambda * rk;
        std::vector<Int> gens{nl};
        for (Int r : spec.r) gens.push_back(nl + r);
        const BruteSemigroup h(gens, options.cap);
        const std::vector<Int> pf = brute_pf(h);
        const std::string where = "spec=" + spec_label(spec) + " n=" + str(n) + " lambda=" + str(lambda);

        // PF elements of M_nl are distinct modulo nl; index them by class.
        std::map<Int, Int> pf_by_class;
        std::map<Int, Int> p_by_class;
        for (Int g : pf) {
            const Int c = mod_floor(g, nl);
            pf_by_class[c] = g;
            Int i = c;
            while (i <= limit && !in_s[static_cast<std::size_t>(i)]) i += nl;
            if (i > limit) throw Error(ErrorKind::InvariantViolation, "Apery representative beyond sieve limit");
            p_by_class[c] = i;
        }
        auto lookup = [](const std::map<Int, Int>& m, Int c) -> std::optional<Int> {
            const auto it = m.find(c);
            if (it == m.end()) return std::nullopt;
            return it->second;
        };

        std::set<Int> images;
        for (const auto& e : base.pf) {
            const std::string inst = where + " i=" + str(e.i) + " f=" + str(e.f);

            const Int predicted_i = options.use_wrong_bijection && lambda == 1 ? psi_wrong(spec, n, e.i)
                                                                                : psi_lambda(spec, n, e.i, lambda);
            const auto expected_i = lookup(p_by_class, mod_floor(predicted_i, nl));
            record("psi", inst, expected_i, predicted_i);

            const Int image = phi_lambda(spec, n, e.f, lambda);
            images.insert(image);
            record("phi_lambda", inst, lookup(pf_by_class, mod_floor(image, nl)), image);

            std::optional<Int> expected_m;
            if (expected_i) expected_m = lengths[static_cast<std::size_t>(*expected_i)];
            record("m_shift", inst, expected_m, m_shift(spec, n, e.i, lambda));
        }

        const Int found = static_cast<Int>(std::count_if(images.begin(), images.end(), [&](Int v) {
            return std::binary_search(pf.begin(), pf.end(), v);
        }));
        const bool set_equal = found == static_cast<Int>(pf.size()) && images.size() == pf.size();
        reports.push_back({"pf_set", where, static_cast<Int>(pf.size()), found, set_equal});

        record("frobenius", where, h.frobenius(), frobenius_closed_form(spec, n, lambda, Mode::Observed).value);

        const Int lo = h.frobenius() - nl;
        const Int rtype = static_cast<Int>(
            std::count_if(pf.begin(), pf.end(), [&](Int g) { return g >= lo && g <= h.frobenius(); }));
        record("reduced_type", where, rtype,
               static_cast<Int>(reduced_type_formula(spec, nl, Mode::Observed).value));
    }
    return reports;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

Int Xorshift64Star::uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(next() % span);
}

ShiftSpec random_family(std::uint64_t seed, Int r_k_max, std::pair<Int, Int> k_range) {
    if (r_k_max < 2) throw Error(ErrorKind::TooFewShifts, "r_k_max must be at least 2");
    auto [k_lo, k_hi] = k_range;
    k_lo = std::max<Int>(k_lo, 2);
    k_hi = std::min(k_hi, r_k_max);
    if (k_hi < k_lo) throw Error(ErrorKind::TooFewShifts, "empty k range");
    Xorshift64Star rng(seed);
    const Int k = rng.uniform(k_lo, k_hi);
    std::set<Int> shifts;
    while (static_cast<Int>(shifts.size()) < k) shifts.insert(rng.uniform(1, r_k_max));
    const std::vector<Int> r(shifts.begin(), shifts.end());
    return make_spec(r);
}

std::vector<Int> valid_members_above(const ShiftSpec& spec, Int threshold, std::size_t count) {
    std::vector<Int> out;
    for (Int n = threshold + 1; out.size() < count; ++n)
        if (std::gcd(n, spec.d) == 1) out.push_back(n);
    return out;
}

}  // namespace shiftfam::oracle
