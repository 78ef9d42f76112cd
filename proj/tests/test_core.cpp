#include <doctest.h>

#include <limits>
#include <numeric>
#include <vector>

#include "reference.hpp"
#include "shiftfam/core.hpp"
#include "shiftfam/oracle.hpp"

using namespace shiftfam;
using V = std::vector<Int>;

namespace {

GeneratorTuple tuple(V v) { return normalize_generators(v); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvariantViolation;
}

// 120 seeded numerical semigroups with generators in [3, 40].
std::vector<V> sample_semigroups() {
    std::vector<V> out;
    oracle::Xorshift64Star rng(2024);
    while (out.size() < 120) {
        const Int k = rng.uniform(2, 5);
        V g;
        for (Int c = 0; c < k; ++c) g.push_back(rng.uniform(3, 40));
        Int d = 0;
        for (Int x : g) d = std::gcd(d, x);
        if (d == 1) out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("normalize_generators sorts, dedups and validates") {
    CHECK(tuple({7, 2, 7}).values() == V{2, 7});
    CHECK(tuple({2, 6, 7}).values() == V{2, 6, 7});
    CHECK(tuple({1}).values() == V{1});
    CHECK(kind_of([] { tuple({}); }) == ErrorKind::EmptyInput);
    CHECK(kind_of([] { tuple({3, 0}); }) == ErrorKind::NonPositiveEntry);
    CHECK(kind_of([] { tuple({-2, 5}); }) == ErrorKind::NonPositiveEntry);
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(tuple({2, 6, 7})).values() == V{2, 7});
    CHECK(minimal_generators(tuple({3, 4, 6})).values() == V{3, 4});
    CHECK(minimal_generators(tuple({1})).values() == V{1});
    CHECK(minimal_generators(tuple({5, 3, 8, 9, 10})).values() == V{3, 5});
}

TEST_CASE("Frobenius numbers") {
    CHECK(build_semigroup(V{2, 7}).frobenius() == 5);
    CHECK(build_semigroup(V{4, 6, 7}).frobenius() == 9);
    CHECK(Submonoid(tuple({8, 12, 14})).frobenius() == 18);
    CHECK(Submonoid(tuple({8, 12, 14})).gcd() == 2);
    CHECK(build_semigroup(V{1}).frobenius() == -1);
    CHECK(build_semigroup(V{1, 5}).frobenius() == -1);
    CHECK(kind_of([] { build_semigroup(V{4, 6}); }) == ErrorKind::NotNumerical);
}

TEST_CASE("N: membership and Apery set") {
    const auto h = build_semigroup(V{1});
    CHECK(h.contains(0));
    CHECK(h.contains(17));
    CHECK_FALSE(h.contains(-1));
    CHECK(h.membership_table() == std::vector<bool>{true});
    CHECK(h.pseudo_frobenius() == V{-1});
    CHECK(h.type() == 1);
    CHECK(apery_set(h, 6).elements() == V{0, 1, 2, 3, 4, 5});
    CHECK(canonical_ideal(h).contains(0));
    CHECK(trace(h).residue == 0);
}

TEST_CASE("Apery sets of the shift submonoid") {
    const auto a = apery_set(Submonoid(tuple({2, 7})), 88);
    for (Int i : {17, 85, 89, 93}) CHECK(a.contains(i));
    const auto b = apery_set(Submonoid(tuple({8, 12, 14})), 898);
    for (Int i : {884, 900, 916}) CHECK(b.contains(i));
    CHECK(b.in_class(1) == std::nullopt);  // odd classes are empty when d = 2
}

TEST_CASE("pseudo-Frobenius numbers") {
    CHECK(build_semigroup(V{88, 90, 94, 95}).pseudo_frobenius() == V{281, 1141, 1145, 1237});
    CHECK(build_semigroup(V{40, 42, 43, 45}).pseudo_frobenius() == V{359, 361});
    CHECK(build_semigroup(V{2, 3}).pseudo_frobenius() == V{1});
    CHECK(build_semigroup(V{449, 457, 461, 463}).pseudo_frobenius() == V{29171, 29636, 30101});
    CHECK(build_semigroup(V{200, 202, 207, 211}).pseudo_frobenius() == V{819, 1012, 3791, 3805, 3995, 3999, 4003});
}

TEST_CASE("minimum factorization length over the raw coins") {
    CHECK(min_fact_length(19, tuple({2, 7, 11})) == 5);
    CHECK(min_fact_length(12, tuple({3, 4, 6})) == 2);
    CHECK(min_fact_length_minimal(12, tuple({3, 4, 6})) == 3);
    CHECK(min_fact_length(0, tuple({5, 9})) == 0);
    CHECK(min_fact_length(1, tuple({2, 7})) == std::nullopt);
    CHECK(min_fact_length(14634, tuple({2, 7, 11})) == ref::min_length(14634, {2, 7, 11}));
    CHECK(min_fact_length(912, tuple({8, 12, 14})) == 66);
    CHECK(kind_of([] { FactorizationLengths(tuple({2, 7}), 10).require(1); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("canonical ideal") {
    const auto k23 = canonical_ideal(build_semigroup(V{2, 3}));
    const auto h23 = build_semigroup(V{2, 3});
    for (Int x = 0; x <= 10; ++x) CHECK(k23.contains(x) == h23.contains(x));

    const auto h = build_semigroup(V{40, 42, 43, 45});
    const auto k = canonical_ideal(h);
    CHECK(k.contains(0));
    CHECK(k.contains(2));
    CHECK_FALSE(k.contains(1));
}

TEST_CASE("trace and residue") {
    const auto m63 = trace(build_semigroup(V{63, 65, 66, 70}));
    CHECK(m63.residue == 9);
    V expected;
    for (Int j = 0; j <= 8; ++j) expected.push_back(70 * j);
    CHECK(m63.holes == expected);
    CHECK(trace(build_semigroup(V{46, 48, 52, 57})).residue == 8);
    CHECK(trace(build_semigroup(V{2, 3})).holes.empty());
}

TEST_CASE("nearly Gorenstein certificates") {
    const auto c = ng_certificate(build_semigroup(V{40, 42, 43, 45}));
    REQUIRE(c.vector);
    CHECK(*c.vector == V{361, 359, 361, 359});
    CHECK_FALSE(ng_certificate(build_semigroup(V{26, 28, 29, 30})).nearly_gorenstein());
    CHECK(*ng_certificate(build_semigroup(V{2, 3})).vector == V{1, 1});
}

TEST_CASE("almost symmetric, canonical reduction, reduced type") {
    CHECK(is_almost_symmetric(build_semigroup(V{10, 11, 13, 14})));
    CHECK(build_semigroup(V{10, 11, 13, 14}).type() == 3);
    CHECK(is_almost_symmetric(build_semigroup(V{2, 3})));
    CHECK_FALSE(is_almost_symmetric(build_semigroup(V{26, 28, 29, 30})));
    CHECK(has_canonical_reduction(build_semigroup(V{26, 28, 29, 30})));
    CHECK(has_canonical_reduction(build_semigroup(V{2, 3})));
    // PF(M_63) = {627, 694}: 63 + 694 - 627 = 130 = 65 + 65.
    CHECK(has_canonical_reduction(build_semigroup(V{63, 65, 66, 70})));
    CHECK(reduced_type(build_semigroup(V{14643, 14645, 14650, 14654})) == 4);
    CHECK(reduced_type(build_semigroup(V{2, 3})) == 1);
    // Interval [3799, 3999] of PF(M_200).
    CHECK(reduced_type(build_semigroup(V{200, 202, 207, 211})) == 4);
}

TEST_CASE("overflow is reported, not wrapped") {
    CHECK(kind_of([] { checked_mul(Int{1} << 40, Int{1} << 40); }) == ErrorKind::Overflow);
    CHECK(kind_of([] { checked_add(std::numeric_limits<Int>::max(), Int{1}); }) == ErrorKind::Overflow);
}

TEST_CASE("property: Sylvester formula") {
    for (Int a = 2; a <= 30; ++a)
        for (Int b = a + 1; b <= 30; ++b)
            if (std::gcd(a, b) == 1) CHECK(build_semigroup(V{a, b}).frobenius() == a * b - a - b);
}

TEST_CASE("property: Apery invariants") {
    for (const auto& g : sample_semigroups()) {
        const auto h = build_semigroup(g);
        const ref::Semigroup r(g);
        CHECK(h.frobenius() == r.frobenius);
        const Int m = h.multiplicity();
        for (Int base : {m, h.minimal_generators().back(), m + h.minimal_generators().back()}) {
            const auto ap = apery_set(h, base);
            const auto el = ap.elements();
            CHECK(*std::max_element(el.begin(), el.end()) - base == h.frobenius());
            for (Int w : el) {
                CHECK(r.contains(w));
                CHECK_FALSE(r.contains(w - base));
            }
        }
        for (Int x = -3; x <= r.frobenius + 3; ++x) CHECK(h.contains(x) == r.contains(x));
    }
}

TEST_CASE("property: PF by maximality equals the definitional scan") {
    for (const auto& g : sample_semigroups()) {
        const auto h = build_semigroup(g);
        const ref::Semigroup r(g);
        CHECK(h.pseudo_frobenius() == ref::pf(r));
        CHECK(pseudo_frobenius(h) == h.pseudo_frobenius());
    }
}

TEST_CASE("property: trace, residue and certificates agree") {
    for (const auto& g : sample_semigroups()) {
        const auto h = build_semigroup(g);
        const auto t = trace(h);
        const auto brute = oracle::brute_trace(g);
        CHECK(t.holes == brute.holes);
        for (Int x : t.holes) {
            CHECK(x >= 0);
            CHECK(x <= h.frobenius());
        }
        // residue 0 iff H = K(H) on [0, F]
        const auto k = canonical_ideal(h);
        bool equal = true;
        for (Int x = 0; x <= h.frobenius(); ++x) equal = equal && (k.contains(x) == h.contains(x));
        CHECK((t.residue == 0) == equal);
        CHECK((t.residue <= 1) == ng_certificate(h).nearly_gorenstein());
        if (is_almost_symmetric(h)) {
            const auto c = ng_certificate(h);
            REQUIRE(c.nearly_gorenstein());
            for (const auto& cand : c.candidates)
                CHECK(std::find(cand.begin(), cand.end(), h.frobenius()) != cand.end());
        }
        CHECK((t.residue == 0) == is_symmetric(h));
    }
}

TEST_CASE("property: factorization length bounds and reference agreement") {
    const std::vector<V> coin_sets{{2, 7, 11}, {3, 4, 6}, {8, 12, 14}, {1, 3, 4}, {5, 9, 10, 12}};
    for (const auto& coins : coin_sets) {
        const auto t = tuple(coins);
        const FactorizationLengths table(t, 400);
        for (Int x = 0; x <= 400; ++x) {
            const auto m = table.at(x);
            CHECK(m.value_or(-1) == ref::min_length(x, coins));
            CHECK(min_fact_length(x, t) == m);
            if (m) {
                CHECK(*m * coins.back() >= x);
                CHECK(*m * coins.front() <= x);
            }
        }
    }
}
