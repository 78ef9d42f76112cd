#include "shiftfam/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace shiftfam {

namespace {

std::string str(Int x) { return std::to_string(x); }

void require_coprime(const ShiftSpec& spec, Int n) {
    if (n <= 0) throw Error(ErrorKind::NotCoprime, "n must be positive, got " + str(n));
    if (std::gcd(n, spec.d) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + str(n) + ", " + str(spec.d) + ") != 1");
}

void require_above_n0(const ShiftSpec& spec, Int n) {
    if (n <= spec.n0)
        throw Error(ErrorKind::BelowThreshold, "n = " + str(n) + " must exceed N0 = " + str(spec.n0));
}

// Statements proved for n >= r_k^4 only.
void quartic_threshold(const ShiftSpec& spec, Int n, Mode mode, std::vector<std::string>& warnings) {
    if (n >= spec.rk4()) return;
    const std::string msg = "n = " + str(n) + " is below r_k^4 = " + str(spec.rk4()) + "; result is observed, not guaranteed";
    if (mode == Mode::Strict) throw Error(ErrorKind::BelowThreshold, msg);
    warnings.push_back(msg);
}

Int inverse_mod(Int a, Int m) {
    Int old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return mod_floor(old_s, m);
}

// Smallest p > N0 with p = n (mod r_k).
Int reduced_base(const ShiftSpec& spec, Int n) {
    return spec.n0 + 1 + mod_floor(n - spec.n0 - 1, spec.rk());
}

const PEntry& require_in_p(const PProfile& profile, Int i) {
    for (const auto* block : {&profile.p_prime, &profile.p_double})
        for (const auto& e : *block)
            if (e.i == i) return e;
    throw Error(ErrorKind::NotInP, str(i) + " is not in P_" + str(profile.n));
}

bool is_double(const ShiftSpec& spec, Int n, Int i) { return i >= spec.d * n - spec.rk(); }

}  // namespace

std::string_view to_string(PClass cls) { return cls == PClass::Prime ? "prime" : "double"; }

Int ShiftSpec::rk4() const {
    const Int sq = checked_mul(rk(), rk());
    return checked_mul(sq, sq);
}

ShiftSpec make_spec(const GeneratorTuple& r) {
    if (r.size() < 2)
        throw Error(ErrorKind::TooFewShifts, "a shifted family needs k >= 2 shifts, got " + std::to_string(r.size()));
    Submonoid s(r);
    const Int rk = r.back();
    const Int fs = s.frobenius();
    const Int sq = checked_mul(rk, rk);
    const Int n0 = std::max(sq, checked_add(sq, checked_mul(fs, rk)));
    return ShiftSpec{r, s, s.gcd(), fs, n0};
}

ShiftSpec make_spec(std::span<const Int> r) { return make_spec(normalize_generators(r)); }

NumericalSemigroup member_semigroup(const ShiftSpec& spec, Int n) {
    require_coprime(spec, n);
    std::vector<Int> gens{n};
    for (Int r : spec.r) gens.push_back(checked_add(n, r));
    return build_semigroup(gens);
}

std::vector<AperyEntry> apery_structure(const ShiftSpec& spec, Int n) {
    require_coprime(spec, n);
    const Int rk = spec.rk();
    if (n <= rk * rk)
        throw Error(ErrorKind::BelowThreshold, "n = " + str(n) + " must exceed r_k^2 = " + str(rk * rk));
    const Int dn = checked_mul(spec.d, n);
    const AperySet ap = apery_set(spec.s, dn);
    const FactorizationLengths m(spec.r, dn + std::max<Int>(spec.fs, 0));
    std::vector<AperyEntry> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Int i : ap.elements()) {
        const Int mi = m.require(i);
        out.push_back({i, mi, checked_add(i, checked_mul(mi, n))});
    }
    return out;
}

std::vector<Int> PProfile::representatives() const {
    std::vector<Int> out;
    for (const auto& e : p_prime) out.push_back(e.i);
    for (const auto& e : p_double) out.push_back(e.i);
    std::sort(out.begin(), out.end());
    return out;
}

const PFEntry* PProfile::find_pf(Int f) const {
    for (const auto& e : pf)
        if (e.f == f) return &e;
    return nullptr;
}

const PFEntry* PProfile::find_representative(Int i) const {
    for (const auto& e : pf)
        if (e.i == i) return &e;
    return nullptr;
}

PProfile p_profile(const ShiftSpec& spec, Int n) {
    require_coprime(spec, n);
    require_above_n0(spec, n);
    const NumericalSemigroup mn = member_semigroup(spec, n);
    const Int d = spec.d;
    const Int dn = checked_mul(d, n);
    const AperySet ap = apery_set(spec.s, dn);
    const FactorizationLengths m(spec.r, dn + std::max<Int>(spec.fs, 0));
    const Int d_inv = inverse_mod(d, n);

    PProfile profile{n, {}, {}, {}};
    for (Int f : mn.pseudo_frobenius()) {
        // The representative i = dj satisfies dj = f (mod n).
        const Int j = static_cast<Int>((static_cast<__int128>(mod_floor(f, n)) * d_inv) % n);
        const Int i = ap.table()[static_cast<std::size_t>(d * j)];
        const Int mi = m.require(i);
        if (f != i + (mi - 1) * n)
            throw Error(ErrorKind::InvariantViolation,
                        "PF element " + str(f) + " does not match i + (m(i)-1)n with i = " + str(i));
        const PClass cls = is_double(spec, n, i) ? PClass::Double : PClass::Prime;
        profile.pf.push_back({f, cls, i, mi});
        (cls == PClass::Prime ? profile.p_prime : profile.p_double).push_back({i, mi});
    }
    auto by_i = [](const PEntry& a, const PEntry& b) { return a.i < b.i; };
    std::sort(profile.p_prime.begin(), profile.p_prime.end(), by_i);
    std::sort(profile.p_double.begin(), profile.p_double.end(), by_i);
    return profile;
}

Int psi(const ShiftSpec& spec, Int n, Int i) { return psi_lambda(spec, n, i, 1); }

Int psi_lambda(const ShiftSpec& spec, Int n, Int i, Int lambda) {
    const PProfile profile = p_profile(spec, n);
    require_in_p(profile, i);
    if (!is_double(spec, n, i)) return i;
    return checked_add(i, checked_mul(checked_mul(lambda, spec.d), spec.rk()));
}

Int psi_wrong(const ShiftSpec& spec, Int n, Int i) {
    const PProfile profile = p_profile(spec, n);
    require_in_p(profile, i);
    return i <= spec.d * n ? i : i + spec.rk();
}

Int ClosedForm::evaluate(Int lambda) const {
    const Int sq = checked_mul(lambda, lambda);
    return checked_add(checked_add(constant, checked_mul(linear, lambda)), checked_mul(quadratic, sq));
}

ClosedForm closed_form(const ShiftSpec& spec, const PProfile& profile, const PFEntry& e) {
    const Int rk = spec.rk();
    const Int d = spec.d;
    ClosedForm cf{profile.n, e.f, e.cls, e.i, e.m, e.f, 0, 0};
    if (e.cls == PClass::Prime) {
        cf.linear = checked_mul(e.m - 1, rk);
    } else {
        // f + (m + (lambda+1)d - 1) lambda r_k + lambda d n
        cf.linear = checked_add(checked_mul(e.m + d - 1, rk), checked_mul(d, profile.n));
        cf.quadratic = checked_mul(d, rk);
    }
    return cf;
}

std::vector<ClosedForm> closed_forms(const ShiftSpec& spec, Int n) {
    const PProfile profile = p_profile(spec, n);
    std::vector<ClosedForm> out;
    for (const auto& e : profile.pf) out.push_back(closed_form(spec, profile, e));
    return out;
}

Int phi(const ShiftSpec& spec, Int n, Int f) { return phi_lambda(spec, n, f, 1); }

Int phi_lambda(const ShiftSpec& spec, Int n, Int f, Int lambda) {
    if (lambda < 0) throw Error(ErrorKind::BelowThreshold, "lambda must be nonnegative");
    const PProfile profile = p_profile(spec, n);
    const PFEntry* e = profile.find_pf(f);
    if (!e) throw Error(ErrorKind::NotPseudoFrobenius, str(f) + " is not in PF(M_" + str(n) + ")");
    return closed_form(spec, profile, *e).evaluate(lambda);
}

Int m_shift(const ShiftSpec& spec, Int n, Int i, Int lambda) {
    const PProfile profile = p_profile(spec, n);
    const PEntry& e = require_in_p(profile, i);
    if (!is_double(spec, n, i)) return e.m;
    return checked_add(e.m, checked_mul(lambda, spec.d));
}

BoundN bound_n_from(const ShiftSpec& spec, Int n_star) {
    const PProfile profile = p_profile(spec, n_star);
    const Int rk = spec.rk();
    Int n1 = 0, n2 = 0, n3 = 0;
    for (const auto& i : profile.p_prime)
        for (const auto& l : profile.p_prime) {
            n1 = std::max(n1, rk + l.i - i.i);
            n1 = std::max(n1, (l.m - i.m) * rk - l.i + i.i);
        }
    for (const auto& i : profile.p_double)
        for (const auto& l : profile.p_double) n2 = std::max(n2, (l.m - i.m) * rk - l.i + i.i);
    // n > x iff n > floor(x) for integer n, so the quotient is floored.
    for (const auto& l : profile.p_prime) n3 = std::max(n3, (l.m * rk + 3 * rk) / spec.d);
    const Int base = spec.n0 + rk + spec.fs_reduced();
    const Int big_n = std::max({base, n1, n2, n3});
    return BoundN{n_star, n1, n2, n3, big_n, big_n < spec.rk4()};
}

BoundN bound_n(const ShiftSpec& spec) {
    Int n_star = spec.n0 + 1;
    while (std::gcd(n_star, spec.d) != 1) ++n_star;
    return bound_n_from(spec, n_star);
}

BoundN bound_n_for(const ShiftSpec& spec, Int n) {
    require_coprime(spec, n);
    return bound_n_from(spec, reduced_base(spec, n));
}

FrobeniusClosedForm frobenius_closed_form(const ShiftSpec& spec, Int n, Int lambda, Mode mode) {
    require_coprime(spec, n);
    require_above_n0(spec, n);
    FrobeniusClosedForm out{0, 0, 0, false, {}};
    quartic_threshold(spec, n, mode, out.warnings);
    const PProfile profile = p_profile(spec, n);
    const PFEntry& top = profile.pf.back();
    out.base_frobenius = top.f;
    out.i = top.i;
    out.representative_double = top.cls == PClass::Double;
    if (!out.representative_double) {
        const std::string msg = "Frobenius representative " + str(top.i) + " lies in P_n'";
        if (mode == Mode::Strict) throw Error(ErrorKind::InvariantViolation, msg);
        out.warnings.push_back(msg);
    }
    out.value = closed_form(spec, profile, top).evaluate(lambda);
    return out;
}

OrderCheck order_preservation_check(const ShiftSpec& spec, Int n, Int lambda_max, Mode mode) {
    OrderCheck out{true, std::nullopt, {}};
    quartic_threshold(spec, n, mode, out.warnings);
    const PProfile profile = p_profile(spec, n);
    bool seen_double = false;
    for (const auto& e : profile.pf) {
        if (e.cls == PClass::Double) {
            seen_double = true;
        } else if (seen_double) {
            out.ordered = false;
            out.violation = "PF element " + str(e.f) + " from P_n' follows a P_n'' element";
            return out;
        }
    }
    std::vector<ClosedForm> forms;
    for (const auto& e : profile.pf) forms.push_back(closed_form(spec, profile, e));
    for (Int lambda = 0; lambda <= lambda_max; ++lambda) {
        for (std::size_t a = 1; a < forms.size(); ++a) {
            const Int lo = forms[a - 1].evaluate(lambda);
            const Int hi = forms[a].evaluate(lambda);
            if (lo >= hi) {
                out.ordered = false;
                out.violation = "lambda = " + str(lambda) + ": image of " + str(forms[a - 1].base_f) + " (" + str(lo) +
                                ") is not below image of " + str(forms[a].base_f) + " (" + str(hi) + ")";
                return out;
            }
        }
    }
    return out;
}

NGTransport ng_transport(const ShiftSpec& spec, Int n, Int lambda, Mode mode) {
    require_coprime(spec, n);
    require_above_n0(spec, n);
    NGTransport out{{}, {}, false, false, {}};
    const BoundN bound = bound_n_for(spec, n);
    out.theorem_backed = n > bound.n;
    if (!out.theorem_backed) {
        const std::string msg = "n = " + str(n) + " does not exceed N = " + str(bound.n);
        if (mode == Mode::Strict) throw Error(ErrorKind::BelowThreshold, msg);
        out.warnings.push_back(msg);
    }
    const NumericalSemigroup base = member_semigroup(spec, n);
    const NGCertificate cert = ng_certificate(base);
    if (!cert.vector)
        throw Error(ErrorKind::BaseNotNearlyGorenstein, "M_" + str(n) + " is not nearly Gorenstein");
    out.base_vector = *cert.vector;

    const PProfile profile = p_profile(spec, n);
    for (Int f : out.base_vector) out.vector.push_back(closed_form(spec, profile, *profile.find_pf(f)).evaluate(lambda));

    const Int shifted_n = checked_add(n, checked_mul(lambda, spec.rk()));
    const NumericalSemigroup shifted = member_semigroup(spec, shifted_n);
    const auto& pf = shifted.pseudo_frobenius();
    const auto& gens = shifted.minimal_generators();
    out.verified = gens.size() == out.vector.size();
    for (std::size_t c = 0; c < gens.size() && out.verified; ++c) {
        const Int v = out.vector[c];
        out.verified = std::binary_search(pf.begin(), pf.end(), v) &&
                       std::all_of(pf.begin(), pf.end(), [&](Int g) { return shifted.contains(gens[c] + v - g); });
    }
    if (out.theorem_backed && !out.verified)
        throw Error(ErrorKind::InvariantViolation,
                    "transported NG-vector fails on M_" + str(shifted_n) + " although n > N");
    return out;
}

bool almost_symmetric_transport(const ShiftSpec& spec, Int n, Int lambda, Mode mode) {
    require_coprime(spec, n);
    const BoundN bound = bound_n_for(spec, n);
    const bool theorem_backed = n > bound.n;
    if (!theorem_backed && mode == Mode::Strict)
        throw Error(ErrorKind::BelowThreshold, "n = " + str(n) + " does not exceed N = " + str(bound.n));
    if (!is_almost_symmetric(member_semigroup(spec, n))) return false;
    const Int shifted_n = checked_add(n, checked_mul(lambda, spec.rk()));
    const bool shifted = is_almost_symmetric(member_semigroup(spec, shifted_n));
    if (theorem_backed && !shifted)
        throw Error(ErrorKind::InvariantViolation, "M_" + str(shifted_n) + " lost almost symmetry although n > N");
    return shifted;
}

bool even_type_exclusion(const ShiftSpec& spec, Int n, Mode mode) {
    require_coprime(spec, n);
    std::vector<std::string> ignored;
    quartic_threshold(spec, n, mode, ignored);
    const NumericalSemigroup h = member_semigroup(spec, n);
    return !(is_almost_symmetric(h) && h.type() % 2 == 0);
}

ReducedTypeFormula reduced_type_formula(const ShiftSpec& spec, Int n, Mode mode) {
    require_coprime(spec, n);
    require_above_n0(spec, n);
    return reduced_type_formula(spec, n, reduced_base(spec, n), mode);
}

ReducedTypeFormula reduced_type_formula(const ShiftSpec& spec, Int n, Int p, Mode mode) {
    require_coprime(spec, n);
    require_above_n0(spec, n);
    if (p <= spec.n0 || p > n || mod_floor(n - p, spec.rk()) != 0)
        throw Error(ErrorKind::BadReducedBase, "reduced base " + str(p) + " must satisfy N0 = " + str(spec.n0) +
                                                   " < p <= n = " + str(n) + " and p = n mod " + str(spec.rk()));
    ReducedTypeFormula out{0, p, 0, {}};
    quartic_threshold(spec, n, mode, out.warnings);
    const PProfile profile = p_profile(spec, out.reduced_base);
    const Int mu = (n - out.reduced_base) / spec.rk();

    // F(M_n) is the largest transported PF element; its representative at p
    // fixes the reference m(i). Shifting by mu moves every P'' element and
    // m-value uniformly, so the comparisons can be made at p.
    const PFEntry* top = nullptr;
    Int best = 0;
    for (const auto& e : profile.pf) {
        const Int v = closed_form(spec, profile, e).evaluate(mu);
        if (!top || v > best) {
            top = &e;
            best = v;
        }
    }
    out.frobenius_representative = top->i;
    if (top->cls != PClass::Double) {
        const std::string msg = "Frobenius representative " + str(top->i) + " lies in P_p'";
        if (mode == Mode::Strict) throw Error(ErrorKind::InvariantViolation, msg);
        out.warnings.push_back(msg);
    }
    for (const auto& j : profile.p_double) {
        if (j.m == top->m || (j.m == top->m - 1 && j.i > top->i)) ++out.value;
    }
    return out;
}

ResidueScan residue_scan(const ShiftSpec& spec, Int n, Int lambda_lo, Int lambda_hi) {
    require_coprime(spec, n);
    ResidueScan scan;
    for (Int lambda = lambda_lo; lambda <= lambda_hi; ++lambda) {
        const Int member = checked_add(n, checked_mul(lambda, spec.rk()));
        scan.rows.push_back({lambda, member, trace(member_semigroup(spec, member)).residue});
    }
    const double count = static_cast<double>(scan.rows.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : scan.rows) {
        const double x = static_cast<double>(row.lambda), y = static_cast<double>(row.residue);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    LinearFit fit{0.0, scan.rows.empty() ? 0.0 : sy / count, 0.0};
    const double denom = count * sxx - sx * sx;
    if (scan.rows.size() >= 2 && denom != 0.0) {
        fit.slope = (count * sxy - sx * sy) / denom;
        fit.intercept = (sy - fit.slope * sx) / count;
    }
    for (const auto& row : scan.rows) {
        const double predicted = fit.slope * static_cast<double>(row.lambda) + fit.intercept;
        fit.max_deviation = std::max(fit.max_deviation, std::abs(static_cast<double>(row.residue) - predicted));
    }
    scan.fit = fit;
    return scan;
}

FamilyReport family_report(const ShiftSpec& spec, Int n, Int lambda_max, Mode mode) {
    require_coprime(spec, n);
    if (lambda_max < 0) throw Error(ErrorKind::BelowThreshold, "lambda_max must be nonnegative");
    const NumericalSemigroup base = member_semigroup(spec, n);
    FamilyReport report{spec, n, base.pseudo_frobenius(), std::nullopt, std::nullopt, {}, {}, {}, {}};
    auto& warnings = report.warnings;

    const bool above_n0 = n > spec.n0;
    if (!above_n0) {
        const std::string msg = "n = " + str(n) + " does not exceed N0 = " + str(spec.n0) +
                                "; closed forms and P_n are unavailable";
        if (mode == Mode::Strict) throw Error(ErrorKind::BelowThreshold, msg);
        warnings.push_back(msg);
    }
    const bool quartic = n >= spec.rk4();
    if (!quartic)
        warnings.push_back("n = " + str(n) + " is below r_k^4 = " + str(spec.rk4()) +
                           "; ordering, Frobenius and even-type statements are observed only");

    report.bound = bound_n_for(spec, n);
    const bool above_n = n > report.bound->n;
    if (!above_n)
        warnings.push_back("n = " + str(n) + " does not exceed N = " + str(report.bound->n) +
                           "; periodicity of nearly Gorenstein, almost symmetric and canonical reduction is observed only");

    if (above_n0) {
        report.profile = p_profile(spec, n);
        for (const auto& e : report.profile->pf) report.closed_forms.push_back(closed_form(spec, *report.profile, e));
    }

    for (Int lambda = 0; lambda <= lambda_max; ++lambda) {
        const Int member = checked_add(n, checked_mul(lambda, spec.rk()));
        const NumericalSemigroup h = member_semigroup(spec, member);
        LambdaRow row{lambda, member, {}, h.pseudo_frobenius(), h.frobenius(), true};
        if (above_n0) {
            for (const auto& cf : report.closed_forms) row.pf_closed_form.push_back(cf.evaluate(lambda));
            std::sort(row.pf_closed_form.begin(), row.pf_closed_form.end());
            row.match = row.pf_closed_form == row.pf_direct;
            if (!row.match) {
                const std::string msg = "closed-form PF differs from direct PF at n = " + str(member);
                if (mode == Mode::Strict) throw Error(ErrorKind::InvariantViolation, msg);
                warnings.push_back(msg);
            }
        }
        report.rows.push_back(std::move(row));
    }

    const bool as = is_almost_symmetric(base);
    report.flags.nearly_gorenstein = {ng_certificate(base).nearly_gorenstein(), above_n};
    report.flags.almost_symmetric = {as, above_n};
    report.flags.canonical_reduction = {has_canonical_reduction(base), above_n};
    report.flags.even_type_excluded = {!(as && base.type() % 2 == 0), quartic};
    if (above_n0) {
        report.flags.order_preserved = {order_preservation_check(spec, n, lambda_max, Mode::Observed).ordered, quartic};
    } else {
        report.flags.order_preserved = {false, false};
    }
    return report;
}

}  // namespace shiftfam
