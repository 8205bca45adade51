#include <chipfire/energy.hpp>

#include <chipfire/stability.hpp>

#include <gmp.h>
#include <mpfr.h>

#include <cstdio>
#include <cstdlib>

namespace chipfire {

namespace {

Rat pow_abs(const Rat& x, unsigned p) {
    Rat a = abs(x);
    Rat out = 1;
    for (unsigned k = 0; k < p; ++k) out *= a;
    return out;
}

std::vector<PhiSpec> resolve_phis(const EnergySpec& spec, std::size_t n) {
    std::vector<PhiSpec> phis;
    switch (spec.kind) {
    case EnergySpec::Kind::two_norm:
        phis.assign(n, PhiSpec{PhiSpec::Fn::power, 2});
        break;
    case EnergySpec::Kind::p_norm:
        if (spec.p < 1) throw ParseError("energy spec: p must be at least 1");
        phis.assign(n, PhiSpec{PhiSpec::Fn::power, spec.p});
        break;
    case EnergySpec::Kind::general:
        if (spec.phis.size() != n)
            throw DimensionMismatchError("energy spec lists " + std::to_string(spec.phis.size()) +
                                         " terms for a system of size " + std::to_string(n));
        for (const PhiSpec& phi : spec.phis)
            if (phi.fn == PhiSpec::Fn::power && phi.p < 1)
                throw ParseError("energy spec: power term needs p at least 1");
        phis = spec.phis;
        break;
    }
    return phis;
}

// mpq bridge for boost rationals; exact by construction.
void set_mpq(mpq_t out, const Rat& q) {
    if (mpq_set_str(out, to_string(q).c_str(), 10) != 0)
        throw Error("internal", "rational conversion failed");
    mpq_canonicalize(out);
}

// Writes a directed-rounding enclosure of poly + log(log_arg) into [lo, hi].
void enclose(mpfr_t lo, mpfr_t hi, const Rat& poly, const Rat& log_arg) {
    mpq_t pq, lq;
    mpq_init(pq);
    mpq_init(lq);
    set_mpq(pq, poly);
    set_mpq(lq, log_arg);

    mpfr_t tlo, thi;
    mpfr_init2(tlo, mpfr_get_prec(lo));
    mpfr_init2(thi, mpfr_get_prec(hi));

    mpfr_set_q(lo, pq, MPFR_RNDD);
    mpfr_set_q(hi, pq, MPFR_RNDU);
    mpfr_set_q(tlo, lq, MPFR_RNDD);
    mpfr_set_q(thi, lq, MPFR_RNDU);
    mpfr_log(tlo, tlo, MPFR_RNDD);
    mpfr_log(thi, thi, MPFR_RNDU);
    mpfr_add(lo, lo, tlo, MPFR_RNDD);
    mpfr_add(hi, hi, thi, MPFR_RNDU);

    mpfr_clear(tlo);
    mpfr_clear(thi);
    mpq_clear(pq);
    mpq_clear(lq);
}

// Sign of r + log(q) for rational r and positive rational q, with either
// r != 0 or q != 1. The value is nonzero (log of a rational other than 1 is
// irrational and cannot cancel a rational), so some precision separates the
// interval from zero.
int sign_rational_plus_log(const Rat& r, const Rat& q) {
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t(1) << 22); prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        enclose(lo, hi, r, q);
        const bool neg = mpfr_sgn(hi) < 0;
        const bool pos = mpfr_sgn(lo) > 0;
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (neg) return -1;
        if (pos) return 1;
    }
    throw Error("internal", "interval refinement did not separate the sign");
}

} // namespace

EnergySpec EnergySpec::p_norm(unsigned p) {
    EnergySpec s;
    s.kind = Kind::p_norm;
    s.p = p;
    return s;
}

EnergySpec EnergySpec::general(std::vector<PhiSpec> phis) {
    EnergySpec s;
    s.kind = Kind::general;
    s.phis = std::move(phis);
    return s;
}

EnergySpec EnergySpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("energy spec: expected an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "two_norm") return two_norm();
    if (kind == "p_norm") {
        if (!j.contains("p") || !j["p"].is_number_unsigned() || j["p"].get<unsigned>() < 1)
            throw ParseError("energy spec: p_norm needs an integer p >= 1");
        return p_norm(j["p"].get<unsigned>());
    }
    if (kind == "general") {
        if (!j.contains("phis") || !j["phis"].is_array() || j["phis"].empty())
            throw ParseError("energy spec: general needs a nonempty \"phis\" array");
        std::vector<PhiSpec> phis;
        for (const auto& t : j["phis"]) {
            if (!t.is_object() || !t.contains("fn") || !t["fn"].is_string())
                throw ParseError("energy spec: each term needs an \"fn\" string");
            const std::string fn = t["fn"].get<std::string>();
            if (fn == "power") {
                if (!t.contains("p") || !t["p"].is_number_unsigned() || t["p"].get<unsigned>() < 1)
                    throw ParseError("energy spec: power term needs an integer p >= 1");
                phis.push_back({PhiSpec::Fn::power, t["p"].get<unsigned>()});
            } else if (fn == "log1p_abs") {
                phis.push_back({PhiSpec::Fn::log1p_abs, 1});
            } else {
                throw ParseError("energy spec: unknown term \"" + fn + "\"");
            }
        }
        return general(std::move(phis));
    }
    throw ParseError("energy spec: unknown kind \"" + kind + "\"");
}

nlohmann::json EnergySpec::to_json() const {
    switch (kind) {
    case Kind::two_norm:
        return {{"kind", "two_norm"}};
    case Kind::p_norm:
        return {{"kind", "p_norm"}, {"p", p}};
    case Kind::general: {
        nlohmann::json terms = nlohmann::json::array();
        for (const PhiSpec& phi : phis) {
            if (phi.fn == PhiSpec::Fn::power)
                terms.push_back({{"fn", "power"}, {"p", phi.p}});
            else
                terms.push_back({{"fn", "log1p_abs"}});
        }
        return {{"kind", "general"}, {"phis", terms}};
    }
    }
    throw Error("internal", "unreachable energy spec kind");
}

const Rat& EnergyValue::exact() const {
    if (!is_exact())
        throw Error("inexact_energy",
                    "energy has a logarithmic term; use approx_decimal or compare");
    return poly_;
}

int EnergyValue::compare(const EnergyValue& other) const {
    const Rat dr = poly_ - other.poly_;
    if (log_arg_ == other.log_arg_) return dr == 0 ? 0 : (dr < 0 ? -1 : 1);
    const Rat q = log_arg_ / other.log_arg_;
    if (dr == 0) return q < 1 ? -1 : 1;
    return sign_rational_plus_log(dr, q);
}

std::string EnergyValue::approx_decimal(unsigned digits, std::string* error_bound) const {
    if (digits < 1) digits = 1;
    const mpfr_prec_t prec =
        std::max<mpfr_prec_t>(128, 64 + mpfr_prec_t(digits) * 4);

    mpfr_t lo, hi, mid, half;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(mid, prec);
    mpfr_init2(half, prec);
    enclose(lo, hi, poly_, log_arg_);

    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(half, hi, lo, MPFR_RNDU);
    mpfr_div_2ui(half, half, 1, MPFR_RNDU);

    char* mid_str = nullptr;
    mpfr_asprintf(&mid_str, "%.*Re", int(digits) - 1, mid);
    std::string value = mid_str;
    mpfr_free_str(mid_str);

    if (error_bound) {
        // Interval half-width plus the worst-case rounding of the printed
        // midpoint: ulp of the leading digit is 10^(1-digits) relative.
        mpfr_t bound, scale;
        mpfr_init2(bound, prec);
        mpfr_init2(scale, prec);
        mpfr_abs(bound, mid, MPFR_RNDU);
        mpfr_add_ui(bound, bound, 1, MPFR_RNDU);
        mpfr_set_ui(scale, 10, MPFR_RNDU);
        mpfr_pow_si(scale, scale, 1 - long(digits), MPFR_RNDU);
        mpfr_mul(bound, bound, scale, MPFR_RNDU);
        mpfr_add(bound, bound, half, MPFR_RNDU);
        char* bound_str = nullptr;
        mpfr_asprintf(&bound_str, "%.2Re", bound);
        *error_bound = bound_str;
        mpfr_free_str(bound_str);
        mpfr_clear(bound);
        mpfr_clear(scale);
    }

    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(mid);
    mpfr_clear(half);
    return value;
}

nlohmann::json EnergyValue::to_json() const {
    if (is_exact()) return {{"exact", to_string(poly_)}};
    std::string bound;
    std::string value = approx_decimal(30, &bound);
    return {{"approx", value}, {"error_bound", bound}};
}

EnergyValue energy(const Engine& e, const EnergySpec& spec, const IntVec& q) {
    e.check_dimension(q);
    const std::vector<PhiSpec> phis = resolve_phis(spec, e.size());
    const RatVec d = e.l_inverse().apply(q);

    Rat poly = 0;
    Rat log_arg = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (phis[i].fn == PhiSpec::Fn::power)
            poly += pow_abs(d[i], phis[i].p);
        else
            log_arg *= 1 + abs(d[i]);
    }
    return EnergyValue(std::move(poly), std::move(log_arg));
}

IntVec minimize_energy(const Engine& e, const EnergySpec& spec, const IntVec& f) {
    resolve_phis(spec, e.size()); // reject malformed specs up front
    return canonical_z_superstable(e, f);
}

std::pair<Rat, Rat> energy_difference(const Engine& e, const IntVec& f, const IntVec& z) {
    e.check_dimension(f);
    e.check_dimension(z);
    const std::size_t n = e.size();

    IntVec g = f;
    const IntMatrix& l = e.l_matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i] -= l(i, j) * z[j];

    const RatVec df = e.l_inverse().apply(f);
    const RatVec dg = e.l_inverse().apply(g);

    Rat ef = 0, ztz = 0, ztdf = 0, ztdg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ef += df[i] * df[i];
        ztz += Rat(z[i]) * Rat(z[i]);
        ztdf += Rat(z[i]) * df[i];
        ztdg += Rat(z[i]) * dg[i];
    }
    return {ef + ztz - 2 * ztdf, ef - ztz - 2 * ztdg};
}

} // namespace chipfire
