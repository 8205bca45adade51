#ifndef CHIPFIRE_ENERGY_HPP
#define CHIPFIRE_ENERGY_HPP

#include <chipfire/dynamics.hpp>
#include <chipfire/numeric.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace chipfire {

// One per-coordinate scalar function, evaluated on |x|.
struct PhiSpec {
    enum class Fn { power, log1p_abs };
    Fn fn = Fn::power;
    unsigned p = 1; // power exponent, >= 1

    friend bool operator==(const PhiSpec&, const PhiSpec&) = default;
};

// Selects the energy functional applied to D = L^{-1} q.
struct EnergySpec {
    enum class Kind { two_norm, p_norm, general };
    Kind kind = Kind::two_norm;
    unsigned p = 2;            // p_norm only, >= 1
    std::vector<PhiSpec> phis; // general only; length must equal n at use

    static EnergySpec two_norm() { return {}; }
    static EnergySpec p_norm(unsigned p);
    static EnergySpec general(std::vector<PhiSpec> phis);

    static EnergySpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    friend bool operator==(const EnergySpec&, const EnergySpec&) = default;
};

// An exact energy as the expression  polynomial_part + log(log_argument).
//
// Power terms accumulate into the rational polynomial part; each log1p term
// contributes a factor 1 + |D_i| to the log argument, so sums of logs stay a
// single exact rational under the log. Values with log_argument == 1 are
// plain rationals. Order comparisons are decided exactly when either side
// collapses (equal log arguments, or equal polynomial parts) and otherwise by
// directed-rounding interval evaluation with escalating precision; the
// escalation terminates because r + log(q) with rational r and positive
// rational q vanishes only when r = 0 and q = 1.
class EnergyValue {
public:
    EnergyValue() = default;
    EnergyValue(Rat polynomial_part, Rat log_argument)
        : poly_(std::move(polynomial_part)), log_arg_(std::move(log_argument)) {}

    const Rat& polynomial_part() const noexcept { return poly_; }
    const Rat& log_argument() const noexcept { return log_arg_; }

    bool is_exact() const noexcept { return log_arg_ == 1; }
    const Rat& exact() const; // throws Error when a log term is present

    // Three-way order: -1, 0, +1.
    int compare(const EnergyValue& other) const;

    bool operator==(const EnergyValue& o) const { return compare(o) == 0; }
    bool operator<(const EnergyValue& o) const { return compare(o) < 0; }
    bool operator<=(const EnergyValue& o) const { return compare(o) <= 0; }

    // Decimal enclosure midpoint to `digits` significant digits, with a
    // rigorous error bound (interval half-width plus print rounding).
    std::string approx_decimal(unsigned digits, std::string* error_bound = nullptr) const;

    nlohmann::json to_json() const;

private:
    Rat poly_ = 0;
    Rat log_arg_ = 1;
};

// E(q) for D = L^{-1} q computed exactly. q may be any integer vector.
EnergyValue energy(const Engine& e, const EnergySpec& spec, const IntVec& q);

// The unique solution of  min { E(g) : g ~ f, g >= 0 }. The minimizer is the
// z-superstable representative of [f] for every admissible spec, so this is
// spec independent.
IntVec minimize_energy(const Engine& e, const EnergySpec& spec, const IntVec& f);

// Both closed forms of the two-norm energy difference for g = f - L z:
//   E(f) + z'z - 2 z' L^{-1} f   and   E(f) - z'z - 2 z' L^{-1} g.
// Each equals E(g); exposed for diagnostics and self-checks.
std::pair<Rat, Rat> energy_difference(const Engine& e, const IntVec& f, const IntVec& z);

} // namespace chipfire

#endif
