#include <chipfire/dynamics.hpp>

#include <limits>
#include <random>
#include <utility>

namespace chipfire {

namespace {

// Unbiased draw from [0, bound) that does not depend on library-specific
// distribution implementations, so seeded runs reproduce across platforms.
void check_index(std::size_t size, std::size_t i) {
    if (i >= size)
        throw IndexError("state index " + std::to_string(i) + " out of range for size " +
                         std::to_string(size));
}

std::size_t bounded_draw(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return static_cast<std::size_t>(x % b);
}

} // namespace

Engine::Engine(IntMatrix delta)
    : delta_(std::move(delta)), l_(delta_.transpose()), verdict_(m_verdict(delta_)),
      // (delta^{-1})^T = (delta^T)^{-1} = L^{-1}
      l_inverse_([&] {
          if (!verdict_.is_m)
              throw NotMMatrixError(verdict_.failure_witness ? *verdict_.failure_witness
                                                             : "failed M-matrix check");
          return verdict_.inverse->transpose();
      }()),
      det_(chipfire::determinant(delta_)) {}

void Engine::check_dimension(const IntVec& c) const {
    if (c.size() != size())
        throw DimensionMismatchError("configuration length " + std::to_string(c.size()) +
                                     " does not match system size " + std::to_string(size()));
}

IntVec Engine::d_vector() const {
    IntVec d(size());
    for (std::size_t i = 0; i < size(); ++i) d[i] = l_(i, i) - 1;
    return d;
}

bool Engine::eligible(const IntVec& c, std::size_t i) const {
    check_dimension(c);
    check_index(size(), i);
    return c[i] >= l_(i, i);
}

IntVec Engine::fire(const IntVec& c, std::size_t i) const {
    check_dimension(c);
    check_index(size(), i);
    IntVec out = c;
    for (std::size_t j = 0; j < size(); ++j) out[j] -= l_(j, i);
    return out;
}

FiringRecord Engine::stabilize(IntVec start, const StabilizeOptions& options) const {
    check_dimension(start);
    for (std::size_t i = 0; i < size(); ++i)
        if (start[i] < 0)
            throw NegativeInputError("configuration has negative entry at state " +
                                     std::to_string(i));

    const Int cap = options.cap ? *options.cap : kDefaultFireCap;
    const std::size_t n = size();

    FiringRecord rec;
    rec.odometer.assign(n, Int(0));
    rec.result = std::move(start);
    IntVec& c = rec.result;
    Int fired = 0;

    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> pool;

    for (;;) {
        std::size_t pick = n;
        if (options.policy == FirePolicy::smallest_index) {
            for (std::size_t i = 0; i < n; ++i)
                if (c[i] >= l_(i, i)) {
                    pick = i;
                    break;
                }
        } else {
            pool.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (c[i] >= l_(i, i)) pool.push_back(i);
            if (!pool.empty()) pick = pool[bounded_draw(rng, pool.size())];
        }
        if (pick == n) break;

        if (options.policy == FirePolicy::smallest_index && !options.record_sequence) {
            // Batched variant of repeatedly firing `pick`; by the abelian
            // property the final state and odometer are unchanged.
            Int k = c[pick] / l_(pick, pick);
            fired += k;
            if (fired > cap)
                throw CapExceededError("firing cap of " + to_string(cap) + " exceeded");
            for (std::size_t j = 0; j < n; ++j) c[j] -= k * l_(j, pick);
            rec.odometer[pick] += k;
            continue;
        }

        fired += 1;
        if (fired > cap) throw CapExceededError("firing cap of " + to_string(cap) + " exceeded");
        for (std::size_t j = 0; j < n; ++j) c[j] -= l_(j, pick);
        rec.odometer[pick] += 1;
        if (options.record_sequence) rec.sequence.push_back(pick);
    }
    return rec;
}

std::optional<IntVec> Engine::equivalence_witness(const IntVec& f, const IntVec& g) const {
    check_dimension(f);
    check_dimension(g);
    return chipfire::equivalence_witness(l_inverse_, f, g);
}

} // namespace chipfire
