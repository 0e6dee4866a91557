#include "mlp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mlp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// std distributions are implementation-defined; these helpers are not, so a
// seed yields the same module with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

Atom atom_name(std::size_t i) {
    if (i < 26) return Atom(std::string(1, static_cast<char>('a' + i)));
    return Atom("x" + std::to_string(i));
}

std::size_t round_count(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::lround(fraction * static_cast<double>(n)));
}

// Which literals a rule may use positively; everything else goes negative.
using PositiveFilter = std::function<bool(std::size_t atom, const std::vector<std::size_t>& heads)>;

void add_random_rules(Rng& rng, const GeneratorConfig& cfg, const std::vector<std::size_t>& head_pool,
                      const std::vector<std::size_t>& body_pool, const PositiveFilter& positive_ok,
                      Program& out) {
    if (head_pool.empty()) return;
    for (std::size_t k = 0; k < cfg.rule_budget; ++k) {
        const bool constraint = rng.chance(cfg.constraint_probability);
        const bool choice = !constraint && rng.chance(cfg.choice_probability);
        std::vector<std::size_t> heads;
        if (!constraint) {
            heads.push_back(head_pool[rng.below(head_pool.size())]);
            if (choice && head_pool.size() > 1 && rng.chance(0.5)) {
                auto second = head_pool[rng.below(head_pool.size())];
                if (second != heads.front()) heads.push_back(second);
            }
        }
        std::size_t body_len = rng.below(cfg.max_body + 1);
        if (constraint && body_len == 0) body_len = 1;
        AtomSet pos, neg;
        for (std::size_t b = 0; b < body_len && !body_pool.empty(); ++b) {
            auto atom = body_pool[rng.below(body_pool.size())];
            const bool negative = rng.chance(cfg.negation_probability) || !positive_ok(atom, heads);
            (negative ? neg : pos).insert(atom_name(atom));
        }
        AtomSet head_atoms;
        for (auto h : heads) head_atoms.insert(atom_name(h));
        if (constraint) {
            out.add(Rule::constraint(std::move(pos), std::move(neg)));
        } else if (choice) {
            out.add(Rule::choice(std::move(head_atoms), std::move(pos), std::move(neg)));
        } else {
            out.add(Rule::normal(*head_atoms.begin(), std::move(pos), std::move(neg)));
        }
    }
}

bool precedes_heads(std::size_t atom, const std::vector<std::size_t>& heads) {
    return std::all_of(heads.begin(), heads.end(), [&](std::size_t h) { return atom < h; });
}

}  // namespace

void GeneratorConfig::validate() const {
    auto unit = [](double x, const char* what) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
    };
    unit(input_fraction, "input_fraction");
    unit(output_fraction, "output_fraction");
    unit(choice_probability, "choice_probability");
    unit(negation_probability, "negation_probability");
    unit(constraint_probability, "constraint_probability");
    if (input_fraction + output_fraction > 1.0) throw std::invalid_argument("input_fraction + output_fraction > 1");
    if (atom_budget > default_max_atoms)
        throw std::invalid_argument("atom_budget exceeds the enumeration cap of " + std::to_string(default_max_atoms));
    if (rule_budget > 64) throw std::invalid_argument("rule_budget above 64");
    if (max_body > 8) throw std::invalid_argument("max_body above 8");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    return splitmix64(splitmix64(seed) ^ (trial + 1));
}

ProgramModule random_module(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.atom_budget;
    const std::size_t n_in = std::min(round_count(cfg.input_fraction, n), n);
    const std::size_t n_out = std::min(round_count(cfg.output_fraction, n), n - n_in);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    ProgramModule m;
    std::vector<std::size_t> heads, all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto i = order[k];
        if (k < n_in) {
            m.input.insert(atom_name(i));
        } else {
            (k < n_in + n_out ? m.output : m.hidden).insert(atom_name(i));
            heads.push_back(i);
        }
    }
    if (cfg.rule_budget > 0 && heads.empty())
        throw std::invalid_argument("budget infeasible: rules requested but no output or hidden atom can head them");

    PositiveFilter ok = [&](std::size_t atom, const std::vector<std::size_t>& hs) {
        return !cfg.positive_acyclic || precedes_heads(atom, hs);
    };
    add_random_rules(rng, cfg, heads, all, ok, m.rules);
    return m;
}

ModulePair random_pair(const GeneratorConfig& cfg, PairShape shape) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.atom_budget;

    enum class Role { free, out1, out2, hid1, hid2, common };
    std::vector<Role> role(n);
    for (auto& r : role) {
        if (rng.chance(cfg.input_fraction)) r = Role::free;
        else if (rng.chance(cfg.output_fraction / std::max(1e-9, 1.0 - cfg.input_fraction)))
            r = rng.chance(0.5) ? Role::out1 : Role::out2;
        else r = rng.chance(0.5) ? Role::hid1 : Role::hid2;
    }
    if (shape == PairShape::common_outputs && n > 0) {
        bool any = false;
        for (auto& r : role) {
            if ((r == Role::out1 || r == Role::out2) && rng.chance(0.5)) r = Role::common;
            any = any || r == Role::common;
        }
        if (!any) role[rng.below(n)] = Role::common;
    }
    const int dir = static_cast<int>(rng.below(2));

    ModulePair pair;
    for (int side = 0; side < 2; ++side) {
        const Role own_out = side == 0 ? Role::out1 : Role::out2;
        const Role own_hid = side == 0 ? Role::hid1 : Role::hid2;
        const Role other_out = side == 0 ? Role::out2 : Role::out1;
        ProgramModule& m = side == 0 ? pair.first : pair.second;

        std::vector<std::size_t> heads, body;
        for (std::size_t i = 0; i < n; ++i) {
            const Role r = role[i];
            if (r == own_out || r == Role::common || r == own_hid) heads.push_back(i);
            if (r == own_out || r == Role::common) m.output.insert(atom_name(i));
            if (r == own_hid) m.hidden.insert(atom_name(i));
            if (r != (side == 0 ? Role::hid2 : Role::hid1)) body.push_back(i);
        }
        PositiveFilter ok = [&](std::size_t atom, const std::vector<std::size_t>& hs) {
            if (cfg.positive_acyclic) return precedes_heads(atom, hs);
            if (role[atom] == Role::common) return false;
            if (role[atom] == other_out && cfg.forbid_cross_positive_cycles && side != dir) return false;
            return true;
        };
        add_random_rules(rng, cfg, heads, body, ok, m.rules);

        for (const auto& a : m.rules.atoms())
            if (!m.output.contains(a) && !m.hidden.contains(a)) m.input.insert(a);
        for (std::size_t i = 0; i < n; ++i) {
            const Role r = role[i];
            if ((r == Role::free || r == other_out) && rng.chance(0.25)) m.input.insert(atom_name(i));
        }
    }
    return pair;
}

}  // namespace mlp
