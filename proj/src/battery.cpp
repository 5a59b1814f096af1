#include "epkit/battery.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>

#include "epkit/parallel.hpp"

namespace epkit::battery {

namespace ch = epkit::characterizations;

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::ep: return "ep";
        case Kind::non_ep: return "non_ep";
        case Kind::arbitrary: return "arbitrary";
        case Kind::invertible: return "invertible";
    }
    return "?";
}

namespace {

constexpr int kMaxTries = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Sampler {
public:
    Sampler(std::uint64_t seed, long bound, bool gaussian) : rng_(seed), bound_(bound), gaussian_(gaussian) {}

    Rational rational() {
        std::uniform_int_distribution<long> num(-bound_, bound_);
        std::uniform_int_distribution<long> den(1, bound_);
        const long p = num(rng_);
        return Rational(p, den(rng_));
    }

    GaussianRational scalar() {
        Rational re = rational();
        if (!gaussian_) return GaussianRational(re);
        return GaussianRational(std::move(re), rational());
    }

    MatrixQ matrix(std::size_t rows, std::size_t cols) {
        MatrixQ m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
        return m;
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
    long bound_;
    bool gaussian_;
};

std::pair<std::size_t, std::size_t> feasible_ranks(Kind kind, std::size_t n) {
    switch (kind) {
        case Kind::ep:
        case Kind::arbitrary: return {0, n};
        case Kind::invertible: return {n, n};
        case Kind::non_ep:
            if (n < 2) throw GeneratorError("no non-EP matrix of size " + std::to_string(n));
            return {1, n - 1};
    }
    return {0, n};
}

MatrixQ rank_r(Sampler& s, std::size_t rows, std::size_t cols, std::size_t r) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
        MatrixQ m = s.matrix(rows, r) * s.matrix(r, cols);
        if (rank(m) == r) return m;
    }
    throw GeneratorError("rank sampling did not converge");
}

MatrixQ ep_rank_r(Sampler& s, std::size_t n, std::size_t r) {
    if (r == 0) return MatrixQ::zeros(n, n);
    for (int tries = 0; tries < kMaxTries; ++tries) {
        const MatrixQ m0 = s.matrix(n, r);
        if (!has_full_column_rank(m0)) continue;
        const MatrixQ m0s = m0.adjoint();
        const MatrixQ p = m0 * inverse(m0s * m0) * m0s;
        MatrixQ a = p * s.matrix(n, n) * p;
        if (rank(a) == r) return a;
    }
    throw GeneratorError("EP sampling did not converge");
}

}  // namespace

MatrixQ gen_matrix(const GeneratorConfig& cfg) {
    if (cfg.entry_bound < 1) throw GeneratorError("entry bound must be at least 1");
    const auto [lo, hi] = feasible_ranks(cfg.kind, cfg.n);
    Sampler s(cfg.seed, cfg.entry_bound, cfg.gaussian);
    const std::size_t r = cfg.rank ? *cfg.rank : s.index(lo, hi);
    if (r < lo || r > hi) {
        throw GeneratorError("rank " + std::to_string(r) + " infeasible for kind " + std::string(to_string(cfg.kind)) +
                             " at n=" + std::to_string(cfg.n));
    }
    switch (cfg.kind) {
        case Kind::ep: return ep_rank_r(s, cfg.n, r);
        case Kind::arbitrary:
        case Kind::invertible: return rank_r(s, cfg.n, cfg.n, r);
        case Kind::non_ep:
            for (int tries = 0; tries < kMaxTries; ++tries) {
                MatrixQ a = rank_r(s, cfg.n, cfg.n, r);
                if (!is_ep(a)) return a;
            }
            throw GeneratorError("non-EP sampling did not converge");
    }
    throw GeneratorError("unknown kind");
}

MatrixQ gen_rectangular(std::uint64_t seed, std::size_t rows, std::size_t cols, std::size_t rank, long entry_bound,
                        bool gaussian) {
    if (entry_bound < 1) throw GeneratorError("entry bound must be at least 1");
    if (rank > std::min(rows, cols)) throw GeneratorError("rank exceeds both dimensions");
    Sampler s(seed, entry_bound, gaussian);
    return rank_r(s, rows, cols, rank);
}

MatrixQ gen_signed_permutation(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        std::swap(perm[i - 1], perm[j]);
    }
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = (rng() & 1U) ? 1 : -1;
    return m;
}

ch::EPInstance make_instance(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("instance needs a square matrix");
    const FullRankFactorization f = full_rank_factorize(a);
    ch::EPInstance inst{a, f.b, f.c, pinv(a), pinv(f.b), pinv(f.c), MatrixQ::identity(a.rows()),
                        MatrixQ::identity(f.rank)};
    const bool ok = inst.b * inst.c == a && inst.b_dagger * inst.b == inst.e_r && inst.c * inst.c_dagger == inst.e_r &&
                    inst.a_dagger == inst.c_dagger * inst.b_dagger;
    if (!ok) throw std::logic_error("instance invariants failed for " + a.to_string());
    return inst;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"3.2", "3.4", "3.5", "3.7", "3.9", "3.10",
                                              "4.1", "4.2", "5.2", "5.5", "5.6"};
    return ids;
}

bool is_known_theorem(const std::string& id) {
    const auto& ids = theorem_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

ch::Battery evaluate_prop52(const GeneratorConfig& cfg) {
    const std::size_t n = std::max<std::size_t>(cfg.n, 1);
    Sampler s(splitmix64(cfg.seed ^ 0x5052ULL), cfg.entry_bound, cfg.gaussian);
    const std::size_t k = cfg.rank ? *cfg.rank : s.index(1, n);
    if (k > n) throw GeneratorError("T1 larger than the space");
    GeneratorConfig t1_cfg{splitmix64(cfg.seed + 1), k, k, cfg.entry_bound, Kind::invertible, cfg.gaussian};
    const MatrixQ t1 = gen_matrix(t1_cfg);
    if (cfg.kind == Kind::ep) {
        return ch::prop52_battery(t1, gen_signed_permutation(splitmix64(cfg.seed + 2), n), banach::PNorm::one()).statements;
    }
    GeneratorConfig j_cfg{splitmix64(cfg.seed + 2), n, n, cfg.entry_bound, Kind::invertible, cfg.gaussian};
    return ch::prop52_battery(t1, gen_matrix(j_cfg), banach::PNorm::two()).statements;
}

}  // namespace

ch::Battery evaluate(const std::string& theorem_id, const GeneratorConfig& cfg) {
    if (theorem_id == "5.2") return evaluate_prop52(cfg);
    const MatrixQ a = gen_matrix(cfg);
    if (theorem_id == "4.1") return ch::thm41_battery(a);
    if (theorem_id == "4.2") return ch::thm42_battery(a);
    if (theorem_id == "5.5") return ch::thm55_battery(a);
    if (theorem_id == "5.6") return ch::thm56_battery(a);
    const ch::EPInstance inst = make_instance(a);
    if (theorem_id == "3.2") return ch::thm32_battery(inst);
    if (theorem_id == "3.4") return ch::thm34_battery(inst);
    if (theorem_id == "3.5") return ch::thm35_battery(inst);
    if (theorem_id == "3.7") return ch::thm37_battery(inst);
    if (theorem_id == "3.9") return ch::thm39_battery(inst);
    if (theorem_id == "3.10") return ch::thm310_battery(inst);
    throw std::invalid_argument("unknown theorem " + theorem_id);
}

std::vector<GeneratorConfig> mixed_configs(std::uint64_t seed, std::size_t trials, const std::vector<std::size_t>& sizes,
                                           long entry_bound) {
    if (sizes.empty() && trials > 0) throw GeneratorError("no instance sizes given");
    std::vector<GeneratorConfig> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        GeneratorConfig cfg;
        cfg.seed = splitmix64(seed ^ splitmix64(i));
        cfg.n = sizes[i % sizes.size()];
        cfg.entry_bound = entry_bound;
        cfg.kind = (i % 2 == 0 || cfg.n < 2) ? Kind::ep : Kind::non_ep;
        cfg.gaussian = (i / 2) % 2 == 1;
        out.push_back(cfg);
    }
    return out;
}

namespace {

struct Outcome {
    ch::Battery battery;
    std::string error;
};

Outcome run_one(const std::string& theorem_id, const GeneratorConfig& cfg) {
    Outcome o;
    try {
        o.battery = evaluate(theorem_id, cfg);
    } catch (const std::exception& e) {
        o.error = e.what();
    }
    return o;
}

BatteryReport reduce(const std::string& theorem_id, std::uint64_t seed, const std::vector<Outcome>& outcomes) {
    BatteryReport rep;
    rep.theorem_id = theorem_id;
    rep.seed = seed;
    rep.trials = outcomes.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        if (!o.error.empty()) {
            rep.errors.push_back({i, "", o.error});
            continue;
        }
        const ch::StatementResult* anchor = nullptr;
        bool mixed = false;
        for (const auto& r : o.battery) {
            auto [slot, fresh] = rep.per_statement_truth_counts.try_emplace(r.statement_id);
            if (fresh) rep.statement_order.push_back(r.statement_id);
            TruthCounts& c = slot->second;
            switch (r.truth) {
                case ch::Truth::yes: ++c.yes; break;
                case ch::Truth::no: ++c.no; break;
                case ch::Truth::inconclusive:
                    ++c.inconclusive;
                    ++rep.inconclusive_count;
                    continue;
            }
            if (r.witness_failed) rep.witness_failures.push_back({i, r.statement_id, r.note});
            if (r.routes_disagree) rep.route_disagreements.push_back({i, r.statement_id, r.note});
            if (!anchor) {
                anchor = &r;
            } else if (r.truth != anchor->truth && !mixed) {
                rep.equivalence_violations.push_back({i, anchor->statement_id, r.statement_id});
                mixed = true;
            }
        }
        if (anchor && !mixed) {
            if (anchor->truth == ch::Truth::yes) ++rep.all_true_instances;
            else ++rep.all_false_instances;
        }
    }
    return rep;
}

template <class Body>
BatteryReport timed(Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    BatteryReport rep = body();
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

void require_known(const std::string& theorem_id) {
    if (!is_known_theorem(theorem_id)) throw std::invalid_argument("unknown theorem " + theorem_id);
}

}  // namespace

BatteryReport run_battery(const std::string& theorem_id, const std::vector<GeneratorConfig>& cfgs, std::uint64_t seed) {
    require_known(theorem_id);
    return timed([&] {
        std::vector<Outcome> outcomes(cfgs.size());
        const long count = static_cast<long>(cfgs.size());
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
        for (long i = 0; i < count; ++i) outcomes[i] = run_one(theorem_id, cfgs[i]);
        return reduce(theorem_id, seed, outcomes);
    });
}

BatteryReport run_battery_serial(const std::string& theorem_id, const std::vector<GeneratorConfig>& cfgs,
                                 std::uint64_t seed) {
    require_known(theorem_id);
    return timed([&] {
        std::vector<Outcome> outcomes;
        outcomes.reserve(cfgs.size());
        for (const auto& cfg : cfgs) outcomes.push_back(run_one(theorem_id, cfg));
        return reduce(theorem_id, seed, outcomes);
    });
}

nlohmann::ordered_json to_json(const BatteryReport& report, bool include_elapsed) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["theorem_id"] = report.theorem_id;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    ordered_json counts = ordered_json::object();
    for (const auto& id : report.statement_order) {
        const TruthCounts& c = report.per_statement_truth_counts.at(id);
        counts[id] = {{"yes", c.yes}, {"no", c.no}, {"inconclusive", c.inconclusive}};
    }
    j["per_statement_truth_counts"] = counts;
    ordered_json viol = ordered_json::array();
    for (const auto& v : report.equivalence_violations)
        viol.push_back({{"instance", v.instance}, {"statements", {v.first, v.second}}});
    j["equivalence_violations"] = viol;
    auto flagged = [](const std::vector<Flagged>& list) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : list) arr.push_back({{"instance", f.instance}, {"statement", f.statement}, {"note", f.note}});
        return arr;
    };
    j["witness_failures"] = flagged(report.witness_failures);
    j["route_disagreements"] = flagged(report.route_disagreements);
    j["errors"] = flagged(report.errors);
    j["inconclusive_count"] = report.inconclusive_count;
    j["all_true_instances"] = report.all_true_instances;
    j["all_false_instances"] = report.all_false_instances;
    if (include_elapsed) j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

}  // namespace epkit::battery
