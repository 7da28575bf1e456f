#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "lomlab/chessboard.hpp"
#include "lomlab/chirotope.hpp"
#include "lomlab/engine.hpp"
#include "lomlab/formulas.hpp"

namespace lomlab {

/// Refusal to resume from a checkpoint written for a different survey.
class checkpoint_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two engines disagreed on some class during a sampled cross-check.
class engine_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Half-open range [lo, hi) of class indices.
struct IndexRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(IndexRange, IndexRange) = default;
};

struct SurveyConfig {
    int rank = 0;
    int elements = 0;
    int k = 0;
    Engine engine = Engine::circuits;
    int threads = 1;
    std::uint64_t chunk_size = 4096;
    std::optional<std::filesystem::path> checkpoint;
    std::optional<IndexRange> range;
    /// Recompute every n-th class index with the other engine (0 disables).
    std::uint64_t crosscheck_stride = 0;
    /// Minimum seconds between checkpoint writes; the final state is always written.
    double checkpoint_interval = 5.0;
    /// Stop after this many chunks have been processed in this run (testing resume).
    std::optional<std::uint64_t> max_chunks;
};

struct SurveyResult {
    SurveyConfig config;
    std::uint64_t class_count = 0;
    IndexRange range;
    CValue c;
    std::uint64_t max_f = 0;
    std::uint64_t maximizer_count_total = 0;
    std::uint64_t maximizer_count_excluding_alternating = 0;
    std::uint64_t alternating_class_f = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // f -> number of classes
    double elapsed_seconds = 0.0;
    bool complete = true;

    std::uint64_t classes_surveyed() const {
        std::uint64_t s = 0;
        for (const auto& [f, m] : histogram) s += m;
        return s;
    }
    /// k-Roudneff direction: no class exceeds the alternating matroid.
    bool max_f_within_c() const { return c.source == CValue::Source::unknown || max_f <= c.value; }
};

namespace detail {

inline void validate(const SurveyConfig& cfg) {
    if (cfg.rank < 1 || cfg.elements < cfg.rank + 1) throw dimension_error("survey needs n >= r+1");
    if (cfg.k < 0) throw std::invalid_argument("k must be non-negative");
    if (cfg.chunk_size < 1) throw std::invalid_argument("chunk size must be at least 1");
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be at least 1");
    const std::uint64_t count = class_count(cfg.rank, cfg.elements);
    if (cfg.range && (cfg.range->lo >= cfg.range->hi || cfg.range->hi > count)) {
        throw std::out_of_range("index range must satisfy lo < hi <= " + std::to_string(count));
    }
}

inline std::uint64_t survey_f(int r, int n, int k, Engine engine, std::uint64_t index) {
    return f_count(representative_of_index(r, n, {index}), k, engine);
}

inline nlohmann::ordered_json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [f, m] : h) arr.push_back({{"f", f}, {"classes", m}});
    return arr;
}

inline std::map<std::uint64_t, std::uint64_t> histogram_from_json(const nlohmann::json& arr) {
    std::map<std::uint64_t, std::uint64_t> h;
    for (const auto& e : arr) h[e.at("f").get<std::uint64_t>()] += e.at("classes").get<std::uint64_t>();
    return h;
}

inline nlohmann::ordered_json checkpoint_meta(const SurveyConfig& cfg, IndexRange range) {
    return {{"rank", cfg.rank},
            {"elements", cfg.elements},
            {"k", cfg.k},
            {"engine", std::string(to_string(cfg.engine))},
            {"chunk_size", cfg.chunk_size},
            {"encoding_version", encoding_version},
            {"range", {range.lo, range.hi}}};
}

struct CheckpointState {
    std::set<std::uint64_t> completed;
    std::map<std::uint64_t, std::uint64_t> histogram;
};

inline void write_checkpoint(const std::filesystem::path& path, const SurveyConfig& cfg, IndexRange range,
                             const CheckpointState& st) {
    nlohmann::ordered_json j;
    j["meta"] = checkpoint_meta(cfg, range);
    j["completed_chunks"] = std::vector<std::uint64_t>(st.completed.begin(), st.completed.end());
    j["partial_histogram"] = histogram_json(st.histogram);
    std::uint64_t max_f = 0, max_count = 0;
    if (!st.histogram.empty()) {
        max_f = st.histogram.rbegin()->first;
        max_count = st.histogram.rbegin()->second;
    }
    j["partial_max"] = {{"max_f", max_f}, {"classes", max_count}};
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << j.dump(1) << '\n';
        if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline CheckpointState read_checkpoint(const std::filesystem::path& path, const SurveyConfig& cfg, IndexRange range,
                                       std::uint64_t chunk_total) {
    std::ifstream in(path);
    if (!in) throw checkpoint_error("cannot read checkpoint " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw checkpoint_error("malformed checkpoint " + path.string() + ": " + e.what());
    }
    const nlohmann::json expected = checkpoint_meta(cfg, range);
    if (!j.contains("meta") || j["meta"] != expected) {
        throw checkpoint_error("checkpoint " + path.string() + " was written for a different survey: " +
                               (j.contains("meta") ? j["meta"].dump() : std::string("no meta")) + " vs " +
                               expected.dump());
    }
    CheckpointState st;
    for (const auto& id : j.at("completed_chunks")) {
        const auto v = id.get<std::uint64_t>();
        if (v >= chunk_total) throw checkpoint_error("checkpoint chunk id " + std::to_string(v) + " out of range");
        st.completed.insert(v);
    }
    st.histogram = histogram_from_json(j.at("partial_histogram"));
    return st;
}

}  // namespace detail

/// Computes f for every class index in range and aggregates the histogram. Results are
/// independent of thread count, chunk size and resume history.
inline SurveyResult run_survey(const SurveyConfig& cfg) {
    detail::validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    const int r = cfg.rank;
    const int n = cfg.elements;
    const int k = cfg.k;

    SurveyResult res;
    res.config = cfg;
    res.class_count = class_count(r, n);
    res.range = cfg.range.value_or(IndexRange{0, res.class_count});
    if (r >= 2 * k + 1) res.c = c_value(r, n, k, cfg.engine);
    res.alternating_class_f = detail::survey_f(r, n, k, cfg.engine, 0);

    const std::uint64_t cs = cfg.chunk_size;
    const std::uint64_t chunk_total = (res.class_count + cs - 1) / cs;
    const std::uint64_t first_chunk = res.range.lo / cs;
    const std::uint64_t last_chunk = (res.range.hi - 1) / cs;

    detail::CheckpointState state;
    if (cfg.checkpoint && std::filesystem::exists(*cfg.checkpoint)) {
        state = detail::read_checkpoint(*cfg.checkpoint, cfg, res.range, chunk_total);
    }
    std::vector<std::uint64_t> pending;
    for (std::uint64_t id = first_chunk; id <= last_chunk; ++id) {
        if (!state.completed.count(id)) pending.push_back(id);
    }
    if (cfg.max_chunks && pending.size() > *cfg.max_chunks) {
        pending.resize(*cfg.max_chunks);
        res.complete = false;
    }

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    auto last_write = std::chrono::steady_clock::now();

    auto worker = [&] {
        try {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t slot = next.fetch_add(1);
                if (slot >= pending.size()) return;
                const std::uint64_t id = pending[slot];
                const std::uint64_t lo = std::max(res.range.lo, id * cs);
                const std::uint64_t hi = std::min(res.range.hi, (id + 1) * cs);
                std::map<std::uint64_t, std::uint64_t> local;
                for (std::uint64_t c = lo; c < hi; ++c) {
                    const std::uint64_t f = detail::survey_f(r, n, k, cfg.engine, c);
                    if (cfg.crosscheck_stride != 0 && c % cfg.crosscheck_stride == 0) {
                        const Engine other = cfg.engine == Engine::circuits ? Engine::travels : Engine::circuits;
                        const std::uint64_t g = detail::survey_f(r, n, k, other, c);
                        if (f != g) {
                            throw engine_mismatch("engines disagree at class " + std::to_string(c) + ": " +
                                                  std::to_string(f) + " vs " + std::to_string(g));
                        }
                    }
                    ++local[f];
                }
                std::lock_guard lock(mu);
                for (const auto& [f, m] : local) state.histogram[f] += m;
                state.completed.insert(id);
                if (cfg.checkpoint) {
                    const auto now = std::chrono::steady_clock::now();
                    if (std::chrono::duration<double>(now - last_write).count() >= cfg.checkpoint_interval) {
                        detail::write_checkpoint(*cfg.checkpoint, cfg, res.range, state);
                        last_write = now;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
            failed = true;
        }
    };

    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg.threads),
                                                               std::max<std::size_t>(pending.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);
    if (cfg.checkpoint) detail::write_checkpoint(*cfg.checkpoint, cfg, res.range, state);

    res.histogram = std::move(state.histogram);
    if (!res.histogram.empty()) {
        res.max_f = res.histogram.rbegin()->first;
        res.maximizer_count_total = res.histogram.rbegin()->second;
    }
    const bool alternating_in = res.range.lo == 0 && state.completed.count(0) != 0;
    res.maximizer_count_excluding_alternating =
        res.maximizer_count_total - ((alternating_in && res.alternating_class_f == res.max_f) ? 1 : 0);
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

/// Stable JSON rendering of a survey result; only elapsed_seconds varies between runs.
inline nlohmann::ordered_json to_json(const SurveyResult& res) {
    nlohmann::ordered_json j;
    j["rank"] = res.config.rank;
    j["elements"] = res.config.elements;
    j["k"] = res.config.k;
    j["engine"] = std::string(to_string(res.config.engine));
    j["class_count"] = res.class_count;
    j["range"] = {res.range.lo, res.range.hi};
    j["complete"] = res.complete;
    j["c_value"] = res.c.value;
    j["c_source"] = std::string(to_string(res.c.source));
    j["max_f"] = res.max_f;
    j["max_f_within_c"] = res.max_f_within_c();
    j["maximizer_count_total"] = res.maximizer_count_total;
    j["maximizer_count_excluding_alternating"] = res.maximizer_count_excluding_alternating;
    j["alternating_class_f"] = res.alternating_class_f;
    j["histogram"] = detail::histogram_json(res.histogram);
    j["elapsed_seconds"] = res.elapsed_seconds;
    j["encoding_version"] = encoding_version;
    return j;
}

// ---------------------------------------------------------------------------
// Presets reproducing the computer-verified maximizer counts.

struct Preset {
    std::string name;
    int rank;
    int elements;
    int k;
    /// Expected number of non-alternating classes attaining c, when the preset asserts one.
    std::optional<std::uint64_t> maximizers_excluding_alternating;
    /// Presets whose cost makes them opt-in.
    bool long_running = false;
};

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        {"r3n5k1", 3, 5, 1, std::nullopt, false},
        {"r4n8k1", 4, 8, 1, std::nullopt, false},
        {"r7n11k2", 7, 11, 2, 255, false},
        {"r8n11k2", 8, 11, 2, 255, false},
        {"r8n11k3", 8, 11, 3, 251, false},
        {"r9n12k2", 9, 12, 2, 511, false},
        {"r9n12k3", 9, 12, 3, 511, false},
        {"r8n12k2", 8, 12, 2, 511, true},
        {"r8n12k3", 8, 12, 3, 511, true},
        {"r9n13k3", 9, 13, 3, 1023, true},
    };
    return table;
}

inline const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

struct Assertion {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::string preset;
    SurveyResult survey;
    std::vector<Assertion> assertions;
    bool pass() const {
        return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
    }
};

/// Runs the preset's survey and checks its expectations; failures are reported, not thrown.
inline VerifyReport verify_case(const Preset& p, int threads = 1) {
    SurveyConfig cfg;
    cfg.rank = p.rank;
    cfg.elements = p.elements;
    cfg.k = p.k;
    cfg.threads = threads;
    VerifyReport rep;
    rep.preset = p.name;
    rep.survey = run_survey(cfg);
    const auto& s = rep.survey;
    auto eq = [&](std::string name, std::uint64_t expected, std::uint64_t actual) {
        rep.assertions.push_back({std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
    };
    auto le = [&](std::string name, std::uint64_t bound, std::uint64_t actual) {
        rep.assertions.push_back({std::move(name), "<= " + std::to_string(bound), std::to_string(actual), actual <= bound});
    };
    le("max_f <= c", s.c.value, s.max_f);
    eq("alternating_class_f = c", s.c.value, s.alternating_class_f);
    if (p.name == "r3n5k1") eq("max_f", 2, s.max_f);
    if (p.name == "r4n8k1") le("max_f <= 2n", 2 * static_cast<std::uint64_t>(p.elements), s.max_f);
    if (p.maximizers_excluding_alternating) {
        eq("max_f = c", s.c.value, s.max_f);
        eq("maximizers excluding alternating", *p.maximizers_excluding_alternating,
           s.maximizer_count_excluding_alternating);
    }
    if (p.name == "r7n11k2") eq("max_f", 112, s.max_f);
    return rep;
}

inline nlohmann::ordered_json to_json(const VerifyReport& rep) {
    nlohmann::ordered_json j;
    j["case"] = rep.preset;
    j["pass"] = rep.pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : rep.assertions) {
        arr.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
    }
    j["assertions"] = arr;
    j["survey"] = to_json(rep.survey);
    return j;
}

// ---------------------------------------------------------------------------
// Sampled checks over class representatives.

/// Deterministic sample of class indices; every index when sample_size covers the class count.
inline std::vector<std::uint64_t> sample_classes(int r, int n, std::uint64_t sample_size, std::uint64_t seed) {
    const std::uint64_t count = class_count(r, n);
    std::vector<std::uint64_t> out;
    if (sample_size >= count) {
        for (std::uint64_t c = 0; c < count; ++c) out.push_back(c);
        return out;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < sample_size; ++i) out.push_back(rng() % count);
    return out;
}

struct CrosscheckMismatch {
    std::uint64_t index;
    std::uint64_t f_circuits;
    std::uint64_t f_travels;
};

struct CrosscheckReport {
    std::uint64_t checked = 0;
    std::vector<CrosscheckMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Circuit-engine f against travel-engine f on sampled classes.
inline CrosscheckReport engine_crosscheck(int r, int n, int k, std::uint64_t sample_size, std::uint64_t seed) {
    if (n < r + 1) throw dimension_error("cross-check needs n >= r+1");
    CrosscheckReport rep;
    for (std::uint64_t c : sample_classes(r, n, sample_size, seed)) {
        const SignMatrix a = representative_of_index(r, n, {c});
        const std::uint64_t fc = count_k_neighborly_reorientations(a, k);
        const std::uint64_t ft = f_via_travels(a, k);
        ++rep.checked;
        if (fc != ft) rep.mismatches.push_back({c, fc, ft});
    }
    return rep;
}

struct MinorViolation {
    std::uint64_t index;
    int element;
    std::uint64_t f;
    std::uint64_t f_contraction;
    std::uint64_t f_deletion;
};

struct MinorReport {
    std::uint64_t checked = 0;
    std::vector<MinorViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// f(M) <= f(M/e) + f(M\e) for every element of every sampled class, on chirotopes.
inline MinorReport minor_recursion_check(int r, int n, int k, std::uint64_t sample_size, std::uint64_t seed) {
    if (r < 3 || n < r + 2) throw dimension_error("minor recursion check needs r >= 3 and n >= r+2");
    MinorReport rep;
    for (std::uint64_t c : sample_classes(r, n, sample_size, seed)) {
        const ChirotopeTable t = chirotope_from_matrix(representative_of_index(r, n, {c}));
        const std::uint64_t f = count_k_neighborly_reorientations_chirotope(t, k);
        for (int e = 1; e <= n; ++e) {
            const std::uint64_t fc = count_k_neighborly_reorientations_chirotope(contract_element(t, e), k);
            const std::uint64_t fd = count_k_neighborly_reorientations_chirotope(delete_element(t, e), k);
            ++rep.checked;
            if (f > fc + fd) rep.violations.push_back({c, e, f, fc, fd});
        }
    }
    return rep;
}

}  // namespace lomlab
