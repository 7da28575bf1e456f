// lomlab: command-line front end for the Lawrence oriented matroid toolkit.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lomlab/lomlab.hpp"

namespace {

using lomlab::SignMatrix;
using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

struct MatrixInput {
    std::string path;
    std::vector<int> flip_cols;
    std::vector<int> flip_rows;

    void attach(CLI::App* cmd) {
        cmd->add_option("--matrix", path, "matrix file: r lines of n '+'/'-' characters")->required();
        cmd->add_option("--flip-cols", flip_cols, "comma-separated columns to reorient first")->delimiter(',');
        cmd->add_option("--flip-rows", flip_rows, "comma-separated rows to reorient first")->delimiter(',');
    }

    SignMatrix load() const {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("--matrix: cannot open '" + path + "'");
        SignMatrix a = [&] {
            try {
                return lomlab::parse_matrix(in);
            } catch (const std::exception& e) {
                throw std::runtime_error("--matrix " + path + ": " + e.what());
            }
        }();
        try {
            if (!flip_cols.empty()) a = lomlab::reorient_columns(a, lomlab::LabelSet::from_labels(flip_cols, a.cols()));
        } catch (const lomlab::label_error& e) {
            throw std::runtime_error(std::string("--flip-cols: ") + e.what());
        }
        try {
            if (!flip_rows.empty()) a = lomlab::reorient_rows(a, lomlab::LabelSet::from_labels(flip_rows, a.rows()));
        } catch (const lomlab::label_error& e) {
            throw std::runtime_error(std::string("--flip-rows: ") + e.what());
        }
        return a;
    }
};

std::string rational_string(const lomlab::Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

json labels_json(lomlab::LabelSet s) { return s.labels(); }

void print_survey_text(std::ostream& os, const lomlab::SurveyResult& s) {
    os << "rank: " << s.config.rank << "\n"
       << "elements: " << s.config.elements << "\n"
       << "k: " << s.config.k << "\n"
       << "engine: " << lomlab::to_string(s.config.engine) << "\n"
       << "class_count: " << s.class_count << "\n"
       << "range: " << s.range.lo << ".." << s.range.hi << (s.complete ? "" : " (incomplete)") << "\n"
       << "c: " << s.c.value << " (" << lomlab::to_string(s.c.source) << ")\n"
       << "max_f: " << s.max_f << "\n"
       << "max_f <= c: " << (s.max_f_within_c() ? "yes" : "NO (k-Roudneff violation)") << "\n"
       << "maximizers: " << s.maximizer_count_total << "\n"
       << "maximizers excluding alternating: " << s.maximizer_count_excluding_alternating << "\n"
       << "alternating class f: " << s.alternating_class_f << "\n"
       << "histogram:\n";
    for (const auto& [f, m] : s.histogram) os << "  f=" << f << ": " << m << "\n";
}

std::optional<lomlab::IndexRange> parse_range(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected LO..HI");
    try {
        std::size_t used = 0;
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        lomlab::IndexRange r{std::stoull(lo, &used), 0};
        if (used != lo.size()) throw std::invalid_argument(lo);
        r.hi = std::stoull(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
        return r;
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--range", "expected non-negative integers LO..HI");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lomlab: k-neighborly reorientations of Lawrence oriented matroids"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON")->configurable(false);
    app.fallthrough();

    // travel
    auto* travel = app.add_subcommand("travel", "top (or bottom) travel of a matrix");
    MatrixInput travel_in;
    travel_in.attach(travel);
    bool bottom = false;
    travel->add_flag("--bottom", bottom, "bottom travel instead of top travel");

    // circuits
    auto* circuits = app.add_subcommand("circuits", "signed circuits of M_A");
    MatrixInput circuits_in;
    circuits_in.attach(circuits);

    // fcount
    auto* fcount = app.add_subcommand("fcount", "number of k-neighborly reorientations of M_A");
    MatrixInput fcount_in;
    fcount_in.attach(fcount);
    int fcount_k = 0;
    std::string fcount_engine = "circuits";
    bool with_o = false;
    fcount->add_option("--k", fcount_k, "neighborliness")->required()->check(CLI::NonNegativeNumber);
    fcount->add_option("--engine", fcount_engine, "circuits or travels")->check(CLI::IsMember({"circuits", "travels"}));
    fcount->add_flag("--o-vector", with_o, "also print the o-vector");

    // plain-travels
    auto* plain = app.add_subcommand("plain-travels", "enumerate plain travels");
    std::string plain_matrix;
    std::vector<int> plain_flip_cols, plain_flip_rows;
    int plain_r = 0, plain_n = 0;
    std::optional<int> plain_k;
    plain->add_option("--rank", plain_r, "rows r");
    plain->add_option("--elements", plain_n, "columns n");
    plain->add_option("--matrix", plain_matrix, "matrix file (realizes each travel)");
    plain->add_option("--flip-cols", plain_flip_cols, "comma-separated columns to reorient first")->delimiter(',');
    plain->add_option("--flip-rows", plain_flip_rows, "comma-separated rows to reorient first")->delimiter(',');
    plain->add_option("--k", plain_k, "mark k-neighborly travels (needs --matrix)")->check(CLI::NonNegativeNumber);

    // chessboard
    auto* board = app.add_subcommand("chessboard", "chessboard of a matrix");
    MatrixInput board_in;
    board_in.attach(board);

    // representative
    auto* rep = app.add_subcommand("representative", "canonical matrix of a reorientation class");
    int rep_r = 0, rep_n = 0;
    std::uint64_t rep_index = 0;
    rep->add_option("--rank", rep_r, "rank r")->required();
    rep->add_option("--elements", rep_n, "elements n")->required();
    rep->add_option("--index", rep_index, "class index")->required();

    // formulas
    auto* formulas = app.add_subcommand("formulas", "closed forms and bounds");
    int fr = 0, fn = 0, fk = 0;
    formulas->add_option("--rank", fr, "rank r")->required();
    formulas->add_option("--elements", fn, "elements n")->required();
    formulas->add_option("--k", fk, "neighborliness k")->required()->check(CLI::NonNegativeNumber);

    // survey
    auto* survey = app.add_subcommand("survey", "f over every reorientation class");
    lomlab::SurveyConfig scfg;
    std::string s_engine = "circuits";
    std::string s_checkpoint, s_out, s_range;
    survey->add_option("--rank", scfg.rank, "rank r")->required();
    survey->add_option("--elements", scfg.elements, "elements n")->required();
    survey->add_option("--k", scfg.k, "neighborliness k")->required()->check(CLI::NonNegativeNumber);
    survey->add_option("--engine", s_engine, "circuits or travels")->check(CLI::IsMember({"circuits", "travels"}));
    survey->add_option("--threads", scfg.threads, "worker threads")->check(CLI::PositiveNumber);
    survey->add_option("--chunk-size", scfg.chunk_size, "class indices per work unit")->check(CLI::PositiveNumber);
    survey->add_option("--checkpoint", s_checkpoint, "checkpoint file (resumed if present)");
    survey->add_option("--out", s_out, "write result JSON here");
    survey->add_option("--range", s_range, "class indices LO..HI (half-open)");
    survey->add_option("--crosscheck-stride", scfg.crosscheck_stride, "recheck every n-th class with the other engine");

    // verify
    auto* verify = app.add_subcommand("verify", "run a preset and check its expected maximizer counts");
    std::string case_name;
    int v_threads = 1;
    verify->add_option("--case", case_name, "preset name")->required();
    verify->add_option("--threads", v_threads, "worker threads")->check(CLI::PositiveNumber);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "compare engines (or check the minor recursion) on sampled classes");
    int cr = 0, cn = 0, ck = 0;
    std::uint64_t samples = 100, seed = 1;
    bool minors = false;
    cross->add_option("--rank", cr, "rank r")->required();
    cross->add_option("--elements", cn, "elements n")->required();
    cross->add_option("--k", ck, "neighborliness k")->required()->check(CLI::NonNegativeNumber);
    cross->add_option("--samples", samples, "number of sampled classes (all if >= class count)");
    cross->add_option("--seed", seed, "sampling seed");
    cross->add_flag("--minor-recursion", minors, "check f(M) <= f(M/e) + f(M\\e) instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    std::ostream& out = std::cout;
    try {
        if (*travel) {
            const SignMatrix a = travel_in.load();
            const auto t = bottom ? lomlab::bottom_travel(a) : lomlab::top_travel(a);
            if (as_json) {
                json path = json::array();
                for (const auto& p : t.path) {
                    path.push_back({{"row", p.row}, {"col", p.col}, {"sign", std::string(1, lomlab::to_char(a.get(p.row, p.col)))}});
                }
                out << json{{"kind", bottom ? "bottom" : "top"}, {"path", path}, {"drop_columns", t.drop_columns},
                            {"positive", t.positive}}
                           .dump(2)
                    << "\n";
            } else {
                out << lomlab::format_travel(a, t);
            }
        } else if (*circuits) {
            const SignMatrix a = circuits_in.load();
            const auto cs = lomlab::all_circuits(a);
            if (as_json) {
                json arr = json::array();
                for (const auto& c : cs) arr.push_back({{"support", c.support}, {"signs", c.sign_string()}});
                out << json{{"rank", a.rows()}, {"elements", a.cols()}, {"circuits", arr}}.dump(2) << "\n";
            } else {
                for (const auto& c : cs) out << lomlab::format_labels(c.support_set()) << " " << c.sign_string() << "\n";
            }
        } else if (*fcount) {
            const SignMatrix a = fcount_in.load();
            const auto engine = *lomlab::parse_engine(fcount_engine);
            const std::uint64_t f = lomlab::f_count(a, fcount_k, engine);
            std::vector<std::uint64_t> o;
            if (with_o) o = lomlab::o_vector(a);
            if (as_json) {
                json j{{"rank", a.rows()}, {"elements", a.cols()}, {"k", fcount_k}, {"engine", fcount_engine}, {"f", f}};
                if (with_o) j["o_vector"] = o;
                out << j.dump(2) << "\n";
            } else {
                out << "f = " << f << "\n";
                if (with_o) {
                    out << "o =";
                    for (auto v : o) out << " " << v;
                    out << "\n";
                }
            }
        } else if (*plain) {
            std::optional<SignMatrix> a;
            if (!plain_matrix.empty()) {
                MatrixInput in{plain_matrix, plain_flip_cols, plain_flip_rows};
                a = in.load();
                plain_r = a->rows();
                plain_n = a->cols();
            } else if (plain_r == 0 || plain_n == 0) {
                throw CLI::ValidationError("plain-travels", "give --matrix or both --rank and --elements");
            }
            if (plain_k && !a) throw CLI::ValidationError("--k", "requires --matrix");
            const auto travels = lomlab::enumerate_plain_travels(plain_r, plain_n);
            std::uint64_t neighborly = 0;
            json arr = json::array();
            for (const auto& p : travels) {
                lomlab::LabelSet drops = lomlab::LabelSet::from_labels(p.drops, plain_n);
                std::string line = "drops " + lomlab::format_labels(drops);
                json item{{"drops", p.drops}};
                if (a) {
                    const auto [m, r] = lomlab::realize_plain_travel(*a, p);
                    line += " R=" + lomlab::format_labels(r);
                    item["reorientation"] = labels_json(r);
                    if (plain_k) {
                        const bool ok = lomlab::is_k_neighborly_matrix(m, *plain_k);
                        neighborly += ok ? 1 : 0;
                        line += ok ? " k-neighborly" : "";
                        item["k_neighborly"] = ok;
                    }
                }
                if (as_json) {
                    arr.push_back(item);
                } else {
                    out << line << "\n";
                }
            }
            if (as_json) {
                json j{{"rank", plain_r}, {"elements", plain_n}, {"total", travels.size()}, {"travels", arr}};
                if (plain_k) {
                    j["k"] = *plain_k;
                    j["k_neighborly"] = neighborly;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "total: " << travels.size() << "\n";
                if (plain_k) out << "k-neighborly: " << neighborly << "\n";
            }
        } else if (*board) {
            const SignMatrix a = board_in.load();
            const auto b = lomlab::chessboard_of(a);
            const std::string text = lomlab::format_chessboard(b, a.rows(), a.cols());
            if (as_json) {
                json rows = json::array();
                std::istringstream lines(text);
                for (std::string l; std::getline(lines, l);) rows.push_back(l);
                json j{{"rows", rows}};
                if (a.cols() >= a.rows() + 1) j["class_index"] = lomlab::index_of_chessboard(b, a.rows(), a.cols()).value;
                out << j.dump(2) << "\n";
            } else {
                out << text;
            }
        } else if (*rep) {
            const SignMatrix a = lomlab::representative_of_index(rep_r, rep_n, {rep_index});
            if (as_json) {
                json rows = json::array();
                std::istringstream lines(lomlab::format_matrix(a));
                for (std::string l; std::getline(lines, l);) rows.push_back(l);
                out << json{{"rank", rep_r}, {"elements", rep_n}, {"index", rep_index}, {"matrix", rows}}.dump(2) << "\n";
            } else {
                out << lomlab::format_matrix(a);
            }
        } else if (*formulas) {
            json j{{"rank", fr}, {"elements", fn}, {"k", fk}};
            std::ostringstream text;
            if (fr >= 2 * fk + 1 && fn >= fr + 1) {
                const auto c = lomlab::c_value(fr, fn, fk);
                j["c"] = {{"value", c.value}, {"source", std::string(lomlab::to_string(c.source))}};
                text << "c = " << c.value << " (" << lomlab::to_string(c.source) << ")\n";
            } else {
                j["c"] = nullptr;
                text << "c = n/a\n";
            }
            if (fr >= 2 && fn >= fr) {
                j["total_plain_travels"] = lomlab::total_plain_travels(fr, fn);
                text << "total plain travels = " << lomlab::total_plain_travels(fr, fn) << "\n";
            }
            if (fn >= fr + 1 && (fn - fr - 1) * (fr - 1) < 64) {
                j["class_count"] = lomlab::class_count(fr, fn);
                text << "class count = " << lomlab::class_count(fr, fn) << "\n";
            }
            if (fk >= 1 && fr >= 2 * fk + 1 && fn >= 2 * fr - 1) {
                j["lom_upper_bound"] = lomlab::lom_upper_bound(fr, fn, fk);
                text << "LOM upper bound = " << lomlab::lom_upper_bound(fr, fn, fk) << "\n";
            } else {
                j["lom_upper_bound"] = nullptr;
                text << "LOM upper bound = n/a\n";
            }
            if (fk >= 1 && fr >= 2 * fk + 2 && fn >= fr) {
                j["F"] = rational_string(lomlab::asymptotic_F(fr, fn, fk));
                text << "F = " << rational_string(lomlab::asymptotic_F(fr, fn, fk)) << "\n";
            } else {
                j["F"] = nullptr;
                text << "F = n/a\n";
            }
            out << (as_json ? j.dump(2) + "\n" : text.str());
        } else if (*survey) {
            scfg.engine = *lomlab::parse_engine(s_engine);
            if (!s_checkpoint.empty()) scfg.checkpoint = s_checkpoint;
            scfg.range = parse_range(s_range);
            if (scfg.range && scfg.elements >= scfg.rank + 1 && scfg.rank >= 1) {
                const std::uint64_t count = lomlab::class_count(scfg.rank, scfg.elements);
                if (scfg.range->lo >= scfg.range->hi || scfg.range->hi > count) {
                    throw CLI::ValidationError("--range", "need LO < HI <= " + std::to_string(count));
                }
            }
            const auto res = lomlab::run_survey(scfg);
            if (!s_out.empty()) {
                std::ofstream f(s_out);
                if (!f) throw std::runtime_error("--out: cannot write '" + s_out + "'");
                f << lomlab::to_json(res).dump(2) << "\n";
            }
            if (as_json) {
                out << lomlab::to_json(res).dump(2) << "\n";
            } else {
                print_survey_text(out, res);
            }
            if (!res.max_f_within_c()) return exit_failed;
        } else if (*verify) {
            const auto* preset = lomlab::find_preset(case_name);
            if (!preset) {
                std::string names;
                for (const auto& p : lomlab::presets()) names += " " + p.name;
                std::cerr << "--case: unknown preset '" << case_name << "'; known:" << names << "\n";
                return exit_usage;
            }
            const auto report = lomlab::verify_case(*preset, v_threads);
            if (as_json) {
                out << lomlab::to_json(report).dump(2) << "\n";
            } else {
                out << "case " << report.preset << "\n";
                for (const auto& a : report.assertions) {
                    out << (a.pass ? "PASS " : "FAIL ") << a.name << ": expected " << a.expected << ", got " << a.actual << "\n";
                }
                out << (report.pass() ? "verify: pass" : "verify: FAIL") << "\n";
            }
            return report.pass() ? exit_ok : exit_failed;
        } else if (*cross) {
            if (minors) {
                const auto report = lomlab::minor_recursion_check(cr, cn, ck, samples, seed);
                if (as_json) {
                    json v = json::array();
                    for (const auto& x : report.violations) {
                        v.push_back({{"index", x.index}, {"element", x.element}, {"f", x.f},
                                     {"f_contraction", x.f_contraction}, {"f_deletion", x.f_deletion}});
                    }
                    out << json{{"checked", report.checked}, {"violations", v}, {"pass", report.pass()}}.dump(2) << "\n";
                } else {
                    for (const auto& x : report.violations) {
                        out << "violation: class " << x.index << " element " << x.element << ": " << x.f << " > "
                            << x.f_contraction << " + " << x.f_deletion << "\n";
                    }
                    out << "checked " << report.checked << " (class, element) pairs, " << report.violations.size()
                        << " violations\n";
                }
                return report.pass() ? exit_ok : exit_failed;
            }
            const auto report = lomlab::engine_crosscheck(cr, cn, ck, samples, seed);
            if (as_json) {
                json m = json::array();
                for (const auto& x : report.mismatches) {
                    m.push_back({{"index", x.index}, {"f_circuits", x.f_circuits}, {"f_travels", x.f_travels}});
                }
                out << json{{"checked", report.checked}, {"mismatches", m}, {"pass", report.pass()}}.dump(2) << "\n";
            } else {
                for (const auto& x : report.mismatches) {
                    out << "mismatch: class " << x.index << ": circuits " << x.f_circuits << ", travels " << x.f_travels << "\n";
                }
                out << "checked " << report.checked << " classes, " << report.mismatches.size() << " mismatches\n";
            }
            return report.pass() ? exit_ok : exit_failed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "lomlab: " << e.what() << "\n";
        return exit_usage;
    } catch (const lomlab::engine_mismatch& e) {
        std::cerr << "lomlab: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        std::cerr << "lomlab: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
