#include "hfgrowth/cli.hpp"

#include "hfgrowth/binomial_calculus.hpp"
#include "hfgrowth/constructions.hpp"
#include "hfgrowth/growth_classifier.hpp"
#include "hfgrowth/io.hpp"
#include "hfgrowth/plane_finder.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace hfg {

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::hypothesis_fail: return "hypothesis_fail";
        case Status::alarm: return "alarm";
        case Status::error: return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::error: return 1;
        case Status::hypothesis_fail: return 2;
        case Status::alarm: return 3;
    }
    return 1;
}

namespace {

void render(std::ostringstream& os, const nlohmann::json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const nlohmann::json& v = it.value();
        const bool nested = v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured());
        os << pad << it.key() << ":";
        if (!nested) {
            os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else if (v.is_object()) {
            os << "\n";
            render(os, v, indent + 2);
        } else {
            os << "\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    std::ostringstream inner;
                    render(inner, item, indent + 4);
                    std::string s = inner.str();
                    s.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
                    os << s;
                } else {
                    os << pad << "  - " << item.dump() << "\n";
                }
            }
        }
    }
}

std::string render_text(const nlohmann::json& j) {
    std::ostringstream os;
    render(os, j, 0);
    return os.str();
}

// Runs f(0..count-1) on up to jobs threads; output order is by index.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(count);
    const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    pool.clear();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

nlohmann::json degree_table(int first, const std::vector<long>& values) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i) a.push_back({{"degree", first + static_cast<int>(i)}, {"value", values[i]}});
    return a;
}

std::string join(const std::vector<long>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    int jobs = 1;

    long k = 0;
    long i = 0;
    long dmax = 0;
    std::vector<long> values;

    std::string mode;
    std::string file;
    std::optional<int> n;
    std::optional<long> kk;
    std::optional<int> window;

    std::string recipe;
    std::vector<long> params;
    std::string out;
};

class Runner {
public:
    Runner(const Options& o, std::istream& in) : o_(o), in_(in) {}

    CommandResult expand() {
        BinomialExpansion e = macaulay_expand(o_.k, static_cast<int>(o_.i));
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : e.terms) terms.push_back({{"top", t.top}, {"bottom", t.bottom}});
        return simple({{"k", o_.k}, {"i", o_.i}, {"terms", terms}, {"expansion", e.to_string()}},
                      std::to_string(o_.k) + " = " + e.to_string());
    }

    CommandResult bound() {
        const long b = macaulay_bound(o_.k, static_cast<int>(o_.i));
        return simple({{"k", o_.k}, {"i", o_.i}, {"macaulay_bound", b}}, std::to_string(b));
    }

    CommandResult green() {
        const long b = green_bound(o_.k, static_cast<int>(o_.i));
        return simple({{"k", o_.k}, {"i", o_.i}, {"green_bound", b}}, std::to_string(b));
    }

    CommandResult mg() {
        const long d = mg_dimension(o_.k, static_cast<int>(o_.i));
        return simple({{"k", o_.k}, {"n", o_.i}, {"mg_dimension", d}}, std::to_string(d));
    }

    CommandResult persist() {
        const int n = static_cast<int>(o_.i);
        std::vector<long> vals = gotzmann_values(o_.k, n, static_cast<int>(o_.dmax));
        const std::string poly = polynomial_string(gotzmann_polynomial(o_.k, n));
        return simple({{"k", o_.k}, {"n", n}, {"values", degree_table(n, vals)}, {"polynomial", poly}},
                      join(vals) + "\n" + poly);
    }

    CommandResult oseq() {
        OSequenceCheck c = is_o_sequence(HVector{o_.values});
        nlohmann::json p = {{"values", o_.values}, {"o_sequence", c.ok}};
        p["failure_index"] = c.failure ? nlohmann::json(*c.failure) : nlohmann::json(nullptr);
        return simple(p, c.ok ? "true" : "false (fails at index " + std::to_string(*c.failure) + ")");
    }

    CommandResult ideal() {
        std::istringstream src(read_source(o_.file, in_));
        IdealInput input = read_ideal(src);
        const int n = need_n();
        nlohmann::json p = {{"command", "ideal " + o_.mode}, {"n", n}};
        CommandResult r;
        if (o_.mode == "hf") {
            std::vector<long> hf;
            if (input.monomial) {
                hf = parallel_map<long>(static_cast<std::size_t>(n) + 1, o_.jobs, [&](std::size_t d) {
                    return monomial_hilbert_function(*input.monomial, static_cast<int>(d));
                });
            } else {
                hf = hilbert_function(input.span(n));
            }
            p["hilbert_function"] = degree_table(0, hf);
            r = finish(p, join(hf));
        } else if (o_.mode == "baselocus") {
            GradedSpan span = input.span(n);
            BaseLocusProfile prof = base_locus_profile(span, n, o_.window);
            p["profile"] = to_json(prof);
            r = finish(p, render_text(p));
        } else {
            GradedSpan span = input.span(n + 1);
            HVector h{hilbert_function(span)};
            GrowthReport rep = classify(h, n);
            BaseLocusProfile prof = base_locus_profile(span, n, o_.window);
            PredictionCheck check = verify_prediction(prof, rep);
            ColonTable table = colon_table(span, n, o_.seed);
            p["hilbert_function"] = h.values;
            p["report"] = to_json(rep);
            p["profile"] = to_json(prof);
            p["prediction"] = to_json(check);
            p["colon_table"] = to_json(table);
            r = finish(p, render_text(p));
            if (check.verdict == Verdict::alarm || !table.exact || !table.green_ok || !table.macaulay_ok)
                r.status = Status::alarm;
        }
        return r;
    }

    CommandResult points() {
        std::istringstream src(read_source(o_.file, in_));
        PointSet z = read_points(src);
        nlohmann::json p = {{"command", "points " + o_.mode}, {"points", z.size()}, {"ambient", z.ambient_dim()}};
        if (o_.mode == "hf") {
            const int top = o_.n ? *o_.n : static_cast<int>(h_vector(z).size());
            std::vector<long> hf = parallel_map<long>(static_cast<std::size_t>(top) + 1, o_.jobs, [&](std::size_t d) {
                return hf_points(z, static_cast<int>(d));
            });
            p["hilbert_function"] = degree_table(0, hf);
            return finish(p, join(hf));
        }
        HVector h = h_vector(z);
        if (o_.mode == "hvector") {
            p["h_vector"] = h.values;
            return finish(p, join(h.values));
        }
        const int n = need_n();
        const long k = o_.kk.value_or(h[static_cast<std::size_t>(n)]);
        p["n"] = n;
        p["h_vector"] = h.values;
        if (o_.mode == "classify") {
            HVector padded = h;
            padded.values.resize(std::max(padded.size(), static_cast<std::size_t>(n) + 2), 0);
            GrowthReport rep = classify(padded, n);
            ArtinianReduction red = artinian_reduction(z, o_.seed, std::max(n + 2, static_cast<int>(h.size()) + 1));
            BaseLocusProfile prof = base_locus_profile(red.components, n, o_.window);
            PredictionCheck check = verify_prediction(prof, rep);
            ColonTable table = colon_table(red, n, o_.seed);
            p["report"] = to_json(rep);
            p["profile"] = to_json(prof);
            p["prediction"] = to_json(check);
            p["colon_table"] = to_json(table);
            CommandResult r = finish(p, render_text(p));
            if (check.verdict == Verdict::alarm || !table.exact || !table.green_ok || !table.macaulay_ok)
                r.status = Status::alarm;
            return r;
        }
        p["k"] = k;
        if (o_.mode == "davis") {
            DavisDecomposition d = davis_decompose(z, n, static_cast<int>(k));
            p["decomposition"] = to_json(d);
            CommandResult r = finish(p, render_text(p));
            if (!d.alarms.empty()) r.status = Status::alarm;
            return r;
        }
        PlaneCertificate c = find_plane(z, n, static_cast<int>(k), o_.seed);
        p["certificate"] = to_json(c);
        CommandResult r = finish(p, render_text(p));
        if (!c.alarms.empty()) r.status = Status::alarm;
        return r;
    }

    CommandResult construct() {
        const auto& a = o_.params;
        auto want = [&](std::size_t count, const char* usage) {
            if (a.size() != count) throw Error(std::string("usage: construct ") + usage);
        };
        auto arg = [&](std::size_t i) { return static_cast<int>(a[i]); };
        std::ostringstream data;
        data << "# hfgrowth construct " << o_.recipe;
        for (long x : a) data << " " << x;
        data << " --seed " << o_.seed << "\n";
        nlohmann::json recipe;
        if (o_.recipe == "growth21") {
            want(1, "growth21 WHICH");
            const int which = arg(0);
            GradedSpan j = growth21_ideal(which, o_.seed, 9);
            std::vector<Form> gens;
            for (int d = 1; d <= 9; ++d)
                for (Form& f : minimal_generators(j, d)) gens.push_back(std::move(f));
            if (which <= 3) {
                std::vector<Exponent> mons;
                for (const Form& f : gens) mons.push_back(f.leading_exponent());
                write_monomial_ideal(data, MonomialIdeal(3, std::move(mons)));
            } else {
                write_forms(data, 3, gens);
            }
            recipe = {{"name", "growth21"}, {"parameters", {{"which", which}}}, {"seed", o_.seed},
                      {"expected_hilbert_function", {{"6", 21}, {"7", 23}}}};
        } else if (o_.recipe == "general") {
            want(2, "general M R");
            PointSet z = general_points(arg(0), arg(1), o_.seed);
            write_points(data, z);
            recipe = {{"name", "general"}, {"parameters", {{"m", a[0]}, {"r", a[1]}}}, {"seed", o_.seed},
                      {"expected_h_vector", h_vector(z).values}};
        } else {
            Construction c = [&] {
                if (o_.recipe == "curvebase") {
                    want(4, "curvebase D K N R");
                    return build_curve_base_locus(arg(0), arg(1), arg(2), arg(3), o_.seed);
                }
                if (o_.recipe == "planeregime") {
                    want(3, "planeregime K N R");
                    return build_plane_regime(arg(0), arg(1), arg(2), o_.seed);
                }
                throw Error("unknown recipe '" + o_.recipe + "' (growth21, curvebase, planeregime, general)");
            }();
            write_points(data, c.points);
            recipe = to_json(c.recipe);
        }
        nlohmann::json p = {{"command", "construct " + o_.recipe}, {"recipe", recipe}};
        if (!o_.out.empty()) p["written_to"] = o_.out;
        CommandResult r = finish(p, render_text(p));
        r.data = data.str();
        r.data_path = o_.out;
        return r;
    }

private:
    int need_n() const {
        if (!o_.n) throw Error("--n is required for '" + o_.mode + "'");
        return *o_.n;
    }

    CommandResult simple(nlohmann::json p, std::string text) { return finish(std::move(p), std::move(text)); }

    CommandResult finish(nlohmann::json p, std::string text) {
        CommandResult r;
        p["seed"] = o_.seed;
        r.payload = std::move(p);
        r.human_text = std::move(text);
        r.json_format = o_.format == "json";
        return r;
    }

    const Options& o_;
    std::istream& in_;
};

CommandResult failure(Status s, const std::string& message, const Options& o) {
    CommandResult r;
    r.status = s;
    r.payload = {{"status", to_string(s)}, {"error", message}, {"seed", o.seed}};
    r.human_text = to_string(s) + ": " + message;
    r.json_format = o.format == "json";
    return r;
}

}  // namespace

std::string CommandResult::rendered() const {
    if (json_format) return payload.dump(2) + "\n";
    std::string t = human_text;
    if (!t.empty() && t.back() != '\n') t += "\n";
    if (status == Status::alarm) t += "status: alarm\n";
    return t + "seed: " + payload.at("seed").dump() + "\n";
}

CommandResult run(const std::vector<std::string>& args, std::istream& stdin_source) {
    Options o;
    CLI::App app{"Hilbert function growth calculator"};
    app.name("hfgrowth");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", o.seed, "seed for every genericity draw (default 0)");
    app.add_option("--jobs", o.jobs, "worker threads for per-degree computations")->check(CLI::Range(1, 64));

    auto two_ints = [&](const char* name, const char* desc, const char* second) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("K", o.k)->required()->check(CLI::NonNegativeNumber);
        s->add_option(second, o.i)->required()->check(CLI::PositiveNumber);
        return s;
    };
    CLI::App* expand = two_ints("expand", "Macaulay expansion of K in degree I", "I");
    CLI::App* bound = two_ints("bound", "Macaulay bound K^<I>", "I");
    CLI::App* green = two_ints("green", "Green bound K_<I>", "I");
    CLI::App* mg = two_ints("mg", "base-locus dimension forced by maximal growth of K at N", "N");
    CLI::App* persist = two_ints("persist", "persisted Hilbert function of K at N for DMAX more degrees", "N");
    persist->add_option("DMAX", o.dmax)->required()->check(CLI::NonNegativeNumber);
    CLI::App* oseq = app.add_subcommand("oseq", "is H an O-sequence");
    oseq->add_option("H", o.values)->required();

    CLI::App* ideal = app.add_subcommand("ideal", "analyze an ideal file");
    ideal->add_option("MODE", o.mode)->required()->check(CLI::IsMember({"hf", "classify", "baselocus"}));
    ideal->add_option("FILE", o.file, "monomial ideal or form list, - for stdin")->required();
    ideal->add_option("--n", o.n, "degree")->required();
    ideal->add_option("--window", o.window, "profiling window beyond n");

    CLI::App* points = app.add_subcommand("points", "analyze a point file");
    points->add_option("MODE", o.mode)->required()->check(CLI::IsMember({"hf", "hvector", "classify", "davis", "plane"}));
    points->add_option("FILE", o.file, "point file, - for stdin")->required();
    points->add_option("--n", o.n, "degree");
    points->add_option("--k", o.kk, "value of the h-vector in degree n (default: read off)");
    points->add_option("--window", o.window, "profiling window beyond n");

    CLI::App* construct = app.add_subcommand("construct", "generate an instance");
    construct->add_option("RECIPE", o.recipe)->required();
    construct->add_option("PARAMS", o.params);
    construct->add_option("--out", o.out, "write the generated file here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.human_text = app.help();
        r.payload = {{"help", r.human_text}, {"seed", o.seed}};
        return r;
    } catch (const CLI::ParseError& e) {
        return failure(Status::error, e.what(), o);
    }

    Runner runner(o, stdin_source);
    try {
        if (expand->parsed()) return runner.expand();
        if (bound->parsed()) return runner.bound();
        if (green->parsed()) return runner.green();
        if (mg->parsed()) return runner.mg();
        if (persist->parsed()) return runner.persist();
        if (oseq->parsed()) return runner.oseq();
        if (ideal->parsed()) return runner.ideal();
        if (points->parsed()) return runner.points();
        if (construct->parsed()) return runner.construct();
        return failure(Status::error, "no subcommand", o);
    } catch (const HypothesisError& e) {
        return failure(Status::hypothesis_fail, e.what(), o);
    } catch (const AlarmError& e) {
        return failure(Status::alarm, e.what(), o);
    } catch (const Error& e) {
        return failure(Status::error, e.what(), o);
    }
}

}  // namespace hfg
