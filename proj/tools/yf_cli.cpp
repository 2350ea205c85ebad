// yf: command-line frontend for the Young-Fibonacci lattice library.
//
// Subcommands: level, count, ftable, measure, concentrate. Output is
// deterministic: identical inputs produce byte-identical stdout; timings and
// diagnostics go to stderr. Exit codes: 0 success, 2 usage/parse error,
// 3 precondition violation, 4 internal invariant breach.

#include <CLI11.hpp>
#include <json.hpp>

#include "yf/boundary.hpp"
#include "yf/graph.hpp"
#include "yf/path_count.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace yf;

namespace {

constexpr const char* kSchema = "yf/1";

enum ExitCode { kOk = 0, kUsage = 2, kPrecondition = 3, kInternal = 4 };

struct Format {
    std::string name = "human";
    bool human() const { return name == "human"; }
    bool csv() const { return name == "csv"; }
    bool j() const { return name == "json"; }
};

json interval_json(const Interval& i) {
    return json{{"lo", rat_str(i.lo())}, {"hi", rat_str(i.hi())}};
}

std::string flag_str(bool b) {
    return b ? "true" : "false";
}

// Human tables abbreviate unwieldy exact rationals with a marked decimal;
// csv/json always carry the exact reduced p/q.
std::string human_rat(const BigRat& q) {
    std::string s = rat_str(q);
    if (s.size() > 48)
        return "~" + approx_decimal(q, 12);
    return s;
}

std::string human_interval(const Interval& i) {
    return "[" + human_rat(i.lo()) + ", " + human_rat(i.hi()) + "]";
}

// ---------------------------------------------------------------- level ----

int cmd_level(std::size_t n, const Format& fmt) {
    const auto words = enumerate_level(n);
    if (fmt.csv()) {
        std::cout << "word,rank,length,ones,twos\n";
        for (const Word& w : words)
            std::cout << w.display() << ',' << w.rank() << ',' << w.length() << ',' << w.one_count()
                      << ',' << w.two_count() << "\n";
    } else if (fmt.j()) {
        json out{{"schema", kSchema}, {"command", "level"}, {"n", n}};
        json rows = json::array();
        for (const Word& w : words)
            rows.push_back(json{{"word", w.display()},
                                {"rank", w.rank()},
                                {"length", w.length()},
                                {"ones", w.one_count()},
                                {"twos", w.two_count()}});
        out["count"] = words.size();
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "level " << n << ": " << words.size() << " words\n";
        std::cout << "word\trank\tlength\tones\ttwos\n";
        for (const Word& w : words)
            std::cout << w.display() << '\t' << w.rank() << '\t' << w.length() << '\t'
                      << w.one_count() << '\t' << w.two_count() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- count ----

int cmd_count(const Word& x, const Word& y, const std::string& method, const Format& fmt) {
    std::vector<std::pair<std::string, BigInt>> results;
    const auto timed = [&](const char* name, auto&& op) {
        const auto start = std::chrono::steady_clock::now();
        BigInt value = op();
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "# " << name << ": " << us.count() << " us\n";
        results.emplace_back(name, std::move(value));
    };
    if (method == "brute" || method == "both")
        timed("brute", [&] { return y.rank() < x.rank() ? BigInt(0) : d_bruteforce(x, y); });
    if (method == "closed" || method == "both")
        timed("closed", [&] { return y.rank() < x.rank() ? BigInt(0) : d_closed(x, y); });

    bool equal = true;
    for (const auto& [name, value] : results)
        equal = equal && value == results.front().second;
    if (fmt.csv()) {
        std::cout << "method,count\n";
        for (const auto& [name, value] : results)
            std::cout << name << ',' << value.get_str() << "\n";
        if (method == "both")
            std::cout << "equal," << flag_str(equal) << "\n";
    } else if (fmt.j()) {
        json out{{"schema", kSchema}, {"command", "count"}, {"x", x.display()}, {"y", y.display()}};
        json counts;
        for (const auto& [name, value] : results)
            counts[name] = value.get_str();
        out["counts"] = std::move(counts);
        if (method == "both")
            out["equal"] = equal;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, value] : results)
            std::cout << name << ": " << value.get_str() << "\n";
        if (method == "both")
            std::cout << "equal: " << (equal ? "yes" : "no") << "\n";
    }
    if (!equal)
        throw internal_error("closed form disagrees with the brute-force oracle");
    return kOk;
}

// --------------------------------------------------------------- ftable ----

int cmd_ftable(const Word& x, std::optional<std::size_t> only_z, const Format& fmt) {
    const std::size_t ymax = x.rank(), zmax = x.length();
    if (only_z && *only_z > zmax)
        throw precondition_error("ftable: z exceeds the word length");
    std::vector<std::size_t> zs;
    for (std::size_t z = 0; z <= zmax; ++z)
        if (!only_z || z == *only_z)
            zs.push_back(z);

    if (fmt.csv()) {
        std::cout << "z";
        for (std::size_t y = 0; y <= ymax; ++y)
            std::cout << ",y" << y;
        std::cout << "\n";
        for (std::size_t z : zs) {
            std::cout << z;
            for (std::size_t y = 0; y <= ymax; ++y)
                std::cout << ',' << rat_str(f_eval(x, y, z));
            std::cout << "\n";
        }
    } else if (fmt.j()) {
        json out{{"schema", kSchema}, {"command", "ftable"}, {"x", x.display()}};
        json rows = json::array();
        for (std::size_t z : zs) {
            json values = json::array();
            for (std::size_t y = 0; y <= ymax; ++y)
                values.push_back(rat_str(f_eval(x, y, z)));
            rows.push_back(json{{"z", z}, {"values", std::move(values)}});
        }
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "f(" << x.display() << ", y, z)\n";
        std::cout << "z\\y";
        for (std::size_t y = 0; y <= ymax; ++y)
            std::cout << "\ty=" << y;
        std::cout << "\n";
        for (std::size_t z : zs) {
            std::cout << "z=" << z;
            for (std::size_t y = 0; y <= ymax; ++y)
                std::cout << '\t' << rat_str(f_eval(x, y, z));
            std::cout << "\n";
        }
    }
    return kOk;
}

// -------------------------------------------------------------- measure ----

int cmd_measure(const InfiniteWordSpec& w, std::size_t n, std::optional<std::size_t> stage_m,
                const BigRat& tol, const BigRat& delta, std::size_t l, const BigRat& eps,
                bool no_r, std::optional<int> approx_digits, const Format& fmt) {
    bool degraded = false;
    std::optional<BigRat> epsilon;
    if (no_r) {
        // R-classification intentionally disabled
    } else if (is_positive_boundary(w) != Positivity::yes) {
        std::cerr << "error: " << w.to_string()
                  << " is not in the positive boundary; R-classification needs pi(w) > 0, "
                     "emitting measures without R flags\n";
        degraded = true;
    } else {
        epsilon = eps;
    }
    const LevelReport rep = stage_m ? classify_level_finite(w, n, *stage_m, delta, l, epsilon)
                                    : classify_level(w, n, delta, l, epsilon, tol);

    const auto approx = [&](const Interval& i) {
        return approx_decimal((i.lo() + i.hi()) / 2, *approx_digits);
    };
    if (fmt.csv()) {
        std::cout << "word,mu_lo,mu_hi,h_prime,pi,in_p,in_q,in_r";
        if (approx_digits)
            std::cout << ",mu_approx";
        std::cout << "\n";
        for (const LevelRow& r : rep.rows) {
            std::cout << r.word.display() << ',' << rat_str(r.mu.lo()) << ',' << rat_str(r.mu.hi())
                      << ',' << r.h_prime << ',' << rat_str(r.pi_v) << ',' << flag_str(r.in_p) << ','
                      << flag_str(r.in_q) << ',' << (r.in_r ? flag_str(*r.in_r) : "");
            if (approx_digits)
                std::cout << ',' << approx(r.mu);
            std::cout << "\n";
        }
    } else if (fmt.j()) {
        json out{{"schema", kSchema}, {"command", "measure"}, {"w", w.to_string()}, {"n", n}};
        if (rep.stage_m)
            out["m"] = *rep.stage_m;
        else
            out["tol"] = rat_str(tol);
        out["delta"] = rat_str(rep.delta);
        out["l"] = rep.l;
        if (rep.epsilon)
            out["epsilon"] = rat_str(*rep.epsilon);
        if (rep.pi_w)
            out["pi_w"] = interval_json(*rep.pi_w);
        json rows = json::array();
        for (const LevelRow& r : rep.rows) {
            json row{{"word", r.word.display()}, {"mu", interval_json(r.mu)},
                     {"h_prime", r.h_prime},    {"pi", rat_str(r.pi_v)},
                     {"in_p", r.in_p},          {"in_q", r.in_q}};
            if (r.in_r)
                row["in_r"] = *r.in_r;
            if (approx_digits)
                row["mu_approx"] = approx(r.mu);
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
        json agg{{"total_mass", interval_json(rep.total_mass)},
                 {"p_mass", interval_json(rep.p_mass)},
                 {"pbar_mass", interval_json(rep.pbar_mass)},
                 {"q_mass", interval_json(rep.q_mass)},
                 {"qbar_mass", interval_json(rep.qbar_mass)}};
        if (rep.r_mass) {
            agg["r_mass"] = interval_json(*rep.r_mass);
            agg["rbar_mass"] = interval_json(*rep.rbar_mass);
        }
        out["aggregates"] = std::move(agg);
        out["bound"] = interval_json(rep.bound_value);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "w = " << w.to_string() << "  n = " << n;
        if (rep.stage_m)
            std::cout << "  stage m = " << *rep.stage_m << " (exact)";
        else
            std::cout << "  limit measure, tol = " << rat_str(tol);
        std::cout << "\ndelta = " << rat_str(rep.delta) << "  l = " << rep.l;
        if (rep.epsilon)
            std::cout << "  eps = " << rat_str(*rep.epsilon);
        if (rep.pi_w)
            std::cout << "  pi(w) in " << human_interval(*rep.pi_w);
        std::cout << "\n\nword\tmu_lo\tmu_hi\th'\tpi\tP\tQ\tR";
        if (approx_digits)
            std::cout << "\tmu~";
        std::cout << "\n";
        for (const LevelRow& r : rep.rows) {
            std::cout << r.word.display() << '\t' << human_rat(r.mu.lo()) << '\t'
                      << human_rat(r.mu.hi()) << '\t' << r.h_prime << '\t' << human_rat(r.pi_v)
                      << '\t' << (r.in_p ? '+' : '-') << '\t' << (r.in_q ? '+' : '-') << '\t'
                      << (r.in_r ? (*r.in_r ? "+" : "-") : ".");
            if (approx_digits)
                std::cout << '\t' << approx(r.mu);
            std::cout << "\n";
        }
        const auto mass_line = [&](const char* name, const Interval& i) {
            std::cout << name << " = " << human_interval(i) << "\n";
        };
        std::cout << "\n";
        mass_line("total mass", rep.total_mass);
        mass_line("P mass    ", rep.p_mass);
        mass_line("Pbar mass ", rep.pbar_mass);
        mass_line("Q mass    ", rep.q_mass);
        mass_line("Qbar mass ", rep.qbar_mass);
        if (rep.r_mass) {
            mass_line("R mass    ", *rep.r_mass);
            mass_line("Rbar mass ", *rep.rbar_mass);
        }
        mass_line("bound     ", rep.bound_value);
    }
    return degraded ? kPrecondition : kOk;
}

// ---------------------------------------------------------- concentrate ----

int cmd_concentrate(const InfiniteWordSpec& w, const BigRat& delta, std::size_t n_from,
                    std::size_t n_to, const BigRat& tol, bool approx,
                    std::optional<int> approx_digits, const Format& fmt) {
    if (approx) {
        const auto series = concentration_series_approx(w, delta, n_from, n_to);
        if (fmt.csv() || fmt.human()) {
            std::cout << "n,pbar_mass_approx,bound_approx\n";
            char buf[64];
            for (const auto& p : series) {
                std::snprintf(buf, sizeof buf, "%.12g,%.12g", p.pbar_mass, p.bound);
                std::cout << p.n << ',' << buf << "\n";
            }
        } else {
            json out{{"schema", kSchema}, {"command", "concentrate"}, {"w", w.to_string()},
                     {"delta", rat_str(delta)}, {"mode", "approx"}};
            json rows = json::array();
            for (const auto& p : series)
                rows.push_back(json{{"n", p.n}, {"pbar_mass", p.pbar_mass}, {"bound", p.bound}});
            out["rows"] = std::move(rows);
            std::cout << out.dump(2) << "\n";
        }
        return kOk;
    }

    const auto series = concentration_series(w, delta, n_from, n_to, tol);
    if (series.truncated)
        std::cerr << "note: series truncated by the level budget; partial results emitted\n";
    if (fmt.human()) {
        std::cout << "w = " << w.to_string() << "  delta = " << rat_str(delta) << "  tol = "
                  << rat_str(tol) << "\n";
        std::cout << "n\tpbar_mass\tbound\n";
        for (const auto& p : series.points)
            std::cout << p.n << '\t' << human_interval(p.pbar_mass) << '\t'
                      << human_interval(p.bound) << "\n";
    } else if (fmt.csv()) {
        // `bound` is the upper end of a certified enclosure of 3n((2/3)^(d/2))^n
        std::cout << "n,pbar_mass_lo,pbar_mass_hi,bound";
        if (approx_digits)
            std::cout << ",pbar_approx,bound_approx";
        std::cout << "\n";
        for (const auto& p : series.points) {
            std::cout << p.n << ',' << rat_str(p.pbar_mass.lo()) << ',' << rat_str(p.pbar_mass.hi())
                      << ',' << rat_str(p.bound.hi());
            if (approx_digits)
                std::cout << ',' << approx_decimal((p.pbar_mass.lo() + p.pbar_mass.hi()) / 2, *approx_digits)
                          << ',' << approx_decimal(p.bound.hi(), *approx_digits);
            std::cout << "\n";
        }
    } else {
        json out{{"schema", kSchema}, {"command", "concentrate"}, {"w", w.to_string()},
                 {"delta", rat_str(delta)}, {"tol", rat_str(tol)}, {"truncated", series.truncated}};
        json rows = json::array();
        for (const auto& p : series.points)
            rows.push_back(json{{"n", p.n},
                                {"pbar_mass", interval_json(p.pbar_mass)},
                                {"bound", interval_json(p.bound)}});
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on the Young-Fibonacci graded graph"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::string format = "human";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: human, csv or json")
            ->check(CLI::IsMember({"human", "csv", "json"}))
            ->capture_default_str();
    };
    std::optional<int> approx_digits;
    const auto add_approx_digits = [&](CLI::App* cmd) {
        cmd->add_option("--approx-digits", approx_digits,
                        "Also print lossy decimal approximations with this many digits");
    };

    // level
    std::size_t level_n = 0;
    auto* level = app.add_subcommand("level", "List all words of a given rank");
    level->add_option("n", level_n, "Level (rank)")->required();
    add_format(level);

    // count
    std::string count_x, count_y, count_method = "closed";
    auto* count = app.add_subcommand("count", "Count down paths from y to x");
    count->add_option("x", count_x, "Lower word ('e' for the empty word)")->required();
    count->add_option("y", count_y, "Upper word")->required();
    count->add_option("--method", count_method, "brute, closed or both")
        ->check(CLI::IsMember({"brute", "closed", "both"}))
        ->capture_default_str();
    add_format(count);

    // ftable
    std::string ftable_x;
    std::optional<std::size_t> ftable_z;
    auto* ftable = app.add_subcommand("ftable", "Print the f(x,y,z) grid for a word");
    ftable->add_option("x", ftable_x, "Word")->required();
    ftable->add_option("--z", ftable_z, "Restrict to one z row");
    add_format(ftable);

    // measure
    std::string measure_w;
    std::size_t measure_n = 0;
    std::optional<std::size_t> measure_m;
    bool measure_limit = false, measure_no_r = false;
    std::string measure_tol = "1/1000000000000", measure_delta = "1/2", measure_eps = "1/2";
    std::size_t measure_l = 1;
    auto* measure =
        app.add_subcommand("measure", "Per-vertex boundary measures and P/Q/R classification");
    measure->add_option("w", measure_w, "Infinite word spec (ones, finite:<word>, const:<c>, "
                                        "geometric:<b0>, explicit:<...;tail=...>)")
        ->required();
    measure->add_option("n", measure_n, "Level")->required();
    measure->add_option("--m", measure_m, "Finite stage: use mu_w(v,m) (exact)");
    measure->add_flag("--limit", measure_limit, "Use the limit measure mu_w(v)");
    measure->add_option("--tol", measure_tol, "Enclosure tolerance for limit mode")
        ->capture_default_str();
    measure->add_option("--delta", measure_delta, "P-set parameter, rational in (0,1)")
        ->capture_default_str();
    measure->add_option("--l", measure_l, "Q-set threshold")->capture_default_str();
    measure->add_option("--eps", measure_eps, "R-set relative window, rational > 0")
        ->capture_default_str();
    measure->add_flag("--no-r", measure_no_r, "Skip R-classification");
    add_format(measure);
    add_approx_digits(measure);

    // concentrate
    std::string conc_w, conc_delta, conc_tol = "1/1000000000000";
    std::size_t conc_from = 0, conc_to = 0;
    bool conc_approx = false;
    auto* conc = app.add_subcommand("concentrate", "Pbar-mass decay series against the bound");
    conc->add_option("w", conc_w, "Infinite word spec")->required();
    conc->add_option("--delta", conc_delta, "Rational in (0,1)")->required();
    conc->add_option("--n-from", conc_from, "First level")->required();
    conc->add_option("--n-to", conc_to, "Last level")->required();
    conc->add_option("--tol", conc_tol, "Enclosure tolerance per level")->capture_default_str();
    conc->add_flag("--approx", conc_approx, "Fast double-precision estimate");
    add_format(conc);
    add_approx_digits(conc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const Format fmt{format};
    try {
        if (*level)
            return cmd_level(level_n, fmt);
        if (*count)
            return cmd_count(Word::parse(count_x), Word::parse(count_y), count_method, fmt);
        if (*ftable)
            return cmd_ftable(Word::parse(ftable_x), ftable_z, fmt);
        if (*measure) {
            if (measure_m.has_value() == measure_limit) {
                std::cerr << "usage error: pass exactly one of --m=<int> or --limit\n";
                return kUsage;
            }
            return cmd_measure(InfiniteWordSpec::parse(measure_w), measure_n, measure_m,
                               parse_rat(measure_tol), parse_rat(measure_delta), measure_l,
                               parse_rat(measure_eps), measure_no_r, approx_digits, fmt);
        }
        if (*conc) {
            if (conc_to < conc_from) {
                std::cerr << "usage error: --n-to must be >= --n-from\n";
                return kUsage;
            }
            return cmd_concentrate(InfiniteWordSpec::parse(conc_w), parse_rat(conc_delta), conc_from,
                                   conc_to, parse_rat(conc_tol), conc_approx, approx_digits, fmt);
        }
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const tolerance_error& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return kPrecondition;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kInternal;
    }
}
