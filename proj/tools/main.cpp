#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotfib/annulus.hpp"
#include "knotfib/diagram.hpp"
#include "knotfib/errors.hpp"
#include "knotfib/invariants.hpp"
#include "knotfib/json_io.hpp"
#include "knotfib/moves.hpp"

using namespace knotfib;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw Error("io", "cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("io", "cannot write " + path);
    f << text;
}

int run_compute(const std::string& in, const std::string& format) {
    Diagram d = parse_diagram(read_input(in));
    if (format == "json") {
        ordered_json out;
        out["components"] = ordered_json::array();
        for (const Component& c : d.components) {
            ordered_json row;
            row["name"] = c.name;
            row["u_knot"] = module_to_json(u_knot(d, c.name));
            row["u_tilde"] = module_to_json(u_tilde(d, c.name));
            row["u_homological"] = module_to_json(u_homological(d, c.name));
            out["components"].push_back(std::move(row));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Component& c : d.components) {
            std::cout << c.name << ": u_knot = " << u_knot(d, c.name).str()
                      << "; u_tilde = " << u_tilde(d, c.name).str()
                      << "; u_homological = " << u_homological(d, c.name).str()
                      << "\n";
        }
    }
    return 0;
}

int run_link(const std::string& in, const std::string& format) {
    Diagram d = parse_diagram(read_input(in));
    MultiInvariant m = u_multi(d);
    if (format == "json") {
        ordered_json out;
        out["knots"] = ordered_json::array();
        for (const auto& k : m.knots) {
            ordered_json row;
            row["component"] = k.component;
            row["value"] = module_to_json(k.value);
            out["knots"].push_back(std::move(row));
        }
        out["pairs"] = ordered_json::array();
        for (const auto& p : m.pairs) {
            ordered_json row;
            row["first"] = p.first;
            row["second"] = p.second;
            row["value"] = module_to_json(p.value);
            out["pairs"].push_back(std::move(row));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& k : m.knots) {
            std::cout << "knot " << k.component << ": " << k.value.str() << "\n";
        }
        for (const auto& p : m.pairs) {
            std::cout << "pair (" << p.first << ", " << p.second
                      << "): " << p.value.str() << "\n";
        }
    }
    return 0;
}

int run_annulus(const std::string& in, const std::string& format) {
    Diagram d = parse_diagram(read_input(in));
    bool lone = d.components.size() == 1;
    ordered_json rows = ordered_json::array();
    for (const Component& c : d.components) {
        LaurentPoly a = a_poly(d, c.name);
        long long h = homology_class(d, c.name);
        auto [canon, n] = canonical_form(a, h);
        std::string violation = range_violation(a, h);
        if (format == "json") {
            ordered_json row;
            row["name"] = c.name;
            row["a"] = laurent_to_json(a);
            row["h"] = h;
            row["canonical"] = n == 0;
            row["canonical_form"] = laurent_to_json(canon);
            row["n"] = n;
            row["in_range"] = violation.empty();
            if (violation.empty()) {
                row["violation"] = nullptr;
            } else {
                row["violation"] = violation;
            }
            rows.push_back(std::move(row));
        } else {
            std::string line;
            if (!lone) line += c.name + ": ";
            line += "A = " + a.str() + "; h = " + std::to_string(h) + "; ";
            if (n == 0) {
                line += "canonical";
            } else {
                line += "canonical form: " + canon.str() +
                        " (n = " + std::to_string(n) + ")";
            }
            line += "; in range: ";
            line += violation.empty() ? "yes" : "no (" + violation + ")";
            std::cout << line << "\n";
        }
    }
    if (format == "json") {
        ordered_json out;
        out["components"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_jump(const std::string& in, const std::string& format) {
    Diagram d = parse_diagram(read_input(in));
    bool all_ok = true;
    ordered_json rows = ordered_json::array();
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        bool self = vs.size() == 2 && vs[0].first == vs[1].first;
        if (!self) {
            if (format == "json") {
                ordered_json row;
                row["id"] = q.id;
                row["skipped"] = true;
                rows.push_back(std::move(row));
            } else {
                std::cout << q.id << ": skipped (not a self-crossing)\n";
            }
            continue;
        }
        const std::string& comp =
            d.components[static_cast<std::size_t>(vs[0].first)].name;
        auto [pred_u, pred_t] = predicted_jump(d, q.id);
        Diagram f = fiber_flip(d, q.id);
        ModuleElement<ConjClass> du = u_knot(f, comp) - u_knot(d, comp);
        ModuleElement<EightClass> dt = u_tilde(f, comp) - u_tilde(d, comp);
        bool ok = du == pred_u && dt == pred_t;
        all_ok = all_ok && ok;
        if (format == "json") {
            ordered_json row;
            row["id"] = q.id;
            row["skipped"] = false;
            row["predicted_du"] = module_to_json(pred_u);
            row["du"] = module_to_json(du);
            row["predicted_dtilde"] = module_to_json(pred_t);
            row["dtilde"] = module_to_json(dt);
            row["match"] = ok;
            rows.push_back(std::move(row));
        } else {
            std::cout << q.id << ": predicted du = " << pred_u.str()
                      << "; du = " << du.str()
                      << "; predicted dtilde = " << pred_t.str()
                      << "; dtilde = " << dt.str()
                      << "; match: " << (ok ? "yes" : "no") << "\n";
        }
    }
    if (format == "json") {
        ordered_json out;
        out["crossings"] = std::move(rows);
        out["ok"] = all_ok;
        std::cout << out.dump(2) << "\n";
    }
    return all_ok ? 0 : 3;
}

// Description of the first changed invariant, or nullopt.
std::optional<std::string> invariant_change(const Diagram& before,
                                            const Diagram& after) {
    MultiInvariant a = u_multi(before);
    MultiInvariant b = u_multi(after);
    for (std::size_t i = 0; i < a.knots.size(); ++i) {
        if (!(a.knots[i].value == b.knots[i].value)) {
            return "u_knot changed on component " + a.knots[i].component;
        }
    }
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        if (!(a.pairs[i].value == b.pairs[i].value)) {
            return "u_link changed on pair (" + a.pairs[i].first + ", " +
                   a.pairs[i].second + ")";
        }
    }
    for (const Component& c : before.components) {
        if (!(u_tilde(before, c.name) == u_tilde(after, c.name))) {
            return "u_tilde changed on component " + c.name;
        }
        if (!(u_homological(before, c.name) == u_homological(after, c.name))) {
            return "u_homological changed on component " + c.name;
        }
        if (before.surface.rank == 1) {
            if (!(a_poly(before, c.name) == a_poly(after, c.name))) {
                return "a_poly changed on component " + c.name;
            }
        }
    }
    return std::nullopt;
}

int run_fuzz(const std::string& in, int moves, int trials, std::uint64_t seed,
             const std::string& format, const std::string& out) {
    Diagram base = parse_diagram(read_input(in));
    if (trials < 0) throw Error("bad-argument", "trial count must be >= 0");
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(trial);
        auto [end, log] = fuzz(base, moves, s);
        if (!(replay(base, log) == end)) {
            std::cerr << "error: property: move log replay diverged (trial "
                      << trial << ", seed " << s << ")\n";
            write_output(out, movelog_to_jsonl(log));
            return 3;
        }
        std::optional<std::string> change = invariant_change(base, end);
        if (change) {
            std::cerr << "error: property: " << *change << " (trial " << trial
                      << ", seed " << s << ", " << log.moves.size()
                      << " moves)\n";
            write_output(out, movelog_to_jsonl(log));
            return 3;
        }
    }
    if (format == "json") {
        ordered_json res;
        res["trials"] = trials;
        res["moves"] = moves;
        res["seed"] = seed;
        res["ok"] = true;
        std::cout << res.dump(2) << "\n";
    } else {
        std::cout << "fuzz: " << trials << " campaigns x " << moves
                  << " moves: all invariants preserved (seed " << seed << ")\n";
    }
    return 0;
}

int run_twist(const std::string& in, const std::string& component,
              int direction, const std::string& out) {
    Diagram d = parse_diagram(read_input(in));
    std::string comp = component;
    if (comp.empty()) {
        if (d.components.empty()) {
            throw Error("unknown-component", "diagram has no components");
        }
        comp = d.components[0].name;
    }
    write_output(out, serialize(twist_diagram(d, comp, direction)));
    return 0;
}

int run_realize(long long h, const std::string& target_text,
                const std::string& out) {
    LaurentPoly target = LaurentPoly::parse(target_text);
    Diagram d = realize_polynomial(h, target);
    // Self-check before reporting success.
    std::vector<std::string> violations = validate(d);
    if (!violations.empty()) {
        throw std::logic_error("realized diagram failed validation: " +
                               violations[0]);
    }
    if (!(a_poly(d, "K") == target) || homology_class(d, "K") != h) {
        throw std::logic_error("realized diagram does not reproduce the target");
    }
    write_output(out, serialize(d));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of knot and link diagrams in line-fibered "
                 "thickened surfaces"};
    app.require_subcommand(1);

    std::string in = "-";
    std::string format = "text";
    std::string out = "-";
    std::string component;
    std::string target;
    std::uint64_t seed = 0;
    int moves = 50;
    int trials = 100;
    int direction = 1;
    long long h = 0;

    auto add_in = [&](CLI::App* c) {
        c->add_option("--in", in, "input diagram file, - for stdin");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* compute_cmd =
        app.add_subcommand("compute", "print per-component invariants");
    add_in(compute_cmd);
    add_format(compute_cmd);

    CLI::App* link_cmd =
        app.add_subcommand("link", "print the multi-component invariant");
    add_in(link_cmd);
    add_format(link_cmd);

    CLI::App* annulus_cmd = app.add_subcommand(
        "annulus", "partial linking polynomial report (rank 1)");
    add_in(annulus_cmd);
    add_format(annulus_cmd);

    CLI::App* fuzz_cmd =
        app.add_subcommand("fuzz", "random-move invariance campaign");
    add_in(fuzz_cmd);
    add_format(fuzz_cmd);
    fuzz_cmd->add_option("--seed", seed, "campaign seed")
        ->envname("KNOTFIB_SEED");
    fuzz_cmd->add_option("--moves", moves, "moves per campaign");
    fuzz_cmd->add_option("--trials", trials, "number of campaigns");
    fuzz_cmd->add_option("--out", out,
                         "counterexample log path on failure, - for stdout");

    CLI::App* jump_cmd = app.add_subcommand(
        "jump", "predicted vs recomputed deltas for each crossing flip");
    add_in(jump_cmd);
    add_format(jump_cmd);

    CLI::App* twist_cmd =
        app.add_subcommand("twist", "insert a meridian twist (rank 1)");
    add_in(twist_cmd);
    twist_cmd->add_option("--component", component,
                          "component to twist (default: first)");
    twist_cmd->add_option("--direction", direction, "+1 twist, -1 untwist")
        ->check(CLI::IsMember(std::vector<int>{1, -1}));
    twist_cmd->add_option("--out", out, "output path, - for stdout");

    CLI::App* realize_cmd = app.add_subcommand(
        "realize", "build a diagram with the prescribed polynomial");
    // Long-only help so `--h` stays available for the winding number.
    realize_cmd->set_help_flag("--help", "print help and exit");
    realize_cmd->add_option("--h", h, "homology (winding) of the component")
        ->required();
    realize_cmd->add_option("--target", target, "target polynomial")
        ->required();
    realize_cmd->add_option("--out", out, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help/version
        std::cerr << "error: usage: " << e.what() << "\n";
        return 1;
    }

    try {
        if (compute_cmd->parsed()) return run_compute(in, format);
        if (link_cmd->parsed()) return run_link(in, format);
        if (annulus_cmd->parsed()) return run_annulus(in, format);
        if (fuzz_cmd->parsed())
            return run_fuzz(in, moves, trials, seed, format, out);
        if (jump_cmd->parsed()) return run_jump(in, format);
        if (twist_cmd->parsed()) return run_twist(in, component, direction, out);
        if (realize_cmd->parsed()) return run_realize(h, target, out);
    } catch (const RangeError& e) {
        std::cerr << "error: range: " << e.condition() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
