#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "fibcat/algebra.hpp"
#include "fibcat/dsl.hpp"
#include "fibcat/emit.hpp"
#include "fibcat/street.hpp"
#include "fibcat/transport.hpp"

namespace fibcat::cli {

namespace {

struct Common {
    std::vector<std::string> paths;
    std::string suite;
    std::string format = "text";
    bool timings = false;
};

void add_common(CLI::App& sub, Common& c) {
    sub.add_option("paths", c.paths, ".cat files or directories of them")->required();
    sub.add_option("--suite", c.suite, "restrict to the members of one suite");
    sub.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub.add_flag("--timings", c.timings, "record per-check timings (output is then not byte-stable)");
}

dsl::Model load(const Common& c) {
    dsl::Model m;
    for (const auto& p : c.paths) dsl::merge_into(m, dsl::load_path(p), p);
    return m;
}

Corpus select(const dsl::Model& m, const Common& c) { return c.suite.empty() ? m.corpus() : m.corpus(c.suite); }

void add_witnesses(Report& r, const std::vector<std::string>& ws) {
    if (ws.size() > 1) r.checks.back().witnesses.insert(r.checks.back().witnesses.end(), ws.begin() + 1, ws.end());
}

Report fibration_checks(const Corpus& c, bool op, bool pseudo) {
    Report r;
    const std::string kind = std::string(pseudo ? "pseudo-" : "") + (op ? "opfibration" : "fibration");
    const std::string anchor = op ? (pseudo ? "the comparison into p/B has a left adjoint with invertible unit"
                                            : "the comparison into p/B has a left adjoint with identity unit")
                                  : (pseudo ? "the comparison into B/p has a right adjoint with invertible counit"
                                            : "the comparison into B/p has a right adjoint with identity counit");
    for (const auto& nb : c.bundles) {
        std::vector<std::string> ws;
        r.run(kind + "[" + nb.name + "]", anchor, [&]() -> std::optional<std::string> {
            const FibrationResult fr = op ? is_opfibration(nb.bundle) : is_fibration(nb.bundle);
            const bool holds = pseudo ? (op ? is_pseudo_opfibration(nb.bundle) : is_pseudo_fibration(nb.bundle)) : fr.holds;
            if (holds) return std::nullopt;
            ws = fr.witnesses;
            if (ws.empty()) ws.push_back("no adjoint");
            return ws.front();
        });
        add_witnesses(r, ws);
    }
    return r;
}

Report lift_checks(const Corpus& c, const IndexedEndofunctor& t) {
    Report r;
    for (const auto& nb : c.bundles) {
        const std::string id = "lift[" + t.name + "," + nb.name + "]";
        const FibrationResult fr = is_opfibration(nb.bundle);
        if (!fr.holds) {
            r.vacuous(id, "lifting an opfibration's algebra along T", "not an opfibration");
            continue;
        }
        try {
            const PseudoAlgebra lifted = lift_algebra(t, cleavage_to_algebra(*fr.cleavage));
            r.append(verify_pseudoalgebra(lifted, t.name + "(" + nb.name + ")"));
            r.run(id, "lifting an opfibration's algebra along T", [&]() -> std::optional<std::string> {
                return std::nullopt;
            });
            r.checks.back().witnesses.push_back(std::string(to_string(classify(lifted))));
        } catch (const Error& e) {
            r.run(id, "lifting an opfibration's algebra along T", [&] { return std::optional<std::string>(e.what()); });
        }
    }
    return r;
}

Report preserve_checks(const Corpus& c, const IndexedEndofunctor& t, PreservationMode mode) {
    Report r;
    for (const auto& nb : c.bundles) {
        try {
            r.append(check_preservation(t, nb.bundle, mode, nb.name));
        } catch (const Error& e) {
            r.run("preserve." + std::string(to_string(mode)) + "[" + t.name + "," + nb.name + "]",
                  "indexed endofunctors preserve " + std::string(to_string(mode)) + "s",
                  [&] { return std::optional<std::string>(e.what()); });
        }
    }
    return r;
}

Report transition_checks(const Corpus& c, const IndexedEndofunctor& t) {
    Report r = validate_indexed(t, c);
    if (!r.ok()) return r;
    r.append(verify_transition(t, c));
    return r;
}

/// One suite entry, e.g. {"preserve", "fiber_power:2", "opfibration"}.
Report run_check(const std::vector<std::string>& w, const Corpus& c) {
    const std::string& k = w.at(0);
    if (k == "opfibration") return fibration_checks(c, true, false);
    if (k == "fibration") return fibration_checks(c, false, false);
    if (k == "pseudo-opfibration") return fibration_checks(c, true, true);
    if (k == "pseudo-fibration") return fibration_checks(c, false, true);
    if (k == "monad-laws") return verify_L_monad(c);
    if (k == "k-lemmas") return verify_K_lemmas(c);
    if (k == "transition") return transition_checks(c, builtin_functor(w.at(1)));
    if (k == "lift") return lift_checks(c, builtin_functor(w.at(1)));
    if (k == "preserve") return preserve_checks(c, builtin_functor(w.at(1)), parse_mode(w.at(2)));
    throw Error(ErrorCode::UnknownReference, "unknown check '" + k + "'");
}

Report validate_paths(const Common& c) {
    Report r;
    for (const auto& p : c.paths) {
        dsl::Model m;
        try {
            m = dsl::load_path(p);
        } catch (const Error& e) {
            r.run("validate.file[" + p + "]", "the description parses and every declaration is well formed",
                  [&] { return std::optional<std::string>(e.what()); });
            continue;
        }
        const auto ok = [&](const std::string& id, std::string witness) {
            r.run(id, "well-formed declaration", [] { return std::nullopt; });
            r.checks.back().witnesses.push_back(std::move(witness));
        };
        for (const auto& [n, cat] : m.categories)
            ok("validate.category[" + n + "]",
               std::to_string(cat->num_objects()) + " objects, " + std::to_string(cat->num_morphisms()) + " morphisms");
        for (const auto& [n, f] : m.functors) ok("validate.functor[" + n + "]", "functor laws hold");
        for (const auto& [n, a] : m.nats) ok("validate.nat[" + n + "]", "naturality holds");
        for (const auto& b : m.bundles) ok("validate.bundle[" + b.name + "]", "bundle");
        for (const auto& s : m.squares) ok("validate.square[" + s.name + "]", "square commutes");
        for (const auto& x : m.cells) ok("validate.cell[" + x.name + "]", "2-cell lies over its down part");
        for (const auto& s : m.suites) ok("validate.suite[" + s.name + "]", std::to_string(s.checks.size()) + " checks");
    }
    return r;
}

Report comma_command(const dsl::Model& m, const std::string& left, const std::string& right) {
    const auto get = [&](const std::string& n) -> const Functor& {
        auto it = m.functors.find(n);
        if (it == m.functors.end()) throw Error(ErrorCode::UnknownReference, "unknown functor '" + n + "'");
        return it->second;
    };
    const Functor& r = get(left);
    const Functor& s = get(right);
    if (r.cod() != s.cod())
        throw Error(ErrorCode::UnknownReference, "'" + left + "' and '" + right + "' have different codomains");
    const CommaResult cr = comma(r, s);
    const std::string label = left + "/" + right;
    Report rep = verify_comma_universality(cr, label);
    rep.run("comma.size[" + label + "]", "objects (a, b, σ: r a → s b) and commuting squares", [] { return std::nullopt; });
    auto& ws = rep.checks.back().witnesses;
    ws.push_back(std::to_string(cr.apex->num_objects()) + " objects, " + std::to_string(cr.apex->num_morphisms()) +
                 " morphisms");
    for (const auto& o : cr.apex->objects()) ws.push_back(o.to_string());
    return rep;
}

Report fibre_command(const Corpus& c, const std::string& bundle, const std::string& over) {
    const Bundle& p = c.bundle(bundle);
    Report r;
    for (const auto& b : p.base()->objects()) {
        if (!over.empty() && b.to_string() != over) continue;
        r.run("fibre[" + bundle + "," + b.to_string() + "]", "fibre as the pullback along the point", [] {
            return std::nullopt;
        });
        const CatRef f = fibre(p, b);
        auto& ws = r.checks.back().witnesses;
        ws.push_back(std::to_string(f->num_objects()) + " objects, " + std::to_string(f->num_morphisms()) + " morphisms");
        for (const auto& o : f->objects()) ws.push_back(o.to_string());
    }
    if (r.checks.empty()) throw Error(ErrorCode::UnknownReference, "no base object '" + over + "' in '" + bundle + "'");
    return r;
}

Report report_command(const dsl::Model& m, const Common& c) {
    Report r;
    std::vector<const dsl::SuiteDecl*> suites;
    for (const auto& s : m.suites)
        if (c.suite.empty() || s.name == c.suite) suites.push_back(&s);
    if (!c.suite.empty() && suites.empty()) throw Error(ErrorCode::UnknownReference, "unknown suite '" + c.suite + "'");
    if (suites.empty()) {
        const Corpus all = m.corpus();
        for (const char* k : {"opfibration", "fibration", "monad-laws", "k-lemmas"}) r.append(run_check({k}, all));
        return r;
    }
    for (const auto* s : suites) {
        const Corpus corpus = m.corpus(s->name);
        for (const auto& w : s->checks) {
            Report part = run_check(w, corpus);
            for (auto& ch : part.checks) ch.id = s->name + "/" + ch.id;
            r.append(std::move(part));
        }
    }
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks fibration-theoretic laws on finite categories described in .cat files", "fibcat"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fibcat 0.1.0");

    Common common;
    bool opf = false, fib = false, pseudo = false;
    std::string functor_name, mode_name, left, right, bundle, over;

    auto* validate = app.add_subcommand("validate", "parse and check every declaration");
    add_common(*validate, common);
    auto* comma_cmd = app.add_subcommand("comma", "build a comma category and test its universal property");
    add_common(*comma_cmd, common);
    comma_cmd->add_option("--left", left, "functor r of r/s")->required();
    comma_cmd->add_option("--right", right, "functor s of r/s")->required();
    auto* fibre_cmd = app.add_subcommand("fibre", "fibres of a bundle");
    add_common(*fibre_cmd, common);
    fibre_cmd->add_option("--bundle", bundle, "bundle name")->required();
    fibre_cmd->add_option("--over", over, "a base object (default: all)");
    auto* check = app.add_subcommand("check", "Chevalley criterion for each bundle");
    add_common(*check, common);
    check->add_flag("--opfibration", opf, "check the opfibration criterion");
    check->add_flag("--fibration", fib, "check the fibration criterion");
    check->add_flag("--pseudo", pseudo, "allow invertible (co)units");
    auto* monad = app.add_subcommand("monad-laws", "2-monad laws of L over the corpus");
    add_common(*monad, common);
    auto* klem = app.add_subcommand("k-lemmas", "prone/supine and simplicial identities of K");
    add_common(*klem, common);
    auto* transition = app.add_subcommand("transition", "transition laws for an indexed endofunctor");
    add_common(*transition, common);
    transition->add_option("--functor", functor_name, "identity, const_fiber:N, fiber_power:N, base_square")->required();
    auto* lift = app.add_subcommand("lift", "lift opfibration algebras along an indexed endofunctor");
    add_common(*lift, common);
    lift->add_option("--functor", functor_name, "identity, const_fiber:N, fiber_power:N, base_square")->required();
    auto* preserve = app.add_subcommand("preserve", "check that T p is again a (pseudo-)(op)fibration");
    add_common(*preserve, common);
    preserve->add_option("--functor", functor_name, "identity, const_fiber:N, fiber_power:N, base_square")->required();
    preserve->add_option("--mode", mode_name, "opfibration, pseudo-opfibration, fibration, pseudo-fibration")->required();
    auto* report = app.add_subcommand("report", "run the checks listed in each suite");
    add_common(*report, common);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << "fibcat 0.1.0\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "fibcat: " << e.what() << "\n" << "run 'fibcat --help' for usage\n";
        return usage;
    }

    Report r;
    try {
        const ReportFormat format = parse_format(common.format);
        set_record_timings(common.timings);
        if (validate->parsed()) {
            r = validate_paths(common);
        } else {
            const dsl::Model m = load(common);
            if (comma_cmd->parsed()) {
                r = comma_command(m, left, right);
            } else if (fibre_cmd->parsed()) {
                r = fibre_command(select(m, common), bundle, over);
            } else if (check->parsed()) {
                if (!opf && !fib) {
                    err << "fibcat: check needs --opfibration or --fibration\n";
                    return usage;
                }
                const Corpus c = select(m, common);
                if (opf) r.append(fibration_checks(c, true, pseudo));
                if (fib) r.append(fibration_checks(c, false, pseudo));
            } else if (monad->parsed()) {
                r = verify_L_monad(select(m, common));
            } else if (klem->parsed()) {
                r = verify_K_lemmas(select(m, common));
            } else if (transition->parsed()) {
                r = transition_checks(select(m, common), builtin_functor(functor_name));
            } else if (lift->parsed()) {
                r = lift_checks(select(m, common), builtin_functor(functor_name));
            } else if (preserve->parsed()) {
                r = preserve_checks(select(m, common), builtin_functor(functor_name), parse_mode(mode_name));
            } else {
                r = report_command(m, common);
            }
        }
        out << emit_report(r, format);
        if (format == ReportFormat::json) out << "\n";
    } catch (const Error& e) {
        err << "fibcat: " << e.what() << "\n";
        return usage;
    }
    return r.ok() ? ok : checks_failed;
}

}  // namespace fibcat::cli
