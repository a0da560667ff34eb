// One line per acceptance criterion; exits non-zero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fibcat/algebra.hpp"
#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/street.hpp"
#include "fibcat/transport.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace fibcat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::size_t count_prefix(const Report& r, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& c : r.checks) n += c.id.rfind(prefix, 0) == 0 && c.status == Status::pass;
    return n;
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (c.status == Status::fail) return c.id + (c.witnesses.empty() ? "" : " (" + c.witnesses[0] + ")");
    return "";
}

// -- 1 ----------------------------------------------------------------------
Outcome comma_construction(std::string& summary) {
    Outcome o;
    const CommaResult ph = phi(walking_arrow());
    const auto counts = oracle::comma_counts(ph.r, ph.s);
    o.require(counts == std::pair<std::size_t, std::size_t>{3, 6}, "brute-force count of the arrow category is not (3, 6)");
    o.require(ph.apex->num_objects() == 3 && ph.apex->num_morphisms() == 6, "the arrow category of 2 is not 3 objects, 6 morphisms");
    Report r;
    std::size_t commas = 0;
    for (const auto& nb : standard_corpus().bundles) {
        if (nb.bundle.total()->num_objects() > 6 || nb.bundle.base()->num_objects() > 6) continue;
        const Functor idb = Functor::identity(nb.bundle.base());
        for (const auto& [cr, tag] : {std::pair{comma(nb.bundle.proj, idb), nb.name + ",p/B"},
                                      std::pair{comma(idb, nb.bundle.proj), nb.name + ",B/p"},
                                      std::pair{phi(nb.bundle.total()), nb.name + ",ΦE"}}) {
            const auto oc = oracle::comma_counts(cr.r, cr.s);
            o.require(oc.first == cr.apex->num_objects() && oc.second == cr.apex->num_morphisms(), "size of " + tag);
            r.append(verify_comma_universality(cr, tag));
            ++commas;
        }
    }
    o.require(r.ok(), first_failure(r));
    summary = "arrow category of 2 has 3 objects, 6 morphisms; " + std::to_string(r.checks.size()) +
              " universality checks over " + std::to_string(commas) + " commas, " + std::to_string(r.failures()) +
              " violations";
    return o;
}

// -- 2 ----------------------------------------------------------------------
Outcome monad_laws(std::string& summary) {
    Outcome o;
    const Report r = verify_L_monad(standard_corpus());
    o.require(r.ok(), first_failure(r));
    const Report m = verify_L_monad(standard_corpus(), mutation::forgetful_c);
    o.require(!m.ok(), "the mutated multiplication was not detected");
    summary = std::to_string(r.checks.size()) + " law checks, " + std::to_string(r.failures()) +
              " violations; mutated multiplication caught by " + std::to_string(m.failures()) + " checks (" +
              first_failure(m) + ")";
    return o;
}

// -- 3 ----------------------------------------------------------------------
Outcome chevalley_vs_oracle(std::string& summary) {
    Outcome o;
    const Corpus& c = standard_corpus();
    o.require(c.bundles.size() >= 10, "corpus has fewer than 10 bundles");
    std::size_t disagreements = 0;
    for (const auto& nb : c.bundles) {
        const bool opf = is_opfibration(nb.bundle).holds;
        const bool fib = is_fibration(nb.bundle).holds;
        if (opf != direct_supine_oracle(nb.bundle).holds) ++disagreements;
        if (fib != direct_prone_oracle(nb.bundle).holds) ++disagreements;
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements with the lift oracle");
    const auto expect = [&](const char* name, bool opf, bool fib) {
        const Bundle& p = c.bundle(name);
        o.require(is_opfibration(p).holds == opf && is_fibration(p).holds == fib, std::string("unexpected answer for ") + name);
    };
    expect("id_1", true, true);
    expect("id_2", true, true);
    expect("j0", false, true);
    expect("j1", true, false);
    expect("cod", true, true);
    expect("dom", true, true);
    summary = std::to_string(c.bundles.size()) + " bundles, " + std::to_string(disagreements) +
              " disagreements; id, j0, j1, cod, dom as expected";
    return o;
}

// -- 4 ----------------------------------------------------------------------
Outcome duality(std::string& summary) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& nb : standard_corpus().bundles) {
        o.require(is_fibration(nb.bundle).holds == is_opfibration(op_dual(nb.bundle)).holds, "duality fails on " + nb.name);
        o.require(is_pseudo_fibration(nb.bundle) == is_pseudo_opfibration(op_dual(nb.bundle)), "pseudo duality fails on " + nb.name);
        ++n;
    }
    summary = std::to_string(n) + " bundles, fibration(p) = opfibration(op p) throughout";
    return o;
}

// -- 5 ----------------------------------------------------------------------
Outcome k_machinery(std::string& summary) {
    Outcome o;
    const Report r = verify_K_lemmas(standard_corpus());
    o.require(r.ok(), first_failure(r));
    const std::size_t prone = count_prefix(r, "K.d0_prone"), supine = count_prefix(r, "K.d1_supine");
    o.require(prone > 0 && supine > 0, "no prone/supine components checked");
    summary = std::to_string(prone) + " d0 components prone, " + std::to_string(supine) + " d1 components supine, " +
              std::to_string(r.checks.size()) + " checks in all, " + std::to_string(r.failures()) + " violations";
    return o;
}

// -- 6 ----------------------------------------------------------------------
Outcome transition_laws(std::string& summary) {
    Outcome o;
    std::size_t total = 0;
    for (const auto& t : builtin_functors()) {
        const Report r = verify_transition(t, standard_corpus());
        o.require(r.ok(), t.name + ": " + first_failure(r));
        o.require(count_prefix(r, "transition." + t.name + ".psi_invertible") > 0, t.name + ": no invertibility checks");
        o.require(count_prefix(r, "transition." + t.name + ".Psi_unit") > 0, t.name + ": no unit law checks");
        o.require(count_prefix(r, "transition." + t.name + ".Psi_mult") > 0, t.name + ": no multiplication law checks");
        total += r.checks.size();
    }
    const auto id = identity_endofunctor();
    const Report m = verify_transition(id, standard_corpus(), mutation::twisted_psi(id));
    o.require(!m.ok(), "the mutated transition map was not detected");
    summary = std::to_string(total) + " checks for identity, const_fiber:2, fiber_power:2; mutated transition caught (" +
              first_failure(m) + ")";
    return o;
}

// -- 7 ----------------------------------------------------------------------
Outcome preservation(std::string& summary) {
    Outcome o;
    std::size_t held = 0, vacuous = 0, checks = 0;
    for (const auto& t : builtin_functors())
        for (const auto& nb : standard_corpus().bundles)
            for (auto mode : {PreservationMode::opfibration, PreservationMode::pseudo_opfibration,
                              PreservationMode::fibration, PreservationMode::pseudo_fibration}) {
                try {
                    const Report r = check_preservation(t, nb.bundle, mode, nb.name);
                    o.require(r.ok(), first_failure(r));
                    checks += r.checks.size();
                    if (r.checks.size() == 1 && r.checks[0].status == Status::vacuous)
                        ++vacuous;
                    else
                        ++held;
                } catch (const Error& e) {
                    o.require(false, e.what());
                }
                if (mode != PreservationMode::opfibration) continue;
                const FibrationResult fr = is_opfibration(nb.bundle);
                if (!fr.holds) continue;
                const PseudoAlgebra alg = cleavage_to_algebra(*fr.cleavage);
                const PseudoAlgebra lifted = lift_algebra(t, alg);
                const Report lr = verify_pseudoalgebra(lifted, t.name + "(" + nb.name + ")");
                o.require(lr.ok(), first_failure(lr));
                if (alg.zeta.is_identity())
                    o.require(lifted.zeta.is_identity(), "lifted unit not an identity on " + nb.name);
            }
    summary = std::to_string(held) + " (T, p, mode) cases hold, " + std::to_string(vacuous) + " without the hypothesis, " +
              std::to_string(checks) + " checks, 0 violations";
    if (!o.pass) summary = "violation";
    return o;
}

// -- 8 ----------------------------------------------------------------------
Outcome negative_validation(std::string& summary) {
    Outcome o;
    const Report r = validate_indexed(base_square(), standard_corpus());
    std::string witness;
    for (const auto& c : r.checks)
        if (c.status == Status::fail && c.id.find(".prone[") != std::string::npos && !c.witnesses.empty()) {
            witness = c.witnesses[0];
            break;
        }
    o.require(!witness.empty(), "base_square passed validate_indexed");

    const Bundle& p = standard_corpus().bundle("iso_1");
    const Category& e = *p.total();
    Cleavage cl{CleavageKind::opcleavage, p, {}};
    cl.lifts[{e.object_index(atom("0")), 0}] = e.morphism_index(atom("u"));
    cl.lifts[{e.object_index(atom("1")), 0}] = e.identity(e.object_index(atom("1")));
    const PseudoAlgebra alg = cleavage_to_algebra(cl);
    o.require(!alg.zeta.is_identity(), "zeta is an identity for a non-normalized cleavage");
    o.require(classify(alg) == AlgebraKind::pseudo, "not classified pseudo-only");
    bool flagged = false;
    for (const auto& c : verify_pseudoalgebra(alg).checks)
        if (c.id == "alg.normalized[alg]") flagged = c.status == Status::vacuous;
    o.require(flagged, "normality not flagged as pseudo only");
    summary = "base_square: " + witness + "; non-normalized cleavage of the walking iso over 1 is pseudo only";
    return o;
}

// -- 9 ----------------------------------------------------------------------
struct Proc {
    int code = -1;
    std::string out;
};

Proc run_cli(const std::string& args) {
    Proc p;
    const std::string cmd = std::string(FIBCAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
    const int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

Outcome cli_determinism(std::string& summary) {
    Outcome o;
    const std::string dir = FIBCAT_CORPUS_DIR;
    const std::vector<std::string> suites = {
        "report " + dir + "/cod2.cat --format json",
        "report " + dir + "/corpus --format json",
        "monad-laws " + dir + "/corpus --format json",
        "k-lemmas " + dir + "/corpus --format json",
        "check --opfibration --fibration " + dir + "/corpus --format json",
        "transition --functor fiber_power:2 " + dir + "/corpus --format json",
        "preserve --functor const_fiber:2 --mode fibration " + dir + "/corpus --format json",
    };
    for (const auto& s : suites) {
        const Proc a = run_cli(s), b = run_cli(s);
        o.require(a.code >= 0 && a.code <= 1 && !a.out.empty(), "no report from: " + s);
        o.require(a.out == b.out && a.code == b.code, "output differs between runs: " + s);
    }
    const auto expect = [&](const std::string& args, int code) {
        o.require(run_cli(args).code == code, "expected exit " + std::to_string(code) + " from: " + args);
    };
    expect("check --opfibration " + dir + "/j.cat", 1);
    expect("check --fibration " + dir + "/j.cat", 0);
    expect("preserve --functor fiber_power:2 --mode opfibration " + dir + "/cod2.cat", 0);
    expect("monad-laws " + dir + "/corpus/", 0);
    expect("check " + dir + "/j.cat", 2);
    expect("frobnicate", 2);
    expect("check --opfibration " + dir + "/missing.cat", 2);
    const Proc j = run_cli("check --opfibration " + dir + "/j.cat --format json");
    o.require(j.out.find("e=*, α=a") != std::string::npos, "witness e=*, α=a missing");
    summary = std::to_string(suites.size()) + " suites byte-identical across two runs; exit codes 0/1/2 as documented";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int n;
        const char* name;
        double budget_s;
        Outcome (*run)(std::string&);
    };
    const Criterion all[] = {
        {1, "comma construction", 5, comma_construction},
        {2, "monad laws", 30, monad_laws},
        {3, "Chevalley criterion vs lift oracle", 60, chevalley_vs_oracle},
        {4, "fibration/opfibration duality", 10, duality},
        {5, "K machinery", 30, k_machinery},
        {6, "transition laws", 120, transition_laws},
        {7, "preservation under indexed endofunctors", 180, preservation},
        {8, "negative validation", 10, negative_validation},
        {9, "CLI determinism and exit codes", 60, cli_determinism},
    };
    int failed = 0;
    for (const auto& c : all) {
        std::string summary;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(summary);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) o.require(false, "over the time budget");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.n << " (" << c.name << "): "
             << (o.pass ? summary : o.detail) << " [" << secs << " s, budget " << c.budget_s << " s]";
        std::cout << line.str() << "\n";
        failed += !o.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all 9 criteria passed")) << "\n";
    return failed ? 1 : 0;
}
