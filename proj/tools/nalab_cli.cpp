// Command-line front end: identity checking, double construction, bialgebra
// verification, Yang-Baxter analysis, r-matrix search, and fixture regression
// over the JSON file formats.
//
// Exit codes: 0 all requested predicates pass, 1 some predicate is false,
// 2 input or precondition error.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nalab/bimodule.hpp"
#include "nalab/coboundary.hpp"
#include "nalab/double_bialgebra.hpp"
#include "nalab/identities.hpp"
#include "nalab/io.hpp"
#include "nalab/quadratic.hpp"
#include "nalab/report_tree.hpp"

namespace {

using namespace nalab;

constexpr int kExitOk = 0;
constexpr int kExitPredicateFalse = 1;
constexpr int kExitError = 2;

struct GlobalOpts {
    bool json = false;
    std::size_t jobs = 1;
    unsigned seed = 0;
};

void emit(const ReportNode& root, const GlobalOpts& opts) {
    if (opts.json) {
        std::cout << to_json(root).dump(2) << "\n";
    } else {
        std::string text;
        render_text(root, text);
        std::cout << text;
    }
}

/// Deterministic parallel map: evaluate tasks on up to `jobs` threads, keep
/// result order.
std::vector<ReportNode> run_tasks(std::vector<std::function<ReportNode()>> tasks,
                                  std::size_t jobs) {
    std::vector<ReportNode> out(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](std::size_t slot) {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                out[i] = tasks[i]();
            }
        } catch (...) {
            errors[slot] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

Document load_checked(const std::string& path, DocKind want) {
    Document doc = load_document(path);
    if (doc.kind != want)
        throw parse_error(path + " is a '" + kind_name(doc.kind) + "' file, expected '" +
                          kind_name(want) + "'");
    return doc;
}

std::string triple_witness_text(const std::optional<TripleWitness>& w) {
    return w ? w->describe() : std::string();
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, IdentityKind>> kIdentityPredicates = {
    {"nearly-associative", IdentityKind::nearly_associative},
    {"associative", IdentityKind::associative},
    {"l-commutative", IdentityKind::l_commutative},
    {"r-commutative", IdentityKind::r_commutative},
    {"lr", IdentityKind::lr},
    {"flexible", IdentityKind::flexible},
    {"quasi-commutative", IdentityKind::quasi_commutative},
    {"nal", IdentityKind::nal},
};

ReportNode eval_predicate(const Algebra& a, const std::string& name, unsigned seed) {
    for (const auto& [pname, kind] : kIdentityPredicates)
        if (pname == name) {
            auto [ok, w] = check_identity(a, kind);
            return ReportNode::value(name, ok, triple_witness_text(w));
        }
    if (name == "lie-admissible") return ReportNode::value(name, is_lie_admissible(a));
    if (name == "jordan-admissible") return ReportNode::value(name, is_jordan_admissible(a));
    if (name == "lie-poisson-jordan")
        return ReportNode::value(name, is_lie_poisson_jordan(a, LeibnizReading::corrected));
    if (name == "lie-poisson-jordan-repeated-y")
        return ReportNode::value(name, is_lie_poisson_jordan(a, LeibnizReading::repeated_y));
    if (name == "solvable") return ReportNode::value(name, is_solvable(a));
    if (name == "solvable-minus") return ReportNode::value(name, is_solvable(minus_algebra(a)));
    if (name == "minus-2-nilpotent")
        return ReportNode::value(name, is_nilpotent_of_class(minus_algebra(a), 2));
    if (name == "minus-3-nilpotent")
        return ReportNode::value(name, is_nilpotent_of_class(minus_algebra(a), 3));
    if (name == "operator-identities")
        return ReportNode::from_check(name, check_operator_identities(a));
    if (name == "coadjoint") {
        auto [ok, rep] = coadjoint_exists(a);
        ReportNode node = ReportNode::from_check(name, rep);
        node.verdict = ok ? "true" : "false";
        return node;
    }
    if (name == "na-consequences") return ReportNode::from_check(name, check_na_consequences(a));
    if (name == "nal-structure") return ReportNode::from_check(name, check_nal_structure(a));
    if (name == "characterize-nal") {
        auto [ok, rep] = characterize_nal(a);
        ReportNode node = ReportNode::from_check(name, rep);
        node.verdict = ok ? "true" : "false";
        return node;
    }
    if (name == "multilinearity-sample") {
        // confirm each basis-triple verdict on 50 random small-coordinate
        // triples; exactness makes any disagreement a hard failure
        std::mt19937 eng(seed);
        auto coord = [&]() { return Rat(static_cast<long>(eng() % 5) - 2); };
        bool agree = true;
        for (const auto& [pname, kind] : kIdentityPredicates) {
            const bool verdict = holds(a, kind);
            if (!verdict) continue;
            for (int t = 0; t < 50 && agree; ++t) {
                Vec x(a.dim), y(a.dim), z(a.dim);
                for (std::size_t i = 0; i < a.dim; ++i) {
                    x[i] = coord();
                    y[i] = coord();
                    z[i] = coord();
                }
                auto [lhs, rhs] = identity_sides_at(a, kind, x, y, z);
                if (lhs != rhs) agree = false;
            }
        }
        return ReportNode::assertion(name, agree);
    }
    throw error("unknown predicate '" + name + "'");
}

int cmd_check(const std::string& file, std::vector<std::string> predicates, bool full,
              const GlobalOpts& opts) {
    const Algebra a = load_checked(file, DocKind::algebra).as_algebra();
    ReportNode root = ReportNode::info("check " + (a.label.empty() ? file : a.label));

    const bool battery = full || predicates.empty();
    if (battery) {
        predicates.clear();
        for (const auto& [pname, kind] : kIdentityPredicates) predicates.push_back(pname);
        predicates.insert(predicates.end(),
                          {"lie-admissible", "jordan-admissible", "lie-poisson-jordan", "solvable",
                           "solvable-minus", "minus-2-nilpotent", "minus-3-nilpotent",
                           "operator-identities", "characterize-nal", "multilinearity-sample"});
        if (holds(a, IdentityKind::nearly_associative)) {
            predicates.push_back("coadjoint");
            predicates.push_back("na-consequences");
        }
        if (holds(a, IdentityKind::nal)) predicates.push_back("nal-structure");
    }

    std::vector<std::function<ReportNode()>> tasks;
    for (const std::string& name : predicates)
        tasks.push_back([&a, name, &opts] { return eval_predicate(a, name, opts.seed); });
    for (auto& node : run_tasks(std::move(tasks), opts.jobs)) root.children.push_back(std::move(node));

    emit(root, opts);
    if (battery) return kExitOk; // informational profile
    return root.any_false() ? kExitPredicateFalse : kExitOk;
}

// ---------------------------------------------------------------------------
// double / bialgebra
// ---------------------------------------------------------------------------

BialgebraCandidate load_candidate(const std::string& algebra_file, const std::string& coproduct_file) {
    const Algebra a = load_checked(algebra_file, DocKind::algebra).as_algebra();
    const Comultiplication d = load_checked(coproduct_file, DocKind::coproduct).as_coproduct();
    if (a.dim != d.dim) throw dimension_mismatch("algebra and coproduct dimensions differ");
    return {a, d};
}

int cmd_double(const std::string& algebra_file, const std::string& coproduct_file,
               const std::string& output, const GlobalOpts& opts) {
    const BialgebraCandidate bc = load_candidate(algebra_file, coproduct_file);
    detail::require_nal_halves(bc);
    const DoubleAlgebra dbl = build_double(bc);

    Document doc = document_from_algebra(dbl.inner);
    doc.note = "double of " + algebra_file + " and " + coproduct_file +
               "; basis order (e_1..e_n, e*_1..e*_n)";
    const std::string text = serialize_document(doc);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw error("cannot write " + output);
        out << text;
        ReportNode root = ReportNode::info("double");
        root.children.push_back(ReportNode::info("written", output));
        root.children.push_back(ReportNode::value(
            "double-quadratic", is_quadratic(dbl.inner, canonical_double_form(bc.alg.dim))));
        emit(root, opts);
    }
    return kExitOk;
}

int cmd_bialgebra(const std::string& algebra_file, const std::string& coproduct_file,
                  const GlobalOpts& opts) {
    const BialgebraCandidate bc = load_candidate(algebra_file, coproduct_file);
    auto [direct, direct_rep] = is_nal_bialgebra_direct(bc);
    auto [thm, thm_rep] = is_nal_bialgebra_coproduct(bc);
    const bool agree = direct == thm;
    if (!agree) throw internal_contradiction("the two bialgebra routes disagree");

    ReportNode root = ReportNode::info("bialgebra");
    root.children.push_back(ReportNode::value("double-route", direct));
    root.children.push_back(ReportNode::from_check("double-route-details", direct_rep));
    root.children.push_back(ReportNode::value("coproduct-route", thm));
    root.children.push_back(ReportNode::from_check("coproduct-route-details", thm_rep));
    root.children.push_back(ReportNode::assertion("routes-agree", agree));
    root.children.push_back(ReportNode::value(
        "double-quadratic", is_quadratic(build_double(bc).inner, canonical_double_form(bc.alg.dim))));
    emit(root, opts);
    return direct ? kExitOk : kExitPredicateFalse;
}

// ---------------------------------------------------------------------------
// ybe / search-r
// ---------------------------------------------------------------------------

ReportNode ybe_report_node(const Algebra& a, const Tensor2& r, const YbeReport& rep) {
    ReportNode root = ReportNode::info("ybe");
    root.children.push_back(ReportNode::info("r", render(r)));
    root.children.push_back(ReportNode::info("r12r23", render(rep.products.r12r23)));
    root.children.push_back(ReportNode::info("r13r12", render(rep.products.r13r12)));
    root.children.push_back(ReportNode::info("r23r13", render(rep.products.r23r13)));
    root.children.push_back(ReportNode::info("LR(r)", render(rep.products.lr)));
    root.children.push_back(ReportNode::value("lrybe-solution", rep.is_solution));
    ReportNode conds = ReportNode::info("coboundary-conditions");
    for (const auto& entry : rep.conditions)
        conds.children.push_back(ReportNode::value(
            entry.name, entry.pass, entry.witness ? entry.witness->describe() : std::string()));
    root.children.push_back(std::move(conds));
    root.children.push_back(ReportNode::from_check("delta-r-coalgebra", rep.coalgebra_checks));

    auto [cyc_ok, cyc_w] = cyclic_r_condition(a, r);
    root.children.push_back(ReportNode::assertion(
        "cyclic-pairing-agrees-with-lrybe", cyc_ok == rep.is_solution,
        cyc_w ? "first failing dual triple (" + std::to_string((*cyc_w)[0] + 1) + "," +
                    std::to_string((*cyc_w)[1] + 1) + "," + std::to_string((*cyc_w)[2] + 1) + ")"
              : std::string()));
    root.children.push_back(ReportNode::from_check("r-map-conditions", r_map_conditions(a, r)));
    root.children.push_back(ReportNode::value("coboundary-bialgebra", rep.coboundary_bialgebra));
    return root;
}

int cmd_ybe(const std::string& algebra_file, const std::string& r_file, const GlobalOpts& opts) {
    const Algebra a = load_checked(algebra_file, DocKind::algebra).as_algebra();
    const Tensor2 r = load_checked(r_file, DocKind::rmatrix).as_rmatrix();
    if (r.n != a.dim) throw dimension_mismatch("algebra and r-matrix dimensions differ");
    if (!r.is_skew()) throw skew_required("cmd_ybe");
    const YbeReport rep = coboundary_conditions(a, r);
    emit(ybe_report_node(a, r, rep), opts);
    return rep.coboundary_bialgebra ? kExitOk : kExitPredicateFalse;
}

int cmd_search_r(const std::string& algebra_file, const std::string& coeffs_text,
                 std::size_t support, const GlobalOpts& opts) {
    const Algebra a = load_checked(algebra_file, DocKind::algebra).as_algebra();
    std::vector<Rat> coeffs;
    std::stringstream ss(coeffs_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(Rat::parse(tok));
    if (coeffs.empty()) throw error("--coeffs must list at least one rational");

    const auto found = search_skew_r(a, coeffs, support, opts.jobs);
    ReportNode root = ReportNode::info("search-r");
    root.children.push_back(ReportNode::info(
        "params", "coeffs=" + coeffs_text + " support=" + std::to_string(support)));
    root.children.push_back(ReportNode::info("found", std::to_string(found.size())));
    for (const auto& [r, rep] : found) {
        ReportNode hit = ReportNode::info("candidate", render(r));
        hit.children.push_back(ReportNode::value("lrybe-solution", rep.is_solution));
        hit.children.push_back(ReportNode::value("coboundary-bialgebra", rep.coboundary_bialgebra));
        root.children.push_back(std::move(hit));
    }
    emit(root, opts);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// report (fixture regression)
// ---------------------------------------------------------------------------

bool eval_expected(const Document& doc, const std::string& dir, const std::string& key,
                   const GlobalOpts& opts) {
    switch (doc.kind) {
        case DocKind::algebra:
            return eval_predicate(doc.as_algebra(), key, opts.seed).verdict == "true";
        case DocKind::coproduct: {
            const Comultiplication c = doc.as_coproduct();
            if (key == "nearly-coassociative") return holds(c, CoalgebraKind::nearly_coassociative);
            if (key == "l-coalgebra") return holds(c, CoalgebraKind::l_coalgebra);
            if (key == "r-coalgebra") return holds(c, CoalgebraKind::r_coalgebra);
            if (key == "lr-coalgebra") return holds(c, CoalgebraKind::lr_coalgebra);
            if (key == "nal-coalgebra") return holds(c, CoalgebraKind::nal_coalgebra);
            throw error("unknown coproduct predicate '" + key + "'");
        }
        case DocKind::rmatrix: {
            const Tensor2 r = doc.as_rmatrix();
            if (key == "skew") return r.is_skew();
            if (doc.algebra_ref.empty()) throw error("r-matrix fixture lacks an algebra reference");
            const Algebra a =
                load_checked(dir + "/" + doc.algebra_ref, DocKind::algebra).as_algebra();
            if (key == "lrybe-solution") return lr_tensor(a, r).lr.is_zero();
            if (key == "coboundary-bialgebra") return coboundary_conditions(a, r).coboundary_bialgebra;
            throw error("unknown r-matrix predicate '" + key + "'");
        }
        case DocKind::form:
            throw error("form fixtures carry no expected predicates");
    }
    throw error("unreachable");
}

int cmd_report(std::vector<std::string> files, const std::string& dir, const GlobalOpts& opts) {
    namespace fs = std::filesystem;
    if (files.empty()) {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    }
    ReportNode root = ReportNode::info("report");
    bool all_ok = true;
    for (const std::string& file : files) {
        const Document doc = load_document(file);
        const std::string base = fs::path(file).parent_path().string();
        ReportNode node = ReportNode::info(doc.label.empty() ? file : doc.label);
        if (doc.expect.is_null()) {
            node.children.push_back(ReportNode::info("no expectations"));
        } else {
            for (const auto& [key, value] : doc.expect.items()) {
                const bool want = value.get<bool>();
                const bool got = eval_expected(doc, base.empty() ? "." : base, key, opts);
                node.children.push_back(ReportNode::assertion(
                    key, got == want,
                    got == want ? "" : std::string("expected ") + (want ? "true" : "false") +
                                           ", got " + (got ? "true" : "false")));
                all_ok = all_ok && got == want;
            }
        }
        root.children.push_back(std::move(node));
    }
    emit(root, opts);
    return all_ok ? kExitOk : kExitPredicateFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for nearly associative and LR-algebras"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "machine-readable report");
    app.add_option("--jobs", opts.jobs, "worker threads for independent checks")->default_val(1);
    app.add_option("--seed", opts.seed, "seed for randomized property samples")->default_val(0);

    std::string algebra_file, coproduct_file, r_file, output, coeffs = "1", dir = "fixtures";
    std::vector<std::string> predicates, files;
    bool full = false;
    std::size_t support = 1;

    auto* check = app.add_subcommand("check", "run identity predicates on an algebra file");
    check->fallthrough();
    check->add_option("algebra", algebra_file)->required();
    check->add_option("--predicate", predicates, "predicate name (repeatable)");
    check->add_flag("--full", full, "run the full battery (default when no predicate given)");

    auto* dbl = app.add_subcommand("double", "emit the double D(A) = A ⊕ A* as an algebra file");
    dbl->fallthrough();
    dbl->add_option("algebra", algebra_file)->required();
    dbl->add_option("coproduct", coproduct_file)->required();
    dbl->add_option("-o,--output", output, "output path (default: stdout)");

    auto* bia = app.add_subcommand("bialgebra", "verify the bialgebra property by both routes");
    bia->fallthrough();
    bia->add_option("algebra", algebra_file)->required();
    bia->add_option("coproduct", coproduct_file)->required();

    auto* ybe = app.add_subcommand("ybe", "analyze a skew r-matrix against the LRYBE");
    ybe->fallthrough();
    ybe->add_option("algebra", algebra_file)->required();
    ybe->add_option("r", r_file)->required();

    auto* search = app.add_subcommand("search-r", "enumerate skew bivector r-matrices");
    search->fallthrough();
    search->add_option("algebra", algebra_file)->required();
    search->add_option("--coeffs", coeffs, "comma-separated coefficient set")->capture_default_str();
    search->add_option("--support", support, "max number of bivector terms")->capture_default_str();

    auto* report = app.add_subcommand("report", "re-verify fixture expectations");
    report->fallthrough();
    report->add_option("files", files, "fixture files (default: all in --dir)");
    report->add_option("--dir", dir, "fixture directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(algebra_file, predicates, full, opts);
        if (dbl->parsed()) return cmd_double(algebra_file, coproduct_file, output, opts);
        if (bia->parsed()) return cmd_bialgebra(algebra_file, coproduct_file, opts);
        if (ybe->parsed()) return cmd_ybe(algebra_file, r_file, opts);
        if (search->parsed()) return cmd_search_r(algebra_file, coeffs, support, opts);
        if (report->parsed()) return cmd_report(files, dir, opts);
    } catch (const nalab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
