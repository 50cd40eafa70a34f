// Command-line surface for the zfseq library. Every subcommand emits
// line-delimited JSON (or CSV where --csv applies) and the process exit
// code reports the verdict: 0 ok, 1 a verification found a violation,
// 2 usage error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "zfseq/behaving.hpp"
#include "zfseq/core.hpp"
#include "zfseq/enumerate.hpp"
#include "zfseq/extremal.hpp"
#include "zfseq/index.hpp"
#include "zfseq/structure.hpp"

using json = nlohmann::ordered_json;
using namespace zfseq;

namespace {

struct Clock {
    bool enabled = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void stamp(json& obj) const {
        if (!enabled) return;
        obj["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
    }
};

void emit(const json& obj) { std::printf("%s\n", obj.dump().c_str()); }

GroupSequence parse_sequence(const std::vector<int>& args) {
    if (args.size() < 2)
        throw CLI::ValidationError("expected a modulus followed by at least one term");
    return GroupSequence(args[0], {args.begin() + 1, args.end()});
}

json terms_json(const GroupSequence& alpha) { return json(alpha.terms); }

int exit_violation = 0;  // sticky: any failed check flips the exit code to 1

void run_check(const std::vector<int>& args, const Clock& clock) {
    GroupSequence alpha = parse_sequence(args);
    json out{{"command", "check"}, {"n", alpha.n}, {"terms", terms_json(alpha)}};
    auto witness = find_zero_subsequence(alpha);
    out["zero_free"] = !witness.has_value();
    if (witness) {
        json pos = json::array();
        for (int p : witness->positions) pos.push_back(p + 1);
        out["zero_sum_positions"] = pos;
    } else {
        out["sumset"] = json(sumset(alpha).elements());
        out["L"] = seq_L(alpha);
        out["index"] = index_of(alpha).index;
    }
    clock.stamp(out);
    emit(out);
}

void run_sumset(const std::vector<int>& args, const Clock& clock) {
    GroupSequence alpha = parse_sequence(args);
    Sumset s = sumset(alpha);
    json out{{"command", "sumset"},
             {"n", alpha.n},
             {"terms", terms_json(alpha)},
             {"sumset", json(s.elements())},
             {"size", s.count()},
             {"contains_zero", s.contains_zero()}};
    clock.stamp(out);
    emit(out);
}

void run_index(const std::vector<int>& args, const Clock& clock) {
    GroupSequence alpha = parse_sequence(args);
    IndexReport rep = index_of(alpha);
    json per_unit = json::object();
    for (const auto& [g, L] : rep.per_unit_L) per_unit[std::to_string(g)] = L;
    json out{{"command", "index"},
             {"n", alpha.n},
             {"terms", terms_json(alpha)},
             {"index", rep.index},
             {"argmin_g", rep.argmin_g},
             {"per_unit_L", per_unit}};
    clock.stamp(out);
    emit(out);
}

void run_decompose(const std::vector<int>& args, const Clock& clock) {
    GroupSequence alpha = parse_sequence(args);
    BehavingDecomposition dec = decompose(alpha);
    json out{{"command", "decompose"},
             {"n", alpha.n},
             {"terms", terms_json(alpha)},
             {"base", dec.base},
             {"s", json(dec.s)},
             {"S", dec.S}};
    clock.stamp(out);
    emit(out);
}

void run_classify(const std::vector<int>& args, const Clock& clock) {
    GroupSequence alpha = parse_sequence(args);
    ClassificationTag tag = classify_form(alpha);
    const char* name = tag.form == Form::Form1    ? "1"
                       : tag.form == Form::Form2a ? "2a"
                                                  : "2b";
    json out{{"command", "classify"},
             {"n", alpha.n},
             {"terms", terms_json(alpha)},
             {"form", name},
             {"u", tag.u},
             {"v", tag.v},
             {"beta", terms_json(tag.beta)},
             {"threshold", classification_threshold(alpha.n)}};
    clock.stamp(out);
    emit(out);
}

void run_enumerate(const EnumerationSpec& spec, bool count_only, bool parallel,
                   const Clock& clock) {
    json tail{{"command", "enumerate"},
              {"n", spec.n},
              {"length", spec.length},
              {"canonical_only", spec.canonical_only}};
    if (count_only) {
        tail["count"] =
            parallel ? count_zero_free_parallel(spec) : count_zero_free(spec);
    } else {
        auto seqs = parallel ? enumerate_zero_free_parallel(spec)
                             : enumerate_zero_free(spec);
        for (const GroupSequence& s : seqs) emit(json{{"terms", terms_json(s)}});
        tail["count"] = seqs.size();
    }
    clock.stamp(tail);
    emit(tail);
}

void run_minimal_zero(int n, int length, const Clock& clock) {
    auto seqs = enumerate_minimal_zero(n, length);
    for (const GroupSequence& s : seqs) emit(json{{"terms", terms_json(s)}});
    json tail{{"command", "minimal-zero"},
              {"n", n},
              {"length", length},
              {"count", seqs.size()}};
    clock.stamp(tail);
    emit(tail);
}

void run_verify_major(int min_n, int max_n, bool parallel, const Clock& clock) {
    VerificationReport rep = verify_theorem_major(min_n, max_n, parallel);
    json violations = json::array();
    for (const Violation& v : rep.violations)
        violations.push_back(
            json{{"n", v.n}, {"terms", json(v.terms)}, {"reason", v.reason}});
    json out{{"command", "verify major"},
             {"n_lo", rep.n_lo},
             {"n_hi", rep.n_hi},
             {"sequences_checked", rep.sequences_checked},
             {"violations", violations},
             {"verified", rep.verified()}};
    clock.stamp(out);
    emit(out);
    if (!rep.verified()) exit_violation = 1;
}

void run_verify_ell(int min_n, int max_n, const Clock& clock) {
    bool all_match = true;
    for (int n = min_n; n <= max_n; ++n) {
        int brute = ell_of_zn(n, EllMode::brute);
        int formula = ell_of_zn(n, EllMode::formula);
        bool match = brute == formula;
        all_match = all_match && match;
        emit(json{{"command", "verify ell"},
                  {"n", n},
                  {"brute", brute},
                  {"formula", formula},
                  {"match", match}});
    }
    json tail{{"command", "verify ell"}, {"verified", all_match}};
    clock.stamp(tail);
    emit(tail);
    if (!all_match) exit_violation = 1;
}

void run_verify_families(const std::vector<int>& moduli, const Clock& clock) {
    bool all_ok = true;
    for (int n : moduli) {
        FamilyReport rep = counterexample_families(n);
        all_ok = all_ok && rep.ok();
        emit(json{{"command", "verify families"},
                  {"n", n},
                  {"family", terms_json(rep.family)},
                  {"zero_free", rep.zero_free},
                  {"length_ok", rep.length_ok},
                  {"min_L_over_units", rep.min_L_over_units},
                  {"variant", terms_json(rep.minimal_variant)},
                  {"variant_minimal_zero", rep.variant_minimal_zero},
                  {"variant_index", rep.variant_index},
                  {"ok", rep.ok()}});
    }
    json tail{{"command", "verify families"}, {"verified", all_ok}};
    clock.stamp(tail);
    emit(tail);
    if (!all_ok) exit_violation = 1;
}

void emit_extremal_row(const char* command, const ExtremalRecord& rec, bool csv) {
    bool match = rec.value == rec.bound_formula;
    if (csv) {
        std::string w;
        for (size_t i = 0; i < rec.witness.terms.size(); ++i)
            w += (i ? " " : "") + std::to_string(rec.witness.terms[i]);
        std::printf("%d,%d,%d,%d,%s,%s\n", rec.n, rec.ell, rec.value,
                    rec.bound_formula, match ? "true" : "false", w.c_str());
    } else {
        emit(json{{"command", command},
                  {"n", rec.n},
                  {"ell", rec.ell},
                  {"value", rec.value},
                  {"bound_formula", rec.bound_formula},
                  {"match", match},
                  {"witness", terms_json(rec.witness)}});
    }
    if (!match) exit_violation = 1;
}

void run_extremal(bool generator, int n, int ell, bool table, int max_n, bool csv) {
    const char* command = generator ? "extremal generator" : "extremal term";
    auto cell = generator ? min_max_generator_multiplicity
                          : min_max_term_multiplicity;
    if (csv) std::printf("n,ell,value,bound_formula,match,witness\n");
    if (table) {
        for (int m = 4; m <= max_n; ++m)
            for (int l = m / 2 + 1; l < m; ++l) emit_extremal_row(command, cell(m, l), csv);
    } else {
        emit_extremal_row(command, cell(n, ell), csv);
    }
}

void emit_hnk_row(const HnkRecord& rec, bool csv) {
    bool in_range = h_formula_in_range(rec.n, rec.k);
    int formula = in_range ? h_of_formula(rec.n, rec.k) : -1;
    bool match = !in_range || rec.value == formula;
    if (csv) {
        std::printf("%d,%d,%d,%s,%s\n", rec.n, rec.k, rec.value,
                    in_range ? std::to_string(formula).c_str() : "",
                    match ? "true" : "false");
    } else {
        json out{{"command", "hnk"},
                 {"n", rec.n},
                 {"k", rec.k},
                 {"brute", rec.value},
                 {"proven_range", in_range}};
        if (in_range) out["formula"] = formula;
        out["match"] = match;
        out["witness"] = terms_json(rec.witness);
        emit(out);
    }
    if (in_range && !match) exit_violation = 1;
}

void run_hnk(int n, int k, bool table, bool conjecture, int max_n, bool csv) {
    if (conjecture) {
        if (csv) std::printf("n,k,brute,formula,proven_range,match\n");
        for (const ConjectureRow& row : conjecture_scan(max_n)) {
            if (csv) {
                std::printf("%d,%d,%d,%d,%s,%s\n", row.n, row.k, row.brute,
                            row.formula, row.proven_range ? "true" : "false",
                            row.match ? "true" : "false");
            } else {
                emit(json{{"command", "hnk"},
                          {"n", row.n},
                          {"k", row.k},
                          {"brute", row.brute},
                          {"formula", row.formula},
                          {"proven_range", row.proven_range},
                          {"match", row.match}});
            }
            if (row.proven_range && !row.match) exit_violation = 1;
        }
        return;
    }
    if (csv) std::printf("n,k,brute,formula,match\n");
    if (table) {
        for (int m = 2; m <= max_n; ++m) {
            for (int kk = 1; kk <= m; ++kk) {
                try {
                    emit_hnk_row(h_of_brute(m, kk), csv);
                } catch (const std::invalid_argument&) {
                    break;  // no zero-free sequence has this many distinct terms
                }
            }
        }
    } else {
        emit_hnk_row(h_of_brute(n, k), csv);
    }
}

void run_olson(int n, int max_n, const Clock& clock) {
    const int lo = max_n > 0 ? 2 : n;
    const int hi = max_n > 0 ? max_n : n;
    bool all_ok = true;
    for (int m = lo; m <= hi; ++m) {
        int ol = olson_brute(m);
        int lb = olson_lower_bound(m);
        all_ok = all_ok && ol >= lb;
        json out{{"command", "olson"},
                 {"n", m},
                 {"olson", ol},
                 {"lower_bound", lb},
                 {"ok", ol >= lb}};
        clock.stamp(out);
        emit(out);
    }
    if (!all_ok) exit_violation = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure theory of long zero-free sequences in Z_n"};
    app.require_subcommand(1);

    int workers = 0;
    if (const char* env = std::getenv("ZFSEQ_WORKERS")) workers = std::atoi(env);
    app.add_option("--workers", workers, "OpenMP thread count (0 = runtime default)");
    Clock clock;
    app.add_flag("--timing", clock.enabled, "add an elapsed_seconds field");

    std::vector<int> seq_args;
    auto add_seq_cmd = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("values", seq_args, "modulus followed by terms")
            ->required()
            ->expected(-2);
        return sub;
    };
    CLI::App* cmd_check = add_seq_cmd("check", "zero-freeness, sumset, L and index");
    CLI::App* cmd_sumset = add_seq_cmd("sumset", "set of nonempty subsequence sums");
    CLI::App* cmd_index = add_seq_cmd("index", "min of L(g*alpha) over units g");
    CLI::App* cmd_decompose =
        add_seq_cmd("decompose", "behaving decomposition over a base term");
    CLI::App* cmd_classify =
        add_seq_cmd("classify", "form of a zero-free sequence of length > n/2");

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "zero-free sequences");
    int en_n = 0, en_length = 0, en_min_distinct = 0;
    bool en_canonical = false, en_count = false, en_serial = false;
    cmd_enum->add_option("n", en_n, "modulus")->required();
    cmd_enum->add_option("--length", en_length, "sequence length")->required();
    cmd_enum->add_flag("--canonical", en_canonical, "canonical representatives only");
    cmd_enum->add_option("--min-distinct", en_min_distinct, "minimum distinct terms");
    cmd_enum->add_flag("--count-only", en_count, "emit only the count");
    cmd_enum->add_flag("--serial", en_serial, "use the serial reference kernel");

    CLI::App* cmd_mz = app.add_subcommand("minimal-zero", "minimal zero sequences");
    int mz_n = 0, mz_length = 0;
    cmd_mz->add_option("n", mz_n, "modulus")->required();
    cmd_mz->add_option("--length", mz_length, "sequence length")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "brute-force verification");
    cmd_verify->require_subcommand(1);
    int v_min_n = 2, v_max_n = 12;
    bool v_serial = false;
    CLI::App* cmd_vmajor = cmd_verify->add_subcommand(
        "major", "index < n and decomposition for every long zero-free sequence");
    cmd_vmajor->add_option("--min-n", v_min_n, "smallest modulus");
    cmd_vmajor->add_option("--max-n", v_max_n, "largest modulus");
    cmd_vmajor->add_flag("--serial", v_serial, "use the serial reference kernel");
    CLI::App* cmd_vell =
        cmd_verify->add_subcommand("ell", "brute ell(Z_n) against the closed form");
    cmd_vell->add_option("--min-n", v_min_n, "smallest modulus");
    cmd_vell->add_option("--max-n", v_max_n, "largest modulus");
    CLI::App* cmd_vfam = cmd_verify->add_subcommand(
        "families", "the short families with index above n");
    std::vector<int> fam_moduli;
    cmd_vfam->add_option("n", fam_moduli, "moduli (even >= 6 or odd >= 9)")
        ->required()
        ->expected(-1);

    CLI::App* cmd_extremal =
        app.add_subcommand("extremal", "minimum over sequences of the max multiplicity");
    cmd_extremal->require_subcommand(1);
    int ex_n = 0, ex_ell = 0, ex_max_n = 12;
    bool ex_table = false, ex_csv = false;
    for (const char* name : {"term", "generator"}) {
        CLI::App* sub = cmd_extremal->add_subcommand(
            name, std::string("multiplicity of a ") + name);
        sub->add_option("n", ex_n, "modulus");
        sub->add_option("ell", ex_ell, "sequence length");
        sub->add_flag("--table", ex_table, "all cells n/2 < ell < n up to --max-n");
        sub->add_option("--max-n", ex_max_n, "largest modulus for --table");
        sub->add_flag("--csv", ex_csv, "CSV output");
    }

    CLI::App* cmd_hnk =
        app.add_subcommand("hnk", "least length forcing a zero sum at k distinct terms");
    int h_n = 0, h_k = 0, h_max_n = 12;
    bool h_table = false, h_conjecture = false, h_csv = false;
    cmd_hnk->add_option("n", h_n, "modulus");
    cmd_hnk->add_option("k", h_k, "distinct-term count");
    cmd_hnk->add_flag("--table", h_table, "all (n, k) up to --max-n");
    cmd_hnk->add_flag("--conjecture", h_conjecture,
                      "scan brute vs formula beyond the proven range");
    cmd_hnk->add_option("--max-n", h_max_n, "largest modulus for --table/--conjecture");
    cmd_hnk->add_flag("--csv", h_csv, "CSV output");

    CLI::App* cmd_olson = app.add_subcommand("olson", "Olson constant of Z_n");
    int ol_n = 0, ol_max_n = 0;
    cmd_olson->add_option("n", ol_n, "modulus");
    cmd_olson->add_option("--max-n", ol_max_n, "report every modulus in [2, max-n]");

    // let --workers/--timing appear after the subcommand name
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* sub) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) enable_fallthrough(nested);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#endif

    try {
        if (cmd_check->parsed()) run_check(seq_args, clock);
        if (cmd_sumset->parsed()) run_sumset(seq_args, clock);
        if (cmd_index->parsed()) run_index(seq_args, clock);
        if (cmd_decompose->parsed()) run_decompose(seq_args, clock);
        if (cmd_classify->parsed()) run_classify(seq_args, clock);
        if (cmd_enum->parsed()) {
            EnumerationSpec spec;
            spec.n = en_n;
            spec.length = en_length;
            spec.canonical_only = en_canonical;
            spec.min_distinct = en_min_distinct;
            run_enumerate(spec, en_count, !en_serial, clock);
        }
        if (cmd_mz->parsed()) run_minimal_zero(mz_n, mz_length, clock);
        if (cmd_vmajor->parsed()) run_verify_major(v_min_n, v_max_n, !v_serial, clock);
        if (cmd_vell->parsed()) run_verify_ell(v_min_n, v_max_n, clock);
        if (cmd_vfam->parsed()) run_verify_families(fam_moduli, clock);
        if (cmd_extremal->parsed()) {
            bool generator = cmd_extremal->get_subcommands().front()->get_name() ==
                             "generator";
            if (!ex_table && (ex_n == 0 || ex_ell == 0))
                throw CLI::ValidationError("extremal needs n and ell, or --table");
            run_extremal(generator, ex_n, ex_ell, ex_table, ex_max_n, ex_csv);
        }
        if (cmd_hnk->parsed()) {
            if (!h_table && !h_conjecture && (h_n == 0 || h_k == 0))
                throw CLI::ValidationError("hnk needs n and k, or --table/--conjecture");
            run_hnk(h_n, h_k, h_table, h_conjecture, h_max_n, h_csv);
        }
        if (cmd_olson->parsed()) {
            if (ol_n == 0 && ol_max_n == 0)
                throw CLI::ValidationError("olson needs n or --max-n");
            run_olson(ol_n, ol_max_n, clock);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const invariant_violation& e) {
        std::fprintf(stderr, "invariant violation: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return exit_violation;
}
