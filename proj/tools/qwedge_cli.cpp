// Command-line front end: straightening, bar images, canonical basis rows,
// decomposition matrices, level-comparison checks, and abacus pictures.
//
// Exit codes: 0 success, 1 engine failure, 2 bad flags or malformed input,
// 3 a level-comparison check found a mismatch.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <qwedge/qwedge.hpp>

namespace {

using nlohmann::ordered_json;

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string buf;
    auto flush = [&] {
        if (buf.empty()) throw qwedge::InputError("empty entry in index list");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(buf, &used);
        } catch (const std::exception&) {
            throw qwedge::InputError("bad integer '" + buf + "' in index list");
        }
        if (used != buf.size()) throw qwedge::InputError("bad integer '" + buf + "' in index list");
        out.push_back(v);
        buf.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch != ' ') {
            buf += ch;
        }
    }
    if (!text.empty()) flush();
    return out;
}

qwedge::MultiPartition parse_partition(const std::string& text, int level) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw qwedge::InputError(std::string("partition must be JSON: ") + e.what());
    }
    return qwedge::multipartition_from_json(j, level);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

struct CacheFlags {
    bool disabled = false;
    std::string dir;

    qwedge::BarMatrix matrix(const qwedge::BlockSpec& spec, int r) const {
        return qwedge::bar_matrix_cached(spec, r, !disabled, dir);
    }
};

void add_cache_flags(CLI::App* cmd, CacheFlags& flags) {
    cmd->add_flag("--no-cache", flags.disabled, "compute without touching the on-disk cache");
    cmd->add_option("--cache-dir", flags.dir, "cache directory override");
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations in higher-level deformed Fock spaces"};
    app.require_subcommand(1);

    int n = 2, level = 1, r = 0;
    std::string charge_text, partition_text, sign_text = "minus";

    auto add_rank_level = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "rank")->required();
        cmd->add_option("--level", level, "number of sectors")->required();
    };

    // straighten ------------------------------------------------------------
    auto* straighten = app.add_subcommand("straighten", "normal-order a product of factors");
    add_rank_level(straighten);
    std::string indices_text;
    straighten->add_option("--indices", indices_text, "comma-separated factor indices")->required();

    // bar -------------------------------------------------------------------
    auto* bar = app.add_subcommand("bar", "bar image of a standard basis vector");
    add_rank_level(bar);
    bar->add_option("--charge", charge_text, "comma-separated charges, one per sector")->required();
    bar->add_option("--partition", partition_text, "label as JSON, e.g. [[2,1],[]]")->required();
    bar->add_option("--r", r, "truncation depth override (0 = automatic)");

    // canon -----------------------------------------------------------------
    auto* canon = app.add_subcommand("canon", "one canonical basis vector");
    add_rank_level(canon);
    canon->add_option("--charge", charge_text, "comma-separated charges")->required();
    canon->add_option("--partition", partition_text, "leading label as JSON")->required();
    canon->add_option("--sign", sign_text, "plus or minus");
    canon->add_option("--r", r, "truncation depth override (0 = automatic)");
    CacheFlags canon_cache;
    add_cache_flags(canon, canon_cache);

    // decomp ----------------------------------------------------------------
    auto* decomp = app.add_subcommand("decomp", "decomposition matrix of one block");
    add_rank_level(decomp);
    int size = 0;
    decomp->add_option("--charge", charge_text, "comma-separated charges")->required();
    decomp->add_option("--size", size, "number of boxes")->required();
    decomp->add_option("--sign", sign_text, "plus or minus");
    std::string format = "json";
    decomp->add_option("--format", format, "json, csv, or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    decomp->add_option("--r", r, "truncation depth override (0 = automatic)");
    CacheFlags decomp_cache;
    add_cache_flags(decomp, decomp_cache);

    // check-theorems --------------------------------------------------------
    auto* check = app.add_subcommand("check-theorems", "compare decomposition numbers across levels");
    std::string theorem = "A";
    int j_sector = 1, campaign = 0, jobs = 1;
    std::uint64_t seed = 0;
    bool labels = false, timings = false;
    check->add_option("--theorem", theorem, "A or B")
        ->check(CLI::IsMember({"A", "B"}))
        ->required();
    check->add_option("--n", n, "rank");
    check->add_option("--level", level, "number of sectors");
    check->add_option("--charge", charge_text, "comma-separated charges");
    check->add_option("--size", size, "number of boxes");
    check->add_option("--j", j_sector, "distinguished sector");
    check->add_option("--sign", sign_text, "plus or minus");
    check->add_option("--campaign", campaign, "run this many random cases instead of one");
    check->add_option("--seed", seed, "campaign random seed");
    check->add_option("--jobs", jobs, "worker threads for campaigns (0 = hardware)");
    check->add_flag("--labels", labels, "include per-pair details in campaign output");
    check->add_flag("--timings", timings, "include wall-clock timings in output");

    // abacus ----------------------------------------------------------------
    auto* abacus = app.add_subcommand("abacus", "bead picture of a standard basis vector");
    add_rank_level(abacus);
    abacus->add_option("--charge", charge_text, "comma-separated charges")->required();
    abacus->add_option("--partition", partition_text, "label as JSON")->required();
    abacus->add_option("--r", r, "truncation depth override (0 = automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (straighten->parsed()) {
        const auto word = parse_index_list(indices_text);
        const auto expansion = qwedge::normal_order(word, n, level);
        ordered_json out;
        out["n"] = n;
        out["level"] = level;
        out["input"] = word;
        auto terms = ordered_json::array();
        for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
            ordered_json term;
            term["word"] = it->first;
            term["coeff"] = it->second.to_json();
            terms.push_back(std::move(term));
        }
        out["terms"] = std::move(terms);
        emit(out);
        return 0;
    }

    if (bar->parsed()) {
        const auto charge = qwedge::multicharge_from_string(charge_text, level);
        const auto mp = parse_partition(partition_text, level);
        const qwedge::BlockSpec spec{n, level, charge, qwedge::multipartition_size(mp)};
        const auto image = qwedge::bar_vector(qwedge::unit_vector(spec, mp), r);
        emit(image.to_json());
        return 0;
    }

    if (canon->parsed()) {
        const auto charge = qwedge::multicharge_from_string(charge_text, level);
        const auto mp = parse_partition(partition_text, level);
        const qwedge::BlockSpec spec{n, level, charge, qwedge::multipartition_size(mp)};
        const auto sign = qwedge::sign_from_string(sign_text);
        const auto A = canon_cache.matrix(spec, r);
        const auto D = qwedge::canonical_basis(A, sign);
        const int row = D.index_of(mp);
        ordered_json out;
        out["block"] = spec.to_json();
        out["sign"] = qwedge::to_string(sign);
        out["r"] = D.r;
        out["lambda"] = qwedge::to_json(mp);
        auto terms = ordered_json::array();
        for (int k = row; k < D.dim(); ++k)
            if (!D.delta[row][k].is_zero()) {
                ordered_json term;
                term["multipartition"] = qwedge::to_json(D.order[k]);
                term["coeff"] = D.delta[row][k].to_json();
                terms.push_back(std::move(term));
            }
        out["terms"] = std::move(terms);
        emit(out);
        return 0;
    }

    if (decomp->parsed()) {
        const auto charge = qwedge::multicharge_from_string(charge_text, level);
        const qwedge::BlockSpec spec{n, level, charge, size};
        const auto sign = qwedge::sign_from_string(sign_text);
        const auto A = decomp_cache.matrix(spec, r);
        const auto D = qwedge::canonical_basis(A, sign);
        const auto rep = qwedge::verify_canonical(A, D);
        if (!rep.all_ok) {
            for (const auto& f : rep.failures) std::cerr << f << '\n';
            throw qwedge::EngineError("decomposition matrix failed verification");
        }
        if (format == "csv")
            std::cout << D.to_csv();
        else if (format == "latex")
            std::cout << D.to_latex();
        else
            emit(D.to_json());
        return 0;
    }

    if (check->parsed()) {
        if (campaign > 0) {
            qwedge::CampaignConfig cfg;
            cfg.theorem = theorem[0];
            cfg.count = campaign;
            cfg.seed = seed;
            cfg.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
            const auto rep = qwedge::run_theorem_campaign(cfg);
            emit(rep.to_json(labels, timings));
            return rep.all_pass ? 0 : 3;
        }
        qwedge::TheoremCase c;
        c.n = n;
        c.level = level;
        c.charge = qwedge::multicharge_from_string(charge_text, level);
        c.size = size;
        c.j = j_sector;
        c.sign = qwedge::sign_from_string(sign_text);
        const auto rep = theorem == "A" ? qwedge::check_theorem_A(c) : qwedge::check_theorem_B(c);
        emit(rep.to_json(true));
        return rep.all_pass ? 0 : 3;
    }

    if (abacus->parsed()) {
        const auto charge = qwedge::multicharge_from_string(charge_text, level);
        const auto mp = parse_partition(partition_text, level);
        const qwedge::BlockSpec spec{n, level, charge, qwedge::multipartition_size(mp)};
        const int depth = (r == 0) ? qwedge::choose_truncation(spec) : r;
        const auto word = qwedge::encode(mp, charge, n, depth);
        std::cout << qwedge::render_abacus(word, n, level);
        return 0;
    }

    return 2; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qwedge::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const qwedge::EngineError& e) {
        std::cerr << "engine error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
