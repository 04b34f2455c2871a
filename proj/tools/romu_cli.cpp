// Command-line surface over the library: byte emission for external
// testers, cycle censuses, risk reports, published-table verification,
// dot-plots, micro-benchmarks, smoke runs and the low-d search loop.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "romu/romu.hpp"

namespace {

std::vector<uint64_t> parse_words(const std::string& text) {
    std::vector<uint64_t> words;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        words.push_back(std::stoull(item, nullptr, 0));
    }
    return words;
}

romu::RomuState resolve_state(const romu::GeneratorSpec& spec,
                              const std::string& seed_text,
                              std::optional<uint64_t> stream_index, uint64_t entropy) {
    if (!seed_text.empty()) {
        const auto words = parse_words(seed_text);
        return romu::seed(spec, words);
    }
    return romu::make_stream(spec, stream_index.value_or(0), entropy);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    return file;
}

int cmd_emit(const romu::GeneratorSpec& spec, romu::RomuState state, uint64_t count,
             const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (format == "raw") {
        romu::smoke::GeneratorByteSource src(state, count);
        const uint64_t total = count * spec.output_bits() / 8;
        std::vector<uint8_t> buf(size_t{1} << 16);
        uint64_t written = 0;
        while (written < total) {
            const size_t got = src.read(buf.data(), buf.size());
            if (got == 0) break;
            out.write(reinterpret_cast<const char*>(buf.data()),
                      static_cast<std::streamsize>(got));
            written += got;
        }
    } else {
        const int hex_digits = static_cast<int>((spec.output_bits() + 3) / 4);
        for (uint64_t i = 0; i < count; ++i) {
            const auto o = romu::next(state);
            if (format == "hex") {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%0*llx", hex_digits,
                              static_cast<unsigned long long>(o.value));
                out << buf << "\n";
            } else {
                out << o.value << "\n";
            }
        }
    }
    out.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Romu rotate-multiply generator toolkit"};
    app.require_subcommand(1);

    // ---- emit ----
    auto* emit = app.add_subcommand("emit", "write generator output to stdout or a file");
    std::string gen_name = "romutrio", seed_text, format = "raw", out_path;
    std::optional<uint64_t> stream_index;
    uint64_t entropy = 0, count = 0;
    emit->add_option("--generator", gen_name, "generator name")->capture_default_str();
    emit->add_option("--seed", seed_text, "comma-separated state words (nonzero)");
    emit->add_option("--stream-index", stream_index, "derive state for this stream index");
    emit->add_option("--entropy", entropy, "entropy word for stream derivation");
    emit->add_option("--count", count, "number of outputs")->required();
    emit->add_option("--format", format, "raw | hex | dec")->capture_default_str()
        ->check(CLI::IsMember({"raw", "hex", "dec"}));
    emit->add_option("--out", out_path, "output file (default stdout)");

    // ---- dotplot ----
    auto* dot = app.add_subcommand("dotplot", "successive-pair dot-plot as a PGM image");
    std::string dot_kind = "romu_r4_m715", dot_out = "dotplot.pgm";
    dot->add_option("--kind", dot_kind, "lcg477 | romu_r4_m715")->capture_default_str()
        ->check(CLI::IsMember({"lcg477", "romu_r4_m715"}));
    dot->add_option("--out", dot_out, "output PGM path")->capture_default_str();

    // ---- census ----
    auto* cen = app.add_subcommand("census", "exhaustive cycle census of a small-state map");
    std::string cen_variant = "mono", cen_out;
    unsigned cen_word_bits = 12;
    std::optional<uint64_t> cen_multiplier;
    std::vector<unsigned> cen_rotations;
    std::string cen_order = "mr";
    cen->add_option("--variant", cen_variant, "mono|duo|duojr|trio|quad")->capture_default_str();
    cen->add_option("--word-bits", cen_word_bits, "word width in bits")->capture_default_str();
    cen->add_option("--multiplier", cen_multiplier, "odd multiplier (default: shipped mini)");
    cen->add_option("--rotation", cen_rotations, "rotation count(s) (default: scaled)");
    cen->add_option("--order", cen_order, "mono step order: rm | mr")->capture_default_str()
        ->check(CLI::IsMember({"rm", "mr"}));
    cen->add_option("--out", cen_out, "CSV output file (default stdout)");

    // ---- risk ----
    auto* risk_cmd = app.add_subcommand("risk", "short-cycle and overlap probability reports");
    bool table2 = false, table3 = false, risk_csv = false;
    std::optional<unsigned> risk_s;
    std::optional<double> risk_l, risk_n, risk_p;
    risk_cmd->add_flag("--table2", table2, "render the shorter-cycle table");
    risk_cmd->add_flag("--table3", table3, "render the sequence-overlap table");
    risk_cmd->add_flag("--csv", risk_csv, "CSV output");
    risk_cmd->add_option("-s,--state-bits", risk_s, "state bits for a custom query");
    risk_cmd->add_option("-l,--log2-length", risk_l, "log2 sequence length");
    risk_cmd->add_option("-n,--log2-streams", risk_n, "log2 number of sequences");
    risk_cmd->add_option("-p,--log2-period", risk_p, "log2 known period (default 2^s)");

    // ---- verify-appendix ----
    auto* ver = app.add_subcommand("verify-appendix",
                                   "re-derive rows of the multiplier-rotation table");
    unsigned ver_rows = 3;
    bool ver_heavy = false, ver_both = false;
    std::string ver_out;
    ver->add_option("--rows", ver_rows, "number of rows to verify")->capture_default_str();
    ver->add_flag("--heavy", ver_heavy, "also rebuild seed-blocks (512 MiB set, minutes)");
    ver->add_flag("--both-orders", ver_both, "verify rotate-multiply and multiply-rotate");
    ver->add_option("--out", ver_out, "CSV output file (default stdout)");

    // ---- smoke ----
    auto* smk = app.add_subcommand("smoke", "internal smoke tests or external tester bridge");
    std::string smk_gen = "romutrio", smk_seed, smk_external, smk_log = "external_tester.log";
    std::optional<uint64_t> smk_stream;
    uint64_t smk_entropy = 0, smk_budget = uint64_t{1} << 26;
    size_t smk_block = size_t{1} << 16;
    smk->add_option("--generator", smk_gen, "generator name")->capture_default_str();
    smk->add_option("--seed", smk_seed, "comma-separated state words");
    smk->add_option("--stream-index", smk_stream, "derive state for this stream index");
    smk->add_option("--entropy", smk_entropy, "entropy word for stream derivation");
    smk->add_option("--budget", smk_budget, "byte budget")->capture_default_str();
    smk->add_option("--block-bytes", smk_block, "smoke block size")->capture_default_str();
    smk->add_option("--external-cmd", smk_external,
                    "external tester command (or ROMU_EXTERNAL_TESTER)");
    smk->add_option("--log", smk_log, "external tester log file")->capture_default_str();

    // ---- bench ----
    auto* ben = app.add_subcommand("bench", "per-call timing of the generators");
    std::vector<std::string> ben_cases;
    uint64_t ben_iters = 50'000'000;
    std::optional<double> ben_ghz;
    ben->add_option("--generators", ben_cases, "cases (default: all)");
    ben->add_option("--iterations", ben_iters, "calls per repetition (>= 1e6)")
        ->capture_default_str();
    ben->add_option("--ghz", ben_ghz, "clock frequency for cycles/call");

    // ---- search ----
    auto* sea = app.add_subcommand("search", "random search for low-d mono pairs");
    unsigned sea_min_rot = 8, sea_max_rot = 16;
    uint32_t sea_d_limit = 2000;
    uint64_t sea_attempts = 4, sea_seed = 1;
    std::string sea_order = "mr";
    sea->add_option("--min-rotation", sea_min_rot)->capture_default_str();
    sea->add_option("--max-rotation", sea_max_rot)->capture_default_str();
    sea->add_option("--d-limit", sea_d_limit)->capture_default_str();
    sea->add_option("--attempts", sea_attempts, "full-period walks, seconds each")
        ->capture_default_str();
    sea->add_option("--rng-seed", sea_seed)->capture_default_str();
    sea->add_option("--order", sea_order, "rm | mr")->capture_default_str()
        ->check(CLI::IsMember({"rm", "mr"}));

    // ---- capacity ----
    auto* cap = app.add_subcommand("capacity", "good-values vs cycle-period study (CSV)");
    std::string cap_variant = "duojr", cap_out;
    unsigned cap_word_bits = 8;
    std::optional<uint64_t> cap_multiplier;
    uint64_t cap_budget = uint64_t{1} << 20;
    int cap_doublings = 0;
    cap->add_option("--variant", cap_variant)->capture_default_str();
    cap->add_option("--word-bits", cap_word_bits)->capture_default_str();
    cap->add_option("--multiplier", cap_multiplier, "odd multiplier (default: shipped mini)");
    cap->add_option("--budget", cap_budget, "smoke byte budget per cycle")->capture_default_str();
    cap->add_option("--doublings", cap_doublings,
                    "extrapolate the plateau over this many state doublings")
        ->capture_default_str();
    cap->add_option("--out", cap_out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*emit) {
            const auto& spec = romu::find_spec(gen_name);
            auto state = resolve_state(spec, seed_text, stream_index, entropy);
            return cmd_emit(spec, std::move(state), count, format, out_path);
        }
        if (*dot) {
            const auto kind = dot_kind == "lcg477" ? romu::pgm::DotPlotKind::lcg477
                                                   : romu::pgm::DotPlotKind::romu_r4_m715;
            romu::pgm::DotPlotStats stats;
            const auto img = romu::pgm::dotplot(kind, &stats);
            img.write(dot_out);
            std::cout << dot_kind << ": period=" << stats.period
                      << " distinct_pairs=" << stats.distinct_pairs
                      << " collinear_fraction=" << stats.collinear_fraction << " -> " << dot_out
                      << "\n";
            return 0;
        }
        if (*cen) {
            const auto variant = romu::variant_from_name(cen_variant);
            const uint64_t mult =
                cen_multiplier.value_or(romu::default_mini_multiplier(cen_word_bits));
            romu::GeneratorSpec spec;
            if (!cen_rotations.empty()) {
                spec = romu::make_spec("census_probe", variant, cen_word_bits, mult,
                                       std::vector<unsigned>(cen_rotations.begin(),
                                                             cen_rotations.end()),
                                       romu::OutputRule::full_word,
                                       cen_order == "rm" ? romu::MonoOrder::rotate_multiply
                                                         : romu::MonoOrder::multiply_rotate);
            } else {
                // scale the full-size variant's rotations down to word_bits
                std::string full_name = std::string("romu") + cen_variant;
                if (variant == romu::Variant::mono) full_name = "romumono32";
                auto scaled = romu::scale_spec(romu::find_spec(full_name), cen_word_bits, mult);
                scaled.output_rule = romu::OutputRule::full_word;
                spec = std::move(scaled);
            }
            const auto c = romu::cycle::census(spec);
            std::ofstream file;
            romu::cycle::write_census_csv(open_out(file, cen_out), c);
            return 0;
        }
        if (*risk_cmd) {
            bool any = false;
            if (table2) {
                std::cout << romu::risk::render_table2(risk_csv);
                any = true;
            }
            if (table3) {
                if (any) std::cout << "\n";
                std::cout << romu::risk::render_table3(risk_csv);
                any = true;
            }
            if (risk_s) {
                romu::risk::RiskQuery q;
                q.s = *risk_s;
                q.log2_l = risk_l.value_or(0);
                q.log2_n = risk_n.value_or(0);
                q.log2_p = risk_p;
                const auto r = romu::risk::assess(q);
                std::cout << "s=" << q.s << " l=2^" << q.log2_l << " n=2^" << q.log2_n << "\n";
                std::cout << "  P(overlap | known period) = 2^" << r.log2_overlap_known << "\n";
                std::cout << "  P(overlap | Knuth bound)  = 2^" << r.log2_overlap_knuth << "\n";
                std::cout << "  P(overlap | Romu, sum)    = 2^" << r.log2_overlap_romu_sum << "\n";
                std::cout << "  P(overlap | Romu)         = 2^" << r.log2_overlap_romu_integral
                          << "\n";
                if (r.exact_overlap)
                    std::cout << "  exact product             = " << *r.exact_overlap << "\n";
                if (r.small_ratio_warning)
                    std::cout << "  warning: n*l/p is large; approximations degrade, "
                                 "prefer the exact product\n";
                any = true;
            }
            if (!any) {
                std::cerr << "risk: nothing to do (use --table2/--table3 or -s/-l/-n)\n";
                return 1;
            }
            return 0;
        }
        if (*ver) {
            namespace ms = romu::mono_search;
            const auto& rows = ms::appendix_rows();
            const unsigned limit = std::min<unsigned>(ver_rows, rows.size());
            std::vector<ms::RowCheck> checks;
            for (unsigned i = 0; i < limit; ++i) {
                checks.push_back(
                    ms::verify_row(rows[i], romu::MonoOrder::multiply_rotate, ver_heavy));
                if (ver_both)
                    checks.push_back(
                        ms::verify_row(rows[i], romu::MonoOrder::rotate_multiply, ver_heavy));
            }
            std::ofstream file;
            ms::write_verification_csv(open_out(file, ver_out), checks);
            size_t passed = 0;
            for (const auto& c : checks) passed += c.pass;
            std::cerr << passed << "/" << checks.size() << " pass\n";
            return passed == checks.size() ? 0 : 1;
        }
        if (*smk) {
            const auto& spec = romu::find_spec(smk_gen);
            auto state = resolve_state(spec, smk_seed, smk_stream, smk_entropy);
            romu::smoke::GeneratorByteSource src(state);
            const std::string cmd = romu::external::resolve_command(smk_external);
            if (!cmd.empty()) {
                const auto br = romu::external::run_external(cmd, src, smk_budget, smk_log);
                std::cout << "external: status=" << romu::external::status_name(br.status)
                          << " exit=" << br.exit_code << " bytes_sent=" << br.bytes_sent
                          << " log=" << br.log_path << "\n";
                return br.status == romu::external::Status::completed ? br.exit_code : 1;
            }
            romu::smoke::Config cfg;
            cfg.budget_bytes = smk_budget;
            cfg.block_bytes = smk_block;
            const auto v = romu::smoke::run_smoke(src, cfg);
            std::cout << "bytes_consumed=" << v.bytes_consumed;
            if (v.first_failure) {
                std::cout << " FAIL test=" << romu::smoke::test_name(v.first_failure->test)
                          << " block=" << v.first_failure->block_index
                          << " log10p=" << v.first_failure->log10_p << "\n";
                return 1;
            }
            std::cout << " no failure\n";
            return 0;
        }
        if (*ben) {
            if (ben_iters < 1'000'000) {
                std::cerr << "bench: iterations must be at least 1e6\n";
                return 1;
            }
            auto cases = ben_cases.empty() ? romu::bench::default_cases() : ben_cases;
            std::printf("%-12s %12s %12s\n", "generator", "ns/call", "cycles/call");
            for (const auto& name : cases) {
                const auto r = romu::bench::run_case(name, ben_iters);
                if (ben_ghz)
                    std::printf("%-12s %12.3f %12.2f\n", r.name.c_str(), r.ns_per_call,
                                r.ns_per_call * *ben_ghz);
                else
                    std::printf("%-12s %12.3f %12s\n", r.name.c_str(), r.ns_per_call, "-");
            }
            return 0;
        }
        if (*sea) {
            const auto order = sea_order == "rm" ? romu::MonoOrder::rotate_multiply
                                                 : romu::MonoOrder::multiply_rotate;
            const auto hits = romu::mono_search::search_low_d(sea_min_rot, sea_max_rot,
                                                              sea_d_limit, sea_attempts,
                                                              sea_seed, order);
            std::cout << "multiplier,rotation,order,period,d\n";
            for (const auto& h : hits)
                std::cout << h.pair.multiplier << "," << h.pair.rotation << "," << sea_order
                          << "," << h.period << "," << h.d << "\n";
            std::cerr << hits.size() << " hit(s) in " << sea_attempts << " attempt(s)\n";
            return 0;
        }
        if (*cap) {
            const auto variant = romu::variant_from_name(cap_variant);
            const uint64_t mult =
                cap_multiplier.value_or(romu::default_mini_multiplier(cap_word_bits));
            std::string full_name = std::string("romu") + cap_variant;
            if (variant == romu::Variant::mono) full_name = "romumono32";
            auto spec = romu::scale_spec(romu::find_spec(full_name), cap_word_bits, mult);
            spec.output_rule = romu::OutputRule::full_word;
            romu::smoke::Config cfg;
            cfg.budget_bytes = cap_budget;
            const auto points = romu::cycle::capacity_study(spec, cfg);
            std::ofstream file;
            std::ostream& out = open_out(file, cap_out);
            out << "log2_period,log2_good_values\n";
            double plateau = 0;
            for (const auto& p : points) {
                out << p.log2_period << "," << p.log2_good_values << "\n";
                plateau = std::max(plateau, p.log2_good_values);
            }
            if (cap_doublings > 0) {
                const auto est = romu::extrapolate_capacity(plateau, cap_doublings);
                std::cerr << "plateau 2^" << est.tested_log2_capacity << " values; after "
                          << cap_doublings << " doubling(s): 2^" << est.estimated_log2_capacity
                          << " values (x1.4 per doubling of log2)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
