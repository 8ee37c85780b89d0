// Command-line surface for the type-lattice library: comparisons, lattice
// operations, Ext queries, separations with verification, poset embeddings,
// and the self-test suites. Every answer is computed by the library; the
// tool only parses arguments and formats results.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error,
// 3 verification failure, 4 internal invariant breach.

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "typelattice/typelattice.hpp"

namespace {

using nlohmann::json;
using typelattice::ParseError;
using typelattice::cli::SessionConfig;
using typelattice::cli::parse_type;
using typelattice::cli::render_prime_set;
using typelattice::cli::render_type;
using typelattice::prime_sets::PrimeIndexing;
using typelattice::type_lattice::TypeRep;
namespace ext_oracle = typelattice::ext_oracle;
namespace poset_embed = typelattice::poset_embed;
namespace separation = typelattice::separation;

constexpr const char* kSchema = "typelattice/1";

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_cmp(const SessionConfig& cfg, const std::string& left_text,
            const std::string& right_text) {
    const PrimeIndexing ix(cfg.modulus);
    const TypeRep left = parse_type(left_text, ix);
    const TypeRep right = parse_type(right_text, ix);
    std::string result;
    if (equivalent(left, right))
        result = "equivalent";
    else if (leq(left, right))
        result = "less";
    else if (leq(right, left))
        result = "greater";
    else
        result = "incomparable";
    if (cfg.json)
        emit({{"schema", kSchema},
              {"command", "cmp"},
              {"left", render_type(left)},
              {"right", render_type(right)},
              {"result", result}});
    else
        std::cout << result << "\n";
    return 0;
}

int run_join_meet(const SessionConfig& cfg, const std::string& command,
                  const std::string& left_text, const std::string& right_text) {
    const PrimeIndexing ix(cfg.modulus);
    const TypeRep left = parse_type(left_text, ix);
    const TypeRep right = parse_type(right_text, ix);
    const TypeRep result = command == "join" ? join(left, right) : meet(left, right);
    if (cfg.json)
        emit({{"schema", kSchema},
              {"command", command},
              {"left", render_type(left)},
              {"right", render_type(right)},
              {"result", render_type(result)}});
    else
        std::cout << render_type(result) << "\n";
    return 0;
}

int run_ext(const SessionConfig& cfg, const std::string& t_text, const std::string& x_text) {
    const PrimeIndexing ix(cfg.modulus);
    const TypeRep T = parse_type(t_text, ix);
    const TypeRep X = parse_type(x_text, ix);
    const bool criterion = ext_oracle::ext_vanishes_rank1(T, X);
    const bool shape = ext_oracle::vanishes_via_shape(ext_oracle::quotient_shape(X, T));
    if (criterion != shape)
        throw std::logic_error("the two vanishing routes disagree on this input");
    const char* cls = ext_oracle::ext_class(T, X) == ext_oracle::ExtClass::Zero ? "Zero"
                                                                                : "Continuum";
    if (cfg.json) {
        emit({{"schema", kSchema},
              {"command", "ext"},
              {"cogenerator", render_type(T)},
              {"argument", render_type(X)},
              {"class", cls},
              {"criterion_vanishes", criterion},
              {"shape_vanishes", shape}});
    } else {
        std::cout << cls << "\n";
        std::cout << "criterion route vanishes: " << (criterion ? "yes" : "no") << "\n";
        std::cout << "quotient-shape route vanishes: " << (shape ? "yes" : "no") << "\n";
    }
    return 0;
}

json witness_json(const separation::Witness& w) {
    if (w.is_rank_one())
        return {{"kind", "rank1"}, {"type", render_type(w.rank_one_type())}};
    return {{"kind", "infinite-rank"},
            {"carrier", render_prime_set(w.spec().carrier())},
            {"t", w.spec().t_exp()},
            {"r", w.spec().r_exp()}};
}

json numeric_json(const separation::NumericCheckReport& report) {
    json records = json::array();
    for (const auto& rec : report.records) {
        json failures = json::array();
        for (const auto& [m, k] : rec.failures) failures.push_back({{"m", m}, {"k", k}});
        records.push_back({{"p", rec.p},
                           {"n_p", rec.n_p.str()},
                           {"passed", rec.passed()},
                           {"failures", failures}});
    }
    return {{"m_max", report.m_max},
            {"k_max", report.k_max},
            {"prime_count", report.prime_count},
            {"t", report.t_exp},
            {"r", report.r_exp},
            {"records", records},
            {"verdict", report.verdict}};
}

int run_separate(const SessionConfig& cfg, const std::string& low_text,
                 const std::string& high_text) {
    const PrimeIndexing ix(cfg.modulus);
    const TypeRep low = parse_type(low_text, ix);
    const TypeRep high = parse_type(high_text, ix);

    const auto cases = separation::classify(low, high);
    const auto w = separation::witness(low, high);
    bool verified = false;
    std::unique_ptr<separation::NumericCheckReport> numeric;
    if (w.is_rank_one()) {
        verified = separation::verify_rank1_witness(low, high, w.rank_one_type());
    } else {
        numeric = std::make_unique<separation::NumericCheckReport>(
            separation::verify_non_surjectivity(w.spec(), cfg.m_max, cfg.k_max,
                                                cfg.prime_count));
        verified = numeric->verdict;
    }

    if (cfg.json) {
        json j{{"schema", kSchema},
               {"command", "separate"},
               {"lower", render_type(low)},
               {"upper", render_type(high)},
               {"witness", witness_json(w)},
               {"verified", verified}};
        json case_list = json::array();
        for (const auto c : cases) case_list.push_back(separation::to_label(c));
        j["cases"] = case_list;
        if (numeric) j["numeric"] = numeric_json(*numeric);
        emit(j);
    } else {
        std::cout << "cases:";
        for (const auto c : cases) std::cout << " " << separation::to_label(c);
        std::cout << "\n";
        if (w.is_rank_one()) {
            std::cout << "witness: rank-1 " << render_type(w.rank_one_type()) << "\n";
        } else {
            std::cout << "witness: infinite-rank G(P = "
                      << render_prime_set(w.spec().carrier()) << ", t = " << w.spec().t_exp()
                      << ", r = " << w.spec().r_exp() << ")\n";
        }
        std::cout << "verified: " << (verified ? "yes" : "NO") << "\n";
        if (numeric) {
            std::cout << "arithmetic checks: " << numeric->records.size() << " primes, m <= "
                      << numeric->m_max << ", k <= " << numeric->k_max << "\n";
            for (const auto& rec : numeric->records)
                if (!rec.passed())
                    std::cout << "  FAILED at p = " << rec.p << " (" << rec.failures.size()
                              << " parameter pairs)\n";
        }
    }
    return verified ? 0 : 3;
}

std::string subset_label(std::size_t mask, std::uint32_t n) {
    std::string out = "{";
    bool first = true;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) out += ", ";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

int run_embed(const SessionConfig& cfg, std::uint32_t powerset_n, const std::string& poset_path) {
    const PrimeIndexing ix(cfg.modulus);
    if ((powerset_n == 0) == poset_path.empty())
        throw std::invalid_argument("embed needs exactly one of --powerset N or --poset FILE");

    poset_embed::FinitePoset poset =
        powerset_n ? poset_embed::FinitePoset::powerset(powerset_n)
                   : poset_embed::load_poset_file(poset_path);
    const poset_embed::Embedding embedding =
        powerset_n ? poset_embed::powerset_embed(powerset_n, ix)
                   : poset_embed::poset_embed(poset, ix);

    const bool verified = poset_embed::verify_embedding(embedding, poset);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < poset.size(); ++i)
        labels.push_back(powerset_n ? subset_label(i, powerset_n) : std::to_string(i));

    if (!verified) {
        if (cfg.json)
            emit({{"schema", kSchema}, {"command", "embed"}, {"verified", false}});
        else
            std::cout << "embedding verified: NO\n";
        return 3;
    }

    const auto report = poset_embed::cotorsion_image_report(embedding, poset, cfg.m_max,
                                                            cfg.k_max, cfg.prime_count);
    if (cfg.json) {
        json assignment = json::array();
        for (std::size_t i = 0; i < poset.size(); ++i)
            assignment.push_back({{"element", labels[i]},
                                  {"type", render_type(embedding.image(i))}});
        json separations = json::array();
        for (const auto& rec : report.separations) {
            json case_list = json::array();
            for (const auto c : rec.cases) case_list.push_back(separation::to_label(c));
            json row{{"lower", labels[rec.lower]},
                     {"upper", labels[rec.upper]},
                     {"cases", case_list},
                     {"witness", witness_json(rec.witness)},
                     {"verified", rec.verified}};
            if (rec.numeric) row["numeric_verdict"] = rec.numeric->verdict;
            separations.push_back(row);
        }
        json incomparables = json::array();
        for (const auto& rec : report.incomparables)
            incomparables.push_back(
                {{"a", labels[rec.a]}, {"b", labels[rec.b]}, {"leq", rec.image_leq}});
        emit({{"schema", kSchema},
              {"command", "embed"},
              {"verified", true},
              {"assignment", assignment},
              {"separations", separations},
              {"incomparables", incomparables},
              {"all_verified", report.all_verified}});
    } else {
        for (std::size_t i = 0; i < poset.size(); ++i)
            std::cout << labels[i] << " -> " << render_type(embedding.image(i)) << "\n";
        std::cout << "embedding verified: yes\n";
        std::cout << "covering pairs separated: " << report.separations.size() << "\n";
        for (const auto& rec : report.separations)
            if (!rec.verified)
                std::cout << "  FAILED: " << labels[rec.lower] << " < " << labels[rec.upper]
                          << "\n";
        std::cout << "incomparable ordered pairs recorded: " << report.incomparables.size()
                  << "\n";
        std::cout << "all witnesses verified: " << (report.all_verified ? "yes" : "NO") << "\n";
    }
    return report.all_verified ? 0 : 3;
}

int cmd_selftest(const SessionConfig& cfg) {
    const auto report = typelattice::cli::run_selftest(cfg);
    if (cfg.json)
        std::cout << typelattice::cli::selftest_json(report);
    else
        std::cout << typelattice::cli::selftest_text(report);
    return report.all_passed() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    SessionConfig cfg;
    CLI::App app{"Decision procedures on the lattice of types of rank-1 groups"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for every command");
    app.add_option("--modulus", cfg.modulus, "number of prime cells (default 16)");
    app.add_option("--m-max", cfg.m_max, "verification budget for m (default 8)");
    app.add_option("--k-max", cfg.k_max, "verification budget for k (default 8)");
    app.add_option("--primes", cfg.prime_count, "verification prime count (default 40)");
    app.add_flag("--json", cfg.json, "emit JSON reports");
    app.add_option("--seed", cfg.seed, "random seed for the self-test suites");

    std::string left, right, poset_path;
    std::uint32_t powerset_n = 0;

    auto* cmp = app.add_subcommand("cmp", "compare two types");
    cmp->add_option("left", left, "first type")->required();
    cmp->add_option("right", right, "second type")->required();

    auto* join_cmd = app.add_subcommand("join", "least upper bound of two types");
    join_cmd->add_option("left", left, "first type")->required();
    join_cmd->add_option("right", right, "second type")->required();

    auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound of two types");
    meet_cmd->add_option("left", left, "first type")->required();
    meet_cmd->add_option("right", right, "second type")->required();

    auto* ext = app.add_subcommand("ext", "does Ext(T, X) vanish?");
    ext->add_option("T", left, "cogenerator type")->required();
    ext->add_option("X", right, "argument type")->required();

    auto* separate = app.add_subcommand("separate", "witness a strict inequality of types");
    separate->add_option("lower", left, "strictly smaller type")->required();
    separate->add_option("upper", right, "strictly larger type")->required();

    auto* embed = app.add_subcommand("embed", "embed a finite poset into the type lattice");
    embed->add_option("--powerset", powerset_n, "embed the subset lattice of {0..n-1}");
    embed->add_option("--poset", poset_path, "embed the poset in this JSON file");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");

    // Session options may appear before or after the command name.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        cfg.validate();
        if (cmp->parsed()) return run_cmp(cfg, left, right);
        if (join_cmd->parsed()) return run_join_meet(cfg, "join", left, right);
        if (meet_cmd->parsed()) return run_join_meet(cfg, "meet", left, right);
        if (ext->parsed()) return run_ext(cfg, left, right);
        if (separate->parsed()) return run_separate(cfg, left, right);
        if (embed->parsed()) return run_embed(cfg, powerset_n, poset_path);
        if (selftest->parsed()) return cmd_selftest(cfg);
        throw std::logic_error("no command dispatched");
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
