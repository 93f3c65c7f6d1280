// Command-line front end for founding and amending delta-supermajority
// constitutions. Results go to stdout, snapping warnings to stderr.
//
// Exit statuses: 0 success, 1 usage/parse, 2 dimension/domain,
// 3 verification mismatch, 4 cycle.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "constitution/constitution.hpp"

namespace cc = constitution;

namespace {

struct LoadedCommunity {
    int n = 0;
    cc::IdealProfile ideals;
    cc::Rational delta{1, 2};
};

LoadedCommunity load_community(const std::string& path, const std::string& delta_flag) {
    std::ifstream in(path);
    if (!in) throw cc::parse_error("cannot open input file: " + path);
    cc::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw cc::parse_error(std::string("invalid JSON: ") + e.what());
    }
    const cc::CommunityDocument doc = cc::parse_community(j);
    std::vector<int> snapped;
    cc::IdealProfile ideals = cc::IdealProfile::snapped(doc.n, doc.ideals, &snapped);
    if (!snapped.empty()) {
        std::cerr << "warning: snapped off-grid ideal points for agents:";
        for (int i : snapped) std::cerr << ' ' << i;
        std::cerr << '\n';
    }
    cc::Rational delta(1, 2);
    if (!delta_flag.empty())
        delta = cc::canonical_delta(cc::snap_delta(doc.n, cc::Rational::parse(delta_flag)));
    else if (doc.delta)
        delta = cc::canonical_delta(cc::snap_delta(doc.n, *doc.delta));
    return LoadedCommunity{doc.n, std::move(ideals), delta};
}

cc::AmendmentMethod parse_method(const std::string& name) {
    if (name == "condorcet") return cc::AmendmentMethod::Condorcet;
    if (name == "conservative") return cc::AmendmentMethod::Conservative;
    throw cc::parse_error("unknown method: " + name);
}

void emit(const cc::Json& j, const std::string&) { std::cout << j.dump(2) << '\n'; }

std::string outcome_text(const cc::Rational& delta, const cc::AmendmentOutcome& out) {
    if (!out.amend) return "retain " + delta.str();
    return std::string("amend ") + delta.str() + " -> " +
           cc::canonical_delta(*out.new_rule).str() + " (" + cc::to_string(out.direction) +
           ", support " + std::to_string(out.support) + ", ballot " + out.ballot->str() + ")";
}

int cmd_found(int n, const std::string& mode, const std::string& format) {
    const cc::EnumerationMode m =
        mode == "full" ? cc::EnumerationMode::FullTable : cc::EnumerationMode::CountOnly;
    cc::EnumerationReport report = cc::enumerate_consistent_rules(n, m);
    const cc::Rule founding = cc::founding_rule(n);
    cc::Json j = cc::to_json(report);
    j["founding_rule"] = cc::to_json(founding);
    if (format == "text") {
        std::cout << "n=" << n << " candidates=" << report.candidates << '\n';
        for (const auto& rec : report.survivors) {
            if (rec.degenerate)
                std::cout << "survivor: never-accept (degenerate)\n";
            else
                std::cout << "survivor: threshold m=" << *rec.threshold << '\n';
        }
        std::cout << "founding rule: m=" << founding.m
                  << " (delta=" << cc::canonical_delta(founding).str() << ")\n";
        return 0;
    }
    emit(j, format);
    return 0;
}

int cmd_amend(const LoadedCommunity& community, cc::AmendmentMethod method, bool verify,
              bool inject_fault, const std::string& format) {
    const cc::Rule rule = cc::snap_delta(community.n, community.delta);
    cc::AmendmentOutcome outcome = method == cc::AmendmentMethod::Condorcet
                                       ? cc::condorcet_amend(rule, community.ideals)
                                       : cc::conservative_amend(rule, community.ideals);
    if (inject_fault) {
        // Test hook for the mismatch exit path: pretend the closed form chose
        // Retain regardless of the real outcome.
        outcome = cc::AmendmentOutcome::retain();
    }

    cc::Json j;
    j["method"] = cc::to_string(method);
    j["delta"] = community.delta.str();
    j["outcome"] = cc::to_json(outcome);

    bool mismatch = false;
    if (verify) {
        const cc::OracleResult oracle = cc::oracle_amend(rule, community.ideals, method);
        j["oracle"] = cc::to_json(oracle.diagnostic);
        j["oracle_outcome"] = cc::to_json(oracle.outcome);
        mismatch = outcome.amend != oracle.outcome.amend ||
                   (outcome.amend && *outcome.new_rule != *oracle.outcome.new_rule);
        j["verified"] = !mismatch;
    }

    if (format == "text")
        std::cout << outcome_text(community.delta, outcome) << '\n';
    else
        emit(j, format);
    if (mismatch) {
        std::cerr << "error: closed form and oracle disagree\n";
        return 3;
    }
    return 0;
}

int cmd_iterate(const LoadedCommunity& community, cc::AmendmentMethod method, bool verify,
                const std::string& format) {
    const cc::Rule start = cc::snap_delta(community.n, community.delta);
    const cc::Trajectory traj = cc::iterate_to_fixpoint(start, community.ideals, method);

    cc::Json j;
    j["method"] = cc::to_string(method);
    j["start_delta"] = community.delta.str();
    j["trajectory"] = cc::to_json(traj);

    bool mismatch = false;
    if (verify && method == cc::AmendmentMethod::Conservative &&
        community.delta == cc::Rational(1, 2)) {
        const cc::AmendmentOutcome single = cc::condorcet_amend(start, community.ideals);
        const cc::Rule expected = single.amend ? *single.new_rule : start;
        mismatch = traj.terminal != expected;
        j["verified"] = !mismatch;
    }

    if (format == "text") {
        std::cout << community.delta.str();
        for (const auto& [rule, outcome] : traj.steps)
            if (outcome.amend) std::cout << " -> " << cc::canonical_delta(*outcome.new_rule).str();
        std::cout << " (terminal m=" << traj.terminal.m << ")\n";
    } else {
        emit(j, format);
    }
    if (mismatch) {
        std::cerr << "error: conservative fixpoint differs from single condorcet step\n";
        return 3;
    }
    return 0;
}

struct ClusterSpec {
    cc::Rational peak_a{1, 2};
    cc::Rational weight_a{1, 2};
    cc::Rational peak_b{1, 2};
};

ClusterSpec parse_peaks(const std::string& spec) {
    // "peak:weight,peak:weight" with rational or decimal entries.
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw cc::parse_error("clustered needs two peak:weight pairs");
    const auto parse_pair = [](const std::string& s) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw cc::parse_error("peak spec must be peak:weight");
        return std::pair{cc::Rational::parse(s.substr(0, colon)),
                         cc::Rational::parse(s.substr(colon + 1))};
    };
    const auto [pa, wa] = parse_pair(spec.substr(0, comma));
    const auto [pb, wb] = parse_pair(spec.substr(comma + 1));
    if (wa + wb != cc::Rational(1)) throw cc::parse_error("cluster weights must sum to 1");
    return ClusterSpec{pa, wa, pb};
}

int cmd_random(int n, int count, std::uint64_t seed, const std::string& dist,
               const std::string& peaks, const std::string& out_dir,
               const std::string& delta_flag, const std::string& format) {
    if (n < 1 || count < 1) throw cc::domain_error("random requires n >= 1 and count >= 1");
    cc::ProfileGenerator gen(n, seed);
    ClusterSpec cluster;
    if (dist == "clustered")
        cluster = parse_peaks(peaks);
    else if (dist != "uniform")
        throw cc::parse_error("unknown distribution: " + dist);

    const cc::Rational delta =
        delta_flag.empty()
            ? cc::Rational(1, 2)
            : cc::canonical_delta(cc::snap_delta(n, cc::Rational::parse(delta_flag)));
    const cc::Rule rule = cc::snap_delta(n, delta);

    struct Tally {
        int increase = 0, decrease = 0, retain = 0;
        void add(const cc::AmendmentOutcome& out) {
            if (!out.amend)
                ++retain;
            else if (out.direction == cc::AmendDirection::Increase)
                ++increase;
            else
                ++decrease;
        }
        cc::Json json() const {
            return cc::Json{{"increase", increase}, {"decrease", decrease}, {"retain", retain}};
        }
    };
    Tally condorcet, conservative;

    cc::Json profiles = cc::Json::array();
    for (int i = 0; i < count; ++i) {
        const cc::IdealProfile ideals = dist == "uniform"
                                            ? gen.uniform()
                                            : gen.clustered(cluster.peak_a, cluster.weight_a,
                                                            cluster.peak_b);
        condorcet.add(cc::condorcet_amend(rule, ideals));
        conservative.add(cc::conservative_amend(rule, ideals));
        cc::Json doc = cc::to_json(ideals);
        doc["delta"] = delta.str();
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ostringstream name;
            name << "profile_" << i << ".json";
            std::ofstream f(std::filesystem::path(out_dir) / name.str());
            f << doc.dump(2) << '\n';
        }
        profiles.push_back(std::move(doc));
    }

    cc::Json j;
    j["n"] = n;
    j["count"] = count;
    j["seed"] = seed;
    j["distribution"] = dist;
    j["delta"] = delta.str();
    j["summary"] = cc::Json{{"condorcet", condorcet.json()}, {"conservative", conservative.json()}};
    if (out_dir.empty()) j["profiles"] = std::move(profiles);
    emit(j, format);
    return 0;
}

int cmd_verify(int n_max, std::uint64_t seed, std::uint64_t count, const std::string& format) {
    if (n_max < 1) throw cc::domain_error("verify requires n >= 1");
    constexpr int kExhaustiveLimit = 7;
    std::vector<cc::CheckResult> results;
    for (int n = 1; n <= n_max; ++n) {
        if (n <= 12) results.push_back(cc::selfcheck::characterization(n, cc::EnumerationMode::CountOnly));
        if (n <= 4) results.push_back(cc::selfcheck::characterization(n, cc::EnumerationMode::FullTable));
        if (n <= 12) results.push_back(cc::selfcheck::minimality_ordering(n));
        results.push_back(cc::selfcheck::theorem_equivalence(n, cc::AmendmentMethod::Condorcet,
                                                             kExhaustiveLimit, count, seed));
        results.push_back(cc::selfcheck::theorem_equivalence(n, cc::AmendmentMethod::Conservative,
                                                             kExhaustiveLimit, count, seed));
        results.push_back(cc::selfcheck::idempotence(n, kExhaustiveLimit, count, seed));
        results.push_back(cc::selfcheck::iterate_equivalence(n, kExhaustiveLimit, count, seed));
        if (n <= 6) results.push_back(cc::selfcheck::structural(n, kExhaustiveLimit, count, seed));
    }

    bool all_ok = true;
    if (format == "text") {
        for (const auto& r : results) {
            std::cout << (r.ok ? "PASS" : "FAIL") << ' ' << r.name << " (" << r.cases
                      << " cases)";
            if (!r.ok) std::cout << ": " << r.detail;
            std::cout << '\n';
            all_ok = all_ok && r.ok;
        }
    } else {
        cc::Json arr = cc::Json::array();
        for (const auto& r : results) {
            arr.push_back(cc::Json{{"name", r.name},
                                   {"ok", r.ok},
                                   {"cases", r.cases},
                                   {"detail", r.detail}});
            all_ok = all_ok && r.ok;
        }
        emit(cc::Json{{"seed", seed}, {"checks", std::move(arr)}, {"ok", all_ok}}, format);
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta-supermajority constitution engine"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand name

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    int n = 0;
    std::string mode = "count";
    auto* found = app.add_subcommand("found", "derive the founding rule by exhaustive enumeration");
    found->add_option("--n", n, "community size")->required();
    found->add_option("--mode", mode, "enumeration mode: count or full")
        ->check(CLI::IsMember({"count", "full"}));

    std::string input, delta_flag, method_name = "condorcet";
    bool verify_flag = false, inject_fault = false;
    auto* amend = app.add_subcommand("amend", "one amendment step for a community");
    amend->add_option("--input", input, "community JSON file")->required();
    amend->add_option("--delta", delta_flag, "current delta (overrides the file)");
    amend->add_option("--method", method_name, "condorcet or conservative")
        ->check(CLI::IsMember({"condorcet", "conservative"}));
    amend->add_flag("--verify", verify_flag, "cross-check against the axiom-direct oracle");
    amend->add_flag("--inject-fault", inject_fault)->group("");  // hidden test hook

    auto* iterate = app.add_subcommand("iterate", "amend repeatedly until fixpoint");
    iterate->add_option("--input", input, "community JSON file")->required();
    iterate->add_option("--delta", delta_flag, "starting delta (overrides the file)");
    iterate->add_option("--method", method_name, "condorcet or conservative")
        ->check(CLI::IsMember({"condorcet", "conservative"}));
    iterate->add_flag("--verify", verify_flag, "check the iterate-from-majority equivalence");

    int count = 1;
    std::uint64_t seed = 0;
    std::string dist = "uniform", peaks, out_dir;
    auto* random_cmd = app.add_subcommand("random", "generate seeded ideal profiles");
    random_cmd->add_option("--n", n, "community size")->required();
    random_cmd->add_option("--count", count, "number of profiles");
    random_cmd->add_option("--seed", seed, "RNG seed");
    random_cmd->add_option("--dist", dist, "uniform or clustered");
    random_cmd->add_option("--peaks", peaks, "clustered peaks, e.g. 1/2:3/5,4/5:2/5");
    random_cmd->add_option("--out", out_dir, "directory for per-profile files");
    random_cmd->add_option("--delta", delta_flag, "current delta for the outcome summary");

    std::uint64_t verify_count = 1000;
    auto* verify = app.add_subcommand("verify", "run the property suite for n in 1..N");
    verify->add_option("--n", n, "largest community size to check")->required();
    verify->add_option("--seed", seed, "RNG seed for sampled regimes");
    verify->add_option("--count", verify_count, "random profiles per n beyond the exhaustive range");

    try {
        app.parse(argc, argv);
        if (found->parsed()) return cmd_found(n, mode, format);
        if (amend->parsed())
            return cmd_amend(load_community(input, delta_flag), parse_method(method_name),
                             verify_flag, inject_fault, format);
        if (iterate->parsed())
            return cmd_iterate(load_community(input, delta_flag), parse_method(method_name),
                               verify_flag, format);
        if (random_cmd->parsed())
            return cmd_random(n, count, seed, dist, peaks, out_dir, delta_flag, format);
        if (verify->parsed()) return cmd_verify(n, seed, verify_count, format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cc::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const cc::cycle_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
