// Command-line front end: every module behind one binary with scriptable,
// deterministic output.
//
// Exit codes: 0 success, 1 usage error, 2 arithmetic overflow or step-cap
// truncation surfaced, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "jacobstree/census.hpp"
#include "jacobstree/collatz.hpp"
#include "jacobstree/cycles.hpp"
#include "jacobstree/knumbers.hpp"
#include "jacobstree/tree.hpp"

namespace {

using namespace jacobstree;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kOverflow = 2;
constexpr int kIo = 3;

const std::map<std::string, Variant> kVariantNames{
    {"plus", Variant::plus}, {"minus", Variant::minus}};
const std::map<std::string, Sign> kSignNames{
    {"minus", Sign::minus}, {"plus", Sign::plus}};
const std::map<std::string, BranchRule> kRuleNames{
    {"minus", BranchRule::minus_one}, {"plus", BranchRule::plus_one}};

unsigned default_partitions() {
    const char* env = std::getenv("JACOBSTREE_THREADS");
    if (!env)
        return 1;
    char* end = nullptr;
    unsigned long n = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || n < 1 || n > 256) {
        std::cerr << "warning: ignoring unusable JACOBSTREE_THREADS value '"
                  << env << "'\n";
        return 1;
    }
    return static_cast<unsigned>(n);
}

std::string bracketed_line(const std::vector<u64>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ' ';
        if (values[i] % 3 == 0)
            out += '[' + std::to_string(values[i]) + ']';
        else
            out += std::to_string(values[i]);
    }
    out += '\n';
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Jacobsthal-number machinery for the 3q+1 and 3q-1 maps: "
                 "sequences, trees, trajectories, cycle solving, censuses"};
    app.require_subcommand(1);

    // traj
    u64 traj_start = 0;
    Variant traj_variant{};
    std::size_t traj_max_steps = 10000;
    std::string traj_format = "text";
    auto* traj = app.add_subcommand("traj", "Full trajectory of one start value");
    traj->add_option("--start", traj_start, "Start value (>= 1)")->required();
    traj->add_option("--variant", traj_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));
    traj->add_option("--max-steps", traj_max_steps,
                     "Step cap before reporting truncation")
        ->capture_default_str();
    traj->add_option("--format", traj_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    // odd
    u64 odd_start = 0;
    Variant odd_variant{};
    std::size_t odd_max_tracks = 10000;
    auto* odd = app.add_subcommand(
        "odd", "Odd-compressed trajectory down to the first cycle member");
    odd->add_option("--start", odd_start, "Odd start value")->required();
    odd->add_option("--variant", odd_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));
    odd->add_option("--max-tracks", odd_max_tracks, "Track cap")
        ->capture_default_str();

    // table
    u64 table_limit = 0;
    Variant table_variant{};
    auto* table = app.add_subcommand(
        "table", "Odd-trajectory table rows for odd multiples of three");
    table->add_option("--limit", table_limit, "Largest row seed")->required();
    table->add_option("--variant", table_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));

    // tree
    Variant tree_variant{};
    u64 tree_seed = 0;
    unsigned tree_max_power = 0;
    std::size_t tree_max_nodes = 0;
    std::string tree_format;
    auto* tree_cmd = app.add_subcommand("tree", "Grow a tree and export it");
    tree_cmd->add_option("--variant", tree_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));
    tree_cmd->add_option("--seed", tree_seed, "Odd seed, not divisible by 3")
        ->required();
    tree_cmd->add_option("--max-power", tree_max_power, "Largest exponent per branch")
        ->required();
    tree_cmd->add_option("--max-nodes", tree_max_nodes, "Node budget")->required();
    tree_cmd->add_option("--format", tree_format, "dot | json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));

    // cell
    u64 cell_theta = 0;
    BranchRule cell_rule{};
    unsigned cell_index = 0;
    auto* cell_cmd = app.add_subcommand(
        "cell", "Four-node window of a branch, bracketed by multiples of 3");
    cell_cmd->add_option("--theta", cell_theta, "Branch index (odd, not mult of 3)")
        ->required();
    cell_cmd->add_option("--rule", cell_rule, "minus | plus (node arithmetic)")
        ->required()
        ->transform(CLI::CheckedTransformer(kRuleNames));
    cell_cmd->add_option("--index", cell_index, "Which window (0-based)")
        ->capture_default_str();

    // census
    u64 census_lo = 0, census_hi = 0;
    Variant census_variant{};
    unsigned census_partitions = default_partitions();
    u64 census_step_cap = 10000;
    std::string census_dump;
    std::string census_format = "text";
    auto* census = app.add_subcommand(
        "census", "Classify a whole range by terminal cycle");
    census->add_option("--lo", census_lo, "Range start (>= 1)")->required();
    census->add_option("--hi", census_hi, "Range end (inclusive)")->required();
    census->add_option("--variant", census_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));
    census->add_option("--partitions", census_partitions,
                       "Parallel workers (default from JACOBSTREE_THREADS, else 1)");
    census->add_option("--step-cap", census_step_cap, "Truncation threshold")
        ->capture_default_str();
    census->add_option("--dump", census_dump, "Write per-q CSV to this file");
    census->add_option("--format", census_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // cycles
    Variant cycles_variant{};
    unsigned cycles_max_tracks = 0;
    unsigned cycles_max_exponent = 0;
    std::string cycles_format = "text";
    auto* cycles_cmd = app.add_subcommand(
        "cycles", "Enumerate integer cycle solutions within bounds");
    cycles_cmd->add_option("--variant", cycles_variant, "plus | minus")
        ->required()
        ->transform(CLI::CheckedTransformer(kVariantNames));
    cycles_cmd->add_option("--max-tracks", cycles_max_tracks, "Largest track count")
        ->required();
    cycles_cmd->add_option("--max-exponent", cycles_max_exponent,
                           "Largest total halving exponent")
        ->required();
    cycles_cmd->add_option("--format", cycles_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // jacob
    u64 jacob_theta = 0;
    Sign jacob_sign{};
    unsigned jacob_count = 0;
    std::string jacob_format = "text";
    auto* jacob = app.add_subcommand(
        "jacob", "One row of generalized Jacobsthal numbers");
    jacob->add_option("--theta", jacob_theta, "Odd row index")->required();
    jacob->add_option("--sign", jacob_sign, "minus | plus")
        ->required()
        ->transform(CLI::CheckedTransformer(kSignNames));
    jacob->add_option("--count", jacob_count, "Entries per row (>= 2)")->required();
    jacob->add_option("--format", jacob_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    // identities
    auto* identities =
        app.add_subcommand("identities", "Arithmetic identities among 5, 7, 17");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*traj) {
            Trajectory t = trajectory(traj_start, traj_variant, traj_max_steps);
            if (traj_format == "json")
                std::cout << trajectory_json(t);
            else if (traj_format == "csv")
                std::cout << trajectory_csv(t);
            else
                std::cout << trajectory_text(t) << '\n';
            if (t.overflowed) {
                std::cerr << "overflow: trajectory left the 64-bit range\n";
                return kOverflow;
            }
            if (t.truncated) {
                std::cerr << "truncated after " << traj_max_steps << " steps\n";
                return kOverflow;
            }
        } else if (*odd) {
            auto seq = odd_trajectory(odd_start, odd_variant,
                                      odd_stop_members(odd_variant), odd_max_tracks);
            for (std::size_t i = 0; i < seq.size(); ++i)
                std::cout << (i ? " " : "") << seq[i];
            std::cout << "\n";
        } else if (*table) {
            for (const OddTableRow& row : odd_table(table_limit, table_variant)) {
                std::cout << row.seed << ":";
                for (u64 v : row.tail)
                    std::cout << ' ' << v;
                std::cout << '\n';
            }
        } else if (*tree_cmd) {
            JacobsthalTree t =
                build_tree(tree_variant, tree_seed, tree_max_power, tree_max_nodes);
            std::cout << (tree_format == "dot" ? export_dot(t) : export_json(t));
            if (t.overflowed()) {
                std::cerr << "overflow: some branches stopped before max-power\n";
                return kOverflow;
            }
        } else if (*cell_cmd) {
            Cell c = cell(cell_theta, cell_rule, cell_index);
            std::cout << bracketed_line({c.values.begin(), c.values.end()});
        } else if (*census) {
            CensusReport report = sweep(census_lo, census_hi, census_variant,
                                        census_partitions, census_step_cap);
            if (!census_dump.empty()) {
                std::ofstream out(census_dump);
                if (!out) {
                    std::cerr << "cannot open " << census_dump << " for writing\n";
                    return kIo;
                }
                dump_csv(out, census_lo, census_hi, census_variant, census_step_cap);
                if (!out.good()) {
                    std::cerr << "write failed on " << census_dump << "\n";
                    return kIo;
                }
            }
            std::cout << (census_format == "json" ? census_json(report)
                                                  : census_text(report));
            if (report.truncated_count > 0) {
                std::cerr << report.truncated_count
                          << " orbit(s) exceeded the step cap\n";
                return kOverflow;
            }
        } else if (*cycles_cmd) {
            EnumerationReport report = enumerate_integer_cycles(
                cycles_variant, cycles_max_tracks, cycles_max_exponent);
            std::cout << (cycles_format == "json" ? enumeration_json(report)
                                                  : enumeration_text(report));
            if (report.skipped_overflow > 0) {
                std::cerr << report.skipped_overflow
                          << " tuple(s) skipped on overflow\n";
                return kOverflow;
            }
        } else if (*jacob) {
            SequenceRow row = k_sequence(jacob_theta, jacob_sign, jacob_count);
            if (jacob_format == "csv")
                std::cout << sequence_row_csv(row);
            else if (jacob_format == "json")
                std::cout << sequence_row_json(row);
            else
                std::cout << sequence_row_text(row) << "\n";
        } else if (*identities) {
            std::cout << identity_text(identity_checks());
        }
    } catch (const overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
