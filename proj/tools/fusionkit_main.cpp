// Command-line surface: fusion products, hom dimensions, labeled
// noncrossing counts, dimension tables and the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fusionkit/dims.hpp"
#include "fusionkit/fusion_engine.hpp"
#include "fusionkit/json_io.hpp"
#include "fusionkit/limits.hpp"
#include "fusionkit/nc_partitions.hpp"
#include "fusionkit/tannaka.hpp"
#include "fusionkit/verify.hpp"
#include "fusionkit/word_algebra.hpp"

namespace {

using namespace fusionkit;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

long env_or(const char* name, long fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    try {
        return std::stol(value);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " is not an integer: " + value);
    }
}

struct CommonFlags {
    std::string s_text = "1";
    std::string instance = "ahs";
    std::string format = "pretty";
    int max_points = 12;
    std::uint64_t seed = 12345;
    int jobs = 1;

    FusionAlphabet alphabet() const {
        return FusionAlphabet::from_name(instance, parse_modulus(s_text));
    }
    Limits limits() const {
        Limits l;
        l.max_points = static_cast<int>(env_or("FUSIONKIT_MAX_POINTS", 12));
        l.max_entries = env_or("FUSIONKIT_MAX_ENTRIES", 10'000'000);
        if (max_points != 12) l.max_points = max_points;  // flag beats environment
        return l;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_instance = true) {
    cmd->add_option("--s", flags.s_text, "modulus: a positive integer or 'inf'");
    if (with_instance)
        cmd->add_option("--instance", flags.instance, "alphabet instance: ahs | ao | au")
            ->check(CLI::IsMember({"ahs", "ao", "au"}));
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    cmd->add_option("--max-points", flags.max_points, "enumeration guard (points)");
    cmd->add_option("--seed", flags.seed, "randomness seed");
    cmd->add_option("--jobs", flags.jobs, "parallelism cap for verification suites");
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

void print_decomposition(const Decomposition& d, const FusionAlphabet& a,
                         const std::string& format) {
    if (format == "json") {
        std::cout << decomposition_to_json(d, a).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "word,mult\n";
        for (const auto& [w, m] : d.terms())
            std::cout << csv_quote(format_word(w)) << ',' << to_decimal(m) << "\n";
        return;
    }
    for (const auto& [w, m] : d.terms())
        std::cout << "r(" << format_word(w) << ") " << to_decimal(m) << "\n";
}

int cmd_fuse(const CommonFlags& flags, const std::string& x_text, const std::string& y_text) {
    FusionAlphabet a = flags.alphabet();
    Word x = parse_word(x_text, a);
    Word y = parse_word(y_text, a);
    print_decomposition(fuse_irreducibles(x, y, a), a, flags.format);
    return kExitOk;
}

int cmd_homdim(const CommonFlags& flags, const std::string& upper_text,
               const std::string& lower_text, bool oracle, int n, bool dump_maps) {
    FusionAlphabet a = flags.alphabet();
    if (a.kind() != InstanceKind::reflection)
        throw std::invalid_argument("homdim needs the reflection instance");
    Word upper = parse_word(upper_text, a);
    Word lower = parse_word(lower_text, a);
    FusionContext ctx(a);
    BigInt engine = ctx.hom_dimension(upper, lower);

    if (!oracle) {
        if (flags.format == "json") {
            nlohmann::json j;
            j["hom_dim"] = to_decimal(engine);
            std::cout << j.dump(2) << "\n";
        } else if (flags.format == "csv") {
            std::cout << "hom_dim\n" << to_decimal(engine) << "\n";
        } else {
            std::cout << to_decimal(engine) << "\n";
        }
        return kExitOk;
    }

    LabeledTuple t{upper, lower};
    const ModulusSpec& m = a.modulus();
    Limits limits = flags.limits();
    long count = count_nc_s(t, m, limits);
    long rank = -1;
    if (n >= 2) {
        if (dump_maps) {
            for_each_nc(static_cast<int>(upper.size()), static_cast<int>(lower.size()),
                        [&](const SetPartition& p) {
                            if (!satisfies_label_condition(p, t, m)) return;
                            std::cout << format_partition(p) << "\n"
                                      << format_matrix(build_map(p, n, limits));
                        },
                        limits);
        }
        rank = hom_dim_oracle(t, n, m, limits);
    }

    bool agree = engine == count && (rank < 0 || rank == count);
    if (flags.format == "json") {
        nlohmann::json j;
        j["hom_dim"] = to_decimal(engine);
        j["nc_count"] = count;
        if (rank >= 0) j["rank"] = rank;
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "hom_dim,nc_count,rank\n"
                  << to_decimal(engine) << ',' << count << ','
                  << (rank >= 0 ? std::to_string(rank) : std::string()) << "\n";
    } else {
        std::cout << "engine=" << to_decimal(engine) << " count=" << count;
        if (rank >= 0) std::cout << " rank=" << rank;
        std::cout << "\n";
    }
    return agree ? kExitOk : kExitVerification;
}

int cmd_dim(const CommonFlags& flags, const std::string& word_text, long n) {
    FusionAlphabet a = flags.alphabet();
    if (a.kind() != InstanceKind::reflection)
        throw std::invalid_argument("dim needs the reflection instance");
    if (n < 4) throw std::invalid_argument("dimension queries need n >= 4");
    Word x = parse_word(word_text, a);
    BigInt value = dimension_of_word(x, n);
    if (flags.format == "json") {
        nlohmann::json j;
        j["word"] = x;
        j["n"] = n;
        j["dim"] = to_decimal(value);
        std::cout << j.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "word,dim\n" << csv_quote(format_word(x)) << ',' << to_decimal(value) << "\n";
    } else {
        std::cout << to_decimal(value) << "\n";
    }
    return kExitOk;
}

std::string d_value_text(const RootInt& d, bool symbolic) {
    if (symbolic) return d.to_string();
    if (d.root_part() == 0) return to_decimal(d.rational_part());
    BigInt n(d.ambient());
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return to_decimal(d.rational_part() + d.root_part() * r);
    }
    return d.to_string();  // irrational entry, fall back to the pair form
}

int cmd_table_dims(const CommonFlags& flags, long n, int max_k, bool symbolic) {
    if (n < 4) throw std::invalid_argument("the dimension table needs n >= 4");
    if (max_k < 0) throw std::invalid_argument("max-k must be >= 0");
    if (flags.format == "json") {
        nlohmann::json values = nlohmann::json::array();
        for (int k = 0; k <= max_k; ++k) values.push_back(d_value_text(d_seq(k, n), symbolic));
        nlohmann::json j;
        j["n"] = n;
        j["values"] = std::move(values);
        std::cout << j.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "k,d\n";
        for (int k = 0; k <= max_k; ++k)
            std::cout << k << ',' << csv_quote(d_value_text(d_seq(k, n), symbolic)) << "\n";
    } else {
        for (int k = 0; k <= max_k; ++k)
            std::cout << "d_" << k << " = " << d_value_text(d_seq(k, n), symbolic) << "\n";
    }
    return kExitOk;
}

int cmd_count_nc(const CommonFlags& flags, const std::string& labels_text,
                 const std::string& upper_text, const std::string& lower_text,
                 bool list_partitions) {
    FusionAlphabet a = flags.alphabet();
    if (a.kind() != InstanceKind::reflection)
        throw std::invalid_argument("count-nc needs the reflection instance");
    const ModulusSpec& m = a.modulus();
    LabeledTuple t;
    if (!labels_text.empty() && (!upper_text.empty() || !lower_text.empty()))
        throw std::invalid_argument("pass either --labels or --upper/--lower, not both");
    if (!labels_text.empty()) {
        t.lower = parse_word(labels_text, a);
    } else {
        t.upper = parse_word(upper_text, a);
        t.lower = parse_word(lower_text, a);
    }
    Limits limits = flags.limits();
    long count = count_nc_s(t, m, limits);
    std::vector<std::string> admissible;
    if (list_partitions)
        for_each_nc(static_cast<int>(t.upper.size()), static_cast<int>(t.lower.size()),
                    [&](const SetPartition& p) {
                        if (satisfies_label_condition(p, t, m))
                            admissible.push_back(format_partition(p));
                    },
                    limits);
    if (flags.format == "json") {
        nlohmann::json j;
        j["count"] = count;
        if (list_partitions) j["partitions"] = admissible;
        std::cout << j.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "count\n" << count << "\n";
        for (const std::string& p : admissible) std::cout << csv_quote(p) << "\n";
    } else {
        std::cout << count << "\n";
        for (const std::string& p : admissible) std::cout << p << "\n";
    }
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags, const std::string& suite, bool s_given,
               const std::vector<long>& n_given) {
    VerifyOptions options;
    options.seed = flags.seed;
    options.jobs = flags.jobs;
    options.limits = flags.limits();
    if (s_given) {
        ModulusSpec m = parse_modulus(flags.s_text);
        if (m.finite) {
            options.s_values = {m.order};
            options.include_infinite = false;
        } else {
            options.s_values = {};
            options.include_infinite = true;
        }
    }
    if (!n_given.empty()) {
        options.n_values.clear();
        for (long n : n_given) options.n_values.push_back(static_cast<int>(n));
    }

    std::vector<PropertyResult> results = run_suite(suite, options);
    long failures = 0;
    if (flags.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const PropertyResult& r : results) {
            failures += r.failures;
            nlohmann::json e;
            e["property"] = r.name;
            e["cases"] = r.cases;
            e["failures"] = r.failures;
            e["millis"] = r.millis;
            if (!r.note.empty()) e["note"] = r.note;
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const PropertyResult& r : results) {
            failures += r.failures;
            std::cout << (r.passed() ? "[pass] " : "[FAIL] ") << r.name << "  cases=" << r.cases
                      << " failures=" << r.failures << " time=" << static_cast<long>(r.millis)
                      << "ms";
            if (!r.note.empty()) std::cout << "  note: " << r.note;
            std::cout << "\n";
        }
        std::cout << results.size() << " properties, " << failures << " failing checks\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-rule calculator and cross-verifier"};
    app.require_subcommand(1);

    CommonFlags fuse_flags;
    std::string fuse_x, fuse_y;
    CLI::App* fuse_cmd = app.add_subcommand("fuse", "decompose a product of irreducibles");
    add_common(fuse_cmd, fuse_flags);
    fuse_cmd->add_option("--x", fuse_x, "left word (comma-separated letters)");
    fuse_cmd->add_option("--y", fuse_y, "right word");

    CommonFlags homdim_flags;
    std::string homdim_upper, homdim_lower;
    bool homdim_oracle = false, homdim_dump = false;
    long homdim_n = -1;
    CLI::App* homdim_cmd =
        app.add_subcommand("homdim", "intertwiner-space dimension between tensor products");
    add_common(homdim_cmd, homdim_flags);
    homdim_cmd->add_option("--upper", homdim_upper, "upper index word");
    homdim_cmd->add_option("--lower", homdim_lower, "lower index word");
    homdim_cmd->add_flag("--oracle", homdim_oracle,
                         "also count labeled partitions and, with --n, their exact rank");
    homdim_cmd->add_option("--n", homdim_n, "ambient dimension for the rank oracle");
    homdim_cmd->add_flag("--dump-maps", homdim_dump,
                         "print each admissible partition and its matrix (with --oracle --n)");

    CommonFlags dim_flags;
    std::string dim_word;
    long dim_n = -1;
    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of one irreducible");
    add_common(dim_cmd, dim_flags);
    dim_cmd->add_option("--word", dim_word, "the word labelling the irreducible");
    dim_cmd->add_option("--n", dim_n, "ambient dimension (>= 4)")->required();

    CommonFlags table_flags;
    std::string table_what = "dims";
    long table_n = -1;
    int table_max_k = 8;
    bool table_symbolic = false;
    CLI::App* table_cmd = app.add_subcommand("table", "print a value table");
    add_common(table_cmd, table_flags);
    table_cmd->add_option("what", table_what, "which table (dims)")
        ->check(CLI::IsMember({"dims"}));
    table_cmd->add_option("--n", table_n, "ambient dimension (>= 4)")->required();
    table_cmd->add_option("--max-k", table_max_k, "largest index");
    table_cmd->add_flag("--symbolic", table_symbolic, "print entries as a + b*sqrt(n)");

    CommonFlags count_flags;
    std::string count_labels, count_upper, count_lower;
    bool count_list = false;
    CLI::App* count_cmd =
        app.add_subcommand("count-nc", "count labeled noncrossing partitions");
    add_common(count_cmd, count_flags);
    count_cmd->add_option("--labels", count_labels, "one-row labels");
    count_cmd->add_option("--upper", count_upper, "upper-row labels");
    count_cmd->add_option("--lower", count_lower, "lower-row labels");
    count_cmd->add_flag("--list", count_list, "also print the admissible partitions");

    CommonFlags verify_flags;
    std::string verify_suite = "all";
    std::vector<long> verify_n;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
    add_common(verify_cmd, verify_flags);
    verify_cmd->add_option("--suite", verify_suite, "all | fusion | tannaka | dims | formulations")
        ->check(CLI::IsMember({"all", "fusion", "tannaka", "dims", "formulations"}));
    verify_cmd->add_option("--n", verify_n, "ambient dimensions to exercise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*fuse_cmd) return cmd_fuse(fuse_flags, fuse_x, fuse_y);
        if (*homdim_cmd)
            return cmd_homdim(homdim_flags, homdim_upper, homdim_lower, homdim_oracle,
                              static_cast<int>(homdim_n), homdim_dump);
        if (*dim_cmd) return cmd_dim(dim_flags, dim_word, dim_n);
        if (*table_cmd) return cmd_table_dims(table_flags, table_n, table_max_k, table_symbolic);
        if (*count_cmd)
            return cmd_count_nc(count_flags, count_labels, count_upper, count_lower, count_list);
        if (*verify_cmd)
            return cmd_verify(verify_flags, verify_suite, verify_cmd->count("--s") > 0, verify_n);
    } catch (const LimitError& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
