// minorb — exact root-system combinatorics for the simple Lie types.
//
// Subcommands:
//   verify <type>   check every identity for one type, print a report
//   table           sweep a family/rank battery, one report row per type
//   roots <type>    dump the positive roots with flags and footer data
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad input.

#include <cctype>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <minorb/minorb.hpp>

namespace {

using namespace minorb;

LieType parse_cli_type(const std::string& text) {
    const LieType t = parse_lie_type(text);
    if (t.rank > kMaxSupportedRank) {
        throw InvalidTypeError("rank " + std::to_string(t.rank) +
                               " exceeds the supported maximum of " +
                               std::to_string(kMaxSupportedRank));
    }
    return t;
}

std::vector<Family> parse_families(const std::string& csv) {
    std::vector<Family> fams;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        if (token.size() != 1) {
            throw InvalidTypeError("bad family '" + token + "': expected single letters A..G");
        }
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        if (c < 'A' || c > 'G') {
            throw InvalidTypeError("unknown family '" + token + "': expected one of A, B, C, D, E, F, G");
        }
        fams.push_back(static_cast<Family>(c));
    }
    if (fams.empty()) {
        throw InvalidTypeError("no families given");
    }
    return fams;
}

/// stderr diagnostics for a failed report: names the identity and prints the
/// data that witnesses the failure.
void print_failure_diagnostics(const RootSystem& rs, const VerificationReport& rep) {
    const auto& c = rep.checks;
    auto& err = std::cerr;
    const SpecialRootSet s = special_roots(rs);
    if (!c.lemma2_partition) {
        const PositivePartition parts = classify_positives(rs);
        err << rep.type.name() << ": partition of positives under r_theta disagrees with the "
            << "theta - alpha definition (theta_part " << parts.theta_part.size()
            << ", special_part " << parts.special_part.size() << ", #S " << s.size() << ")\n";
    }
    if (!c.lemma3_count) {
        err << rep.type.name() << ": #S = " << rep.num_special << " but 2(h_dual - 2) = "
            << 2 * (rep.h_dual - 2) << "\n";
    }
    if (!c.eq1_eq2_vector_equality) {
        err << rep.type.name() << ": the three computations of r_theta(rho) disagree:\n";
        err << "  direct reflection   = " << fmt_detail::rat_vec_str(reflect(rs, rs.theta, rs.rho)) << "\n";
        RatVec via_h(rs.rho.size()), via_count(rs.rho.size());
        for (std::size_t i = 0; i < rs.rho.size(); ++i) {
            const Rational t(rs.theta.coords[i]);
            via_h[i] = rs.rho[i] - Rational(rep.h_dual - 1) * t;
            via_count[i] = rs.rho[i] - Rational(rep.num_special + 2, 2) * t;
        }
        err << "  rho - (h_dual-1) theta  = " << fmt_detail::rat_vec_str(via_h) << "\n";
        err << "  rho - (#S+2)/2 theta = " << fmt_detail::rat_vec_str(via_count) << "\n";
    }
    if (!c.theorem_dims_equal) {
        err << rep.type.name() << ": dim by orthogonality count = " << rep.dim_lemma1
            << " but 2 h_dual - 2 = " << rep.dim_theorem << "\n";
    }
    if (!c.corollary_length) {
        err << rep.type.name() << ": l(r_theta) = " << rep.reflection_length_theta
            << " but 2 h_dual - 3 = " << 2 * rep.h_dual - 3 << "\n";
    }
    if (!c.special_pairing) {
        for (const auto& alpha : s.members) {
            const IntVec partner = sub(rs.theta.coords, alpha.coords);
            if (!s.contains(partner) || partner == alpha.coords) {
                err << rep.type.name() << ": special root " << fmt_detail::int_vec_str(alpha.coords)
                    << " has no distinct special partner theta - alpha\n";
                break;
            }
        }
    }
    if (!c.nonorthogonal_set_equality) {
        const RatVec theta = to_rational(rs.theta.coords);
        for (const auto& alpha : rs.positives) {
            const bool nonorth = !rs.form.inner(alpha.coords, theta).is_zero();
            const bool in_s_theta = s.contains(alpha.coords) || alpha.coords == rs.theta.coords;
            if (nonorth != in_s_theta) {
                err << rep.type.name() << ": root " << fmt_detail::int_vec_str(alpha.coords)
                    << " breaks S + {theta} == {alpha : (alpha, theta) != 0}\n";
            }
        }
    }
}

int cmd_verify(const std::string& type_string, OutputFormat format) {
    const LieType t = parse_cli_type(type_string);
    const RootSystem rs = generate_roots(t);
    const VerificationReport rep = verify(rs);
    switch (format) {
        case OutputFormat::text:
            std::cout << to_text(rep);
            break;
        case OutputFormat::json:
            std::cout << to_json(rep).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << report_csv_header() << "\n" << to_csv_row(rep) << "\n";
            break;
    }
    if (!rep.all_passed()) {
        print_failure_diagnostics(rs, rep);
        return 1;
    }
    return 0;
}

int cmd_table(const BatterySpec& spec, OutputFormat format) {
    const std::vector<LieType> types = expand_battery(spec);
    std::vector<VerificationReport> rows;
    rows.reserve(types.size());
    bool all_ok = true;
    for (const auto& t : types) {
        rows.push_back(verify(t));
        all_ok = all_ok && rows.back().all_passed();
    }
    switch (format) {
        case OutputFormat::text:
            std::cout << table_to_text(rows);
            break;
        case OutputFormat::json:
            std::cout << table_to_json(rows).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << table_to_csv(rows);
            break;
    }
    if (!all_ok) {
        for (const auto& r : rows) {
            if (!r.all_passed()) print_failure_diagnostics(generate_roots(r.type), r);
        }
        return 1;
    }
    return 0;
}

int cmd_roots(const std::string& type_string, OutputFormat format) {
    const LieType t = parse_cli_type(type_string);
    const RootSystem rs = generate_roots(t);
    const RootsDump dump = make_roots_dump(rs);
    switch (format) {
        case OutputFormat::text:
            std::cout << roots_to_text(dump);
            break;
        case OutputFormat::json:
            std::cout << roots_to_json(dump).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << roots_to_csv(dump);
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root-system combinatorics and minimal-nilpotent-orbit checks"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string type_string;
    std::string families_csv = "A,B,C,D,E,F,G";
    int max_rank = 12;

    auto add_format = [&format_name](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, json or csv")
            ->default_val("text");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify every identity for one type");
    verify_cmd->add_option("type", type_string, "Lie type, e.g. A5 or E8")->required();
    add_format(verify_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "verify a battery of types");
    table_cmd->add_option("--families", families_csv, "comma-separated family letters");
    table_cmd->add_option("--max-rank", max_rank, "largest rank to include (<= 64)");
    add_format(table_cmd);

    CLI::App* roots_cmd = app.add_subcommand("roots", "dump the positive roots of one type");
    roots_cmd->add_option("type", type_string, "Lie type, e.g. A5 or E8")->required();
    add_format(roots_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        if (verify_cmd->parsed()) return cmd_verify(type_string, format);
        if (roots_cmd->parsed()) return cmd_roots(type_string, format);
        BatterySpec spec;
        spec.families = parse_families(families_csv);
        spec.max_rank = max_rank;
        return cmd_table(spec, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
