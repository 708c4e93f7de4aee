#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorb/linalg.hpp"
#include "minorb/orbit.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "': expected text, json or csv");
}

namespace fmt_detail {

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

inline std::string int_vec_str(const IntVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string rat_vec_str(const RatVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].str();
    }
    return s + "]";
}

struct CheckColumn {
    const char* name;
    bool ReportChecks::* member;
};

inline const std::vector<CheckColumn>& check_columns() {
    static const std::vector<CheckColumn> cols = {
        {"lemma2_partition", &ReportChecks::lemma2_partition},
        {"lemma3_count", &ReportChecks::lemma3_count},
        {"eq1_eq2_vector_equality", &ReportChecks::eq1_eq2_vector_equality},
        {"theorem_dims_equal", &ReportChecks::theorem_dims_equal},
        {"corollary_length", &ReportChecks::corollary_length},
        {"special_pairing", &ReportChecks::special_pairing},
        {"nonorthogonal_set_equality", &ReportChecks::nonorthogonal_set_equality},
    };
    return cols;
}

}  // namespace fmt_detail

// ---------------------------------------------------------------------------
// VerificationReport rendering
// ---------------------------------------------------------------------------

inline std::string report_csv_header() {
    std::string h = "type,num_roots,num_positive,h_dual,num_special,dim_lemma1,dim_theorem,l_theta";
    for (const auto& col : fmt_detail::check_columns()) {
        h += ',';
        h += col.name;
    }
    return h;
}

inline std::string to_csv_row(const VerificationReport& r) {
    std::string s = r.type.name();
    for (int v : {r.num_roots, r.num_positive, r.h_dual, r.num_special, r.dim_lemma1,
                  r.dim_theorem, r.reflection_length_theta}) {
        s += ',';
        s += std::to_string(v);
    }
    for (const auto& col : fmt_detail::check_columns()) {
        s += ',';
        s += fmt_detail::bool_str(r.checks.*(col.member));
    }
    return s;
}

inline std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "type:                    " << r.type.name() << "\n"
       << "roots:                   " << r.num_roots << " (" << r.num_positive << " positive)\n"
       << "dual Coxeter number:     " << r.h_dual << "\n"
       << "special roots:           " << r.num_special << "\n"
       << "dim (orthogonality):     " << r.dim_lemma1 << "\n"
       << "dim (2h_dual - 2):       " << r.dim_theorem << "\n"
       << "length of r_theta:       " << r.reflection_length_theta << "\n"
       << "checks:\n";
    for (const auto& col : fmt_detail::check_columns()) {
        os << "  " << col.name << ": " << (r.checks.*(col.member) ? "pass" : "FAIL") << "\n";
    }
    os << "overall: " << (r.all_passed() ? "pass" : "FAIL") << "\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json checks;
    for (const auto& col : fmt_detail::check_columns()) {
        checks[col.name] = r.checks.*(col.member);
    }
    return nlohmann::ordered_json{{"type", r.type.name()},
                                  {"num_roots", r.num_roots},
                                  {"num_positive", r.num_positive},
                                  {"h_dual", r.h_dual},
                                  {"num_special", r.num_special},
                                  {"dim_lemma1", r.dim_lemma1},
                                  {"dim_theorem", r.dim_theorem},
                                  {"reflection_length_theta", r.reflection_length_theta},
                                  {"checks", checks},
                                  {"all_passed", r.all_passed()}};
}

/// Inverse of to_json; throws nlohmann::json::exception on missing fields.
inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.type = parse_lie_type(j.at("type").get<std::string>());
    r.num_roots = j.at("num_roots").get<int>();
    r.num_positive = j.at("num_positive").get<int>();
    r.h_dual = j.at("h_dual").get<int>();
    r.num_special = j.at("num_special").get<int>();
    r.dim_lemma1 = j.at("dim_lemma1").get<int>();
    r.dim_theorem = j.at("dim_theorem").get<int>();
    r.reflection_length_theta = j.at("reflection_length_theta").get<int>();
    const auto& checks = j.at("checks");
    for (const auto& col : fmt_detail::check_columns()) {
        r.checks.*(col.member) = checks.at(col.name).get<bool>();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Battery table rendering
// ---------------------------------------------------------------------------

inline std::string table_to_csv(const std::vector<VerificationReport>& rows) {
    std::string s = report_csv_header();
    s += '\n';
    for (const auto& r : rows) {
        s += to_csv_row(r);
        s += '\n';
    }
    return s;
}

inline std::string table_to_text(const std::vector<VerificationReport>& rows) {
    std::ostringstream os;
    os << "type  roots  pos  h_dual  #special  dim  l_theta  status\n";
    for (const auto& r : rows) {
        os.width(4);
        os << std::left << r.type.name() << std::right;
        os.width(7);
        os << r.num_roots;
        os.width(5);
        os << r.num_positive;
        os.width(8);
        os << r.h_dual;
        os.width(10);
        os << r.num_special;
        os.width(5);
        os << r.dim_theorem;
        os.width(9);
        os << r.reflection_length_theta;
        os << "  " << (r.all_passed() ? "ok" : "FAIL") << "\n";
    }
    return os.str();
}

inline nlohmann::ordered_json table_to_json(const std::vector<VerificationReport>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

// ---------------------------------------------------------------------------
// Root dump rendering
// ---------------------------------------------------------------------------

/// Root listing plus the footer quantities, precomputed once for all
/// output formats.
struct RootsDump {
    const RootSystem& rs;
    SpecialRootSet special;
    int h_dual;
};

inline RootsDump make_roots_dump(const RootSystem& rs) {
    return RootsDump{rs, special_roots(rs), dual_coxeter(rs)};
}

inline std::string roots_to_text(const RootsDump& d) {
    std::ostringstream os;
    os << "positive roots of " << d.rs.type.name() << "\n";
    os << "coords | height | norm2 | flags\n";
    const RatVec theta = to_rational(d.rs.theta.coords);
    for (const auto& r : d.rs.positives) {
        os << fmt_detail::int_vec_str(r.coords) << " | " << r.height << " | "
           << d.rs.form.inner(r.coords, r.coords).str() << " |";
        if (r == d.rs.theta) os << " theta";
        if (d.special.contains(r.coords)) os << " special";
        if (d.rs.form.inner(r.coords, theta).is_zero()) os << " orthogonal-to-theta";
        os << "\n";
    }
    os << "theta = " << fmt_detail::int_vec_str(d.rs.theta.coords) << "\n";
    os << "rho = " << fmt_detail::rat_vec_str(d.rs.rho) << "\n";
    os << "h_dual = " << d.h_dual << "\n";
    os << "num_special = " << d.special.size() << "\n";
    return os.str();
}

inline std::string roots_csv_header() {
    return "coords,height,norm2,is_theta,is_special,is_orthogonal_to_theta";
}

inline std::string roots_to_csv(const RootsDump& d) {
    std::ostringstream os;
    os << roots_csv_header() << "\n";
    const RatVec theta = to_rational(d.rs.theta.coords);
    for (const auto& r : d.rs.positives) {
        std::string coords;
        for (std::size_t i = 0; i < r.coords.size(); ++i) {
            if (i) coords += ' ';
            coords += std::to_string(r.coords[i]);
        }
        os << coords << ',' << r.height << ',' << d.rs.form.inner(r.coords, r.coords).str()
           << ',' << fmt_detail::bool_str(r == d.rs.theta) << ','
           << fmt_detail::bool_str(d.special.contains(r.coords)) << ','
           << fmt_detail::bool_str(d.rs.form.inner(r.coords, theta).is_zero()) << "\n";
    }
    // Footer quantities ride along as comment lines.
    os << "# theta = " << fmt_detail::int_vec_str(d.rs.theta.coords) << "\n";
    os << "# rho = " << fmt_detail::rat_vec_str(d.rs.rho) << "\n";
    os << "# h_dual = " << d.h_dual << "\n";
    os << "# num_special = " << d.special.size() << "\n";
    return os.str();
}

inline nlohmann::ordered_json roots_to_json(const RootsDump& d) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const RatVec theta = to_rational(d.rs.theta.coords);
    for (const auto& r : d.rs.positives) {
        nlohmann::ordered_json item;
        item["coords"] = r.coords;
        item["height"] = r.height;
        item["norm2"] = d.rs.form.inner(r.coords, r.coords).str();
        item["is_theta"] = (r == d.rs.theta);
        item["is_special"] = d.special.contains(r.coords);
        item["is_orthogonal_to_theta"] = d.rs.form.inner(r.coords, theta).is_zero();
        arr.push_back(std::move(item));
    }
    nlohmann::ordered_json rho = nlohmann::ordered_json::array();
    for (const auto& c : d.rs.rho) rho.push_back(c.str());
    return nlohmann::ordered_json{{"type", d.rs.type.name()},
                                  {"positive_roots", std::move(arr)},
                                  {"theta", d.rs.theta.coords},
                                  {"rho", std::move(rho)},
                                  {"h_dual", d.h_dual},
                                  {"num_special", d.special.size()}};
}

}  // namespace minorb
