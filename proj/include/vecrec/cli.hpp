#pragma once

/// @file cli.hpp
/// @brief Command implementations behind the vecrec tool.
///
/// Each run_* function does the work of one subcommand against already
/// parsed inputs and returns the process exit status: 0 on success, 1 when
/// a requested check fails. Input/usage errors are reported by throwing;
/// the binary maps them to exit status 2. Keeping these out of main()
/// makes every command drivable in-process from the test suite.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "companion.hpp"
#include "coupled_system.hpp"
#include "decouple.hpp"
#include "sequence.hpp"
#include "system_json.hpp"
#include "tiling.hpp"

namespace vecrec {

enum class OutputFormat { kPlain, kCsv, kJson, kBfile };

inline OutputFormat parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::kPlain;
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    if (name == "bfile") return OutputFormat::kBfile;
    throw std::invalid_argument("unknown output format: '" + std::string(name) + "'");
}

enum class Component { kA, kB, kT };

inline Component parse_component(std::string_view name) {
    if (name == "a") return Component::kA;
    if (name == "b") return Component::kB;
    if (name == "t") return Component::kT;
    throw std::invalid_argument("component must be one of a, b, t");
}

inline const char* component_name(Component c) {
    switch (c) {
        case Component::kA: return "a";
        case Component::kB: return "b";
        default: return "t";
    }
}

namespace detail {

/// Plain mode aligns columns; csv joins with commas. Scalar strings never
/// contain commas or quotes, so no escaping is needed.
inline void write_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows, OutputFormat format) {
    if (format == OutputFormat::kCsv) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            out << (i ? "," : "") << header[i];
        }
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << row[i];
            }
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(widths[i])) << row[i];
        }
        out << '\n';
    };
    write_row(header);
    for (const auto& row : rows) write_row(row);
}

inline std::string join_scalars(const std::vector<Scalar>& values, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// decouple
// ---------------------------------------------------------------------------

struct DecoupleOptions {
    bool check = false;          // also run the closed form and compare
    bool trim = false;           // additionally report the trailing-zero-trimmed vector
    bool emit_system = false;    // JSON only: embed the canonical document
    OutputFormat format = OutputFormat::kPlain;
};

inline int run_decouple(const CoupledSystem& sys, const DecoupleOptions& opt, std::ostream& out,
                        std::ostream& err) {
    const CoefficientVector c = coefficients_recursive(sys.matrices());
    if (opt.check) {
        const CoefficientVector closed = coefficients_closed(sys.matrices());
        if (closed != c) {
            err << "error: recursive and closed-form coefficients disagree\n"
                << "  recursive: " << detail::join_scalars(c.coeffs) << "\n"
                << "  closed:    " << detail::join_scalars(closed.coeffs) << "\n";
            return 1;
        }
    }
    const Polynomial<Scalar> p = char_poly(c);
    const CoefficientVector trimmed = opt.trim ? trim_trailing_zeros(c) : CoefficientVector{};

    switch (opt.format) {
        case OutputFormat::kJson: {
            nlohmann::json doc;
            doc["order"] = c.order;
            doc["coefficients"] = scalars_to_json(c.coeffs);
            doc["characteristicPolynomial"] = to_string(p);
            if (opt.check) doc["closedFormAgrees"] = true;
            if (opt.trim) doc["trimmedCoefficients"] = scalars_to_json(trimmed.coeffs);
            if (opt.emit_system) doc["document"] = system_to_json(sys, c.coeffs);
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::kCsv: {
            std::vector<std::vector<std::string>> rows;
            const auto& coeffs = opt.trim ? trimmed.coeffs : c.coeffs;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                rows.push_back({std::to_string(i + 1), to_string(coeffs[i])});
            }
            detail::write_table(out, {"i", "c_i"}, rows, OutputFormat::kCsv);
            break;
        }
        default: {
            out << "order: " << c.order << '\n';
            out << "coefficients: " << detail::join_scalars(c.coeffs) << '\n';
            if (opt.trim) {
                out << "trimmed coefficients: " << detail::join_scalars(trimmed.coeffs) << '\n';
            }
            out << "characteristic polynomial: " << to_string(p) << '\n';
            if (opt.check) out << "closed-form check: PASS\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::size_t horizon = 0;  // 0 = auto: max(50, 4s)
};

inline int run_verify(const ParsedDocument& doc, const VerifyOptions& opt, std::ostream& out,
                      std::ostream& err) {
    const CoupledSystem& sys = doc.system;
    const std::size_t s = sys.order();
    const std::size_t horizon = opt.horizon ? opt.horizon : std::max<std::size_t>(50, 4 * s);
    if (horizon < 2 * s) {
        throw std::invalid_argument("horizon must be at least 2*order");
    }

    bool all_pass = true;
    const auto report = [&](int idx, const std::string& name, bool pass,
                            const std::string& detail = "") {
        out << "[" << idx << "/3] " << name << ": " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) out << " (" << detail << ")";
        out << '\n';
        all_pass = all_pass && pass;
    };

    // (i) the two coefficient routes agree
    const CoefficientVector c = coefficients_recursive(sys.matrices());
    const CoefficientVector closed = coefficients_closed(sys.matrices());
    report(1, "recursion vs closed form", c == closed);

    // (ii) generic characteristic polynomial of the companion matrix
    const Polynomial<Scalar> oracle = char_poly_oracle(build_companion(sys));
    report(2, "companion-matrix oracle", char_poly(c) == oracle);

    // (iii) generated sequences satisfy the recurrence, using the document's
    // claimed coefficients when present
    const CoefficientVector effective =
        doc.coefficients ? CoefficientVector{s, *doc.coefficients} : c;
    const SequencePair pair = generate_coupled(sys, horizon);
    ScalarSequence sum;
    sum.reserve(pair.a.size());
    for (std::size_t i = 0; i < pair.a.size(); ++i) sum.push_back(pair.a[i] + pair.b[i]);

    bool seq_pass = true;
    std::string seq_detail;
    const BootstrapInitials boot = bootstrap_initials(sys);
    const struct {
        const char* name;
        const ScalarSequence* z;
        const ScalarSequence* init;
    } components[] = {{"a", &pair.a, &boot.a}, {"b", &pair.b, &boot.b}, {"t", &sum, &boot.t}};
    for (const auto& comp : components) {
        const RecurrenceReport rep = verify_recurrence(*comp.z, effective);
        if (!rep.pass) {
            seq_pass = false;
            seq_detail = std::string("component ") + comp.name + " violates the recurrence at n=" +
                         std::to_string(*rep.first_violation);
            break;
        }
        if (effective.coeffs.size() == 2 * s) {
            const ScalarSequence regen = generate_decoupled(effective, *comp.init, horizon);
            if (regen != *comp.z) {
                std::size_t at = 0;
                while (at < regen.size() && regen[at] == (*comp.z)[at]) ++at;
                seq_pass = false;
                seq_detail = std::string("component ") + comp.name +
                             " diverges from decoupled regeneration at n=" + std::to_string(at);
                break;
            }
        }
    }
    report(3, "coupled vs decoupled sequences to n=" + std::to_string(horizon), seq_pass,
           seq_detail);

    out << "result: " << (all_pass ? "PASS" : "FAIL") << '\n';
    if (!all_pass) err << "error: verification failed\n";
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
    std::size_t last_index = 10;  // emits terms 0…last_index
    Component component = Component::kT;
    OutputFormat format = OutputFormat::kPlain;
    std::size_t max_terms = kDefaultMaxTerms;
};

inline int run_gen(const CoupledSystem& sys, const GenOptions& opt, std::ostream& out,
                   std::ostream& /*err*/) {
    const SequencePair pair = generate_coupled(sys, opt.last_index, opt.max_terms);
    ScalarSequence z;
    switch (opt.component) {
        case Component::kA: z = pair.a; break;
        case Component::kB: z = pair.b; break;
        case Component::kT:
            z.reserve(pair.a.size());
            for (std::size_t i = 0; i < pair.a.size(); ++i) z.push_back(pair.a[i] + pair.b[i]);
            break;
    }

    const char* name = component_name(opt.component);
    switch (opt.format) {
        case OutputFormat::kJson: {
            nlohmann::json doc;
            doc["component"] = name;
            doc["terms"] = scalars_to_json(z);
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::kBfile: {
            for (std::size_t n = 0; n < z.size(); ++n) {
                out << n << ' ' << to_string(z[n]) << '\n';
            }
            break;
        }
        default: {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t n = 0; n < z.size(); ++n) {
                rows.push_back({std::to_string(n), to_string(z[n])});
            }
            detail::write_table(out, {"n", name}, rows, opt.format);
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tiling / triangle
// ---------------------------------------------------------------------------

struct TilingCmdOptions {
    unsigned k = 1;
    std::size_t n = 10;
    bool enumerate = false;  // run the brute-force oracle side by side
    OutputFormat format = OutputFormat::kPlain;
};

inline int run_tiling(const TilingCmdOptions& opt, std::ostream& out, std::ostream& err) {
    const TilingCounts counts = tiling_counts(opt.k, opt.n);

    std::vector<Scalar> enum_a, enum_b;
    bool match = true;
    if (opt.enumerate) {
        for (std::size_t m = 0; m <= opt.n; ++m) {
            const std::vector<Tiling> all = enumerate_tilings(opt.k, m);
            long black = 0;
            for (const Tiling& t : all) black += t.all_black() ? 1 : 0;
            enum_a.push_back(Scalar(black));
            enum_b.push_back(Scalar(static_cast<long>(all.size()) - black));
            match = match && enum_a[m] == counts.a[m] && enum_b[m] == counts.b[m];
        }
    }

    switch (opt.format) {
        case OutputFormat::kJson: {
            nlohmann::json doc;
            doc["k"] = opt.k;
            doc["a"] = scalars_to_json(counts.a);
            doc["b"] = scalars_to_json(counts.b);
            doc["t"] = scalars_to_json(counts.t);
            if (opt.enumerate) {
                doc["enumeratedA"] = scalars_to_json(enum_a);
                doc["enumeratedB"] = scalars_to_json(enum_b);
                doc["enumerationMatches"] = match;
            }
            out << doc.dump(2) << '\n';
            break;
        }
        default: {
            std::vector<std::string> header{"n", "a", "b", "t"};
            if (opt.enumerate) {
                header.push_back("enum_a");
                header.push_back("enum_b");
            }
            std::vector<std::vector<std::string>> rows;
            for (std::size_t m = 0; m <= opt.n; ++m) {
                std::vector<std::string> row{std::to_string(m), to_string(counts.a[m]),
                                             to_string(counts.b[m]), to_string(counts.t[m])};
                if (opt.enumerate) {
                    row.push_back(to_string(enum_a[m]));
                    row.push_back(to_string(enum_b[m]));
                }
                rows.push_back(std::move(row));
            }
            detail::write_table(out, header, rows,
                                opt.format == OutputFormat::kCsv ? OutputFormat::kCsv
                                                                 : OutputFormat::kPlain);
            break;
        }
    }

    if (opt.enumerate && !match) {
        err << "error: enumeration disagrees with the recurrence counts\n";
        return 1;
    }
    return 0;
}

struct TriangleOptions {
    unsigned max_k = 7;
    OutputFormat format = OutputFormat::kPlain;
};

inline int run_triangle(const TriangleOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    const std::vector<CoefficientVector> rows = coefficient_triangle(opt.max_k);
    switch (opt.format) {
        case OutputFormat::kJson: {
            nlohmann::json doc;
            nlohmann::json arr = nlohmann::json::array();
            for (const CoefficientVector& row : rows) arr.push_back(scalars_to_json(row.coeffs));
            doc["rows"] = std::move(arr);
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::kCsv: {
            // long format keeps rows of different length regular
            std::vector<std::vector<std::string>> table;
            for (const CoefficientVector& row : rows) {
                for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
                    table.push_back({std::to_string(row.order), std::to_string(i + 1),
                                     to_string(row.coeffs[i])});
                }
            }
            detail::write_table(out, {"k", "i", "c_i"}, table, OutputFormat::kCsv);
            break;
        }
        default: {
            for (const CoefficientVector& row : rows) {
                out << "k=" << row.order << ": " << detail::join_scalars(row.coeffs) << '\n';
            }
            break;
        }
    }
    return 0;
}

}  // namespace vecrec
