#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congap.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes are part of the interface: 0 success/certificate, 1 usage or
// parse error, 2 inconclusive (no certificate / no witness), 3 verification
// failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInvalid = 3;

struct PolyHandle {
    congap_poly* p = nullptr;
    ~PolyHandle() { congap_poly_free(p); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { congap_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

int report_error(congap_status status) {
    std::cerr << "error: " << congap_last_error() << "\n";
    (void)status;
    return kExitUsage;
}

bool parse_poly_arg(const std::string& text, PolyHandle& out) {
    return congap_poly_parse(text.c_str(), &out.p) == CONGAP_OK;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

// "19 * 151" or "-1 * 2^2"; empty for |disc| = 1.
std::string factor_string(const json& report) {
    std::vector<std::string> parts;
    std::string disc = report["disc"].get<std::string>();
    if (!disc.empty() && disc[0] == '-') parts.push_back("-1");
    for (const auto& f : report["factors"]) {
        std::string part = std::to_string(f["prime"].get<std::uint64_t>());
        unsigned e = f["exponent"].get<unsigned>();
        if (e > 1) part += "^" + std::to_string(e);
        parts.push_back(part);
    }
    std::string cofactor = report["cofactor"].get<std::string>();
    if (cofactor != "1") parts.push_back(cofactor + " (unfactored)");
    std::string out;
    for (const std::string& part : parts) {
        if (!out.empty()) out += " * ";
        out += part;
    }
    return out;
}

int cmd_disc(const std::string& poly_text, const std::string& format) {
    PolyHandle poly;
    if (!parse_poly_arg(poly_text, poly)) return report_error(CONGAP_ERR_PARSE);
    StringHandle text;
    if (congap_disc_report_json(poly.p, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json report = json::parse(text.str());
    if (format == "json") {
        std::cout << report.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "prime,exponent\n";
        std::string disc = report["disc"].get<std::string>();
        if (!disc.empty() && disc[0] == '-') std::cout << "-1,1\n";
        for (const auto& f : report["factors"])
            std::cout << f["prime"].get<std::uint64_t>() << "," << f["exponent"].get<unsigned>()
                      << "\n";
        std::string cofactor = report["cofactor"].get<std::string>();
        if (cofactor != "1") std::cout << csv_quote(cofactor) << ",1\n";
    } else {
        std::cout << "disc(" << report["poly"].get<std::string>()
                  << ") = " << report["disc"].get<std::string>();
        std::string factors = factor_string(report);
        if (!factors.empty() && factors != report["disc"].get<std::string>())
            std::cout << " = " << factors;
        if (report["square"].get<bool>()) std::cout << "  (perfect square)";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_split_primes(const std::string& poly_text, std::uint64_t bound, std::uint64_t modulus,
                     unsigned workers, const std::string& format) {
    PolyHandle poly;
    if (!parse_poly_arg(poly_text, poly)) return report_error(CONGAP_ERR_PARSE);
    congap_split_set* set = nullptr;
    if (congap_split_primes(poly.p, bound, workers, &set) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    std::unique_ptr<congap_split_set, decltype(&congap_split_set_free)> guard(
        set, congap_split_set_free);
    StringHandle text;
    if (congap_split_set_json(set, modulus, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json report = json::parse(text.str());

    if (format == "json") {
        std::cout << report.dump() << "\n";
    } else if (format == "csv") {
        std::cout << (modulus ? "prime,class\n" : "prime\n");
        for (const auto& p : report["primes"]) {
            std::cout << p.get<std::uint64_t>();
            if (modulus) std::cout << "," << p.get<std::uint64_t>() % modulus;
            std::cout << "\n";
        }
    } else {
        std::cout << report["count"].get<std::uint64_t>() << " split primes <= "
                  << report["bound"].get<std::uint64_t>() << " for "
                  << report["poly"].get<std::string>() << "\n";
        std::string line;
        for (const auto& p : report["primes"]) {
            std::string token = std::to_string(p.get<std::uint64_t>());
            if (line.size() + token.size() + 1 > 78) {
                std::cout << line << "\n";
                line.clear();
            }
            line += (line.empty() ? "" : " ") + token;
        }
        if (!line.empty()) std::cout << line << "\n";
        if (modulus) {
            for (const auto& row : report["histogram"])
                std::cout << "class " << row["class"].get<std::uint64_t>() << " (mod " << modulus
                          << "): " << row["count"].get<std::uint64_t>() << " primes\n";
            if (report["noncoprime"].get<std::uint64_t>() > 0)
                std::cout << "not coprime to " << modulus << ": "
                          << report["noncoprime"].get<std::uint64_t>() << " primes\n";
        }
    }
    return kExitOk;
}

int cmd_witness(const std::string& poly_text, std::uint64_t bound, std::uint64_t n_max,
                const std::string& mode, std::uint64_t min_sample, unsigned workers,
                const std::string& format) {
    PolyHandle poly;
    if (!parse_poly_arg(poly_text, poly)) return report_error(CONGAP_ERR_PARSE);
    congap_witness_list* list = nullptr;
    congap_search_mode search_mode =
        mode == "full_scan" ? CONGAP_MODE_FULL_SCAN : CONGAP_MODE_DIVISORS;
    if (congap_witness_search(poly.p, bound, n_max, search_mode, min_sample, workers, &list) !=
        CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    std::unique_ptr<congap_witness_list, decltype(&congap_witness_list_free)> guard(
        list, congap_witness_list_free);
    StringHandle text;
    if (congap_witness_list_json(list, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json result = json::parse(text.str());
    const json& reports = result["reports"];

    if (format == "json") {
        std::cout << result.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,bound,subgroup_order,phi,index,uncovered_class,status,shared_factor\n";
        for (const auto& r : reports)
            std::cout << r["n"].get<std::uint64_t>() << "," << r["bound"].get<std::uint64_t>()
                      << "," << r["subgroup_order"].get<std::uint64_t>() << ","
                      << r["phi"].get<std::uint64_t>() << "," << r["index"].get<std::uint64_t>()
                      << "," << r["uncovered_class"].get<std::uint64_t>() << ","
                      << r["status"].get<std::string>() << ","
                      << r["shared_factor"].get<std::uint64_t>() << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << "n=" << r["n"].get<std::uint64_t>() << ": subgroup order "
                      << r["subgroup_order"].get<std::uint64_t>() << " of phi "
                      << r["phi"].get<std::uint64_t>() << " (index "
                      << r["index"].get<std::uint64_t>() << "), uncovered class "
                      << r["uncovered_class"].get<std::uint64_t>() << ", "
                      << r["status"].get<std::string>() << ", shared factor "
                      << r["shared_factor"].get<std::uint64_t>() << "\n";
        if (reports.empty()) std::cout << "no witnesses found\n";
        for (const auto& note : result["notes"])
            std::cout << "note: " << note.get<std::string>() << "\n";
    }
    return reports.empty() ? kExitInconclusive : kExitOk;
}

int cmd_certify(const std::string& poly_text, std::uint64_t n, std::uint64_t prime_bound,
                bool assume_irreducible, const std::string& format) {
    PolyHandle poly;
    if (!parse_poly_arg(poly_text, poly)) return report_error(CONGAP_ERR_PARSE);
    congap_certify_outcome* outcome = nullptr;
    if (congap_certify(poly.p, n, prime_bound, assume_irreducible ? 1 : 0, &outcome) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    std::unique_ptr<congap_certify_outcome, decltype(&congap_certify_outcome_free)> guard(
        outcome, congap_certify_outcome_free);
    int complete = 0;
    congap_certify_outcome_complete(outcome, &complete);
    StringHandle text;
    if (congap_certify_outcome_json(outcome, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json report = json::parse(text.str());

    if (format == "json") {
        if (complete) {
            StringHandle cert_text;
            congap_certify_outcome_certificate_json(outcome, &cert_text.s);
            std::cout << cert_text.str() << "\n";
        } else {
            std::cout << report.dump() << "\n";
        }
    } else if (format == "csv") {
        std::cout << "class,prime\n";
        for (const auto& a : report["assignments"])
            std::cout << a["class"].get<std::uint64_t>() << "," << a["prime"].get<std::uint64_t>()
                      << "\n";
    } else {
        for (const auto& a : report["assignments"])
            std::cout << "class " << a["class"].get<std::uint64_t>() << " (mod " << n
                      << ") -> prime " << a["prime"].get<std::uint64_t>() << "\n";
        for (const auto& m : report["missing"])
            std::cout << "class " << m["class"].get<std::uint64_t>() << " (mod " << n
                      << "): no qualifying prime <= " << prime_bound << " ("
                      << m["primes_tried"].get<std::uint64_t>() << " primes tried, last "
                      << m["last_prime"].get<std::uint64_t>() << ")\n";
        if (complete)
            std::cout << "certificate: Phi_" << n << " is irreducible over Q[x]/("
                      << report["g"].get<std::string>() << ")\n";
        else
            std::cout << "no certificate at this bound; the result is inconclusive\n";
    }
    return complete ? kExitOk : kExitInconclusive;
}

int cmd_verify(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    congap_certificate* cert = nullptr;
    if (congap_certificate_parse_json(buffer.str().c_str(), &cert) != CONGAP_OK)
        return report_error(CONGAP_ERR_PARSE);
    std::unique_ptr<congap_certificate, decltype(&congap_certificate_free)> guard(
        cert, congap_certificate_free);
    int valid = 0;
    StringHandle text;
    if (congap_certificate_verify(cert, &valid, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json report = json::parse(text.str());

    if (format == "json") {
        std::cout << report.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "check,ok,detail\n";
        for (const auto& c : report["checks"])
            std::cout << csv_quote(c["check"].get<std::string>()) << ","
                      << (c["ok"].get<bool>() ? "true" : "false") << ","
                      << csv_quote(c["detail"].get<std::string>()) << "\n";
    } else {
        for (const auto& c : report["checks"]) {
            std::cout << (c["ok"].get<bool>() ? "ok   " : "FAIL ")
                      << c["check"].get<std::string>();
            std::string detail = c["detail"].get<std::string>();
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        }
        std::cout << (valid ? "certificate valid\n" : "certificate INVALID\n");
    }
    return valid ? kExitOk : kExitInvalid;
}

int cmd_density(const std::string& poly_text, std::uint64_t bound, std::uint64_t expected_order,
                unsigned workers, const std::string& format) {
    PolyHandle poly;
    if (!parse_poly_arg(poly_text, poly)) return report_error(CONGAP_ERR_PARSE);
    StringHandle text;
    if (congap_density_json(poly.p, bound, expected_order, workers, &text.s) != CONGAP_OK)
        return report_error(CONGAP_ERR_DOMAIN);
    json report = json::parse(text.str());

    if (format == "json") {
        std::cout << report.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "bound,split_count,prime_count,ratio";
        if (expected_order) std::cout << ",expected,relative_error";
        std::cout << "\n"
                  << report["bound"].get<std::uint64_t>() << ","
                  << report["split_count"].get<std::uint64_t>() << ","
                  << report["prime_count"].get<std::uint64_t>() << ","
                  << report["ratio"].get<double>();
        if (expected_order)
            std::cout << "," << report["expected"].get<double>() << ","
                      << report["relative_error"].get<double>();
        std::cout << "\n";
    } else {
        std::cout << report["split_count"].get<std::uint64_t>() << " / "
                  << report["prime_count"].get<std::uint64_t>() << " primes <= "
                  << report["bound"].get<std::uint64_t>() << " split completely: ratio "
                  << report["ratio"].get<double>() << "\n";
        if (expected_order)
            std::cout << "expected 1/" << expected_order << " = " << report["expected"].get<double>()
                      << " (relative error " << report["relative_error"].get<double>() << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence-gap toolkit: split primes, witness moduli, and cyclotomic "
                 "irreducibility certificates"};
    app.require_subcommand(1);

    std::string poly_text, format = "text", mode = "divisors", path;
    std::uint64_t bound = 0, n_max = 0, modulus = 0, prime_bound = 0;
    std::uint64_t min_sample = 10, expected_order = 0;
    unsigned workers = 1;
    bool assume_irreducible = false;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_workers = [&workers](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads")
            ->envname("CONGAP_WORKERS")
            ->check(CLI::Range(1u, 256u));
    };

    CLI::App* disc = app.add_subcommand("disc", "discriminant and its factorization");
    disc->add_option("poly", poly_text, "monic polynomial")->required();
    add_format(disc);

    CLI::App* split = app.add_subcommand("split-primes", "primes where the polynomial splits "
                                                         "into distinct linear factors");
    split->add_option("poly", poly_text, "monic polynomial")->required();
    split->add_option("--bound", bound, "upper bound on the primes")->required();
    split->add_option("--modulus", modulus, "tabulate residue classes mod this value");
    add_workers(split);
    add_format(split);

    CLI::App* witness = app.add_subcommand("witness", "moduli whose unit group is not generated "
                                                      "by the split primes");
    witness->add_option("poly", poly_text, "monic polynomial")->required();
    witness->add_option("--bound", bound, "upper bound on the primes")->required();
    witness->add_option("--nmax", n_max, "largest modulus to scan")->required();
    witness->add_option("--mode", mode, "candidate strategy")
        ->check(CLI::IsMember({"divisors", "full_scan"}));
    witness->add_option("--min-sample", min_sample, "suppress candidates with fewer primes");
    add_workers(witness);
    add_format(witness);

    CLI::App* certify = app.add_subcommand("certify", "prove Phi_n irreducible over the field "
                                                      "defined by the polynomial");
    certify->add_option("poly", poly_text, "monic irreducible polynomial")->required();
    certify->add_option("--modulus", modulus, "cyclotomic index n")->required();
    certify->add_option("--prime-bound", prime_bound, "largest prime to try per class")
        ->required();
    certify->add_flag("--assume-irreducible", assume_irreducible,
                      "proceed when the irreducibility heuristic is inconclusive");
    add_format(certify);

    CLI::App* verify = app.add_subcommand("verify", "re-validate a certificate file");
    verify->add_option("file", path, "certificate JSON file")->required();
    add_format(verify);

    CLI::App* density = app.add_subcommand("density", "fraction of primes that split completely");
    density->add_option("poly", poly_text, "monic polynomial")->required();
    density->add_option("--bound", bound, "upper bound on the primes")->required();
    density->add_option("--expected-order", expected_order,
                        "Galois group order for the Chebotarev comparison");
    add_workers(density);
    add_format(density);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (disc->parsed()) return cmd_disc(poly_text, format);
    if (split->parsed()) return cmd_split_primes(poly_text, bound, modulus, workers, format);
    if (witness->parsed())
        return cmd_witness(poly_text, bound, n_max, mode, min_sample, workers, format);
    if (certify->parsed())
        return cmd_certify(poly_text, modulus, prime_bound, assume_irreducible, format);
    if (verify->parsed()) return cmd_verify(path, format);
    if (density->parsed()) return cmd_density(poly_text, bound, expected_order, workers, format);
    return kExitUsage;
}
