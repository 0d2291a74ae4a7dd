#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dtgw/correspondence.hpp"
#include "dtgw/json_io.hpp"
#include "dtgw/partition.hpp"
#include "dtgw/ratfun.hpp"
#include "dtgw/schur.hpp"
#include "dtgw/series.hpp"
#include "dtgw/vertex.hpp"

using dtgw::GaussianRational;
using dtgw::Geometry;
using dtgw::Int;
using dtgw::Json;
using dtgw::LaurentSeries;
using dtgw::Partition;
using dtgw::RatFun;
using dtgw::TruncSeries;
using dtgw::VerificationReport;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<dtgw::CurveSpecies> parse_species(const std::string& s) {
    std::vector<dtgw::CurveSpecies> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = item.find(':');
        if (pos == std::string::npos)
            throw std::invalid_argument("species entry '" + item + "' is not count:class");
        Int count(item.substr(0, pos));
        std::string rest = item.substr(pos + 1);
        std::size_t used = 0;
        int cls = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("species class '" + rest + "' is not an integer");
        if (count < 1 || cls < 1)
            throw std::invalid_argument("species counts and classes must be positive");
        out.push_back({std::move(count), cls});
    }
    if (out.empty()) throw std::invalid_argument("empty species list");
    return out;
}

std::string species_str(const Geometry& g) {
    std::string s;
    for (std::size_t j = 0; j < g.species.size(); ++j) {
        if (j) s += ',';
        s += g.species[j].count.get_str() + ":" + std::to_string(g.species[j].class_degree);
    }
    return s;
}

void plain_series(const TruncSeries& s) {
    for (int k = 0; k <= s.trunc(); ++k)
        std::cout << dtgw::var_name(s.var()) << '^' << k << ": " << s.coeff(k).str() << '\n';
}

void plain_series(const LaurentSeries& s) {
    for (int k = s.lead(); k <= s.trunc(); ++k)
        std::cout << "u^" << k << ": " << s.coeff(k).str() << '\n';
}

void plain_ratfun(const RatFun& f) {
    std::cout << "num:";
    for (const Int& c : f.num().coeffs()) std::cout << ' ' << c.get_str();
    std::cout << "\nden:";
    for (const Int& c : f.den().coeffs()) std::cout << ' ' << c.get_str();
    std::cout << '\n';
}

void plain_report(const VerificationReport& r) {
    std::cout << "target: " << r.target << '\n';
    std::size_t equal = 0;
    for (const auto& row : r.rows)
        if (row.equal) ++equal;
    std::cout << "rows equal: " << equal << '/' << r.rows.size() << '\n';
    std::cout << "q_inv_symmetric: " << (r.q_inv_symmetric ? "yes" : "no") << '\n';
    std::cout << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
    for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
}

int cmd_partitions(int n, const std::string& format) {
    std::vector<Partition> list = dtgw::enumerate_partitions(n);
    if (format == "json") {
        Json j;
        j["n"] = n;
        j["count"] = std::to_string(list.size());
        Json arr = Json::array();
        for (const Partition& p : list) arr.push_back(p.str());
        j["partitions"] = std::move(arr);
        emit(j);
    } else {
        std::cout << "n: " << n << "\ncount: " << list.size() << '\n';
        for (const Partition& p : list) std::cout << p.str() << '\n';
    }
    return 0;
}

int cmd_pd(int d, int order, const std::string& format) {
    RatFun f = dtgw::pd_schur(d);
    TruncSeries s = dtgw::rf_expand(f, order);
    if (format == "json") {
        Json j;
        j["d"] = d;
        j["order"] = order;
        j["closed_form"] = dtgw::ratfun_json(f);
        j["series"] = dtgw::series_json(s);
        emit(j);
    } else {
        std::cout << "d: " << d << "\norder: " << order << '\n';
        plain_ratfun(f);
        plain_series(s);
    }
    return 0;
}

int cmd_mcmahon(int order, const std::string& format) {
    TruncSeries s = dtgw::mcmahon(order);
    if (format == "json") {
        Json j;
        j["order"] = order;
        j["series"] = dtgw::series_json(s);
        emit(j);
    } else {
        std::cout << "order: " << order << '\n';
        plain_series(s);
    }
    return 0;
}

int cmd_pnd(int n, int d, const std::string& method, const std::string& format) {
    Int by_boxes, by_gf;
    if (method != "gf") by_boxes = dtgw::p_enumerate(n, d).count;
    if (method != "enumeration") {
        GaussianRational c = dtgw::p_gf(d, n).coeff(n);
        if (!c.is_integer()) throw std::domain_error("pnd: non-integer series coefficient");
        by_gf = c.re.get_num();
    }
    if (method == "both") {
        bool equal = by_boxes == by_gf;
        if (format == "json") {
            Json j;
            j["n"] = n;
            j["d"] = d;
            j["enumeration"] = by_boxes.get_str();
            j["generating_function"] = by_gf.get_str();
            j["equal"] = equal;
            emit(j);
        } else {
            std::cout << "n: " << n << "\nd: " << d << "\nenumeration: " << by_boxes.get_str()
                      << "\ngenerating_function: " << by_gf.get_str()
                      << "\nequal: " << (equal ? "yes" : "no") << '\n';
        }
        return equal ? 0 : 1;
    }
    const Int& count = method == "gf" ? by_gf : by_boxes;
    if (format == "json") {
        Json j;
        j["n"] = n;
        j["d"] = d;
        j["method"] = method;
        j["count"] = count.get_str();
        emit(j);
    } else {
        std::cout << "n: " << n << "\nd: " << d << "\nmethod: " << method
                  << "\ncount: " << count.get_str() << '\n';
    }
    return 0;
}

int cmd_vertex_check(const std::string& shape, int order, const std::string& format) {
    Partition lam = Partition::parse(shape);
    bool pass = dtgw::vertex_one_leg_check(lam, order);
    if (format == "json") {
        Json j;
        j["shape"] = lam.str();
        j["order"] = order;
        j["pass"] = pass;
        emit(j);
    } else {
        std::cout << "shape: " << lam.str() << "\norder: " << order
                  << "\npass: " << (pass ? "yes" : "no") << '\n';
    }
    return pass ? 0 : 1;
}

int cmd_zdt(long chi, const std::string& species, int degree, int order,
            const std::string& format) {
    Geometry g{chi, parse_species(species)};
    RatFun zr = dtgw::z_reduced_class(g, degree);
    TruncSeries s = dtgw::z_degree_zero(chi, order) * dtgw::rf_expand(zr, order);
    if (format == "json") {
        Json j;
        j["chi"] = chi;
        j["species"] = species_str(g);
        j["degree"] = degree;
        j["order"] = order;
        j["reduced"] = dtgw::ratfun_json(zr);
        j["unreduced_series"] = dtgw::series_json(s);
        emit(j);
    } else {
        std::cout << "chi: " << chi << "\nspecies: " << species_str(g)
                  << "\ndegree: " << degree << "\norder: " << order << '\n';
        plain_ratfun(zr);
        plain_series(s);
    }
    return 0;
}

int cmd_zgw(const std::string& species, int degree, int cutoff, const std::string& format) {
    Geometry g{0, parse_species(species)};
    LaurentSeries s = dtgw::zgw_reduced_class(g, degree, cutoff);
    if (format == "json") {
        Json j;
        j["species"] = species_str(g);
        j["degree"] = degree;
        j["genus_cutoff"] = cutoff;
        j["series"] = dtgw::series_json(s);
        emit(j);
    } else {
        std::cout << "species: " << species_str(g) << "\ndegree: " << degree
                  << "\ngenus_cutoff: " << cutoff << '\n';
        plain_series(s);
    }
    return 0;
}

std::vector<int> degree_list(int degree, int suite_max) {
    if (degree > 0) return {degree};
    std::vector<int> out;
    for (int d = 1; d <= suite_max; ++d) out.push_back(d);
    return out;
}

int run_reports(Json header, const std::vector<std::pair<Geometry, int>>& cases, int cutoff,
                const std::string& format) {
    bool all_pass = true;
    std::vector<VerificationReport> reports;
    for (const auto& [geom, deg] : cases) {
        reports.push_back(dtgw::correspondence_check(geom, deg, cutoff));
        all_pass = all_pass && reports.back().pass;
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const VerificationReport& r : reports) arr.push_back(dtgw::report_json(r));
        header["reports"] = std::move(arr);
        header["verdict"] = all_pass ? "pass" : "fail";
        emit(header);
    } else {
        for (const auto& [key, val] : header.items())
            std::cout << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                      << '\n';
        for (const VerificationReport& r : reports) {
            std::cout << '\n';
            plain_report(r);
        }
        std::cout << "\nverdict: " << (all_pass ? "pass" : "fail") << '\n';
    }
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, int degree, int cutoff, const std::string& format) {
    std::vector<std::pair<Geometry, int>> cases;
    if (suite == "quintic" || suite == "all")
        for (int d : degree_list(degree, 2)) cases.emplace_back(dtgw::quintic_preset(), d);
    if (suite == "toy" || suite == "all") {
        Geometry toy{0, {{Int(1), 1}}};
        for (int d : degree_list(degree, 4)) cases.emplace_back(toy, d);
    }
    Json header;
    header["suite"] = suite;
    header["genus_cutoff"] = cutoff;
    return run_reports(std::move(header), cases, cutoff, format);
}

int cmd_quintic(int degree, int cutoff, const std::string& format) {
    Geometry g = dtgw::quintic_preset();
    std::vector<std::pair<Geometry, int>> cases;
    for (int d : degree_list(degree, 2)) cases.emplace_back(g, d);
    Json header;
    header["chi"] = g.euler_char;
    header["species"] = species_str(g);
    header["genus_cutoff"] = cutoff;
    return run_reports(std::move(header), cases, cutoff, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Donaldson-Thomas / Gromov-Witten toolkit for super-rigid curves"};
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "plain"}));
    };

    int n = 0, d = 0, order = 20, degree = 0, cutoff = 6;
    long chi = 0;
    std::string shape, species, method = "both", suite = "all";

    CLI::App* c_part = app.add_subcommand("partitions", "list the partitions of n");
    c_part->add_option("--n", n, "partition size")->required()->check(CLI::NonNegativeNumber);
    add_format(c_part);

    CLI::App* c_pd = app.add_subcommand("pd", "box counting series P_d and its closed form");
    c_pd->add_option("--d", d, "curve multiplicity")->required()->check(CLI::NonNegativeNumber);
    c_pd->add_option("--order", order, "q truncation order")->check(CLI::NonNegativeNumber);
    add_format(c_pd);

    CLI::App* c_mm = app.add_subcommand("mcmahon", "MacMahon plane partition series");
    c_mm->add_option("--order", order, "q truncation order")->check(CLI::NonNegativeNumber);
    add_format(c_mm);

    CLI::App* c_pnd = app.add_subcommand("pnd", "count boxes of weight n at multiplicity d");
    c_pnd->add_option("--n", n, "box count weight")->required()->check(CLI::NonNegativeNumber);
    c_pnd->add_option("--d", d, "curve multiplicity")->required()->check(CLI::NonNegativeNumber);
    c_pnd->add_option("--method", method, "enumeration, gf, or both")
        ->check(CLI::IsMember({"enumeration", "gf", "both"}));
    add_format(c_pnd);

    CLI::App* c_vx = app.add_subcommand("vertex-check", "one-leg vertex against the Schur form");
    c_vx->add_option("--shape", shape, "leg partition, e.g. 3,2,1")->required();
    c_vx->add_option("--order", order, "q truncation order")->check(CLI::NonNegativeNumber);
    add_format(c_vx);

    CLI::App* c_zdt = app.add_subcommand("zdt", "reduced DT contribution of a curve class");
    c_zdt->add_option("--chi", chi, "Euler characteristic of the threefold");
    c_zdt->add_option("--species", species, "count:class pairs, comma separated")->required();
    c_zdt->add_option("--degree", degree, "curve class degree")->required()
        ->check(CLI::PositiveNumber);
    c_zdt->add_option("--order", order, "q truncation order")->check(CLI::NonNegativeNumber);
    add_format(c_zdt);

    CLI::App* c_zgw = app.add_subcommand("zgw", "reduced GW contribution of a curve class");
    c_zgw->add_option("--species", species, "count:class pairs, comma separated")->required();
    c_zgw->add_option("--degree", degree, "curve class degree")->required()
        ->check(CLI::PositiveNumber);
    c_zgw->add_option("--genus-cutoff", cutoff, "u-power window is [-2, 2G-2]")
        ->check(CLI::NonNegativeNumber);
    add_format(c_zgw);

    CLI::App* c_ver = app.add_subcommand("verify", "run the correspondence suites");
    c_ver->add_option("--suite", suite, "quintic, toy, or all")
        ->check(CLI::IsMember({"quintic", "toy", "all"}));
    c_ver->add_option("--degree", degree, "restrict to one degree")->check(CLI::PositiveNumber);
    c_ver->add_option("--genus-cutoff", cutoff, "u-power window is [-2, 2G-2]")
        ->check(CLI::NonNegativeNumber);
    add_format(c_ver);

    CLI::App* c_qui = app.add_subcommand("quintic", "correspondence for the quintic preset");
    c_qui->add_option("--degree", degree, "restrict to one degree")->check(CLI::PositiveNumber);
    c_qui->add_option("--genus-cutoff", cutoff, "u-power window is [-2, 2G-2]")
        ->check(CLI::NonNegativeNumber);
    add_format(c_qui);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_part) return cmd_partitions(n, format);
        if (*c_pd) return cmd_pd(d, order, format);
        if (*c_mm) return cmd_mcmahon(order, format);
        if (*c_pnd) return cmd_pnd(n, d, method, format);
        if (*c_vx) return cmd_vertex_check(shape, order, format);
        if (*c_zdt) return cmd_zdt(chi, species, degree, order, format);
        if (*c_zgw) return cmd_zgw(species, degree, cutoff, format);
        if (*c_ver) return cmd_verify(suite, degree, cutoff, format);
        if (*c_qui) return cmd_quintic(degree, cutoff, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
