#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "untwist/engine/engine.hpp"
#include "untwist/engine/report.hpp"
#include "untwist/engine/table.hpp"
#include "untwist/forms/lens.hpp"
#include "untwist/forms/mq.hpp"
#include "untwist/knot/dataset.hpp"
#include "untwist/numeric/form2.hpp"
#include "untwist/numeric/rational.hpp"
#include "untwist/signature/signature.hpp"

using namespace untwist;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kMismatch = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

json pl_to_json(const PLFunction& f) {
    json arr = json::array();
    for (const auto& b : f.breakpoints()) arr.push_back({b.t.fraction_str(), b.value.fraction_str()});
    return arr;
}

// Sample points r/10 plus 1/2, skipping jumps.
std::vector<std::pair<Rational, std::int64_t>> torus_samples(std::int64_t p, std::int64_t q) {
    std::vector<Rational> xs;
    for (std::int64_t r = 1; r <= 9; ++r) xs.emplace_back(r, 10);
    xs.emplace_back(1, 3);
    xs.emplace_back(2, 3);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rational, std::int64_t>> out;
    for (const auto& x : xs)
        if (auto s = torus_signature_near(p, q, x)) out.emplace_back(x, *s);
    return out;
}

int run_analyze(const std::string& data, const std::string& name, std::int64_t max_l,
                const std::string& format, bool parallel) {
    auto dataset = load_dataset_file(data);
    const KnotRecord* k = nullptr;
    try {
        k = &find_knot(dataset, name);
    } catch (const std::out_of_range&) {
        throw InputError("knot '" + name + "' not found in " + data);
    }
    Config cfg;
    cfg.max_l = max_l;
    cfg.parallel = parallel;
    auto report = analyze(*k, cfg);
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        std::cout << format_csv(report);
    else
        std::cout << format_text(report);
    return kOk;
}

int run_torus(std::int64_t p, std::int64_t q, const std::string& format) {
    require(p >= 2 && q >= 2, "torus parameters must be at least 2");
    require(gcd64(p, q) == 1, "torus parameters must be coprime");
    auto k = torus_knot(p, q);
    auto samples = torus_samples(p, q);
    if (format == "json") {
        json j = record_to_json(k);
        json pts = json::object();
        for (const auto& [x, s] : samples) pts[x.fraction_str()] = s;
        j["signature_samples"] = pts;
        j["upsilon"] = pl_to_json(*k.upsilon);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << k.name << "\n"
              << "  genus: " << k.genus << "\n"
              << "  signature: " << k.signature << "\n"
              << "  determinant: " << k.determinant << "\n"
              << "  arf: " << k.arf << "\n"
              << "  tau: " << *k.tau << "\n"
              << "  V: " << k.v_seq->str() << "\n"
              << "  nu+: " << k.v_seq->nu_plus() << "\n"
              << "  Upsilon breakpoints: " << k.upsilon->str() << "\n"
              << "  signature samples:\n";
    for (const auto& [x, s] : samples) std::cout << "    sigma_" << x << " = " << s << "\n";
    return kOk;
}

int run_lens(std::int64_t p, std::int64_t q, const std::string& format) {
    require(p >= 1 && q >= 0 && q < std::max<std::int64_t>(p, 1), "lens space needs 0 <= q < p");
    require(gcd64(p, q) == 1, "lens space needs gcd(p, q) = 1");
    auto spec = lens_spectrum(p, q);
    std::int64_t spin = p % 2 ? lens_spin_index(p, q) : -1;
    if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < spec.size(); ++i)
            arr.push_back({{"i", i}, {"d", spec.values[i].d.fraction_str()}, {"order", spec.values[i].order}});
        json j = {{"p", p}, {"q", q}, {"values", arr}};
        if (spin >= 0) j["spin"] = spin;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "L(" << p << "," << q << ")";
    if (spin >= 0) std::cout << "  spin label " << spin;
    std::cout << "\n";
    for (std::size_t i = 0; i < spec.size(); ++i) {
        std::cout << "  d(" << i << ") = " << spec.values[i].d;
        if (spec.values[i].order) std::cout << "  order " << spec.values[i].order;
        std::cout << "\n";
    }
    return kOk;
}

int run_forms(std::int64_t det, const std::string& parity, const std::string& definite, bool show_mq) {
    require(det >= 1, "determinant must be positive");
    Parity par = parity == "even" ? Parity::even : Parity::odd;
    Definiteness def = definite == "pos" ? Definiteness::positive
                     : definite == "neg" ? Definiteness::negative
                                         : Definiteness::indefinite;
    auto forms = enumerate_forms(det, par, def);
    std::cout << "det " << det << ", a " << to_string(par) << ", " << to_string(def) << ": " << forms.size()
              << " form(s)\n";
    for (const auto& f : forms) {
        std::cout << "  " << f.str() << "\n";
        if (show_mq && def == Definiteness::positive) {
            auto t = m_q(f);
            for (const auto& c : t.cosets)
                std::cout << "    m_Q(" << c.label[0] << "," << c.label[1] << ") = " << c.value << "  order "
                          << c.order << "\n";
        }
    }
    return kOk;
}

int run_table(const std::string& data, const std::string& check, std::int64_t max_l) {
    auto dataset = load_dataset_file(data);
    auto expected = load_expected_table(check);
    Config cfg;
    cfg.max_l = max_l;
    auto diff = reproduce_table(dataset, expected, cfg);
    std::cout << format_table_diff(diff);
    return diff.match() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"untwist: obstructions to unknotting by a single twist"};
    app.require_subcommand(1);

    std::string data, knot, format = "text", check, parity, definite;
    std::int64_t max_l = 16, p = 0, q = 0, det = 0;
    bool parallel = false, show_mq = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "classify every candidate twist index of one knot");
    analyze_cmd->add_option("--data", data, "dataset JSON file")->required();
    analyze_cmd->add_option("--knot", knot, "knot name")->required();
    analyze_cmd->add_option("--max-l", max_l, "largest l when no Floer bound exists")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    analyze_cmd->add_flag("--parallel", parallel, "evaluate candidates concurrently");

    auto* torus_cmd = app.add_subcommand("torus", "invariants of the torus knot T(p,q)");
    torus_cmd->add_option("p", p)->required();
    torus_cmd->add_option("q", q)->required();
    torus_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lens_cmd = app.add_subcommand("lens", "d-invariants of L(p,q)");
    lens_cmd->add_option("p", p)->required();
    lens_cmd->add_option("q", q)->required();
    lens_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* forms_cmd = app.add_subcommand("forms", "rank-two forms [[a,b],[b,a]] of given determinant");
    forms_cmd->add_option("--det", det)->required();
    forms_cmd->add_option("--parity", parity)->required()->check(CLI::IsMember({"even", "odd"}));
    forms_cmd->add_option("--definite", definite)->required()->check(CLI::IsMember({"pos", "neg", "indef"}));
    forms_cmd->add_flag("--mq", show_mq, "also print m_Q for positive definite forms");

    auto* table_cmd = app.add_subcommand("table", "reproduce the known/unknown table and diff it");
    table_cmd->add_option("--data", data)->required();
    table_cmd->add_option("--check", check, "expected table file")->required();
    table_cmd->add_option("--max-l", max_l)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze_cmd) return run_analyze(data, knot, max_l, format, parallel);
        if (*torus_cmd) return run_torus(p, q, format);
        if (*lens_cmd) return run_lens(p, q, format);
        if (*forms_cmd) return run_forms(det, parity, definite, show_mq);
        if (*table_cmd) return run_table(data, check, max_l);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DatasetError& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kInputError;
    } catch (const CalibrationError& e) {
        std::cerr << "calibration error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
