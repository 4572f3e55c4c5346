/*
   Copyright 2026 The quintic-atlas authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quintic/classifier.hpp"
#include "quintic/invariants.hpp"
#include "quintic/oracle.hpp"
#include "quintic/parse.hpp"
#include "quintic/poly.hpp"
#include "quintic/sturm.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace quintic;

constexpr const char* kSchema = "quintic-atlas/1";
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct InputOptions {
    std::string coeffs;
    std::string poly;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    auto* a = cmd->add_option("--coeffs", in.coeffs, "Quintic coefficients \"p,q,r,s,t\" (rationals)");
    auto* b = cmd->add_option("--poly", in.poly, "Polynomial expression, e.g. \"x^5 - 6x^4 + 11x^3 - 6x^2\"");
    a->excludes(b);
    b->excludes(a);
}

Rational parse_rational_or_throw(std::string text) {
    while (!text.empty() && text.front() == ' ') text.erase(text.begin());
    while (!text.empty() && text.back() == ' ') text.pop_back();
    const auto v = Rational::from_string(text);
    if (!v) throw domain_error("not a rational number: \"" + text + "\"");
    return *v;
}

Poly poly_from_input(const InputOptions& in) {
    if (!in.coeffs.empty()) {
        std::vector<Rational> parts;
        std::size_t start = 0;
        while (true) {
            const auto comma = in.coeffs.find(',', start);
            parts.push_back(parse_rational_or_throw(
                in.coeffs.substr(start, comma == std::string::npos ? comma : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts.size() != 5)
            throw domain_error("--coeffs needs exactly 5 comma-separated values, got " +
                               std::to_string(parts.size()));
        return Poly{parts[4], parts[3], parts[2], parts[1], parts[0], 1};
    }
    if (!in.poly.empty()) return parse_polynomial(in.poly);
    throw domain_error("provide either --coeffs or --poly");
}

// Monic quintic or a user error; non-monic degree-5 input is divided through.
QuinticCoeffs quintic_from_input(const InputOptions& in) {
    Poly f = poly_from_input(in);
    if (f.degree() != 5)
        throw domain_error("expected a degree-5 polynomial, got degree " +
                           std::to_string(f.degree()));
    f = f.monic();
    return {f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
}

json coeffs_json(const QuinticCoeffs& c) {
    return json{{"p", c.p.str()}, {"q", c.q.str()}, {"r", c.r.str()},
                {"s", c.s.str()}, {"t", c.t.str()}};
}

json rational_or_null(const std::optional<Rational>& v) {
    return v ? json(v->str()) : json(nullptr);
}

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_classify(const InputOptions& in, bool as_json, bool witness) {
    const QuinticCoeffs c = quintic_from_input(in);
    const QuinticInvariants v = compute_invariants(c);
    const RealConfiguration real = classify_real(v);
    const ComplexMultiplicity complex = classify_complex(v);

    json doc{{"schema", kSchema}, {"command", "classify"}, {"coefficients", coeffs_json(c)}};
    doc["leaf"] = std::string(real.id());
    doc["description"] = std::string(real.description());
    doc["ordering"] = real.ordering();
    doc["complex"] = json{{"multiplicities", complex.multiplicities()},
                          {"description", std::string(complex.description())}};
    std::string text;
    text += "leaf: " + std::string(real.id()) + "\n";
    text += "description: " + std::string(real.description()) + "\n";
    text += "ordering:";
    for (int m : real.ordering()) text += " " + std::to_string(m);
    text += "\ncomplex: " + std::string(complex.description()) + "\n";
    if (real.leaf == RealLeaf::r3) {
        json np = json::array();
        text += "nonpositive:";
        for (const auto name : leaf3_nonpositive_factors(v)) {
            np.push_back(std::string(name));
            text += " " + std::string(name);
        }
        doc["nonpositive"] = np;
        text += "\n";
    }

    if (witness) {
        // leaves whose multiple roots are absent or complex have nothing to recover
        const bool has_multiple_real =
            real.leaf != RealLeaf::r1 && real.leaf != RealLeaf::r2 &&
            real.leaf != RealLeaf::r3 && real.leaf != RealLeaf::r7;
        const auto roots =
            has_multiple_real ? witness_roots(c, real) : std::vector<WitnessRoot>{};
        json wr = json::array();
        text += has_multiple_real ? "witness roots:\n" : "witness roots: none (no multiple real root)\n";
        for (const auto& w : roots) {
            if (w.is_exact()) {
                wr.push_back(json{{"root", w.exact().str()}, {"multiplicity", w.multiplicity}});
                text += "  root " + w.exact().str() + " multiplicity " +
                        std::to_string(w.multiplicity) + "\n";
            } else {
                wr.push_back(json{{"interval", {w.interval().lo.str(), w.interval().hi.str()}},
                                  {"multiplicity", w.multiplicity}});
                text += "  root in (" + w.interval().lo.str() + ", " + w.interval().hi.str() +
                        ") multiplicity " + std::to_string(w.multiplicity) + "\n";
            }
        }
        doc["witness"] = wr;
    }
    emit(doc, as_json, text);
    return 0;
}

int run_invariants(const InputOptions& in, bool as_json) {
    const QuinticCoeffs c = quintic_from_input(in);
    const QuinticInvariants v = compute_invariants(c);
    json inv;
    inv["D"] = v.D.str();
    inv["L3"] = v.L3.str();
    inv["L2"] = v.L2.str();
    inv["L1"] = v.L1.str();
    inv["D2"] = v.D2.str();
    inv["M1"] = v.M1.str();
    inv["D3"] = v.D3.str();
    inv["C0"] = v.C0.str();
    inv["C1"] = v.C1.str();
    inv["C21"] = v.C21.str();
    inv["C20"] = v.C20.str();
    inv["C3"] = v.C3.str();
    inv["D22"] = v.D22.str();
    inv["C4"] = rational_or_null(v.C4);
    inv["C5"] = rational_or_null(v.C5);
    inv["F1"] = rational_or_null(v.F1);
    inv["F2"] = rational_or_null(v.F2);
    inv["F3"] = rational_or_null(v.F3);
    inv["F4"] = rational_or_null(v.F4);
    inv["F5"] = rational_or_null(v.F5);
    inv["F6"] = rational_or_null(v.F6);
    inv["F7"] = rational_or_null(v.F7);

    json doc{{"schema", kSchema}, {"command", "invariants"}, {"coefficients", coeffs_json(c)},
             {"invariants", inv}};
    std::string text;
    for (const auto& [key, value] : inv.items())
        text += key + ": " + (value.is_null() ? "null" : value.get<std::string>()) + "\n";
    emit(doc, as_json, text);
    return 0;
}

int run_sturm(const InputOptions& in, bool as_json) {
    const Poly f = poly_from_input(in);
    if (f.degree() < 1) throw domain_error("sturm needs a polynomial of degree at least 1");
    const SturmChain chain = sturm_chain(f);
    json members = json::array();
    std::string text;
    for (const Poly& g : chain.members) {
        members.push_back(g.str());
        text += g.str() + "\n";
    }
    emit(json{{"schema", kSchema}, {"command", "sturm"}, {"chain", members}}, as_json, text);
    return 0;
}

int run_isolate(const InputOptions& in, bool as_json) {
    const Poly f = poly_from_input(in);
    if (f.degree() < 1) throw domain_error("isolate needs a polynomial of degree at least 1");
    json list = json::array();
    std::string text;
    for (const IsolatingInterval& iv : isolate_real_roots(f)) {
        list.push_back(json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()},
                            {"multiplicity", iv.multiplicity}});
        if (iv.is_point())
            text += "root " + iv.lo.str() + " multiplicity " + std::to_string(iv.multiplicity) +
                    "\n";
        else
            text += "root in (" + iv.lo.str() + ", " + iv.hi.str() + ") multiplicity " +
                    std::to_string(iv.multiplicity) + "\n";
    }
    emit(json{{"schema", kSchema}, {"command", "isolate"}, {"intervals", list}}, as_json, text);
    return 0;
}

int run_verify(const InputOptions& in, bool as_json) {
    const QuinticCoeffs c = quintic_from_input(in);
    const IdentityReport report = verify_identities(c);
    json list = json::array();
    std::string text;
    for (const auto& e : report.entries) {
        list.push_back(json{{"name", e.name}, {"applicable", e.applicable}, {"passed", e.passed}});
        text += e.name + ": " + (!e.applicable ? "n/a" : e.passed ? "pass" : "FAIL") + "\n";
    }
    emit(json{{"schema", kSchema}, {"command", "verify-identities"},
              {"coefficients", coeffs_json(c)}, {"identities", list}},
         as_json, text);
    return report.all_passed() ? 0 : kExitInternal;
}

int run_fuzz(bool as_json, long trials, std::uint64_t seed, const std::string& mode, long bound,
             const std::string& report_path) {
    CrossCheckOptions options;
    options.trials = trials;
    options.seed = seed;
    options.bound = bound;
    if (mode == "leaves")
        options.mode = FuzzMode::leaves;
    else if (mode == "random")
        options.mode = FuzzMode::random;
    else
        throw domain_error("--mode must be \"leaves\" or \"random\"");

    std::ofstream report_file;
    std::ostream* log = nullptr;
    if (!report_path.empty()) {
        report_file.open(report_path);
        if (!report_file) throw domain_error("cannot open report file " + report_path);
        log = &report_file;
    }
    const CrossCheckReport report = cross_check(options, log);

    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(json{{"coefficients", coeffs_json(f.coeffs)},
                                {"expected", f.expected}, {"got", f.got}});
    json doc{{"schema", kSchema}, {"command", "fuzz"}, {"trials", report.trials},
             {"agreements", report.agreements}, {"failures", failures},
             {"elapsed_seconds", report.elapsed.count()}};
    std::string text = "trials: " + std::to_string(report.trials) + "\n" +
                       "agreements: " + std::to_string(report.agreements) + "\n" +
                       "failures: " + std::to_string(report.failures.size()) + "\n";
    for (const auto& f : report.failures)
        text += "  " + f.coeffs.p.str() + "," + f.coeffs.q.str() + "," + f.coeffs.r.str() + "," +
                f.coeffs.s.str() + "," + f.coeffs.t.str() + " expected=" + f.expected +
                " got=" + f.got + "\n";
    emit(doc, as_json, text);
    return report.clean() ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of real monic quintics by root multiplicity and order"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    InputOptions in;
    bool witness = false;
    auto* classify = app.add_subcommand("classify", "Real and complex root configuration");
    add_input_flags(classify, in);
    classify->add_flag("--witness", witness, "Also recover the multiple roots");

    auto* invariants = app.add_subcommand("invariants", "All closed-form invariant values");
    add_input_flags(invariants, in);

    auto* sturm = app.add_subcommand("sturm", "Print the Sturm chain");
    add_input_flags(sturm, in);

    auto* isolate = app.add_subcommand("isolate", "Isolating intervals for the real roots");
    add_input_flags(isolate, in);

    auto* verify = app.add_subcommand("verify-identities",
                                      "Check the chain/table identities at this point");
    add_input_flags(verify, in);

    auto* fuzz = app.add_subcommand("fuzz", "Cross-check the classifier against the oracle");
    long trials = 1000;
    std::uint64_t seed = 1;
    std::string mode = "leaves";
    long bound = 10;
    std::string report_path;
    fuzz->add_option("--trials", trials, "Number of trials");
    fuzz->add_option("--seed", seed, "Random seed");
    fuzz->add_option("--mode", mode, "Generator: leaves or random")
        ->check(CLI::IsMember({"leaves", "random"}));
    fuzz->add_option("--bound", bound, "Coefficient bound for random mode");
    fuzz->add_option("--report", report_path, "Write one line per trial to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUser;
    }

    const bool as_json = format == "json";
    try {
        if (classify->parsed()) return run_classify(in, as_json, witness);
        if (invariants->parsed()) return run_invariants(in, as_json);
        if (sturm->parsed()) return run_sturm(in, as_json);
        if (isolate->parsed()) return run_isolate(in, as_json);
        if (verify->parsed()) return run_verify(in, as_json);
        if (fuzz->parsed()) return run_fuzz(as_json, trials, seed, mode, bound, report_path);
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    }
    return kExitUser;
}
