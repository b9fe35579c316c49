#include "brauerk3/classify.hpp"

#include "brauerk3/error.hpp"

#include <sstream>
#include <stdexcept>

namespace brauerk3 {

namespace {

const char* const kDescentNote =
    "abc is a cube: the Brauer group results exclude this case; C has a rational point over the cube-root "
    "field and a simple infinite descent argument applies";
const char* const kAlgebraicNote = "assumption: Br_1(Y_C) = Br_0(Y_C), imported from prior work, not computed";
const char* const kConditionalNote =
    "conditional: under Skorobogatov's conjecture there are rational points on Y_C, hence Galois cubic points on C";
const char* const kSolubilityProxy = "local solubility of Y_C is not tested directly; C-level solubility is used";

std::string place_list(const std::vector<std::pair<std::string, bool>>& sol, bool value) {
    std::string out;
    for (const auto& [place, ok] : sol)
        if (ok == value) out += (out.empty() ? "" : ", ") + place;
    return out;
}

}  // namespace

std::string to_string(BrauerGroup g) {
    switch (g) {
        case BrauerGroup::Trivial: return "0";
        case BrauerGroup::Z2: return "Z/2";
        case BrauerGroup::Z3: return "Z/3";
    }
    return "?";
}

BrauerGroup brauer_group_from_string(const std::string& text) {
    if (text == "0") return BrauerGroup::Trivial;
    if (text == "Z/2") return BrauerGroup::Z2;
    if (text == "Z/3") return BrauerGroup::Z3;
    throw std::invalid_argument("unknown Brauer group tag: " + text);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NoObstruction: return "NoObstruction";
        case Verdict::CubeCaseDescent: return "CubeCaseDescent";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& text) {
    if (text == "NoObstruction") return Verdict::NoObstruction;
    if (text == "CubeCaseDescent") return Verdict::CubeCaseDescent;
    if (text == "NotApplicable") return Verdict::NotApplicable;
    throw std::invalid_argument("unknown verdict: " + text);
}

BrauerGroup brauer_of_ExE(const Int& D) {
    if (D == 0) throw Error(ErrorKind::ZeroD, "D must be nonzero");
    if (arith::is_integer_cube(D)) return BrauerGroup::Z2;
    if (arith::is_integer_cube(4 * D)) return BrauerGroup::Z3;
    return BrauerGroup::Trivial;
}

BrauerGroup brauer_of_Y(const PrimitiveTriple& t) {
    const Int abc = t.product();
    if (is_cube(Rational(abc))) throw Error(ErrorKind::CubeCase, "abc = " + abc.get_str() + " is a cube");
    return is_cube(Rational(4 * abc)) ? BrauerGroup::Z2 : BrauerGroup::Trivial;
}

CxCResult brauer_of_CxC(const PrimitiveTriple& t, const ScanOptions& options) {
    CxCResult result;
    result.group = brauer_of_Y(t);
    result.lambda = choose_lambda(t);
    result.witness = find_m3_witness(CurveModel{jacobian_D(t)}, result.lambda, options);
    return result;
}

bool cube_case_consistency(const PrimitiveTriple& t) {
    const Int abc = t.product();
    const Int D = jacobian_D(t);
    bool first = arith::is_integer_cube(D) == arith::is_integer_cube(4 * abc);
    bool second = arith::is_integer_cube(4 * D) == arith::is_integer_cube(abc);
    return first && second;
}

ClassificationReport full_report(const PrimitiveTriple& t, const ReportOptions& options) {
    ClassificationReport r;
    r.triple = t;
    r.D = jacobian_D(t);
    r.br_ExE = brauer_of_ExE(r.D);
    for (const auto& place : relevant_places(t)) {
        r.local_solubility.emplace_back(place.to_string(), diagonal_cubic_soluble(t, place));
    }

    if (is_cube(Rational(t.product()))) {
        r.obstruction = Verdict::CubeCaseDescent;
        r.notes.emplace_back(kDescentNote);
        return r;
    }

    r.br_Y = brauer_of_Y(t);
    LambdaChoice lambda = choose_lambda(t);
    r.lambda = arith::str(lambda.value()) + " (" + to_string(lambda.source) + ")";
    try {
        auto cxc = brauer_of_CxC(t, ScanOptions{options.bound, options.threads});
        r.br_CxC = cxc.group;
        r.m3_witness = cxc.witness.p;
        r.notes.push_back("3-primary part: m(3) = 0 certified at p = " + std::to_string(cxc.witness.p) +
                          ", so no 3-torsion survives");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotFound) throw;
        r.br_CxC = r.br_Y;
        r.notes.push_back("3-primary part: no m(3) witness below " + std::to_string(options.bound) +
                          "; raise the bound to certify it");
    }
    r.notes.emplace_back(kAlgebraicNote);

    const std::string failing = place_list(r.local_solubility, false);
    if (!failing.empty()) {
        if (!options.assume_y_soluble) {
            r.obstruction = Verdict::NotApplicable;
            r.notes.push_back("C(Q_v) is empty for v in {" + failing +
                              "}; the no-obstruction argument needs Y_C everywhere locally soluble");
            r.notes.emplace_back(kSolubilityProxy);
            return r;
        }
        r.notes.push_back("assumed: Y_C everywhere locally soluble although C(Q_v) is empty for v in {" + failing +
                          "}");
    }

    if (*r.br_Y == BrauerGroup::Trivial) {
        r.obstruction = Verdict::NoObstruction;
        r.notes.emplace_back(kConditionalNote);
        return r;
    }

    auto points = enumerate_E_points(-27, 2, options.precision);
    auto image = evaluation_image(points, true);
    r.evaluation_image = image.to_string();
    if (image.surjective()) {
        const auto& [i0, j0] = *image.zero_witness;
        const auto& [i1, j1] = *image.half_witness;
        r.obstruction = Verdict::NoObstruction;
        r.notes.push_back("evaluation of (x - 3, u - 3) at 2 is surjective: 0 at (" + points[i0].to_string() + ", " +
                          points[j0].to_string() + "), 1/2 at (" + points[i1].to_string() + ", " +
                          points[j1].to_string() + ")");
        r.notes.emplace_back(kConditionalNote);
    } else {
        r.obstruction = Verdict::NotApplicable;
        r.notes.push_back("evaluation map at 2 not shown surjective at precision " + std::to_string(options.precision));
    }
    return r;
}

void to_json(nlohmann::ordered_json& j, const ClassificationReport& r) {
    using nlohmann::ordered_json;
    j = ordered_json::object();
    j["triple"] = {r.triple.a.get_str(), r.triple.b.get_str(), r.triple.c.get_str()};
    j["D"] = r.D.get_str();
    j["br_ExE"] = to_string(r.br_ExE);
    j["br_CxC"] = r.br_CxC ? ordered_json(to_string(*r.br_CxC)) : ordered_json(nullptr);
    j["br_Y"] = r.br_Y ? ordered_json(to_string(*r.br_Y)) : ordered_json(nullptr);
    j["lambda"] = r.lambda ? ordered_json(*r.lambda) : ordered_json(nullptr);
    j["m3_witness"] = r.m3_witness ? ordered_json(std::to_string(*r.m3_witness)) : ordered_json(nullptr);
    ordered_json sol = ordered_json::object();
    for (const auto& [place, ok] : r.local_solubility) sol[place] = ok;
    j["local_solubility"] = sol;
    j["evaluation_image"] = r.evaluation_image ? ordered_json(*r.evaluation_image) : ordered_json(nullptr);
    j["obstruction"] = to_string(r.obstruction);
    j["notes"] = r.notes;
}

void from_json(const nlohmann::ordered_json& j, ClassificationReport& r) {
    const auto& t = j.at("triple");
    r.triple = PrimitiveTriple{Int(t.at(0).get<std::string>()), Int(t.at(1).get<std::string>()),
                               Int(t.at(2).get<std::string>())};
    r.D = Int(j.at("D").get<std::string>());
    r.br_ExE = brauer_group_from_string(j.at("br_ExE").get<std::string>());
    auto group = [&](const char* key) -> std::optional<BrauerGroup> {
        if (j.at(key).is_null()) return std::nullopt;
        return brauer_group_from_string(j.at(key).get<std::string>());
    };
    r.br_CxC = group("br_CxC");
    r.br_Y = group("br_Y");
    r.lambda = j.at("lambda").is_null() ? std::nullopt : std::optional(j.at("lambda").get<std::string>());
    r.m3_witness =
        j.at("m3_witness").is_null() ? std::nullopt : std::optional<std::uint64_t>(std::stoull(j.at("m3_witness").get<std::string>()));
    r.local_solubility.clear();
    for (const auto& [place, ok] : j.at("local_solubility").items()) r.local_solubility.emplace_back(place, ok.get<bool>());
    r.evaluation_image = j.at("evaluation_image").is_null()
                             ? std::nullopt
                             : std::optional(j.at("evaluation_image").get<std::string>());
    r.obstruction = verdict_from_string(j.at("obstruction").get<std::string>());
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

std::string render_text(const ClassificationReport& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<BrauerGroup>& g) { return g ? to_string(*g) : std::string("-"); };
    os << "curve        " << r.triple.a << "x^3 + " << r.triple.b << "y^3 + " << r.triple.c << "z^3 = 0\n";
    os << "Jacobian     y^2 = x^3 + (" << r.D << ")\n";
    os << "Br(ExE)      " << to_string(r.br_ExE) << "\n";
    os << "Br(CxC)      " << opt(r.br_CxC) << "\n";
    os << "Br(Y)        " << opt(r.br_Y) << "\n";
    if (r.lambda) os << "lambda       " << *r.lambda << "\n";
    if (r.m3_witness) os << "m(3) witness p = " << *r.m3_witness << "\n";
    os << "C soluble at";
    for (const auto& [place, ok] : r.local_solubility) os << " " << place << (ok ? ":yes" : ":no");
    os << "\n";
    if (r.evaluation_image) os << "ev at 2      " << *r.evaluation_image << "\n";
    os << "verdict      " << to_string(r.obstruction) << "\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
    return os.str();
}

}  // namespace brauerk3
