#pragma once

// Brauer groups of E x E, C x C and Y_C for the diagonal cubic
// a x^3 + b y^3 + c z^3 = 0, and the full classification report.

#include "brauerk3/cubeclass.hpp"
#include "brauerk3/hecke.hpp"
#include "brauerk3/localarith.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauerk3 {

enum class BrauerGroup { Trivial, Z2, Z3 };

/// "0", "Z/2", "Z/3".
std::string to_string(BrauerGroup g);
BrauerGroup brauer_group_from_string(const std::string& text);

/// Z/2 if D is a cube, Z/3 if 4D is a cube, 0 otherwise. Throws ZeroD.
BrauerGroup brauer_of_ExE(const Int& D);

struct CxCResult {
    BrauerGroup group = BrauerGroup::Trivial;
    LambdaChoice lambda;
    M3Certificate witness;
};

/// Z/2 iff 4abc is a cube, with the m(3) = 0 certificate for the lambda of
/// choose_lambda. Throws CubeCase if abc is a cube, NotFound if the scan
/// bound is too small.
CxCResult brauer_of_CxC(const PrimitiveTriple& t, const ScanOptions& options = {});

/// Br(Y_C)/Br_0(Y_C); equal to the C x C answer. Throws CubeCase.
BrauerGroup brauer_of_Y(const PrimitiveTriple& t);

/// D = jacobian_D(t) is a cube iff 4abc is, and 4D is a cube iff abc is.
bool cube_case_consistency(const PrimitiveTriple& t);

enum class Verdict { NoObstruction, CubeCaseDescent, NotApplicable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& text);

struct ClassificationReport {
    PrimitiveTriple triple;
    Int D;
    BrauerGroup br_ExE = BrauerGroup::Trivial;
    std::optional<BrauerGroup> br_CxC;
    std::optional<BrauerGroup> br_Y;
    /// lambda as "n/d" and its source, when abc is not a cube.
    std::optional<std::string> lambda;
    std::optional<std::uint64_t> m3_witness;
    /// Places in the order inf, 2, 3, then p | abc ascending.
    std::vector<std::pair<std::string, bool>> local_solubility;
    /// Image of the evaluation map at 2, when it was computed.
    std::optional<std::string> evaluation_image;
    Verdict obstruction = Verdict::NotApplicable;
    std::vector<std::string> notes;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ReportOptions {
    std::uint64_t bound = 100000;
    unsigned precision = 8;
    /// Proceed even if C fails to be locally soluble somewhere.
    bool assume_y_soluble = false;
    unsigned threads = 1;
};

ClassificationReport full_report(const PrimitiveTriple& t, const ReportOptions& options = {});

void to_json(nlohmann::ordered_json& j, const ClassificationReport& r);
void from_json(const nlohmann::ordered_json& j, ClassificationReport& r);

std::string render_text(const ClassificationReport& r);

}  // namespace brauerk3
