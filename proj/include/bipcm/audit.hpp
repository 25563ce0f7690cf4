#pragma once

#include "bipcm/colouring.hpp"
#include "bipcm/matching.hpp"

#include <boost/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace bipcm {

using Rational = boost::rational<long long>;

enum class AuditErrorKind { NotComplete, ConnectedMatchingPresent, SidesTooSmall };

// Audits assume a complete colouring with no monochromatic connected
// (n+1)-matching and sides of size >= kn+1. Violations are reported as
// errors, never as failed audits: a missing precondition says nothing
// about the audited statements.
struct AuditPreconditionError : std::runtime_error {
    AuditPreconditionError(AuditErrorKind kind_, const std::string& message, int colour_ = 0,
                           std::vector<std::pair<int, int>> witness_ = {})
        : std::runtime_error(message), kind(kind_), colour(colour_), witness(std::move(witness_)) {}

    AuditErrorKind kind;
    int colour;                                  // colour of the witness matching, if any
    std::vector<std::pair<int, int>> witness;    // connected (n+1)-matching, if any
};

// Cover membership ledger for one component under the canonical cover.
struct ComponentStats {
    int colour = 0;
    int cover_x = 0;   // |tau meet X|
    int cover_y = 0;   // |tau meet Y|
    int rest_x = 0;    // |(V meet X) \ tau|
    int rest_y = 0;    // |(V meet Y) \ tau|
    int somewhat = 0;  // somewhat-special vertices of the component's colour
    CoverCertificate certificate;
};

struct VertexAudit {
    std::vector<int> cover_of;  // indices into SpecialReport::comps
    bool special = false;
    int special_colour = 0;  // 0 unless special
    bool somewhat_special = false;
};

struct SpecialReport {
    int n = 0;
    std::vector<ComponentStats> comps;  // all colours, colour-major then component order
    std::vector<VertexAudit> x_vertices, y_vertices;
    long long special_count = 0;   // vertices lying in exactly one canonical cover
    long long somewhat_total = 0;  // sum of per-component somewhat counts
};

struct CheckResult {
    bool pass = true;
    std::vector<std::string> violations;
};

struct CountAudit {
    long long special_count = 0;
    Rational rhs{0};
    Rational margin{0};  // special_count - rhs
    bool pass = false;
};

SpecialReport build_special_report(const Colouring& col, int n);

// Every vertex with >= n+1 edges of a colour lies in the canonical cover of
// its component of that colour.
CheckResult check_high_degree_claim(const Colouring& col, int n);
CheckResult check_high_degree_claim(const Colouring& col, const SpecialReport& rep);

// Every special vertex of colour c has c-degree >= (opposite side size) - (k-1)n.
CheckResult check_special_degree(const Colouring& col, int n);
CheckResult check_special_degree(const Colouring& col, const SpecialReport& rep);

// When a colour has two or more special components, all its special
// vertices lie in one side of the bipartition.
CheckResult check_special_sides(const Colouring& col, int n);
CheckResult check_special_sides(const Colouring& col, const SpecialReport& rep);

// Counting inequality: s >= NM/n - (N+M)(k-2) + T(min(N,M)/n - k),
// evaluated in exact rationals.
CountAudit audit_special_count(const Colouring& col, int n);
CountAudit audit_special_count(const Colouring& col, const SpecialReport& rep);

// Line-oriented report with stable field order, consumed by the CLI.
std::string serialize_report(const Colouring& col, const SpecialReport& rep,
                             const CountAudit& count);

}  // namespace bipcm
