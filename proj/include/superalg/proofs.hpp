#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superalg/algebra.hpp"
#include "superalg/catalog.hpp"

namespace salg::proofs {

class RegistryError : public Error {
public:
    RegistryError(const std::string& msg, size_t line) : Error("line " + std::to_string(line) + ": " + msg), line(line)
    {
    }
    size_t line;
};

// Prefix expression. Operators:
//   (* X Y ...)  product, folded to the left; a scalar operand scales instead
//   (o X Y)      XY + YX
//   (+ X ...)    sum, (- X Y ...) difference, (- X) negation
//   (even X), (odd X)
// Leaves are [SCALAR] atoms, defined names and basis names. Scalars meeting
// elements in a sum stand for multiples of the unit.
struct Expr {
    enum Kind { name, scalar, op };
    Kind kind = name;
    std::string text; // name, scalar text, or operator
    std::vector<Expr> args;

    std::string str() const;
};

Expr parse_expr(const std::string& text);

struct Relation {
    std::string label;
    bool member = false;      // support check instead of an equation
    Expr lhs, rhs;            // member: lhs is the element, rhs unused
    std::vector<Expr> span;   // member: allowed span
    std::string text;         // as written in the registry
    size_t line = 0;
};

struct Emendation {
    std::string label;
    Expr lhs, rhs;
    std::string text, note;
};

struct Instance {
    std::string label;
    catalog::CatalogKey key;
    size_t matrix = 0;
    std::vector<std::string> symbols;
    std::vector<std::pair<std::string, std::string>> subst;
    std::vector<std::string> nonzero;
    std::vector<std::pair<std::string, Expr>> defs;
    std::vector<Relation> relations;
    std::vector<Emendation> emendations;
};

struct ProofCase {
    std::string id;
    std::vector<std::string> fields;
    std::vector<std::string> notes;
    std::vector<Instance> instances;

    size_t identity_count() const;
};

ProofCase parse_case(const std::string& text);
// The shipped registry, in case id order.
const std::vector<ProofCase>& registry();
const ProofCase& find_case(const std::string& id);

struct CaseSummary {
    std::string id;
    size_t identities = 0;
    std::string note;
};
std::vector<CaseSummary> list_cases();

// "gf2", "gf3", "gf5" or "q"
uint32_t field_characteristic(const std::string& field);

enum class Status { verified, nonzero_residual };
std::string to_string(Status s);

struct Candidate {
    std::string source; // "registry" or "refit"
    std::string text;
    std::string note;
    std::string residual;
    bool zero = false;
};

struct IdentityRecord {
    std::string instance;
    std::string label;
    std::string kind; // "identity" or "member"
    std::string text;
    Status status = Status::verified;
    std::string residual; // Element text, "0" when verified
    std::vector<Candidate> candidates;
};

struct CaseReport {
    std::string id;
    std::string field;
    std::vector<IdentityRecord> records;
    std::vector<std::string> emendations_applied; // labels whose candidates were evaluated
    double seconds = 0;

    bool all_verified() const;
};

CaseReport verify_case(const ProofCase& c, const std::string& field);
CaseReport verify_case(const std::string& id, const std::string& field);

// The field a case runs in when `field` is incompatible with it.
std::string field_for(const ProofCase& c, const std::string& field);

struct Discrepancy {
    std::string case_id, instance, label, text, residual;
    std::vector<Candidate> candidates;
};
std::vector<Discrepancy> discrepancies(const std::vector<CaseReport>& reports);
// Every case, in `field` where compatible and in its own field otherwise.
std::vector<Discrepancy> discrepancy_report(const std::string& field);

// Numeric re-evaluation of one verified relation at random points over
// GF(p); counts points where it does not vanish.
struct SpecializationCheck {
    uint32_t p = 0;
    size_t trials = 0, failures = 0;
};
SpecializationCheck check_specializations(const ProofCase& c, const std::string& field, size_t instance,
                                          size_t relation, size_t trials, uint64_t seed);

// Expressions after inlining definitions, with substituted symbols replaced.
// Used to check that no localized symbol survives.
std::vector<Expr> expanded_relations(const ProofCase& c, size_t instance);

} // namespace salg::proofs
