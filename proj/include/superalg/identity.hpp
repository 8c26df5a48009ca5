#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superalg/algebra.hpp"

namespace salg {

// Binary bracketing over leaf positions 0..r-1, stored as a node list with the
// root last. A leaf node has left = right = -1.
struct Bracketing {
    struct Node {
        int leaf = -1;
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;

    static Bracketing parse(const std::string& text); // "((1 2) 3)", positions 1-based
    std::string str() const;
    size_t leaves() const;
};

struct IdentityMonomial {
    int sign = 1;              // +1 or -1
    std::vector<int> perm;     // variable (0-based) at each leaf position
    Bracketing bracketing;
    bool koszul = false;
};

struct IdentitySpec {
    std::string name;
    int arity = 0;
    std::vector<IdentityMonomial> monomials;

    void validate() const;
};

struct IdentityReport {
    std::string spec;
    std::string algebra;
    bool pass = false;
    uint64_t tuples_checked = 0;
    std::vector<size_t> witness;        // basis indices, one per variable
    std::optional<Element> residual;
};

// Product of -1 over inversions of perm whose entries are both odd; parities
// are indexed by variable.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities);

// Line format:
//   identity NAME
//   arity R
//   SIGN (v1 .. vR) BRACKETING [koszul]
// with 1-based variables and positions; '#' starts a comment.
IdentitySpec parse_identity(const std::string& text);
std::string serialize_identity(const IdentitySpec& spec);

// Sweep every basis tuple in lexicographic order; the first nonzero residual
// is the witness.
IdentityReport check_identity(const SuperAlgebra& A, const IdentitySpec& spec);

// assoc, alt-left, alt-right, supercomm, super-jordan
const std::vector<IdentitySpec>& builtin_specs();
const IdentitySpec& builtin_spec(const std::string& name);

} // namespace salg
