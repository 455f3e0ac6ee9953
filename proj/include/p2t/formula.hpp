#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2t {

// A literal over a 1-based variable index.
struct Literal {
    int variable = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int v) { return {v, false}; }
inline Literal neg(int v) { return {v, true}; }

using Clause = std::vector<Literal>;

// A NAE-CNF instance. Clause order and within-clause literal order are
// significant: the reduction keys gadget positions off them.
struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    bool has_unit_clause() const;
    friend bool operator==(const Formula&, const Formula&) = default;
};

// Total truth assignment; values[i-1] is the value of x_i.
struct Assignment {
    std::vector<bool> values;

    bool value(int variable) const { return values.at(variable - 1); }
    int num_vars() const { return static_cast<int>(values.size()); }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);
std::string to_dimacs(const Formula& f);

// True iff every clause contains at least one true and one false literal.
// Throws std::invalid_argument if the assignment is not total over f.
bool is_good(const Formula& f, const Assignment& a);

// Exhaustive search over all 2^n assignments, enumerated as a binary
// counter with x1 least significant and false before true. Returns the
// first good assignment, or nullopt if none exists.
// Throws std::invalid_argument if f.num_vars exceeds var_cap.
std::optional<Assignment> solve_nae_bruteforce(const Formula& f, int var_cap = 24);

struct BoundResult {
    Formula formula;
    // Original variables keep their indices; fresh ones are appended after.
    int num_original_vars = 0;
};

// Rewrite so that every literal occurs in at most two clauses, preserving
// NAE-satisfiability. Deterministic: repeatedly picks the lowest-indexed
// literal (positive before negative) hosted by >= 3 clauses, keeps it in the
// first host clause, substitutes a fresh variable z in the second and third,
// and appends the clause (l v ~z).
BoundResult bound_occurrences(const Formula& f);

}  // namespace p2t
