#include "p2t/formula.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

namespace p2t {

bool Formula::has_unit_clause() const {
    return std::any_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.size() == 1; });
}

namespace {

bool parse_int(const std::string& token, long& out) {
    try {
        std::size_t pos = 0;
        out = std::stol(token, &pos);
        return pos == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long declared_vars = -1, declared_clauses = -1;
    int header_line = 0;

    // Header, preceded only by comments and blank lines.
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c') continue;
        if (first != "p") throw ParseError(lineno, "expected 'p cnf <vars> <clauses>' header");
        std::string fmt;
        if (!(ls >> fmt) || fmt != "cnf")
            throw ParseError(lineno, "malformed header: format must be 'cnf'");
        std::string nv, nc, extra;
        if (!(ls >> nv >> nc) || (ls >> extra))
            throw ParseError(lineno, "malformed header: expected exactly two counts");
        if (!parse_int(nv, declared_vars) || !parse_int(nc, declared_clauses) ||
            declared_vars < 0 || declared_clauses < 0)
            throw ParseError(lineno, "malformed header: counts must be nonnegative integers");
        header_line = lineno;
        break;
    }
    if (declared_vars < 0) throw ParseError(lineno, "missing 'p cnf' header");

    Formula f;
    f.num_vars = static_cast<int>(declared_vars);

    Clause current;
    bool in_clause = false;
    int clause_start_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string token;
        if (ls >> token) {
            if (token[0] == 'c' && !in_clause) continue;
            ls.seekg(0);
        } else {
            continue;
        }
        while (ls >> token) {
            long value;
            if (!parse_int(token, value))
                throw ParseError(lineno, "expected an integer literal, got '" + token + "'");
            if (value == 0) {
                if (current.empty())
                    throw ParseError(lineno, "empty clause");
                f.clauses.push_back(current);
                current.clear();
                in_clause = false;
                continue;
            }
            long var = value < 0 ? -value : value;
            if (var > declared_vars)
                throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared " +
                                             std::to_string(declared_vars));
            if (!in_clause) {
                in_clause = true;
                clause_start_line = lineno;
            }
            current.push_back({static_cast<int>(var), value < 0});
        }
    }
    if (in_clause)
        throw ParseError(clause_start_line, "clause missing terminating 0");
    if (static_cast<long>(f.clauses.size()) != declared_clauses)
        throw ParseError(header_line, "clause count mismatch: declared " +
                                          std::to_string(declared_clauses) + ", found " +
                                          std::to_string(f.clauses.size()));
    return f;
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string to_dimacs(const Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.negated ? -l.variable : l.variable) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool is_good(const Formula& f, const Assignment& a) {
    if (a.num_vars() != f.num_vars)
        throw std::invalid_argument("assignment covers " + std::to_string(a.num_vars()) +
                                    " variables, formula has " + std::to_string(f.num_vars));
    for (const Clause& c : f.clauses) {
        bool any_true = false, any_false = false;
        for (const Literal& l : c) {
            if (a.value(l.variable) != l.negated)
                any_true = true;
            else
                any_false = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

std::optional<Assignment> solve_nae_bruteforce(const Formula& f, int var_cap) {
    if (f.num_vars > var_cap)
        throw std::invalid_argument("formula has " + std::to_string(f.num_vars) +
                                    " variables, brute-force cap is " + std::to_string(var_cap) +
                                    " (raise with --nae-var-cap)");
    const int n = f.num_vars;
    Assignment a;
    a.values.resize(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i) a.values[i] = (mask >> i) & 1;
        if (is_good(f, a)) return a;
    }
    return std::nullopt;
}

namespace {

// Key orders literals: variable ascending, positive before negative.
using LiteralKey = std::pair<int, bool>;

// Distinct host clause indices per literal, in clause order.
std::map<LiteralKey, std::vector<int>> host_clauses(const Formula& f) {
    std::map<LiteralKey, std::vector<int>> hosts;
    for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
        for (const Literal& l : f.clauses[j]) {
            auto& list = hosts[{l.variable, l.negated}];
            if (list.empty() || list.back() != j) list.push_back(j);
        }
    }
    return hosts;
}

}  // namespace

BoundResult bound_occurrences(const Formula& f) {
    BoundResult result{f, f.num_vars};
    Formula& out = result.formula;
    for (;;) {
        auto hosts = host_clauses(out);
        const std::pair<const LiteralKey, std::vector<int>>* pick = nullptr;
        for (const auto& entry : hosts) {
            if (entry.second.size() >= 3) {
                pick = &entry;
                break;
            }
        }
        if (!pick) break;

        const Literal l{pick->first.first, pick->first.second};
        const int z = ++out.num_vars;
        // Keep l in the first host; substitute z in the second and third.
        for (int h = 1; h <= 2; ++h) {
            Clause& c = out.clauses[pick->second[h]];
            bool replaced = false;
            for (std::size_t i = 0; i < c.size();) {
                if (c[i] == l) {
                    if (!replaced) {
                        c[i] = pos(z);
                        replaced = true;
                        ++i;
                    } else {
                        c.erase(c.begin() + static_cast<long>(i));
                    }
                } else {
                    ++i;
                }
            }
        }
        out.clauses.push_back({l, neg(z)});
    }
    return result;
}

}  // namespace p2t
