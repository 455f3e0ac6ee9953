#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "generators.hpp"
#include "p2t/formula.hpp"

using namespace p2t;

namespace {

Assignment make_assignment(std::initializer_list<bool> values) {
    Assignment a;
    a.values.assign(values);
    return a;
}

const char* kFigure2 = "p cnf 3 1\n-1 2 -3 0\n";

}  // namespace

TEST_CASE("parse_dimacs reads the single-clause instance") {
    const Formula f = parse_dimacs(kFigure2);
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == Clause{neg(1), pos(2), neg(3)});
}

TEST_CASE("parse_dimacs on the empty instance") {
    const Formula f = parse_dimacs("p cnf 0 0\n");
    CHECK(f.num_vars == 0);
    CHECK(f.clauses.empty());
}

TEST_CASE("parse_dimacs accepts comments and multi-line clauses") {
    const Formula f = parse_dimacs("c a comment\np cnf 4 2\n1 -2\n3 0\nc mid comment\n-1 4 0\n");
    CHECK(f.num_vars == 4);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == Clause{pos(1), neg(2), pos(3)});
    CHECK(f.clauses[1] == Clause{neg(1), pos(4)});
}

TEST_CASE("parse_dimacs rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"),
                         "line 2: variable 3 exceeds declared 2", ParseError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);   // missing 0
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError); // count mismatch
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);     // empty clause
}

TEST_CASE("dimacs round-trips through to_dimacs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const Formula f = testgen::random_formula(rng, 5, 6);
        CHECK(parse_dimacs(to_dimacs(f)) == f);
    }
}

TEST_CASE("is_good checks every clause for a true and a false literal") {
    const Formula f = parse_dimacs(kFigure2);
    CHECK(is_good(f, make_assignment({true, true, true})));    // literal values F,T,F
    CHECK(is_good(f, make_assignment({false, false, false})));  // literal values T,F,T

    Formula unit{1, {{pos(1)}}};
    CHECK_FALSE(is_good(unit, make_assignment({true})));
    CHECK_FALSE(is_good(unit, make_assignment({false})));

    CHECK(is_good(Formula{}, Assignment{}));  // vacuous
    CHECK_THROWS_AS(is_good(f, make_assignment({true})), std::invalid_argument);
}

TEST_CASE("duplicate and complementary literal pairs") {
    Formula dup{1, {{pos(1), pos(1)}}};
    CHECK_FALSE(is_good(dup, make_assignment({true})));
    CHECK_FALSE(is_good(dup, make_assignment({false})));
    Formula comp{1, {{pos(1), neg(1)}}};
    CHECK(is_good(comp, make_assignment({true})));
    CHECK(is_good(comp, make_assignment({false})));
}

TEST_CASE("solve_nae_bruteforce") {
    CHECK(solve_nae_bruteforce(Formula{1, {{pos(1)}}}) == std::nullopt);

    const Formula f = parse_dimacs(kFigure2);
    const auto a = solve_nae_bruteforce(f);
    REQUIRE(a.has_value());
    CHECK(is_good(f, *a));
    // Lowest assignment in counter order: all-false already works (F values
    // make the clause literals T,F,T).
    CHECK(*a == make_assignment({false, false, false}));

    const auto empty = solve_nae_bruteforce(Formula{});
    REQUIRE(empty.has_value());
    CHECK(empty->num_vars() == 0);

    Formula big;
    big.num_vars = 30;
    CHECK_THROWS_AS(solve_nae_bruteforce(big), std::invalid_argument);
}

TEST_CASE("brute force agrees with exhaustive is_good") {
    std::mt19937 rng(21);
    for (int iter = 0; iter < 30; ++iter) {
        const Formula f = testgen::random_formula(rng, 4, 5);
        const auto found = solve_nae_bruteforce(f);
        bool any = false;
        Assignment a;
        a.values.resize(f.num_vars);
        for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
            for (int i = 0; i < f.num_vars; ++i) a.values[i] = (mask >> i) & 1;
            if (is_good(f, a)) any = true;
        }
        CHECK(found.has_value() == any);
        if (found) CHECK(is_good(f, *found));
    }
}

TEST_CASE("is_good is monotone under clause deletion") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        const Formula f = testgen::random_formula(rng, 4, 5);
        Assignment a;
        a.values.resize(f.num_vars);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int i = 0; i < f.num_vars; ++i) a.values[i] = bit(rng);
        if (!is_good(f, a)) continue;
        Formula fewer = f;
        std::uniform_int_distribution<std::size_t> pick(0, fewer.clauses.size() - 1);
        fewer.clauses.erase(fewer.clauses.begin() + static_cast<long>(pick(rng)));
        CHECK(is_good(fewer, a));
    }
}

TEST_CASE("bound_occurrences applies the replace rule deterministically") {
    Formula f{4, {{pos(1), pos(2)}, {pos(1), pos(3)}, {pos(1), pos(4)}}};
    const BoundResult bound = bound_occurrences(f);
    CHECK(bound.num_original_vars == 4);
    CHECK(bound.formula.num_vars == 5);
    const Formula expected{5,
                           {{pos(1), pos(2)},
                            {pos(5), pos(3)},
                            {pos(5), pos(4)},
                            {pos(1), neg(5)}}};
    CHECK(bound.formula == expected);
}

TEST_CASE("bound_occurrences is a fixpoint at max occurrence two") {
    const Formula f{3, {{pos(1), pos(2)}, {pos(1), neg(2)}, {neg(1), pos(3)}}};
    CHECK(bound_occurrences(f).formula == f);
}

TEST_CASE("bound_occurrences output has every literal in at most two clauses") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        const Formula f = testgen::random_formula(rng, 5, 6);
        const Formula out = bound_occurrences(f).formula;
        std::map<std::pair<int, bool>, int> hosts;
        for (const Clause& c : out.clauses) {
            std::set<std::pair<int, bool>> in_clause;
            for (const Literal& l : c) in_clause.insert({l.variable, l.negated});
            for (const auto& key : in_clause) ++hosts[key];
        }
        for (const auto& [key, count] : hosts) CHECK(count <= 2);
    }
}

TEST_CASE("bound_occurrences preserves NAE-satisfiability") {
    std::mt19937 rng(51);
    for (int iter = 0; iter < 30; ++iter) {
        const Formula f = testgen::random_formula(rng, 5, 6);
        const Formula out = bound_occurrences(f).formula;
        CHECK(solve_nae_bruteforce(f).has_value() == solve_nae_bruteforce(out).has_value());
    }
}
