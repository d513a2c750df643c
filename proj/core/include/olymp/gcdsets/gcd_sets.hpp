#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <vector>

namespace olymp::gcdsets {

using Element = long long;

/**
 * A finite set of distinct positive integers, stored sorted ascending.
 *
 * The property of interest: for every s in the set and every positive
 * divisor d of s there is EXACTLY ONE member x with gcd(s, x) == d (x == s
 * is allowed, and covers d == s).  Equivalently, x |-> gcd(s, x) is a
 * bijection from the set onto the divisors of s, for every member s.
 */
struct GcdSet {
    std::vector<Element> elements;  // sorted ascending, distinct, all >= 1

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(Element e) const;
};

/// Sorts, rejects duplicates and non-positive entries.  Empty sets are
/// permitted (the property then holds vacuously).
GcdSet make_set(std::vector<Element> elements);

/// One failure of the exactly-one condition: divisor `d` of member `s` is
/// attained as gcd(s, x) by `count` != 1 members x.
struct Violation {
    Element s = 0;
    Element d = 0;
    int count = 0;

    bool operator==(const Violation&) const = default;
};

struct PropertyReport {
    bool holds = false;
    std::vector<Violation> violations;  // ordered by (s, d) ascending
};

PropertyReport verify_property(const GcdSet& set);

/**
 * Builds the canonical family of satisfying sets of size 2^k: given k
 * disjoint prime pairs (p[i], q[i]), the set of all products that pick one
 * prime from each pair.  With k == 0 the result is {1}.
 *
 * Throws std::invalid_argument if the lists have mismatched length, any
 * entry is not prime, the 2k primes are not pairwise distinct, or a product
 * overflows the element type.
 */
GcdSet construct(int k, const std::vector<Element>& p, const std::vector<Element>& q);

/// Necessary structural facts about any nonempty satisfying set.
struct StructuralReport {
    bool divisor_count_matches = false;  // every member has exactly |S| divisors
    bool all_squarefree = false;
    bool uniform_prime_count = false;  // all members have the same number of prime factors
    int prime_count = 0;               // that common count (when uniform), else -1
    bool size_power_of_two = false;

    bool all_hold() const {
        return divisor_count_matches && all_squarefree && uniform_prime_count &&
               size_power_of_two;
    }
};

StructuralReport structural_checks(const GcdSet& set);

enum class PruneMode {
    kDivisorCount,  // candidates for size m restricted to elements with m divisors
    kNone,          // every element up to the bound is a candidate
};

struct SizeWitness {
    int size = 0;
    GcdSet witness;  // lexicographically first satisfying set of that size
};

struct SearchReport {
    Element max_element = 0;
    int max_size = 0;
    PruneMode mode = PruneMode::kDivisorCount;
    std::vector<SizeWitness> achievable;  // ascending by size
    std::uint64_t nodes_explored = 0;

    std::vector<int> sizes() const;
    bool size_achievable(int m) const;
};

/**
 * Exhaustive backtracking search for satisfying sets of each size
 * 1..max_size with all elements <= max_element.  Partial sets are abandoned
 * as soon as two members share a gcd with some member (no superset can
 * repair that), and in kDivisorCount mode candidates for size m are
 * pre-filtered to elements with exactly m divisors, which every member of a
 * satisfying m-set must have.  The witness recorded per achievable size is
 * the lexicographically smallest one.
 */
SearchReport search_sizes(Element max_element, int max_size,
                          PruneMode mode = PruneMode::kDivisorCount);

// ---- small number-theory helpers shared by the checks -------------------

bool is_prime(Element n);
int divisor_count(Element n);
bool squarefree(Element n);
int distinct_prime_count(Element n);
std::vector<Element> divisors_of(Element n);  // ascending

// ---- serialization: {"elements": [ ... ]} --------------------------------

nlohmann::json set_to_json(const GcdSet& set);
GcdSet set_from_json(const nlohmann::json& j);

}  // namespace olymp::gcdsets
