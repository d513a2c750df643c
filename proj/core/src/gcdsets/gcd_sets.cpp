#include <olymp/gcdsets/gcd_sets.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace olymp::gcdsets {

bool GcdSet::contains(Element e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

GcdSet make_set(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1) {
            throw std::invalid_argument("make_set: elements must be positive, got " +
                                        std::to_string(elements[i]));
        }
        if (i > 0 && elements[i] == elements[i - 1]) {
            throw std::invalid_argument("make_set: duplicate element " +
                                        std::to_string(elements[i]));
        }
    }
    return GcdSet{std::move(elements)};
}

bool is_prime(Element n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Element d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

// (prime, multiplicity) pairs, ascending by prime.
std::vector<std::pair<Element, int>> factorize(Element n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Element, int>> factors;
    for (Element d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int mult = 0;
        while (n % d == 0) {
            n /= d;
            ++mult;
        }
        factors.emplace_back(d, mult);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

}  // namespace

int divisor_count(Element n) {
    int count = 1;
    for (const auto& [p, mult] : factorize(n)) {
        (void)p;
        count *= mult + 1;
    }
    return count;
}

bool squarefree(Element n) {
    for (const auto& [p, mult] : factorize(n)) {
        (void)p;
        if (mult > 1) return false;
    }
    return true;
}

int distinct_prime_count(Element n) {
    return static_cast<int>(factorize(n).size());
}

std::vector<Element> divisors_of(Element n) {
    std::vector<Element> divs{1};
    for (const auto& [p, mult] : factorize(n)) {
        const std::size_t base = divs.size();
        Element power = 1;
        for (int e = 1; e <= mult; ++e) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

PropertyReport verify_property(const GcdSet& set) {
    PropertyReport report;
    report.holds = true;
    for (Element s : set.elements) {
        // gcd(s, x) always divides s, so tallying by gcd covers every member.
        std::map<Element, int> hits;
        for (Element d : divisors_of(s)) hits.emplace(d, 0);
        for (Element x : set.elements) ++hits.at(std::gcd(s, x));
        for (const auto& [d, count] : hits) {
            if (count != 1) {
                report.holds = false;
                report.violations.push_back(Violation{s, d, count});
            }
        }
    }
    return report;
}

GcdSet construct(int k, const std::vector<Element>& p, const std::vector<Element>& q) {
    if (k < 0) throw std::invalid_argument("construct: k must be nonnegative");
    if (static_cast<int>(p.size()) != k || static_cast<int>(q.size()) != k) {
        throw std::invalid_argument("construct: expected " + std::to_string(k) +
                                    " primes in each list");
    }
    std::vector<Element> all;
    all.reserve(2 * static_cast<std::size_t>(k));
    for (const auto* list : {&p, &q}) {
        for (Element prime : *list) {
            if (!is_prime(prime)) {
                throw std::invalid_argument("construct: " + std::to_string(prime) +
                                            " is not prime");
            }
            all.push_back(prime);
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("construct: the 2k primes must be pairwise distinct");
    }

    std::vector<Element> elements;
    elements.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Element product = 1;
        for (int i = 0; i < k; ++i) {
            const Element factor =
                (mask >> i & 1) ? q[static_cast<std::size_t>(i)] : p[static_cast<std::size_t>(i)];
            if (__builtin_mul_overflow(product, factor, &product)) {
                throw std::invalid_argument("construct: product overflows the element type");
            }
        }
        elements.push_back(product);
    }
    return make_set(std::move(elements));
}

StructuralReport structural_checks(const GcdSet& set) {
    StructuralReport report;
    if (set.elements.empty()) {
        report.prime_count = -1;
        return report;
    }
    report.divisor_count_matches = true;
    report.all_squarefree = true;
    report.uniform_prime_count = true;
    report.prime_count = distinct_prime_count(set.elements.front());
    for (Element s : set.elements) {
        if (divisor_count(s) != set.size()) report.divisor_count_matches = false;
        if (!squarefree(s)) report.all_squarefree = false;
        if (distinct_prime_count(s) != report.prime_count) report.uniform_prime_count = false;
    }
    if (!report.uniform_prime_count) report.prime_count = -1;
    const auto size = static_cast<unsigned long long>(set.size());
    report.size_power_of_two = (size & (size - 1)) == 0;  // size >= 1 here
    return report;
}

std::vector<int> SearchReport::sizes() const {
    std::vector<int> out;
    out.reserve(achievable.size());
    for (const auto& w : achievable) out.push_back(w.size);
    return out;
}

bool SearchReport::size_achievable(int m) const {
    return std::any_of(achievable.begin(), achievable.end(),
                       [m](const SizeWitness& w) { return w.size == m; });
}

namespace {

struct SearchContext {
    const std::vector<Element>* candidates = nullptr;
    int target = 0;
    std::uint64_t* nodes = nullptr;
};

// A partial set in which two members already share a gcd with some member
// can never be completed: the duplicate survives in every superset.
bool extension_consistent(const std::vector<Element>& chosen, Element next) {
    for (Element s : chosen) {
        const Element g = std::gcd(s, next);
        if (g == s) return false;  // duplicates gcd(s, s) = s
        for (Element x : chosen) {
            if (x != s && std::gcd(s, x) == g) return false;
        }
    }
    // From next's own perspective: gcd(next, s) must be distinct across s.
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            if (std::gcd(next, chosen[i]) == std::gcd(next, chosen[j])) return false;
        }
    }
    return true;
}

bool backtrack(const SearchContext& ctx, std::size_t from, std::vector<Element>& chosen) {
    if (static_cast<int>(chosen.size()) == ctx.target) {
        return verify_property(GcdSet{chosen}).holds;
    }
    for (std::size_t i = from; i < ctx.candidates->size(); ++i) {
        const Element next = (*ctx.candidates)[i];
        ++*ctx.nodes;
        if (!extension_consistent(chosen, next)) continue;
        chosen.push_back(next);
        if (backtrack(ctx, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SearchReport search_sizes(Element max_element, int max_size, PruneMode mode) {
    if (max_element < 1) throw std::invalid_argument("search_sizes: max_element must be >= 1");
    if (max_size < 1) throw std::invalid_argument("search_sizes: max_size must be >= 1");

    // Divisor counts for 1..max_element by sieve.
    std::vector<int> dcount(static_cast<std::size_t>(max_element) + 1, 0);
    for (Element d = 1; d <= max_element; ++d) {
        for (Element m = d; m <= max_element; m += d) ++dcount[static_cast<std::size_t>(m)];
    }

    SearchReport report;
    report.max_element = max_element;
    report.max_size = max_size;
    report.mode = mode;

    for (int m = 1; m <= max_size; ++m) {
        std::vector<Element> candidates;
        for (Element e = 1; e <= max_element; ++e) {
            if (mode == PruneMode::kNone || dcount[static_cast<std::size_t>(e)] == m) {
                candidates.push_back(e);
            }
        }
        SearchContext ctx{&candidates, m, &report.nodes_explored};
        std::vector<Element> chosen;
        chosen.reserve(static_cast<std::size_t>(m));
        if (backtrack(ctx, 0, chosen)) {
            report.achievable.push_back(SizeWitness{m, make_set(chosen)});
        }
    }
    return report;
}

nlohmann::json set_to_json(const GcdSet& set) {
    return nlohmann::json{{"elements", set.elements}};
}

GcdSet set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.at("elements").is_array()) {
        throw std::invalid_argument("set_from_json: expected {\"elements\": [...]}");
    }
    return make_set(j.at("elements").get<std::vector<Element>>());
}

}  // namespace olymp::gcdsets
