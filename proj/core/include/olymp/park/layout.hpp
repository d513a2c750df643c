#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace olymp::park {

/**
 * A park: a simple cubic graph with a rotation system.
 *
 * Junctions are 0-based; trails are unordered junction pairs identified by
 * index into `trails`.  `rotation[v]` lists the three trails incident to v in
 * counterclockwise order, which is what gives "turn left/right" meaning.  The
 * rotation system need not be planar; its Euler genus is reported as
 * information by validate_layout.
 */
struct ParkLayout {
    int junction_count = 0;
    std::vector<std::pair<int, int>> trails;
    std::vector<std::array<int, 3>> rotation;

    int trail_count() const { return static_cast<int>(trails.size()); }

    /** The endpoint of `trail` that is not `junction`; throws if not incident. */
    int other_end(int trail, int junction) const;

    bool incident(int trail, int junction) const;
};

struct LayoutValidation {
    bool valid = false;
    std::vector<std::string> violations;
    // Embedding data, filled only when valid:
    int face_count = 0;
    int component_count = 0;
    int euler_genus = 0;  // summed over components; 0 means planar embedding
};

/**
 * Check the cubic-graph and rotation invariants: every junction on exactly
 * three trails, no self-loops, no two trails with the same endpoints, every
 * rotation a permutation of the incident trails.  Never throws for content
 * violations; they are returned in the report.
 */
LayoutValidation validate_layout(const ParkLayout& layout);

// JSON schema: {"junctions": N, "trails": [[u,v], ...],
//               "rotation": {"<junction>": [t1,t2,t3], ...}}, 0-based ids.
ParkLayout layout_from_json(const nlohmann::json& doc);
nlohmann::json layout_to_json(const ParkLayout& layout);

}  // namespace olymp::park
