#include <olymp/park/layout.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace olymp::park {

int ParkLayout::other_end(int trail, int junction) const {
    const auto& [u, v] = trails.at(static_cast<std::size_t>(trail));
    if (junction == u) {
        return v;
    }
    if (junction == v) {
        return u;
    }
    throw std::invalid_argument("ParkLayout::other_end: trail " + std::to_string(trail) +
                                " is not incident to junction " + std::to_string(junction));
}

bool ParkLayout::incident(int trail, int junction) const {
    const auto& [u, v] = trails.at(static_cast<std::size_t>(trail));
    return junction == u || junction == v;
}

namespace {

// Trace the face orbits of the embedding: from a dart (trail, head), cross to
// the head and leave along the CCW-successor trail.  Darts are encoded
// 2*trail + side.  Returns the total face count and tallies faces per
// component when a component map is supplied.
int trace_faces(const ParkLayout& layout, const std::vector<int>* component_of,
                std::vector<int>* faces_per_component) {
    const int trail_count = layout.trail_count();
    std::vector<bool> seen(static_cast<std::size_t>(2 * trail_count), false);
    int faces = 0;
    for (int start = 0; start < 2 * trail_count; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        ++faces;
        if (component_of != nullptr && faces_per_component != nullptr) {
            const auto& [u, v] = layout.trails[static_cast<std::size_t>(start / 2)];
            const int anchor = (start % 2 == 0) ? u : v;
            ++(*faces_per_component)[static_cast<std::size_t>(
                (*component_of)[static_cast<std::size_t>(anchor)])];
        }
        int dart = start;
        do {
            seen[static_cast<std::size_t>(dart)] = true;
            const auto& [u, v] = layout.trails[static_cast<std::size_t>(dart / 2)];
            const int head = (dart % 2 == 0) ? u : v;
            const int trail = dart / 2;
            const auto& rot = layout.rotation[static_cast<std::size_t>(head)];
            const auto pos = std::find(rot.begin(), rot.end(), trail) - rot.begin();
            const int next_trail = rot[static_cast<std::size_t>((pos + 1) % 3)];
            const int next_head = layout.other_end(next_trail, head);
            const auto& next_ends = layout.trails[static_cast<std::size_t>(next_trail)];
            dart = 2 * next_trail + (next_head == next_ends.second ? 1 : 0);
        } while (dart != start);
    }
    return faces;
}

int count_components(const ParkLayout& layout, std::vector<int>& component_of) {
    component_of.assign(static_cast<std::size_t>(layout.junction_count), -1);
    int components = 0;
    for (int root = 0; root < layout.junction_count; ++root) {
        if (component_of[static_cast<std::size_t>(root)] != -1) {
            continue;
        }
        std::vector<int> stack{root};
        component_of[static_cast<std::size_t>(root)] = components;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const int trail : layout.rotation[static_cast<std::size_t>(v)]) {
                const int w = layout.other_end(trail, v);
                if (component_of[static_cast<std::size_t>(w)] == -1) {
                    component_of[static_cast<std::size_t>(w)] = components;
                    stack.push_back(w);
                }
            }
        }
        ++components;
    }
    return components;
}

}  // namespace

LayoutValidation validate_layout(const ParkLayout& layout) {
    LayoutValidation report;
    auto complain = [&report](std::string text) { report.violations.push_back(std::move(text)); };

    if (layout.junction_count <= 0) {
        complain("junction count must be positive");
        return report;
    }

    bool endpoints_ok = true;
    std::set<std::pair<int, int>> seen_pairs;
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(layout.junction_count));
    for (int t = 0; t < layout.trail_count(); ++t) {
        auto [u, v] = layout.trails[static_cast<std::size_t>(t)];
        if (u < 0 || u >= layout.junction_count || v < 0 || v >= layout.junction_count) {
            complain("trail " + std::to_string(t) + " has an endpoint outside [0, " +
                     std::to_string(layout.junction_count - 1) + "]");
            endpoints_ok = false;
            continue;
        }
        if (u == v) {
            complain("trail " + std::to_string(t) + " is a self-loop at junction " +
                     std::to_string(u));
            endpoints_ok = false;
            continue;
        }
        if (!seen_pairs.insert(std::minmax(u, v)).second) {
            complain("parallel trails: a second trail joins junctions " +
                     std::to_string(std::min(u, v)) + " and " + std::to_string(std::max(u, v)));
            endpoints_ok = false;
            continue;
        }
        incident[static_cast<std::size_t>(u)].push_back(t);
        incident[static_cast<std::size_t>(v)].push_back(t);
    }

    if (endpoints_ok) {
        for (int v = 0; v < layout.junction_count; ++v) {
            if (incident[static_cast<std::size_t>(v)].size() != 3) {
                complain("junction " + std::to_string(v) + " lies on " +
                         std::to_string(incident[static_cast<std::size_t>(v)].size()) +
                         " trails, expected exactly 3");
            }
        }
    }

    if (static_cast<int>(layout.rotation.size()) != layout.junction_count) {
        complain("rotation table has " + std::to_string(layout.rotation.size()) +
                 " entries, expected one per junction");
    } else if (endpoints_ok) {
        for (int v = 0; v < layout.junction_count; ++v) {
            auto expected = incident[static_cast<std::size_t>(v)];
            auto got = layout.rotation[static_cast<std::size_t>(v)];
            std::sort(expected.begin(), expected.end());
            std::array<int, 3> sorted = got;
            std::sort(sorted.begin(), sorted.end());
            if (expected.size() != 3 ||
                !std::equal(expected.begin(), expected.end(), sorted.begin())) {
                complain("rotation at junction " + std::to_string(v) +
                         " does not list exactly the three incident trails");
            }
        }
    }

    report.valid = report.violations.empty();
    if (!report.valid) {
        return report;
    }

    // Embedding information: faces of the rotation system and Euler genus per
    // component, via Euler's formula V - E + F = 2 - 2g on each component.
    std::vector<int> component_of;
    report.component_count = count_components(layout, component_of);
    std::vector<int> faces(static_cast<std::size_t>(report.component_count), 0);
    report.face_count = trace_faces(layout, &component_of, &faces);

    std::vector<int> vertices(static_cast<std::size_t>(report.component_count), 0);
    std::vector<int> edges(static_cast<std::size_t>(report.component_count), 0);
    for (int v = 0; v < layout.junction_count; ++v) {
        ++vertices[static_cast<std::size_t>(component_of[static_cast<std::size_t>(v)])];
    }
    for (const auto& [u, v] : layout.trails) {
        (void)v;
        ++edges[static_cast<std::size_t>(component_of[static_cast<std::size_t>(u)])];
    }
    report.euler_genus = 0;
    for (int c = 0; c < report.component_count; ++c) {
        const int chi = vertices[static_cast<std::size_t>(c)] - edges[static_cast<std::size_t>(c)] +
                        faces[static_cast<std::size_t>(c)];
        report.euler_genus += (2 - chi) / 2;
    }
    return report;
}

ParkLayout layout_from_json(const nlohmann::json& doc) {
    ParkLayout layout;
    try {
        layout.junction_count = doc.at("junctions").get<int>();
        for (const auto& pair : doc.at("trails")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw std::invalid_argument("each trail must be a pair [u, v]");
            }
            layout.trails.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        const auto& rotation = doc.at("rotation");
        if (!rotation.is_object()) {
            throw std::invalid_argument("\"rotation\" must map junction ids to trail triples");
        }
        layout.rotation.assign(static_cast<std::size_t>(std::max(layout.junction_count, 0)),
                               {-1, -1, -1});
        for (const auto& [key, value] : rotation.items()) {
            int junction = 0;
            try {
                junction = std::stoi(key);
            } catch (const std::exception&) {
                throw std::invalid_argument("rotation key \"" + key +
                                            "\" is not a junction id");
            }
            if (junction < 0 || junction >= layout.junction_count) {
                throw std::invalid_argument("rotation key \"" + key +
                                            "\" is outside the junction range");
            }
            if (!value.is_array() || value.size() != 3) {
                throw std::invalid_argument("rotation at junction " + key +
                                            " must list exactly 3 trails");
            }
            layout.rotation[static_cast<std::size_t>(junction)] = {
                value[0].get<int>(), value[1].get<int>(), value[2].get<int>()};
        }
        for (int v = 0; v < layout.junction_count; ++v) {
            if (layout.rotation[static_cast<std::size_t>(v)][0] == -1) {
                throw std::invalid_argument("rotation missing for junction " +
                                            std::to_string(v));
            }
        }
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("layout_from_json: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("layout_from_json: ") + err.what());
    }
    return layout;
}

nlohmann::json layout_to_json(const ParkLayout& layout) {
    nlohmann::json trails = nlohmann::json::array();
    for (const auto& [u, v] : layout.trails) {
        trails.push_back({u, v});
    }
    nlohmann::json rotation = nlohmann::json::object();
    for (int v = 0; v < layout.junction_count; ++v) {
        const auto& rot = layout.rotation[static_cast<std::size_t>(v)];
        rotation[std::to_string(v)] = {rot[0], rot[1], rot[2]};
    }
    return {{"junctions", layout.junction_count}, {"trails", trails}, {"rotation", rotation}};
}

}  // namespace olymp::park
