#include "uniserial/detours.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace uniserial {

Mast make_mast(const Quiver& q, const Path& p) {
    if (!path_well_formed(q, p)) throw ParseError("path is not composable in the quiver");
    Mast m;
    m.p = p;
    m.vertices.reserve(p.length() + 1);
    int at = p.source;
    m.vertices.push_back(at);
    for (int a : p.arrows) {
        at = q.arrow(a).target;
        m.vertices.push_back(at);
    }
    return m;
}

int DetourTable::find(int arrow, unsigned ulen) const {
    for (size_t i = 0; i < detours.size(); ++i)
        if (detours[i].arrow == arrow && detours[i].ulen == ulen) return static_cast<int>(i);
    return -1;
}

DetourTable enumerate_detours(const Presentation& pres, const Path& p) {
    const Quiver& q = pres.quiver;
    DetourTable table;
    table.mast = make_mast(q, p);
    const std::vector<int>& vs = table.mast.vertices;
    const size_t l = p.length();

    for (unsigned ulen = 0; ulen <= l; ++ulen) {
        for (int a : q.arrows_from(vs[ulen])) {
            // condition (ii): alpha*u must not be a prefix of p
            if (ulen < l && p.arrows[ulen] == a) continue;
            Detour d;
            d.arrow = a;
            d.ulen = ulen;
            for (unsigned t = ulen + 1; t <= l; ++t)
                if (vs[t] == q.arrow(a).target) d.target_lens.push_back(t);
            if (d.target_lens.empty()) continue;  // condition (iii)
            table.detours.push_back(std::move(d));
        }
    }
    // arrows_from already sorts by name; ulen loop gives the outer key
    unsigned var = 0;
    for (Detour& d : table.detours) {
        d.first_var = var;
        var += static_cast<unsigned>(d.target_lens.size());
    }
    table.nvars = var;
    return table;
}

std::string DetourTable::variable_table(const Quiver& q) const {
    std::ostringstream out;
    for (const Detour& d : detours) {
        for (size_t i = 0; i < d.target_lens.size(); ++i) {
            out << "X[" << (d.first_var + i + 1) << "] : ("
                << q.arrow(d.arrow).name << ", " << path_str(q, prefix(mast.p, d.ulen))
                << ") -> " << path_str(q, prefix(mast.p, d.target_lens[i])) << "\n";
        }
    }
    return out.str();
}

std::string DetourTable::json(const Quiver& q) const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t di = 0; di < detours.size(); ++di) {
        const Detour& d = detours[di];
        nlohmann::json entry;
        entry["index"] = di + 1;
        entry["arrow"] = q.arrow(d.arrow).name;
        entry["u"] = path_str(q, prefix(mast.p, d.ulen));
        nlohmann::json targets = nlohmann::json::array();
        nlohmann::json vars = nlohmann::json::array();
        for (size_t i = 0; i < d.target_lens.size(); ++i) {
            targets.push_back(path_str(q, prefix(mast.p, d.target_lens[i])));
            vars.push_back(d.first_var + i + 1);
        }
        entry["targets"] = targets;
        entry["variables"] = vars;
        arr.push_back(entry);
    }
    nlohmann::json root;
    root["mast"] = path_str(q, mast.p);
    root["variable_count"] = nvars;
    root["detours"] = arr;
    return root.dump(2);
}

bool is_route(const Quiver& quiver, const Mast& mast, const Path& q) {
    const size_t l = mast.length();
    if (q.source != mast.vertices[0]) return false;
    if (q.length() > l) return false;
    // positions 1..l+1 stored 0-based; reachable[j] after consuming k arrows
    std::vector<char> reach(l + 1, 0);
    reach[0] = 1;
    for (int a : q.arrows) {
        std::vector<char> next(l + 1, 0);
        const Arrow& ar = quiver.arrow(a);
        for (size_t j = 0; j < l; ++j) {
            if (!reach[j]) continue;
            if (mast.vertices[j] != ar.source) continue;
            if (mast.p.arrows[j] == a) {
                next[j + 1] = 1;  // continue along the mast
            } else {
                // detour jump: land on any strictly longer prefix position
                for (size_t t = j + 1; t <= l; ++t)
                    if (mast.vertices[t] == ar.target) next[t] = 1;
            }
        }
        reach = std::move(next);
        if (std::find(reach.begin(), reach.end(), 1) == reach.end()) return false;
    }
    return true;
}

std::vector<Path> enumerate_masts(const Quiver& q, const std::vector<int>& vertices) {
    if (vertices.empty()) return {};
    std::vector<Path> result;
    Path base;
    base.source = vertices[0];
    result.push_back(base);
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        std::vector<int> step = q.arrows_between(vertices[i], vertices[i + 1]);
        std::vector<Path> next;
        for (const Path& p : result)
            for (int a : step) {
                Path e = p;
                e.arrows.push_back(a);
                next.push_back(std::move(e));
            }
        result = std::move(next);
        if (result.empty()) return result;
    }
    return result;
}

}  // namespace uniserial
