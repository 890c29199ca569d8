#include "netrecon/cascade.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netrecon {

void CascadeSet::add(NodeId node, uint32_t item, uint32_t time) {
    if (node >= n_) throw std::invalid_argument("cascade set: node id out of range");
    if (item >= items_.size()) throw std::invalid_argument("cascade set: item id out of range");
    auto& adoptions = node_adoptions_[node];
    auto it = std::lower_bound(adoptions.begin(), adoptions.end(), item,
                               [](const auto& a, uint32_t b) { return a.first < b; });
    if (it != adoptions.end() && it->first == item)
        throw std::invalid_argument("cascade set: duplicate record for node " + std::to_string(node) +
                                    ", item " + std::to_string(item));
    adoptions.insert(it, {item, time});

    auto& adopters = items_[item];
    auto jt = std::lower_bound(adopters.begin(), adopters.end(), node,
                               [](const Infection& a, NodeId b) { return a.node < b; });
    adopters.insert(jt, Infection{node, time});
    ++records_;
}

CascadeSet CascadeSet::from_cascades(NodeId n, std::span<const Cascade> cascades) {
    CascadeSet cs(n, static_cast<uint32_t>(cascades.size()));
    for (uint32_t alpha = 0; alpha < cascades.size(); ++alpha) {
        if (cascades[alpha].item != alpha)
            throw std::invalid_argument("cascade set: cascade item ids must be 0..m-1 in order");
        auto& adopters = cs.items_[alpha];
        adopters.assign(cascades[alpha].infections.begin(), cascades[alpha].infections.end());
        std::sort(adopters.begin(), adopters.end(),
                  [](const Infection& a, const Infection& b) { return a.node < b.node; });
        for (std::size_t i = 0; i < adopters.size(); ++i) {
            if (adopters[i].node >= n)
                throw std::invalid_argument("cascade set: node id out of range");
            if (i > 0 && adopters[i].node == adopters[i - 1].node)
                throw std::invalid_argument("cascade set: duplicate record for node " +
                                            std::to_string(adopters[i].node) + ", item " +
                                            std::to_string(alpha));
            cs.node_adoptions_[adopters[i].node].emplace_back(alpha, adopters[i].time);
        }
        cs.records_ += adopters.size();
    }
    // per-node lists are already sorted by item since items were visited in order
    return cs;
}

std::optional<uint32_t> CascadeSet::time_of(NodeId i, uint32_t alpha) const {
    const auto& adoptions = node_adoptions_[i];
    auto it = std::lower_bound(adoptions.begin(), adoptions.end(), alpha,
                               [](const auto& a, uint32_t b) { return a.first < b; });
    if (it == adoptions.end() || it->first != alpha) return std::nullopt;
    return it->second;
}

CascadeSet CascadeSet::load_csv(std::istream& in, std::optional<NodeId> n_override,
                                std::optional<uint32_t> m_override) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("cascade csv: empty input");
    // tolerate a UTF-8 BOM and trailing CR
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line != "node,item,time")
        throw std::runtime_error("cascade csv: expected header 'node,item,time', got '" + line + "'");

    struct Row {
        NodeId node;
        uint32_t item, time;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        uint64_t vals[3];
        std::size_t field = 0, pos = 0;
        while (field < 3) {
            std::size_t comma = line.find(',', pos);
            std::string tok = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            uint64_t value = 0;
            bool ok = !tok.empty() && tok.size() <= 10;
            for (char c : tok) {
                if (c < '0' || c > '9') {
                    ok = false;
                    break;
                }
                value = value * 10 + static_cast<uint64_t>(c - '0');
            }
            if (!ok || value > 0xFFFFFFFFULL)
                throw std::runtime_error("cascade csv line " + std::to_string(line_no) +
                                         ": bad field '" + tok + "'");
            vals[field] = value;
            ++field;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (field != 3)
            throw std::runtime_error("cascade csv line " + std::to_string(line_no) +
                                     ": expected node,item,time");
        rows.push_back({static_cast<NodeId>(vals[0]), static_cast<uint32_t>(vals[1]),
                        static_cast<uint32_t>(vals[2])});
    }

    NodeId max_node = 0;
    uint32_t max_item = 0;
    for (const auto& r : rows) {
        max_node = std::max(max_node, r.node);
        max_item = std::max(max_item, r.item);
    }
    NodeId n = n_override.value_or(rows.empty() ? 0 : max_node + 1);
    uint32_t m = m_override.value_or(rows.empty() ? 0 : max_item + 1);
    CascadeSet cs(n, m);
    for (const auto& r : rows) cs.add(r.node, r.item, r.time);
    return cs;
}

CascadeSet CascadeSet::load_csv_file(const std::string& path, std::optional<NodeId> n_override,
                                     std::optional<uint32_t> m_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cascade csv: " + path);
    try {
        return load_csv(in, n_override, m_override);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void CascadeSet::save_csv(std::ostream& out) const {
    out << "node,item,time\n";
    for (uint32_t alpha = 0; alpha < items_.size(); ++alpha) {
        // rows ordered by (item, time, node) for stable output
        std::vector<Infection> sorted(items_[alpha].begin(), items_[alpha].end());
        std::sort(sorted.begin(), sorted.end(), [](const Infection& a, const Infection& b) {
            return a.time != b.time ? a.time < b.time : a.node < b.node;
        });
        for (const auto& inf : sorted) out << inf.node << ',' << alpha << ',' << inf.time << '\n';
    }
}

void CascadeSet::save_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    save_csv(out);
}

} // namespace netrecon
