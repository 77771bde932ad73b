#include "resolvdim/intersection.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "resolvdim/error.hpp"
#include "resolvdim/resolving.hpp"

namespace resolvdim {

SetFamily::SetFamily(std::vector<std::string> ground, std::vector<std::vector<std::uint32_t>> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    std::vector<std::string> sorted = ground_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadParameters, "duplicate token in ground set");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        auto& m = members_[i];
        if (m.empty()) throw Error(ErrorCode::EmptyMember, "member " + std::to_string(i + 1) + " is empty");
        for (auto t : m)
            if (t >= ground_.size())
                throw Error(ErrorCode::BadParameters, "member " + std::to_string(i + 1) + " uses an unknown token");
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
}

SetFamily SetFamily::from_tokens(const std::vector<std::vector<std::string>>& members) {
    std::vector<std::string> ground;
    std::map<std::string, std::uint32_t> index;
    std::vector<std::vector<std::uint32_t>> ids;
    for (const auto& member : members) {
        auto& row = ids.emplace_back();
        for (const auto& tok : member) {
            auto [it, inserted] = index.try_emplace(tok, static_cast<std::uint32_t>(ground.size()));
            if (inserted) ground.push_back(tok);
            row.push_back(it->second);
        }
    }
    return SetFamily(std::move(ground), std::move(ids));
}

std::vector<std::string> SetFamily::member_tokens(std::size_t i) const {
    std::vector<std::string> out;
    for (auto t : members_.at(i)) out.push_back(ground_[t]);
    return out;
}

PlainGraph intersection_graph(const SetFamily& fam) {
    const auto& ms = fam.members();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            // Members are sorted, so a merge walk finds a common token.
            auto a = ms[i].begin(), b = ms[j].begin();
            bool meet = false;
            while (a != ms[i].end() && b != ms[j].end() && !meet) {
                if (*a == *b) meet = true;
                else if (*a < *b) ++a;
                else ++b;
            }
            if (meet) edges.emplace_back(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
        }
    return PlainGraph{static_cast<std::uint32_t>(ms.size()), std::move(edges)};
}

SetFamily powerset_family(std::uint32_t n) {
    if (n < 1 || n > 16) throw Error(ErrorCode::BadParameters, "powerset family needs 1 <= n <= 16");
    std::vector<std::string> ground;
    for (std::uint32_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    std::vector<std::vector<std::uint32_t>> members;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        auto& m = members.emplace_back();
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) m.push_back(i);
    }
    return SetFamily(std::move(ground), std::move(members));
}

bool check_q2_correspondence(std::uint32_t n) {
    const ComponentGraph g(2, n);
    const SetFamily fam = powerset_family(n);
    // Member i (1-based) of the powerset family is the subset with mask i.
    auto member_of = [&](VertexId v) -> VertexId {
        const Vector vec = g.space().decode(v);
        std::vector<std::string> subset;
        for (std::uint32_t i = 0; i < n; ++i)
            if (vec.coeffs[i].rep != 0) subset.push_back(std::to_string(i + 1));
        for (std::size_t m = 0; m < fam.size(); ++m)
            if (fam.member_tokens(m) == subset) return static_cast<VertexId>(m + 1);
        throw std::logic_error("vector has no matching subset");
    };

    std::vector<VertexId> image(g.order() + 1, 0);
    std::vector<bool> hit(fam.size() + 1, false);
    for (VertexId v = 1; v <= g.order(); ++v) {
        image[v] = member_of(v);
        if (hit[image[v]]) return false;
        hit[image[v]] = true;
    }
    if (g.order() != fam.size()) return false;

    std::vector<Edge> mapped;
    for (auto [u, v] : g.to_plain().edges) mapped.emplace_back(image[u], image[v]);
    return PlainGraph::from_edges(g.order(), std::move(mapped)) == intersection_graph(fam);
}

SetFamily realize_as_intersection_family(const PlainGraph& g) {
    std::vector<std::vector<std::string>> members(g.order);
    for (auto [u, v] : g.edges) {
        const std::string token = std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v));
        members[u - 1].push_back(token);
        members[v - 1].push_back(token);
    }
    for (std::uint32_t v = 1; v <= g.order; ++v) members[v - 1].push_back("v" + std::to_string(v));
    SetFamily fam = SetFamily::from_tokens(members);
    if (!(intersection_graph(fam) == PlainGraph::from_edges(g.order, g.edges)))
        throw std::logic_error("realized family does not reproduce the graph");
    return fam;
}

std::uint32_t dim_of_powerset_intersection(std::uint32_t n, std::uint64_t budget, unsigned workers) {
    if (n < 2) throw Error(ErrorCode::BadParameters, "need n >= 2");
    const PlainMetric metric(intersection_graph(powerset_family(n)));
    return metric_dimension_search(metric, SearchOptions{budget, workers}).dimension;
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SetFamily read_set_family(std::istream& in) {
    std::vector<std::vector<std::string>> members;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        const std::string body = strip(line.substr(0, line.find('#')));
        if (body.empty()) continue;
        auto& member = members.emplace_back();
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            const std::string tok = strip(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (tok.empty()) throw ParseError("empty token", line_start + start);
            member.push_back(tok);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return SetFamily::from_tokens(members);
}

void write_set_family(std::ostream& out, const SetFamily& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto tokens = fam.member_tokens(i);
        for (std::size_t t = 0; t < tokens.size(); ++t) out << (t ? "," : "") << tokens[t];
        out << '\n';
    }
}

PlainGraph read_edge_list(std::istream& in, std::uint32_t order) {
    std::vector<Edge> edges;
    std::uint32_t largest = 0;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        const std::string body = strip(line.substr(0, line.find('#')));
        if (body.empty()) continue;
        std::istringstream fields(body);
        long long u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra) || u < 1 || v < 1 || u > UINT32_MAX || v > UINT32_MAX)
            throw ParseError("expected '<u> <v>' with positive ids", line_start);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        largest = std::max({largest, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    }
    return PlainGraph::from_edges(order ? order : largest, std::move(edges));
}

}  // namespace resolvdim
