#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "resolvdim/graph.hpp"

namespace resolvdim {

// Members are sets of token indices into `ground`. Members are 1-based as
// graph vertices but stored 0-based here.
class SetFamily {
public:
    SetFamily() = default;
    // Throws EmptyMember for an empty member, BadParameters for a token
    // index outside ground or duplicate ground tokens.
    SetFamily(std::vector<std::string> ground, std::vector<std::vector<std::uint32_t>> members);

    // Builds the ground set from first appearance order of tokens.
    static SetFamily from_tokens(const std::vector<std::vector<std::string>>& members);

    const std::vector<std::string>& ground() const noexcept { return ground_; }
    const std::vector<std::vector<std::uint32_t>>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::vector<std::string> member_tokens(std::size_t i) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<std::uint32_t>> members_;  // each sorted, unique
};

// Edge (i, j) iff members i and j (1-based) intersect.
PlainGraph intersection_graph(const SetFamily& fam);

// All non-empty subsets of {1..n} in ascending mask order. 1 <= n <= 16.
SetFamily powerset_family(std::uint32_t n);

// Checks that e_{i1}+...+e_{ik} <-> {i1,...,ik} maps the edges of Γ(F_2^n)
// exactly onto those of the powerset intersection graph.
bool check_q2_correspondence(std::uint32_t n);

// Vertex v gets {edge tokens "a-b" of edges at v} ∪ {"v<v>"}; the
// intersection graph of the result is g itself (checked before returning).
SetFamily realize_as_intersection_family(const PlainGraph& g);

// Metric dimension of the powerset intersection graph, by exhaustive search.
std::uint32_t dim_of_powerset_intersection(std::uint32_t n, std::uint64_t budget = 100'000'000,
                                           unsigned workers = 1);

// One member per line, tokens comma-separated, '#' starts a comment.
SetFamily read_set_family(std::istream& in);
void write_set_family(std::ostream& out, const SetFamily& fam);

// "<u> <v>" per line; blank lines and '#' comments skipped. The order is
// the largest endpoint unless given explicitly.
PlainGraph read_edge_list(std::istream& in, std::uint32_t order = 0);

}  // namespace resolvdim
