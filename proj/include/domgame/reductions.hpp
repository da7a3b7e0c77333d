#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/impartial.hpp"
#include "domgame/misere.hpp"

namespace domgame {

/// Positive DNF whose conjunctions hold one or two distinct variables.
class DnfFormula {
public:
    using Conjunction = std::vector<int>;

    DnfFormula() = default;

    /// Conjunctions are stored sorted. Throws InputError for empty or
    /// oversized conjunctions, repeated variables and out-of-range indices.
    DnfFormula(int variable_count, std::vector<Conjunction> conjunctions);

    int variable_count() const { return variable_count_; }
    const std::vector<Conjunction>& conjunctions() const { return conjunctions_; }
    std::size_t size() const { return conjunctions_.size(); }

    /// Number of conjunctions containing each variable.
    std::vector<int> occurrences() const;

    bool operator==(const DnfFormula&) const = default;

private:
    int variable_count_ = 0;
    std::vector<Conjunction> conjunctions_;
};

/// "(x0 & x3) | (x1)".
std::string to_string(const DnfFormula& f);

// DNF file: one conjunction per line, one or two 0-based variable indices;
// '#' comments. The variable count is one more than the largest index.
DnfFormula read_dnf(std::istream& in);
DnfFormula parse_dnf(std::string_view text);
DnfFormula load_dnf_file(const std::string& path);
std::string dnf_to_text(const DnfFormula& f);

struct FormulaProperties {
    bool every_variable_used;
    bool no_variable_in_all;
    bool odd_occurrences;

    bool all() const { return every_variable_used && no_variable_in_all && odd_occurrences; }
};

FormulaProperties formula_properties(const DnfFormula& f);

/// Adds fresh variables and conjunctions, without changing who wins the
/// avoidance game, until every variable occurs, none occurs in every
/// conjunction, and every occurrence count is odd. Steps run in that
/// order and are repeated (at most three passes) until all three hold;
/// failure is an InternalError.
DnfFormula normalize_formula(const DnfFormula& f);

/// The player who makes the formula true loses; a player with no false
/// variable left to set loses as well.
Winner avoid_posdnf_winner(const DnfFormula& f, int max_variables = kDefaultMaxVertices);

/// Domination-game instance built from a normalized formula.
struct ReductionGraph {
    Graph graph;
    /// Q^j: one vertex per variable occurrence in conjunction j.
    std::vector<std::vector<Vertex>> q_sets;
    /// V_i: all occurrence vertices of variable i (a clique).
    std::vector<std::vector<Vertex>> v_cliques;
    /// (c_j, c̄_j) per conjunction.
    std::vector<std::pair<Vertex, Vertex>> c_vertices;

    /// One comment line per vertex naming its role.
    std::vector<std::string> role_comments() const;
};

/// Vertices: occurrence vertices in conjunction order, then c_1, c̄_1,
/// c_2, c̄_2, ... Requires a normalized formula with at least three
/// conjunctions (InputError otherwise).
ReductionGraph build_normal_reduction(const DnfFormula& f);

/// Appends x1, x2, x3, y1, y2, y3 as vertices n..n+5; x1 and y1 are joined
/// to every vertex of h, x2 and x3 hang off x1, y2 and y3 off y1.
Graph build_misere_reduction(const Graph& h);
std::vector<std::string> misere_role_comments(const Graph& h);

/// Adds a twin v' = v + n for every vertex v with edges vv', uv' and u'v'
/// for each neighbor u of v; v is colored A and v' is colored B. Requires
/// h to have an edge.
Graph build_partizan_reduction(const Graph& h);
std::vector<std::string> partizan_role_comments(const Graph& h);

enum class ReductionKind { normal, misere, partizan };

struct ReductionReport {
    ReductionKind kind;
    std::string instance;
    std::string source_winner{};
    std::string reduced_winner{};
    bool winners_match = false;
    bool structure_ok = false;
    std::string structure_detail{};
    int reduced_vertices = 0;
    int reduced_diameter = 0;

    bool passed() const { return winners_match && structure_ok; }
};

/// Avoid-POSDNF winner of f against the normal-play winner of the reduction
/// of normalize_formula(f), plus the reduction's structural claims.
ReductionReport verify_normal_reduction(const DnfFormula& f, int max_vertices = kDefaultMaxVertices);

/// Normal-play winner of h against the misère winner of its lift.
ReductionReport verify_misere_reduction(const Graph& h, int max_vertices = kDefaultMaxVertices);

/// Impartial winner of h against the partizan outcome of its colored lift,
/// under the given convention.
ReductionReport verify_partizan_reduction(const Graph& h, Convention convention,
                                          int max_vertices = kDefaultMaxVertices);

std::string_view to_string(ReductionKind k);

} // namespace domgame
