#pragma once

// Reference implementations used by the tests. They share only the Graph
// adjacency with the library and deliberately avoid its search code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "domgame/cgt.hpp"
#include "domgame/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<Mask> closed_masks(const domgame::Graph& g)
{
    std::vector<Mask> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        out[v] = Mask{1} << v;
        for (int u : g.neighbors(v))
            out[v] |= Mask{1} << u;
    }
    return out;
}

inline Mask all_of(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Direct win/lose search; `misere` flips the result at the full board.
class Minimax {
public:
    Minimax(const domgame::Graph& g, bool misere) : nbr_(closed_masks(g)), all_(all_of(g.vertex_count())), misere_(misere) {}

    bool mover_wins(Mask dominated)
    {
        if (auto it = memo_.find(dominated); it != memo_.end())
            return it->second;
        bool win = false;
        bool any = false;
        for (std::size_t v = 0; v < nbr_.size() && !win; ++v) {
            if ((nbr_[v] & ~dominated & all_) == 0)
                continue;
            any = true;
            win = !mover_wins(dominated | nbr_[v]);
        }
        if (!any)
            win = misere_;
        memo_[dominated] = win;
        return win;
    }

private:
    std::vector<Mask> nbr_;
    Mask all_;
    bool misere_;
    std::unordered_map<Mask, bool> memo_;
};

inline bool normal_first_wins(const domgame::Graph& g) { return Minimax(g, false).mover_wins(0); }
inline bool misere_first_wins(const domgame::Graph& g) { return Minimax(g, true).mover_wins(0); }

/// Grundy value by the bare mex definition, no decomposition.
class NaiveGrundy {
public:
    explicit NaiveGrundy(const domgame::Graph& g) : nbr_(closed_masks(g)), all_(all_of(g.vertex_count())) {}

    unsigned value(Mask dominated)
    {
        if (auto it = memo_.find(dominated); it != memo_.end())
            return it->second;
        std::set<unsigned> seen;
        for (std::size_t v = 0; v < nbr_.size(); ++v)
            if (nbr_[v] & ~dominated & all_)
                seen.insert(value(dominated | nbr_[v]));
        unsigned m = 0;
        while (seen.count(m))
            ++m;
        memo_[dominated] = m;
        return m;
    }

private:
    std::vector<Mask> nbr_;
    Mask all_;
    std::unordered_map<Mask, unsigned> memo_;
};

/// Colored-graph minimax. Returns {Alice moving first wins, Bob moving
/// first wins}. A stuck player loses, except under misère with a full board.
class PartizanMinimax {
public:
    PartizanMinimax(const domgame::Graph& g, bool misere)
        : nbr_(closed_masks(g)), all_(all_of(g.vertex_count())), misere_(misere)
    {
        for (int v = 0; v < g.vertex_count(); ++v)
            own_[g.color(v) == domgame::Color::A ? 0 : 1] |= Mask{1} << v;
    }

    std::pair<bool, bool> first_wins() { return {wins(0, 0), wins(0, 1)}; }

private:
    bool wins(Mask dominated, int mover)
    {
        const auto key = std::make_pair(dominated, mover);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool win = false;
        bool any = false;
        for (std::size_t v = 0; v < nbr_.size() && !win; ++v) {
            if (!((own_[mover] >> v) & 1) || (nbr_[v] & ~dominated & all_) == 0)
                continue;
            any = true;
            win = !wins(dominated | nbr_[v], 1 - mover);
        }
        if (!any)
            win = misere_ && (dominated & all_) == all_;
        memo_[key] = win;
        return win;
    }

    std::vector<Mask> nbr_;
    Mask all_;
    bool misere_;
    Mask own_[2] = {0, 0};
    std::map<std::pair<Mask, int>, bool> memo_;
};

/// Uncanonicalized game tree.
struct Tree {
    std::vector<std::shared_ptr<const Tree>> left, right;
};
using TreePtr = std::shared_ptr<const Tree>;

inline TreePtr tree_of(domgame::cgt::GameValue g)
{
    auto t = std::make_shared<Tree>();
    for (auto o : g.left())
        t->left.push_back(tree_of(o));
    for (auto o : g.right())
        t->right.push_back(tree_of(o));
    return t;
}

/// Raw game tree of a colored position: Alice plays A vertices, Bob B.
inline TreePtr position_tree(const std::vector<Mask>& nbr, Mask all, Mask alice, Mask dominated)
{
    auto t = std::make_shared<Tree>();
    for (std::size_t v = 0; v < nbr.size(); ++v) {
        if ((nbr[v] & ~dominated & all) == 0)
            continue;
        auto child = position_tree(nbr, all, alice, dominated | nbr[v]);
        ((alice >> v) & 1 ? t->left : t->right).push_back(std::move(child));
    }
    return t;
}

inline TreePtr position_tree(const domgame::Graph& g)
{
    const auto nbr = closed_masks(g);
    return position_tree(nbr, all_of(g.vertex_count()), g.color_mask(domgame::Color::A), 0);
}

/// Normal-play search on a formal sum of signed trees.
class SumPlay {
public:
    using Term = std::pair<const Tree*, bool>; // (tree, negated)

    /// True if `left_to_move` wins moving first in the sum.
    bool mover_wins(std::vector<Term> sum, bool left_to_move)
    {
        std::sort(sum.begin(), sum.end());
        auto key = std::make_pair(sum, left_to_move);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool win = false;
        for (std::size_t i = 0; i < sum.size() && !win; ++i) {
            const auto [t, neg] = sum[i];
            const auto& opts = (left_to_move != neg) ? t->left : t->right;
            for (const auto& o : opts) {
                auto next = sum;
                next[i].first = o.get();
                if (!mover_wins(next, !left_to_move)) {
                    win = true;
                    break;
                }
            }
        }
        memo_[key] = win;
        return win;
    }

private:
    std::map<std::pair<std::vector<Term>, bool>, bool> memo_;
};

/// g <= h iff Left moving first loses g - h.
inline bool tree_leq(const TreePtr& g, const TreePtr& h)
{
    SumPlay p;
    return !p.mover_wins({{g.get(), false}, {h.get(), true}}, true);
}

inline bool tree_equal(const TreePtr& g, const TreePtr& h) { return tree_leq(g, h) && tree_leq(h, g); }

/// Tree for {lefts | rights} built from other trees, no simplification.
inline TreePtr brace(std::vector<TreePtr> left, std::vector<TreePtr> right)
{
    auto t = std::make_shared<Tree>();
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

/// Formal sum tree g + h.
inline TreePtr tree_sum(const TreePtr& g, const TreePtr& h)
{
    auto t = std::make_shared<Tree>();
    for (const auto& o : g->left)
        t->left.push_back(tree_sum(o, h));
    for (const auto& o : h->left)
        t->left.push_back(tree_sum(g, o));
    for (const auto& o : g->right)
        t->right.push_back(tree_sum(o, h));
    for (const auto& o : h->right)
        t->right.push_back(tree_sum(g, o));
    return t;
}

} // namespace oracle
