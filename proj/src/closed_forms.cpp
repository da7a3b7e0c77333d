#include "domgame/closed_forms.hpp"

#include <array>
#include <charconv>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

constexpr std::array<std::uint32_t, 4> kPathByResidue{0, 1, 1, 3};

std::int64_t residue4(std::int64_t x) { return ((x % 4) + 4) % 4; }

} // namespace

Nimber path_nimber(std::uint64_t n)
{
    if (n < 1)
        throw InputError("path nimber needs n >= 1");
    switch (n) {
    case 1: return Nimber(1);
    case 2: return Nimber(1);
    case 3: return Nimber(2);
    default: return Nimber(kPathByResidue[n % 4]);
    }
}

Nimber marked_path_nimber(PathMark kind, std::uint64_t n)
{
    if (kind == PathMark::plain)
        return path_nimber(n);
    return Nimber(static_cast<std::uint32_t>(n % 4));
}

Nimber cycle_nimber(std::uint64_t n)
{
    if (n < 3)
        throw InputError("cycle nimber needs n >= 3");
    return Nimber(n % 4 == 3 ? 1 : 0);
}

Nimber r_table(std::int64_t n, std::int64_t k)
{
    return Nimber(static_cast<std::uint32_t>(residue4(k + 1) ^ residue4(n - k)));
}

std::vector<ComponentSpec> parse_component_spec(std::string_view spec)
{
    std::vector<ComponentSpec> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos)
            comma = spec.size();
        std::string_view tok = spec.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'C'))
            throw InputError("bad component token '" + std::string(tok) + "', expected P<n> or C<n>");
        std::uint64_t n = 0;
        auto [end, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), n);
        if (ec != std::errc{} || end != tok.data() + tok.size())
            throw InputError("bad component size in '" + std::string(tok) + "'");
        ComponentSpec c{tok[0] == 'P' ? ComponentSpec::Kind::path : ComponentSpec::Kind::cycle, n};
        if (c.kind == ComponentSpec::Kind::path && n < 1)
            throw InputError("path component needs n >= 1");
        if (c.kind == ComponentSpec::Kind::cycle && n < 3)
            throw InputError("cycle component needs n >= 3");
        out.push_back(c);
        pos = comma + 1;
    }
    return out;
}

Nimber component_nimber(const ComponentSpec& c)
{
    return c.kind == ComponentSpec::Kind::path ? path_nimber(c.n) : cycle_nimber(c.n);
}

Nimber union_nimber(std::span<const ComponentSpec> components)
{
    Nimber acc;
    for (const auto& c : components)
        acc ^= component_nimber(c);
    return acc;
}

Winner union_winner(std::span<const ComponentSpec> components)
{
    return union_nimber(components).is_zero() ? Winner::Second : Winner::First;
}

Graph build_components(std::span<const ComponentSpec> components)
{
    std::vector<Graph> parts;
    for (const auto& c : components) {
        if (c.n > static_cast<std::uint64_t>(kMaxMaskVertices))
            throw SizeGuardError("component too large to materialize");
        const int n = static_cast<int>(c.n);
        parts.push_back(c.kind == ComponentSpec::Kind::path ? build_path(n) : build_cycle(n));
    }
    return build_union(parts);
}

} // namespace domgame
