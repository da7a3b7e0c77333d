#include "domgame/cgt.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "domgame/errors.hpp"

namespace domgame::cgt {

namespace detail {

struct Node {
    std::uint32_t id;
    std::vector<GameValue> left;
    std::vector<GameValue> right;
    std::optional<Dyadic> number;
    int birthday;
};

} // namespace detail

namespace {

struct OptionKey {
    std::vector<std::uint32_t> ids; // left ids, separator, right ids
    bool operator==(const OptionKey&) const = default;
};

struct OptionKeyHash {
    std::size_t operator()(const OptionKey& k) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto id : k.ids)
            h = (h ^ id) * 0x100000001b3ull;
        return static_cast<std::size_t>(h);
    }
};

constexpr std::uint32_t kSeparator = 0xffffffffu;

std::uint64_t pair_key(GameValue a, GameValue b) { return (std::uint64_t{a.id()} << 32) | b.id(); }

void sort_unique(std::vector<GameValue>& v)
{
    std::sort(v.begin(), v.end(), [](GameValue a, GameValue b) { return a.id() < b.id(); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

class Store {
public:
    static Store& instance()
    {
        static Store s;
        return s;
    }

    // Options are sorted, deduplicated and canonical for this node.
    GameValue intern(std::vector<GameValue> left, std::vector<GameValue> right)
    {
        OptionKey key;
        key.ids.reserve(left.size() + right.size() + 1);
        for (auto g : left)
            key.ids.push_back(g.id());
        key.ids.push_back(kSeparator);
        for (auto g : right)
            key.ids.push_back(g.id());

        std::lock_guard lock(mu_);
        if (auto it = interned_.find(key); it != interned_.end())
            return GameValue(it->second);
        auto number = detect_number(left, right);
        int birthday = 0;
        for (auto g : left)
            birthday = std::max(birthday, g.birthday() + 1);
        for (auto g : right)
            birthday = std::max(birthday, g.birthday() + 1);
        nodes_.push_back(detail::Node{static_cast<std::uint32_t>(nodes_.size()), std::move(left), std::move(right),
                                      number, birthday});
        const detail::Node* node = &nodes_.back();
        interned_.emplace(std::move(key), node);
        return GameValue(node);
    }

    GameValue zero() const { return GameValue(zero_); }

    std::optional<bool> find_leq(std::uint64_t key)
    {
        std::lock_guard lock(mu_);
        if (auto it = leq_.find(key); it != leq_.end())
            return it->second;
        return std::nullopt;
    }
    void put_leq(std::uint64_t key, bool v)
    {
        std::lock_guard lock(mu_);
        leq_.emplace(key, v);
    }

    std::optional<GameValue> find_sum(std::uint64_t key)
    {
        std::lock_guard lock(mu_);
        if (auto it = sum_.find(key); it != sum_.end())
            return GameValue(it->second);
        return std::nullopt;
    }
    void put_sum(std::uint64_t key, GameValue v)
    {
        std::lock_guard lock(mu_);
        sum_.emplace(key, v.node_);
    }

    std::optional<GameValue> find_negation(GameValue g)
    {
        std::lock_guard lock(mu_);
        if (auto it = negation_.find(g.id()); it != negation_.end())
            return GameValue(it->second);
        return std::nullopt;
    }
    void put_negation(GameValue g, GameValue v)
    {
        std::lock_guard lock(mu_);
        negation_.emplace(g.id(), v.node_);
    }

    std::size_t size()
    {
        std::lock_guard lock(mu_);
        return nodes_.size();
    }

    static const detail::Node* node(GameValue g) { return g.node_; }

private:
    Store()
    {
        nodes_.push_back(detail::Node{0, {}, {}, Dyadic(0), 0});
        zero_ = &nodes_.back();
        interned_.emplace(OptionKey{{kSeparator}}, zero_);
    }

    // A canonical form with at most one option per side, number options and
    // left < right is the simplest number between them.
    static std::optional<Dyadic> detect_number(const std::vector<GameValue>& left,
                                               const std::vector<GameValue>& right)
    {
        if (left.size() > 1 || right.size() > 1)
            return std::nullopt;
        std::optional<Dyadic> lo, hi;
        if (!left.empty()) {
            if (!left[0].number())
                return std::nullopt;
            lo = left[0].number();
        }
        if (!right.empty()) {
            if (!right[0].number())
                return std::nullopt;
            hi = right[0].number();
        }
        if (lo && hi && !(*lo < *hi))
            return std::nullopt;
        return simplest_between(lo, hi);
    }

    std::mutex mu_;
    std::deque<detail::Node> nodes_;
    const detail::Node* zero_ = nullptr;
    std::unordered_map<OptionKey, const detail::Node*, OptionKeyHash> interned_;
    std::unordered_map<std::uint64_t, bool> leq_;
    std::unordered_map<std::uint64_t, const detail::Node*> sum_;
    std::unordered_map<std::uint32_t, const detail::Node*> negation_;
};

GameValue::GameValue() : node_(Store::node(Store::instance().zero())) {}

std::span<const GameValue> GameValue::left() const { return node_->left; }
std::span<const GameValue> GameValue::right() const { return node_->right; }
std::uint32_t GameValue::id() const { return node_->id; }
int GameValue::birthday() const { return node_->birthday; }
const std::optional<Dyadic>& GameValue::number() const { return node_->number; }

bool leq(GameValue g, GameValue h)
{
    if (g == h)
        return true;
    // Numbers compare by value directly.
    if (g.number() && h.number())
        return *g.number() <= *h.number();
    auto& store = Store::instance();
    const auto key = pair_key(g, h);
    if (auto hit = store.find_leq(key))
        return *hit;
    bool result = true;
    for (auto gl : g.left())
        if (leq(h, gl)) {
            result = false;
            break;
        }
    if (result)
        for (auto hr : h.right())
            if (leq(hr, g)) {
                result = false;
                break;
            }
    store.put_leq(key, result);
    return result;
}

namespace {

struct Form {
    const std::vector<GameValue>& left;
    const std::vector<GameValue>& right;
};

bool leq_node_form(GameValue x, const Form& g);

// g <= x for a form g that is not interned.
bool leq_form_node(const Form& g, GameValue x)
{
    for (auto gl : g.left)
        if (leq(x, gl))
            return false;
    for (auto xr : x.right())
        if (leq_node_form(xr, g))
            return false;
    return true;
}

// x <= g for a form g that is not interned.
bool leq_node_form(GameValue x, const Form& g)
{
    for (auto xl : x.left())
        if (leq_form_node(g, xl))
            return false;
    for (auto gr : g.right)
        if (leq(gr, x))
            return false;
    return true;
}

// Keep only the maximal (left) or minimal (right) options.
void remove_dominated(std::vector<GameValue>& options, bool keep_max)
{
    std::vector<GameValue> kept;
    for (std::size_t i = 0; i < options.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
            if (i == j)
                continue;
            dominated = keep_max ? leq(options[i], options[j]) : leq(options[j], options[i]);
        }
        if (!dominated)
            kept.push_back(options[i]);
    }
    options = std::move(kept);
}

// Replaces the first reversible option found; returns whether one was.
bool bypass_one_reversible(std::vector<GameValue>& left, std::vector<GameValue>& right)
{
    const Form g{left, right};
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (auto lr : left[i].right()) {
            if (leq_node_form(lr, g)) {
                auto replacement = lr.left();
                std::vector<GameValue> next(left.begin(), left.end());
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(next.end(), replacement.begin(), replacement.end());
                left = std::move(next);
                return true;
            }
        }
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        for (auto rl : right[i].left()) {
            if (leq_form_node(g, rl)) {
                auto replacement = rl.right();
                std::vector<GameValue> next(right.begin(), right.end());
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(next.end(), replacement.begin(), replacement.end());
                right = std::move(next);
                return true;
            }
        }
    }
    return false;
}

} // namespace

GameValue make_game(std::span<const GameValue> left_in, std::span<const GameValue> right_in)
{
    std::vector<GameValue> left(left_in.begin(), left_in.end());
    std::vector<GameValue> right(right_in.begin(), right_in.end());
    do {
        sort_unique(left);
        sort_unique(right);
        remove_dominated(left, true);
        remove_dominated(right, false);
    } while (bypass_one_reversible(left, right));
    return Store::instance().intern(std::move(left), std::move(right));
}

GameValue make_game(std::initializer_list<GameValue> left, std::initializer_list<GameValue> right)
{
    return make_game(std::span<const GameValue>(left.begin(), left.size()),
                     std::span<const GameValue>(right.begin(), right.size()));
}

GameValue zero() { return GameValue(); }
GameValue star() { return make_game({zero()}, {zero()}); }
GameValue up() { return make_game({zero()}, {star()}); }
GameValue down() { return make_game({star()}, {zero()}); }

GameValue integer(std::int64_t n)
{
    GameValue g = zero();
    for (std::int64_t k = 0; k < n; ++k)
        g = make_game({g}, {});
    for (std::int64_t k = 0; k > n; --k)
        g = make_game({}, {g});
    return g;
}

GameValue number(const Dyadic& d)
{
    if (d.is_integer())
        return integer(d.numerator());
    const Dyadic step(1, d.exponent());
    return make_game({number(d - step)}, {number(d + step)});
}

GameValue star_n(int n)
{
    std::vector<GameValue> opts;
    for (int k = 0; k < n; ++k)
        opts.push_back(star_n(k));
    return make_game(opts, opts);
}

GameValue negate(GameValue g)
{
    if (g == zero())
        return g;
    auto& store = Store::instance();
    if (auto hit = store.find_negation(g))
        return *hit;
    std::vector<GameValue> left, right;
    for (auto r : g.right())
        left.push_back(negate(r));
    for (auto l : g.left())
        right.push_back(negate(l));
    // Negating a canonical form yields a canonical form.
    sort_unique(left);
    sort_unique(right);
    GameValue result = store.intern(std::move(left), std::move(right));
    store.put_negation(g, result);
    return result;
}

GameValue add(GameValue g, GameValue h)
{
    if (g == zero())
        return h;
    if (h == zero())
        return g;
    if (h.id() < g.id())
        std::swap(g, h);
    auto& store = Store::instance();
    const auto key = pair_key(g, h);
    if (auto hit = store.find_sum(key))
        return *hit;
    std::vector<GameValue> left, right;
    for (auto gl : g.left())
        left.push_back(add(gl, h));
    for (auto hl : h.left())
        left.push_back(add(g, hl));
    for (auto gr : g.right())
        right.push_back(add(gr, h));
    for (auto hr : h.right())
        right.push_back(add(g, hr));
    GameValue result = make_game(left, right);
    store.put_sum(key, result);
    return result;
}

Outcome outcome(GameValue g)
{
    const bool nonneg = leq(zero(), g);
    const bool nonpos = leq(g, zero());
    if (nonneg && nonpos)
        return Outcome::SecondWins;
    if (nonneg)
        return Outcome::AliceWins;
    if (nonpos)
        return Outcome::BobWins;
    return Outcome::FirstWins;
}

namespace {

std::string join_sorted(std::span<const GameValue> options)
{
    std::vector<std::string> parts;
    for (auto g : options)
        parts.push_back(display(g));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += parts[i];
    }
    return out;
}

} // namespace

std::string display(GameValue g)
{
    if (g.number())
        return g.number()->to_string();
    const auto z = zero();
    const auto s = star();
    if (g.left().size() == 1 && g.right().size() == 1) {
        const auto l = g.left()[0];
        const auto r = g.right()[0];
        if (l == z && r == z)
            return "*";
        if (l == z && r == s)
            return "^";
        if (l == s && r == z)
            return "v";
    }
    return "{" + join_sorted(g.left()) + "|" + join_sorted(g.right()) + "}";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GameValue parse_all()
    {
        GameValue g = parse_value();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("cannot parse game value '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::vector<GameValue> parse_list(char terminator)
    {
        std::vector<GameValue> out;
        if (peek(terminator))
            return out;
        out.push_back(parse_value());
        while (peek(',')) {
            ++pos_;
            out.push_back(parse_value());
        }
        return out;
    }

    GameValue parse_value()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '*') {
            ++pos_;
            return star();
        }
        if (c == '^') {
            ++pos_;
            return up();
        }
        if (c == 'v') {
            ++pos_;
            return down();
        }
        if (c == '{') {
            ++pos_;
            auto left = parse_list('|');
            if (!peek('|'))
                fail("expected '|'");
            ++pos_;
            auto right = parse_list('}');
            if (!peek('}'))
                fail("expected '}'");
            ++pos_;
            return make_game(left, right);
        }
        const std::size_t start = pos_;
        if (text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        auto d = Dyadic::parse(text_.substr(start, pos_ - start));
        if (!d)
            fail("expected a value");
        return number(*d);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GameValue parse_value(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, GameValue g) { return os << display(g); }

std::size_t store_size() { return Store::instance().size(); }

} // namespace domgame::cgt
