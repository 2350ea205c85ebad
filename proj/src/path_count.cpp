#include "yf/path_count.hpp"

#include "yf/graph.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>

namespace yf {

namespace {

struct PairKey {
    std::string x, y;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        std::size_t h = std::hash<std::string>{}(k.x);
        h ^= std::hash<std::string>{}(k.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct FKey {
    std::string x;
    std::uint32_t y, z;
    bool operator==(const FKey&) const = default;
};

struct FKeyHash {
    std::size_t operator()(const FKey& k) const noexcept {
        std::size_t h = std::hash<std::string>{}(k.x);
        h ^= (std::size_t(k.y) << 32 | k.z) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::mutex g_brute_mutex;
std::unordered_map<PairKey, BigInt, PairKeyHash> g_brute_memo;

std::mutex g_f_mutex;
std::unordered_map<FKey, BigRat, FKeyHash> g_f_memo;
std::unordered_map<FKey, double, FKeyHash> g_f_memo_approx;

BigInt d_brute_rec(const Word& x, const Word& y) {
    if (y.rank() == x.rank())
        return x == y ? 1 : 0;
    if (!is_below(x, y))
        return 0;
    const PairKey key{x.storage(), y.storage()};
    {
        std::lock_guard lock(g_brute_mutex);
        if (auto it = g_brute_memo.find(key); it != g_brute_memo.end())
            return it->second;
    }
    BigInt total = 0;
    for (const Word& z : down_neighbors(y))
        total += d_brute_rec(x, z);
    std::lock_guard lock(g_brute_mutex);
    return g_brute_memo.emplace(key, std::move(total)).first->second;
}

// f(x,y,0): split x at the suffix of digit sum y. Partial digit sums from the
// right are strictly increasing, so at most one split matches.
template <class Num>
Num f_base(const Word& x, std::size_t y) {
    const std::string& s = x.storage();
    std::size_t acc = 0, cut = 0;
    while (acc < y && cut < s.size())
        acc += static_cast<std::size_t>(s[cut++] - '0');
    if (acc != y)
        return Num(0);
    BigInt den = 1;
    // suffix digits s[0..cut), partial sums from the suffix's left end
    std::size_t sum = 0;
    for (std::size_t i = cut; i-- > 0;) {
        sum += static_cast<std::size_t>(s[i] - '0');
        den *= static_cast<unsigned long>(sum);
    }
    // remaining prefix, partial sums from its right end
    sum = 0;
    for (std::size_t i = cut; i < s.size(); ++i) {
        sum += static_cast<std::size_t>(s[i] - '0');
        den *= static_cast<unsigned long>(sum);
    }
    if (cut % 2)
        den = -den;
    if constexpr (std::is_same_v<Num, BigRat>)
        return make_rat(1, den);
    else
        return 1.0 / den.get_d();
}

template <class Num>
Num f_rec(const Word& x, std::size_t y, std::size_t z);

template <class Num>
Num f_compute(const Word& x, std::size_t y, std::size_t z) {
    if (z == 0)
        return f_base<Num>(x, y);
    const std::string& s = x.storage();
    if (s[0] == '1') {
        if (y == 0)
            return f_base<Num>(x, 0);
        Num tail = f_rec<Num>(Word::from_storage(s.substr(1)), y - 1, z - 1);
        return f_base<Num>(x, y) + tail;
    }
    // trailing 2
    if (y == 1)
        return Num(0);
    Num inner = f_rec<Num>(Word::from_storage("11" + s.substr(1)), y, z + 1);
    if constexpr (std::is_same_v<Num, BigRat>)
        return inner / BigRat(1 - static_cast<long>(y));
    else
        return inner / (1.0 - static_cast<double>(y));
}

template <class Num>
Num f_rec(const Word& x, std::size_t y, std::size_t z) {
    const FKey key{x.storage(), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)};
    auto& memo = [&]() -> auto& {
        if constexpr (std::is_same_v<Num, BigRat>)
            return g_f_memo;
        else
            return g_f_memo_approx;
    }();
    {
        std::lock_guard lock(g_f_mutex);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    Num value = f_compute<Num>(x, y, z);
    std::lock_guard lock(g_f_mutex);
    return memo.emplace(key, std::move(value)).first->second;
}

void check_f_domain(const Word& x, std::size_t y, std::size_t z) {
    if (y > x.rank() || z > x.length())
        throw precondition_error("f: outside domain y <= |x|, z <= #x");
}

void paths_dfs(const Word& x, const Word& current, std::vector<Word>& stack,
               std::vector<std::vector<Word>>& out) {
    stack.push_back(current);
    if (current.rank() == x.rank()) {
        if (current == x)
            out.push_back(stack);
    } else if (is_below(x, current)) {
        for (const Word& z : down_neighbors(current))
            paths_dfs(x, z, stack, out);
    }
    stack.pop_back();
}

} // namespace

PathCount d_bruteforce(const Word& x, const Word& y) {
    if (y.rank() < x.rank())
        return 0;
    if (y.rank() - x.rank() > kBruteforceMaxSpan)
        throw precondition_error(
            "d_bruteforce: rank span " + std::to_string(y.rank() - x.rank()) +
            " exceeds " + std::to_string(kBruteforceMaxSpan) +
            "; the descendant census is infeasible at this size, use d_closed");
    return d_brute_rec(x, y);
}

std::vector<std::vector<Word>> enumerate_paths(const Word& x, const Word& y, std::uint64_t cap) {
    if (y.rank() < x.rank())
        return {};
    BigInt count = d_bruteforce(x, y);
    if (count > BigInt(static_cast<unsigned long>(cap)))
        throw precondition_error("enumerate_paths: " + count.get_str() + " paths exceed cap " +
                                 std::to_string(cap));
    std::vector<std::vector<Word>> out;
    std::vector<Word> stack;
    paths_dfs(x, y, stack, out);
    return out;
}

BigRat f_eval(const Word& x, std::size_t y, std::size_t z) {
    check_f_domain(x, y, z);
    return f_rec<BigRat>(x, y, z);
}

double f_eval_approx(const Word& x, std::size_t y, std::size_t z) {
    check_f_domain(x, y, z);
    return f_rec<double>(x, y, z);
}

PathCount d_closed(const Word& x, const Word& y) {
    if (y.rank() < x.rank())
        throw precondition_error("d_closed: rank(y) < rank(x)");
    const std::size_t h = common_suffix_len(x, y);
    const auto gs = g_values(y);
    BigRat total = 0;
    for (std::size_t i = 0; i <= x.rank(); ++i) {
        BigRat fi = f_eval(x, i, h);
        if (fi == 0)
            continue;
        BigInt prod = 1;
        for (std::size_t gv : gs)
            prod *= BigInt(static_cast<long>(gv) - static_cast<long>(i));
        total += fi * BigRat(prod);
    }
    if (total.get_den() != 1 || total < 0)
        throw internal_error("d_closed: non-integral or negative value " + rat_str(total) +
                             " for x=" + x.display() + " y=" + y.display());
    return total.get_num();
}

PathCount d_to_empty(const Word& y) {
    BigInt prod = 1;
    for (std::size_t gv : g_values(y))
        prod *= static_cast<unsigned long>(gv);
    return prod;
}

PathCount d_from_twos_fixed(const Word& a, std::size_t k, std::span<const std::size_t> deleted) {
    const std::size_t d = a.two_count();
    if (d < k)
        throw precondition_error("d_from_twos_fixed: d(a) < k");
    if (deleted.size() != d - k)
        throw precondition_error("d_from_twos_fixed: expected " + std::to_string(d - k) +
                                 " deleted indices");
    std::size_t prev = 0;
    for (std::size_t i : deleted) {
        if (i <= prev || i > d)
            throw precondition_error("d_from_twos_fixed: indices must be strictly increasing in [1, d(a)]");
        prev = i;
    }
    BigInt prod = 1;
    for (std::size_t j = 1; j <= deleted.size(); ++j)
        prod *= static_cast<unsigned long>(g_prime(a, deleted[j - 1]) + 2 * j - 2);
    return prod;
}

PathCount d_from_twos(const Word& a, std::size_t k) {
    const std::size_t d = a.two_count();
    if (d < k)
        return 0;
    const std::size_t take = d - k;
    const auto gs = g_values(a);
    BigInt total = 0;
    std::vector<std::size_t> pick(take);
    // all strictly increasing index tuples 1 <= i_1 < ... < i_take <= d
    auto rec = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
        if (pos == take) {
            BigInt prod = 1;
            for (std::size_t j = 1; j <= take; ++j)
                prod *= static_cast<unsigned long>(gs[pick[j - 1] - 1] - 2 * pick[j - 1] + 2 + 2 * j - 2);
            total += prod;
            return;
        }
        for (std::size_t i = next; i + (take - pos) <= d + 1; ++i) {
            pick[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return total;
}

FactorizationCheck factorize_check(const Word& prefix, const Word& suffix) {
    return {d_to_empty(concat(prefix, suffix)), d_to_empty(suffix),
            d_to_empty(concat(prefix, Word::ones(suffix.rank())))};
}

void clear_path_count_caches() {
    {
        std::lock_guard lock(g_brute_mutex);
        g_brute_memo.clear();
    }
    std::lock_guard lock(g_f_mutex);
    g_f_memo.clear();
    g_f_memo_approx.clear();
}

} // namespace yf
