#include "yf/graph.hpp"

#include <algorithm>

namespace yf {

namespace {

// Storage index just past the leftmost 1, i.e. the count of digits at
// positions <= position of the leftmost 1; 0 when there is no 1.
std::size_t leftmost_one_end(const Word& w) {
    const std::string& s = w.storage();
    for (std::size_t i = s.size(); i-- > 0;)
        if (s[i] == '1')
            return i + 1;
    return 0;
}

} // namespace

std::vector<Word> up_neighbors(const Word& x) {
    const std::string& s = x.storage();
    const std::size_t p = leftmost_one_end(x);
    std::vector<Word> out;
    out.reserve(s.size() - p + 2);
    if (p > 0) {
        std::string t = s;
        t[p - 1] = '2';
        out.push_back(Word::from_storage(std::move(t)));
    }
    // Insertion slots: directly left of the leftmost 1, between any two of
    // the leading 2s, and at the far left end.
    for (std::size_t j = p; j <= s.size(); ++j) {
        std::string t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(j), '1');
        out.push_back(Word::from_storage(std::move(t)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> down_neighbors(const Word& y) {
    const std::string& s = y.storage();
    const std::size_t p = leftmost_one_end(y);
    std::vector<Word> out;
    if (p > 0) {
        std::string t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(p - 1));
        out.push_back(Word::from_storage(std::move(t)));
    }
    for (std::size_t j = p; j < s.size(); ++j) {
        if (s[j] != '2')
            continue;
        std::string t = s;
        t[j] = '1';
        out.push_back(Word::from_storage(std::move(t)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> enumerate_level(std::size_t n) {
    // levels[k] lists rank-k words by rightmost digit: first '1' + levels[k-1],
    // then '2' + levels[k-2]; this is exactly the documented lexicographic order.
    std::vector<std::vector<Word>> levels(n + 1);
    levels[0] = {Word{}};
    if (n >= 1)
        levels[1] = {Word::ones(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        auto& out = levels[k];
        out.reserve(levels[k - 1].size() + levels[k - 2].size());
        for (const Word& u : levels[k - 1])
            out.push_back(Word::from_storage("1" + u.storage()));
        for (const Word& u : levels[k - 2])
            out.push_back(Word::from_storage("2" + u.storage()));
    }
    return std::move(levels[n]);
}

BigInt fibonacci(std::size_t n) {
    BigInt a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

bool is_below(const Word& x, const Word& y) {
    const std::size_t h = common_suffix_len(x, y);
    const std::size_t x_rest = x.length() - h;
    std::size_t y_rest_twos = 0;
    const std::string& s = y.storage();
    for (std::size_t i = h; i < s.size(); ++i)
        if (s[i] == '2')
            ++y_rest_twos;
    return x_rest <= y_rest_twos;
}

} // namespace yf
