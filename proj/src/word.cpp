#include "yf/word.hpp"

#include <algorithm>
#include <numeric>

namespace yf {

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "e")
        return Word{};
    Word w;
    w.digits_.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        if (*it != '1' && *it != '2')
            throw parse_error("word may contain only '1' and '2': \"" + std::string(text) + "\"");
        w.digits_.push_back(*it);
    }
    return w;
}

Word Word::ones(std::size_t n) {
    Word w;
    w.digits_.assign(n, '1');
    return w;
}

Word Word::twos(std::size_t n) {
    Word w;
    w.digits_.assign(n, '2');
    return w;
}

Word Word::from_storage(std::string s) {
    for (char c : s)
        if (c != '1' && c != '2')
            throw internal_error("bad word storage");
    Word w;
    w.digits_ = std::move(s);
    return w;
}

std::size_t Word::rank() const {
    std::size_t r = 0;
    for (char c : digits_)
        r += static_cast<std::size_t>(c - '0');
    return r;
}

std::size_t Word::two_count() const {
    return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), '2'));
}

std::size_t Word::one_count() const {
    return digits_.size() - two_count();
}

std::string Word::str() const {
    return std::string(digits_.rbegin(), digits_.rend());
}

std::string Word::display() const {
    return digits_.empty() ? "e" : str();
}

Word concat(const Word& left, const Word& right) {
    return Word::from_storage(right.storage() + left.storage());
}

std::size_t common_suffix_len(const Word& x, const Word& y) {
    const std::string& a = x.storage();
    const std::string& b = y.storage();
    std::size_t h = 0;
    while (h < a.size() && h < b.size() && a[h] == b[h])
        ++h;
    return h;
}

std::size_t common_suffix_rank(const Word& x, const Word& y) {
    const std::size_t h = common_suffix_len(x, y);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h; ++i)
        r += static_cast<std::size_t>(x.storage()[i] - '0');
    return r;
}

RunDecomposition RunDecomposition::of(const Word& x) {
    RunDecomposition rd;
    std::size_t run = 0;
    for (char c : x.storage()) {
        if (c == '1') {
            ++run;
        } else {
            rd.betas.push_back(run);
            run = 0;
        }
    }
    rd.leading_ones = run;
    return rd;
}

Word RunDecomposition::reassemble() const {
    std::string s;
    for (std::size_t b : betas) {
        s.append(b, '1');
        s.push_back('2');
    }
    s.append(leading_ones, '1');
    return Word::from_storage(std::move(s));
}

std::size_t g(const Word& x, std::size_t k) {
    if (k < 1 || k > x.two_count())
        throw precondition_error("g: index out of range");
    // g(x,k) = (ones right of the k-th 2) + 2k - 1
    std::size_t seen_twos = 0, seen_ones = 0;
    for (char c : x.storage()) {
        if (c == '2') {
            if (++seen_twos == k)
                return seen_ones + 2 * k - 1;
        } else {
            ++seen_ones;
        }
    }
    throw internal_error("g: unreachable");
}

std::size_t g_prime(const Word& x, std::size_t k) {
    return g(x, k) - 2 * k + 2;
}

std::vector<std::size_t> g_values(const Word& x) {
    std::vector<std::size_t> out;
    out.reserve(x.two_count());
    std::size_t seen_ones = 0;
    for (char c : x.storage()) {
        if (c == '2')
            out.push_back(seen_ones + 2 * (out.size() + 1) - 1);
        else
            ++seen_ones;
    }
    return out;
}

Word remove_twos(const Word& x, const std::vector<std::size_t>& indices) {
    const std::size_t d = x.two_count();
    std::size_t prev = 0;
    for (std::size_t i : indices) {
        if (i <= prev || i > d)
            throw precondition_error("remove_twos: indices must be strictly increasing and in [1, d(x)]");
        prev = i;
    }
    std::string s;
    s.reserve(x.length());
    std::size_t seen_twos = 0, next = 0;
    for (char c : x.storage()) {
        if (c == '2') {
            ++seen_twos;
            if (next < indices.size() && indices[next] == seen_twos) {
                ++next;
                continue;
            }
        }
        s.push_back(c);
    }
    return Word::from_storage(std::move(s));
}

} // namespace yf
