#include "yf/infinite_word.hpp"

#include "yf/errors.hpp"

#include <charconv>

namespace yf {

namespace {

std::size_t parse_count(std::string_view s, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw parse_error(std::string("bad ") + what + ": \"" + std::string(s) + "\"");
    return value;
}

BigInt pow2(std::size_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

} // namespace

InfiniteWordSpec InfiniteWordSpec::finite_twos(Word prefix) {
    InfiniteWordSpec w;
    w.kind_ = Kind::finite_twos;
    w.prefix_ = std::move(prefix);
    return w;
}

InfiniteWordSpec InfiniteWordSpec::constant(std::size_t c) {
    InfiniteWordSpec w;
    w.kind_ = Kind::constant;
    w.c_ = c;
    return w;
}

InfiniteWordSpec InfiniteWordSpec::geometric(std::size_t b0) {
    if (b0 < 1)
        throw precondition_error("geometric rule requires b0 >= 1");
    InfiniteWordSpec w;
    w.kind_ = Kind::geometric;
    w.b0_ = b0;
    return w;
}

InfiniteWordSpec InfiniteWordSpec::explicit_rule(std::vector<std::size_t> betas, TailRule tail,
                                                 std::size_t tail_param) {
    if (tail == TailRule::geometric && tail_param < 1)
        throw precondition_error("geometric tail requires b >= 1");
    InfiniteWordSpec w;
    w.kind_ = Kind::explicit_rule;
    w.betas_ = std::move(betas);
    w.tail_ = tail;
    w.tail_param_ = tail_param;
    return w;
}

InfiniteWordSpec InfiniteWordSpec::parse(std::string_view text) {
    if (text == "ones")
        return finite_twos(Word{});
    if (text.starts_with("finite:"))
        return finite_twos(Word::parse(text.substr(7)));
    if (text.starts_with("const:"))
        return constant(parse_count(text.substr(6), "constant run length"));
    if (text.starts_with("geometric:"))
        return geometric(parse_count(text.substr(10), "geometric base"));
    if (text.starts_with("explicit:")) {
        std::string_view body = text.substr(9);
        const auto semi = body.find(';');
        if (semi == std::string_view::npos)
            throw parse_error("explicit spec needs \";tail=...\": \"" + std::string(text) + "\"");
        std::string_view head = body.substr(0, semi);
        std::string_view tail = body.substr(semi + 1);
        if (!tail.starts_with("tail="))
            throw parse_error("explicit spec needs \";tail=...\": \"" + std::string(text) + "\"");
        tail.remove_prefix(5);
        std::vector<std::size_t> betas;
        while (!head.empty()) {
            const auto comma = head.find(',');
            betas.push_back(parse_count(head.substr(0, comma), "run length"));
            if (comma == std::string_view::npos)
                break;
            head.remove_prefix(comma + 1);
        }
        if (tail.starts_with("const:"))
            return explicit_rule(std::move(betas), TailRule::constant,
                                 parse_count(tail.substr(6), "tail run length"));
        if (tail.starts_with("geometric:"))
            return explicit_rule(std::move(betas), TailRule::geometric,
                                 parse_count(tail.substr(10), "tail base"));
        throw parse_error("unknown tail rule: \"" + std::string(tail) + "\"");
    }
    throw parse_error("unknown infinite word spec: \"" + std::string(text) + "\"");
}

std::string InfiniteWordSpec::to_string() const {
    switch (kind_) {
    case Kind::finite_twos:
        return prefix_.empty() ? "ones" : "finite:" + prefix_.str();
    case Kind::constant:
        return "const:" + std::to_string(c_);
    case Kind::geometric:
        return "geometric:" + std::to_string(b0_);
    case Kind::explicit_rule: {
        std::string s = "explicit:";
        for (std::size_t i = 0; i < betas_.size(); ++i)
            s += (i ? "," : "") + std::to_string(betas_[i]);
        s += ";tail=";
        s += tail_ == TailRule::constant ? "const:" : "geometric:";
        s += std::to_string(tail_param_);
        return s;
    }
    }
    throw internal_error("bad spec kind");
}

std::optional<std::size_t> InfiniteWordSpec::two_count() const {
    if (kind_ == Kind::finite_twos)
        return prefix_.two_count();
    return std::nullopt;
}

BigInt InfiniteWordSpec::beta(std::size_t k) const {
    switch (kind_) {
    case Kind::finite_twos: {
        const auto rd = RunDecomposition::of(prefix_);
        if (k >= rd.betas.size())
            throw precondition_error("beta: index beyond the last 2 of a finite_twos word");
        return BigInt(static_cast<unsigned long>(rd.betas[k]));
    }
    case Kind::constant:
        return BigInt(static_cast<unsigned long>(c_));
    case Kind::geometric:
        return BigInt(static_cast<unsigned long>(b0_)) * pow2(k);
    case Kind::explicit_rule:
        if (k < betas_.size())
            return BigInt(static_cast<unsigned long>(betas_[k]));
        if (tail_ == TailRule::constant)
            return BigInt(static_cast<unsigned long>(tail_param_));
        return BigInt(static_cast<unsigned long>(tail_param_)) * pow2(k - betas_.size());
    }
    throw internal_error("bad spec kind");
}

BigInt InfiniteWordSpec::g(std::size_t k) const {
    if (k < 1)
        throw precondition_error("g: index must be >= 1");
    if (const auto d = two_count(); d && k > *d)
        throw precondition_error("g: index beyond d(w)");
    BigInt sum = 0;
    for (std::size_t t = 0; t < k; ++t)
        sum += beta(t);
    return sum + 2 * static_cast<unsigned long>(k) - 1;
}

std::vector<BigInt> InfiniteWordSpec::g_prefix(std::size_t J) const {
    if (const auto d = two_count(); d && J > *d)
        throw precondition_error("g_prefix: J beyond d(w)");
    std::vector<BigInt> out;
    out.reserve(J);
    BigInt sum = 0;
    for (std::size_t k = 1; k <= J; ++k) {
        sum += beta(k - 1);
        out.push_back(sum + 2 * static_cast<unsigned long>(k) - 1);
    }
    return out;
}

Word InfiniteWordSpec::suffix_word(std::size_t m) const {
    std::string s; // right-to-left storage
    s.reserve(m);
    if (kind_ == Kind::finite_twos) {
        const std::string& p = prefix_.storage();
        s = p.substr(0, std::min(m, p.size()));
        s.append(m - s.size(), '1');
        return Word::from_storage(std::move(s));
    }
    for (std::size_t k = 0; s.size() < m; ++k) {
        const BigInt b = beta(k);
        const std::size_t room = m - s.size();
        if (b >= static_cast<unsigned long>(room)) {
            s.append(room, '1');
            break;
        }
        s.append(b.get_ui(), '1');
        s.push_back('2');
    }
    return Word::from_storage(std::move(s));
}

bool InfiniteWordSpec::inv_g_diverges() const {
    switch (kind_) {
    case Kind::finite_twos:
    case Kind::geometric:
        return false;
    case Kind::constant:
        return true;
    case Kind::explicit_rule:
        return tail_ == TailRule::constant;
    }
    throw internal_error("bad spec kind");
}

std::optional<BigRat> InfiniteWordSpec::tail_inv_g_bound(std::size_t J) const {
    switch (kind_) {
    case Kind::finite_twos: {
        const std::size_t d = prefix_.two_count();
        BigRat sum = 0;
        const auto gs = g_values(prefix_);
        for (std::size_t j = J + 1; j <= d; ++j)
            sum += make_rat(1, BigInt(static_cast<unsigned long>(gs[j - 1])));
        return sum;
    }
    case Kind::constant:
        return std::nullopt;
    case Kind::geometric:
        // g(w,j) >= b0 * 2^(j-1), so the tail is at most 2^(1-J) / b0.
        return make_rat(2, BigInt(static_cast<unsigned long>(b0_)) * pow2(J));
    case Kind::explicit_rule: {
        if (tail_ == TailRule::constant)
            return std::nullopt;
        const std::size_t L = betas_.size();
        BigRat sum = 0;
        for (std::size_t j = J + 1; j <= L; ++j)
            sum += make_rat(1, g(j));
        // for j > max(J, L): g(w,j) >= beta_{j-1} = b * 2^(j-1-L)
        const std::size_t Jp = std::max(J, L);
        sum += make_rat(pow2(L + 1), BigInt(static_cast<unsigned long>(tail_param_)) * pow2(Jp));
        return sum;
    }
    }
    throw internal_error("bad spec kind");
}

Positivity InfiniteWordSpec::positivity() const {
    switch (kind_) {
    case Kind::finite_twos:
        return Positivity::yes; // finite product of positive factors
    case Kind::geometric:
        return Positivity::yes; // sum 1/g is dominated by a geometric series
    case Kind::constant:
        return Positivity::no; // sum 1/g diverges, so pi(w) = 0
    case Kind::explicit_rule:
        return tail_ == TailRule::constant ? Positivity::no : Positivity::yes;
    }
    return Positivity::unknown;
}

} // namespace yf
